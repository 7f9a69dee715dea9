#include <doctest.h>

#include "subseq/automata.hpp"
#include "subseq/errors.hpp"

using namespace subseq;

namespace {
const Alphabet ab{2};
Word w2(const char* s) { return parse_letters(s, ab); }

Nfa ab_star() {
  Nfa a(ab, 2, 0);
  a.set_final(0);
  a.add_transition(0, 1, 1);
  a.add_transition(1, 2, 0);
  return a;
}
}  // namespace

TEST_CASE("supersequence dfa") {
  Dfa d = supersequence_dfa(w2("ab"), ab);
  CHECK(d.state_count() == 3);
  for (const char* yes : {"ab", "aab", "bab"}) CHECK(d.accepts(w2(yes)));
  for (const char* no : {"ba", "b", ""}) CHECK_FALSE(d.accepts(w2(no)));

  Dfa e = supersequence_dfa(Word{}, ab);
  CHECK(e.state_count() == 1);
  CHECK(e.accepts(w2("")));
  CHECK(e.accepts(w2("bba")));

  CHECK(supersequence_dfa(parse_letters("abc", Alphabet{3}), Alphabet{3}).state_count() == 4);
}

TEST_CASE("k-universal dfa") {
  Dfa d = k_universal_dfa(ab, 1);
  CHECK(d.state_count() == 4);
  for (const char* yes : {"ab", "ba", "aab"}) CHECK(d.accepts(w2(yes)));
  for (const char* no : {"a", "bb"}) CHECK_FALSE(d.accepts(w2(no)));
  CHECK(k_universal_dfa(Alphabet{3}, 2).state_count() == 15);

  Dfa u = k_universal_dfa(Alphabet{1}, 3);
  CHECK(u.state_count() == 4);
  for (std::size_t m = 0; m < 7; ++m) CHECK(u.accepts(Word(m, 1)) == (m >= 3));

  CHECK_THROWS_AS(k_universal_dfa(Alphabet{20}, BigInt(1) << 40), ResourceError);
}

TEST_CASE("complement") {
  Dfa c = complement(supersequence_dfa(w2("ab"), ab));
  CHECK(c.accepts(w2("ba")));
  CHECK_FALSE(c.accepts(w2("ab")));
  Dfa d = k_universal_dfa(ab, 2);
  CHECK(complement(complement(d)) == d);
  CHECK(complement(k_universal_dfa(ab, 1)).accepts(Word{}));
}

TEST_CASE("product and emptiness") {
  Nfa p = product_intersect(ab_star(), supersequence_dfa(w2("aa"), ab));
  CHECK(p.accepts(w2("abab")));
  CHECK(p.accepts(w2("ababab")));
  CHECK_FALSE(p.accepts(w2("ab")));

  Dfa all(ab, 1, 0);
  all.set_final(0);
  all.set_transition(0, 1, 0);
  all.set_transition(0, 2, 0);
  Nfa q = product_intersect(ab_star(), all);
  CHECK(q.state_count() == 2);
  for (const char* w : {"", "ab", "abab", "a", "ba"}) CHECK(q.accepts(w2(w)) == ab_star().accepts(w2(w)));

  Nfa none(ab, 2, 0);
  none.add_transition(0, 1, 1);
  CHECK(is_empty(none));
  CHECK_FALSE(is_empty(to_nfa(supersequence_dfa(w2("ab"), ab))));
  CHECK_FALSE(is_empty(product_intersect(ab_star(), complement(supersequence_dfa(w2("ab"), ab)))));
  CHECK_FALSE(is_empty(product_intersect(ab_star(), supersequence_dfa(w2("bb"), ab))));
  CHECK(is_empty(product_intersect(to_nfa(supersequence_dfa(w2("a"), ab)), complement(supersequence_dfa(w2("a"), ab)))));
}

TEST_CASE("trim keeps the language") {
  Nfa a(ab, 4, 0);
  a.set_final(1);
  a.add_transition(0, 1, 1);
  a.add_transition(0, 2, 2);
  a.add_transition(3, 1, 1);
  Nfa t = trim(a);
  CHECK(t.state_count() == 2);
  CHECK(t.accepts(w2("a")));
  CHECK_FALSE(t.accepts(w2("b")));
  CHECK(trim(Nfa(ab, 3, 0)).state_count() == 1);
}

TEST_CASE("regular decisions") {
  const Nfa a = ab_star();
  CHECK(reg_decide(Problem::exists_subsequence, a, w2("aa")));
  CHECK_FALSE(reg_decide(Problem::forall_subsequence, a, w2("a")));
  CHECK(reg_decide(Problem::infinity_universal, a, std::monostate{}));
  CHECK(reg_decide(Problem::exists_k_universal, a, BigInt(1000)));
  CHECK_FALSE(reg_decide(Problem::forall_k_universal, a, BigInt(1)));

  Nfa plus(ab, 3, 0);  // (ab)+
  plus.add_transition(0, 1, 1);
  plus.add_transition(1, 2, 2);
  plus.add_transition(2, 1, 1);
  plus.set_final(2);
  CHECK(reg_decide(Problem::forall_k_universal, plus, BigInt(1)));
  CHECK_FALSE(reg_decide(Problem::forall_k_universal, plus, BigInt(2)));
  CHECK(reg_decide(Problem::forall_subsequence, plus, w2("ab")));

  Nfa finite = to_nfa(supersequence_dfa(w2("ab"), ab));
  CHECK(reg_decide(Problem::infinity_universal, finite, std::monostate{}));
  Nfa single(ab, 3, 0);  // {ab}
  single.add_transition(0, 1, 1);
  single.add_transition(1, 2, 2);
  single.set_final(2);
  CHECK_FALSE(reg_decide(Problem::infinity_universal, single, std::monostate{}));
  CHECK(reg_decide(Problem::exists_k_universal, single, BigInt(1)));
  CHECK_FALSE(reg_decide(Problem::exists_k_universal, single, BigInt(2)));
  CHECK_THROWS_AS(reg_decide(Problem::exists_k_universal, single, w2("a")), InputError);
}

TEST_CASE("universal cycle test ignores dead states") {
  Nfa a(ab, 4, 0);
  a.add_transition(0, 1, 1);
  a.set_final(1);
  a.add_transition(0, 2, 2);
  a.add_transition(2, 1, 3);
  a.add_transition(3, 2, 2);  // the ab cycle on 2, 3 cannot reach a final state
  CHECK_FALSE(has_universal_cycle(a));
  a.set_final(3);
  CHECK(has_universal_cycle(a));
}
