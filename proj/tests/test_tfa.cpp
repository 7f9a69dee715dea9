#include <doctest.h>

#include "corpus.hpp"
#include "subseq/errors.hpp"
#include "subseq/tfa.hpp"

using namespace subseq;

namespace {
const Alphabet abcd{4}, ab{2};
Word w4(const char* s) { return parse_letters(s, abcd); }
Word w2(const char* s) { return parse_letters(s, ab); }

std::vector<Word> all_words(Alphabet sigma, std::size_t max_len) {
  std::vector<Word> out{{}};
  for (std::size_t begin = 0, len = 0; len < max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter a = 1; a <= sigma.size; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(w);
      }
    }
    begin = end;
  }
  return out;
}
}  // namespace

TEST_CASE("translucent steps") {
  const Tfa fig = corpus::load_as<Tfa>("shuffle.tfa");
  auto s = step(fig, {0, w4("acbd")});
  REQUIRE(s);
  CHECK(*s == TfaConfiguration{1, w4("cbd")});
  auto t = step(fig, {1, w4("bd")});
  REQUIRE(t);
  CHECK(*t == TfaConfiguration{3, w4("b")});
  CHECK_FALSE(step(fig, {2, Word{}}));
  CHECK_FALSE(step(fig, {3, w4("abcd")}));
}

TEST_CASE("translucent acceptance") {
  const Tfa fig = corpus::load_as<Tfa>("shuffle.tfa");
  CHECK(accepts(fig, w4("acbd")));
  CHECK(accepts(fig, Word{}));
  CHECK_FALSE(accepts(fig, w4("adbc")));
  // a is read first even though c precedes it
  CHECK(accepts(fig, w4("ca")));

  const Tfa tb = corpus::load_as<Tfa>("translucent_b.tfa");
  CHECK(accepts(tb, w2("aab")));
  CHECK(accepts(tb, w2("b")));
  CHECK_FALSE(accepts(tb, w2("aa")));
}

TEST_CASE("enumeration of accepted words") {
  const Tfa fig = corpus::load_as<Tfa>("shuffle.tfa");
  CHECK(enumerate_accepted(fig, 2) == std::vector<Word>{Word{}, w4("ac"), w4("bd"), w4("ca"), w4("db")});
  Tfa none(ab, 2, 0);
  none.set_transition(0, 1, 1);
  CHECK(enumerate_accepted(none, 5).empty());
  const Tfa tb = corpus::load_as<Tfa>("translucent_b.tfa");
  for (const Word& w : enumerate_accepted(tb, 5)) CHECK(accepts(tb, w));
  CHECK(enumerate_accepted(tb, 2) == std::vector<Word>{w2("b"), w2("ab"), w2("ba"), w2("bb")});
}

TEST_CASE("partial transitions") {
  Tfa t(ab, 2, 0);
  t.set_transition(0, 1, 1);
  t.set_transition(0, 1, 1);
  CHECK_THROWS_AS(t.set_transition(0, 1, 0), InputError);
  CHECK(t.next(0, 2) == kNoState);
}

TEST_CASE("supersequence search") {
  const Tfa fig = corpus::load_as<Tfa>("shuffle.tfa");
  auto s = exists_supersequence_tfa(fig, w4("ab"));
  CHECK(s.found);
  REQUIRE(s.witness);
  CHECK(s.witness->size() == 4);
  CHECK(accepts(fig, *s.witness));
  CHECK(is_subsequence(w4("ab"), *s.witness));
  CHECK(s.length_bound == 12);

  CHECK(exists_supersequence_tfa(fig, Word{}).witness == Word{});
  CHECK(exists_supersequence_tfa(fig, w4("ad")).found);

  Tfa a_only(ab, 1, 0);  // b is never readable
  a_only.set_final(0);
  a_only.set_transition(0, 1, 0);
  CHECK(exists_supersequence_tfa(a_only, w2("aa")).found);
  CHECK_FALSE(exists_supersequence_tfa(a_only, w2("ab")).found);

  Tfa none(ab, 1, 0);
  none.set_transition(0, 1, 0);
  CHECK_FALSE(exists_supersequence_tfa(none, Word{}).found);
  CHECK_THROWS_AS(exists_supersequence_tfa(corpus::load_as<Tfa>("translucent_b.tfa"), w2("ababab"), 3),
                  ResourceError);
}

TEST_CASE("pushdown simulation of binary machines") {
  for (const char* name : {"translucent_b.tfa", "swap.tfa", "total_parity.tfa"}) {
    const Tfa t = corpus::load_as<Tfa>(name);
    const UnaryPda p = binary_tfa_to_pda(t);
    CHECK(p.state_count == t.state_count() + 1);
    for (const Word& w : all_words(ab, 6)) CHECK(pda_accepts(p, w) == accepts(t, w));
  }
  Tfa none(ab, 2, 0);
  none.set_transition(0, 1, 1);
  none.set_transition(1, 2, 0);
  const UnaryPda p = binary_tfa_to_pda(none);
  for (const Word& w : all_words(ab, 6)) CHECK_FALSE(pda_accepts(p, w));
  CHECK_THROWS_AS(binary_tfa_to_pda(corpus::load_as<Tfa>("shuffle.tfa")), InputError);
}

TEST_CASE("pushdown stack stays unary") {
  const UnaryPda p = binary_tfa_to_pda(corpus::load_as<Tfa>("swap.tfa"));
  PdaRunStats stats;
  CHECK(pda_accepts(p, w2("aaabbb"), &stats));
  CHECK(stats.max_height == 3);

  UnaryPda mixed{ab, 1, 0, 0, {{0, kBottom, kEpsilon, 0, {1, kBottom}}, {0, 1, kEpsilon, 0, {2, 1}}}};
  CHECK_THROWS_AS(pda_accepts(mixed, w2("a")), InvariantError);
}

TEST_CASE("Hamiltonian cycle gadget") {
  const HcpInstance k3 = hcp_gadget(corpus::load_as<Graph>("k3.graph"));
  CHECK(k3.tfa.state_count() == 38);
  CHECK(k3.tfa.alphabet() == Alphabet{5});
  CHECK(k3.query.size() == 3);
  CHECK(exists_supersequence_tfa(k3.tfa, k3.query).found);
  const HcpInstance path = hcp_gadget(corpus::load_as<Graph>("path3.graph"));
  CHECK_FALSE(exists_supersequence_tfa(path.tfa, path.query).found);

  CHECK_THROWS_AS(hcp_gadget(Graph{1, {}}), InputError);
  CHECK_THROWS_AS(hcp_gadget(Graph{3, {{1, 1}}}), InputError);
  CHECK_THROWS_AS(hcp_gadget(Graph{3, {{1, 4}}}), InputError);
}
