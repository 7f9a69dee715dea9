#include <doctest.h>

#include "corpus.hpp"
#include "subseq/errors.hpp"
#include "subseq/grammar.hpp"

using namespace subseq;

namespace {
const Alphabet ab{2};
Word w2(const char* s) { return parse_letters(s, ab); }

std::vector<Word> words(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.push_back(w2(s));
  return out;
}

Dfa everything(Alphabet sigma) {
  Dfa d(sigma, 1, 0);
  d.set_final(0);
  for (Letter a = 1; a <= sigma.size; ++a) d.set_transition(0, a, 0);
  return d;
}
}  // namespace

TEST_CASE("CNF conversion of a^n b^n") {
  auto g = to_cnf(corpus::load_as<Cfg>("anbn.cfg"));
  REQUIRE(g);
  g->validate();
  CHECK(enumerate_language(*g, 8) == words({"ab", "aabb", "aaabbb", "aaaabbbb"}));
  for (const char* w : {"ab", "aaabbb"}) CHECK(cyk_member(*g, w2(w)));
  for (const char* w : {"aab", "ba", "abab"}) CHECK_FALSE(cyk_member(*g, w2(w)));
  CHECK_FALSE(cyk_member(*g, Word{}));
}

TEST_CASE("CNF conversion preserves already-normal grammars") {
  for (const char* name : {"anbn_cnf.cfg", "g1.cfg", "aplus_bplus.cfg", "two_blocks.cfg"}) {
    const Cfg g = corpus::load_as<Cfg>(name);
    auto c = to_cnf(g);
    REQUIRE(c);
    auto again = to_cnf(c->to_cfg());
    REQUIRE(again);
    CHECK(enumerate_language(*again, 6) == enumerate_language(*c, 6));
    for (const Word& w : enumerate_language(*c, 6)) CHECK(cfg_member(g, w));
  }
}

TEST_CASE("CNF conversion handles unit chains and long bodies") {
  Cfg g(Alphabet{3});
  auto s = g.nonterminal("S"), x = g.nonterminal("X"), y = g.nonterminal("Y"), dead = g.nonterminal("Dead");
  g.set_start(s);
  g.add_production(s, {Symbol::variable(x)});
  g.add_production(x, {Symbol::variable(y)});
  g.add_production(y, {Symbol::letter(1), Symbol::letter(2), Symbol::letter(3), Symbol::variable(y)});
  g.add_production(y, {Symbol::letter(3)});
  g.add_production(s, {Symbol::variable(dead)});
  g.add_production(dead, {Symbol::variable(dead), Symbol::letter(1)});
  auto c = to_cnf(g);
  REQUIRE(c);
  c->validate();
  const Alphabet sigma{3};
  CHECK(enumerate_language(*c, 7) ==
        std::vector<Word>{parse_letters("c", sigma), parse_letters("abcc", sigma), parse_letters("abcabcc", sigma)});
  for (const auto& name : c->names) CHECK(name != "Dead");
}

TEST_CASE("empty languages") {
  CHECK_FALSE(to_cnf(corpus::load_as<Cfg>("empty.cfg")));
  CHECK(is_empty(corpus::load_as<Cfg>("empty.cfg")));
  Cfg loop(ab);
  auto s = loop.nonterminal("S");
  loop.add_production(s, {Symbol::variable(s), Symbol::variable(s)});
  CHECK(is_empty(loop));
  loop.add_production(s, {Symbol::letter(1)});
  CHECK_FALSE(is_empty(loop));
}

TEST_CASE("unary grammars are rejected") {
  Cfg g(Alphabet{1});
  g.add_production(g.nonterminal("S"), {Symbol::letter(1)});
  CHECK_THROWS_AS(to_cnf(g), InputError);
}

TEST_CASE("empty right-hand sides are rejected") {
  Cfg g(ab);
  CHECK_THROWS_AS(g.add_production(g.nonterminal("S"), {}), InputError);
}

TEST_CASE("intersection with a DFA") {
  const CnfGrammar pair = corpus::load_cnf("ab_or_ba.cfg");
  auto only_ab = to_cnf(intersect_dfa(pair, supersequence_dfa(w2("ab"), ab)));
  REQUIRE(only_ab);
  CHECK(enumerate_language(*only_ab, 4) == words({"ab"}));

  for (const char* name : {"g1.cfg", "dyck.cfg", "palindromes.cfg"}) {
    const CnfGrammar g = corpus::load_cnf(name);
    auto same = to_cnf(intersect_dfa(g, everything(ab)));
    REQUIRE(same);
    CHECK(enumerate_language(*same, 6) == enumerate_language(g, 6));
  }

  // no a^n b^n word is 2-universal
  CHECK_FALSE(to_cnf(intersect_dfa(corpus::load_cnf("anbn.cfg"), k_universal_dfa(ab, 2))));

  CHECK_THROWS_AS(intersect_dfa(pair, everything(Alphabet{3})), InputError);
}

TEST_CASE("bounded enumeration") {
  CHECK(enumerate_language(corpus::load_cnf("anbn.cfg"), 4) == words({"ab", "aabb"}));
  CHECK(enumerate_language(corpus::load_cnf("ab_or_ba.cfg"), 2) == words({"ab", "ba"}));
  CHECK(enumerate_language(corpus::load_cnf("g1.cfg"), 5) == words({"a", "aba", "ababa"}));
  CHECK_THROWS_AS(enumerate_language(corpus::load_cnf("dyck.cfg"), 30, 1000), ResourceError);
}

TEST_CASE("general membership agrees with CYK") {
  for (const std::string& name : corpus::kGrammars) {
    const Cfg g = corpus::load_as<Cfg>(name);
    const CnfGrammar c = corpus::load_cnf(name);
    std::vector<Word> layer{{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        for (Letter a = 1; a <= c.sigma.size; ++a) {
          Word u = w;
          u.push_back(a);
          CHECK(cfg_member(g, u) == cyk_member(c, u));
          next.push_back(u);
        }
      }
      layer = std::move(next);
    }
  }
}

TEST_CASE("shortest words") {
  const CnfGrammar g = corpus::load_cnf("anbn.cfg");
  auto sw = shortest_words(g);
  REQUIRE(sw.size() == g.nonterminal_count());
  CHECK(sw[g.start] == w2("ab"));
  const CnfGrammar p = corpus::load_cnf("palindromes.cfg");
  CHECK(shortest_words(p)[p.start] == w2("aa"));
}
