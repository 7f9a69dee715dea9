#include <doctest.h>

#include "subseq/errors.hpp"
#include "subseq/words.hpp"

using namespace subseq;

namespace {
const Alphabet ab{2}, abc{3};
Word w2(const char* s) { return parse_letters(s, ab); }
Word w3(const char* s) { return parse_letters(s, abc); }
}  // namespace

TEST_CASE("subsequence test") {
  CHECK(is_subsequence(Word{}, w3("bcaaccabcabb")));
  CHECK(is_subsequence(w3("abb"), w3("bcaaccabcabb")));
  CHECK_FALSE(is_subsequence(w3("abba"), w3("bcaaccabcabb")));
  CHECK_FALSE(is_subsequence(w2("a"), Word{}));
}

TEST_CASE("arch factorization") {
  auto f = arch_factorization(w3("bcaaccabcabb"), abc);
  REQUIRE(f.arches.size() == 3);
  CHECK(f.arches[0] == w3("bca"));
  CHECK(f.arches[1] == w3("accab"));
  CHECK(f.arches[2] == w3("cab"));
  CHECK(f.rest == w3("b"));
  CHECK(f.modus == w3("abb"));
  CHECK(f.iota == 3);

  auto e = arch_factorization(Word{}, ab);
  CHECK(e.arches.empty());
  CHECK(e.rest.empty());
  CHECK(e.iota == 0);

  auto g = arch_factorization(w2("abab"), ab);
  CHECK(g.arches == std::vector<Word>{w2("ab"), w2("ab")});
  CHECK(g.modus == w2("bb"));
}

TEST_CASE("universality index") {
  CHECK(universality_index(w3("bcaaccabcabb"), abc) == 3);
  CHECK(universality_index(w2("a"), ab) == 0);
  CHECK(universality_index(w2("abab"), ab) == 2);
  CHECK(universality_index(Word(5, 1), Alphabet{1}) == 5);
}

TEST_CASE("shortest absent subsequence") {
  CHECK(shortest_absent_subsequence(w3("bcaaccabcabb"), abc) == w3("abba"));
  CHECK(shortest_absent_subsequence(Word{}, ab) == w2("a"));
  // modus b followed by the smallest letter missing from the empty rest
  CHECK(shortest_absent_subsequence(w2("ab"), ab) == w2("ba"));
}

TEST_CASE("constrained absent subsequence length") {
  CHECK(sas_ab_length(w2("a"), kEpsilon, 2, ab) == SasLength::of(1));
  CHECK(sas_ab_length(w2("a"), 1, 2, ab) == SasLength::of(2));
  CHECK(sas_ab_length(w2("abab"), 1, 1, ab) == SasLength::of(3));
  CHECK(sas_ab_length(w2("b"), 1, 2, ab).is_infinite());
}

TEST_CASE("SasLength arithmetic") {
  auto inf = SasLength::infinite();
  CHECK((inf + SasLength::of(3)).is_infinite());
  CHECK((SasLength::of(2) + SasLength::of(3)) == SasLength::of(5));
  CHECK(SasLength::of(7) < inf);
  CHECK(min(inf, SasLength::of(4)) == SasLength::of(4));
}

TEST_CASE("letter parsing") {
  CHECK(parse_int_letters("1,2,1", ab) == w2("aba"));
  CHECK_THROWS_AS(parse_letters("abd", abc), InputError);
  CHECK_THROWS_AS(parse_int_letters("1,,2", ab), InputError);
  CHECK_THROWS_AS(check_word(Word{3}, ab), InputError);
  CHECK(format_word(w3("cab"), abc) == "cab");
}
