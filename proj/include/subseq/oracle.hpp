#pragma once

// Brute-force referees: bounded enumeration over any machine kind and
// exhaustive versions of the word-level and language-level quantities.

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "subseq/automata.hpp"
#include "subseq/grammar.hpp"
#include "subseq/tfa.hpp"

namespace subseq {

using LanguageHandle = std::variant<Nfa, Dfa, CnfGrammar, Tfa>;

inline constexpr std::size_t kOracleBudget = 10'000'000;

Alphabet alphabet_of(const LanguageHandle& h);
bool member(const LanguageHandle& h, WordView w);
/// {w in L : |w| <= max_len} in length-lexicographic order.
std::vector<Word> enumerate(const LanguageHandle& h, std::size_t max_len, std::size_t budget = kOracleBudget);

/// Embedding test by exhaustive dynamic programming over prefix pairs.
bool embeds(WordView v, WordView w);

/// Largest universality index seen among words up to max_len; only a lower
/// bound of the existential index of the language.
struct IotaLowerBound {
  std::size_t value = 0;
  std::size_t max_len = 0;
};

IotaLowerBound brute_iota_exists(const LanguageHandle& h, std::size_t max_len, std::size_t budget = kOracleBudget);

/// Smallest universality index among words up to max_len. Throws InputError
/// when no word of that length is in the language.
std::size_t brute_iota_forall(const LanguageHandle& h, std::size_t max_len, std::size_t budget = kOracleBudget);

/// Length-lexicographically least absent subsequence, optionally starting with
/// `first` (kEpsilon for no constraint) and ending with `last`.
Word brute_sas(WordView w, std::optional<std::pair<Letter, Letter>> ends, Alphabet sigma,
               std::size_t budget = kOracleBudget);

bool brute_exists_supersequence(const LanguageHandle& h, WordView w, std::size_t max_len,
                                std::size_t budget = kOracleBudget);
bool brute_forall_supersequence(const LanguageHandle& h, WordView w, std::size_t max_len,
                                std::size_t budget = kOracleBudget);

/// For each nonterminal, the words having a derivation tree of height at most
/// `height` (a tree made of one terminal production has height 1).
std::vector<std::vector<Word>> derivable_within_height(const CnfGrammar& g, std::size_t height,
                                                       std::size_t budget = kOracleBudget);

/// Whether x derives left . x . right, decided by CYK on a grammar whose
/// derivations carry a marker down to the occurrence of x.
bool is_derivable_context(const CnfGrammar& g, Nonterminal x, WordView left, WordView right);

}  // namespace subseq
