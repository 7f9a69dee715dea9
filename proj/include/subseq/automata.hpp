#pragma once

// Deterministic and nondeterministic finite automata, the supersequence and
// k-universality constructions, and the decision procedures for the five
// subsequence problems on regular inputs.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <variant>
#include <vector>

#include "subseq/words.hpp"

namespace subseq {

using State = std::uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

/// Total DFA. States are 0..state_count-1.
class Dfa {
 public:
  Dfa() = default;
  /// Every transition starts unset; call validate() after filling them in.
  Dfa(Alphabet sigma, std::size_t state_count, State start);

  Alphabet alphabet() const { return sigma_; }
  std::size_t state_count() const { return final_.size(); }
  State start() const { return start_; }
  bool is_final(State q) const { return final_.at(q); }
  State next(State q, Letter a) const { return delta_[index(q, a)]; }

  void set_start(State q);
  void set_final(State q, bool value = true);
  void set_transition(State from, Letter a, State to);

  /// Throws InputError if some transition is missing or out of range.
  void validate() const;
  bool accepts(WordView w) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t index(State q, Letter a) const { return std::size_t{q} * sigma_.size + (a - 1); }

  Alphabet sigma_;
  State start_ = 0;
  std::vector<bool> final_;
  std::vector<State> delta_;
};

class Nfa {
 public:
  Nfa() = default;
  Nfa(Alphabet sigma, std::size_t state_count, State start);

  Alphabet alphabet() const { return sigma_; }
  std::size_t state_count() const { return final_.size(); }
  State start() const { return start_; }
  bool is_final(State q) const { return final_.at(q); }
  /// Sorted, duplicate-free successor list.
  const std::vector<State>& next(State q, Letter a) const { return delta_[index(q, a)]; }

  void set_start(State q);
  void set_final(State q, bool value = true);
  void add_transition(State from, Letter a, State to);

  bool accepts(WordView w) const;

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  std::size_t index(State q, Letter a) const { return std::size_t{q} * sigma_.size + (a - 1); }

  Alphabet sigma_;
  State start_ = 0;
  std::vector<bool> final_;
  std::vector<std::vector<State>> delta_;
};

Nfa to_nfa(const Dfa& d);

/// Minimal DFA for the words having w as a subsequence (|w|+1 states).
Dfa supersequence_dfa(WordView w, Alphabet sigma);

/// Default ceiling on materialized k-universality DFA states.
inline constexpr std::size_t kDefaultStateLimit = std::size_t{1} << 24;

/// Minimal DFA for the k-universal words: (2^sigma - 1) * k + 1 states.
/// State (t, S) with S a strict subset of the alphabet has index
/// t * (2^sigma - 1) + S; the accepting sink is the last state.
Dfa k_universal_dfa(Alphabet sigma, const BigInt& k, std::size_t state_limit = kDefaultStateLimit);

Dfa complement(const Dfa& d);

/// Product restricted to the pairs reachable from the start pair.
Nfa product_intersect(const Nfa& a, const Dfa& d);

bool is_empty(const Nfa& a);

/// Copy of `a` keeping only states that are reachable and co-reachable;
/// state order is preserved. An empty language yields a single non-final state.
Nfa trim(const Nfa& a);

enum class Problem {
  exists_subsequence,
  forall_subsequence,
  exists_k_universal,
  forall_k_universal,
  infinity_universal,
};

const char* problem_name(Problem p);

/// Word for the subsequence problems, k >= 1 for the k-universality problems,
/// nothing for infinity-universal.
using ProblemArgument = std::variant<std::monostate, Word, BigInt>;

bool reg_decide(Problem problem, const Nfa& a, const ProblemArgument& argument);

/// True iff some state that is reachable and co-reachable lies on a cycle
/// whose label contains every letter.
bool has_universal_cycle(const Nfa& a);

}  // namespace subseq
