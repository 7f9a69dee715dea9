#pragma once

// Deterministic automata with translucent letters: in each step the leftmost
// remaining letter with a defined transition is consumed.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "subseq/automata.hpp"
#include "subseq/words.hpp"

namespace subseq {

/// Partial transition map; an undefined (state, letter) pair makes the letter
/// translucent in that state.
class Tfa {
 public:
  Tfa() = default;
  Tfa(Alphabet sigma, std::size_t state_count, State start);

  Alphabet alphabet() const { return sigma_; }
  std::size_t state_count() const { return final_.size(); }
  State start() const { return start_; }
  bool is_final(State q) const { return final_.at(q); }
  /// kNoState when undefined.
  State next(State q, Letter a) const { return delta_[std::size_t{q} * sigma_.size + (a - 1)]; }

  void set_start(State q);
  void set_final(State q, bool value = true);
  /// Throws InputError when the pair already has a different target.
  void set_transition(State from, Letter a, State to);

  friend bool operator==(const Tfa&, const Tfa&) = default;

 private:
  Alphabet sigma_;
  State start_ = 0;
  std::vector<bool> final_;
  std::vector<State> delta_;
};

struct TfaConfiguration {
  State state = 0;
  Word remaining;
  friend bool operator==(const TfaConfiguration&, const TfaConfiguration&) = default;
};

/// nullopt when no remaining letter is enabled (in particular on an empty tape).
std::optional<TfaConfiguration> step(const Tfa& t, const TfaConfiguration& c);

bool accepts(const Tfa& t, WordView w);

/// Accepted words of length <= max_len in length-lexicographic order.
std::vector<Word> enumerate_accepted(const Tfa& t, std::size_t max_len, std::size_t budget = 10'000'000);

struct SupersequenceSearch {
  bool found = false;
  /// Shortest accepted supersequence when found.
  std::optional<Word> witness;
  /// (|w| + 1) * state_count.
  std::size_t length_bound = 0;
  std::size_t configurations = 0;
};

inline constexpr std::size_t kDefaultSearchBudget = 20'000'000;

/// Exact search for an accepted u with w <= u and |u| <= length_bound.
/// Throws ResourceError when more than `budget` configurations are needed.
SupersequenceSearch exists_supersequence_tfa(const Tfa& t, WordView w, std::size_t budget = kDefaultSearchBudget);

/// Stack symbol for the bottom marker and input symbol for an empty read.
inline constexpr Letter kBottom = 0;

struct PdaMove {
  State from = 0;
  Letter top = kBottom;
  Letter input = kEpsilon;
  State to = 0;
  /// Replaces the popped top; first symbol ends on top.
  Word push;
  friend auto operator<=>(const PdaMove&, const PdaMove&) = default;
};

/// Pushdown automaton whose stack above the bottom marker is a power of one
/// letter. Accepts in `final` with the input read and the marker popped.
struct UnaryPda {
  Alphabet sigma;
  std::size_t state_count = 0;
  State start = 0;
  State final = 0;
  std::vector<PdaMove> moves;
  friend bool operator==(const UnaryPda&, const UnaryPda&) = default;
};

/// The TFA states keep their ids; the extra accepting state is the last one.
UnaryPda binary_tfa_to_pda(const Tfa& t);

struct PdaRunStats {
  std::size_t configurations = 0;
  std::size_t max_height = 0;
};

/// Breadth-first search over (state, position, stack letter, height).
/// Throws InvariantError if a move would put two different letters on the stack.
bool pda_accepts(const UnaryPda& p, WordView w, PdaRunStats* stats = nullptr);

/// Simple undirected graph on 1..n.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Throws InputError for n < 2, out-of-range endpoints or self-loops.
void validate_graph(const Graph& g);

struct HcpInstance {
  Tfa tfa;
  Word query;
};

/// Layout: with d = ceil(log2 n) and B = 2n + n(2^d - 2), gadget g (0-based)
/// holds v_{g+1,j} at gB + j - 1, w_{g+1,k} at gB + n + k - 1, and the inner
/// tree node with heap index h (2 <= h < 2^d) below v_{g+1,j} at
/// gB + 2n + (j-1)(2^d - 2) + h - 2. The final state is nB, the sink nB + 1.
/// Letters: v_i = i, a = n + 1, b = n + 2.
HcpInstance hcp_gadget(const Graph& g);

}  // namespace subseq
