#include "subseq/automata.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "subseq/errors.hpp"

namespace subseq {

Dfa::Dfa(Alphabet sigma, std::size_t state_count, State start)
    : sigma_(sigma), start_(start), final_(state_count, false), delta_(state_count * sigma.size, kNoState) {
  if (sigma.size == 0) throw InputError("alphabet must contain at least one letter");
  if (state_count == 0) throw InputError("automaton needs at least one state");
  set_start(start);
}

void Dfa::set_start(State q) {
  if (q >= state_count()) throw InputError("start state " + std::to_string(q) + " out of range");
  start_ = q;
}

void Dfa::set_final(State q, bool value) {
  if (q >= state_count()) throw InputError("final state " + std::to_string(q) + " out of range");
  final_[q] = value;
}

void Dfa::set_transition(State from, Letter a, State to) {
  if (from >= state_count() || to >= state_count()) throw InputError("transition state out of range");
  if (!sigma_.contains(a)) throw InputError("transition letter out of range");
  delta_[index(from, a)] = to;
}

void Dfa::validate() const {
  for (State q = 0; q < state_count(); ++q) {
    for (Letter a = 1; a <= sigma_.size; ++a) {
      if (next(q, a) == kNoState) {
        throw InputError("DFA is not total: no transition from state " + std::to_string(q) + " on letter " +
                         format_letter(a, sigma_));
      }
    }
  }
}

bool Dfa::accepts(WordView w) const {
  check_word(w, sigma_);
  State q = start_;
  for (Letter a : w) q = next(q, a);
  return final_[q];
}

Nfa::Nfa(Alphabet sigma, std::size_t state_count, State start)
    : sigma_(sigma), start_(start), final_(state_count, false), delta_(state_count * sigma.size) {
  if (sigma.size == 0) throw InputError("alphabet must contain at least one letter");
  if (state_count == 0) throw InputError("automaton needs at least one state");
  set_start(start);
}

void Nfa::set_start(State q) {
  if (q >= state_count()) throw InputError("start state " + std::to_string(q) + " out of range");
  start_ = q;
}

void Nfa::set_final(State q, bool value) {
  if (q >= state_count()) throw InputError("final state " + std::to_string(q) + " out of range");
  final_[q] = value;
}

void Nfa::add_transition(State from, Letter a, State to) {
  if (from >= state_count() || to >= state_count()) throw InputError("transition state out of range");
  if (!sigma_.contains(a)) throw InputError("transition letter out of range");
  auto& targets = delta_[index(from, a)];
  auto it = std::lower_bound(targets.begin(), targets.end(), to);
  if (it == targets.end() || *it != to) targets.insert(it, to);
}

bool Nfa::accepts(WordView w) const {
  check_word(w, sigma_);
  std::vector<bool> current(state_count(), false), upcoming(state_count(), false);
  current[start_] = true;
  for (Letter a : w) {
    std::fill(upcoming.begin(), upcoming.end(), false);
    for (State q = 0; q < state_count(); ++q) {
      if (!current[q]) continue;
      for (State r : next(q, a)) upcoming[r] = true;
    }
    current.swap(upcoming);
  }
  for (State q = 0; q < state_count(); ++q) {
    if (current[q] && final_[q]) return true;
  }
  return false;
}

Nfa to_nfa(const Dfa& d) {
  Nfa a(d.alphabet(), d.state_count(), d.start());
  for (State q = 0; q < d.state_count(); ++q) {
    a.set_final(q, d.is_final(q));
    for (Letter c = 1; c <= d.alphabet().size; ++c) a.add_transition(q, c, d.next(q, c));
  }
  return a;
}

Dfa supersequence_dfa(WordView w, Alphabet sigma) {
  check_word(w, sigma);
  const std::size_t n = w.size();
  Dfa d(sigma, n + 1, 0);
  for (State i = 0; i <= n; ++i) {
    for (Letter a = 1; a <= sigma.size; ++a) {
      d.set_transition(i, a, (i < n && w[i] == a) ? i + 1 : i);
    }
  }
  d.set_final(static_cast<State>(n));
  return d;
}

namespace {

constexpr std::uint32_t kMaxMaskAlphabet = 24;

void check_mask_alphabet(Alphabet sigma) {
  if (sigma.size == 0) throw InputError("alphabet must contain at least one letter");
  if (sigma.size > kMaxMaskAlphabet) {
    throw ResourceError("subset-indexed constructions support at most " + std::to_string(kMaxMaskAlphabet) +
                        " letters");
  }
}

// k-universality DFA computed on demand. Keys encode (t, S) as t * 2^sigma + S;
// the accepting sink is t == k.
class KUniversalView {
 public:
  KUniversalView(Alphabet sigma, const BigInt& k) : sigma_(sigma), full_(sigma.full_mask()) {
    check_mask_alphabet(sigma);
    // Levels beyond this are never materialized within any state budget.
    const BigInt cap = BigInt(std::numeric_limits<std::uint64_t>::max() >> (sigma.size + 1));
    k_ = k > cap ? static_cast<std::uint64_t>(cap) : static_cast<std::uint64_t>(k);
  }

  std::uint64_t start() const { return 0; }
  bool accepting(std::uint64_t key) const { return level(key) == k_; }
  std::uint64_t level(std::uint64_t key) const { return key >> sigma_.size; }

  std::uint64_t next(std::uint64_t key, Letter a) const {
    std::uint64_t t = level(key);
    if (t == k_) return key;
    LetterMask s = static_cast<LetterMask>(key & full_);
    LetterMask grown = s | letter_bit(a);
    if (grown == s) return key;
    if (grown == full_) return (t + 1) << sigma_.size;
    return (t << sigma_.size) | grown;
  }

 private:
  Alphabet sigma_;
  LetterMask full_;
  std::uint64_t k_ = 0;
};

// Same machine with the acceptance flipped.
class KUniversalComplementView : public KUniversalView {
 public:
  using KUniversalView::KUniversalView;
  bool accepting(std::uint64_t key) const { return !KUniversalView::accepting(key); }
};

class DfaView {
 public:
  explicit DfaView(const Dfa& d) : d_(d) {}
  std::uint64_t start() const { return d_.start(); }
  bool accepting(std::uint64_t key) const { return d_.is_final(static_cast<State>(key)); }
  std::uint64_t next(std::uint64_t key, Letter a) const { return d_.next(static_cast<State>(key), a); }

 private:
  const Dfa& d_;
};

struct PairHash {
  std::size_t operator()(const std::pair<State, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>{}(p.second * 0x9E3779B97F4A7C15ULL ^ p.first);
  }
};

// Worklist exploration of the product of `a` (started at `from`) with a
// deterministic view. Stops early once `target` accepts a discovered pair.
template <class View, class Target>
bool explore_product(const Nfa& a, State from, const View& view, Target target, Nfa* materialized = nullptr,
                     std::size_t state_limit = kDefaultStateLimit) {
  using Pair = std::pair<State, std::uint64_t>;
  std::unordered_map<Pair, State, PairHash> ids;
  std::vector<Pair> pairs;
  std::vector<std::tuple<State, Letter, State>> edges;
  auto intern = [&](const Pair& p) -> std::pair<State, bool> {
    auto [it, inserted] = ids.emplace(p, static_cast<State>(pairs.size()));
    if (inserted) {
      if (pairs.size() >= state_limit) {
        throw ResourceError("product exceeds the state limit of " + std::to_string(state_limit));
      }
      pairs.push_back(p);
    }
    return {it->second, inserted};
  };

  std::deque<State> queue;
  Pair start{from, view.start()};
  intern(start);
  queue.push_back(0);
  bool hit = false;
  while (!queue.empty()) {
    State id = queue.front();
    queue.pop_front();
    Pair p = pairs[id];
    if (target(p)) {
      hit = true;
      if (!materialized) return true;
    }
    for (Letter c = 1; c <= a.alphabet().size; ++c) {
      const auto& succ = a.next(p.first, c);
      if (succ.empty()) continue;
      std::uint64_t v = view.next(p.second, c);
      for (State r : succ) {
        auto [rid, fresh] = intern({r, v});
        if (materialized) edges.emplace_back(id, c, rid);
        if (fresh) queue.push_back(rid);
      }
    }
  }
  if (materialized) {
    Nfa out(a.alphabet(), pairs.size(), 0);
    for (State i = 0; i < pairs.size(); ++i) {
      out.set_final(i, a.is_final(pairs[i].first) && view.accepting(pairs[i].second));
    }
    for (const auto& [x, c, y] : edges) out.add_transition(x, c, y);
    *materialized = std::move(out);
  }
  return hit;
}

template <class View>
bool product_nonempty(const Nfa& a, const View& view) {
  return explore_product(a, a.start(), view,
                         [&](const auto& p) { return a.is_final(p.first) && view.accepting(p.second); });
}

void check_same_alphabet(Alphabet x, Alphabet y) {
  if (x != y) {
    throw InputError("alphabet mismatch: " + std::to_string(x.size) + " vs " + std::to_string(y.size) + " letters");
  }
}

// Shortest accepted word, if any.
std::optional<Word> shortest_accepted(const Nfa& a) {
  std::vector<State> parent(a.state_count(), kNoState);
  std::vector<Letter> via(a.state_count(), 0);
  std::vector<bool> seen(a.state_count(), false);
  std::deque<State> queue{a.start()};
  seen[a.start()] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (a.is_final(q)) {
      Word w;
      for (State x = q; parent[x] != kNoState; x = parent[x]) {
        w.push_back(via[x]);
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Letter c = 1; c <= a.alphabet().size; ++c) {
      for (State r : a.next(q, c)) {
        if (seen[r]) continue;
        seen[r] = true;
        parent[r] = q;
        via[r] = c;
        queue.push_back(r);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Dfa k_universal_dfa(Alphabet sigma, const BigInt& k, std::size_t state_limit) {
  check_mask_alphabet(sigma);
  if (k < 1) throw InputError("k must be at least 1");
  const std::uint64_t block = (std::uint64_t{1} << sigma.size) - 1;
  const BigInt count = BigInt(block) * k + 1;
  if (count > state_limit) {
    throw ResourceError("k-universality DFA would need " + count.str() + " states (limit " +
                        std::to_string(state_limit) + ")");
  }
  const auto levels = static_cast<std::uint64_t>(k);
  const LetterMask full = sigma.full_mask();
  const auto sink = static_cast<State>(levels * block);
  Dfa d(sigma, static_cast<std::size_t>(count), 0);
  d.set_final(sink);
  for (Letter a = 1; a <= sigma.size; ++a) d.set_transition(sink, a, sink);
  for (std::uint64_t t = 0; t < levels; ++t) {
    for (LetterMask s = 0; s < full; ++s) {
      const auto from = static_cast<State>(t * block + s);
      for (Letter a = 1; a <= sigma.size; ++a) {
        LetterMask grown = s | letter_bit(a);
        State to;
        if (grown == s) {
          to = from;
        } else if (grown != full) {
          to = static_cast<State>(t * block + grown);
        } else if (t + 1 < levels) {
          to = static_cast<State>((t + 1) * block);
        } else {
          to = sink;
        }
        d.set_transition(from, a, to);
      }
    }
  }
  return d;
}

Dfa complement(const Dfa& d) {
  Dfa c = d;
  for (State q = 0; q < d.state_count(); ++q) c.set_final(q, !d.is_final(q));
  return c;
}

Nfa product_intersect(const Nfa& a, const Dfa& d) {
  check_same_alphabet(a.alphabet(), d.alphabet());
  Nfa out;
  DfaView view(d);
  explore_product(a, a.start(), view, [](const auto&) { return false; }, &out);
  return out;
}

bool is_empty(const Nfa& a) {
  std::vector<bool> seen(a.state_count(), false);
  std::deque<State> queue{a.start()};
  seen[a.start()] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (a.is_final(q)) return false;
    for (Letter c = 1; c <= a.alphabet().size; ++c) {
      for (State r : a.next(q, c)) {
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
        }
      }
    }
  }
  return true;
}

Nfa trim(const Nfa& a) {
  const std::size_t n = a.state_count();
  const Letter sigma = a.alphabet().size;
  std::vector<bool> reach(n, false), coreach(n, false);
  std::vector<std::vector<State>> reverse(n);
  for (State q = 0; q < n; ++q) {
    for (Letter c = 1; c <= sigma; ++c) {
      for (State r : a.next(q, c)) reverse[r].push_back(q);
    }
  }
  std::deque<State> queue{a.start()};
  reach[a.start()] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Letter c = 1; c <= sigma; ++c) {
      for (State r : a.next(q, c)) {
        if (!reach[r]) {
          reach[r] = true;
          queue.push_back(r);
        }
      }
    }
  }
  for (State q = 0; q < n; ++q) {
    if (a.is_final(q)) {
      coreach[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p : reverse[q]) {
      if (!coreach[p]) {
        coreach[p] = true;
        queue.push_back(p);
      }
    }
  }
  if (!reach[a.start()] || !coreach[a.start()]) return Nfa(a.alphabet(), 1, 0);
  std::vector<State> rename(n, kNoState);
  State kept = 0;
  for (State q = 0; q < n; ++q) {
    if (reach[q] && coreach[q]) rename[q] = kept++;
  }
  Nfa out(a.alphabet(), kept, rename[a.start()]);
  for (State q = 0; q < n; ++q) {
    if (rename[q] == kNoState) continue;
    out.set_final(rename[q], a.is_final(q));
    for (Letter c = 1; c <= sigma; ++c) {
      for (State r : a.next(q, c)) {
        if (rename[r] != kNoState) out.add_transition(rename[q], c, rename[r]);
      }
    }
  }
  return out;
}

const char* problem_name(Problem p) {
  switch (p) {
    case Problem::exists_subsequence: return "exists-subseq";
    case Problem::forall_subsequence: return "forall-subseq";
    case Problem::exists_k_universal: return "exists-k-universal";
    case Problem::forall_k_universal: return "forall-k-universal";
    case Problem::infinity_universal: return "infinity-universal";
  }
  return "?";
}

bool has_universal_cycle(const Nfa& a) {
  const Nfa t = trim(a);
  if (is_empty(t)) return false;
  KUniversalView one(t.alphabet(), BigInt(1));
  for (State q = 0; q < t.state_count(); ++q) {
    bool found = explore_product(t, q, one, [&](const auto& p) { return p.first == q && one.accepting(p.second); });
    if (found) return true;
  }
  return false;
}

bool reg_decide(Problem problem, const Nfa& a, const ProblemArgument& argument) {
  const Alphabet sigma = a.alphabet();
  auto need_word = [&]() -> const Word& {
    if (!std::holds_alternative<Word>(argument)) {
      throw InputError(std::string(problem_name(problem)) + " requires a word argument");
    }
    return std::get<Word>(argument);
  };
  auto need_k = [&]() -> const BigInt& {
    if (!std::holds_alternative<BigInt>(argument)) {
      throw InputError(std::string(problem_name(problem)) + " requires an integer k");
    }
    const BigInt& k = std::get<BigInt>(argument);
    if (k < 1) throw InputError("k must be at least 1");
    return k;
  };

  switch (problem) {
    case Problem::exists_subsequence:
      return !is_empty(product_intersect(a, supersequence_dfa(need_word(), sigma)));
    case Problem::forall_subsequence:
      return is_empty(product_intersect(a, complement(supersequence_dfa(need_word(), sigma))));
    case Problem::exists_k_universal: {
      const BigInt& k = need_k();
      const Nfa t = trim(a);
      if (is_empty(t)) return false;
      // Without a universal cycle the reachable arch levels are bounded, so the
      // on-demand product is finite whatever k is.
      if (has_universal_cycle(t)) return true;
      return product_nonempty(t, KUniversalView(sigma, k));
    }
    case Problem::forall_k_universal: {
      const BigInt& k = need_k();
      const Nfa t = trim(a);
      auto shortest = shortest_accepted(t);
      if (!shortest) return true;
      // A shortest word bounds the answer and keeps the product polynomial.
      if (BigInt(universality_index(*shortest, sigma)) < k) return false;
      return !product_nonempty(t, KUniversalComplementView(sigma, k));
    }
    case Problem::infinity_universal:
      if (!std::holds_alternative<std::monostate>(argument)) {
        throw InputError("infinity-universal takes neither a word nor k");
      }
      return has_universal_cycle(a);
  }
  throw InputError("unknown problem");
}

}  // namespace subseq
