#include "subseq/tfa.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

#include "subseq/errors.hpp"

namespace subseq {

Tfa::Tfa(Alphabet sigma, std::size_t state_count, State start)
    : sigma_(sigma), start_(start), final_(state_count, false), delta_(state_count * sigma.size, kNoState) {
  if (sigma.size == 0) throw InputError("alphabet must contain at least one letter");
  if (state_count == 0) throw InputError("automaton needs at least one state");
  set_start(start);
}

void Tfa::set_start(State q) {
  if (q >= state_count()) throw InputError("start state " + std::to_string(q) + " out of range");
  start_ = q;
}

void Tfa::set_final(State q, bool value) {
  if (q >= state_count()) throw InputError("final state " + std::to_string(q) + " out of range");
  final_[q] = value;
}

void Tfa::set_transition(State from, Letter a, State to) {
  if (from >= state_count() || to >= state_count()) throw InputError("transition state out of range");
  if (!sigma_.contains(a)) throw InputError("transition letter out of range");
  State& slot = delta_[std::size_t{from} * sigma_.size + (a - 1)];
  if (slot != kNoState && slot != to) {
    throw InputError("state " + std::to_string(from) + " has two transitions on letter " + format_letter(a, sigma_));
  }
  slot = to;
}

std::optional<TfaConfiguration> step(const Tfa& t, const TfaConfiguration& c) {
  for (std::size_t i = 0; i < c.remaining.size(); ++i) {
    State q = t.next(c.state, c.remaining[i]);
    if (q == kNoState) continue;
    TfaConfiguration out{q, c.remaining};
    out.remaining.erase(out.remaining.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }
  return std::nullopt;
}

bool accepts(const Tfa& t, WordView w) {
  check_word(w, t.alphabet());
  TfaConfiguration c{t.start(), Word(w.begin(), w.end())};
  while (auto next = step(t, c)) c = std::move(*next);
  return c.remaining.empty() && t.is_final(c.state);
}

std::vector<Word> enumerate_accepted(const Tfa& t, std::size_t max_len, std::size_t budget) {
  const std::size_t s = t.alphabet().size;
  BigInt total = 0, layer = 1;
  for (std::size_t l = 0; l <= max_len; ++l, layer *= s) total += layer;
  if (total > budget) {
    throw ResourceError("enumerating " + total.str() + " words exceeds the budget of " + std::to_string(budget));
  }
  std::vector<Word> out;
  for (std::size_t l = 0; l <= max_len; ++l) {
    Word w(l, 1);
    while (true) {
      if (accepts(t, w)) out.push_back(w);
      std::size_t i = l;
      while (i > 0 && w[i - 1] == s) w[--i] = 1;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  return out;
}

namespace {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDead = kUnbounded - 1;

// most[q][x-1]: largest number of x-transitions on a path from q to a final
// state; kUnbounded when a cycle through an x-transition fits on such a path,
// kDead when no final state is reachable.
std::vector<std::vector<std::size_t>> max_reads(const Tfa& t) {
  const std::size_t n = t.state_count();
  const Letter s = t.alphabet().size;
  std::vector<std::vector<std::size_t>> most(n, std::vector<std::size_t>(s, kDead));
  for (Letter x = 1; x <= s; ++x) {
    std::vector<long long> value(n, -1);
    for (State q = 0; q < n; ++q) {
      if (t.is_final(q)) value[q] = 0;
    }
    auto relax = [&](std::vector<bool>* grew) {
      bool changed = false;
      for (State q = 0; q < n; ++q) {
        for (Letter c = 1; c <= s; ++c) {
          State r = t.next(q, c);
          if (r == kNoState || value[r] < 0) continue;
          long long cand = value[r] + (c == x ? 1 : 0);
          if (cand > value[q]) {
            value[q] = cand;
            changed = true;
            if (grew) (*grew)[q] = true;
          }
        }
      }
      return changed;
    };
    for (std::size_t round = 0; round < n; ++round) {
      if (!relax(nullptr)) break;
    }
    std::vector<bool> unbounded(n, false);
    for (std::size_t round = 0; round < n; ++round) {
      if (!relax(&unbounded)) break;
    }
    // Anything that can reach an unbounded state is unbounded too.
    bool changed = true;
    while (changed) {
      changed = false;
      for (State q = 0; q < n; ++q) {
        if (unbounded[q]) continue;
        for (Letter c = 1; c <= s; ++c) {
          State r = t.next(q, c);
          if (r != kNoState && unbounded[r]) {
            unbounded[q] = changed = true;
            break;
          }
        }
      }
    }
    for (State q = 0; q < n; ++q) {
      if (unbounded[q]) {
        most[q][x - 1] = kUnbounded;
      } else if (value[q] >= 0) {
        most[q][x - 1] = static_cast<std::size_t>(value[q]);
      }
    }
  }
  return most;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (Letter a : w) h = h * 1000003u ^ a;
    return h;
  }
};

}  // namespace

SupersequenceSearch exists_supersequence_tfa(const Tfa& t, WordView w, std::size_t budget) {
  check_word(w, t.alphabet());
  const Letter s = t.alphabet().size;
  SupersequenceSearch result;
  result.length_bound = (w.size() + 1) * t.state_count();
  const auto most = max_reads(t);

  // A configuration is the state, the number of matched letters of w and the
  // written but unread letters, none of which is enabled in the state.
  struct Node {
    State state;
    std::size_t matched;
    Word pending;
    std::size_t length;
    std::size_t parent;
    Letter letter;
  };
  std::vector<Node> nodes;
  std::unordered_map<Word, std::size_t, WordHash> seen;
  auto key_of = [](State q, std::size_t matched, const Word& pending) {
    Word key{q, static_cast<Letter>(matched)};
    key.insert(key.end(), pending.begin(), pending.end());
    return key;
  };
  auto settle = [&](State& q, Word& pending) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t i = 0; i < pending.size(); ++i) {
        State r = t.next(q, pending[i]);
        if (r == kNoState) continue;
        q = r;
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
        moved = true;
        break;
      }
    }
  };
  auto viable = [&](State q, const Word& pending) {
    if (most[q][0] == kDead) return false;
    std::vector<std::size_t> count(s, 0);
    for (Letter a : pending) {
      if (++count[a - 1] > most[q][a - 1]) return false;
    }
    return true;
  };
  auto accepting = [&](const Node& x) { return x.pending.empty() && t.is_final(x.state) && x.matched == w.size(); };

  std::deque<std::size_t> queue;
  auto visit = [&](Node node) {
    auto [it, fresh] = seen.emplace(key_of(node.state, node.matched, node.pending), nodes.size());
    if (!fresh) return false;
    if (nodes.size() >= budget) {
      throw ResourceError("supersequence search needs more than " + std::to_string(budget) +
                          " configurations (length bound " + std::to_string(result.length_bound) + ")");
    }
    nodes.push_back(std::move(node));
    queue.push_back(nodes.size() - 1);
    return true;
  };

  if (viable(t.start(), {})) visit({t.start(), 0, {}, 0, kUnbounded, 0});
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    if (accepting(nodes[id])) {
      Word u;
      for (std::size_t x = id; nodes[x].parent != kUnbounded; x = nodes[x].parent) u.push_back(nodes[x].letter);
      std::reverse(u.begin(), u.end());
      result.found = true;
      result.witness = std::move(u);
      break;
    }
    const Node cur = nodes[id];
    for (Letter c = 1; c <= s; ++c) {
      const std::size_t matched = cur.matched + (cur.matched < w.size() && w[cur.matched] == c ? 1 : 0);
      if (cur.length + 1 + (w.size() - matched) > result.length_bound) continue;
      State q = cur.state;
      Word pending = cur.pending;
      if (t.next(q, c) != kNoState) {
        q = t.next(q, c);
        settle(q, pending);
      } else {
        pending.push_back(c);
      }
      if (!viable(q, pending)) continue;
      visit({q, matched, std::move(pending), cur.length + 1, id, c});
    }
  }
  result.configurations = nodes.size();
  return result;
}

UnaryPda binary_tfa_to_pda(const Tfa& t) {
  if (t.alphabet().size != 2) throw InputError("the pushdown simulation needs exactly two letters");
  const auto n = static_cast<State>(t.state_count());
  UnaryPda p;
  p.sigma = t.alphabet();
  p.state_count = n + 1;
  p.start = t.start();
  p.final = n;
  for (State q = 0; q < n; ++q) {
    for (Letter x = 1; x <= 2; ++x) {
      const Letter y = 3 - x;
      const State to = t.next(q, y);
      if (t.next(q, x) == kNoState && to != kNoState) {
        p.moves.push_back({q, kBottom, kEpsilon, to, {y, kBottom}});
        p.moves.push_back({q, y, kEpsilon, to, {y, y}});
        p.moves.push_back({q, x, y, to, {x}});
      }
    }
    for (Letter x = 1; x <= 2; ++x) p.moves.push_back({q, x, x, q, {}});
    if (t.next(q, 1) != kNoState && t.next(q, 2) != kNoState) {
      for (Letter x = 1; x <= 2; ++x) {
        const Letter y = 3 - x;
        p.moves.push_back({q, kBottom, x, t.next(q, x), {kBottom}});
        p.moves.push_back({q, y, x, t.next(q, x), {y}});
      }
    }
    if (t.is_final(q)) p.moves.push_back({q, kBottom, kEpsilon, p.final, {}});
  }
  return p;
}

bool pda_accepts(const UnaryPda& p, WordView w, PdaRunStats* stats) {
  check_word(w, p.sigma);
  struct Config {
    State state;
    std::size_t pos;
    Letter letter;  // kBottom when the count is zero
    std::size_t count;
    bool bottom;
    auto operator<=>(const Config&) const = default;
  };
  std::vector<std::vector<const PdaMove*>> by_state(p.state_count);
  for (const auto& m : p.moves) by_state.at(m.from).push_back(&m);

  std::set<Config> seen;
  std::deque<Config> queue;
  auto visit = [&](const Config& c) {
    if (seen.insert(c).second) {
      queue.push_back(c);
      if (stats) stats->max_height = std::max(stats->max_height, c.count);
    }
  };
  visit({p.start, 0, kBottom, 0, true});
  bool accepted = false;
  while (!queue.empty()) {
    Config c = queue.front();
    queue.pop_front();
    if (c.state == p.final && c.pos == w.size() && !c.bottom && c.count == 0) {
      accepted = true;
      break;
    }
    Letter top;
    if (c.count > 0) {
      top = c.letter;
    } else if (c.bottom) {
      top = kBottom;
    } else {
      continue;
    }
    for (const PdaMove* m : by_state[c.state]) {
      if (m->top != top) continue;
      if (m->input != kEpsilon && (c.pos >= w.size() || w[c.pos] != m->input)) continue;
      Config next = c;
      next.state = m->to;
      if (m->input != kEpsilon) ++next.pos;
      if (next.count > 0) {
        --next.count;
      } else {
        next.bottom = false;
      }
      if (next.count == 0) next.letter = kBottom;
      for (auto it = m->push.rbegin(); it != m->push.rend(); ++it) {
        if (*it == kBottom) {
          if (next.bottom || next.count > 0) throw InvariantError("bottom marker pushed above the stack bottom");
          next.bottom = true;
        } else {
          if (next.count > 0 && next.letter != *it) {
            throw InvariantError("stack would hold two different letters");
          }
          if (!next.bottom) throw InvariantError("letter pushed below the bottom marker");
          next.letter = *it;
          ++next.count;
        }
      }
      // Every stacked letter still has to be matched by a later input letter.
      if (next.count > w.size() - next.pos) continue;
      visit(next);
    }
  }
  if (stats) stats->configurations += seen.size();
  return accepted;
}

void validate_graph(const Graph& g) {
  if (g.n < 2) throw InputError("graph needs at least two vertices");
  for (const auto& [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.n || v > g.n) {
      throw InputError("edge " + std::to_string(u) + " " + std::to_string(v) + " is out of range");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u) + " (graphs must be simple)");
  }
}

HcpInstance hcp_gadget(const Graph& graph) {
  validate_graph(graph);
  const std::size_t n = graph.n;
  std::size_t d = 0;
  while ((std::size_t{1} << d) < n) ++d;
  const std::size_t inner = (std::size_t{1} << d) - 2;
  const std::size_t block = 2 * n + n * inner;
  const auto final_state = static_cast<State>(n * block);
  const auto sink = static_cast<State>(n * block + 1);
  const Letter a = static_cast<Letter>(n + 1), b = static_cast<Letter>(n + 2);

  std::vector<std::vector<bool>> adjacent(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& [u, v] : graph.edges) adjacent[u][v] = adjacent[v][u] = true;

  Tfa t(Alphabet{static_cast<std::uint32_t>(n + 2)}, n * block + 2, 0);
  t.set_final(final_state);
  for (std::size_t g = 0; g < n; ++g) {
    auto v_state = [&](std::size_t j) { return static_cast<State>(g * block + j - 1); };
    auto w_state = [&](std::size_t k) { return static_cast<State>(g * block + n + k - 1); };
    for (std::size_t j = 1; j <= n; ++j) {
      // Heap-numbered tree below v_{g+1,j}: node h has children 2h (a) and 2h+1 (b).
      auto node = [&](std::size_t h) -> State {
        if (h == 1) return v_state(j);
        if (h < (std::size_t{1} << d)) return static_cast<State>(g * block + 2 * n + (j - 1) * inner + h - 2);
        const std::size_t k = h - (std::size_t{1} << d) + 1;
        return (k <= n && adjacent[j][k]) ? w_state(k) : sink;
      };
      for (std::size_t h = 1; h < (std::size_t{1} << d); ++h) {
        t.set_transition(node(h), a, node(2 * h));
        t.set_transition(node(h), b, node(2 * h + 1));
      }
    }
    for (std::size_t k = 1; k <= n; ++k) {
      if (g + 1 < n) {
        t.set_transition(w_state(k), static_cast<Letter>(k), static_cast<State>((g + 1) * block + k - 1));
      } else if (k == 1) {
        t.set_transition(w_state(k), 1, final_state);
      }
    }
  }
  Word query;
  for (std::size_t i = 1; i <= n; ++i) query.push_back(static_cast<Letter>(i));
  return {std::move(t), std::move(query)};
}

}  // namespace subseq
