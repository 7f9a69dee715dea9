#include "subseq/grammar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "subseq/errors.hpp"

namespace subseq {

Nonterminal Cfg::nonterminal(const std::string& name) {
  if (auto existing = find(name)) return *existing;
  names_.push_back(name);
  return static_cast<Nonterminal>(names_.size() - 1);
}

std::optional<Nonterminal> Cfg::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Nonterminal>(it - names_.begin());
}

void Cfg::set_start(Nonterminal x) {
  if (x >= nonterminal_count()) throw InputError("start nonterminal out of range");
  start_ = x;
}

void Cfg::add_production(Nonterminal lhs, std::vector<Symbol> rhs) {
  if (lhs >= nonterminal_count()) throw InputError("production head out of range");
  if (rhs.empty()) {
    throw InputError("empty production for " + names_[lhs] +
                     ": only languages without the empty word are handled");
  }
  for (const Symbol& s : rhs) {
    if (s.terminal ? !sigma_.contains(s.id) : s.id >= nonterminal_count()) {
      throw InputError("production for " + names_[lhs] + " uses an unknown symbol");
    }
  }
  productions_.push_back({lhs, std::move(rhs)});
}

namespace {

// Least fixpoint of nonterminals deriving some terminal word.
std::vector<bool> generating(const Cfg& g) {
  std::vector<bool> gen(g.nonterminal_count(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions()) {
      if (gen[p.lhs]) continue;
      bool all = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return s.terminal || gen[s.id]; });
      if (all) gen[p.lhs] = changed = true;
    }
  }
  return gen;
}

std::string fresh_name(const std::set<std::string>& taken, const std::string& base) {
  if (!taken.count(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void CnfGrammar::validate() const {
  const std::size_t n = nonterminal_count();
  if (sigma.size < 2) throw InvariantError("CNF grammar over fewer than two letters");
  if (n == 0 || start >= n) throw InvariantError("CNF grammar without a valid start");
  for (const auto& p : binary) {
    if (p.lhs >= n || p.left >= n || p.right >= n) throw InvariantError("binary production out of range");
  }
  for (const auto& p : terminal) {
    if (p.lhs >= n || !sigma.contains(p.letter)) throw InvariantError("terminal production out of range");
  }
  if (!std::is_sorted(binary.begin(), binary.end()) ||
      std::adjacent_find(binary.begin(), binary.end()) != binary.end() ||
      !std::is_sorted(terminal.begin(), terminal.end()) ||
      std::adjacent_find(terminal.begin(), terminal.end()) != terminal.end()) {
    throw InvariantError("CNF production lists must be sorted and duplicate-free");
  }
  Cfg g = to_cfg();
  auto gen = generating(g);
  std::vector<bool> reach(n, false);
  std::deque<Nonterminal> queue{start};
  reach[start] = true;
  while (!queue.empty()) {
    Nonterminal x = queue.front();
    queue.pop_front();
    for (const auto& p : binary) {
      if (p.lhs != x) continue;
      for (Nonterminal y : {p.left, p.right}) {
        if (!reach[y]) {
          reach[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!gen[x] || !reach[x]) throw InvariantError("nonterminal " + names[x] + " is useless");
  }
}

Cfg CnfGrammar::to_cfg() const {
  Cfg g(sigma);
  for (const auto& name : names) g.nonterminal(name);
  g.set_start(start);
  for (const auto& p : binary) g.add_production(p.lhs, {Symbol::variable(p.left), Symbol::variable(p.right)});
  for (const auto& p : terminal) g.add_production(p.lhs, {Symbol::letter(p.letter)});
  return g;
}

std::optional<CnfGrammar> to_cnf(const Cfg& g) {
  const Alphabet sigma = g.alphabet();
  if (sigma.size < 2) {
    throw InputError("unary alphabet: every unary context-free language is regular, use an automaton instead");
  }
  if (g.nonterminal_count() == 0) throw InputError("grammar has no nonterminals");
  for (const auto& p : g.productions()) {
    if (p.rhs.empty()) throw InputError("empty production for " + g.name(p.lhs));
  }

  std::vector<std::string> names = g.names();
  std::set<std::string> taken(names.begin(), names.end());
  auto add_aux = [&](const std::string& base) {
    std::string name = fresh_name(taken, base);
    taken.insert(name);
    names.push_back(name);
    return static_cast<Nonterminal>(names.size() - 1);
  };

  // TERM: terminals inside long right-hand sides get their own nonterminal.
  std::vector<Nonterminal> term_of(sigma.size + 1, kNoState);
  std::vector<Production> prods;
  std::vector<TerminalProduction> terminal;
  for (const auto& p : g.productions()) {
    Production q = p;
    if (q.rhs.size() >= 2) {
      for (Symbol& s : q.rhs) {
        if (!s.terminal) continue;
        if (term_of[s.id] == kNoState) {
          term_of[s.id] = add_aux("T_" + format_letter(s.id, sigma));
          terminal.push_back({term_of[s.id], s.id});
        }
        s = Symbol::variable(term_of[s.id]);
      }
    }
    prods.push_back(std::move(q));
  }

  // BIN: split right-hand sides longer than two.
  std::vector<std::pair<Nonterminal, Nonterminal>> unit;
  std::vector<BinaryProduction> binary;
  std::size_t aux_counter = 0;
  for (const auto& p : prods) {
    if (p.rhs.size() == 1) {
      if (p.rhs[0].terminal) {
        terminal.push_back({p.lhs, p.rhs[0].id});
      } else {
        unit.emplace_back(p.lhs, p.rhs[0].id);
      }
      continue;
    }
    Nonterminal head = p.lhs;
    for (std::size_t i = 0; i + 2 < p.rhs.size(); ++i) {
      Nonterminal tail = add_aux("A_" + std::to_string(++aux_counter));
      binary.push_back({head, p.rhs[i].id, tail});
      head = tail;
    }
    binary.push_back({head, p.rhs[p.rhs.size() - 2].id, p.rhs.back().id});
  }

  // UNIT: every nonterminal inherits the non-unit productions of its unit closure.
  const std::size_t n = names.size();
  std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    closure[x][x] = true;
    std::deque<Nonterminal> queue{static_cast<Nonterminal>(x)};
    while (!queue.empty()) {
      Nonterminal y = queue.front();
      queue.pop_front();
      for (const auto& [from, to] : unit) {
        if (from == y && !closure[x][to]) {
          closure[x][to] = true;
          queue.push_back(to);
        }
      }
    }
  }
  std::vector<BinaryProduction> binary_closed;
  std::vector<TerminalProduction> terminal_closed;
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& p : binary) {
      if (closure[x][p.lhs]) binary_closed.push_back({static_cast<Nonterminal>(x), p.left, p.right});
    }
    for (const auto& p : terminal) {
      if (closure[x][p.lhs]) terminal_closed.push_back({static_cast<Nonterminal>(x), p.letter});
    }
  }

  // Usefulness: generating first, then reachable through generating productions.
  std::vector<bool> gen(n, false);
  for (const auto& p : terminal_closed) gen[p.lhs] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : binary_closed) {
      if (!gen[p.lhs] && gen[p.left] && gen[p.right]) gen[p.lhs] = changed = true;
    }
  }
  if (!gen[g.start()]) return std::nullopt;
  std::vector<bool> reach(n, false);
  reach[g.start()] = true;
  std::deque<Nonterminal> queue{g.start()};
  while (!queue.empty()) {
    Nonterminal x = queue.front();
    queue.pop_front();
    for (const auto& p : binary_closed) {
      if (p.lhs != x || !gen[p.left] || !gen[p.right]) continue;
      for (Nonterminal y : {p.left, p.right}) {
        if (!reach[y]) {
          reach[y] = true;
          queue.push_back(y);
        }
      }
    }
  }

  std::vector<Nonterminal> rename(n, kNoState);
  CnfGrammar out;
  out.sigma = sigma;
  for (std::size_t x = 0; x < n; ++x) {
    if (gen[x] && reach[x]) {
      rename[x] = static_cast<Nonterminal>(out.names.size());
      out.names.push_back(names[x]);
    }
  }
  out.start = rename[g.start()];
  for (const auto& p : binary_closed) {
    if (rename[p.lhs] != kNoState && rename[p.left] != kNoState && rename[p.right] != kNoState) {
      out.binary.push_back({rename[p.lhs], rename[p.left], rename[p.right]});
    }
  }
  for (const auto& p : terminal_closed) {
    if (rename[p.lhs] != kNoState) out.terminal.push_back({rename[p.lhs], p.letter});
  }
  sort_unique(out.binary);
  sort_unique(out.terminal);
  return out;
}

bool is_empty(const Cfg& g) {
  if (g.nonterminal_count() == 0) return true;
  return !generating(g)[g.start()];
}

Cfg intersect_dfa(const CnfGrammar& g, const Dfa& d) {
  if (g.sigma != d.alphabet()) throw InputError("grammar and automaton use different alphabets");
  const std::size_t n = g.nonterminal_count();
  const std::size_t s = d.state_count();
  auto id = [&](std::size_t p, std::size_t x, std::size_t q) { return (p * n + x) * s + q; };

  std::vector<bool> gen(s * n * s, false);
  for (const auto& t : g.terminal) {
    for (State p = 0; p < s; ++p) gen[id(p, t.lhs, d.next(p, t.letter))] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& b : g.binary) {
      for (std::size_t p = 0; p < s; ++p) {
        for (std::size_t r = 0; r < s; ++r) {
          if (!gen[id(p, b.left, r)]) continue;
          for (std::size_t q = 0; q < s; ++q) {
            if (gen[id(r, b.right, q)] && !gen[id(p, b.lhs, q)]) gen[id(p, b.lhs, q)] = changed = true;
          }
        }
      }
    }
  }

  std::vector<bool> reach(s * n * s, false);
  std::deque<std::size_t> queue;
  for (State f = 0; f < s; ++f) {
    std::size_t top = id(d.start(), g.start, f);
    if (d.is_final(f) && gen[top] && !reach[top]) {
      reach[top] = true;
      queue.push_back(top);
    }
  }
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    std::size_t q = cur % s, x = (cur / s) % n, p = cur / s / n;
    for (const auto& b : g.binary) {
      if (b.lhs != x) continue;
      for (std::size_t r = 0; r < s; ++r) {
        std::size_t l = id(p, b.left, r), rr = id(r, b.right, q);
        if (!gen[l] || !gen[rr]) continue;
        for (std::size_t y : {l, rr}) {
          if (!reach[y]) {
            reach[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
  }

  Cfg out(g.sigma);
  std::set<std::string> taken;
  auto named = [&](const std::string& base) {
    std::string name = fresh_name(taken, base);
    taken.insert(name);
    return out.nonterminal(name);
  };
  Nonterminal start = named("Start");
  out.set_start(start);
  std::vector<Nonterminal> triple(s * n * s, kNoState);
  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t q = 0; q < s; ++q) {
        std::size_t i = id(p, x, q);
        if (reach[i]) triple[i] = named(g.names[x] + "_" + std::to_string(p) + "_" + std::to_string(q));
      }
    }
  }
  for (State f = 0; f < s; ++f) {
    std::size_t top = id(d.start(), g.start, f);
    if (d.is_final(f) && reach[top]) out.add_production(start, {Symbol::variable(triple[top])});
  }
  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t q = 0; q < s; ++q) {
        std::size_t i = id(p, x, q);
        if (!reach[i]) continue;
        for (const auto& b : g.binary) {
          if (b.lhs != x) continue;
          for (std::size_t r = 0; r < s; ++r) {
            std::size_t l = id(p, b.left, r), rr = id(r, b.right, q);
            if (reach[l] && reach[rr]) {
              out.add_production(triple[i], {Symbol::variable(triple[l]), Symbol::variable(triple[rr])});
            }
          }
        }
        for (const auto& t : g.terminal) {
          if (t.lhs == x && d.next(static_cast<State>(p), t.letter) == q) {
            out.add_production(triple[i], {Symbol::letter(t.letter)});
          }
        }
      }
    }
  }
  return out;
}

bool cyk_member(const CnfGrammar& g, WordView w) {
  check_word(w, g.sigma);
  const std::size_t len = w.size();
  if (len == 0) return false;
  const std::size_t n = g.nonterminal_count();
  // table[i][l-1][x]: x derives w[i .. i+l)
  std::vector<std::vector<std::vector<char>>> table(len, std::vector<std::vector<char>>(len));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t l = 1; i + l <= len; ++l) table[i][l - 1].assign(n, 0);
    for (const auto& t : g.terminal) {
      if (t.letter == w[i]) table[i][0][t.lhs] = 1;
    }
  }
  for (std::size_t l = 2; l <= len; ++l) {
    for (std::size_t i = 0; i + l <= len; ++i) {
      auto& cell = table[i][l - 1];
      for (std::size_t k = 1; k < l; ++k) {
        const auto& left = table[i][k - 1];
        const auto& right = table[i + k][l - k - 1];
        for (const auto& b : g.binary) {
          if (left[b.left] && right[b.right]) cell[b.lhs] = 1;
        }
      }
    }
  }
  return table[0][len - 1][g.start];
}

bool cfg_member(const Cfg& g, WordView w) {
  check_word(w, g.alphabet());
  const std::size_t len = w.size();
  if (len == 0 || g.nonterminal_count() == 0) return false;
  const std::size_t n = g.nonterminal_count();
  // derives[i][l][x]: x derives w[i .. i+l). Spans are filled by increasing
  // length; within one length, unit chains need a fixpoint.
  std::vector<std::vector<std::vector<char>>> derives(len, std::vector<std::vector<char>>(len + 1));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t l = 1; i + l <= len; ++l) derives[i][l].assign(n, 0);
  }
  auto symbol_derives = [&](const Symbol& s, std::size_t i, std::size_t l) {
    if (s.terminal) return l == 1 && w[i] == s.id;
    return derives[i][l][s.id] != 0;
  };
  // Can rhs[k..] derive w[i .. i+l)? Every symbol takes at least one letter.
  auto sequence_derives = [&](const std::vector<Symbol>& rhs, std::size_t i, std::size_t l) {
    std::vector<std::vector<char>> ok(rhs.size() + 1, std::vector<char>(l + 1, 0));
    ok[rhs.size()][0] = 1;
    for (std::size_t k = rhs.size(); k-- > 0;) {
      for (std::size_t rem = 1; rem <= l; ++rem) {
        for (std::size_t take = 1; take <= rem; ++take) {
          if (ok[k + 1][rem - take] && symbol_derives(rhs[k], i + l - rem, take)) {
            ok[k][rem] = 1;
            break;
          }
        }
      }
    }
    return ok[0][l] != 0;
  };
  for (std::size_t l = 1; l <= len; ++l) {
    for (std::size_t i = 0; i + l <= len; ++i) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
          if (derives[i][l][p.lhs] || p.rhs.size() > l) continue;
          if (sequence_derives(p.rhs, i, l)) derives[i][l][p.lhs] = changed = true;
        }
      }
    }
  }
  return derives[0][len][g.start()] != 0;
}

std::vector<Word> enumerate_language(const CnfGrammar& g, std::size_t max_len, std::size_t budget) {
  if (max_len == 0) throw InputError("max_len must be at least 1");
  const std::size_t n = g.nonterminal_count();
  // words[x][l]: all words of length l derivable from x.
  std::vector<std::vector<std::set<Word>>> words(n, std::vector<std::set<Word>>(max_len + 1));
  std::size_t produced = 0;
  auto charge = [&]() {
    if (++produced > budget) {
      throw ResourceError("enumeration budget of " + std::to_string(budget) + " words exceeded");
    }
  };
  for (const auto& t : g.terminal) {
    if (words[t.lhs][1].insert(Word{t.letter}).second) charge();
  }
  for (std::size_t l = 2; l <= max_len; ++l) {
    for (const auto& b : g.binary) {
      for (std::size_t k = 1; k < l; ++k) {
        for (const Word& u : words[b.left][k]) {
          for (const Word& v : words[b.right][l - k]) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            if (words[b.lhs][l].insert(std::move(uv)).second) charge();
          }
        }
      }
    }
  }
  std::vector<Word> out;
  for (std::size_t l = 1; l <= max_len; ++l) {
    out.insert(out.end(), words[g.start][l].begin(), words[g.start][l].end());
  }
  return out;
}

std::vector<Word> shortest_words(const CnfGrammar& g) {
  const std::size_t n = g.nonterminal_count();
  std::vector<std::optional<Word>> best(n);
  auto better = [](const Word& x, const std::optional<Word>& y) {
    return !y || x.size() < y->size() || (x.size() == y->size() && x < *y);
  };
  for (const auto& t : g.terminal) {
    Word w{t.letter};
    if (better(w, best[t.lhs])) best[t.lhs] = w;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& b : g.binary) {
      if (!best[b.left] || !best[b.right]) continue;
      Word w = *best[b.left];
      w.insert(w.end(), best[b.right]->begin(), best[b.right]->end());
      if (better(w, best[b.lhs])) {
        best[b.lhs] = std::move(w);
        changed = true;
      }
    }
  }
  std::vector<Word> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (!best[x]) throw InvariantError("nonterminal " + g.names[x] + " derives nothing");
    out.push_back(std::move(*best[x]));
  }
  return out;
}

}  // namespace subseq
