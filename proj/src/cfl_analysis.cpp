#include "subseq/cfl_analysis.hpp"

#include <algorithm>
#include <deque>

#include "subseq/errors.hpp"

namespace subseq {

bool exists_supersequence_cfl(const CnfGrammar& g, WordView w) {
  return !is_empty(intersect_dfa(g, supersequence_dfa(w, g.sigma)));
}

bool forall_supersequence_cfl(const CnfGrammar& g, WordView w) {
  return is_empty(intersect_dfa(g, complement(supersequence_dfa(w, g.sigma))));
}

namespace {

// Parent-to-child step of a derivation tree: parent -> child sibling or
// parent -> sibling child, depending on `sibling_left`.
struct ChildEdge {
  Nonterminal parent, child, sibling;
  bool sibling_left;
};

std::vector<ChildEdge> child_edges(const CnfGrammar& g) {
  std::vector<ChildEdge> edges;
  for (const auto& p : g.binary) {
    edges.push_back({p.lhs, p.left, p.right, false});
    edges.push_back({p.lhs, p.right, p.left, true});
  }
  return edges;
}

// reach[A][B]: A derives a sentential form containing B (reflexive).
std::vector<std::vector<bool>> reachability(const CnfGrammar& g, const std::vector<ChildEdge>& edges) {
  const std::size_t n = g.nonterminal_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) reach[x][x] = true;
  for (const auto& e : edges) reach[e.parent][e.child] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

// Shortest chain of child edges from `from` to `to`; empty when equal.
std::optional<std::vector<ChildEdge>> edge_path(const CnfGrammar& g, const std::vector<ChildEdge>& edges,
                                                Nonterminal from, Nonterminal to) {
  const std::size_t n = g.nonterminal_count();
  std::vector<std::optional<std::size_t>> via(n);
  std::vector<bool> seen(n, false);
  std::deque<Nonterminal> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    Nonterminal x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (e.parent == x && !seen[e.child]) {
        seen[e.child] = true;
        via[e.child] = i;
        queue.push_back(e.child);
      }
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<ChildEdge> path;
  for (Nonterminal x = to; x != from; x = edges[*via[x]].parent) path.push_back(edges[*via[x]]);
  std::reverse(path.begin(), path.end());
  return path;
}

struct Context {
  Word left, right;

  // this derives ... inner ...: the inner context sits closer to the hole.
  void nest(const Context& inner) {
    left.insert(left.end(), inner.left.begin(), inner.left.end());
    right.insert(right.begin(), inner.right.begin(), inner.right.end());
  }
  void add_sibling(const Word& w, bool on_left) {
    if (on_left) {
      left.insert(left.end(), w.begin(), w.end());
    } else {
      right.insert(right.begin(), w.begin(), w.end());
    }
  }
};

Context context_along(const std::vector<ChildEdge>& path, const std::vector<Word>& shortest) {
  Context c;
  for (const auto& e : path) c.add_sibling(shortest[e.sibling], e.sibling_left);
  return c;
}

// Some word derivable from x that contains the letter a.
Word word_containing(const CnfGrammar& g, const std::vector<ChildEdge>& edges, const std::vector<Word>& shortest,
                     Nonterminal x, Letter a) {
  for (const auto& t : g.terminal) {
    if (t.letter != a) continue;
    if (auto path = edge_path(g, edges, x, t.lhs)) {
      Context c = context_along(*path, shortest);
      Word w = c.left;
      w.push_back(a);
      w.insert(w.end(), c.right.begin(), c.right.end());
      return w;
    }
  }
  throw InvariantError("no word containing the requested letter");
}

}  // namespace

std::optional<std::pair<Word, Word>> derivation_context(const CnfGrammar& g, Nonterminal from, Nonterminal to) {
  auto edges = child_edges(g);
  auto path = edge_path(g, edges, from, to);
  if (!path) return std::nullopt;
  Context c = context_along(*path, shortest_words(g));
  return std::make_pair(c.left, c.right);
}

UniversalCycle iota_exists_infinite(const CnfGrammar& g) {
  const std::size_t n = g.nonterminal_count();
  const Alphabet sigma = g.sigma;
  const auto edges = child_edges(g);
  const auto reach = reachability(g, edges);

  // letters[A]: letters occurring in some word derivable from A.
  std::vector<LetterMask> letters(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& t : g.terminal) {
      if (reach[x][t.lhs]) letters[x] |= letter_bit(t.letter);
    }
  }

  // covered[side][A]: letters a with A deriving (alpha a beta) A gamma when
  // side is 0, or alpha A (beta a gamma) when side is 1. An edge whose sibling
  // lies on the requested side contributes the sibling's letters to every
  // cycle through it.
  for (int side = 0; side < 2; ++side) {
    const bool want_left = side == 0;
    for (Nonterminal x = 0; x < n; ++x) {
      LetterMask covered = 0;
      for (const auto& e : edges) {
        if (e.sibling_left == want_left && reach[x][e.parent] && reach[e.child][x]) covered |= letters[e.sibling];
      }
      if (covered != sigma.full_mask()) continue;

      const auto shortest = shortest_words(g);
      Context total;
      for (Letter a = 1; a <= sigma.size; ++a) {
        for (const auto& e : edges) {
          if (e.sibling_left != want_left || !reach[x][e.parent] || !reach[e.child][x]) continue;
          if (!(letters[e.sibling] & letter_bit(a))) continue;
          Context c = context_along(*edge_path(g, edges, x, e.parent), shortest);
          Context step;
          step.add_sibling(word_containing(g, edges, shortest, e.sibling, a), e.sibling_left);
          c.nest(step);
          c.nest(context_along(*edge_path(g, edges, e.child, x), shortest));
          total.nest(c);
          break;
        }
      }
      return {true, CycleContext{x, total.left, total.right}};
    }
  }
  return {false, std::nullopt};
}

const BigInt& ArchCount::value() const {
  if (none_) throw InvariantError("no arch count for an impossible signature");
  return value_;
}

bool operator<(const ArchCount& x, const ArchCount& y) {
  if (y.none_) return false;
  if (x.none_) return true;
  return x.value_ < y.value_;
}

ArchCountTable::ArchCountTable(std::size_t depth, std::size_t nonterminals, Alphabet sigma)
    : depth_(depth), n_(nonterminals), sigma_(sigma), masks_(sigma.full_mask()) {
  const std::size_t cells = depth_ * n_ * masks_ * masks_;
  if (cells > (std::size_t{1} << 26)) {
    throw ResourceError("arch-count table would need " + std::to_string(cells) + " entries");
  }
  entries_.assign(cells, ArchCount::none());
}

std::size_t ArchCountTable::index(std::size_t i, Nonterminal a, LetterMask prefix, LetterMask suffix) const {
  if (i < 1 || i > depth_ || a >= n_ || prefix >= masks_ || suffix >= masks_) {
    throw InvariantError("arch-count table index out of range");
  }
  return (((i - 1) * n_ + a) * masks_ + prefix) * masks_ + suffix;
}

ArchCount& ArchCountTable::at(std::size_t i, Nonterminal a, LetterMask prefix, LetterMask suffix) {
  return entries_[index(i, a, prefix, suffix)];
}

const ArchCount& ArchCountTable::at(std::size_t i, Nonterminal a, LetterMask prefix, LetterMask suffix) const {
  return entries_[index(i, a, prefix, suffix)];
}

ArchCountTable arch_count_table(const CnfGrammar& g) {
  const Alphabet sigma = g.sigma;
  if (sigma.size > 8) throw ResourceError("arch-count table supports at most 8 letters");
  const std::size_t n = g.nonterminal_count();
  const std::size_t depth = 4 * n * sigma.size;
  const LetterMask full = sigma.full_mask();
  ArchCountTable m(depth, n, sigma);

  for (const auto& t : g.terminal) {
    m.at(1, t.lhs, letter_bit(t.letter), 0) = ArchCount::of(0);
    m.at(1, t.lhs, 0, letter_bit(t.letter)) = ArchCount::of(0);
  }

  struct Entry {
    LetterMask prefix, suffix;
    BigInt value;
  };
  bool settled = false;
  for (std::size_t i = 2; i <= depth; ++i) {
    for (Nonterminal a = 0; a < n; ++a) {
      for (LetterMask p = 0; p < full; ++p) {
        for (LetterMask s = 0; s < full; ++s) m.at(i, a, p, s) = m.at(i - 1, a, p, s);
      }
    }
    if (settled) continue;

    std::vector<std::vector<Entry>> prev(n);
    for (Nonterminal a = 0; a < n; ++a) {
      for (LetterMask p = 0; p < full; ++p) {
        for (LetterMask s = 0; s < full; ++s) {
          const ArchCount& c = m.at(i - 1, a, p, s);
          if (!c.is_none()) prev[a].push_back({p, s, c.value()});
        }
      }
    }

    bool changed = false;
    for (const auto& prod : g.binary) {
      auto raise = [&](LetterMask p, LetterMask s, const BigInt& v) {
        ArchCount& cur = m.at(i, prod.lhs, p, s);
        if (cur.is_none() || cur.value() < v) {
          cur = ArchCount::of(v);
          changed = true;
        }
      };
      const BigInt zero = 0;
      for (const auto& [s1, s2, vb] : prev[prod.left]) {
        for (const auto& [s3, s4, vc] : prev[prod.right]) {
          if (vb == 0 && vc == 0) {
            const LetterMask all = s1 | s2 | s3 | s4;
            if (all != full) {
              raise(all, 0, zero);
              raise(0, all, zero);
            }
            if ((s1 | s2 | s3) != full) raise(s1 | s2 | s3, s4, zero);
            if ((s1 | s2) != full && (s3 | s4) != full) raise(s1 | s2, s3 | s4, zero);
            if ((s2 | s3 | s4) != full) raise(s1, s2 | s3 | s4, zero);
          }
          if ((s2 | s3) != full) {
            raise(s1, s4, vb + vc);
            if ((s1 | s2 | s3) != full && vb == 0) raise(s1 | s2 | s3, s4, vc);
            if ((s2 | s3 | s4) != full && vc == 0) raise(s1, s2 | s3 | s4, vb);
          } else {
            raise(s1, s4, vb + vc + 1);
          }
        }
      }
    }
    // Layer i depends only on layer i-1, so a repeated layer repeats forever.
    if (!changed) settled = true;
  }
  return m;
}

UniversalityVerdict max_universality(const CnfGrammar& g) {
  if (iota_exists_infinite(g).infinite) return UniversalityVerdict::infinite();
  const ArchCountTable m = arch_count_table(g);
  ArchCount best = ArchCount::none();
  for (LetterMask t = 0; t < g.sigma.full_mask(); ++t) {
    const ArchCount& c = m.at(m.depth(), g.start, 0, t);
    if (best < c) best = c;
  }
  if (best.is_none()) throw InvariantError("start symbol has no arch signature");
  return UniversalityVerdict::finite(best.value());
}

bool exists_k_universal_cfl(const CnfGrammar& g, const BigInt& k) {
  if (k < 1) throw InputError("k must be at least 1");
  UniversalityVerdict v = max_universality(g);
  return v.is_infinite() || k <= v.value;
}

SasTable::SasTable(std::size_t depth, std::size_t nonterminals, Alphabet sigma)
    : depth_(depth), n_(nonterminals), sigma_(sigma),
      entries_(depth * nonterminals * (sigma.size + 1) * sigma.size, SasLength::infinite()) {}

std::size_t SasTable::index(std::size_t i, Nonterminal x, Letter first, Letter last) const {
  if (i < 1 || i > depth_ || x >= n_ || first > sigma_.size || !sigma_.contains(last)) {
    throw InvariantError("SAS table index out of range");
  }
  return (((i - 1) * n_ + x) * (sigma_.size + 1) + first) * sigma_.size + (last - 1);
}

SasLength& SasTable::at(std::size_t i, Nonterminal x, Letter first, Letter last) {
  return entries_[index(i, x, first, last)];
}

const SasLength& SasTable::at(std::size_t i, Nonterminal x, Letter first, Letter last) const {
  return entries_[index(i, x, first, last)];
}

SasTable sas_table(const CnfGrammar& g, SasRules rules) {
  const Alphabet sigma = g.sigma;
  const Letter s = sigma.size;
  const std::size_t n = g.nonterminal_count();
  const bool complete = rules == SasRules::complete;
  const SasLength one = SasLength::of(1);
  SasTable m(n, n, sigma);

  for (const auto& t : g.terminal) {
    for (Letter b = 1; b <= s; ++b) {
      m.at(1, t.lhs, t.letter, b) = SasLength::of(2);
      if (b != t.letter) m.at(1, t.lhs, kEpsilon, b) = one;
    }
    if (complete) m.at(1, t.lhs, kEpsilon, t.letter) = min(m.at(1, t.lhs, kEpsilon, t.letter), SasLength::of(2));
  }

  for (std::size_t i = 2; i <= n; ++i) {
    for (Nonterminal x = 0; x < n; ++x) {
      for (Letter a = 0; a <= s; ++a) {
        for (Letter b = 1; b <= s; ++b) m.at(i, x, a, b) = m.at(i - 1, x, a, b);
      }
    }
    for (const auto& p : g.binary) {
      auto prev_b = [&](Letter a, Letter b) { return m.at(i - 1, p.left, a, b); };
      auto prev_c = [&](Letter a, Letter b) { return m.at(i - 1, p.right, a, b); };
      for (Letter a = 0; a <= s; ++a) {
        for (Letter b = 1; b <= s; ++b) {
          SasLength best = m.at(i, p.lhs, a, b);
          if (a == kEpsilon) {
            for (Letter x = 1; x <= s; ++x) {
              if (complete || one < prev_c(kEpsilon, x)) best = min(best, prev_b(kEpsilon, x) + prev_c(x, b) - 1);
              if (complete && x != b && prev_c(kEpsilon, x) == one) best = min(best, prev_b(kEpsilon, x) + one);
            }
            if (prev_c(kEpsilon, b) == one) best = min(best, prev_b(kEpsilon, b));
          } else {
            if (prev_b(kEpsilon, a) == one) best = min(best, prev_c(a, b));
            if (complete || one < prev_b(kEpsilon, a)) {
              for (Letter x = 1; x <= s; ++x) {
                if (complete || one < prev_c(kEpsilon, x)) best = min(best, prev_b(a, x) + prev_c(x, b) - 1);
                if (complete && x != b && prev_c(kEpsilon, x) == one) best = min(best, prev_b(a, x) + one);
              }
              if (prev_c(kEpsilon, b) == one) best = min(best, prev_b(a, b));
            }
          }
          m.at(i, p.lhs, a, b) = best;
        }
      }
    }
  }
  return m;
}

std::size_t min_universality(const CnfGrammar& g, SasRules rules) {
  const SasTable m = sas_table(g, rules);
  SasLength best = SasLength::infinite();
  for (Letter a = 0; a <= g.sigma.size; ++a) {
    for (Letter b = 1; b <= g.sigma.size; ++b) best = min(best, m.at(m.depth(), g.start, a, b));
  }
  if (best.is_infinite()) throw InvariantError("start symbol has no absent-subsequence bound");
  return best.value() - 1;
}

bool forall_k_universal_cfl(const CnfGrammar& g, const BigInt& k) {
  if (k < 1) throw InputError("k must be at least 1");
  return k <= BigInt(min_universality(g));
}

}  // namespace subseq
