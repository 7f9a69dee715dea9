#include "subseq/oracle.hpp"

#include <algorithm>
#include <set>

#include "subseq/errors.hpp"

namespace subseq {

Alphabet alphabet_of(const LanguageHandle& h) {
  return std::visit(
      [](const auto& m) -> Alphabet {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, CnfGrammar>) {
          return m.sigma;
        } else {
          return m.alphabet();
        }
      },
      h);
}

bool member(const LanguageHandle& h, WordView w) {
  return std::visit(
      [&](const auto& m) -> bool {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CnfGrammar>) {
          return !w.empty() && cyk_member(m, w);
        } else if constexpr (std::is_same_v<T, Tfa>) {
          return accepts(m, w);
        } else {
          return m.accepts(w);
        }
      },
      h);
}

namespace {

// Calls f on every word over sigma of length exactly len, lexicographically.
template <class F>
void for_each_word(Alphabet sigma, std::size_t len, F f) {
  Word w(len, 1);
  while (true) {
    f(static_cast<const Word&>(w));
    std::size_t i = len;
    while (i > 0 && w[i - 1] == sigma.size) w[--i] = 1;
    if (i == 0) return;
    ++w[i - 1];
  }
}

void charge_words(Alphabet sigma, std::size_t max_len, std::size_t budget) {
  BigInt total = 0, layer = 1;
  for (std::size_t l = 0; l <= max_len; ++l, layer *= sigma.size) total += layer;
  if (total > budget) {
    throw ResourceError("oracle would enumerate " + total.str() + " words, budget is " + std::to_string(budget));
  }
}

}  // namespace

std::vector<Word> enumerate(const LanguageHandle& h, std::size_t max_len, std::size_t budget) {
  if (const auto* g = std::get_if<CnfGrammar>(&h)) {
    if (max_len == 0) return {};
    return enumerate_language(*g, max_len, budget);
  }
  const Alphabet sigma = alphabet_of(h);
  charge_words(sigma, max_len, budget);
  std::vector<Word> out;
  for (std::size_t l = 0; l <= max_len; ++l) {
    for_each_word(sigma, l, [&](const Word& w) {
      if (member(h, w)) out.push_back(w);
    });
  }
  return out;
}

bool embeds(WordView v, WordView w) {
  // reach[i]: v[0..i) embeds into the prefix of w scanned so far.
  std::vector<bool> reach(v.size() + 1, false);
  reach[0] = true;
  for (Letter c : w) {
    for (std::size_t i = v.size(); i > 0; --i) {
      if (reach[i - 1] && v[i - 1] == c) reach[i] = true;
    }
  }
  return reach[v.size()];
}

namespace {

// Largest k with every word of length k embedded in w, by enumeration.
std::size_t exhaustive_iota(WordView w, Alphabet sigma) {
  std::size_t k = 0;
  while (true) {
    bool all = true;
    for_each_word(sigma, k + 1, [&](const Word& u) {
      if (all && !embeds(u, w)) all = false;
    });
    if (!all) return k;
    ++k;
  }
}

}  // namespace

IotaLowerBound brute_iota_exists(const LanguageHandle& h, std::size_t max_len, std::size_t budget) {
  IotaLowerBound out{0, max_len};
  for (const Word& w : enumerate(h, max_len, budget)) {
    out.value = std::max(out.value, exhaustive_iota(w, alphabet_of(h)));
  }
  return out;
}

std::size_t brute_iota_forall(const LanguageHandle& h, std::size_t max_len, std::size_t budget) {
  auto words = enumerate(h, max_len, budget);
  if (words.empty()) {
    throw InputError("no word of length at most " + std::to_string(max_len) + " in the language");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Word& w : words) best = std::min(best, exhaustive_iota(w, alphabet_of(h)));
  return best;
}

Word brute_sas(WordView w, std::optional<std::pair<Letter, Letter>> ends, Alphabet sigma, std::size_t budget) {
  check_word(w, sigma);
  if (ends) {
    if ((ends->first != kEpsilon && !sigma.contains(ends->first)) || !sigma.contains(ends->second)) {
      throw InputError("endpoint letter out of range");
    }
  }
  std::size_t spent = 0;
  // A word longer than w cannot embed, so the search ends by length |w| + 2.
  for (std::size_t len = 1;; ++len) {
    std::optional<Word> found;
    for_each_word(sigma, len, [&](const Word& u) {
      if (found) return;
      if (++spent > budget) throw ResourceError("SAS search budget exceeded");
      if (ends) {
        if (ends->first != kEpsilon && u.front() != ends->first) return;
        if (u.back() != ends->second) return;
      }
      if (!embeds(u, w)) found = u;
    });
    if (found) return *found;
  }
}

bool brute_exists_supersequence(const LanguageHandle& h, WordView w, std::size_t max_len, std::size_t budget) {
  if (std::holds_alternative<CnfGrammar>(h)) {
    for (const Word& u : enumerate(h, max_len, budget)) {
      if (embeds(w, u)) return true;
    }
    return false;
  }
  // length by length, so a short witness stops the search before the budget bites
  const Alphabet sigma = alphabet_of(h);
  for (std::size_t l = w.size(); l <= max_len; ++l) {
    charge_words(sigma, l, budget);
    bool found = false;
    for_each_word(sigma, l, [&](const Word& u) {
      if (!found && embeds(w, u) && member(h, u)) found = true;
    });
    if (found) return true;
  }
  return false;
}

bool brute_forall_supersequence(const LanguageHandle& h, WordView w, std::size_t max_len, std::size_t budget) {
  for (const Word& u : enumerate(h, max_len, budget)) {
    if (!embeds(w, u)) return false;
  }
  return true;
}

std::vector<std::vector<Word>> derivable_within_height(const CnfGrammar& g, std::size_t height,
                                                       std::size_t budget) {
  const std::size_t n = g.nonterminal_count();
  std::vector<std::set<Word>> cur(n);
  std::size_t produced = 0;
  auto charge = [&]() {
    if (++produced > budget) throw ResourceError("height-bounded enumeration exceeds the budget");
  };
  if (height >= 1) {
    for (const auto& t : g.terminal) {
      if (cur[t.lhs].insert(Word{t.letter}).second) charge();
    }
  }
  for (std::size_t h = 2; h <= height; ++h) {
    std::vector<std::set<Word>> next = cur;
    for (const auto& p : g.binary) {
      for (const Word& u : cur[p.left]) {
        for (const Word& v : cur[p.right]) {
          Word uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          if (next[p.lhs].insert(std::move(uv)).second) charge();
        }
      }
    }
    if (next == cur) break;
    cur = std::move(next);
  }
  std::vector<std::vector<Word>> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x].assign(cur[x].begin(), cur[x].end());
  return out;
}

bool is_derivable_context(const CnfGrammar& g, Nonterminal x, WordView left, WordView right) {
  check_word(left, g.sigma);
  check_word(right, g.sigma);
  const Letter marker = g.sigma.size + 1;
  Cfg marked(Alphabet{g.sigma.size + 1});
  const std::size_t n = g.nonterminal_count();
  for (std::size_t i = 0; i < n; ++i) marked.nonterminal("N" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) marked.nonterminal("M" + std::to_string(i));
  auto plain = [](Nonterminal a) { return Symbol::variable(a); };
  auto hot = [&](Nonterminal a) { return Symbol::variable(static_cast<Nonterminal>(n + a)); };
  for (const auto& p : g.binary) {
    marked.add_production(p.lhs, {plain(p.left), plain(p.right)});
    marked.add_production(static_cast<Nonterminal>(n + p.lhs), {hot(p.left), plain(p.right)});
    marked.add_production(static_cast<Nonterminal>(n + p.lhs), {plain(p.left), hot(p.right)});
  }
  for (const auto& p : g.terminal) marked.add_production(p.lhs, {Symbol::letter(p.letter)});
  marked.add_production(static_cast<Nonterminal>(n + x), {Symbol::letter(marker)});
  marked.set_start(static_cast<Nonterminal>(n + x));
  Word probe(left.begin(), left.end());
  probe.push_back(marker);
  probe.insert(probe.end(), right.begin(), right.end());
  return cfg_member(marked, probe);
}

}  // namespace subseq
