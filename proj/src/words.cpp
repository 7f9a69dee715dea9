#include "subseq/words.hpp"

#include <deque>
#include <limits>
#include <sstream>

#include "subseq/errors.hpp"

namespace subseq {

void check_word(WordView w, Alphabet sigma) {
  if (sigma.size == 0) throw InputError("alphabet must contain at least one letter");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!sigma.contains(w[i])) {
      throw InputError("letter " + std::to_string(w[i]) + " at position " + std::to_string(i + 1) +
                       " is outside the alphabet 1.." + std::to_string(sigma.size));
    }
  }
}

bool is_subsequence(WordView v, WordView w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < v.size(); ++j) {
    if (w[j] == v[i]) ++i;
  }
  return i == v.size();
}

ArchFactorization arch_factorization(WordView w, Alphabet sigma) {
  check_word(w, sigma);
  ArchFactorization f;
  std::vector<bool> seen(sigma.size + 1, false);
  std::uint32_t distinct = 0;
  Word current;
  for (Letter a : w) {
    current.push_back(a);
    if (!seen[a]) {
      seen[a] = true;
      ++distinct;
    }
    if (distinct == sigma.size) {
      f.modus.push_back(a);
      f.arches.push_back(std::move(current));
      current.clear();
      std::fill(seen.begin(), seen.end(), false);
      distinct = 0;
    }
  }
  f.rest = std::move(current);
  f.iota = f.arches.size();
  return f;
}

std::size_t universality_index(WordView w, Alphabet sigma) { return arch_factorization(w, sigma).iota; }

Word shortest_absent_subsequence(WordView w, Alphabet sigma) {
  ArchFactorization f = arch_factorization(w, sigma);
  std::vector<bool> in_rest(sigma.size + 1, false);
  for (Letter a : f.rest) in_rest[a] = true;
  Word sas = f.modus;
  for (Letter a = 1; a <= sigma.size; ++a) {
    if (!in_rest[a]) {
      sas.push_back(a);
      return sas;
    }
  }
  throw InvariantError("rest of an arch factorization contains every letter");
}

std::size_t SasLength::value() const {
  if (!is_finite()) throw InvariantError("value() of an infinite SAS length");
  return value_;
}

SasLength operator+(SasLength x, SasLength y) {
  if (x.is_infinite() || y.is_infinite()) return SasLength::infinite();
  return SasLength::of(x.value_ + y.value_);
}

SasLength operator-(SasLength x, std::size_t d) {
  if (x.is_infinite()) return x;
  if (x.value_ < d) throw InvariantError("SAS length underflow");
  return SasLength::of(x.value_ - d);
}

bool operator<(const SasLength& x, const SasLength& y) {
  if (x.is_infinite()) return false;
  if (y.is_infinite()) return true;
  return x.value_ < y.value_;
}

std::string SasLength::to_string() const { return is_finite() ? std::to_string(value_) : "inf"; }

SasLength sas_ab_length(WordView w, Letter first, Letter last, Alphabet sigma) {
  check_word(w, sigma);
  if (first != kEpsilon && !sigma.contains(first)) throw InputError("first letter outside the alphabet");
  if (!sigma.contains(last)) throw InputError("last letter outside the alphabet");

  // next[p][a]: smallest index >= p holding a, or n if none.
  const std::size_t n = w.size();
  std::vector<std::vector<std::size_t>> next(n + 1, std::vector<std::size_t>(sigma.size + 1, n));
  for (std::size_t p = n; p-- > 0;) {
    next[p] = next[p + 1];
    next[p][w[p]] = p;
  }

  // BFS over greedy-embedding positions: dist[p] = shortest prefix of a
  // candidate whose greedy embedding consumed exactly w[0..p).
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n + 1, kUnseen);
  std::deque<std::size_t> queue;
  if (first == kEpsilon) {
    dist[0] = 0;
    queue.push_back(0);
  } else {
    if (next[0][first] == n) return SasLength::infinite();
    std::size_t p = next[0][first] + 1;
    dist[p] = 1;
    queue.push_back(p);
  }
  while (!queue.empty()) {
    std::size_t p = queue.front();
    queue.pop_front();
    for (Letter c = 1; c <= sigma.size; ++c) {
      std::size_t q = next[p][c];
      if (q == n) continue;
      if (dist[q + 1] == kUnseen) {
        dist[q + 1] = dist[p] + 1;
        queue.push_back(q + 1);
      }
    }
  }

  SasLength best = SasLength::infinite();
  for (std::size_t p = 0; p <= n; ++p) {
    if (dist[p] == kUnseen) continue;
    if (next[p][last] == n) {
      best = min(best, SasLength::of(dist[p] + 1));
      continue;
    }
    for (Letter c = 1; c <= sigma.size; ++c) {
      if (next[p][c] == n) {
        // Some letter is already absent after p; appending `last` keeps it absent.
        best = min(best, SasLength::of(dist[p] + 2));
        break;
      }
    }
  }
  return best;
}

Word parse_letters(const std::string& text, Alphabet sigma) {
  if (sigma.size > 26) throw InputError("letter notation needs an alphabet of at most 26 letters; use integers");
  Word w;
  for (char ch : text) {
    if (ch < 'a' || ch > 'z') throw InputError(std::string("not a lowercase letter: '") + ch + "'");
    w.push_back(static_cast<Letter>(ch - 'a' + 1));
  }
  check_word(w, sigma);
  return w;
}

Word parse_int_letters(const std::string& text, Alphabet sigma) {
  Word w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw InputError("empty letter in '" + text + "'");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer letter: '" + item + "'");
    }
    if (used != item.size()) throw InputError("not an integer letter: '" + item + "'");
    w.push_back(static_cast<Letter>(v));
  }
  check_word(w, sigma);
  return w;
}

std::string format_letter(Letter a, Alphabet sigma) {
  if (sigma.size <= 26) return std::string(1, static_cast<char>('a' + a - 1));
  return std::to_string(a);
}

std::string format_word(WordView w, Alphabet sigma) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sigma.size > 26 && i > 0) out += ',';
    out += format_letter(w[i], sigma);
  }
  return out;
}

}  // namespace subseq
