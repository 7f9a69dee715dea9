#pragma once

// Word-level primitives: subsequence test, arch factorization, universality
// index and shortest absent subsequences.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace subseq {

/// Letters are 1..sigma; 0 is reserved for the empty-word sentinel.
using Letter = std::uint32_t;
inline constexpr Letter kEpsilon = 0;

using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

using BigInt = boost::multiprecision::cpp_int;

/// Subset of an alphabet as a bit mask; bit (a-1) represents letter a.
using LetterMask = std::uint32_t;

struct Alphabet {
  std::uint32_t size = 0;

  bool contains(Letter a) const { return a >= 1 && a <= size; }
  /// Only valid for size <= 31.
  LetterMask full_mask() const { return (LetterMask{1} << size) - 1; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

inline LetterMask letter_bit(Letter a) { return LetterMask{1} << (a - 1); }

/// Throws InputError if sigma is zero or some letter lies outside 1..sigma.
void check_word(WordView w, Alphabet sigma);

struct ArchFactorization {
  std::vector<Word> arches;
  Word rest;
  Word modus;
  std::size_t iota = 0;
};

bool is_subsequence(WordView v, WordView w);

ArchFactorization arch_factorization(WordView w, Alphabet sigma);

std::size_t universality_index(WordView w, Alphabet sigma);

/// m(w) followed by the smallest letter missing from the rest of w.
Word shortest_absent_subsequence(WordView w, Alphabet sigma);

/// Length of a shortest absent subsequence, or "infinite" when no word
/// satisfies the constraints under the table conventions.
class SasLength {
 public:
  enum class Kind { finite, infinite };

  static SasLength infinite() { return SasLength(Kind::infinite, 0); }
  static SasLength of(std::size_t n) { return SasLength(Kind::finite, n); }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinite() const { return kind_ == Kind::infinite; }
  /// Precondition: is_finite().
  std::size_t value() const;

  /// Sentinel arithmetic: infinite absorbs.
  friend SasLength operator+(SasLength x, SasLength y);
  friend SasLength operator-(SasLength x, std::size_t d);
  friend bool operator==(const SasLength&, const SasLength&) = default;
  /// Total order with infinite as the largest element.
  friend bool operator<(const SasLength& x, const SasLength& y);

  std::string to_string() const;

 private:
  SasLength(Kind k, std::size_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::size_t value_;
};

inline SasLength min(SasLength x, SasLength y) { return y < x ? y : x; }

/// Shortest word starting with `first` (no constraint when kEpsilon), ending
/// with `last`, that is not a subsequence of w. Infinite when first is a real
/// letter that does not occur in w.
SasLength sas_ab_length(WordView w, Letter first, Letter last, Alphabet sigma);

/// Letters a=1, b=2, ... for alphabets of at most 26 letters.
Word parse_letters(const std::string& text, Alphabet sigma);
/// Comma-separated integers, e.g. "1,2,1".
Word parse_int_letters(const std::string& text, Alphabet sigma);
std::string format_word(WordView w, Alphabet sigma);
std::string format_letter(Letter a, Alphabet sigma);

}  // namespace subseq
