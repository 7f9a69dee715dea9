#pragma once

// Decision procedures for context-free inputs: supersequence problems via the
// triple construction, the universal-cycle test, the arch-counting table for
// the existential universality index and the SAS table for the universal one.

#include <cstddef>
#include <optional>
#include <vector>

#include "subseq/grammar.hpp"

namespace subseq {

bool exists_supersequence_cfl(const CnfGrammar& g, WordView w);
bool forall_supersequence_cfl(const CnfGrammar& g, WordView w);

/// X derives left . X . right.
struct CycleContext {
  Nonterminal x = 0;
  Word left;
  Word right;
};

struct UniversalCycle {
  bool infinite = false;
  /// Present iff infinite; one side of the context is 1-universal.
  std::optional<CycleContext> witness;
};

UniversalCycle iota_exists_infinite(const CnfGrammar& g);

/// Terminal words (left, right) with `from` deriving left . to . right, or
/// nullopt if `to` never appears below `from`.
std::optional<std::pair<Word, Word>> derivation_context(const CnfGrammar& g, Nonterminal from, Nonterminal to);

/// Arch count or the "no such derivation tree" sentinel.
class ArchCount {
 public:
  static ArchCount none() { return ArchCount(); }
  static ArchCount of(BigInt v) { return ArchCount(std::move(v)); }

  bool is_none() const { return none_; }
  /// Precondition: !is_none().
  const BigInt& value() const;

  /// Sentinel sorts below every count.
  friend bool operator<(const ArchCount& x, const ArchCount& y);
  friend bool operator==(const ArchCount&, const ArchCount&) = default;

 private:
  ArchCount() = default;
  explicit ArchCount(BigInt v) : none_(false), value_(std::move(v)) {}
  bool none_ = true;
  BigInt value_;
};

/// M[i, A, prefix alphabet, suffix alphabet] for depths 1..depth(), masks
/// ranging over strict subsets of the alphabet.
class ArchCountTable {
 public:
  ArchCountTable(std::size_t depth, std::size_t nonterminals, Alphabet sigma);

  std::size_t depth() const { return depth_; }
  std::size_t nonterminal_count() const { return n_; }
  Alphabet alphabet() const { return sigma_; }
  ArchCount& at(std::size_t i, Nonterminal a, LetterMask prefix, LetterMask suffix);
  const ArchCount& at(std::size_t i, Nonterminal a, LetterMask prefix, LetterMask suffix) const;

 private:
  std::size_t index(std::size_t i, Nonterminal a, LetterMask prefix, LetterMask suffix) const;
  std::size_t depth_, n_;
  Alphabet sigma_;
  std::size_t masks_;
  std::vector<ArchCount> entries_;
};

/// Fills the table up to depth 4 n sigma.
ArchCountTable arch_count_table(const CnfGrammar& g);

struct UniversalityVerdict {
  enum class Kind { finite, infinite };
  Kind kind = Kind::finite;
  BigInt value;  // meaningful only when finite

  static UniversalityVerdict infinite() { return {Kind::infinite, 0}; }
  static UniversalityVerdict finite(BigInt v) { return {Kind::finite, std::move(v)}; }
  bool is_infinite() const { return kind == Kind::infinite; }
  friend bool operator==(const UniversalityVerdict&, const UniversalityVerdict&) = default;
};

UniversalityVerdict max_universality(const CnfGrammar& g);
bool exists_k_universal_cfl(const CnfGrammar& g, const BigInt& k);

/// Which join rules the SAS table uses. `guarded` only joins parts whose SAS
/// exceeds 1 and has no base value for M[1,A,eps,a]; some constrained entries
/// come out too large. `complete` adds that base value, drops the guards and
/// adds the join where the cut letter is absent from the right part.
enum class SasRules { guarded, complete };

/// M[i, A, a, b] for depths 1..n; a ranges over {eps} and the letters.
class SasTable {
 public:
  SasTable(std::size_t depth, std::size_t nonterminals, Alphabet sigma);

  std::size_t depth() const { return depth_; }
  std::size_t nonterminal_count() const { return n_; }
  Alphabet alphabet() const { return sigma_; }
  SasLength& at(std::size_t i, Nonterminal x, Letter first, Letter last);
  const SasLength& at(std::size_t i, Nonterminal x, Letter first, Letter last) const;

 private:
  std::size_t index(std::size_t i, Nonterminal x, Letter first, Letter last) const;
  std::size_t depth_, n_;
  Alphabet sigma_;
  std::vector<SasLength> entries_;
};

SasTable sas_table(const CnfGrammar& g, SasRules rules = SasRules::complete);

std::size_t min_universality(const CnfGrammar& g, SasRules rules = SasRules::complete);
bool forall_k_universal_cfl(const CnfGrammar& g, const BigInt& k);

}  // namespace subseq
