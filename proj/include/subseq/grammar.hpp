#pragma once

// Context-free grammars: general form, Chomsky normal form, conversion,
// membership, bounded enumeration and intersection with a DFA.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subseq/automata.hpp"
#include "subseq/words.hpp"

namespace subseq {

using Nonterminal = std::uint32_t;

struct Symbol {
  bool terminal = false;
  /// Letter when terminal, nonterminal id otherwise.
  std::uint32_t id = 0;

  static Symbol letter(Letter a) { return {true, a}; }
  static Symbol variable(Nonterminal x) { return {false, x}; }
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

struct Production {
  Nonterminal lhs = 0;
  std::vector<Symbol> rhs;
  friend auto operator<=>(const Production&, const Production&) = default;
};

/// General epsilon-free grammar. Nonterminal ids are 0..count-1, each with a name.
class Cfg {
 public:
  Cfg() = default;
  explicit Cfg(Alphabet sigma) : sigma_(sigma) {}

  Alphabet alphabet() const { return sigma_; }
  std::size_t nonterminal_count() const { return names_.size(); }
  const std::string& name(Nonterminal x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  Nonterminal start() const { return start_; }
  const std::vector<Production>& productions() const { return productions_; }

  /// Returns the id of `name`, creating it if new.
  Nonterminal nonterminal(const std::string& name);
  std::optional<Nonterminal> find(const std::string& name) const;
  void set_start(Nonterminal x);
  /// Throws InputError on an empty right-hand side or an out-of-range symbol.
  void add_production(Nonterminal lhs, std::vector<Symbol> rhs);

  friend bool operator==(const Cfg&, const Cfg&) = default;

 private:
  Alphabet sigma_;
  std::vector<std::string> names_;
  Nonterminal start_ = 0;
  std::vector<Production> productions_;
};

struct BinaryProduction {
  Nonterminal lhs, left, right;
  friend auto operator<=>(const BinaryProduction&, const BinaryProduction&) = default;
};

struct TerminalProduction {
  Nonterminal lhs;
  Letter letter;
  friend auto operator<=>(const TerminalProduction&, const TerminalProduction&) = default;
};

/// Grammar in Chomsky normal form over at least two letters, every
/// nonterminal useful. Production lists are sorted and duplicate-free.
struct CnfGrammar {
  Alphabet sigma;
  std::vector<std::string> names;
  Nonterminal start = 0;
  std::vector<BinaryProduction> binary;
  std::vector<TerminalProduction> terminal;

  std::size_t nonterminal_count() const { return names.size(); }
  /// Throws InvariantError if the representation invariants do not hold.
  void validate() const;
  Cfg to_cfg() const;

  friend bool operator==(const CnfGrammar&, const CnfGrammar&) = default;
};

/// TERM, BIN, UNIT, then removal of useless nonterminals. nullopt when the
/// language is empty. Original nonterminals keep their relative order and
/// come before the auxiliaries, which appear in creation order.
std::optional<CnfGrammar> to_cnf(const Cfg& g);

bool is_empty(const Cfg& g);

/// Triple construction; the result generally needs to_cnf before analysis.
Cfg intersect_dfa(const CnfGrammar& g, const Dfa& d);

bool cyk_member(const CnfGrammar& g, WordView w);

/// Membership for a general epsilon-free grammar, independent of to_cnf.
bool cfg_member(const Cfg& g, WordView w);

inline constexpr std::size_t kDefaultEnumerationBudget = 10'000'000;

/// All words of length <= max_len, in length-lexicographic order. The
/// budget bounds the number of words materialized across all nonterminals.
std::vector<Word> enumerate_language(const CnfGrammar& g, std::size_t max_len,
                                     std::size_t budget = kDefaultEnumerationBudget);

/// A shortest word derivable from each nonterminal (length-lex least among those).
std::vector<Word> shortest_words(const CnfGrammar& g);

}  // namespace subseq
