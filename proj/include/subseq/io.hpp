#pragma once

// Line-oriented text formats for every machine kind, and Graphviz export.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subseq/automata.hpp"
#include "subseq/grammar.hpp"
#include "subseq/tfa.hpp"

namespace subseq {

enum class InputKind { nfa, dfa, cfg, tfa, graph, pda };

const char* kind_name(InputKind k);
/// Throws InputError for unknown names.
InputKind parse_kind(const std::string& name);

using Machine = std::variant<Nfa, Dfa, Cfg, Tfa, Graph, UnaryPda>;

struct MachineFile {
  /// Leading comment lines, without the '#'.
  std::vector<std::string> comments;
  Machine machine;
};

InputKind kind_of(const Machine& m);

/// Parses any supported format; the kind comes from the header line unless
/// forced. Errors carry line numbers. Context-sensitive grammars are refused.
MachineFile parse_machine(const std::string& text, std::optional<InputKind> forced = std::nullopt);
std::string print_machine(const MachineFile& file);
std::string print_machine(const Machine& m);

/// Throws InputError for grammars, which have no state graph.
std::string to_dot(const Machine& m);

std::string read_file(const std::string& path);

}  // namespace subseq
