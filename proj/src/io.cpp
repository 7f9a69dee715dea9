#include "subseq/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "subseq/errors.hpp"

namespace subseq {

const char* kind_name(InputKind k) {
  switch (k) {
    case InputKind::nfa: return "nfa";
    case InputKind::dfa: return "dfa";
    case InputKind::cfg: return "cfg";
    case InputKind::tfa: return "tfa";
    case InputKind::graph: return "graph";
    case InputKind::pda: return "pda";
  }
  return "?";
}

InputKind parse_kind(const std::string& name) {
  for (InputKind k : {InputKind::nfa, InputKind::dfa, InputKind::cfg, InputKind::tfa, InputKind::graph,
                      InputKind::pda}) {
    if (name == kind_name(k)) return k;
  }
  if (name == "csg" || name == "csl") {
    throw InputError(
        "context-sensitive input: all five problems are undecidable for context-sensitive languages, so such "
        "grammars are not accepted");
  }
  throw InputError("unknown input kind '" + name + "'");
}

InputKind kind_of(const Machine& m) {
  static constexpr InputKind by_index[] = {InputKind::nfa, InputKind::dfa,   InputKind::cfg,
                                           InputKind::tfa, InputKind::graph, InputKind::pda};
  return by_index[m.index()];
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
  std::string text;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_count(const Line& l, const std::string& tok, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      tok.size() > 9) {
    fail(l.number, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return std::stoul(tok);
}

State parse_state(const Line& l, const std::string& tok, std::size_t states) {
  std::size_t q = parse_count(l, tok, "a state number");
  if (q >= states) fail(l.number, "state " + tok + " out of range (0.." + std::to_string(states - 1) + ")");
  return static_cast<State>(q);
}

Letter parse_symbol(const Line& l, const std::string& tok, Alphabet sigma) {
  Letter a = 0;
  if (tok.size() == 1 && std::islower(static_cast<unsigned char>(tok[0]))) {
    a = static_cast<Letter>(tok[0] - 'a' + 1);
  } else if (!tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) &&
             tok.size() <= 9) {
    a = static_cast<Letter>(std::stoul(tok));
  } else {
    fail(l.number, "expected a letter, got '" + tok + "'");
  }
  if (!sigma.contains(a)) fail(l.number, "letter '" + tok + "' outside the alphabet of size " + std::to_string(sigma.size));
  return a;
}

void expect_size(const Line& l, std::size_t n, const char* usage) {
  if (l.tokens.size() != n) fail(l.number, std::string("expected '") + usage + "'");
}

template <class M>
M parse_automaton(const Line& header, const std::vector<Line>& body, Alphabet sigma, std::size_t states) {
  M m(sigma, states, 0);
  bool have_start = false;
  for (const Line& l : body) {
    const std::string& op = l.tokens[0];
    if (op == "start") {
      expect_size(l, 2, "start <state>");
      if (have_start) fail(l.number, "duplicate start line");
      m.set_start(parse_state(l, l.tokens[1], states));
      have_start = true;
    } else if (op == "final") {
      for (std::size_t i = 1; i < l.tokens.size(); ++i) m.set_final(parse_state(l, l.tokens[i], states));
    } else if (op == "trans") {
      expect_size(l, 4, "trans <state> <letter> <state>");
      State from = parse_state(l, l.tokens[1], states);
      Letter a = parse_symbol(l, l.tokens[2], sigma);
      State to = parse_state(l, l.tokens[3], states);
      try {
        if constexpr (std::is_same_v<M, Nfa>) {
          m.add_transition(from, a, to);
        } else {
          if constexpr (std::is_same_v<M, Dfa>) {
            if (m.next(from, a) != kNoState && m.next(from, a) != to) {
              fail(l.number, "second transition for the same state and letter in a DFA");
            }
          }
          m.set_transition(from, a, to);
        }
      } catch (const InputError& e) {
        if (std::string(e.what()).rfind("line ", 0) == 0) throw;
        fail(l.number, e.what());
      }
    } else {
      fail(l.number, "unknown directive '" + op + "'");
    }
  }
  if (!have_start) fail(header.number, "missing start line");
  if constexpr (std::is_same_v<M, Dfa>) {
    try {
      m.validate();
    } catch (const InputError& e) {
      fail(header.number, e.what());
    }
  }
  return m;
}

bool is_nonterminal_token(const std::string& tok) {
  if (tok.empty() || !std::isupper(static_cast<unsigned char>(tok[0]))) return false;
  return std::all_of(tok.begin(), tok.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; });
}

Cfg parse_cfg(const Line& header, const std::vector<Line>& body, Alphabet sigma) {
  Cfg g(sigma);
  std::optional<Nonterminal> start;
  for (const Line& l : body) {
    if (l.tokens[0] == "start") {
      expect_size(l, 2, "start <Nonterminal>");
      if (start) fail(l.number, "duplicate start line");
      if (!is_nonterminal_token(l.tokens[1])) fail(l.number, "start must be a capitalized identifier");
      start = g.nonterminal(l.tokens[1]);
      continue;
    }
    auto arrow = l.text.find("->");
    if (arrow == std::string::npos) fail(l.number, "expected 'start <NT>' or a production 'NT -> ...'");
    auto lhs = split(l.text.substr(0, arrow));
    if (lhs.size() != 1 || !is_nonterminal_token(lhs[0])) {
      fail(l.number,
           "left-hand side must be a single nonterminal; rules rewriting several symbols make the grammar "
           "context-sensitive, and all five problems are undecidable for context-sensitive languages");
    }
    Nonterminal head = g.nonterminal(lhs[0]);
    std::string rest = l.text.substr(arrow + 2);
    std::size_t from = 0;
    while (true) {
      std::size_t bar = rest.find('|', from);
      auto alt = split(rest.substr(from, bar == std::string::npos ? std::string::npos : bar - from));
      if (alt.empty() || (alt.size() == 1 && (alt[0] == "eps" || alt[0] == "ε"))) {
        fail(l.number, "empty production for " + lhs[0] + ": languages containing the empty word are not handled");
      }
      std::vector<Symbol> rhs;
      for (const auto& tok : alt) {
        if (is_nonterminal_token(tok)) {
          rhs.push_back(Symbol::variable(g.nonterminal(tok)));
        } else {
          rhs.push_back(Symbol::letter(parse_symbol(l, tok, sigma)));
        }
      }
      g.add_production(head, std::move(rhs));
      if (bar == std::string::npos) break;
      from = bar + 1;
    }
  }
  if (!start) fail(header.number, "missing start line");
  g.set_start(*start);
  return g;
}

Graph parse_graph(const std::vector<Line>& body, std::size_t n) {
  Graph g;
  g.n = n;
  for (const Line& l : body) {
    if (l.tokens[0] != "edge") fail(l.number, "unknown directive '" + l.tokens[0] + "'");
    expect_size(l, 3, "edge <i> <j>");
    std::size_t u = parse_count(l, l.tokens[1], "a vertex"), v = parse_count(l, l.tokens[2], "a vertex");
    if (u < 1 || v < 1 || u > n || v > n) fail(l.number, "vertex out of range 1.." + std::to_string(n));
    if (u == v) fail(l.number, "self-loop at vertex " + std::to_string(u) + " (graphs must be simple)");
    g.edges.emplace_back(u, v);
  }
  validate_graph(g);
  return g;
}

Letter parse_stack_symbol(const Line& l, char c, Alphabet sigma) {
  if (c == '_') return kBottom;
  return parse_symbol(l, std::string(1, c), sigma);
}

UnaryPda parse_pda(const Line& header, const std::vector<Line>& body, Alphabet sigma, std::size_t states) {
  if (sigma.size > 26) fail(header.number, "pushdown files support at most 26 letters");
  UnaryPda p;
  p.sigma = sigma;
  p.state_count = states;
  bool have_start = false, have_final = false;
  for (const Line& l : body) {
    const std::string& op = l.tokens[0];
    if (op == "start") {
      expect_size(l, 2, "start <state>");
      p.start = parse_state(l, l.tokens[1], states);
      have_start = true;
    } else if (op == "final") {
      expect_size(l, 2, "final <state>");
      p.final = parse_state(l, l.tokens[1], states);
      have_final = true;
    } else if (op == "move") {
      expect_size(l, 6, "move <state> <top> <input> <state> <push>");
      PdaMove m;
      m.from = parse_state(l, l.tokens[1], states);
      if (l.tokens[2].size() != 1) fail(l.number, "stack top is a single symbol");
      m.top = parse_stack_symbol(l, l.tokens[2][0], sigma);
      m.input = l.tokens[3] == "-" ? kEpsilon : parse_symbol(l, l.tokens[3], sigma);
      m.to = parse_state(l, l.tokens[4], states);
      if (l.tokens[5] != "-") {
        for (char c : l.tokens[5]) m.push.push_back(parse_stack_symbol(l, c, sigma));
      }
      p.moves.push_back(std::move(m));
    } else {
      fail(l.number, "unknown directive '" + op + "'");
    }
  }
  if (!have_start || !have_final) fail(header.number, "pushdown file needs start and final lines");
  return p;
}

std::string letter_text(Letter a, Alphabet sigma) { return format_letter(a, sigma); }

std::string stack_text(Letter a, Alphabet sigma) { return a == kBottom ? "_" : letter_text(a, sigma); }

}  // namespace

MachineFile parse_machine(const std::string& text, std::optional<InputKind> forced) {
  MachineFile file;
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  bool leading = true;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') {
      if (leading) file.comments.push_back(raw.substr(first + 1));
      continue;
    }
    leading = false;
    lines.push_back({number, split(raw), raw});
  }
  if (lines.empty()) throw InputError("empty input: expected a header line");
  const Line& header = lines.front();
  std::vector<Line> body(lines.begin() + 1, lines.end());
  InputKind kind = parse_kind(header.tokens[0]);
  if (forced && *forced != kind) {
    auto automaton = [](InputKind k) { return k == InputKind::nfa || k == InputKind::dfa || k == InputKind::tfa; };
    if (!automaton(kind) || !automaton(*forced)) {
      fail(header.number, std::string("file is a ") + kind_name(kind) + ", cannot read it as " + kind_name(*forced));
    }
    kind = *forced;
  }

  auto need = [&](std::size_t n, const char* usage) {
    if (header.tokens.size() != n) fail(header.number, std::string("header must be '") + usage + "'");
  };
  auto sigma_at = [&](std::size_t i) {
    std::size_t s = parse_count(header, header.tokens[i], "an alphabet size");
    if (s == 0) fail(header.number, "alphabet size must be positive");
    return Alphabet{static_cast<std::uint32_t>(s)};
  };
  auto states_at = [&](std::size_t i) {
    std::size_t n = parse_count(header, header.tokens[i], "a state count");
    if (n == 0) fail(header.number, "state count must be positive");
    return n;
  };
  switch (kind) {
    case InputKind::nfa:
      need(3, "nfa <sigma> <states>");
      file.machine = parse_automaton<Nfa>(header, body, sigma_at(1), states_at(2));
      break;
    case InputKind::dfa:
      need(3, "dfa <sigma> <states>");
      file.machine = parse_automaton<Dfa>(header, body, sigma_at(1), states_at(2));
      break;
    case InputKind::tfa:
      need(3, "tfa <sigma> <states>");
      file.machine = parse_automaton<Tfa>(header, body, sigma_at(1), states_at(2));
      break;
    case InputKind::cfg:
      need(2, "cfg <sigma>");
      file.machine = parse_cfg(header, body, sigma_at(1));
      break;
    case InputKind::graph:
      need(2, "graph <n>");
      file.machine = parse_graph(body, parse_count(header, header.tokens[1], "a vertex count"));
      break;
    case InputKind::pda:
      need(3, "pda <sigma> <states>");
      file.machine = parse_pda(header, body, sigma_at(1), states_at(2));
      break;
  }
  return file;
}

namespace {

template <class M>
void print_automaton(std::ostream& out, const char* kind, const M& m) {
  const Alphabet sigma = m.alphabet();
  out << kind << ' ' << sigma.size << ' ' << m.state_count() << '\n';
  out << "start " << m.start() << '\n';
  std::string finals;
  for (State q = 0; q < m.state_count(); ++q) {
    if (m.is_final(q)) finals += ' ' + std::to_string(q);
  }
  if (!finals.empty()) out << "final" << finals << '\n';
  for (State q = 0; q < m.state_count(); ++q) {
    for (Letter a = 1; a <= sigma.size; ++a) {
      if constexpr (std::is_same_v<M, Nfa>) {
        for (State r : m.next(q, a)) out << "trans " << q << ' ' << letter_text(a, sigma) << ' ' << r << '\n';
      } else {
        State r = m.next(q, a);
        if (r != kNoState) out << "trans " << q << ' ' << letter_text(a, sigma) << ' ' << r << '\n';
      }
    }
  }
}

void print_cfg(std::ostream& out, const Cfg& g) {
  const Alphabet sigma = g.alphabet();
  out << "cfg " << sigma.size << '\n';
  out << "start " << g.name(g.start()) << '\n';
  const auto& prods = g.productions();
  for (std::size_t i = 0; i < prods.size(); ++i) {
    if (i == 0 || prods[i - 1].lhs != prods[i].lhs) {
      if (i > 0) out << '\n';
      out << g.name(prods[i].lhs) << " ->";
    } else {
      out << " |";
    }
    for (const Symbol& s : prods[i].rhs) out << ' ' << (s.terminal ? letter_text(s.id, sigma) : g.name(s.id));
  }
  if (!prods.empty()) out << '\n';
}

void print_pda(std::ostream& out, const UnaryPda& p) {
  out << "pda " << p.sigma.size << ' ' << p.state_count << '\n';
  out << "start " << p.start << '\n';
  out << "final " << p.final << '\n';
  for (const auto& m : p.moves) {
    out << "move " << m.from << ' ' << stack_text(m.top, p.sigma) << ' '
        << (m.input == kEpsilon ? std::string("-") : letter_text(m.input, p.sigma)) << ' ' << m.to << ' ';
    if (m.push.empty()) out << '-';
    for (Letter s : m.push) out << stack_text(s, p.sigma);
    out << '\n';
  }
}

}  // namespace

std::string print_machine(const Machine& m) {
  std::ostringstream out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nfa>) {
          print_automaton(out, "nfa", x);
        } else if constexpr (std::is_same_v<T, Dfa>) {
          print_automaton(out, "dfa", x);
        } else if constexpr (std::is_same_v<T, Tfa>) {
          print_automaton(out, "tfa", x);
        } else if constexpr (std::is_same_v<T, Cfg>) {
          print_cfg(out, x);
        } else if constexpr (std::is_same_v<T, Graph>) {
          out << "graph " << x.n << '\n';
          for (const auto& [u, v] : x.edges) out << "edge " << u << ' ' << v << '\n';
        } else {
          print_pda(out, x);
        }
      },
      m);
  return out.str();
}

std::string print_machine(const MachineFile& file) {
  std::string out;
  for (const auto& c : file.comments) out += "#" + c + "\n";
  return out + print_machine(file.machine);
}

namespace {

template <class M>
void dot_automaton(std::ostream& out, const char* kind, const M& m) {
  const Alphabet sigma = m.alphabet();
  out << "digraph " << kind << " {\n  rankdir=LR;\n  start [shape=point];\n";
  for (State q = 0; q < m.state_count(); ++q) {
    out << "  q" << q << " [shape=" << (m.is_final(q) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  start -> q" << m.start() << ";\n";
  std::map<std::pair<State, State>, std::string> labels;
  for (State q = 0; q < m.state_count(); ++q) {
    for (Letter a = 1; a <= sigma.size; ++a) {
      std::vector<State> targets;
      if constexpr (std::is_same_v<M, Nfa>) {
        targets = m.next(q, a);
      } else if (m.next(q, a) != kNoState) {
        targets.push_back(m.next(q, a));
      }
      for (State r : targets) {
        auto& label = labels[{q, r}];
        if (!label.empty()) label += ",";
        label += letter_text(a, sigma);
      }
    }
  }
  for (const auto& [edge, label] : labels) {
    out << "  q" << edge.first << " -> q" << edge.second << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
}

}  // namespace

std::string to_dot(const Machine& m) {
  std::ostringstream out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nfa>) {
          dot_automaton(out, "nfa", x);
        } else if constexpr (std::is_same_v<T, Dfa>) {
          dot_automaton(out, "dfa", x);
        } else if constexpr (std::is_same_v<T, Tfa>) {
          dot_automaton(out, "tfa", x);
        } else if constexpr (std::is_same_v<T, Cfg>) {
          throw InputError("grammars have no state graph to export");
        } else if constexpr (std::is_same_v<T, Graph>) {
          out << "graph G {\n";
          for (std::size_t v = 1; v <= x.n; ++v) out << "  v" << v << ";\n";
          for (const auto& [u, v] : x.edges) out << "  v" << u << " -- v" << v << ";\n";
          out << "}\n";
        } else {
          out << "digraph pda {\n  rankdir=LR;\n  start [shape=point];\n";
          for (State q = 0; q < x.state_count; ++q) {
            out << "  q" << q << " [shape=" << (q == x.final ? "doublecircle" : "circle") << "];\n";
          }
          out << "  start -> q" << x.start << ";\n";
          for (const auto& mv : x.moves) {
            out << "  q" << mv.from << " -> q" << mv.to << " [label=\""
                << (mv.input == kEpsilon ? std::string("eps") : letter_text(mv.input, x.sigma)) << ", "
                << stack_text(mv.top, x.sigma) << "/";
            if (mv.push.empty()) out << "eps";
            for (Letter s : mv.push) out << stack_text(s, x.sigma);
            out << "\"];\n";
          }
          out << "}\n";
        }
      },
      m);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace subseq
