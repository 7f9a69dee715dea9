#include "subseq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "subseq/cfl_analysis.hpp"
#include "subseq/errors.hpp"
#include "subseq/io.hpp"

namespace subseq {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct DecideRequest {
  std::string input;
  std::string kind;
  std::string problem;
  std::optional<std::string> word;
  std::optional<std::string> word_ints;
  std::optional<std::string> k;
  std::string format = "text";
  std::size_t budget = kDefaultSearchBudget;
};

struct Verdict {
  bool yes = false;
  json detail = json::object();
};

Problem parse_problem(const std::string& name) {
  for (Problem p : {Problem::exists_subsequence, Problem::forall_subsequence, Problem::exists_k_universal,
                    Problem::forall_k_universal, Problem::infinity_universal}) {
    if (name == problem_name(p)) return p;
  }
  throw InputError("unknown problem '" + name +
                   "' (expected exists-subseq, forall-subseq, exists-k-universal, forall-k-universal or "
                   "infinity-universal)");
}

BigInt parse_k(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError("--k must be a positive decimal integer, got '" + text + "'");
  }
  BigInt k(text);
  if (k < 1) throw InputError("--k must be at least 1");
  return k;
}

Word parse_word_arg(const std::optional<std::string>& letters, const std::optional<std::string>& ints,
                    Alphabet sigma) {
  if (letters && ints) throw InputError("give either --word or --word-ints, not both");
  if (letters) return parse_letters(*letters, sigma);
  return parse_int_letters(*ints, sigma);
}

ProblemArgument problem_argument(Problem p, const DecideRequest& r, Alphabet sigma) {
  const bool has_word = r.word || r.word_ints;
  switch (p) {
    case Problem::exists_subsequence:
    case Problem::forall_subsequence:
      if (!has_word) throw InputError(std::string(problem_name(p)) + " needs --word or --word-ints");
      if (r.k) throw InputError(std::string(problem_name(p)) + " takes no --k");
      return parse_word_arg(r.word, r.word_ints, sigma);
    case Problem::exists_k_universal:
    case Problem::forall_k_universal:
      if (!r.k) throw InputError(std::string(problem_name(p)) + " needs --k");
      if (has_word) throw InputError(std::string(problem_name(p)) + " takes no word");
      return parse_k(*r.k);
    case Problem::infinity_universal:
      if (has_word || r.k) throw InputError("infinity-universal takes neither a word nor --k");
      return std::monostate{};
  }
  throw InputError("unknown problem");
}

Alphabet machine_alphabet(const Machine& m) {
  return std::visit(
      [](const auto& x) -> Alphabet {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Graph>) {
          throw InputError("decide needs an automaton or a grammar, not a graph");
        } else if constexpr (std::is_same_v<T, UnaryPda>) {
          throw InputError("decide does not take pushdown automata; give the translucent automaton instead");
        } else {
          return x.alphabet();
        }
      },
      m);
}

Verdict decide_cfg(const Cfg& g, Problem p, const ProblemArgument& arg) {
  Verdict v;
  auto cnf = to_cnf(g);
  if (!cnf) {
    // Vacuous answers for the empty language.
    v.yes = p == Problem::forall_subsequence || p == Problem::forall_k_universal;
    v.detail["empty_language"] = true;
    return v;
  }
  switch (p) {
    case Problem::exists_subsequence:
      v.yes = exists_supersequence_cfl(*cnf, std::get<Word>(arg));
      break;
    case Problem::forall_subsequence:
      v.yes = forall_supersequence_cfl(*cnf, std::get<Word>(arg));
      break;
    case Problem::exists_k_universal: {
      UniversalityVerdict u = max_universality(*cnf);
      v.yes = u.is_infinite() || std::get<BigInt>(arg) <= u.value;
      v.detail["max_universality"] = u.is_infinite() ? std::string("infinite") : u.value.str();
      break;
    }
    case Problem::forall_k_universal: {
      std::size_t m = min_universality(*cnf);
      v.yes = std::get<BigInt>(arg) <= m;
      v.detail["min_universality"] = m;
      break;
    }
    case Problem::infinity_universal: {
      UniversalCycle c = iota_exists_infinite(*cnf);
      v.yes = c.infinite;
      if (c.witness) {
        v.detail["nonterminal"] = cnf->names[c.witness->x];
        v.detail["left"] = format_word(c.witness->left, cnf->sigma);
        v.detail["right"] = format_word(c.witness->right, cnf->sigma);
      }
      break;
    }
  }
  return v;
}

Verdict decide_tfa(const Tfa& t, Problem p, const ProblemArgument& arg, std::size_t budget) {
  if (p != Problem::exists_subsequence) {
    if (t.alphabet().size == 2) {
      throw InputError(std::string(problem_name(p)) +
                       " on a binary translucent automaton: decidable since the language is context-free, but "
                       "the conversion from the pushdown simulation to a grammar is not implemented");
    }
    throw InputError(std::string(problem_name(p)) +
                     " on a translucent automaton over three or more letters: decidability is open");
  }
  SupersequenceSearch s = exists_supersequence_tfa(t, std::get<Word>(arg), budget);
  Verdict v;
  v.yes = s.found;
  v.detail["length_bound"] = s.length_bound;
  v.detail["configurations"] = s.configurations;
  if (s.witness) v.detail["witness"] = format_word(*s.witness, t.alphabet());
  return v;
}

Verdict decide(const DecideRequest& r) {
  std::optional<InputKind> forced;
  if (!r.kind.empty()) forced = parse_kind(r.kind);
  MachineFile file = parse_machine(read_file(r.input), forced);
  const Problem p = parse_problem(r.problem);
  const Alphabet sigma = machine_alphabet(file.machine);
  const ProblemArgument arg = problem_argument(p, r, sigma);
  Verdict v;
  if (const auto* g = std::get_if<Cfg>(&file.machine)) {
    v = decide_cfg(*g, p, arg);
  } else if (const auto* t = std::get_if<Tfa>(&file.machine)) {
    v = decide_tfa(*t, p, arg, r.budget);
  } else if (const auto* a = std::get_if<Nfa>(&file.machine)) {
    v.yes = reg_decide(p, *a, arg);
  } else {
    v.yes = reg_decide(p, to_nfa(std::get<Dfa>(file.machine)), arg);
  }
  v.detail["problem"] = problem_name(p);
  v.detail["kind"] = kind_name(kind_of(file.machine));
  return v;
}

void emit(std::ostream& out, const Verdict& v, const std::string& format, const std::optional<std::string>& id) {
  if (format == "json") {
    json j{{"verdict", v.yes}, {"detail", v.detail}};
    if (id) j["id"] = *id;
    out << j.dump() << '\n';
  } else {
    if (id) out << *id << ' ';
    out << (v.yes ? "YES" : "NO") << '\n';
  }
}

template <class F>
int guarded(std::ostream& err, F f) {
  try {
    f();
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

void add_decide_options(CLI::App& app, DecideRequest& r) {
  app.add_option("--kind", r.kind, "Override the kind given by the header")
      ->check(CLI::IsMember({"nfa", "dfa", "tfa", "cfg"}));
  app.add_option("--problem", r.problem, "exists-subseq | forall-subseq | exists-k-universal | "
                                         "forall-k-universal | infinity-universal");
  app.add_option("--word", r.word, "Word in letters a, b, c, ...");
  app.add_option("--word-ints", r.word_ints, "Word as comma-separated letter numbers");
  app.add_option("--k", r.k, "Positive integer, any size");
  app.add_option("--format", r.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", r.budget, "Configuration limit for exhaustive searches");
}

int run_batch(const std::string& path, const DecideRequest& defaults, std::ostream& out, std::ostream& err) {
  int worst = kExitOk;
  std::istringstream lines(read_file(path));
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    std::istringstream in(line);
    std::vector<std::string> args;
    for (std::string tok; in >> tok;) args.push_back(tok);
    if (args.empty() || args[0][0] == '#') continue;
    if (args.size() < 2) {
      err << "batch line " << number << ": expected '<id> <input> [options]'\n";
      worst = std::max(worst, kExitInput);
      continue;
    }
    CLI::App app{"batch instance"};
    DecideRequest r = defaults;
    r.problem.clear();
    app.add_option("input", r.input)->required();
    add_decide_options(app, r);
    std::vector<std::string> rest(args.begin() + 1, args.end());
    std::reverse(rest.begin(), rest.end());
    const std::string id = args[0];
    int code = guarded(err, [&] {
      try {
        app.parse(rest);
      } catch (const CLI::ParseError& e) {
        throw InputError("batch line " + std::to_string(number) + ": " + e.what());
      }
      if (r.problem.empty()) throw InputError("batch line " + std::to_string(number) + ": missing --problem");
      emit(out, decide(r), r.format, id);
    });
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subsequence and universality problems for regular, context-free and translucent-automaton "
               "languages"};
  app.name("subseq-cli");
  app.require_subcommand(1);

  DecideRequest decide_req;
  std::optional<std::string> batch;
  auto* decide_cmd = app.add_subcommand("decide", "Answer one of the five problems for a machine or grammar file");
  decide_cmd->add_option("input", decide_req.input, "Machine or grammar file");
  decide_cmd->add_option("--batch", batch, "File with one '<id> <input> [options]' instance per line");
  add_decide_options(*decide_cmd, decide_req);

  std::string what, graph_path, construct_input, sigma_text, k_text;
  std::optional<std::string> c_word, c_word_ints;
  auto* construct_cmd = app.add_subcommand("construct", "Print a constructed machine");
  construct_cmd->add_option("what", what, "supersequence-dfa | k-universal-dfa | hcp-gadget | tfa-to-pda")
      ->required()
      ->check(CLI::IsMember({"supersequence-dfa", "k-universal-dfa", "hcp-gadget", "tfa-to-pda"}));
  construct_cmd->add_option("input", construct_input, "Input file (tfa-to-pda)");
  construct_cmd->add_option("--word", c_word, "Word in letters");
  construct_cmd->add_option("--word-ints", c_word_ints, "Word as comma-separated letter numbers");
  construct_cmd->add_option("--sigma", sigma_text, "Alphabet size");
  construct_cmd->add_option("--k", k_text, "Universality level");
  construct_cmd->add_option("--graph", graph_path, "Graph file (hcp-gadget)");

  std::string dot_input;
  auto* dot_cmd = app.add_subcommand("export-dot", "Print a machine or graph as Graphviz DOT");
  dot_cmd->add_option("input", dot_input, "Machine or graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (decide_cmd->parsed()) {
    if (batch) {
      if (!decide_req.input.empty()) {
        err << "error: give either an input file or --batch\n";
        return kExitInput;
      }
      int code = kExitOk;
      int failure = guarded(err, [&] { code = run_batch(*batch, decide_req, out, err); });
      return failure != kExitOk ? failure : code;
    }
    return guarded(err, [&] {
      if (decide_req.input.empty()) throw InputError("decide needs an input file");
      if (decide_req.problem.empty()) throw InputError("decide needs --problem");
      emit(out, decide(decide_req), decide_req.format, std::nullopt);
    });
  }

  if (construct_cmd->parsed()) {
    return guarded(err, [&] {
      auto sigma_of = [&]() -> std::optional<Alphabet> {
        if (sigma_text.empty()) return std::nullopt;
        if (!std::all_of(sigma_text.begin(), sigma_text.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            sigma_text.size() > 9 || std::stoul(sigma_text) == 0) {
          throw InputError("--sigma must be a positive integer");
        }
        return Alphabet{static_cast<std::uint32_t>(std::stoul(sigma_text))};
      };
      if (what == "supersequence-dfa") {
        if (!c_word && !c_word_ints) throw InputError("supersequence-dfa needs --word or --word-ints");
        auto given = sigma_of();
        Word w = parse_word_arg(c_word, c_word_ints, given.value_or(Alphabet{c_word ? 26u : 1u << 20}));
        Alphabet sigma = given ? *given : Alphabet{std::max<Letter>(1, w.empty() ? 1 : *std::max_element(w.begin(), w.end()))};
        out << print_machine(Machine{supersequence_dfa(w, sigma)});
      } else if (what == "k-universal-dfa") {
        auto sigma = sigma_of();
        if (!sigma) throw InputError("k-universal-dfa needs --sigma");
        if (k_text.empty()) throw InputError("k-universal-dfa needs --k");
        out << print_machine(Machine{k_universal_dfa(*sigma, parse_k(k_text))});
      } else if (what == "hcp-gadget") {
        if (graph_path.empty()) throw InputError("hcp-gadget needs --graph");
        MachineFile file = parse_machine(read_file(graph_path), InputKind::graph);
        HcpInstance h = hcp_gadget(std::get<Graph>(file.machine));
        MachineFile result{{" query: " + format_word(h.query, h.tfa.alphabet())}, h.tfa};
        out << print_machine(result);
      } else {
        if (construct_input.empty()) throw InputError("tfa-to-pda needs an input file");
        MachineFile file = parse_machine(read_file(construct_input), InputKind::tfa);
        out << print_machine(Machine{binary_tfa_to_pda(std::get<Tfa>(file.machine))});
      }
    });
  }

  return guarded(err, [&] { out << to_dot(parse_machine(read_file(dot_input)).machine); });
}

}  // namespace subseq
