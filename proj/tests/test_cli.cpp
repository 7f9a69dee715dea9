#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "corpus.hpp"
#include "subseq/cli.hpp"

using namespace subseq;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"subseq-cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
  return {code, o.str(), e.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}
}  // namespace

TEST_CASE("decide verdicts") {
  CHECK(cli({"decide", corpus::path("anbn.cfg"), "--problem", "forall-k-universal", "--k", "1"}).out == "YES\n");
  CHECK(cli({"decide", corpus::path("anbn.cfg"), "--problem", "exists-subseq", "--word", "ba"}).out == "NO\n");
  CHECK(cli({"decide", corpus::path("g1.cfg"), "--problem", "infinity-universal"}).out == "YES\n");
  CHECK(cli({"decide", corpus::path("ab_star.nfa"), "--problem", "exists-subseq", "--word-ints", "1,1"}).out ==
        "YES\n");
  CHECK(cli({"decide", corpus::path("even_a.dfa"), "--problem", "forall-k-universal", "--k", "1"}).out == "NO\n");
  CHECK(cli({"decide", corpus::path("shuffle.tfa"), "--problem", "exists-subseq", "--word", "ab"}).out == "YES\n");
  CHECK(cli({"decide", corpus::path("empty.cfg"), "--problem", "forall-subseq", "--word", "ab"}).out == "YES\n");
}

TEST_CASE("json output") {
  Run r = cli({"decide", corpus::path("anbn.cfg"), "--problem", "exists-k-universal", "--k", "2", "--format",
               "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == false);
  CHECK(j["detail"].is_object());
  CHECK(j["detail"]["max_universality"] == "1");
}

TEST_CASE("input errors exit with 2") {
  Run missing = cli({"decide", corpus::path("nope.cfg"), "--problem", "exists-subseq", "--word", "a"});
  CHECK(missing.code == 2);
  Run tfa = cli({"decide", corpus::path("shuffle.tfa"), "--problem", "forall-subseq", "--word", "a"});
  CHECK(tfa.code == 2);
  CHECK(tfa.err.find("open") != std::string::npos);
  Run binary = cli({"decide", corpus::path("swap.tfa"), "--problem", "infinity-universal"});
  CHECK(binary.code == 2);
  CHECK(binary.err.find("decidable") != std::string::npos);
  CHECK(cli({"decide", corpus::path("anbn.cfg"), "--problem", "exists-k-universal", "--k", "0"}).code == 2);
  CHECK(cli({"decide", corpus::path("anbn.cfg"), "--problem", "exists-subseq", "--word", "abc"}).code == 2);
  CHECK(cli({"decide", corpus::path("anbn.cfg"), "--problem", "nonsense"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  Run csl = cli({"decide", corpus::path("rejected/csl_lhs.cfg"), "--problem", "exists-subseq", "--word", "a"});
  CHECK(csl.code == 2);
  CHECK(csl.err.find("undecidable") != std::string::npos);
  CHECK(csl.err.find("line 4") != std::string::npos);
}

TEST_CASE("resource errors exit with 3") {
  Run r = cli({"decide", corpus::path("shuffle.tfa"), "--problem", "exists-subseq", "--word", "acbdacbd", "--budget",
               "5"});
  CHECK(r.code == 3);
}

TEST_CASE("constructions") {
  Run s = cli({"construct", "supersequence-dfa", "--word", "ab"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("dfa 2 3\n", 0) == 0);
  CHECK(cli({"construct", "k-universal-dfa", "--sigma", "2", "--k", "1"}).out.rfind("dfa 2 4\n", 0) == 0);
  Run h = cli({"construct", "hcp-gadget", "--graph", corpus::path("k3.graph")});
  CHECK(h.out.rfind("# query: ", 0) == 0);
  CHECK(h.out.find("tfa 5 38\n") != std::string::npos);
  CHECK(h.out == cli({"construct", "hcp-gadget", "--graph", corpus::path("k3.graph")}).out);
  Run p = cli({"construct", "tfa-to-pda", corpus::path("swap.tfa")});
  CHECK(p.out.rfind("pda 2 4\n", 0) == 0);
}

TEST_CASE("dot export") {
  Run s = cli({"construct", "supersequence-dfa", "--word", "ab"});
  const std::string path = "subseq_test_ab.dfa";
  std::ofstream(path) << s.out;
  Run d = cli({"export-dot", path});
  std::remove(path.c_str());
  CHECK(count(d.out, " [shape=circle") + count(d.out, " [shape=doublecircle") == 3);
  Run fig = cli({"export-dot", corpus::path("shuffle.tfa")});
  CHECK(count(fig.out, " [shape=circle") + count(fig.out, " [shape=doublecircle") == 4);
  Run nf = cli({"export-dot", corpus::path("no_final.nfa")});
  CHECK(nf.code == 0);
  CHECK(count(nf.out, "doublecircle") == 0);
}

TEST_CASE("batch mode keys output by id") {
  const std::string path = "subseq_test_batch.txt";
  std::ofstream(path) << "first " << corpus::path("anbn.cfg") << " --problem exists-subseq --word ab\n"
                      << "second " << corpus::path("anbn.cfg") << " --problem exists-subseq --word ba\n";
  Run r = cli({"decide", "--batch", path, "--format", "json"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<nlohmann::json> got;
  while (std::getline(lines, line)) got.push_back(nlohmann::json::parse(line));
  REQUIRE(got.size() == 2);
  CHECK(got[0]["id"] == "first");
  CHECK(got[0]["verdict"] == true);
  CHECK(got[1]["id"] == "second");
  CHECK(got[1]["verdict"] == false);
}
