#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "coxeter/cli.hpp"

using namespace coxeter;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path = std::string("cli_test_") + std::to_string(counter++) + ".cox";
    std::ofstream f(path);
    f << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* a2_text = "n 2\nm 1 2 3\norder 1 2\n";
const char* a3_text = "n 3\nm 1 2 3\nm 2 3 3\norder 1 2 3\n";
const char* dih_text = "n 2\nm 1 2 inf\norder 1 2\n";

bool has_line(const std::string& out, const std::string& line) {
  std::istringstream in(out);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("system file parsing") {
  TempFile f(a3_text);
  cli::ParsedSystem ps = cli::parse_system_file(f.path);
  CHECK(ps.graph.rank() == 3);
  CHECK(ps.graph.adjacent(0, 1));
  CHECK(!ps.graph.adjacent(0, 2));  // unlisted pairs default to 2
  REQUIRE(ps.order.has_value());
  CHECK(ps.order->seq == std::vector<Vertex>{0, 1, 2});

  // comments and blank lines
  CHECK_NOTHROW(cli::parse_system_text("# header\nn 1\n\norder 1  # c = s1\n"));

  auto fails_at = [](const std::string& text, const char* fragment) {
    try {
      cli::parse_system_text(text);
      return false;
    } catch (const error& e) {
      return std::string(e.what()).find(fragment) != std::string::npos;
    }
  };
  CHECK(fails_at("m 1 2 3\nn 2\n", "line 1"));
  CHECK(fails_at("n 2\nm 1 2 2\n", "line 2"));
  CHECK(fails_at("n 2\nm 1 2 3\nm 2 1 4\n", "line 3"));
  CHECK(fails_at("n 2\nm 1 7 3\n", "line 2"));
  CHECK(fails_at("n 2\nm 1 2 3\norder 1\n", "order"));
  CHECK(fails_at("n 2\nm 1 2 3\nq\n", "unknown directive"));
}

TEST_CASE("word literals round trip") {
  TempFile f(a3_text);
  cli::ParsedSystem ps = cli::parse_system_file(f.path);
  TraceWord w = cli::parse_word(ps.graph, "1 2 1");
  CHECK(w.letters() == std::vector<Vertex>{0, 1, 0});
  CHECK(cli::parse_word(ps.graph, "").empty());
  std::string printed = cli::format_word(ps.graph, w);
  CHECK(trace_equal(ps.graph, cli::parse_word(ps.graph, printed), w));
  CHECK_THROWS_AS(cli::parse_word(ps.graph, "1 4"), error);
  CHECK_THROWS_AS(cli::parse_word(ps.graph, "x"), error);
}

TEST_CASE("projective command matches the worked A2 values") {
  TempFile f(a2_text);
  RunResult r = run({"projective", "--system", f.path});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "s1=1 0"));
  CHECK(has_line(r.out, "s2=1 1"));
}

TEST_CASE("finite probe against both the probe and the oracle") {
  TempFile a2f(a2_text);
  RunResult fin = run({"finite", "--system", a2f.path, "--rmax", "10"});
  CHECK(fin.code == 0);
  CHECK(has_line(fin.out, "result=finite"));
  CHECK(has_line(fin.out, "oracle=finite"));

  TempFile df(dih_text);
  RunResult unk = run({"finite", "--system", df.path, "--rmax", "50"});
  CHECK(unk.code == 0);
  CHECK(has_line(unk.out, "result=unknown"));
  CHECK(has_line(unk.out, "oracle=infinite"));
}

TEST_CASE("reduced command") {
  TempFile f(a2_text);
  RunResult r1 = run({"reduced", "1 1", "--system", f.path});
  CHECK(r1.code == 0);
  CHECK(has_line(r1.out, "result=not-reduced"));
  RunResult r2 = run({"reduced", "1 2 1", "--system", f.path});
  CHECK(has_line(r2.out, "result=reduced"));
}

TEST_CASE("nf, admissible, meet, join, principal") {
  TempFile f(a2_text);
  RunResult nf = run({"nf", "1 2 1", "--system", f.path});
  CHECK(has_line(nf.out, "word=1 2 1"));
  CHECK(has_line(nf.out, "foata=1|2|1"));
  CHECK(has_line(nf.out, "length=3"));

  CHECK(has_line(run({"admissible", "1", "--system", f.path}).out,
                 "admissible=true"));
  CHECK(has_line(run({"admissible", "2", "--system", f.path}).out,
                 "admissible=false"));

  RunResult meet = run({"meet", "1", "2 1", "--system", f.path});
  CHECK(has_line(meet.out, "word=1"));
  RunResult join = run({"join", "1", "2 1", "--system", f.path});
  CHECK(has_line(join.out, "word=2 1"));

  RunResult prin = run({"principal", "2", "1", "--system", f.path});
  CHECK(has_line(prin.out, "word=1 2 1"));
  CHECK(has_line(prin.out, "blocks=1|2 1"));
}

TEST_CASE("walpha and wpsi") {
  TempFile f(a2_text);
  RunResult wa = run({"walpha", "0 1", "--system", f.path});
  CHECK(wa.code == 0);
  CHECK(has_line(wa.out, "size=2"));
  CHECK(has_line(wa.out, "apex=1"));
  CHECK(has_line(wa.out, "word=1 2 1"));

  RunResult wp = run({"wpsi", "1 0; 0 1", "--system", f.path});
  CHECK(wp.code == 0);
  CHECK(has_line(wp.out, "word=1 2 1"));
  CHECK(has_line(wp.out, "independent=false"));
}

TEST_CASE("preproj table on the infinite dihedral system") {
  TempFile f(dih_text);
  RunResult r = run({"preproj", "--system", f.path, "--rmax", "2"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "root=1 0 size=1 apex=1 word=\"1\""));
  CHECK(has_line(r.out, "root=2 1 size=1 apex=2 word=\"2 1\""));
  CHECK(has_line(r.out, "root=3 2 size=2 apex=1 word=\"1 2 1\""));
  CHECK(has_line(r.out, "root=4 3 size=2 apex=2 word=\"2 1 2 1\""));
}

TEST_CASE("weak-leq") {
  TempFile f(a2_text);
  CHECK(has_line(run({"weak-leq", "1", "2 1", "--system", f.path}).out,
                 "leq=true"));
  CHECK(has_line(run({"weak-leq", "2", "2 1", "--system", f.path}).out,
                 "leq=false"));
}

TEST_CASE("catalog emits a parseable system file") {
  RunResult r = run({"catalog", "B", "3"});
  CHECK(r.code == 0);
  cli::ParsedSystem ps = cli::parse_system_text(r.out);
  CHECK(ps.graph.rank() == 3);
  CHECK(ps.graph.label(1, 2) == CoxEntry::finite(4));
  REQUIRE(ps.order.has_value());

  RunResult dih = run({"catalog", "I2", "inf"});
  CHECK(dih.out.find("inf") != std::string::npos);
}

TEST_CASE("exit codes per failure class") {
  TempFile bad("n 2\nm 1 2 oops\n");
  CHECK(run({"validate", "--system", bad.path}).code == 2);

  TempFile disc("n 2\n");  // A1 x A1, reducible
  RunResult r = run({"validate", "--system", disc.path});
  CHECK(r.code == 3);
  CHECK(r.err.find("Disconnected") != std::string::npos);

  TempFile a2f(a2_text);
  // meet of non-admissible input words
  CHECK(run({"meet", "2", "1", "--system", a2f.path}).code == 3);
  // missing order line for a c-dependent command
  TempFile no_order("n 2\nm 1 2 3\n");
  CHECK(run({"projective", "--system", no_order.path}).code == 3);

  TempFile df(dih_text);
  // alpha_2 is never negated: bound exceeded
  RunResult wa = run({"walpha", "0 1", "--system", df.path, "--rmax", "30"});
  CHECK(wa.code == 5);
  CHECK(wa.err.find("NotPreprojectiveWithinBound") != std::string::npos);

  CHECK(run({"nosuchcommand"}).code == 2);
  CHECK(run({"catalog", "Z"}).code == 3);
}

TEST_CASE("json output is stable") {
  TempFile f(a2_text);
  RunResult r = run({"projective", "--system", f.path, "--json"});
  CHECK(r.code == 0);
  std::string expected =
      std::string("{\"command\":\"projective\",\"inputs\":{\"system\":\"") +
      f.path +
      "\"},\"result\":{\"s1\":[1,0],\"s2\":[1,1]},\"diagnostics\":{}}\n";
  CHECK(r.out == expected);

  RunResult wa = run({"walpha", "0 1", "--system", f.path, "--json"});
  std::string expected_wa =
      std::string("{\"command\":\"walpha\",\"inputs\":{\"system\":\"") +
      f.path +
      "\",\"root\":\"0 1\"},\"result\":{\"size\":2,\"apex\":1,\"word\":\"1 2 "
      "1\"},\"diagnostics\":{\"rmax\":12}}\n";
  CHECK(wa.out == expected_wa);
}

TEST_CASE("printed words re-parse to equal traces") {
  TempFile f(a3_text);
  cli::ParsedSystem ps = cli::parse_system_file(f.path);
  for (const char* lit : {"", "1", "3 1", "1 3", "1 2 1", "3 2 1 2", "2 1 3 2 1"}) {
    TraceWord w = cli::parse_word(ps.graph, lit);
    std::string printed = cli::format_word(ps.graph, w);
    CHECK(trace_equal(ps.graph, cli::parse_word(ps.graph, printed), w));
  }
}
