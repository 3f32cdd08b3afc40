// End-to-end checks of the command line tool: verdict exit codes,
// byte-stable --json output, and the file formats round-tripping through
// stone/bistone.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef LPWB_TOOL
#error "LPWB_TOOL must point at the built binary"
#endif
#ifndef LPWB_CORPUS
#error "LPWB_CORPUS must point at the corpus directory"
#endif

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LPWB_TOOL) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& rel) { return std::string(LPWB_CORPUS) + "/" + rel; }

} // namespace

TEST_CASE("parse prints the reading and rejects bad input with exit 2") {
  RunResult ok = run("parse \"x:p | y:p -> (x+y):p\"");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("(x + y):p") != std::string::npos);
  CHECK(run("parse --as term \"a*b*c\"").code == 0);
  CHECK(run("parse \"x +\"").code == 2);
  CHECK(run("parse --system lp \"x = y\"").code == 2);
  CHECK(run("parse --system lpb \"x = y\"").code == 0);
  CHECK(run("nosuchcommand").code == 2);
}

TEST_CASE("check: example derivations and per-step reports") {
  RunResult plain = run("check " + corpus("proofs/identity.lpf"));
  CHECK(plain.code == 0);
  CHECK(plain.out.find("axiom PL4") != std::string::npos);

  RunResult annotated =
      run("check " + corpus("proofs/identity_justified.lpf") + " --cs " + corpus("cs/abc.cs"));
  CHECK(annotated.code == 0);

  // Without the CS the same file fails with exit 1.
  CHECK(run("check " + corpus("proofs/identity_justified.lpf")).code == 1);
  CHECK(run("check /no/such/file.lpf").code == 2);
}

TEST_CASE("internalize emits the certified proof") {
  RunResult r = run("internalize " + corpus("proofs/identity.lpf") + " --cs " + corpus("cs/abc.cs") +
                    " --strict --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("a*b*c") != std::string::npos);
  CHECK(r.out.find("\"steps\": 5") != std::string::npos);
}

TEST_CASE("lift binds hypotheses to proof variables") {
  RunResult r = run("lift " + corpus("proofs/lift_demo.lpf") + " --total --bind x,y");
  CHECK(r.code == 0);
  CHECK(r.out.find("term: y*x") != std::string::npos);
  CHECK(r.out.find("hyp: x:p") != std::string::npos);
}

TEST_CASE("termeq verdicts and fuzz sweep") {
  CHECK(run("termeq \"x+y\" \"y+x\"").code == 0);
  CHECK(run("termeq \"x*y\" \"y*x\"").code == 1);
  CHECK(run("termeq \"x . (y + z)\" \"(x . y) + (x . z)\"").code == 0);
  CHECK(run("termeq --fuzz 200 --seed-rng 7").code == 0);
}

TEST_CASE("eval and refute against the bundled models") {
  CHECK(run("eval \"c:(p & p -> p)\" --cs " + corpus("cs/single_c.cs")).code == 0);
  CHECK(run("eval \"c:top\" --cs " + corpus("cs/single_c.cs")).code == 1);
  CHECK(run("eval \"x:p\" --val p=1").code == 1);

  RunResult refuted =
      run("refute \"(a*b)*c : (bot -> q)\" --cs " + corpus("cs/abc.cs"));
  CHECK(refuted.code == 1);
  CHECK(refuted.out.find("countermodel") != std::string::npos);
  CHECK(run("refute \"x:p -> p\"").code == 0);
}

TEST_CASE("algebra verify across the bundled kinds") {
  for (const std::string name :
       {"minimal_binary.alg", "minimal_fulllp.alg", "scrambled4.alg", "hlp_identity.alg",
        "regular_zero.alg", "lpb_small.alg", "poly_small.alg"}) {
    RunResult r = run("algebra verify " + corpus("algebras/" + name));
    CAPTURE(name);
    CAPTURE(r.out);
    CHECK(r.code == 0);
  }
}

TEST_CASE("algebra stone / transport / bistone round trips") {
  std::string img = std::string(LPWB_CORPUS) + "/../build/stone_image.alg";
  RunResult s = run("algebra stone " + corpus("algebras/scrambled4.alg") + " --out " + img);
  CHECK(s.code == 0);
  CHECK(run("algebra verify " + img).code == 0);

  std::string wfile = std::string(LPWB_CORPUS) + "/../build/witness.txt";
  // Identity witness over the one-atom powerset.
  FILE* f = fopen(wfile.c_str(), "w");
  REQUIRE(f);
  fputs("0 -> 0\n1 -> 1\n", f);
  fclose(f);
  CHECK(run("algebra transport " + corpus("algebras/minimal_fulllp.alg") + " --witness " + wfile)
            .code == 0);

  std::string bimg = std::string(LPWB_CORPUS) + "/../build/bistone_image.alg";
  CHECK(run("algebra bistone " + corpus("algebras/lpb_small.alg") + " --out " + bimg).code == 0);
  CHECK(run("algebra verify " + bimg).code == 0);
  CHECK(run("algebra bistone " + corpus("algebras/poly_small.alg")).code == 0);
}

TEST_CASE("pralg builds the table and lifts with --bang") {
  RunResult r = run("pralg " + corpus("pralg_entries.txt") + " --bang 3");
  CAPTURE(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("boolean law violations: 0") != std::string::npos);
  CHECK(r.out.find("bang:") != std::string::npos);
}

TEST_CASE("identical inputs give byte-identical --json output") {
  std::string cmd = "refute \"(a*b)*c : (bot -> q)\" --cs " + corpus("cs/abc.cs") + " --json";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.out == b.out);
  CHECK(a.code == 1);

  std::string cmd2 = "check " + corpus("proofs/iff_pp.lpf") + " --json";
  CHECK(run(cmd2).out == run(cmd2).out);
}
