#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_payload = "") {
  std::string cmd;
  if (stdin_payload.empty()) {
    cmd = g_cli + " " + args + " 2>/dev/null";
  } else {
    std::string tmp = "/tmp/laminar_cli_stdin.txt";
    FILE* f = std::fopen(tmp.c_str(), "wb");
    std::fwrite(stdin_payload.data(), 1, stdin_payload.size(), f);
    std::fclose(f);
    cmd = g_cli + " " + args + " < " + tmp + " 2>/dev/null";
  }
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("parse prints the expression tree") {
  auto r = run("parse \"1/3 + -1/3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("tangle-expression v1") == 0);
  CHECK(r.out.find("mirror") != std::string::npos);
}

TEST_CASE("eval emits a canonical diagram document and is a round-trip fixpoint") {
  auto first = run("eval \"1/3 + -1/3\"");
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("tangle-diagram v1") == 0);
  auto again = run("eval -", first.out);
  CHECK(again.exit_code == 0);
  CHECK(again.out == first.out);
}

TEST_CASE("invariants of the completed twist knot") {
  auto r = run("invariants \"N(1/3 + -1/3 + @found6_1)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("determinant 9") != std::string::npos);
  CHECK(r.out.find("components 1") != std::string::npos);
  CHECK(r.out.find("jones") != std::string::npos);
}

TEST_CASE("certify the opposite pattern at n=1") {
  auto r = run("certify --n 1 --pattern opposite");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict persistently-laminar-knot") != std::string::npos);
}

TEST_CASE("a rejected certificate is a successful run") {
  auto r = run("certify --n 1 --pattern arcs:0-1,2-3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict rejected") != std::string::npos);
  CHECK(r.out.find("check side_crossing violated") != std::string::npos);
}

TEST_CASE("certify with an inserted tangle") {
  auto r = run("certify --n 1 \"--pattern=arcs:1-0,2-3;insert:0,1=@found6_1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict persistently-laminar-knot") != std::string::npos);
}

TEST_CASE("witness subcommand verifies against the torus reference") {
  auto r = run("witness 1/3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verified 1") != std::string::npos);
  auto r2 = run("witness 2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("tangle 1/1") != std::string::npos);
}

TEST_CASE("fixture subcommand emits the open-case certificate") {
  auto r = run("fixture wu_fig16");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict unknown") != std::string::npos);
  auto bad = run("fixture nonsense");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("family emits surface, template, and labeling") {
  auto r = run("family --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("branched-surface v1") != std::string::npos);
  CHECK(r.out.find("tangle-diagram v1") != std::string::npos);
  CHECK(r.out.find("endpoint 0 side left") != std::string::npos);
  auto c = run("family --n 1 --complete rolfsen_6_1 --budget 4");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("found -1/1") != std::string::npos);
}

TEST_CASE("render produces svg, with the text fallback for fixtures") {
  auto r = run("render --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("<svg") == 0);
  auto expr = run("render \"N(1/3 + -1/3)\"");
  CHECK(expr.exit_code == 0);
  CHECK(expr.out.find("<svg") == 0);
  auto fallback_needed = run("render \"@wu_fig16\"");
  CHECK(fallback_needed.exit_code == 1);
  auto fallback = run("render \"@wu_fig16\" --format text");
  CHECK(fallback.exit_code == 0);
  CHECK(fallback.out.find("tangle-diagram v1") == 0);
}

TEST_CASE("usage and domain errors use the documented exit codes") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("parse \"1/3 +\"").exit_code == 1);
  CHECK(run("invariants \"5/0\"").exit_code == 1);
  CHECK(run("certify --n 1 --pattern arcs:0-9").exit_code == 1);
}

TEST_CASE("identical invocations give byte-identical output") {
  for (const char* cmd : {"eval \"8/3\"", "certify --n 2 --pattern opposite",
                          "family --n 1", "witness 1/2", "render --n 1"}) {
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-laminar-cli>\n");
    return 1;
  }
  g_cli = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
