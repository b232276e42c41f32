#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qtk/io.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / ("qtk_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

Run run(const std::string& args, const std::string& env = "") {
  auto dir = scratch();
  const std::string out = (dir / "out").string(), err = (dir / "err").string();
  const std::string cmd = env + " \"" QTK_CLI "\" " + args + " >\"" + out + "\" 2>\"" + err + "\"";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("present and report") {
    Run r = run("present --example kite");
    CHECK(r.code == 0);
    CHECK(r.out.find("level set of the moment map (2 equations)") != std::string::npos);
    CHECK(r.out.find("|z1|^2 + (φ - 1)|z3|^2 - (φ - 1)|z4|^2 = 2 - φ") != std::string::npos);
    CHECK(r.out.find("identity component N0") != std::string::npos);
    Run j = run("present --example quasisphere --format json");
    CHECK(j.code == 0);
    CHECK(qtk::io::presentation_from_json(qtk::io::parse_document(j.out)).level_rows.size() == 1);
    Run rep = run("report --example dodecahedron");
    CHECK(rep.code == 0);
    CHECK(rep.out.find("charts (20)") != std::string::npos);
    Run ch = run("charts --example kite --format json");
    CHECK(ch.code == 0);
    CHECK(qtk::io::charts_from_json(qtk::io::parse_document(ch.out)).size() == 4);
  }

  TEST_CASE("classification exit codes") {
    Run ok = run("classify --example dodecahedron");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("quasifold") != std::string::npos);
    Run oct = run("classify --example octahedron");
    CHECK(oct.code == 2);
    auto err = qtk::io::parse_document(oct.err);
    CHECK(err["kind"] == "refusal");
    CHECK(err["space_kind"] == "stratified-by-manifolds");
    CHECK(run("present --example icosahedron").code == 2);
    Run bad = run("present --example nosuchthing");
    CHECK(bad.code == 1);
    CHECK(qtk::io::parse_document(bad.err)["kind"] == "error");
    CHECK(run("present /nonexistent/file.json").code == 1);
  }

  TEST_CASE("validate every shipped data file") {
    for (const auto& entry : std::filesystem::directory_iterator(QTK_DATA_DIR)) {
      if (entry.path().extension() != ".json") continue;
      CAPTURE(entry.path().string());
      Run r = run("validate \"" + entry.path().string() + "\"");
      CHECK(r.code == 0);
      CHECK(qtk::io::parse_document(r.out)["ok"] == true);
    }
    auto dir = scratch();
    std::ofstream(dir / "broken.json") << "{\"schema_version\": 1, \"kind\": \"triple\"}";
    Run r = run("validate \"" + (dir / "broken.json").string() + "\"");
    CHECK(r.code == 1);
    CHECK(r.err.find("$") != std::string::npos);
  }

  TEST_CASE("cut") {
    Run r = run("cut --example kite --axis-of kite");
    CHECK(r.code == 0);
    auto j = qtk::io::parse_document(r.out);
    CHECK(j.contains("plus"));
    CHECK(j.contains("minus"));
    Run n = run("cut --example sphere --normal 1 --lambda 1/2");
    CHECK(n.code == 0);
    CHECK(run("cut --example sphere --normal 1 --lambda 7").code == 1);
    CHECK(run("cut --example sphere --normal 1/2 --lambda 1/4").code == 2);
  }

  TEST_CASE("tile and render") {
    auto dir = scratch();
    const std::string patch = (dir / "p2.json").string();
    Run t = run("tile --type p2 --steps 4 -o \"" + patch + "\"");
    CHECK(t.code == 0);
    Run svg = run("render \"" + patch + "\"");
    CHECK(svg.code == 0);
    CHECK(occurrences(svg.out, "<polygon") == 55);
    Run piped = run("tile --type p2 --steps 4 | \"" QTK_CLI "\" render");
    CHECK(piped.out == svg.out);
    Run star = run("render --star");
    CHECK(star.code == 0);
    CHECK(occurrences(star.out, "<line") == 5);
    Run coarse = run("render \"" + patch + "\"", "QTK_PRECISION=3");
    CHECK(coarse.out != svg.out);
    CHECK(coarse.out.size() < svg.out.size());
    CHECK(run("render \"" + patch + "\"").out == svg.out);
    Run paired = run("tile --type p3 --seed obtuse --mirror --steps 3 --pair rhombus");
    CHECK(paired.code == 0);
    CHECK(paired.out.find("thick_rhombus") != std::string::npos);
    std::ofstream(dir / "empty.json") << qtk::io::dump(qtk::io::to_json(qtk::Patch{}));
    Run empty = run("render \"" + (dir / "empty.json").string() + "\"");
    CHECK(empty.code == 0);
    CHECK(empty.out.find("viewBox=\"0 0 1 1\"") != std::string::npos);
    CHECK(occurrences(empty.out, "<polygon") == 0);
    CHECK(run("tile --type p9").code == 1);
  }
}
