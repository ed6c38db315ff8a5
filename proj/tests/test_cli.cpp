#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cwidth/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cwidth::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "cwidth_cli_test";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--no-such-flag"}).code == 2);
  CHECK(run({"reuleaux"}).code == 2);
  CHECK(run({"verify3d", "--quality", "5"}).code == 2);
  CHECK(run({"mesh-meissner", "--kind", "edge"}).code == 2);
  CHECK(run({"figure", "bogus", "--svg", (scratch() / "x.svg").string()}).code == 2);
}

TEST_CASE("reuleaux subcommand") {
  const Run r = run({"reuleaux", "--angles", "1.0471975512,1.0471975512,1.0471975512"});
  CHECK(r.code == 0);
  CHECK(r.out.find("area 0.704770923") != std::string::npos);
  CHECK(run({"reuleaux", "--angles", "1.5,1.0,0.6415926536"}).code == 2);
  CHECK(run({"reuleaux", "--angles", "1,abc,1"}).code == 2);
}

TEST_CASE("missing output directory") {
  const Run r = run({"reuleaux", "--angles", "1.0471975512,1.0471975512,1.0471975512", "--svg",
                     "/nonexistent/dir/out.svg"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify2d writes identical JSON for the same seed") {
  const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
  CHECK(run({"verify2d", "--seed", "3", "--json", a.string()}).code == 0);
  CHECK(run({"verify2d", "--seed", "3", "--json", b.string()}).code == 0);
  CHECK(slurp(a) == slurp(b));
  const auto j = nlohmann::json::parse(slurp(a));
  CHECK(j.is_object());
  CHECK(j.dump().find("arcbody.A(R)") != std::string::npos);
}

TEST_CASE("optimize2d CSV is deterministic and serial matches parallel") {
  const fs::path a = scratch() / "a.csv", b = scratch() / "b.csv", s = scratch() / "best.svg";
  const Run r1 = run({"optimize2d", "--n-grid", "32", "--starts", "3", "--seed", "4", "--csv", a.string(), "--svg",
                      s.string()});
  const Run r2 = run({"optimize2d", "--n-grid", "32", "--starts", "3", "--seed", "4", "--csv", b.string(), "--serial"});
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("start,iter,objective,step\n", 0) == 0);
  CHECK(slurp(s).find("<svg") != std::string::npos);
  CHECK(run({"optimize2d", "--n-grid", "30"}).code == 2);
}

TEST_CASE("optimize-angles") {
  const fs::path j = scratch() / "angles.json";
  const Run r = run({"optimize-angles", "--n", "3", "--starts", "2", "--json", j.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("area 0.704770923") != std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(j));
  CHECK(doc["angles"].size() == 3);
  CHECK(run({"optimize-angles", "--n", "4"}).code == 2);
}

TEST_CASE("mesh-meissner writes an OBJ") {
  const fs::path o = scratch() / "m.obj";
  const Run r = run({"mesh-meissner", "--kind", "face", "--quality", "8", "--obj", o.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("volume ") != std::string::npos);
  const std::string obj = slurp(o);
  CHECK(obj.rfind("v ", 0) == 0);
  CHECK(obj.find("\nf ") != std::string::npos);
}

TEST_CASE("figures are deterministic SVG") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"figure", "minkowski", "--shape", "T"},
        std::vector<std::string>{"figure", "skeleton", "--seed", "2"},
        std::vector<std::string>{"figure", "annulus", "--shape", "R"}}) {
    const fs::path a = scratch() / "f1.svg", b = scratch() / "f2.svg";
    auto a_args = args, b_args = args;
    a_args.insert(a_args.end(), {"--svg", a.string()});
    b_args.insert(b_args.end(), {"--svg", b.string()});
    CHECK(run(a_args).code == 0);
    CHECK(run(b_args).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find("</svg>") != std::string::npos);
  }
}

TEST_CASE("verify3d at minimum quality") {
  const fs::path j = scratch() / "v3.json";
  const Run r = run({"verify3d", "--quality", "20", "--json", j.string()});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(slurp(j)).is_object());
}
