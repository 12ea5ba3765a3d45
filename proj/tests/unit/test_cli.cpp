#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "smoothlab_cli_test";

int run(const std::string& args) {
  const std::string cmd = std::string(SMOOTHLAB_CLI) + " " + args + " > " + (kDir / "log.txt").string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write(const std::string& name, const std::string& text) {
  fs::create_directories(kDir);
  const auto p = kDir / name;
  std::ofstream(p) << text;
  return p;
}

const char* kSeparation = R"({"kind": "regret", "T": 64, "trials": 20,
  "domain": {"kind": "uniform_unit"}, "class": {"family": "separation"},
  "adversary": {"kind": "separation"}, "learner": "prefix_guess"})";

}  // namespace

TEST_CASE("passing run exits 0 and writes the report") {
  const auto cfg = write("pass.json", kSeparation);
  CHECK(run("run-regret --config " + cfg.string() + " --out " + (kDir / "pass").string()) == 0);
  CHECK(fs::exists(kDir / "pass" / "report.json"));
  CHECK(fs::exists(kDir / "pass" / "regret.csv"));
}

TEST_CASE("a failing flag exits 1") {
  std::string text = kSeparation;
  text.insert(text.size() - 1, R"(, "thresholds": {"lower_fraction": 0.99})");
  const auto cfg = write("fail.json", text);
  CHECK(run("run-regret --config " + cfg.string() + " --out " + (kDir / "fail").string()) == 1);
}

TEST_CASE("configuration errors exit 2") {
  CHECK(run("run-regret --config " + write("bad.json", R"({"kind": "regret", "trials": 0})").string()) == 2);
  CHECK(run("run-regret --config " + write("broken.json", "{").string()) == 2);
  CHECK(run("run-regret --config " + write("kind.json", R"({"kind": "pac_curve"})").string()) == 2);
  CHECK(run("run-regret --config " + (kDir / "missing.json").string()) == 2);
  CHECK(run("no-such-command") == 2);
}

TEST_CASE("dumped bundles replay") {
  const auto cfg = write("dump.json", kSeparation);
  const auto out = kDir / "dump";
  REQUIRE(run("run-regret --config " + cfg.string() + " --dump-bundles 1 --out " + out.string()) == 0);
  const auto bundle = out / "bundles" / "trial_T64_0.json";
  REQUIRE(fs::exists(bundle));
  CHECK(run("replay " + bundle.string()) == 0);
}

TEST_CASE("compression and entropy subcommands") {
  CHECK(run("verify-compression --trials 100 --seed 3 --out " + (kDir / "comp").string()) == 0);
  const auto cfg = write("entropy.json", R"({"kind": "entropy_suite", "lemma_instances": 3})");
  CHECK(run("entropy-suite --config " + cfg.string() + " --out " + (kDir / "ent").string()) == 0);
}
