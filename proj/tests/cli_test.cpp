// Drives the installed CLI binary end to end through a shell.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("watset-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) {
    fs::path p = path / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
  std::string at(const std::string& name) { return (path / name).string(); }
  static inline int counter = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int run(const std::string& args, const std::string& stdout_path = "/dev/null",
        const std::string& stderr_path = "/dev/null") {
  std::string command = std::string(WATSET_CLI_PATH) + " " + args + " > " +
                        stdout_path + " 2> " + stderr_path;
  int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

const char* kHubPairs =
    "hub\talpha\nhub\tbeta\nalpha\tbeta\n"
    "hub\tgamma\nhub\tdelta\ngamma\tdelta\n";

}  // namespace

TEST_CASE("--version reports toolkit and format versions") {
  TempDir dir;
  std::string out = dir.at("out.txt");
  CHECK(run("--version", out) == 0);
  CHECK(slurp(out) == "watset 0.1.0 (formats 1)\n");
}

TEST_CASE("bad flags exit with 2") {
  TempDir dir;
  std::string pairs = dir.file("pairs.tsv", kHubPairs);
  CHECK(run("cluster --algorithm cpm --k 1 --input " + pairs) == 2);
  CHECK(run("cluster --algorithm nope --input " + pairs) == 2);
  CHECK(run("cluster --input " + pairs) == 2);  // missing --algorithm
  CHECK(run("") == 2);                          // missing subcommand
  CHECK(run("eval --predicted x") == 2);        // missing --gold
  // sim without embeddings is a flag error
  CHECK(run("build-graph --weighting sim --input " + pairs) == 2);
}

TEST_CASE("runtime failures exit with 1 and name the error") {
  TempDir dir;
  std::string err = dir.at("err.txt");
  CHECK(run("eval --predicted /nonexistent.tsv --gold /nonexistent.tsv",
            "/dev/null", err) == 1);
  CHECK(slurp(err).find("IoError") != std::string::npos);

  std::string empty = dir.file("empty.tsv", "# empty\n");
  CHECK(run("cluster --algorithm cw --input " + empty, "/dev/null", err) == 1);
  CHECK(slurp(err).find("EmptyInput") != std::string::npos);
}

TEST_CASE("eval prints the report row; self-evaluation is all ones") {
  TempDir dir;
  std::string synsets = dir.file("synsets.tsv", "a\tb\nc\td\te\n");
  std::string out = dir.at("row.txt");
  REQUIRE(run("eval --predicted " + synsets + " --gold " + synsets, out) == 0);
  std::istringstream row(slurp(out));
  double p, r, f1;
  long long pred, gold, tp, pruned;
  row >> p >> r >> f1 >> pred >> gold >> tp >> pruned;
  CHECK(p == 1.0);
  CHECK(r == 1.0);
  CHECK(f1 == 1.0);
  CHECK(pred == 4);
  CHECK(gold == 4);
  CHECK(tp == 4);
  CHECK(pruned == 0);
}

TEST_CASE("build-graph materializes the scheme") {
  TempDir dir;
  std::string pairs = dir.file("pairs.tsv", "a\tb\nb\ta\nb\tc\n");
  std::string out = dir.at("edges.tsv");
  REQUIRE(run("build-graph --weighting count --input " + pairs +
              " --output " + out) == 0);
  CHECK(slurp(out) == "a\tb\t2\nb\tc\t1\n");
}

TEST_CASE("watset end to end recovers the overlapping cliques") {
  TempDir dir;
  std::string pairs = dir.file("pairs.tsv", kHubPairs);
  std::string out = dir.at("synsets.tsv");
  std::string senses = dir.at("senses.tsv");
  std::string sense_graph = dir.at("sense-graph.tsv");
  REQUIRE(run("watset --local cw --global cw --weighting ones --input " +
              pairs + " --output " + out + " --dump-senses " + senses +
              " --dump-sense-graph " + sense_graph) == 0);
  // canonical order: equal sizes, lexicographic members
  CHECK(slurp(out) == "alpha\tbeta\thub\ndelta\tgamma\thub\n");
  CHECK(slurp(senses).find("hub\t1\t") != std::string::npos);
  CHECK(!slurp(sense_graph).empty());

  std::string labeled = dir.at("labeled.tsv");
  REQUIRE(run("watset --sense-labels --input " + pairs + " --output " +
              labeled) == 0);
  CHECK(slurp(labeled) ==
        "alpha#0\tbeta#0\thub#0\ndelta#0\tgamma#0\thub#1\n");
}

TEST_CASE("identical configuration writes byte-identical outputs") {
  TempDir dir;
  std::string pairs = dir.file("pairs.tsv", kHubPairs);
  std::string first = dir.at("first.tsv");
  std::string second = dir.at("second.tsv");
  std::string flags = "watset --local mcl --global cw --seed 42 --input " +
                      pairs;
  REQUIRE(run(flags + " --output " + first) == 0);
  REQUIRE(run(flags + " --output " + second) == 0);
  CHECK(slurp(first) == slurp(second));
  CHECK(!slurp(first).empty());
}

TEST_CASE("cluster runs every algorithm") {
  TempDir dir;
  std::string pairs = dir.file("pairs.tsv", kHubPairs);
  for (std::string algorithm : {"cw", "mcl", "maxmax", "eco", "cpm"}) {
    std::string out = dir.at(algorithm + ".tsv");
    std::string extra;
    if (algorithm == "eco") extra = " --runs 5";
    if (algorithm == "cpm") extra = " --k 3 --pad-singletons";
    REQUIRE(run("cluster --algorithm " + algorithm + extra + " --input " +
                pairs + " --output " + out) == 0);
    CHECK(!slurp(out).empty());
  }
}

TEST_CASE("config files supply defaults, flags win") {
  TempDir dir;
  std::string pairs = dir.file("pairs.tsv", "a\tb\nb\ta\n");
  std::string config = dir.file("run.conf",
                                "[build-graph]\nweighting=count\n");
  std::string out = dir.at("from-config.tsv");
  REQUIRE(run("--config " + config + " build-graph --input " + pairs +
              " --output " + out) == 0);
  CHECK(slurp(out) == "a\tb\t2\n");

  // an explicit flag overrides the config value
  std::string overridden = dir.at("overridden.tsv");
  REQUIRE(run("--config " + config + " build-graph --weighting ones --input " +
              pairs + " --output " + overridden) == 0);
  CHECK(slurp(overridden) == "a\tb\t1\n");
}
