// Exercises the shared-library surface alone: everything goes through
// watset.h, no core headers.
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <unistd.h>
#include <vector>

#include "watset.h"

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("watset-capi-" + std::to_string(::getpid()) + "-" +
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
  static inline int counter = 0;
};

std::set<std::set<std::string>> clusters_of(const watset_clustering_t* c) {
  std::set<std::set<std::string>> out;
  for (size_t i = 0; i < watset_clustering_count(c); ++i) {
    std::set<std::string> cluster;
    for (size_t j = 0; j < watset_clustering_size(c, i); ++j) {
      cluster.insert(watset_clustering_member(c, i, j));
    }
    out.insert(std::move(cluster));
  }
  return out;
}

const char* kHubPairs =
    "hub\talpha\nhub\tbeta\nalpha\tbeta\n"
    "hub\tgamma\nhub\tdelta\ngamma\tdelta\n";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(watset_version()) == "0.1.0");
  CHECK(std::string(watset_format_version()) == "1");
  CHECK(std::string(watset_status_name(WATSET_OK)) == "Ok");
  CHECK(std::string(watset_status_name(WATSET_ERROR_EMPTY_GOLD)) ==
        "EmptyGold");
}

TEST_CASE("graph reading, counting, writing") {
  TempDir dir;
  std::string input = dir.file("pairs.tsv", "a\tb\nb\ta\nb\tc\n");

  watset_graph_t* graph = nullptr;
  REQUIRE(watset_graph_read(input.c_str(), WATSET_WEIGHTING_COUNT, nullptr,
                            &graph) == WATSET_OK);
  CHECK(watset_graph_node_count(graph) == 3);
  CHECK(watset_graph_edge_count(graph) == 2);

  std::string output = (dir.path / "edges.tsv").string();
  REQUIRE(watset_graph_write(graph, output.c_str()) == WATSET_OK);
  std::ifstream in(output);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text == "a\tb\t2\nb\tc\t1\n");
  watset_graph_free(graph);
}

TEST_CASE("error paths set status and message") {
  watset_graph_t* graph = nullptr;
  CHECK(watset_graph_read("/nonexistent/pairs.tsv", WATSET_WEIGHTING_ONES,
                          nullptr, &graph) == WATSET_ERROR_IO);
  CHECK(std::string(watset_last_error()).find("pairs.tsv") !=
        std::string::npos);

  TempDir dir;
  std::string empty = dir.file("empty.tsv", "# nothing\n");
  CHECK(watset_graph_read(empty.c_str(), WATSET_WEIGHTING_ONES, nullptr,
                          &graph) == WATSET_ERROR_EMPTY_INPUT);

  std::string pairs = dir.file("pairs.tsv", "a\tb\n");
  CHECK(watset_graph_read(pairs.c_str(), WATSET_WEIGHTING_SIM, nullptr,
                          &graph) == WATSET_ERROR_MISSING_EMBEDDINGS);

  std::string bad = dir.file("bad.tsv", "just-one-word\n");
  CHECK(watset_graph_read(bad.c_str(), WATSET_WEIGHTING_ONES, nullptr,
                          &graph) == WATSET_ERROR_FORMAT);

  CHECK(watset_graph_read(nullptr, WATSET_WEIGHTING_ONES, nullptr, &graph) ==
        WATSET_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("vectors load and feed the sim weighting") {
  TempDir dir;
  std::string vectors_path =
      dir.file("vectors.txt", "3 2\na 1 0\nb 1 0\nc 0 1\n");
  watset_vectors_t* vectors = nullptr;
  REQUIRE(watset_vectors_read(vectors_path.c_str(), &vectors) == WATSET_OK);
  CHECK(watset_vectors_dimension(vectors) == 2);
  CHECK(watset_vectors_count(vectors) == 3);

  std::string pairs = dir.file("pairs.tsv", "a\tb\nb\tc\n");
  watset_graph_t* graph = nullptr;
  REQUIRE(watset_graph_read(pairs.c_str(), WATSET_WEIGHTING_SIM, vectors,
                            &graph) == WATSET_OK);
  std::string output = (dir.path / "edges.tsv").string();
  REQUIRE(watset_graph_write(graph, output.c_str()) == WATSET_OK);
  std::ifstream in(output);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("a\tb\t1\n") != std::string::npos);   // cosine 1
  CHECK(text.find("b\tc\t1e-06\n") != std::string::npos);  // clamped
  watset_graph_free(graph);
  watset_vectors_free(vectors);
}

TEST_CASE("clustering algorithms through the C API") {
  TempDir dir;
  std::string input = dir.file("pairs.tsv", kHubPairs);
  watset_graph_t* graph = nullptr;
  REQUIRE(watset_graph_read(input.c_str(), WATSET_WEIGHTING_ONES, nullptr,
                            &graph) == WATSET_OK);

  SUBCASE("chinese whispers partitions the graph") {
    watset_cw_options options;
    watset_cw_options_init(&options);
    watset_clustering_t* clustering = nullptr;
    REQUIRE(watset_cluster_chinese_whispers(graph, &options, &clustering) ==
            WATSET_OK);
    size_t members = 0;
    for (size_t i = 0; i < watset_clustering_count(clustering); ++i) {
      members += watset_clustering_size(clustering, i);
    }
    CHECK(members == 5);
    watset_clustering_free(clustering);
  }

  SUBCASE("markov clustering") {
    watset_mcl_options options;
    watset_mcl_options_init(&options);
    CHECK(options.inflation == 2.0);
    watset_clustering_t* clustering = nullptr;
    REQUIRE(watset_cluster_markov(graph, &options, &clustering) == WATSET_OK);
    CHECK(watset_clustering_count(clustering) >= 1);
    watset_clustering_free(clustering);
  }

  SUBCASE("maxmax") {
    watset_clustering_t* clustering = nullptr;
    REQUIRE(watset_cluster_maxmax(graph, &clustering) == WATSET_OK);
    CHECK(watset_clustering_count(clustering) >= 1);
    watset_clustering_free(clustering);
  }

  SUBCASE("eco") {
    watset_eco_options options;
    watset_eco_options_init(&options);
    options.runs = 10;
    watset_clustering_t* clustering = nullptr;
    REQUIRE(watset_cluster_eco(graph, &options, &clustering) == WATSET_OK);
    CHECK(watset_clustering_count(clustering) >= 1);
    watset_clustering_free(clustering);
  }

  SUBCASE("clique percolation with and without padding") {
    watset_clustering_t* clustering = nullptr;
    REQUIRE(watset_cluster_cpm(graph, 3, 0, &clustering) == WATSET_OK);
    CHECK(clusters_of(clustering) ==
          std::set<std::set<std::string>>{{"alpha", "beta", "hub"},
                                          {"delta", "gamma", "hub"}});
    watset_clustering_free(clustering);

    REQUIRE(watset_cluster_cpm(graph, 4, 1, &clustering) == WATSET_OK);
    CHECK(watset_clustering_count(clustering) == 5);  // singletons only
    watset_clustering_free(clustering);

    CHECK(watset_cluster_cpm(graph, 1, 0, &clustering) ==
          WATSET_ERROR_INVALID_ARGUMENT);
  }

  watset_graph_free(graph);
}

TEST_CASE("the watset pipeline with dumps and sense labels") {
  TempDir dir;
  std::string input = dir.file("pairs.tsv", kHubPairs);
  watset_graph_t* graph = nullptr;
  REQUIRE(watset_graph_read(input.c_str(), WATSET_WEIGHTING_ONES, nullptr,
                            &graph) == WATSET_OK);

  watset_options options;
  watset_options_init(&options);
  std::string senses_path = (dir.path / "senses.tsv").string();
  std::string sense_graph_path = (dir.path / "sense-graph.tsv").string();
  options.dump_senses_path = senses_path.c_str();
  options.dump_sense_graph_path = sense_graph_path.c_str();

  watset_clustering_t* clustering = nullptr;
  REQUIRE(watset_cluster_watset(graph, &options, &clustering) == WATSET_OK);
  CHECK(clusters_of(clustering) ==
        std::set<std::set<std::string>>{{"alpha", "beta", "hub"},
                                        {"delta", "gamma", "hub"}});
  watset_clustering_free(clustering);

  std::ifstream senses(senses_path);
  std::string senses_text((std::istreambuf_iterator<char>(senses)),
                          std::istreambuf_iterator<char>());
  CHECK(senses_text.find("hub\t1\t") != std::string::npos);
  std::ifstream edges(sense_graph_path);
  CHECK(edges.peek() != std::ifstream::traits_type::eof());

  options.keep_sense_labels = 1;
  options.dump_senses_path = nullptr;
  options.dump_sense_graph_path = nullptr;
  REQUIRE(watset_cluster_watset(graph, &options, &clustering) == WATSET_OK);
  CHECK(clusters_of(clustering) ==
        std::set<std::set<std::string>>{{"alpha#0", "beta#0", "hub#0"},
                                        {"delta#0", "gamma#0", "hub#1"}});
  watset_clustering_free(clustering);
  watset_graph_free(graph);
}

TEST_CASE("clustering files and evaluation") {
  TempDir dir;
  std::string predicted_path = dir.file("predicted.tsv", "a\tb\n");
  std::string gold_path = dir.file("gold.tsv", "a\tb\tc\n");

  watset_clustering_t* predicted = nullptr;
  watset_clustering_t* gold = nullptr;
  REQUIRE(watset_clustering_read(predicted_path.c_str(), &predicted) ==
          WATSET_OK);
  REQUIRE(watset_clustering_read(gold_path.c_str(), &gold) == WATSET_OK);

  watset_eval_report report;
  REQUIRE(watset_evaluate(predicted, gold, 150, &report) == WATSET_OK);
  CHECK(report.precision == doctest::Approx(1.0));
  CHECK(report.recall == doctest::Approx(1.0 / 3.0));
  CHECK(report.f1 == doctest::Approx(0.5));
  CHECK(report.predicted_pairs == 1);
  CHECK(report.gold_pairs == 3);
  CHECK(report.true_positive_pairs == 1);
  CHECK(report.pruned_clusters == 0);

  // reflexive, pruning disabled
  REQUIRE(watset_evaluate(gold, gold, 0, &report) == WATSET_OK);
  CHECK(report.f1 == 1.0);

  // empty gold
  std::string empty_path = dir.file("empty.tsv", "");
  watset_clustering_t* empty = nullptr;
  REQUIRE(watset_clustering_read(empty_path.c_str(), &empty) == WATSET_OK);
  CHECK(watset_evaluate(predicted, empty, 0, &report) ==
        WATSET_ERROR_EMPTY_GOLD);

  std::string copy_path = (dir.path / "copy.tsv").string();
  REQUIRE(watset_clustering_write(gold, copy_path.c_str()) == WATSET_OK);
  std::ifstream in(copy_path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text == "a\tb\tc\n");

  watset_clustering_free(predicted);
  watset_clustering_free(gold);
  watset_clustering_free(empty);
}
