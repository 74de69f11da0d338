// Command-line front end over the watset C API: graph construction,
// clustering, the watset pipeline, and paired F-score evaluation.

#include <cinttypes>
#include <cstdio>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "watset.h"

namespace {

struct ToolError : std::runtime_error {
  explicit ToolError(watset_status status)
      : std::runtime_error(std::string(watset_status_name(status)) + ": " +
                           watset_last_error()) {}
};

void check(watset_status status) {
  if (status != WATSET_OK) throw ToolError(status);
}

using VectorsPtr =
    std::unique_ptr<watset_vectors_t, decltype(&watset_vectors_free)>;
using GraphPtr = std::unique_ptr<watset_graph_t, decltype(&watset_graph_free)>;
using ClusteringPtr =
    std::unique_ptr<watset_clustering_t, decltype(&watset_clustering_free)>;

struct GraphOptions {
  std::string input;
  std::string weighting = "ones";
  std::string embeddings;
};

GraphPtr load_graph(const GraphOptions& options) {
  VectorsPtr vectors(nullptr, watset_vectors_free);
  watset_weighting weighting = WATSET_WEIGHTING_ONES;
  if (options.weighting == "count") weighting = WATSET_WEIGHTING_COUNT;
  if (options.weighting == "sim") {
    weighting = WATSET_WEIGHTING_SIM;
    watset_vectors_t* raw = nullptr;
    check(watset_vectors_read(options.embeddings.c_str(), &raw));
    vectors.reset(raw);
  }
  watset_graph_t* raw = nullptr;
  check(watset_graph_read(options.input.c_str(), weighting, vectors.get(),
                          &raw));
  return GraphPtr(raw, watset_graph_free);
}

void add_graph_options(CLI::App* cmd, GraphOptions& options) {
  cmd->add_option("-i,--input", options.input,
                  "Synonymy pair list (word1<TAB>word2[<TAB>weight]); - for stdin")
      ->required();
  cmd->add_option("--weighting", options.weighting, "Edge weighting scheme")
      ->check(CLI::IsMember({"ones", "count", "sim"}))
      ->capture_default_str();
  cmd->add_option("--embeddings", options.embeddings,
                  "Word vectors in text format (required with --weighting sim)");
}

void require_embeddings_for_sim(const GraphOptions& options) {
  if (options.weighting == "sim" && options.embeddings.empty()) {
    throw CLI::RequiredError("--embeddings (needed by --weighting sim)");
  }
}

watset_cw_mode parse_cw_mode(const std::string& mode) {
  if (mode == "log") return WATSET_CW_LOG;
  if (mode == "nolog") return WATSET_CW_NOLOG;
  return WATSET_CW_TOP;
}

void write_clustering(const watset_clustering_t* clustering,
                      const std::string& path) {
  check(watset_clustering_write(clustering, path.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Watset: fuzzy graph clustering for synset induction"};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       std::string("watset ") + watset_version() +
                           " (formats " + watset_format_version() + ")");
  app.set_config("--config", "",
                 "Read defaults from a key=value file (flags win)");

  // build-graph: materialize the weighted edge list
  GraphOptions build_graph_options;
  std::string build_graph_output = "-";
  auto* build_graph = app.add_subcommand(
      "build-graph", "Build the synonymy graph and write its edge list");
  add_graph_options(build_graph, build_graph_options);
  build_graph->add_option("-o,--output", build_graph_output,
                          "Edge list destination; - for stdout")
      ->capture_default_str();
  build_graph->callback([&] {
    require_embeddings_for_sim(build_graph_options);
    GraphPtr graph = load_graph(build_graph_options);
    check(watset_graph_write(graph.get(), build_graph_output.c_str()));
  });

  // cluster: one of the standalone algorithms
  GraphOptions cluster_graph_options;
  std::string cluster_output = "-";
  std::string algorithm;
  std::string cw_mode = "top";
  std::uint64_t seed = 0;
  unsigned max_iterations = 20;
  unsigned expansion = 2;
  double inflation = 2.0;
  double convergence_epsilon = 1e-5;
  double prune_below = 1e-5;
  unsigned runs = 100;
  double noise = 0.05;
  double threshold = 0.5;
  unsigned k = 2;
  bool pad_singletons = false;

  auto* cluster = app.add_subcommand("cluster", "Run one clustering algorithm");
  add_graph_options(cluster, cluster_graph_options);
  cluster->add_option("-o,--output", cluster_output,
                      "Clusters, one per line; - for stdout")
      ->capture_default_str();
  cluster
      ->add_option("-a,--algorithm", algorithm,
                   "cw | mcl | maxmax | eco | cpm")
      ->check(CLI::IsMember({"cw", "mcl", "maxmax", "eco", "cpm"}))
      ->required();
  cluster->add_option("--mode", cw_mode, "Chinese Whispers weighting mode")
      ->check(CLI::IsMember({"top", "log", "nolog"}))
      ->capture_default_str();
  cluster->add_option("--seed", seed, "Random seed")->capture_default_str();
  cluster->add_option("--max-iterations", max_iterations, "Iteration cap")
      ->capture_default_str();
  cluster->add_option("--expansion", expansion, "MCL expansion power")
      ->check(CLI::Range(2u, 16u))
      ->capture_default_str();
  cluster->add_option("--inflation", inflation, "MCL inflation power")
      ->check(CLI::Range(std::nextafter(1.0, 2.0), 64.0))
      ->capture_default_str();
  cluster
      ->add_option("--convergence-epsilon", convergence_epsilon,
                   "MCL convergence threshold")
      ->capture_default_str();
  cluster->add_option("--prune-below", prune_below, "MCL matrix pruning")
      ->capture_default_str();
  cluster->add_option("--runs", runs, "ECO noisy runs")
      ->check(CLI::Range(1u, 1000000u))
      ->capture_default_str();
  cluster->add_option("--noise", noise, "ECO noise magnitude")
      ->capture_default_str();
  cluster->add_option("--threshold", threshold,
                      "ECO pair probability threshold, in (0,1)")
      ->capture_default_str();
  cluster->add_option("--k", k, "CPM clique size (>= 2)")
      ->check(CLI::Range(2u, 64u))
      ->capture_default_str();
  cluster->add_flag("--pad-singletons", pad_singletons,
                    "CPM: emit uncovered words as singleton clusters");
  cluster->callback([&] {
    require_embeddings_for_sim(cluster_graph_options);
    GraphPtr graph = load_graph(cluster_graph_options);
    watset_clustering_t* raw = nullptr;
    if (algorithm == "cw") {
      watset_cw_options options;
      watset_cw_options_init(&options);
      options.mode = parse_cw_mode(cw_mode);
      options.seed = seed;
      options.max_iterations = max_iterations;
      check(watset_cluster_chinese_whispers(graph.get(), &options, &raw));
    } else if (algorithm == "mcl") {
      watset_mcl_options options;
      watset_mcl_options_init(&options);
      options.expansion = expansion;
      options.inflation = inflation;
      options.max_iterations = max_iterations;
      options.convergence_epsilon = convergence_epsilon;
      options.prune_below = prune_below;
      check(watset_cluster_markov(graph.get(), &options, &raw));
    } else if (algorithm == "maxmax") {
      check(watset_cluster_maxmax(graph.get(), &raw));
    } else if (algorithm == "eco") {
      watset_eco_options options;
      watset_eco_options_init(&options);
      options.runs = runs;
      options.noise_magnitude = noise;
      options.threshold = threshold;
      options.seed = seed;
      check(watset_cluster_eco(graph.get(), &options, &raw));
    } else {
      check(watset_cluster_cpm(graph.get(), k, pad_singletons ? 1 : 0, &raw));
    }
    ClusteringPtr clustering(raw, watset_clustering_free);
    write_clustering(clustering.get(), cluster_output);
  });

  // watset: the local-global pipeline
  GraphOptions watset_graph_options;
  std::string watset_output = "-";
  std::string local_algorithm = "cw";
  std::string global_algorithm = "cw";
  std::string local_mode = "top";
  std::string global_mode = "top";
  double local_inflation = 2.0;
  double global_inflation = 2.0;
  std::uint64_t watset_seed = 0;
  unsigned threads = 1;
  bool sense_labels = false;
  std::string dump_senses;
  std::string dump_sense_graph;

  auto* watset_cmd = app.add_subcommand(
      "watset", "Local-global fuzzy clustering into synsets");
  add_graph_options(watset_cmd, watset_graph_options);
  watset_cmd->add_option("-o,--output", watset_output,
                         "Synsets, one per line; - for stdout")
      ->capture_default_str();
  watset_cmd->add_option("--local", local_algorithm, "Local clusterer")
      ->check(CLI::IsMember({"cw", "mcl"}))
      ->capture_default_str();
  watset_cmd->add_option("--global", global_algorithm, "Global clusterer")
      ->check(CLI::IsMember({"cw", "mcl"}))
      ->capture_default_str();
  watset_cmd
      ->add_option("--local-mode", local_mode, "Chinese Whispers mode (local)")
      ->check(CLI::IsMember({"top", "log", "nolog"}))
      ->capture_default_str();
  watset_cmd
      ->add_option("--global-mode", global_mode,
                   "Chinese Whispers mode (global)")
      ->check(CLI::IsMember({"top", "log", "nolog"}))
      ->capture_default_str();
  watset_cmd
      ->add_option("--local-inflation", local_inflation,
                   "MCL inflation (local)")
      ->capture_default_str();
  watset_cmd
      ->add_option("--global-inflation", global_inflation,
                   "MCL inflation (global)")
      ->capture_default_str();
  watset_cmd->add_option("--seed", watset_seed, "Random seed for both stages")
      ->capture_default_str();
  watset_cmd->add_option("--threads", threads, "Worker cap for the local steps")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  watset_cmd->add_flag("--sense-labels", sense_labels,
                       "Keep word#index sense labels in the output");
  watset_cmd->add_option("--dump-senses", dump_senses,
                         "Write the sense inventory to this path");
  watset_cmd->add_option("--dump-sense-graph", dump_sense_graph,
                         "Write the disambiguated sense graph to this path");
  watset_cmd->callback([&] {
    require_embeddings_for_sim(watset_graph_options);
    GraphPtr graph = load_graph(watset_graph_options);
    watset_options options;
    watset_options_init(&options);
    options.local_stage.algorithm =
        local_algorithm == "mcl" ? WATSET_ALGORITHM_MCL : WATSET_ALGORITHM_CW;
    options.local_stage.cw.mode = parse_cw_mode(local_mode);
    options.local_stage.cw.seed = watset_seed;
    options.local_stage.mcl.inflation = local_inflation;
    options.global_stage.algorithm =
        global_algorithm == "mcl" ? WATSET_ALGORITHM_MCL : WATSET_ALGORITHM_CW;
    options.global_stage.cw.mode = parse_cw_mode(global_mode);
    options.global_stage.cw.seed = watset_seed;
    options.global_stage.mcl.inflation = global_inflation;
    options.threads = threads;
    options.keep_sense_labels = sense_labels ? 1 : 0;
    if (!dump_senses.empty()) options.dump_senses_path = dump_senses.c_str();
    if (!dump_sense_graph.empty()) {
      options.dump_sense_graph_path = dump_sense_graph.c_str();
    }
    watset_clustering_t* raw = nullptr;
    check(watset_cluster_watset(graph.get(), &options, &raw));
    ClusteringPtr clustering(raw, watset_clustering_free);
    write_clustering(clustering.get(), watset_output);
  });

  // eval: paired F-score row
  std::string predicted_path;
  std::string gold_path;
  long long prune = 150;
  auto* eval = app.add_subcommand(
      "eval", "Paired F-score of predicted synsets against gold");
  eval->add_option("--predicted", predicted_path, "Predicted synset file")
      ->required();
  eval->add_option("--gold", gold_path, "Gold synset file")->required();
  eval->add_option("--prune", prune,
                   "Drop predicted clusters with >= this many words (0 "
                   "disables)")
      ->capture_default_str();
  eval->callback([&] {
    watset_clustering_t* predicted_raw = nullptr;
    check(watset_clustering_read(predicted_path.c_str(), &predicted_raw));
    ClusteringPtr predicted(predicted_raw, watset_clustering_free);
    watset_clustering_t* gold_raw = nullptr;
    check(watset_clustering_read(gold_path.c_str(), &gold_raw));
    ClusteringPtr gold(gold_raw, watset_clustering_free);

    watset_eval_report report;
    check(watset_evaluate(predicted.get(), gold.get(), prune, &report));
    std::printf("%.6f\t%.6f\t%.6f\t%" PRIu64 "\t%" PRIu64 "\t%" PRIu64
                "\t%" PRIu64 "\n",
                report.precision, report.recall, report.f1,
                report.predicted_pairs, report.gold_pairs,
                report.true_positive_pairs, report.pruned_clusters);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& parse_error) {
    int code = app.exit(parse_error);
    return code == 0 ? 0 : 2;
  } catch (const ToolError& error) {
    std::fprintf(stderr, "watset: %s\n", error.what());
    return 1;
  }
  return 0;
}
