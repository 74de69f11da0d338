#include "watset.h"

#include <exception>
#include <string>
#include <utility>

#include "clique_percolation.hpp"
#include "clusterer.hpp"
#include "eco.hpp"
#include "error.hpp"
#include "evaluate.hpp"
#include "formats.hpp"
#include "maxmax.hpp"
#include "watset.hpp"
#include "word_graph.hpp"

struct watset_vectors_t {
  watset::VectorStore store;
};

struct watset_graph_t {
  watset::WordGraph graph;
};

struct watset_clustering_t {
  watset::Synsets synsets;  // canonical order
};

namespace {

thread_local std::string g_last_error;

watset_status status_of(watset::ErrorCode code) {
  using watset::ErrorCode;
  switch (code) {
    case ErrorCode::EmptyInput: return WATSET_ERROR_EMPTY_INPUT;
    case ErrorCode::MissingEmbeddings: return WATSET_ERROR_MISSING_EMBEDDINGS;
    case ErrorCode::UnknownWord: return WATSET_ERROR_UNKNOWN_WORD;
    case ErrorCode::FormatError: return WATSET_ERROR_FORMAT;
    case ErrorCode::InconsistentInventory:
      return WATSET_ERROR_INCONSISTENT_INVENTORY;
    case ErrorCode::EmptyGold: return WATSET_ERROR_EMPTY_GOLD;
    case ErrorCode::InvalidArgument: return WATSET_ERROR_INVALID_ARGUMENT;
    case ErrorCode::IoError: return WATSET_ERROR_IO;
  }
  return WATSET_ERROR_UNKNOWN;
}

template <typename Body>
watset_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return WATSET_OK;
  } catch (const watset::Error& error) {
    g_last_error = error.what();
    return status_of(error.code());
  } catch (const std::exception& error) {
    g_last_error = error.what();
    return WATSET_ERROR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return WATSET_ERROR_UNKNOWN;
  }
}

watset_status require(bool condition, const char* message) {
  if (condition) return WATSET_OK;
  g_last_error = message;
  return WATSET_ERROR_INVALID_ARGUMENT;
}

watset::ChineseWhispersParams to_params(const watset_cw_options& options) {
  watset::ChineseWhispersParams params;
  switch (options.mode) {
    case WATSET_CW_TOP: params.mode = watset::ChineseWhispersMode::Top; break;
    case WATSET_CW_LOG: params.mode = watset::ChineseWhispersMode::Log; break;
    case WATSET_CW_NOLOG:
      params.mode = watset::ChineseWhispersMode::NoLog;
      break;
  }
  params.seed = options.seed;
  params.max_iterations = options.max_iterations;
  return params;
}

watset::MarkovClusteringParams to_params(const watset_mcl_options& options) {
  watset::MarkovClusteringParams params;
  params.expansion = options.expansion;
  params.inflation = options.inflation;
  params.max_iterations = options.max_iterations;
  params.convergence_epsilon = options.convergence_epsilon;
  params.prune_below = options.prune_below;
  return params;
}

watset::ClustererSpec to_spec(const watset_stage_options& options) {
  watset::ClustererSpec spec;
  spec.algorithm = options.algorithm == WATSET_ALGORITHM_MCL
                       ? watset::ClusterAlgorithm::MarkovClustering
                       : watset::ClusterAlgorithm::ChineseWhispers;
  spec.cw = to_params(options.cw);
  spec.mcl = to_params(options.mcl);
  return spec;
}

watset_clustering_t* make_clustering(const watset::WordGraph& graph,
                                     const watset::Clusters& clusters) {
  return new watset_clustering_t{
      watset::io::canonical_synsets(watset::io::to_synsets(graph, clusters))};
}

}  // namespace

extern "C" {

const char* watset_version(void) { return "0.1.0"; }
const char* watset_format_version(void) { return "1"; }

const char* watset_status_name(watset_status status) {
  switch (status) {
    case WATSET_OK: return "Ok";
    case WATSET_ERROR_EMPTY_INPUT: return "EmptyInput";
    case WATSET_ERROR_MISSING_EMBEDDINGS: return "MissingEmbeddings";
    case WATSET_ERROR_UNKNOWN_WORD: return "UnknownWord";
    case WATSET_ERROR_FORMAT: return "FormatError";
    case WATSET_ERROR_INCONSISTENT_INVENTORY: return "InconsistentInventory";
    case WATSET_ERROR_EMPTY_GOLD: return "EmptyGold";
    case WATSET_ERROR_INVALID_ARGUMENT: return "InvalidArgument";
    case WATSET_ERROR_IO: return "IoError";
    case WATSET_ERROR_UNKNOWN: return "UnknownError";
  }
  return "UnknownError";
}

const char* watset_last_error(void) { return g_last_error.c_str(); }

/* words ------------------------------------------------------------- */

watset_status watset_vectors_read(const char* path, watset_vectors_t** out) {
  if (watset_status s = require(path && out, "path and out must be non-null"))
    return s;
  return guarded([&] {
    *out = new watset_vectors_t{watset::VectorStore::read_text_file(path)};
  });
}

void watset_vectors_free(watset_vectors_t* vectors) { delete vectors; }

size_t watset_vectors_dimension(const watset_vectors_t* vectors) {
  return vectors ? vectors->store.dimension() : 0;
}

size_t watset_vectors_count(const watset_vectors_t* vectors) {
  return vectors ? vectors->store.size() : 0;
}

/* graph ------------------------------------------------------------- */

watset_status watset_graph_read(const char* path, watset_weighting weighting,
                                const watset_vectors_t* vectors,
                                watset_graph_t** out) {
  if (watset_status s = require(path && out, "path and out must be non-null"))
    return s;
  return guarded([&] {
    watset::Weighting scheme = watset::Weighting::Ones;
    if (weighting == WATSET_WEIGHTING_COUNT) scheme = watset::Weighting::Count;
    if (weighting == WATSET_WEIGHTING_SIM) scheme = watset::Weighting::Sim;
    *out = new watset_graph_t{watset::io::read_word_graph_file(
        path, scheme, vectors ? &vectors->store : nullptr)};
  });
}

watset_status watset_graph_write(const watset_graph_t* graph,
                                 const char* path) {
  if (watset_status s =
          require(graph && path, "graph and path must be non-null"))
    return s;
  return guarded([&] {
    watset::io::OutputFile out(path);
    watset::io::write_edge_list(out.stream(), graph->graph);
    out.finish(path);
  });
}

void watset_graph_free(watset_graph_t* graph) { delete graph; }

size_t watset_graph_node_count(const watset_graph_t* graph) {
  return graph ? graph->graph.word_count() : 0;
}

size_t watset_graph_edge_count(const watset_graph_t* graph) {
  return graph ? graph->graph.graph().edge_count() : 0;
}

/* clustering -------------------------------------------------------- */

void watset_cw_options_init(watset_cw_options* options) {
  if (!options) return;
  watset::ChineseWhispersParams defaults;
  options->mode = WATSET_CW_TOP;
  options->seed = defaults.seed;
  options->max_iterations = defaults.max_iterations;
}

void watset_mcl_options_init(watset_mcl_options* options) {
  if (!options) return;
  watset::MarkovClusteringParams defaults;
  options->expansion = defaults.expansion;
  options->inflation = defaults.inflation;
  options->max_iterations = defaults.max_iterations;
  options->convergence_epsilon = defaults.convergence_epsilon;
  options->prune_below = defaults.prune_below;
}

void watset_eco_options_init(watset_eco_options* options) {
  if (!options) return;
  watset::EcoParams defaults;
  options->runs = defaults.runs;
  options->noise_magnitude = defaults.noise_magnitude;
  options->threshold = defaults.threshold;
  options->seed = defaults.seed;
}

watset_status watset_cluster_chinese_whispers(const watset_graph_t* graph,
                                              const watset_cw_options* options,
                                              watset_clustering_t** out) {
  if (watset_status s =
          require(graph && options && out, "null argument"))
    return s;
  return guarded([&] {
    auto clusters =
        watset::chinese_whispers(graph->graph.graph(), to_params(*options));
    *out = make_clustering(graph->graph, clusters);
  });
}

watset_status watset_cluster_markov(const watset_graph_t* graph,
                                    const watset_mcl_options* options,
                                    watset_clustering_t** out) {
  if (watset_status s =
          require(graph && options && out, "null argument"))
    return s;
  return guarded([&] {
    auto clusters =
        watset::markov_clustering(graph->graph.graph(), to_params(*options));
    *out = make_clustering(graph->graph, clusters);
  });
}

watset_status watset_cluster_maxmax(const watset_graph_t* graph,
                                    watset_clustering_t** out) {
  if (watset_status s = require(graph && out, "null argument")) return s;
  return guarded([&] {
    *out = make_clustering(graph->graph, watset::maxmax(graph->graph.graph()));
  });
}

watset_status watset_cluster_eco(const watset_graph_t* graph,
                                 const watset_eco_options* options,
                                 watset_clustering_t** out) {
  if (watset_status s =
          require(graph && options && out, "null argument"))
    return s;
  return guarded([&] {
    watset::EcoParams params;
    params.runs = options->runs;
    params.noise_magnitude = options->noise_magnitude;
    params.threshold = options->threshold;
    params.seed = options->seed;
    *out = make_clustering(graph->graph,
                           watset::eco(graph->graph.graph(), params));
  });
}

watset_status watset_cluster_cpm(const watset_graph_t* graph, unsigned k,
                                 int pad_singletons,
                                 watset_clustering_t** out) {
  if (watset_status s = require(graph && out, "null argument")) return s;
  return guarded([&] {
    auto clusters = watset::clique_percolation(graph->graph.graph(), k);
    if (pad_singletons) {
      clusters =
          watset::pad_with_singletons(graph->graph.graph(), std::move(clusters));
    }
    *out = make_clustering(graph->graph, clusters);
  });
}

/* watset ------------------------------------------------------------ */

void watset_stage_options_init(watset_stage_options* options) {
  if (!options) return;
  options->algorithm = WATSET_ALGORITHM_CW;
  watset_cw_options_init(&options->cw);
  watset_mcl_options_init(&options->mcl);
}

void watset_options_init(watset_options* options) {
  if (!options) return;
  watset_stage_options_init(&options->local_stage);
  watset_stage_options_init(&options->global_stage);
  options->threads = 1;
  options->keep_sense_labels = 0;
  options->dump_senses_path = nullptr;
  options->dump_sense_graph_path = nullptr;
}

watset_status watset_cluster_watset(const watset_graph_t* graph,
                                    const watset_options* options,
                                    watset_clustering_t** out) {
  if (watset_status s =
          require(graph && options && out, "null argument"))
    return s;
  return guarded([&] {
    watset::WatsetParams params;
    params.local = to_spec(options->local_stage);
    params.global = to_spec(options->global_stage);
    params.threads = options->threads > 0 ? options->threads : 1;
    watset::WatsetResult result = watset::run_watset(graph->graph, params);

    if (options->dump_senses_path) {
      watset::io::OutputFile dump(options->dump_senses_path);
      watset::io::write_sense_inventory(dump.stream(), graph->graph,
                                        result.inventory);
      dump.finish(options->dump_senses_path);
    }
    if (options->dump_sense_graph_path) {
      watset::io::OutputFile dump(options->dump_sense_graph_path);
      watset::io::write_sense_graph(dump.stream(), graph->graph,
                                    result.inventory, result.sense_graph);
      dump.finish(options->dump_sense_graph_path);
    }

    watset::Synsets synsets =
        options->keep_sense_labels
            ? watset::io::to_labeled_synsets(graph->graph, result.inventory,
                                             result.sense_clusters)
            : watset::io::to_synsets(graph->graph, result.word_clusters);
    *out = new watset_clustering_t{
        watset::io::canonical_synsets(std::move(synsets))};
  });
}

size_t watset_clustering_count(const watset_clustering_t* clustering) {
  return clustering ? clustering->synsets.size() : 0;
}

size_t watset_clustering_size(const watset_clustering_t* clustering,
                              size_t cluster) {
  if (!clustering || cluster >= clustering->synsets.size()) return 0;
  return clustering->synsets[cluster].size();
}

const char* watset_clustering_member(const watset_clustering_t* clustering,
                                     size_t cluster, size_t member) {
  if (!clustering || cluster >= clustering->synsets.size()) return nullptr;
  const auto& synset = clustering->synsets[cluster];
  if (member >= synset.size()) return nullptr;
  return synset[member].c_str();
}

watset_status watset_clustering_read(const char* path,
                                     watset_clustering_t** out) {
  if (watset_status s = require(path && out, "path and out must be non-null"))
    return s;
  return guarded([&] {
    *out = new watset_clustering_t{watset::io::read_synsets_file(path)};
  });
}

watset_status watset_clustering_write(const watset_clustering_t* clustering,
                                      const char* path) {
  if (watset_status s =
          require(clustering && path, "clustering and path must be non-null"))
    return s;
  return guarded([&] {
    watset::io::OutputFile out(path);
    watset::io::write_synsets(out.stream(), clustering->synsets);
    out.finish(path);
  });
}

void watset_clustering_free(watset_clustering_t* clustering) {
  delete clustering;
}

/* evaluation -------------------------------------------------------- */

watset_status watset_evaluate(const watset_clustering_t* predicted,
                              const watset_clustering_t* gold,
                              long long prune_threshold,
                              watset_eval_report* out) {
  if (watset_status s =
          require(predicted && gold && out, "null argument"))
    return s;
  return guarded([&] {
    std::optional<std::size_t> threshold;
    if (prune_threshold > 0) {
      threshold = static_cast<std::size_t>(prune_threshold);
    }
    watset::EvalReport report =
        watset::paired_prf(predicted->synsets, gold->synsets, threshold);
    out->precision = report.precision;
    out->recall = report.recall;
    out->f1 = report.f1;
    out->predicted_pairs = report.predicted_pairs;
    out->gold_pairs = report.gold_pairs;
    out->true_positive_pairs = report.true_positive_pairs;
    out->pruned_clusters = report.pruned_clusters;
  });
}

} /* extern "C" */
