/* Watset synset induction toolkit: C API of the shared library.
 *
 * All functions returning watset_status report WATSET_OK on success; on
 * failure they leave outputs untouched and a diagnostic is available from
 * watset_last_error() on the calling thread. Objects returned through
 * `out` parameters are owned by the caller and released with the matching
 * *_free function. Handles are immutable after creation, so sharing them
 * across threads for reads is safe.
 */
#ifndef WATSET_H
#define WATSET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum watset_status {
  WATSET_OK = 0,
  WATSET_ERROR_EMPTY_INPUT = 1,
  WATSET_ERROR_MISSING_EMBEDDINGS = 2,
  WATSET_ERROR_UNKNOWN_WORD = 3,
  WATSET_ERROR_FORMAT = 4,
  WATSET_ERROR_INCONSISTENT_INVENTORY = 5,
  WATSET_ERROR_EMPTY_GOLD = 6,
  WATSET_ERROR_INVALID_ARGUMENT = 7,
  WATSET_ERROR_IO = 8,
  WATSET_ERROR_UNKNOWN = 9
} watset_status;

/* Toolkit version, e.g. "0.1.0". */
const char* watset_version(void);
/* Version of the file formats written by this library. */
const char* watset_format_version(void);
const char* watset_status_name(watset_status status);
/* Message of the most recent failure on this thread ("" when none). */
const char* watset_last_error(void);

/* ---------------------------------------------------------------- words */

typedef struct watset_vectors_t watset_vectors_t;

/* Loads word vectors in the plain-text format: an optional `<count> <dim>`
 * header line, then `word v1 v2 ... vdim` per line. */
watset_status watset_vectors_read(const char* path, watset_vectors_t** out);
void watset_vectors_free(watset_vectors_t* vectors);
size_t watset_vectors_dimension(const watset_vectors_t* vectors);
size_t watset_vectors_count(const watset_vectors_t* vectors);

/* ---------------------------------------------------------------- graph */

typedef enum watset_weighting {
  WATSET_WEIGHTING_ONES = 0,
  WATSET_WEIGHTING_COUNT = 1,
  WATSET_WEIGHTING_SIM = 2
} watset_weighting;

typedef struct watset_graph_t watset_graph_t;

/* Reads a synonymy pair list (`word1<TAB>word2[<TAB>weight]`, `#` comments)
 * and builds the weighted graph. `vectors` is required for
 * WATSET_WEIGHTING_SIM and ignored otherwise. The path `-` reads stdin. */
watset_status watset_graph_read(const char* path, watset_weighting weighting,
                                const watset_vectors_t* vectors,
                                watset_graph_t** out);
/* Writes the weighted edge list (`word1<TAB>word2<TAB>weight`, sorted).
 * The path `-` writes stdout. */
watset_status watset_graph_write(const watset_graph_t* graph,
                                 const char* path);
void watset_graph_free(watset_graph_t* graph);
size_t watset_graph_node_count(const watset_graph_t* graph);
size_t watset_graph_edge_count(const watset_graph_t* graph);

/* ----------------------------------------------------------- clustering */

typedef struct watset_clustering_t watset_clustering_t;

typedef enum watset_cw_mode {
  WATSET_CW_TOP = 0,
  WATSET_CW_LOG = 1,
  WATSET_CW_NOLOG = 2
} watset_cw_mode;

typedef struct watset_cw_options {
  watset_cw_mode mode;
  uint64_t seed;
  unsigned max_iterations;
} watset_cw_options;
void watset_cw_options_init(watset_cw_options* options);

typedef struct watset_mcl_options {
  unsigned expansion;
  double inflation;
  unsigned max_iterations;
  double convergence_epsilon;
  double prune_below;
} watset_mcl_options;
void watset_mcl_options_init(watset_mcl_options* options);

typedef struct watset_eco_options {
  unsigned runs;
  double noise_magnitude;
  double threshold;
  uint64_t seed;
} watset_eco_options;
void watset_eco_options_init(watset_eco_options* options);

watset_status watset_cluster_chinese_whispers(const watset_graph_t* graph,
                                              const watset_cw_options* options,
                                              watset_clustering_t** out);
watset_status watset_cluster_markov(const watset_graph_t* graph,
                                    const watset_mcl_options* options,
                                    watset_clustering_t** out);
watset_status watset_cluster_maxmax(const watset_graph_t* graph,
                                    watset_clustering_t** out);
watset_status watset_cluster_eco(const watset_graph_t* graph,
                                 const watset_eco_options* options,
                                 watset_clustering_t** out);
/* pad_singletons != 0 emits a singleton cluster for every word outside all
 * k-clique communities, so the output covers the vocabulary. */
watset_status watset_cluster_cpm(const watset_graph_t* graph, unsigned k,
                                 int pad_singletons, watset_clustering_t** out);

/* --------------------------------------------------------------- watset */

typedef enum watset_algorithm {
  WATSET_ALGORITHM_CW = 0,
  WATSET_ALGORITHM_MCL = 1
} watset_algorithm;

typedef struct watset_stage_options {
  watset_algorithm algorithm;
  watset_cw_options cw;
  watset_mcl_options mcl;
} watset_stage_options;
void watset_stage_options_init(watset_stage_options* options);

typedef struct watset_options {
  watset_stage_options local_stage;
  watset_stage_options global_stage;
  unsigned threads;
  /* != 0 keeps `word#index` sense labels in the output clusters. */
  int keep_sense_labels;
  /* Optional dump paths (NULL disables). Senses come out as
   * `word<TAB>index<TAB>ctx-word:weight,...`, the sense graph as
   * `word#index<TAB>word#index<TAB>weight`. */
  const char* dump_senses_path;
  const char* dump_sense_graph_path;
} watset_options;
void watset_options_init(watset_options* options);

/* Local-global fuzzy clustering of the graph into synsets. */
watset_status watset_cluster_watset(const watset_graph_t* graph,
                                    const watset_options* options,
                                    watset_clustering_t** out);

/* Clusters are held in canonical order: members ascending, clusters by
 * (size desc, members lexicographic). */
size_t watset_clustering_count(const watset_clustering_t* clustering);
size_t watset_clustering_size(const watset_clustering_t* clustering,
                              size_t cluster);
/* Borrowed pointer, valid while the clustering lives. NULL when out of
 * range. */
const char* watset_clustering_member(const watset_clustering_t* clustering,
                                     size_t cluster, size_t member);
/* Synset file: one cluster per line, members tab-separated. `-` for
 * stdin/stdout. */
watset_status watset_clustering_read(const char* path,
                                     watset_clustering_t** out);
watset_status watset_clustering_write(const watset_clustering_t* clustering,
                                      const char* path);
void watset_clustering_free(watset_clustering_t* clustering);

/* ----------------------------------------------------------- evaluation */

typedef struct watset_eval_report {
  double precision;
  double recall;
  double f1;
  uint64_t predicted_pairs;
  uint64_t gold_pairs;
  uint64_t true_positive_pairs;
  uint64_t pruned_clusters;
} watset_eval_report;

/* Paired F-score of predicted against gold synsets. Predicted clusters
 * with at least prune_threshold words are dropped first; pass 0 or a
 * negative value to disable pruning. */
watset_status watset_evaluate(const watset_clustering_t* predicted,
                              const watset_clustering_t* gold,
                              long long prune_threshold,
                              watset_eval_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WATSET_H */
