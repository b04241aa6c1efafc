#ifndef FEATURECLOUDS_EVALUATION_H_
#define FEATURECLOUDS_EVALUATION_H_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "featureclouds/block.h"
#include "featureclouds/pipeline.h"
#include "featureclouds/rational.h"
#include "featureclouds/stemmer.h"
#include "featureclouds/weighting.h"

namespace featureclouds {

struct RelevantWordSet {
  std::string block_id;
  std::set<std::string> words;
};

struct EvaluationResult {
  std::string block_id;
  std::vector<std::string> retrieved;
  std::set<std::string> relevant;
  std::set<std::string> correctly_retrieved;
  Rational precision;
  Rational recall;
};

struct BlockStats {
  std::string block_id;
  int noc = 0;          // identifiers tagged `class`
  int now = 0;          // distinct stems before filters
  double et_ms = 0.0;   // tokenize -> name, excluding file I/O
  std::vector<std::pair<std::string, Rational>> mfw;  // top two
};

struct ReportRow {
  BlockStats stats;
  std::vector<std::string> proposed;
  std::optional<std::string> manual_name;
  std::optional<EvaluationResult> result;
};

struct EvaluationReport {
  std::vector<ReportRow> rows;  // block-id order
  std::vector<std::string> warnings;
  // Over rows that have a result; absent when there are none.
  std::optional<Rational> mean_precision;
  std::optional<Rational> mean_recall;
};

// Splits the manual name with the identifier tokenizer and stems each word.
// Throws DataError if nothing remains.
RelevantWordSet normalize_name(const std::string& manual,
                               const StemmerConfig& cfg,
                               std::string block_id = {});

/// Precision = |retrieved ∩ relevant| / |retrieved|,
/// recall = |retrieved ∩ relevant| / |relevant|, both exact.
/// Throws std::invalid_argument if either side is empty.
EvaluationResult evaluate_block(const NamingResult& result,
                                const RelevantWordSet& relevant);

BlockStats compute_stats(const FeatureBlock& block,
                         const WordWeightTable& unfiltered, double et_ms);

// Truth ids without a matching block are reported in `warnings`.
// Throws PipelineError for an empty corpus.
EvaluationReport evaluate_corpus(const Corpus& corpus, const TruthMap& truth,
                                 const PipelineConfig& cfg, unsigned jobs = 1);

enum class ReportFormat { kCsv, kTable };

std::string emit_report(const EvaluationReport& report, ReportFormat format);

}  // namespace featureclouds

#endif  // FEATURECLOUDS_EVALUATION_H_
