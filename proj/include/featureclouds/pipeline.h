#ifndef FEATURECLOUDS_PIPELINE_H_
#define FEATURECLOUDS_PIPELINE_H_

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>

#include "featureclouds/block.h"
#include "featureclouds/stemmer.h"
#include "featureclouds/tokenizer.h"
#include "featureclouds/weighting.h"

namespace featureclouds {

struct PipelineConfig {
  StemmerConfig stemmer;
  KindWeights kind_weights;
  std::optional<int> short_word_min;
  std::optional<int> min_freq;
  NamingStrategy strategy = TopK{1, true};
};

// Every intermediate stage of naming one block.
struct BlockAnalysis {
  TokenList tokens;
  StemList stems;
  WordWeightTable table;     // before filters
  WordWeightTable filtered;  // after filters
  NamingResult name;
};

BlockAnalysis analyze_block(const FeatureBlock& block,
                            const PipelineConfig& cfg);

// Runs fn(i) for i in [0, count) on up to `jobs` threads (0 = hardware
// concurrency). If any call throws, the exception of the lowest index is
// rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace featureclouds

#endif  // FEATURECLOUDS_PIPELINE_H_
