#include "featureclouds/pipeline.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace featureclouds {

BlockAnalysis analyze_block(const FeatureBlock& block,
                            const PipelineConfig& cfg) {
  BlockAnalysis analysis;
  analysis.tokens = tokenize_block(block);
  analysis.stems = stem_all(analysis.tokens, cfg.stemmer);
  analysis.table =
      build_weight_table(analysis.stems, cfg.kind_weights, block.id);
  analysis.filtered =
      apply_filters(analysis.table, cfg.short_word_min, cfg.min_freq);
  analysis.name = propose_name(analysis.filtered, cfg.strategy);
  return analysis;
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(jobs, count);

  std::vector<std::exception_ptr> errors(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace featureclouds
