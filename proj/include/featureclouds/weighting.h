#ifndef FEATURECLOUDS_WEIGHTING_H_
#define FEATURECLOUDS_WEIGHTING_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "featureclouds/block.h"
#include "featureclouds/rational.h"
#include "featureclouds/stemmer.h"

namespace featureclouds {

// Per-kind multiplier applied to each stem occurrence. Defaults to 1 for
// every kind, which makes weights plain occurrence counts.
class KindWeights {
 public:
  KindWeights();

  // Throws std::invalid_argument on a negative multiplier or when the
  // update would leave every multiplier at zero.
  void set(IdentifierKind kind, Rational multiplier);
  const Rational& get(IdentifierKind kind) const;

  // Parses "class=2,attribute=0.5". Kinds not listed keep their value.
  static KindWeights parse(std::string_view spec);

 private:
  std::array<Rational, 5> multipliers_;
};

struct WordWeightTable {
  std::string block_id;
  std::map<std::string, Rational> entries;  // stem -> weight > 0
};

// Weight-descending, alphabetical on ties.
std::vector<std::pair<std::string, Rational>> ranked_entries(
    const WordWeightTable& table);

struct TopK {
  int k = 1;
  bool expand_ties = true;
};

struct RelativeThreshold {
  Rational tau{1};  // in (0, 1]
};

using NamingStrategy = std::variant<TopK, RelativeThreshold>;

std::string describe(const NamingStrategy& strategy);

struct NamingResult {
  std::string block_id;
  std::vector<std::string> words;
  std::vector<Rational> weights;
  NamingStrategy strategy;
};

// Throws EmptyTableError when the stem list is empty or every occurrence
// carries a zero multiplier.
WordWeightTable build_weight_table(const StemList& stems, const KindWeights& kw,
                                   std::string block_id = {});

/// Drops stems shorter than `short_word_min` characters and stems whose
/// weight is below `min_freq`. Absent thresholds are not applied.
/// Throws FilterError if nothing survives, std::invalid_argument for a
/// threshold below 1.
WordWeightTable apply_filters(const WordWeightTable& table,
                              std::optional<int> short_word_min,
                              std::optional<int> min_freq);

// Precondition: non-empty table (EmptyTableError otherwise).
NamingResult propose_name(const WordWeightTable& table,
                          const NamingStrategy& strategy);

}  // namespace featureclouds

#endif  // FEATURECLOUDS_WEIGHTING_H_
