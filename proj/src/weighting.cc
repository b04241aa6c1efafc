#include "featureclouds/weighting.h"

#include <algorithm>
#include <stdexcept>

#include "featureclouds/error.h"

namespace featureclouds {
namespace {

std::size_t kind_index(IdentifierKind kind) {
  return static_cast<std::size_t>(kind);
}

}  // namespace

KindWeights::KindWeights() { multipliers_.fill(Rational(1)); }

void KindWeights::set(IdentifierKind kind, Rational multiplier) {
  if (multiplier < Rational(0)) {
    throw std::invalid_argument("kind weight for " +
                                std::string(kind_name(kind)) +
                                " must be non-negative");
  }
  auto updated = multipliers_;
  updated[kind_index(kind)] = multiplier;
  if (std::all_of(updated.begin(), updated.end(),
                  [](const Rational& m) { return m == Rational(0); })) {
    throw std::invalid_argument("at least one kind weight must be positive");
  }
  multipliers_ = updated;
}

const Rational& KindWeights::get(IdentifierKind kind) const {
  return multipliers_[kind_index(kind)];
}

KindWeights KindWeights::parse(std::string_view spec) {
  KindWeights kw;
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;

    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected kind=weight, got '" +
                                  std::string(item) + "'");
    }
    const std::string_view name = item.substr(0, eq);
    std::optional<IdentifierKind> kind = parse_kind_tag(name);
    if (!kind && name == "unknown") kind = IdentifierKind::kUnknown;
    if (!kind) {
      throw std::invalid_argument("unknown identifier kind '" +
                                  std::string(name) + "'");
    }
    kw.set(*kind, parse_rational(item.substr(eq + 1)));
  }
  return kw;
}

std::vector<std::pair<std::string, Rational>> ranked_entries(
    const WordWeightTable& table) {
  std::vector<std::pair<std::string, Rational>> ranked(table.entries.begin(),
                                                       table.entries.end());
  // Map iteration is already alphabetical; a stable sort keeps it on ties.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return ranked;
}

std::string describe(const NamingStrategy& strategy) {
  if (const auto* top = std::get_if<TopK>(&strategy)) {
    return "top-k(k=" + std::to_string(top->k) +
           (top->expand_ties ? ", expand-ties)" : ")");
  }
  return "threshold(tau=" + to_string(std::get<RelativeThreshold>(strategy).tau) +
         ")";
}

WordWeightTable build_weight_table(const StemList& stems, const KindWeights& kw,
                                   std::string block_id) {
  WordWeightTable table{std::move(block_id), {}};
  if (stems.empty()) {
    throw EmptyTableError("block '" + table.block_id + "' has no stems");
  }
  for (const Stem& stem : stems) {
    const Rational& m = kw.get(stem.source_kind);
    if (m == Rational(0)) continue;
    table.entries[stem.text] += m;
  }
  if (table.entries.empty()) {
    throw EmptyTableError("kind weights zero out every word of block '" +
                          table.block_id + "'");
  }
  return table;
}

WordWeightTable apply_filters(const WordWeightTable& table,
                              std::optional<int> short_word_min,
                              std::optional<int> min_freq) {
  if (short_word_min && *short_word_min < 1) {
    throw std::invalid_argument("short-word minimum must be >= 1");
  }
  if (min_freq && *min_freq < 1) {
    throw std::invalid_argument("minimum frequency must be >= 1");
  }

  WordWeightTable out{table.block_id, {}};
  for (const auto& [stem, weight] : table.entries) {
    if (short_word_min &&
        stem.size() < static_cast<std::size_t>(*short_word_min)) {
      continue;
    }
    if (min_freq && weight < *min_freq) continue;
    out.entries.emplace(stem, weight);
  }

  if (out.entries.empty() && !table.entries.empty()) {
    std::string filters;
    if (short_word_min) {
      filters += "short-word-min=" + std::to_string(*short_word_min);
    }
    if (min_freq) {
      if (!filters.empty()) filters += ", ";
      filters += "min-freq=" + std::to_string(*min_freq);
    }
    throw FilterError("filters (" + filters + ") removed every word of block '" +
                      table.block_id + "'");
  }
  return out;
}

NamingResult propose_name(const WordWeightTable& table,
                          const NamingStrategy& strategy) {
  if (table.entries.empty()) {
    throw EmptyTableError("cannot name block '" + table.block_id +
                          "': no words");
  }
  const auto ranked = ranked_entries(table);

  std::size_t take = 0;
  if (const auto* top = std::get_if<TopK>(&strategy)) {
    if (top->k < 1) throw std::invalid_argument("top-k requires k >= 1");
    take = std::min(ranked.size(), static_cast<std::size_t>(top->k));
    if (top->expand_ties) {
      const Rational cutoff = ranked[take - 1].second;
      while (take < ranked.size() && ranked[take].second == cutoff) ++take;
    }
  } else {
    const Rational tau = std::get<RelativeThreshold>(strategy).tau;
    if (tau <= Rational(0) || tau > Rational(1)) {
      throw std::invalid_argument("threshold must lie in (0, 1]");
    }
    const Rational cutoff = tau * ranked.front().second;
    while (take < ranked.size() && ranked[take].second >= cutoff) ++take;
  }

  NamingResult result{table.block_id, {}, {}, strategy};
  for (std::size_t i = 0; i < take; ++i) {
    result.words.push_back(ranked[i].first);
    result.weights.push_back(ranked[i].second);
  }
  return result;
}

}  // namespace featureclouds
