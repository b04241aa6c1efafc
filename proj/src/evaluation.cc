#include "featureclouds/evaluation.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iterator>
#include <stdexcept>

#include "featureclouds/csv.h"
#include "featureclouds/error.h"

namespace featureclouds {
namespace {

constexpr std::size_t kMostFrequentCount = 2;

std::string join(const std::vector<std::string>& words, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string format_mfw(const BlockStats& stats, std::size_t i) {
  if (i >= stats.mfw.size()) return {};
  return stats.mfw[i].first + " (" + to_string(stats.mfw[i].second) + ")";
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> columns = {
      "block_id", "manual_name", "proposed_name", "recall", "precision",
      "noc",      "now",         "et_ms",         "mfw1",   "mfw2"};
  return columns;
}

std::vector<std::string> row_cells(const ReportRow& row, ReportFormat format) {
  const auto metric = [&](const Rational& value) {
    return format == ReportFormat::kCsv ? to_decimal(value, 4)
                                        : to_percent(value);
  };
  return {row.stats.block_id,
          row.manual_name.value_or(""),
          join(row.proposed, " "),
          row.result ? metric(row.result->recall) : "",
          row.result ? metric(row.result->precision) : "",
          std::to_string(row.stats.noc),
          std::to_string(row.stats.now),
          format_ms(row.stats.et_ms),
          format_mfw(row.stats, 0),
          format_mfw(row.stats, 1)};
}

std::string emit_table(const EvaluationReport& report) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(report_columns());
  for (const ReportRow& row : report.rows) {
    cells.push_back(row_cells(row, ReportFormat::kTable));
  }
  if (report.mean_recall && report.mean_precision) {
    std::vector<std::string> mean(report_columns().size());
    mean[0] = "mean";
    mean[3] = to_percent(*report.mean_recall);
    mean[4] = to_percent(*report.mean_precision);
    cells.push_back(std::move(mean));
  }

  std::vector<std::size_t> width(report_columns().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }

  std::string out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += "  ";
      text += line[c];
      text.append(width[c] - line[c].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text;
    out += '\n';
  }
  return out;
}

}  // namespace

RelevantWordSet normalize_name(const std::string& manual,
                               const StemmerConfig& cfg,
                               std::string block_id) {
  RelevantWordSet set{std::move(block_id), {}};
  for (const std::string& token : split_identifier(manual)) {
    set.words.insert(stem_word(token, cfg));
  }
  if (set.words.empty()) {
    throw DataError("manual name '" + manual + "' contains no words");
  }
  return set;
}

EvaluationResult evaluate_block(const NamingResult& result,
                                const RelevantWordSet& relevant) {
  if (result.words.empty()) {
    throw std::invalid_argument("no retrieved words for block '" +
                                result.block_id + "'");
  }
  if (relevant.words.empty()) {
    throw std::invalid_argument("no relevant words for block '" +
                                result.block_id + "'");
  }

  EvaluationResult eval;
  eval.block_id = result.block_id;
  eval.retrieved = result.words;
  eval.relevant = relevant.words;
  const std::set<std::string> retrieved(result.words.begin(),
                                        result.words.end());
  std::set_intersection(retrieved.begin(), retrieved.end(),
                        relevant.words.begin(), relevant.words.end(),
                        std::inserter(eval.correctly_retrieved,
                                      eval.correctly_retrieved.end()));
  const auto correct = static_cast<std::int64_t>(eval.correctly_retrieved.size());
  eval.precision = Rational(correct, static_cast<std::int64_t>(retrieved.size()));
  eval.recall = Rational(correct, static_cast<std::int64_t>(relevant.words.size()));
  return eval;
}

BlockStats compute_stats(const FeatureBlock& block,
                         const WordWeightTable& unfiltered, double et_ms) {
  BlockStats stats;
  stats.block_id = block.id;
  stats.noc = static_cast<int>(std::count_if(
      block.identifiers.begin(), block.identifiers.end(),
      [](const Identifier& i) { return i.kind == IdentifierKind::kClass; }));
  stats.now = static_cast<int>(unfiltered.entries.size());
  stats.et_ms = et_ms;
  auto ranked = ranked_entries(unfiltered);
  if (ranked.size() > kMostFrequentCount) ranked.resize(kMostFrequentCount);
  stats.mfw = std::move(ranked);
  return stats;
}

EvaluationReport evaluate_corpus(const Corpus& corpus, const TruthMap& truth,
                                 const PipelineConfig& cfg, unsigned jobs) {
  if (corpus.blocks.empty()) throw PipelineError("corpus contains no blocks");

  EvaluationReport report;
  for (const auto& [id, name] : truth) {
    const bool found = std::any_of(
        corpus.blocks.begin(), corpus.blocks.end(),
        [&](const FeatureBlock& b) { return b.id == id; });
    if (!found) {
      report.warnings.push_back("truth entry '" + id +
                                "' has no matching block");
    }
  }

  report.rows.resize(corpus.blocks.size());
  parallel_for(corpus.blocks.size(), jobs, [&](std::size_t i) {
    const FeatureBlock& block = corpus.blocks[i];
    const auto start = std::chrono::steady_clock::now();
    BlockAnalysis analysis = analyze_block(block, cfg);
    const auto stop = std::chrono::steady_clock::now();
    const double et_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();

    ReportRow& row = report.rows[i];
    row.stats = compute_stats(block, analysis.table, et_ms);
    row.proposed = analysis.name.words;
    if (const auto it = truth.find(block.id); it != truth.end()) {
      row.manual_name = it->second;
      row.result = evaluate_block(
          analysis.name, normalize_name(it->second, cfg.stemmer, block.id));
    }
  });

  Rational precision_sum;
  Rational recall_sum;
  std::int64_t evaluated = 0;
  for (const ReportRow& row : report.rows) {
    if (!row.result) continue;
    precision_sum += row.result->precision;
    recall_sum += row.result->recall;
    ++evaluated;
  }
  if (evaluated > 0) {
    report.mean_precision = precision_sum / evaluated;
    report.mean_recall = recall_sum / evaluated;
  }
  return report;
}

std::string emit_report(const EvaluationReport& report, ReportFormat format) {
  if (format == ReportFormat::kTable) return emit_table(report);
  std::string out = csv::format_row(report_columns()) + "\n";
  for (const ReportRow& row : report.rows) {
    out += csv::format_row(row_cells(row, ReportFormat::kCsv));
    out += '\n';
  }
  return out;
}

}  // namespace featureclouds
