#include "featureclouds/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "featureclouds/block.h"
#include "featureclouds/cloud.h"
#include "featureclouds/error.h"
#include "featureclouds/evaluation.h"
#include "featureclouds/pipeline.h"

namespace featureclouds::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kConfigEnv = "FEATURECLOUDS_CONFIG";

// Raised for bad flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineFlags {
  std::string exceptions_file;
  std::string lexicon_file;
  bool no_stem = false;
  int min_stem_len = 3;
  std::optional<int> top_k;
  bool expand_ties = true;
  std::optional<std::string> threshold;
  std::optional<int> short_word_min;
  std::optional<int> min_freq;
  std::string kind_weight;
  unsigned jobs = 0;
};

void add_stemmer_options(CLI::App& sub, PipelineFlags& flags) {
  sub.add_option("--exceptions", flags.exceptions_file,
                 "Irregular forms, one 'word root' pair per line");
  sub.add_option("--lexicon", flags.lexicon_file,
                 "Valid roots, one per line; restricts rule output");
  sub.add_flag("--no-stem", flags.no_stem, "Disable stemming");
  sub.add_option("--min-stem-len", flags.min_stem_len,
                 "Shortest stem left by -ing/-ed removal")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_pipeline_options(CLI::App& sub, PipelineFlags& flags) {
  add_stemmer_options(sub, flags);
  auto* top_k = sub.add_option("--top-k", flags.top_k,
                               "Name with the K heaviest words (default 1)")
                    ->check(CLI::PositiveNumber);
  sub.add_flag("--expand-ties,!--no-expand-ties", flags.expand_ties,
               "Also take words tied with the K-th weight (default on)");
  auto* threshold =
      sub.add_option("--threshold", flags.threshold,
                     "Name with every word weighing >= T * max weight, T in (0,1]");
  top_k->excludes(threshold);
  sub.add_option("--short-word-min", flags.short_word_min,
                 "Drop words shorter than N letters")
      ->check(CLI::PositiveNumber);
  sub.add_option("--min-freq", flags.min_freq, "Drop words with weight below N")
      ->check(CLI::PositiveNumber);
  sub.add_option("--kind-weight", flags.kind_weight,
                 "Per-kind multipliers, e.g. class=2,attribute=0.5");
  sub.add_option("--jobs", flags.jobs,
                 "Blocks processed in parallel (0 = all cores)");
}

PipelineConfig make_pipeline_config(const PipelineFlags& flags) {
  PipelineConfig cfg;
  cfg.stemmer.enabled = !flags.no_stem;
  cfg.stemmer.min_stem_len = flags.min_stem_len;
  if (!flags.exceptions_file.empty()) {
    try {
      cfg.stemmer.exceptions = load_exceptions(read_text_file(flags.exceptions_file));
    } catch (const ParseError& e) {
      throw ParseError(flags.exceptions_file + ": " + e.what(), 0);
    }
  }
  if (!flags.lexicon_file.empty()) {
    try {
      cfg.stemmer.lexicon = load_lexicon(read_text_file(flags.lexicon_file));
    } catch (const ParseError& e) {
      throw ParseError(flags.lexicon_file + ": " + e.what(), 0);
    }
  }
  try {
    if (!flags.kind_weight.empty()) {
      cfg.kind_weights = KindWeights::parse(flags.kind_weight);
    }
    if (flags.threshold) {
      const Rational tau = parse_rational(*flags.threshold);
      if (tau <= Rational(0) || tau > Rational(1)) {
        throw std::invalid_argument("must lie in (0, 1]");
      }
      cfg.strategy = RelativeThreshold{tau};
    } else {
      cfg.strategy = TopK{flags.top_k.value_or(1), flags.expand_ties};
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid pipeline flag: ") + e.what());
  }
  cfg.short_word_min = flags.short_word_min;
  cfg.min_freq = flags.min_freq;
  return cfg;
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << content;
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

// Flat `key = value` file; keys are long flag names without dashes.
std::map<std::string, std::string> read_config(const fs::path& path) {
  const std::string text = read_text_file(path);
  std::map<std::string, std::string> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  const auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string{};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(path.string() + ": expected 'key = value'", line_no);
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key.empty()) throw ParseError(path.string() + ": empty key", line_no);
    values[key] = value;
  }
  return values;
}

CloudLayout parse_layout(const std::string& s) {
  return s == "spiral" ? CloudLayout::kSpiral : CloudLayout::kTypewriter;
}

WordOrder parse_order(const std::string& s) {
  return s == "freq" || s == "frequency" ? WordOrder::kFrequency
                                         : WordOrder::kAlphabetical;
}

std::vector<FeatureBlock> load_inputs(const std::vector<std::string>& paths) {
  std::vector<FeatureBlock> blocks;
  for (const std::string& p : paths) {
    if (fs::is_directory(p)) {
      for (FeatureBlock& b : load_corpus(p).blocks) blocks.push_back(std::move(b));
    } else {
      blocks.push_back(load_block_file(p));
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const FeatureBlock& a, const FeatureBlock& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (blocks[i].id == blocks[i - 1].id) {
      throw DataError("duplicate block id '" + blocks[i].id + "'");
    }
  }
  return blocks;
}

int cmd_tokens(const std::string& path, const PipelineFlags& flags,
               std::ostream& out) {
  const PipelineConfig cfg = make_pipeline_config(flags);
  const FeatureBlock block = load_block_file(path);
  out << "kind\tidentifier\ttoken\tstem\n";
  for (const Identifier& ident : block.identifiers) {
    for (const std::string& token : split_identifier(ident.raw)) {
      out << kind_name(ident.kind) << '\t' << ident.raw << '\t' << token
          << '\t' << stem_word(token, cfg.stemmer) << '\n';
    }
  }
  return kSuccess;
}

int cmd_name(const std::vector<std::string>& paths, const PipelineFlags& flags,
             std::ostream& out) {
  const PipelineConfig cfg = make_pipeline_config(flags);
  const std::vector<FeatureBlock> blocks = load_inputs(paths);
  std::vector<NamingResult> names(blocks.size());
  parallel_for(blocks.size(), flags.jobs, [&](std::size_t i) {
    names[i] = analyze_block(blocks[i], cfg).name;
  });
  for (const NamingResult& name : names) {
    out << name.block_id << ':';
    for (const std::string& w : name.words) out << ' ' << w;
    out << '\n';
  }
  return kSuccess;
}

struct CloudFlags {
  std::string layout = "typewriter";
  std::string order = "alpha";
  bool annotate = false;
  std::string out_file;
  std::string format;
  std::pair<int, int> canvas{800, 600};
  int font_min = 10;
  int font_max = 48;
  int padding = 4;
  double spiral_step = 2.0;
  double spiral_dtheta = 0.35;
};

int cmd_cloud(const std::string& path, const PipelineFlags& flags,
              const CloudFlags& cf, std::ostream& out) {
  const PipelineConfig pcfg = make_pipeline_config(flags);
  CloudConfig cfg;
  cfg.layout = parse_layout(cf.layout);
  cfg.order = parse_order(cf.order);
  cfg.annotate_freq = cf.annotate;
  cfg.canvas_w = cf.canvas.first;
  cfg.canvas_h = cf.canvas.second;
  cfg.font_min = cf.font_min;
  cfg.font_max = cf.font_max;
  cfg.padding = cf.padding;
  cfg.spiral_step = cf.spiral_step;
  cfg.spiral_dtheta = cf.spiral_dtheta;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid cloud flag: ") + e.what());
  }

  const FeatureBlock block = load_block_file(path);
  const BlockAnalysis analysis = analyze_block(block, pcfg);
  const WordCloud cloud = build_cloud(analysis.filtered, cfg);

  std::string format = cf.format;
  if (format.empty()) {
    format = fs::path(cf.out_file).extension() == ".svg" ? "svg" : "text";
  }
  const std::string rendered =
      format == "svg" ? render_svg(cloud) : render_text(cloud);
  if (cf.out_file.empty()) {
    out << rendered;
  } else {
    write_text_file(cf.out_file, rendered);
  }
  return kSuccess;
}

struct EvalFlags {
  std::string corpus_dir;
  std::string truth_file;
  std::string report_file;
  std::string format;
};

int cmd_eval(const EvalFlags& ef, const PipelineFlags& flags, std::ostream& out,
             std::ostream& err) {
  const PipelineConfig cfg = make_pipeline_config(flags);
  const Corpus corpus = load_corpus(ef.corpus_dir);
  TruthMap truth;
  if (!ef.truth_file.empty()) {
    try {
      truth = load_truth(read_text_file(ef.truth_file));
    } catch (const ParseError& e) {
      throw ParseError(ef.truth_file + ": " + e.what(), 0);
    }
  }
  const EvaluationReport report = evaluate_corpus(corpus, truth, cfg, flags.jobs);
  for (const std::string& w : report.warnings) err << "warning: " << w << '\n';

  std::string format = ef.format;
  if (format.empty()) {
    format = fs::path(ef.report_file).extension() == ".csv" ? "csv" : "table";
  }
  const std::string rendered = emit_report(
      report, format == "csv" ? ReportFormat::kCsv : ReportFormat::kTable);
  if (ef.report_file.empty()) {
    out << rendered;
  } else {
    write_text_file(ef.report_file, rendered);
  }
  return kSuccess;
}

// Pulls `--config FILE` / `--config=FILE` out of args; falls back to the
// environment variable.
std::optional<std::string> extract_config_path(std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config requires a file");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i),
                 args.begin() + static_cast<long>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  if (!path) {
    if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
  }
  return path;
}

// Inserts config values as flags right after the subcommand name, so flags
// given on the command line (which come later) take precedence.
void apply_config(CLI::App& app, std::vector<std::string>& args,
                  const std::map<std::string, std::string>& config) {
  if (config.empty() || args.empty()) return;
  CLI::App* sub = nullptr;
  std::size_t sub_pos = 0;
  for (; sub_pos < args.size(); ++sub_pos) {
    sub = app.get_subcommand_no_throw(args[sub_pos]);
    if (sub) break;
  }

  std::vector<std::string> injected;
  for (const auto& [key, value] : config) {
    bool known = false;
    for (CLI::App* candidate : app.get_subcommands({})) {
      if (candidate->get_option_no_throw("--" + key)) known = true;
    }
    if (!known) throw UsageError("unknown config key '" + key + "'");
    if (sub && sub->get_option_no_throw("--" + key)) {
      injected.push_back("--" + key + "=" + value);
    }
  }
  if (sub) {
    args.insert(args.begin() + static_cast<long>(sub_pos) + 1, injected.begin(),
                injected.end());
  }
}

}  // namespace

int run(const std::vector<std::string>& input_args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Names feature implementation blocks from their identifier vocabulary",
               "featureclouds"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  app.footer(std::string("Global option: --config FILE (default: $") + kConfigEnv +
             "), flat 'key = value' lines using flag names as keys.");

  PipelineFlags flags;

  std::string tokens_path;
  CLI::App* tokens = app.add_subcommand(
      "tokens", "Show identifiers, split tokens and stems of one block");
  tokens->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  tokens->add_option("block", tokens_path, "Block file")->required();
  add_stemmer_options(*tokens, flags);

  std::vector<std::string> name_paths;
  CLI::App* name = app.add_subcommand("name", "Propose a name for each block");
  name->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  name->add_option("inputs", name_paths, "Block files or corpus directories")
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_pipeline_options(*name, flags);

  std::string cloud_path;
  CloudFlags cloud_flags;
  CLI::App* cloud = app.add_subcommand("cloud", "Render the word cloud of a block");
  cloud->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cloud->add_option("block", cloud_path, "Block file")->required();
  add_pipeline_options(*cloud, flags);
  cloud->add_option("--layout", cloud_flags.layout, "typewriter or spiral")
      ->check(CLI::IsMember({"typewriter", "spiral"}))
      ->capture_default_str();
  cloud->add_option("--order", cloud_flags.order, "alpha or freq")
      ->check(CLI::IsMember({"alpha", "alphabetical", "freq", "frequency"}))
      ->capture_default_str();
  cloud->add_flag("--annotate-freq", cloud_flags.annotate,
                  "Show each word's weight in brackets");
  cloud->add_option("--out", cloud_flags.out_file,
                    "Output file (.svg renders SVG, anything else text)");
  cloud->add_option("--format", cloud_flags.format, "svg or text")
      ->check(CLI::IsMember({"svg", "text"}));
  cloud->add_option("--canvas", cloud_flags.canvas, "Canvas size WxH")
      ->delimiter('x')
      ->expected(2)
      ->check(CLI::PositiveNumber);
  cloud->add_option("--font-min", cloud_flags.font_min)->capture_default_str();
  cloud->add_option("--font-max", cloud_flags.font_max)->capture_default_str();
  cloud->add_option("--padding", cloud_flags.padding)->capture_default_str();
  cloud->add_option("--spiral-step", cloud_flags.spiral_step,
                    "Spiral radius growth in px per radian")
      ->capture_default_str();
  cloud->add_option("--spiral-dtheta", cloud_flags.spiral_dtheta,
                    "Spiral angle increment in radians")
      ->capture_default_str();

  EvalFlags eval_flags;
  CLI::App* eval = app.add_subcommand(
      "eval", "Score proposed names against manual names (precision/recall)");
  eval->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  eval->add_option("corpus", eval_flags.corpus_dir, "Directory of .block files")
      ->required();
  eval->add_option("--truth", eval_flags.truth_file,
                   "CSV with header block_id,manual_name");
  eval->add_option("--report", eval_flags.report_file,
                   "Output file (default: stdout)");
  eval->add_option("--format", eval_flags.format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));
  add_pipeline_options(*eval, flags);

  try {
    std::vector<std::string> args = input_args;
    if (const auto config_path = extract_config_path(args)) {
      apply_config(app, args, read_config(*config_path));
    }
    // CLI11 consumes a reversed argument vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kSuccess;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }

    if (tokens->parsed()) return cmd_tokens(tokens_path, flags, out);
    if (name->parsed()) return cmd_name(name_paths, flags, out);
    if (cloud->parsed()) return cmd_cloud(cloud_path, flags, cloud_flags, out);
    if (eval->parsed()) return cmd_eval(eval_flags, flags, out, err);
    err << "error: no subcommand\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const PipelineError& e) {
    err << "error: " << e.what() << '\n';
    return kPipelineError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPipelineError;
  }
}

}  // namespace featureclouds::cli
