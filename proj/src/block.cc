#include "featureclouds/block.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "featureclouds/csv.h"
#include "featureclouds/error.h"

namespace featureclouds {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view strip_bom(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  return text;
}

}  // namespace

std::string_view kind_name(IdentifierKind kind) {
  switch (kind) {
    case IdentifierKind::kPackage:
      return "package";
    case IdentifierKind::kClass:
      return "class";
    case IdentifierKind::kMethod:
      return "method";
    case IdentifierKind::kAttribute:
      return "attribute";
    case IdentifierKind::kUnknown:
      break;
  }
  return "unknown";
}

std::optional<IdentifierKind> parse_kind_tag(std::string_view tag) {
  if (tag == "package") return IdentifierKind::kPackage;
  if (tag == "class") return IdentifierKind::kClass;
  if (tag == "method") return IdentifierKind::kMethod;
  if (tag == "attribute") return IdentifierKind::kAttribute;
  return std::nullopt;
}

FeatureBlock parse_block_file(std::string_view text, std::string id) {
  FeatureBlock block{std::move(id), {}};
  text = strip_bom(text);

  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      block.identifiers.push_back({std::string(content),
                                   IdentifierKind::kUnknown});
      continue;
    }

    const std::string_view tag = trim(line.substr(0, tab));
    const std::string_view name = trim(line.substr(tab + 1));
    const auto kind = parse_kind_tag(tag);
    if (!kind) {
      throw ParseError("unknown identifier kind '" + std::string(tag) +
                           "' (expected package, class, method or attribute)",
                       line_no);
    }
    if (name.empty()) throw ParseError("empty identifier name", line_no);
    if (name.find('\t') != std::string_view::npos) {
      throw ParseError("unexpected extra tab-separated field", line_no);
    }
    block.identifiers.push_back({std::string(name), *kind});
  }

  if (block.identifiers.empty()) {
    throw EmptyBlockError("block '" + block.id + "' has no identifiers");
  }
  return block;
}

std::string serialize_block(const FeatureBlock& block) {
  std::string out;
  for (const Identifier& ident : block.identifiers) {
    if (ident.kind != IdentifierKind::kUnknown) {
      out += kind_name(ident.kind);
      out += '\t';
    }
    out += ident.raw;
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return buf.str();
}

FeatureBlock load_block_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_block_file(text, path.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  } catch (const EmptyBlockError& e) {
    throw EmptyBlockError(path.string() + ": " + e.what());
  }
}

Corpus load_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError(dir, "not a readable directory");

  std::vector<fs::path> files;
  fs::directory_iterator it(dir, ec);
  if (ec) throw IoError(dir, ec.message());
  for (const fs::directory_entry& entry : it) {
    if (entry.path().extension() == ".block" && !entry.is_directory()) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.stem().string() < b.stem().string();
  });

  Corpus corpus;
  corpus.blocks.reserve(files.size());
  for (const fs::path& file : files) {
    corpus.blocks.push_back(load_block_file(file));
  }
  return corpus;
}

TruthMap load_truth(std::string_view csv_text) {
  const std::vector<csv::Row> rows = csv::parse(strip_bom(csv_text));
  if (rows.empty()) throw ParseError("missing header block_id,manual_name", 1);

  const csv::Row& header = rows.front();
  if (header.size() != 2 || trim(header[0]) != "block_id" ||
      trim(header[1]) != "manual_name") {
    throw ParseError("expected header block_id,manual_name", 1);
  }

  TruthMap truth;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const csv::Row& row = rows[i];
    const std::size_t record = i + 1;
    if (row.size() == 1 && trim(row[0]).empty()) continue;
    if (row.size() != 2) {
      throw ParseError("expected 2 fields, got " + std::to_string(row.size()),
                       record);
    }
    std::string id(trim(row[0]));
    std::string name(trim(row[1]));
    if (id.empty()) throw ParseError("empty block_id", record);
    if (name.empty()) {
      throw ParseError("empty manual_name for block '" + id + "'", record);
    }
    if (!truth.emplace(id, std::move(name)).second) {
      throw ParseError("duplicate block_id '" + id + "'", record);
    }
  }
  return truth;
}

}  // namespace featureclouds
