#ifndef FEATURECLOUDS_BLOCK_H_
#define FEATURECLOUDS_BLOCK_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace featureclouds {

enum class IdentifierKind { kPackage, kClass, kMethod, kAttribute, kUnknown };

std::string_view kind_name(IdentifierKind kind);

// Parses a block-file kind tag. `unknown` is not a valid tag.
std::optional<IdentifierKind> parse_kind_tag(std::string_view tag);

struct Identifier {
  std::string raw;
  IdentifierKind kind = IdentifierKind::kUnknown;

  friend bool operator==(const Identifier&, const Identifier&) = default;
};

// One identified feature implementation block. Identifier order is the
// order of the source file. Duplicate identifiers are kept and each
// occurrence contributes its tokens.
struct FeatureBlock {
  std::string id;
  std::vector<Identifier> identifiers;

  friend bool operator==(const FeatureBlock&, const FeatureBlock&) = default;
};

// Blocks sorted by id. Ids are unique because they come from file names.
struct Corpus {
  std::vector<FeatureBlock> blocks;
};

// block id -> manual feature name from the feature model.
using TruthMap = std::map<std::string, std::string>;

/// Parses the line-oriented block format:
///
///     # comment
///     class<TAB>MyOval
///     getOvalx
///
/// Bare lines get kind `unknown`. Accepts LF or CRLF endings and a UTF-8 BOM.
/// Throws ParseError for a bad kind tag or an empty name, EmptyBlockError
/// when no identifier is present.
FeatureBlock parse_block_file(std::string_view text, std::string id);

// Writes `block` in the format read by parse_block_file. Unknown-kind
// identifiers are written as bare lines.
std::string serialize_block(const FeatureBlock& block);

FeatureBlock load_block_file(const std::filesystem::path& path);

// Loads every `*.block` file in `dir` (non-recursive). Errors are rethrown
// with the offending path prefixed.
Corpus load_corpus(const std::filesystem::path& dir);

// Reads a CSV with header `block_id,manual_name`.
TruthMap load_truth(std::string_view csv_text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace featureclouds

#endif  // FEATURECLOUDS_BLOCK_H_
