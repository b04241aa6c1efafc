#ifndef FEATURECLOUDS_TOKENIZER_H_
#define FEATURECLOUDS_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "featureclouds/block.h"

namespace featureclouds {

struct Token {
  std::string text;  // lowercase [a-z0-9]+
  IdentifierKind source_kind = IdentifierKind::kUnknown;

  friend bool operator==(const Token&, const Token&) = default;
};

// Tokens of one block: identifier order, then left to right.
using TokenList = std::vector<Token>;

/// Camel-case split of one identifier name.
///
/// Boundaries are placed at every character outside [A-Za-z0-9] (the
/// character itself is dropped), before every uppercase letter, and between
/// letters and digits. Runs of capitals are not grouped into acronyms, so
/// "UMLActivity" yields u, m, l, activity. Bytes outside ASCII are
/// separators. Returns an empty list for separator-only input.
std::vector<std::string> split_identifier(std::string_view raw);

// Throws EmptyTokensError when no identifier of the block yields a token.
TokenList tokenize_block(const FeatureBlock& block);

}  // namespace featureclouds

#endif  // FEATURECLOUDS_TOKENIZER_H_
