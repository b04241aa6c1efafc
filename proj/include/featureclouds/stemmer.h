#ifndef FEATURECLOUDS_STEMMER_H_
#define FEATURECLOUDS_STEMMER_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "featureclouds/tokenizer.h"

namespace featureclouds {

using ExceptionMap = std::map<std::string, std::string>;
using Lexicon = std::set<std::string>;

struct StemmerConfig {
  ExceptionMap exceptions;
  // When present, a rule-derived root is only accepted if it is a member.
  std::optional<Lexicon> lexicon;
  int min_stem_len = 3;
  bool enabled = true;
};

struct Stem {
  std::string text;
  IdentifierKind source_kind = IdentifierKind::kUnknown;

  friend bool operator==(const Stem&, const Stem&) = default;
};

// Positionally aligned with the TokenList it was built from.
using StemList = std::vector<Stem>;

/// Reduces a lowercase token to its root with suffix detachment rules.
///
/// In order:
///  1. exceptions lookup; a hit is returned as is.
///  2. plural: ies->y, sses->ss, (ch|sh|x|z)es->drop "es", "ss" kept,
///     trailing "s" dropped.
///  3. verb form: drop "ing" or "ed" if at least `min_stem_len` characters
///     remain; a doubled trailing consonant left behind is collapsed
///     ("logging" -> "logg" -> "log").
///  4. with a lexicon, the first member among (step 3, step 3 + "e",
///     step 2, token) wins; if none is a member the token is returned.
///
/// Tokens shorter than three characters skip steps 2 and 3.
std::string stem_word(std::string_view token, const StemmerConfig& cfg);

StemList stem_all(const TokenList& tokens, const StemmerConfig& cfg);

// One `word root` pair per line. Blank lines and `#` comments are skipped.
ExceptionMap load_exceptions(std::string_view text);

// One word per line.
Lexicon load_lexicon(std::string_view text);

}  // namespace featureclouds

#endif  // FEATURECLOUDS_STEMMER_H_
