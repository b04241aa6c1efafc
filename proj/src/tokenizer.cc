#include "featureclouds/tokenizer.h"

#include "featureclouds/error.h"

namespace featureclouds {
namespace {

enum class CharClass { kSeparator, kUpper, kLower, kDigit };

CharClass classify(char c) {
  if (c >= 'A' && c <= 'Z') return CharClass::kUpper;
  if (c >= 'a' && c <= 'z') return CharClass::kLower;
  if (c >= '0' && c <= '9') return CharClass::kDigit;
  return CharClass::kSeparator;
}

bool is_letter(CharClass c) {
  return c == CharClass::kUpper || c == CharClass::kLower;
}

}  // namespace

std::vector<std::string> split_identifier(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  CharClass prev = CharClass::kSeparator;

  const auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };

  for (char c : raw) {
    const CharClass cls = classify(c);
    if (cls == CharClass::kSeparator) {
      flush();
    } else {
      const bool boundary =
          cls == CharClass::kUpper ||
          (cls == CharClass::kDigit && is_letter(prev)) ||
          (is_letter(cls) && prev == CharClass::kDigit);
      if (boundary) flush();
      current += cls == CharClass::kUpper ? static_cast<char>(c - 'A' + 'a') : c;
    }
    prev = cls;
  }
  flush();
  return tokens;
}

TokenList tokenize_block(const FeatureBlock& block) {
  TokenList tokens;
  for (const Identifier& ident : block.identifiers) {
    for (std::string& text : split_identifier(ident.raw)) {
      tokens.push_back({std::move(text), ident.kind});
    }
  }
  if (tokens.empty()) {
    throw EmptyTokensError("block '" + block.id +
                           "' yields no word tokens after splitting");
  }
  return tokens;
}

}  // namespace featureclouds
