#include "featureclouds/stemmer.h"

#include <algorithm>
#include <cctype>

#include "featureclouds/error.h"

namespace featureclouds {
namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string detach_plural(const std::string& w) {
  if (ends_with(w, "ies")) return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "sses")) return w.substr(0, w.size() - 2);
  if (ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "xes") ||
      ends_with(w, "zes")) {
    return w.substr(0, w.size() - 2);
  }
  if (ends_with(w, "ss")) return w;
  if (ends_with(w, "s")) return w.substr(0, w.size() - 1);
  return w;
}

std::string detach_verb_form(const std::string& w, int min_stem_len) {
  const auto min_len = static_cast<std::size_t>(min_stem_len);
  std::string out = w;
  if (ends_with(w, "ing") && w.size() - 3 >= min_len) {
    out = w.substr(0, w.size() - 3);
  } else if (ends_with(w, "ed") && w.size() - 2 >= min_len) {
    out = w.substr(0, w.size() - 2);
  } else {
    return w;
  }
  const std::size_t n = out.size();
  if (n >= 2 && out[n - 1] == out[n - 2] && !is_vowel(out[n - 1])) {
    out.pop_back();
  }
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

// Calls fn(line_no, fields) for every non-blank, non-comment line.
template <typename Fn>
void for_each_entry(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    fn(line_no, fields);
  }
}

}  // namespace

std::string stem_word(std::string_view token, const StemmerConfig& cfg) {
  std::string word(token);
  if (!cfg.enabled) return word;

  if (const auto it = cfg.exceptions.find(word); it != cfg.exceptions.end()) {
    return it->second;
  }
  if (word.size() < 3) return word;

  const std::string plural_stripped = detach_plural(word);
  const std::string verb_stripped =
      detach_verb_form(plural_stripped, cfg.min_stem_len);
  if (!cfg.lexicon) return verb_stripped;

  for (const std::string& candidate :
       {verb_stripped, verb_stripped + "e", plural_stripped, word}) {
    if (cfg.lexicon->contains(candidate)) return candidate;
  }
  return word;
}

StemList stem_all(const TokenList& tokens, const StemmerConfig& cfg) {
  StemList stems;
  stems.reserve(tokens.size());
  for (const Token& token : tokens) {
    stems.push_back({stem_word(token.text, cfg), token.source_kind});
  }
  return stems;
}

ExceptionMap load_exceptions(std::string_view text) {
  ExceptionMap map;
  for_each_entry(text, [&](std::size_t line_no, const auto& fields) {
    if (fields.size() != 2) {
      throw ParseError("expected 'word root', got " +
                           std::to_string(fields.size()) + " field(s)",
                       line_no);
    }
    map[lowercase(fields[0])] = lowercase(fields[1]);
  });
  return map;
}

Lexicon load_lexicon(std::string_view text) {
  Lexicon lexicon;
  for_each_entry(text, [&](std::size_t line_no, const auto& fields) {
    if (fields.size() != 1) {
      throw ParseError("expected one word per line", line_no);
    }
    lexicon.insert(lowercase(fields[0]));
  });
  return lexicon;
}

}  // namespace featureclouds
