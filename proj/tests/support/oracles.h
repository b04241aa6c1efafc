// Test-only reference implementations and fixture data. Nothing here
// calls into the library code paths it is used to check.
#ifndef FEATURECLOUDS_TESTS_SUPPORT_ORACLES_H_
#define FEATURECLOUDS_TESTS_SUPPORT_ORACLES_H_

#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "featureclouds/cloud.h"

namespace featureclouds::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(FEATURECLOUDS_FIXTURE_DIR) + "/" + name;
}

// Marks every boundary with a space, then lets a stream split the words.
inline std::vector<std::string> reference_split(const std::string& raw) {
  std::string marked;
  char prev = ' ';
  for (char c : raw) {
    const bool upper = c >= 'A' && c <= 'Z';
    const bool lower = c >= 'a' && c <= 'z';
    const bool digit = c >= '0' && c <= '9';
    const bool prev_letter = (prev >= 'A' && prev <= 'Z') || (prev >= 'a' && prev <= 'z');
    const bool prev_digit = prev >= '0' && prev <= '9';
    if (!upper && !lower && !digit) {
      marked += ' ';
    } else {
      if (upper || (digit && prev_letter) || ((upper || lower) && prev_digit)) {
        marked += ' ';
      }
      marked += upper ? static_cast<char>(c + ('a' - 'A')) : c;
    }
    prev = c;
  }
  std::istringstream in(marked);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

// Identifier with separators removed and letters lowercased.
inline std::string squeezed_lower(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (c >= 'A' && c <= 'Z') out += static_cast<char>(c + ('a' - 'A'));
    else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) out += c;
  }
  return out;
}

// Random identifier-ish strings: letters of both cases, digits, common
// separators and the occasional non-ASCII byte.
inline std::string random_identifier(std::mt19937& rng) {
  static const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.$- ";
  std::uniform_int_distribution<int> len(1, 24);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> rare(0, 40);
  std::string s;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    if (rare(rng) == 0) s += "\xC3\xA9";  // é
    else s += alphabet[pick(rng)];
  }
  return s;
}

struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

// Counts shared words with nested loops over the raw (deduplicated) lists.
inline std::pair<Fraction, Fraction> brute_force_metrics(
    const std::vector<std::string>& retrieved,
    const std::vector<std::string>& relevant) {
  std::int64_t correct = 0;
  for (const auto& r : retrieved) {
    for (const auto& v : relevant) {
      if (r == v) ++correct;
    }
  }
  return {{correct, static_cast<std::int64_t>(retrieved.size())},
          {correct, static_cast<std::int64_t>(relevant.size())}};
}

inline bool boxes_overlap(const Box& a, const Box& b) {
  const bool x_apart = a.x + a.w <= b.x || b.x + b.w <= a.x;
  const bool y_apart = a.y + a.h <= b.y || b.y + b.h <= a.y;
  return !(x_apart || y_apart);
}

// ---- Fixture data ---------------------------------------------------------

// Identifiers of the oval block, in printed order.
inline const std::vector<std::string>& oval_identifiers() {
  static const std::vector<std::string> v = {
      "MyOval", "getOvalx", "getOvaly", "Oval", "setOvaly",
      "setOvalx", "Drawing.Shapes.Oval", "Ovalx", "Ovaly", "OvalSettings"};
  return v;
}

// Split words of the oval block as printed (18 rows).
inline const std::vector<std::string>& oval_tokens() {
  static const std::vector<std::string> v = {
      "my",    "oval", "get",     "ovalx",  "get",  "ovaly",
      "oval",  "set",  "ovaly",   "set",    "ovalx", "drawing",
      "shapes", "oval", "ovalx",  "ovaly",  "oval", "settings"};
  return v;
}

inline const std::map<std::string, std::int64_t>& oval_weights() {
  static const std::map<std::string, std::int64_t> v = {
      {"oval", 4}, {"ovalx", 3}, {"ovaly", 3}, {"set", 3},
      {"get", 2},  {"draw", 1},  {"my", 1},    {"shape", 1}};
  return v;
}

inline const std::vector<std::string>& activity_identifiers() {
  static const std::vector<std::string> v = {
      "FigPool",
      "ActivityDiagramGraphModel",
      "FigCallState",
      "FigSubactivityState",
      "ActivityDiagramLayouter",
      "SelectionCallState",
      "SelectionPartition",
      "FigObjectFlowState",
      "FigPartition",
      "FigActionState",
      "PropPanelUMLActivityDiagram",
      "InitActivityDiagram",
      "ActionActivityDiagram",
      "ActionCreatePartition",
      "ActivityDiagramRenderer",
      "ActivityDiagramPropPanelFactory",
      "ModePlacePartition",
      "UMLActivityDiagram"};
  return v;
}

struct NamingRow {
  std::string manual;
  std::vector<std::string> retrieved;
  Fraction recall;
  Fraction precision;
};

// Manual name, retrieved words and printed (recall, precision) per feature.
inline const std::vector<NamingRow>& argouml_naming_rows() {
  static const std::vector<NamingRow> v = {
      {"State", {"state"}, {1, 1}, {1, 1}},
      {"Collaboration", {"collaboration"}, {1, 1}, {1, 1}},
      {"Activity", {"activity", "diagram"}, {1, 1}, {1, 2}},
      {"Use case", {"use", "case"}, {1, 1}, {1, 1}},
      {"Sequence", {"fig", "sequence", "diagram", "message"}, {1, 1}, {1, 4}},
      {"Deployment", {"fig", "deployment", "diagram"}, {1, 1}, {1, 3}},
      {"Class", {"action", "m", "u", "l", "model", "list"}, {0, 1}, {0, 1}},
      {"Cognitive support", {"cr", "to", "name", "do"}, {0, 1}, {0, 1}},
      {"Logging", {"log", "info"}, {1, 1}, {1, 2}}};
  return v;
}

}  // namespace featureclouds::testing

#endif  // FEATURECLOUDS_TESTS_SUPPORT_ORACLES_H_
