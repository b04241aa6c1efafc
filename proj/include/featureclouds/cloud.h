#ifndef FEATURECLOUDS_CLOUD_H_
#define FEATURECLOUDS_CLOUD_H_

#include <string>
#include <vector>

#include "featureclouds/rational.h"
#include "featureclouds/weighting.h"

namespace featureclouds {

enum class CloudLayout { kTypewriter, kSpiral };
enum class WordOrder { kAlphabetical, kFrequency };

struct CloudConfig {
  CloudLayout layout = CloudLayout::kTypewriter;
  WordOrder order = WordOrder::kAlphabetical;
  bool annotate_freq = false;
  int font_min = 10;
  int font_max = 48;
  int canvas_w = 800;
  int canvas_h = 600;
  int padding = 4;
  double spiral_step = 2.0;     // px per radian
  double spiral_dtheta = 0.35;  // radians

  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

// Axis-aligned box in canvas pixels; (x, y) is the top-left corner.
struct Box {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool intersects(const Box& other) const;
  bool inside(int canvas_w, int canvas_h) const;

  friend bool operator==(const Box&, const Box&) = default;
};

struct CloudEntry {
  std::string stem;
  Rational weight;
  int font_px = 0;
  Box box;
  int row = 0;  // typewriter row; 0 for spiral
};

struct WordCloud {
  std::string block_id;
  std::vector<CloudEntry> entries;
  CloudConfig config;
};

// Entries with stem and weight set, in the requested order.
std::vector<CloudEntry> order_words(const WordWeightTable& table,
                                    WordOrder order);

// Linear map of [w_min, w_max] onto [font_min, font_max], rounded half up.
int font_size(const Rational& weight, const Rational& w_min,
              const Rational& w_max, const CloudConfig& cfg);

// Monospace estimate: 0.6 * font_px per character, rounded up.
int text_width(int font_px, std::size_t chars);

// Both layouts fill in `box` (and `row`) for every entry and throw
// LayoutOverflowError when the canvas is too small.
void layout_typewriter(std::vector<CloudEntry>& entries,
                       const CloudConfig& cfg);
void layout_spiral(std::vector<CloudEntry>& entries, const CloudConfig& cfg);

// Orders, sizes and lays out the words of `table`.
WordCloud build_cloud(const WordWeightTable& table, const CloudConfig& cfg);

std::string render_svg(const WordCloud& cloud);
std::string render_text(const WordCloud& cloud);

}  // namespace featureclouds

#endif  // FEATURECLOUDS_CLOUD_H_
