#include "featureclouds/cloud.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "featureclouds/error.h"

namespace featureclouds {
namespace {

std::string label(const CloudEntry& entry, bool annotate) {
  if (!annotate) return entry.stem;
  return entry.stem + " [" + to_string(entry.weight) + "]";
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void size_entries(std::vector<CloudEntry>& entries, const CloudConfig& cfg) {
  const auto [lo, hi] = std::minmax_element(
      entries.begin(), entries.end(),
      [](const CloudEntry& a, const CloudEntry& b) { return a.weight < b.weight; });
  const Rational w_min = lo->weight;
  const Rational w_max = hi->weight;
  for (CloudEntry& e : entries) {
    e.font_px = font_size(e.weight, w_min, w_max, cfg);
    e.box.h = e.font_px;
    e.box.w = text_width(e.font_px, label(e, cfg.annotate_freq).size());
  }
}

std::string overflow_message(const CloudEntry& entry, const CloudConfig& cfg) {
  return "word '" + entry.stem + "' does not fit on the " +
         std::to_string(cfg.canvas_w) + "x" + std::to_string(cfg.canvas_h) +
         " canvas; try a larger --canvas";
}

}  // namespace

void CloudConfig::validate() const {
  if (font_min < 1 || font_min > font_max) {
    throw std::invalid_argument("font sizes must satisfy 1 <= min <= max");
  }
  if (canvas_w <= 0 || canvas_h <= 0) {
    throw std::invalid_argument("canvas dimensions must be positive");
  }
  if (padding < 0) throw std::invalid_argument("padding must be >= 0");
  if (!(spiral_step > 0) || !(spiral_dtheta > 0)) {
    throw std::invalid_argument("spiral parameters must be positive");
  }
}

bool Box::intersects(const Box& o) const {
  return x < o.x + o.w && o.x < x + w && y < o.y + o.h && o.y < y + h;
}

bool Box::inside(int canvas_w, int canvas_h) const {
  return x >= 0 && y >= 0 && x + w <= canvas_w && y + h <= canvas_h;
}

std::vector<CloudEntry> order_words(const WordWeightTable& table,
                                    WordOrder order) {
  std::vector<CloudEntry> entries;
  if (order == WordOrder::kAlphabetical) {
    for (const auto& [stem, weight] : table.entries) {
      entries.push_back({stem, weight, 0, {}, 0});
    }
  } else {
    for (auto& [stem, weight] : ranked_entries(table)) {
      entries.push_back({std::move(stem), weight, 0, {}, 0});
    }
  }
  return entries;
}

int font_size(const Rational& weight, const Rational& w_min,
              const Rational& w_max, const CloudConfig& cfg) {
  if (w_max == w_min) {
    return static_cast<int>(round_half_up(Rational(cfg.font_min + cfg.font_max, 2)));
  }
  const Rational scaled =
      (weight - w_min) * (cfg.font_max - cfg.font_min) / (w_max - w_min);
  return cfg.font_min + static_cast<int>(round_half_up(scaled));
}

int text_width(int font_px, std::size_t chars) {
  const long long numer = 3LL * font_px * static_cast<long long>(chars);
  return static_cast<int>((numer + 4) / 5);
}

void layout_typewriter(std::vector<CloudEntry>& entries,
                       const CloudConfig& cfg) {
  int x = 0;
  int y = 0;
  int row = 0;
  int row_font = 0;
  bool row_empty = true;
  for (CloudEntry& e : entries) {
    if (e.box.w > cfg.canvas_w) throw LayoutOverflowError(overflow_message(e, cfg));
    if (!row_empty && x + e.box.w > cfg.canvas_w) {
      y += row_font + cfg.padding;
      x = 0;
      ++row;
      row_font = 0;
      row_empty = true;
    }
    e.box.x = x;
    e.box.y = y;
    e.row = row;
    if (y + e.box.h > cfg.canvas_h) {
      throw LayoutOverflowError(overflow_message(e, cfg));
    }
    x += e.box.w + cfg.padding;
    row_font = std::max(row_font, e.font_px);
    row_empty = false;
  }
}

void layout_spiral(std::vector<CloudEntry>& entries, const CloudConfig& cfg) {
  const double cx = cfg.canvas_w / 2.0;
  const double cy = cfg.canvas_h / 2.0;
  const double max_r = std::hypot(cx, cy);

  std::vector<Box> placed;
  placed.reserve(entries.size());
  for (CloudEntry& e : entries) {
    if (e.box.w > cfg.canvas_w || e.box.h > cfg.canvas_h) {
      throw LayoutOverflowError(overflow_message(e, cfg));
    }
    bool done = false;
    for (long step = 0;; ++step) {
      const double theta = static_cast<double>(step) * cfg.spiral_dtheta;
      const double r = cfg.spiral_step * theta;
      if (r > max_r) break;
      Box candidate = e.box;
      candidate.x = static_cast<int>(std::lround(cx + r * std::cos(theta) - e.box.w / 2.0));
      candidate.y = static_cast<int>(std::lround(cy + r * std::sin(theta) - e.box.h / 2.0));
      if (!candidate.inside(cfg.canvas_w, cfg.canvas_h)) continue;
      // Keep `padding` pixels between words.
      Box halo{candidate.x - cfg.padding, candidate.y - cfg.padding,
               candidate.w + 2 * cfg.padding, candidate.h + 2 * cfg.padding};
      const bool collides = std::any_of(placed.begin(), placed.end(),
                                        [&](const Box& b) { return halo.intersects(b); });
      if (collides) continue;
      e.box = candidate;
      e.row = 0;
      placed.push_back(candidate);
      done = true;
      break;
    }
    if (!done) throw LayoutOverflowError(overflow_message(e, cfg));
  }
}

WordCloud build_cloud(const WordWeightTable& table, const CloudConfig& cfg) {
  cfg.validate();
  if (table.entries.empty()) {
    throw EmptyTableError("cannot build a cloud for block '" + table.block_id +
                          "': no words");
  }
  WordCloud cloud{table.block_id, order_words(table, cfg.order), cfg};
  size_entries(cloud.entries, cfg);
  if (cfg.layout == CloudLayout::kTypewriter) {
    layout_typewriter(cloud.entries, cfg);
  } else {
    layout_spiral(cloud.entries, cfg);
  }
  return cloud;
}

std::string render_svg(const WordCloud& cloud) {
  const CloudConfig& cfg = cloud.config;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << cfg.canvas_w << "\" height=\"" << cfg.canvas_h << "\" viewBox=\"0 0 "
      << cfg.canvas_w << ' ' << cfg.canvas_h << "\" data-block=\""
      << xml_escape(cloud.block_id) << "\">\n";
  for (const CloudEntry& e : cloud.entries) {
    out << "  <text x=\"" << e.box.x << "\" y=\"" << e.box.y + e.box.h
        << "\" font-family=\"monospace\" font-size=\"" << e.font_px << "\">"
        << xml_escape(label(e, cfg.annotate_freq)) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_text(const WordCloud& cloud) {
  std::string out;
  const bool rows = cloud.config.layout == CloudLayout::kTypewriter;
  for (std::size_t i = 0; i < cloud.entries.size(); ++i) {
    const CloudEntry& e = cloud.entries[i];
    if (i > 0) out += rows && e.row != cloud.entries[i - 1].row ? '\n' : ' ';
    out += label(e, cloud.config.annotate_freq);
  }
  if (!cloud.entries.empty()) out += '\n';
  return out;
}

}  // namespace featureclouds
