#include "ipseg/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ipseg {

namespace {

constexpr double kMargin = 40.0;
constexpr double kDrawWidth = 560.0;
constexpr double kLevelGap = 10.0;
constexpr double kStripHeight = 140.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
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

double to_double(const Coord& c) {
  return static_cast<double>(c.numerator()) / static_cast<double>(c.denominator());
}

}  // namespace

std::string render_svg(const Model& model) {
  std::optional<Coord> lo, hi;
  for (const auto& s : model.segments)
    for (const LineId line : {LineId::L1, LineId::L2}) {
      if (!s.touches(line)) continue;
      lo = lo ? std::min(*lo, s.low_on(line)) : s.low_on(line);
      hi = hi ? std::max(*hi, s.high_on(line)) : s.high_on(line);
    }
  const double x0 = lo ? to_double(*lo) : 0.0;
  const double span = std::max(1.0, hi ? to_double(*hi) - x0 : 1.0);
  auto px = [&](const Coord& c) { return kMargin + (to_double(c) - x0) / span * kDrawWidth; };

  // Stack overlapping intervals on each line into levels, first fit in model order.
  std::vector<int> level(model.size(), 0);
  int depth[2] = {0, 0};
  for (int l = 0; l < 2; ++l) {
    std::vector<std::vector<const IntervalShape*>> levels;
    for (std::size_t i = 0; i < model.size(); ++i) {
      const Segment& s = model.segments[i];
      if (!s.is_interval() || s.as_interval().line != (l == 0 ? LineId::L1 : LineId::L2)) continue;
      const auto& iv = s.as_interval();
      std::size_t k = 0;
      for (; k < levels.size(); ++k) {
        const bool clash = std::any_of(levels[k].begin(), levels[k].end(), [&](auto* o) {
          return iv.xl <= o->xr && o->xl <= iv.xr;
        });
        if (!clash) break;
      }
      if (k == levels.size()) levels.emplace_back();
      levels[k].push_back(&iv);
      level[i] = static_cast<int>(k);
    }
    depth[l] = static_cast<int>(levels.size());
  }

  const double y1 = kMargin + kLevelGap * (depth[0] + 1);
  const double y2 = y1 + kStripHeight;
  const double width = 2 * kMargin + kDrawWidth;
  const double height = y2 + kLevelGap * (depth[1] + 1) + kMargin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height)
      << "\">\n"
      << "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "    <line class=\"axis\" x1=\"" << num(kMargin / 2) << "\" y1=\"" << num(y1) << "\" x2=\""
      << num(width - kMargin / 2) << "\" y2=\"" << num(y1) << "\" stroke=\"#888\"/>\n";
  out << "    <line class=\"axis\" x1=\"" << num(kMargin / 2) << "\" y1=\"" << num(y2) << "\" x2=\""
      << num(width - kMargin / 2) << "\" y2=\"" << num(y2) << "\" stroke=\"#888\"/>\n";
  out << "    <text x=\"4\" y=\"" << num(y1 + 4) << "\">L1</text>\n"
      << "    <text x=\"4\" y=\"" << num(y2 + 4) << "\">L2</text>\n";

  for (std::size_t i = 0; i < model.size(); ++i) {
    const Segment& s = model.segments[i];
    double ax, ay, bx, by, tx, ty;
    std::string color;
    if (s.is_interval()) {
      const auto& iv = s.as_interval();
      const bool upper = iv.line == LineId::L1;
      const double off = kLevelGap * (level[i] + 1);
      ay = by = upper ? y1 - off : y2 + off;
      ax = px(iv.xl);
      bx = px(iv.xr);
      tx = (ax + bx) / 2;
      ty = upper ? ay - 3 : ay + 11;
      color = "#1f77b4";
    } else {
      const auto& p = s.as_permutation();
      ax = px(p.x_top);
      ay = y1;
      bx = px(p.x_bot);
      by = y2;
      tx = ax + (bx - ax) * 0.3 + 3;
      ty = ay + (by - ay) * 0.3;
      color = "#d62728";
    }
    out << "    <line class=\"segment\" x1=\"" << num(ax) << "\" y1=\"" << num(ay) << "\" x2=\""
        << num(bx) << "\" y2=\"" << num(by) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
    out << "    <text x=\"" << num(tx) << "\" y=\"" << num(ty) << "\">" << escape(s.id)
        << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace ipseg
