#include "vdist/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "vdist/bounds.hpp"

namespace vdist {

namespace {

std::string format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

void subdivide_into(const BivariatePoly& f, const BoxRegion& box, int max_depth,
                    SubdivisionOutcome& out) {
  ++out.predicate_evaluations;
  if (exclusion_test(f, box)) {
    out.tiles.push_back({box, BoxStatus::Excluded});
    out.excluded.push_back(box);
    ++out.per_depth_counts[box.depth].excluded;
    return;
  }
  if (box.depth >= max_depth) {
    out.tiles.push_back({box, BoxStatus::Undecided});
    out.undecided.push_back(box);
    ++out.per_depth_counts[box.depth].undecided;
    return;
  }
  for (const BoxRegion& child : box.children()) subdivide_into(f, child, max_depth, out);
}

}  // namespace

std::vector<BoxRegion> BoxRegion::children() const {
  const double h = half_width / 2.0;
  const int d = depth + 1;
  return {{center_x - h, center_y + h, h, d},
          {center_x + h, center_y + h, h, d},
          {center_x - h, center_y - h, h, d},
          {center_x + h, center_y - h, h, d}};
}

double BoxRegion::half_diagonal() const { return half_width * std::numbers::sqrt2; }

const char* to_string(BoxStatus s) { return s == BoxStatus::Excluded ? "excluded" : "undecided"; }

bool exclusion_test(const BivariatePoly& f, const BoxRegion& b) {
  const PartialsTable partials = eval_all_partials(f, {b.center_x, b.center_y});
  if (!(std::abs(partials.value()) > kOnVarietyThreshold)) return false;
  double g = 0.0;
  for (const OrderRow& row : order_ratios(partials)) g = std::max(g, row.max_ratio);
  if (g == 0.0) return true;
  const double lower = std::numbers::ln2 / (std::numbers::sqrt2 * g);
  return lower > b.half_diagonal();
}

SubdivisionOutcome subdivide(const BivariatePoly& f, const BoxRegion& root, int max_depth) {
  if (f.is_zero()) throw IdenticallyZeroError();
  if (!f.has_real_coefficients())
    throw std::invalid_argument("subdivision needs a polynomial with real coefficients");
  if (max_depth < 0 || max_depth > kMaxSubdivisionDepth)
    throw std::invalid_argument("max_depth must lie in [0, " +
                                std::to_string(kMaxSubdivisionDepth) + "]");
  if (!(root.half_width > 0.0) || !std::isfinite(root.half_width) ||
      !std::isfinite(root.center_x) || !std::isfinite(root.center_y))
    throw std::invalid_argument("root box must be finite with positive half width");
  BoxRegion start = root;
  start.depth = 0;
  SubdivisionOutcome out;
  subdivide_into(f, start, max_depth, out);
  return out;
}

std::string render_svg(const SubdivisionOutcome& outcome, const BoxRegion& root,
                       const RenderOptions& opts) {
  const double scale = opts.pixels / (2.0 * root.half_width);
  const double left = root.center_x - root.half_width;
  const double top = root.center_y + root.half_width;
  std::string svg = format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
      opts.pixels, opts.pixels, opts.pixels, opts.pixels);
  const std::string stroke = opts.outlines ? " stroke=\"#555555\" stroke-width=\"0.25\"" : "";
  auto emit = [&](const std::vector<BoxRegion>& boxes, const std::string& fill, const char* cls) {
    svg += format("<g class=\"%s\" fill=\"%s\"%s>\n", cls, fill.c_str(), stroke.c_str());
    for (const BoxRegion& b : boxes) {
      const double x = (b.center_x - b.half_width - left) * scale;
      const double y = (top - (b.center_y + b.half_width)) * scale;
      const double w = 2.0 * b.half_width * scale;
      svg += format("<rect x=\"%.6f\" y=\"%.6f\" width=\"%.6f\" height=\"%.6f\"/>\n", x, y, w, w);
    }
    svg += "</g>\n";
  };
  emit(outcome.excluded, opts.excluded_fill, "excluded");
  emit(outcome.undecided, opts.undecided_fill, "undecided");
  svg += "</svg>\n";
  return svg;
}

std::string box_list(const SubdivisionOutcome& outcome) {
  std::string s;
  for (const Tile& t : outcome.tiles)
    s += format("%s %d %.17g %.17g %.17g\n", to_string(t.status), t.box.depth, t.box.center_x,
                t.box.center_y, t.box.half_width);
  return s;
}

}  // namespace vdist
