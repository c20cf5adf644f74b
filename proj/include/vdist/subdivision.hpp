#pragma once

#include <map>
#include <string>
#include <vector>

#include "vdist/polynomial.hpp"

namespace vdist {

/// Axis-aligned square [cx - h, cx + h] x [cy - h, cy + h] of the real plane.
struct BoxRegion {
  double center_x = 0.0;
  double center_y = 0.0;
  double half_width = 1.0;
  int depth = 0;

  /// Children in NW, NE, SW, SE order.
  std::vector<BoxRegion> children() const;
  double half_diagonal() const;
};

enum class BoxStatus { Excluded, Undecided };

struct Tile {
  BoxRegion box;
  BoxStatus status = BoxStatus::Undecided;
};

struct DepthCounts {
  int excluded = 0;
  int undecided = 0;
};

/// Result of a quadtree run. `tiles` holds every leaf in depth-first order
/// (children NW, NE, SW, SE); `excluded` and `undecided` are the same leaves
/// split by status, each keeping that order.
struct SubdivisionOutcome {
  std::vector<Tile> tiles;
  std::vector<BoxRegion> excluded;
  std::vector<BoxRegion> undecided;
  std::map<int, DepthCounts> per_depth_counts;
  long predicate_evaluations = 0;
};

inline constexpr int kMaxSubdivisionDepth = 24;

/// True when the lower distance bound at the box center exceeds the half-diagonal,
/// which certifies that the closed box holds no real zero of f. False when the
/// center is itself a zero.
bool exclusion_test(const BivariatePoly& f, const BoxRegion& b);

/// Depth-first quadtree over `root`. Requires real coefficients and
/// max_depth <= kMaxSubdivisionDepth (std::invalid_argument otherwise).
/// Throws IdenticallyZeroError for f = 0.
SubdivisionOutcome subdivide(const BivariatePoly& f, const BoxRegion& root, int max_depth);

struct RenderOptions {
  int pixels = 512;
  bool outlines = true;
  std::string excluded_fill = "#cfe8cf";
  std::string undecided_fill = "#d9534f";
};

/// SVG document: one <rect> per leaf, excluded boxes first, then undecided,
/// each group in depth-first order. Output is byte-reproducible.
std::string render_svg(const SubdivisionOutcome& outcome, const BoxRegion& root,
                       const RenderOptions& opts = {});

/// Plain-text box list, one line per leaf in depth-first order:
///   `status depth center_x center_y half_width` with %.17g numbers.
std::string box_list(const SubdivisionOutcome& outcome);

const char* to_string(BoxStatus s);

}  // namespace vdist
