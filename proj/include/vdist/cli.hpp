#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vdist/oracle.hpp"
#include "vdist/polynomial.hpp"

namespace vdist::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kParseError = 2,
  kOnVariety = 3,
  kSandwichViolation = 4,
};

enum class OutputFormat { Json, Text };

struct RunConfig {
  /// Relative slack on the upper side of the sandwich: estimate <= upper * (1 + delta).
  double delta = 0.05;
  /// Absolute slack on the lower side: lower <= estimate + slack.
  double slack = 1e-9;
  SamplingPlan plan;
  int max_depth = 8;
  OutputFormat format = OutputFormat::Json;

  /// Throws std::invalid_argument when a tolerance is not positive.
  void validate() const;
};

/// "re_x,im_x,re_y,im_y" -> point. Throws std::invalid_argument.
Point2 parse_point(const std::string& text);

struct SandwichVerdict {
  double lower = 0.0;
  double estimate = 0.0;
  double upper = 0.0;
  bool lower_ok = false;
  bool upper_ok = false;
  bool pass() const { return lower_ok && upper_ok; }
};

/// lower <= estimate + slack and estimate <= upper * (1 + delta).
SandwichVerdict check_sandwich(const BivariatePoly& f, const Point2& p, const RunConfig& config);

struct BatchSpec {
  int instances = 100;
  int degree = 4;
  std::uint64_t seed = 1;
  double point_radius = 2.0;
  double reject_below = 1e-8;
};

struct BatchResult {
  int checked = 0;
  int rejected = 0;
  int violations = 0;
  /// min over instances of estimate / lower and max of estimate / upper
  double min_estimate_over_lower = 0.0;
  double max_estimate_over_upper = 0.0;
  std::vector<int> violating_instances;
};

BatchResult check_random(const BatchSpec& spec, const RunConfig& config);

/// Full command line entry point. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vdist::cli
