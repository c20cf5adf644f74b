#include "vdist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vdist/bounds.hpp"
#include "vdist/parser.hpp"
#include "vdist/random.hpp"
#include "vdist/subdivision.hpp"

namespace vdist::cli {

using nlohmann::json;

namespace {

// JSON has no infinity; unbounded distances are written as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json point_json(const Point2& p) {
  return json::array({p.x.real(), p.x.imag(), p.y.real(), p.y.imag()});
}

json plan_json(const SamplingPlan& plan) {
  return {{"n_alpha", plan.n_alpha},
          {"n_beta", plan.n_beta},
          {"n_phi", plan.n_phi},
          {"refinement_rounds", plan.refinement_rounds},
          {"shrink", plan.shrink},
          {"refine_points", plan.refine_points}};
}

void emit(const json& doc, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

std::string read_expression_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

struct PolyInput {
  std::string expr;
  std::string file;

  // Either -f or --file must be given; resolve() reports the omission.
  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("-f,--poly", expr, "polynomial expression, e.g. \"x^2+y^2-1\"");
    auto* g = cmd->add_option("--file", file, "file holding a single polynomial expression");
    f->excludes(g);
  }

  BivariatePoly resolve() const {
    if (expr.empty() && file.empty()) throw ParseError(0, {"-f <expression>", "--file <path>"});
    return parse_poly(file.empty() ? expr : read_expression_file(file)).poly;
  }

  std::string text() const { return file.empty() ? expr : read_expression_file(file); }
};

void add_plan_options(CLI::App* cmd, SamplingPlan& plan) {
  cmd->add_option("--alpha", plan.n_alpha, "direction grid points in alpha")->capture_default_str();
  cmd->add_option("--phi", plan.n_phi, "direction grid points in phi")->capture_default_str();
  cmd->add_option("--rounds", plan.refinement_rounds, "local refinement rounds")
      ->capture_default_str();
  cmd->add_option("--shrink", plan.shrink, "refinement window shrink factor")
      ->capture_default_str();
  cmd->add_option("--refine-points", plan.refine_points, "grid points per axis when refining")
      ->capture_default_str();
}

json report_json(const BoundReport& r) {
  json rows = json::array();
  for (const OrderRow& row : r.per_order) rows.push_back({{"k", row.k}, {"max_ratio", row.max_ratio}});
  return {{"degree", r.degree},         {"value_at_p", complex_json(r.value_at_p)},
          {"gamma", r.gamma},           {"lower", number(r.lower)},
          {"lower_coarse", number(r.lower_coarse)}, {"upper", number(r.upper)},
          {"per_order", rows}};
}

json estimate_json(const DistanceEstimate& e) {
  return {{"estimate", e.value},
          {"witness", point_json(e.witness)},
          {"directions_sampled", e.directions_sampled},
          {"refined", e.refined}};
}

std::pair<double, double> parse_pair3(const std::string& text, double& third) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      v.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed number '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed number '" + item + "'");
  }
  if (v.size() != 3) throw std::invalid_argument("box must be cx,cy,h");
  third = v[2];
  return {v[0], v[1]};
}

}  // namespace

void RunConfig::validate() const {
  if (!(delta > 0.0) || !(slack > 0.0)) throw std::invalid_argument("tolerances must be positive");
  plan.validate();
}

Point2 parse_point(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed coordinate '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(d))
      throw std::invalid_argument("malformed coordinate '" + item + "'");
    v.push_back(d);
  }
  if (v.size() != 4) throw std::invalid_argument("point must be re_x,im_x,re_y,im_y");
  return {{v[0], v[1]}, {v[2], v[3]}};
}

SandwichVerdict check_sandwich(const BivariatePoly& f, const Point2& p, const RunConfig& config) {
  const BoundReport r = bound_report(f, p);
  const DistanceEstimate e = sep_estimate(f, p, config.plan);
  SandwichVerdict v;
  v.lower = r.lower;
  v.upper = r.upper;
  v.estimate = e.value;
  v.lower_ok = r.lower <= e.value + config.slack;
  v.upper_ok = e.value <= r.upper * (1.0 + config.delta);
  return v;
}

BatchResult check_random(const BatchSpec& spec, const RunConfig& config) {
  if (spec.degree < 1) throw std::invalid_argument("random batches need degree >= 1");
  InstanceGenerator gen(spec.seed);
  BatchResult result;
  result.min_estimate_over_lower = std::numeric_limits<double>::infinity();
  for (int n = 0; n < spec.instances; ++n) {
    BivariatePoly f;
    Point2 p;
    while (true) {
      f = gen.polynomial(spec.degree);
      p = gen.point(spec.point_radius);
      if (std::abs(eval(f, p)) >= spec.reject_below) break;
      ++result.rejected;
    }
    const SandwichVerdict v = check_sandwich(f, p, config);
    ++result.checked;
    result.min_estimate_over_lower = std::min(result.min_estimate_over_lower, v.estimate / v.lower);
    result.max_estimate_over_upper = std::max(result.max_estimate_over_upper, v.estimate / v.upper);
    if (!v.pass()) {
      ++result.violations;
      result.violating_instances.push_back(n);
    }
  }
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified distance bounds from a point to the zero set of a bivariate polynomial"};
  app.name(argc > 0 ? argv[0] : "vdist");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--delta", config.delta, "relative slack on the upper side of the sandwich")
      ->capture_default_str();
  app.add_option("--slack", config.slack, "absolute slack on the lower side of the sandwich")
      ->capture_default_str();

  PolyInput poly;
  std::string point_text;

  auto* bounds_cmd = app.add_subcommand("bounds", "gamma, lower and upper distance bounds at a point");
  poly.add_to(bounds_cmd);
  bounds_cmd->add_option("-p,--point", point_text, "re_x,im_x,re_y,im_y")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force distance estimate over complex lines");
  poly.add_to(oracle_cmd);
  oracle_cmd->add_option("-p,--point", point_text, "re_x,im_x,re_y,im_y")->required();
  add_plan_options(oracle_cmd, config.plan);

  BatchSpec batch;
  bool random_mode = false;
  auto* check_cmd = app.add_subcommand("check", "verify lower <= estimate <= upper * (1 + delta)");
  poly.add_to(check_cmd);
  check_cmd->add_option("-p,--point", point_text, "re_x,im_x,re_y,im_y");
  check_cmd->add_flag("--random", random_mode, "check a batch of random instances");
  check_cmd->add_option("-n,--count", batch.instances, "random instances")->capture_default_str();
  check_cmd->add_option("--degree", batch.degree, "total degree of random instances")
      ->capture_default_str();
  check_cmd->add_option("--seed", batch.seed, "random seed")->capture_default_str();
  add_plan_options(check_cmd, config.plan);

  std::string box_text = "0,0,2";
  std::string svg_path;
  std::string boxes_path;
  auto* sub_cmd = app.add_subcommand("subdivide", "quadtree exclusion of a real box");
  poly.add_to(sub_cmd);
  sub_cmd->add_option("--box", box_text, "root box cx,cy,half_width")->capture_default_str();
  sub_cmd->add_option("--depth", config.max_depth, "maximum depth")->capture_default_str();
  sub_cmd->add_option("-o,--output", svg_path, "SVG output path");
  sub_cmd->add_option("--boxes", boxes_path, "plain-text box list output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParseError;
  }

  try {
    config.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
    config.validate();

    if (bounds_cmd->parsed()) {
      const BivariatePoly f = poly.resolve();
      const Point2 p = parse_point(point_text);
      const BoundReport r = bound_report(f, p);
      json doc = {{"command", "bounds"}, {"polynomial", poly.text()}, {"point", point_json(p)}};
      doc.update(report_json(r));
      if (f.degree() >= 1) {
        const AxisBounds ax = axis_bounds(f, p);
        doc["axis_bounds"] = {{"along_x", number(ax.along_x)}, {"along_y", number(ax.along_y)}};
      }
      emit(doc, config.format, out);
      return kSuccess;
    }

    if (oracle_cmd->parsed()) {
      const BivariatePoly f = poly.resolve();
      const Point2 p = parse_point(point_text);
      const DistanceEstimate e = sep_estimate(f, p, config.plan);
      json doc = {{"command", "oracle"}, {"polynomial", poly.text()}, {"point", point_json(p)}};
      doc.update(estimate_json(e));
      doc["plan"] = plan_json(config.plan);
      emit(doc, config.format, out);
      return kSuccess;
    }

    if (check_cmd->parsed()) {
      if (random_mode) {
        const BatchResult r = check_random(batch, config);
        json doc = {{"command", "check"},
                    {"mode", "random"},
                    {"instances", r.checked},
                    {"degree", batch.degree},
                    {"seed", batch.seed},
                    {"rejected", r.rejected},
                    {"violations", r.violations},
                    {"violating_instances", r.violating_instances},
                    {"min_estimate_over_lower", number(r.min_estimate_over_lower)},
                    {"max_estimate_over_upper", number(r.max_estimate_over_upper)},
                    {"delta", config.delta},
                    {"verdict", r.violations == 0 ? "PASS" : "FAIL"}};
        emit(doc, config.format, out);
        return r.violations == 0 ? kSuccess : kSandwichViolation;
      }
      if (point_text.empty()) throw ParseError(0, {"-p <point>", "--random"});
      const BivariatePoly f = poly.resolve();
      const Point2 p = parse_point(point_text);
      const SandwichVerdict v = check_sandwich(f, p, config);
      json doc = {{"command", "check"},
                  {"polynomial", poly.text()},
                  {"point", point_json(p)},
                  {"lower", number(v.lower)},
                  {"estimate", v.estimate},
                  {"upper", number(v.upper)},
                  {"delta", config.delta},
                  {"verdict", v.pass() ? "PASS" : "FAIL"}};
      emit(doc, config.format, out);
      return v.pass() ? kSuccess : kSandwichViolation;
    }

    if (sub_cmd->parsed()) {
      const BivariatePoly f = poly.resolve();
      double h = 0.0;
      const auto [cx, cy] = parse_pair3(box_text, h);
      const BoxRegion root{cx, cy, h, 0};
      const SubdivisionOutcome outcome = subdivide(f, root, config.max_depth);
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw std::runtime_error("cannot write " + svg_path);
        svg << render_svg(outcome, root);
      }
      if (!boxes_path.empty()) {
        std::ofstream list(boxes_path, std::ios::binary);
        if (!list) throw std::runtime_error("cannot write " + boxes_path);
        list << box_list(outcome);
      }
      json depths = json::array();
      for (const auto& [depth, counts] : outcome.per_depth_counts)
        depths.push_back(
            {{"depth", depth}, {"excluded", counts.excluded}, {"undecided", counts.undecided}});
      json doc = {{"command", "subdivide"},
                  {"polynomial", poly.text()},
                  {"box", {cx, cy, h}},
                  {"max_depth", config.max_depth},
                  {"excluded", outcome.excluded.size()},
                  {"undecided", outcome.undecided.size()},
                  {"predicate_evaluations", outcome.predicate_evaluations},
                  {"per_depth", depths}};
      if (!svg_path.empty()) doc["svg"] = svg_path;
      if (!boxes_path.empty()) doc["boxes"] = boxes_path;
      emit(doc, config.format, out);
      return kSuccess;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DegreeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const OnVarietyError& e) {
    err << "error: " << e.what() << '\n';
    return kOnVariety;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace vdist::cli
