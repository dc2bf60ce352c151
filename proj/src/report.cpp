#include "gzak/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "gzak/decomp.hpp"
#include "gzak/frames.hpp"
#include "gzak/oracle.hpp"
#include "gzak/ranges.hpp"
#include "gzak/translation.hpp"
#include "gzak/zak.hpp"

namespace gzak {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// A failure that maps onto a specific exit code with a one-line diagnostic.
struct CommandError {
  int code;
  std::string message;
};

ordered_json complex_value(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json complex_array(const Eigen::VectorXcd& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_value(v[i]));
  return out;
}

ordered_json tuple(const FiniteAbelianGroup& g, std::size_t index) { return g.element(index); }

double relative_gap(double a, double b, double scale) {
  return std::abs(a - b) / std::max({std::abs(b), scale, 1e-300});
}

// Fiber labels: the dual tuple of each fiber, in fiber order.
std::vector<ordered_json> action_labels(const ZakTransform& zak) {
  std::vector<ordered_json> labels;
  for (std::size_t a = 0; a < zak.group().order(); ++a) labels.push_back(tuple(zak.group(), a));
  return labels;
}

std::vector<ordered_json> omega_labels(const TranslationScenario& s) {
  std::vector<ordered_json> labels;
  for (auto w : s.section_omega) labels.push_back(tuple(s.group, w));
  return labels;
}

ordered_json metadata(const Settings& settings, const char* fiber_order) {
  ordered_json m;
  m["tolerance"] = settings.tolerance;
  m["riesz_ratio"] = settings.riesz_ratio;
  m["membership_ratio"] = settings.membership_ratio;
  m["fiber_order"] = fiber_order;
  m["dual_measure"] = "uniform, total mass 1";
  return m;
}

ordered_json ledger_json(const NormalizationLedger& l) {
  ordered_json j;
  j["m_G"] = l.haar_group;
  j["m_Gamma"] = l.haar_subgroup;
  j["mu_C"] = l.section_c;
  j["m_dual_G"] = l.haar_dual;
  j["nu_Omega"] = l.section_omega;
  j["m_Gamma_star"] = l.haar_annihilator;
  j["annihilator_fourier_factor"] = l.annihilator_fourier;
  return j;
}

ordered_json frame_json(const FrameReport& r, const std::vector<ordered_json>& labels, ordered_json& fibers) {
  fibers = ordered_json::array();
  for (const auto& f : r.fibers) {
    ordered_json rec;
    rec["fiber"] = f.fiber;
    rec["dual"] = labels[f.fiber];
    rec["dim"] = f.dim;
    rec["smin2"] = f.smin2_range;
    rec["smax2"] = f.smax2;
    rec["full_smin2"] = f.full_smin2;
    fibers.push_back(std::move(rec));
  }
  ordered_json s;
  s["bounds"] = r.kind == BoundKind::frame ? "frame" : "riesz";
  s["degenerate"] = r.degenerate;
  if (r.degenerate) {
    s["A"] = nullptr;
    s["B"] = nullptr;
  } else {
    s["A"] = r.lower;
    s["B"] = r.upper;
  }
  ordered_json support = ordered_json::array();
  for (auto a : r.support) support.push_back(a);
  s["support"] = support;
  s["bessel"] = r.is_bessel;
  s["frame"] = r.is_frame;
  s["parseval"] = r.is_parseval;
  s["riesz"] = r.is_riesz;
  return s;
}

std::string csv_fibers(const FrameReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "fiber_id,dim,smin2,smax2\n";
  for (const auto& f : r.fibers) out << f.fiber << ',' << f.dim << ',' << f.smin2_range << ',' << f.smax2 << '\n';
  return out.str();
}

ordered_json envelope(const std::string& command, const Scenario& scenario, ordered_json meta) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = "gzak";
  doc["command"] = command;
  doc["scenario"] = scenario.name;
  doc["metadata"] = std::move(meta);
  return doc;
}

std::vector<FiberedVector> forward_all(const ZakTransform& zak, const std::vector<Eigen::VectorXcd>& fs,
                                       unsigned threads) {
  std::vector<FiberedVector> out;
  for (const auto& f : fs) out.push_back(zak.forward(f, threads));
  return out;
}

// ---------------------------------------------------------------- action

struct ActionContext {
  const Scenario& scenario;
  const Settings& settings;
  ZakTransform zak;
  std::vector<ordered_json> labels;
};

ActionContext action_context(const Scenario& scenario, const Settings& settings) {
  if (!scenario.action) throw CommandError{kExitValidation, "command needs an 'action' scenario"};
  ZakTransform zak(*scenario.action);
  auto labels = action_labels(zak);
  return ActionContext{scenario, settings, std::move(zak), std::move(labels)};
}

void require_generators(const std::vector<Eigen::VectorXcd>& gens) {
  if (gens.empty()) throw CommandError{kExitValidation, "scenario has no generators"};
}

RunResult cmd_validate(const std::string& command, const Scenario& scenario, const RunOptions& options) {
  ordered_json doc = envelope(command, scenario, metadata(options.settings, "lexicographic dual tuples"));
  if (scenario.translation) {
    const auto& t = *scenario.translation;
    const TranslationScenario s = build_scenario(t.group, t.subgroup_generators);
    ordered_json summary;
    summary["valid"] = true;
    summary["group_order"] = s.group.order();
    summary["subgroup_order"] = s.subgroup.order();
    summary["annihilator_order"] = s.annihilator.order();
    summary["section_c_size"] = s.section_c.size();
    summary["section_omega_size"] = s.section_omega.size();
    doc["summary"] = summary;
    return {kExitOk, doc.dump(2) + "\n"};
  }
  const QuasiInvariantAction& action = *scenario.action;
  const ValidationReport report = validate_action(action);
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"condition", v.condition}, {"gamma", v.gamma}, {"x", v.x}, {"detail", v.detail}});
  }
  ordered_json summary;
  summary["valid"] = report.ok;
  summary["violations"] = violations;
  bool free = false;
  if (report.ok) {
    try {
      const TilingTransversal t = tiling_transversal(action);
      free = true;
      summary["transversal"] = t.points;
    } catch (const NotFreeError& e) {
      summary["not_free_witness"] = e.point();
    }
  }
  summary["free"] = free;
  doc["summary"] = summary;
  return {report.ok && free ? kExitOk : kExitValidation, doc.dump(2) + "\n"};
}

RunResult cmd_zak(const ActionContext& ctx, ordered_json doc) {
  ordered_json gens = ordered_json::array();
  for (std::size_t i = 0; i < ctx.scenario.generators.size(); ++i) {
    const auto& psi = ctx.scenario.generators[i];
    const FiberedVector z = ctx.zak.forward(psi, ctx.settings.threads);
    ordered_json g;
    g["generator"] = i;
    g["norm2"] = norm_squared(ctx.zak.space(), psi);
    g["zak_norm2"] = z.norm_squared();
    ordered_json fibers = ordered_json::array();
    for (std::size_t a = 0; a < z.fiber_count(); ++a) {
      fibers.push_back(
          {{"fiber", a}, {"dual", ctx.labels[a]}, {"values", complex_array(z.values.col(a))},
           {"norm2", z.fiber_norm_squared(a)}});
    }
    g["fibers"] = fibers;
    gens.push_back(std::move(g));
  }
  doc["generators"] = gens;
  return {kExitOk, doc.dump(2) + "\n"};
}

RunResult cmd_range(const ActionContext& ctx, ordered_json doc, bool length_only, ReportFormat format) {
  const RangeFunction range = range_from_generators(ctx.zak, ctx.scenario.generators, ctx.settings);
  if (format == ReportFormat::csv_fibers) {
    require_generators(ctx.scenario.generators);
    return {kExitOk, csv_fibers(frame_check(ctx.zak, ctx.scenario.generators, ctx.settings))};
  }
  if (!length_only) {
    ordered_json fibers = ordered_json::array();
    for (std::size_t a = 0; a < range.fiber_count(); ++a) {
      fibers.push_back({{"fiber", a}, {"dual", ctx.labels[a]}, {"dim", range.dim(a)}});
    }
    doc["fibers"] = fibers;
  }
  doc["summary"] = {{"length", length(range)}, {"generators", ctx.scenario.generators.size()}};
  return {kExitOk, doc.dump(2) + "\n"};
}

RunResult cmd_member(const ActionContext& ctx, ordered_json doc) {
  if (ctx.scenario.test_functions.empty()) throw CommandError{kExitValidation, "scenario has no test_functions"};
  const RangeFunction range = range_from_generators(ctx.zak, ctx.scenario.generators, ctx.settings);
  ordered_json results = ordered_json::array();
  for (std::size_t i = 0; i < ctx.scenario.test_functions.size(); ++i) {
    const Membership m = membership(ctx.zak, ctx.scenario.test_functions[i], range, ctx.settings);
    results.push_back({{"test_function", i}, {"member", m.member}, {"residual", m.residual}});
  }
  doc["results"] = results;
  return {kExitOk, doc.dump(2) + "\n"};
}

RunResult cmd_frame(const ActionContext& ctx, ordered_json doc, bool riesz, ReportFormat format) {
  require_generators(ctx.scenario.generators);
  const FrameReport r = riesz ? riesz_check(ctx.zak, ctx.scenario.generators, ctx.settings)
                              : frame_check(ctx.zak, ctx.scenario.generators, ctx.settings);
  if (format == ReportFormat::csv_fibers) return {kExitOk, csv_fibers(r)};
  ordered_json fibers;
  doc["summary"] = frame_json(r, ctx.labels, fibers);
  doc["fibers"] = fibers;
  return {kExitOk, doc.dump(2) + "\n"};
}

RunResult cmd_bracket(const ActionContext& ctx, ordered_json doc) {
  require_generators(ctx.scenario.generators);
  const auto z = forward_all(ctx.zak, ctx.scenario.generators, ctx.settings.threads);
  ordered_json pairs = ordered_json::array();
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i; j < z.size(); ++j) {
      const BracketFunction b = bracket(z[i], z[j]);
      ordered_json values = ordered_json::array();
      for (auto v : b.values) values.push_back(complex_value(v));
      pairs.push_back({{"left", i}, {"right", j}, {"values", values}});
    }
  }
  if (z.size() == 1) {
    const SingleGeneratorReport single = single_generator_report(z[0], ctx.settings);
    ordered_json fibers;
    doc["single_generator"] = frame_json(single.report, ctx.labels, fibers);
  }
  doc["brackets"] = pairs;
  return {kExitOk, doc.dump(2) + "\n"};
}

RunResult cmd_decompose(const ActionContext& ctx, ordered_json doc, ReportFormat format) {
  require_generators(ctx.scenario.generators);
  const auto parts = parseval_decompose(ctx.zak, ctx.scenario.generators, ctx.settings);
  const DecompositionReport check = verify_decomposition(ctx.zak, ctx.scenario.generators, parts, ctx.settings);
  std::optional<FrameReport> union_report;
  if (!parts.empty()) union_report = frame_check(ctx.zak, parts, ctx.settings);
  if (format == ReportFormat::csv_fibers) {
    if (!union_report) throw CommandError{kExitValidation, "decomposition is empty"};
    return {kExitOk, csv_fibers(*union_report)};
  }
  ordered_json list = ordered_json::array();
  for (const auto& p : parts) list.push_back(complex_array(p));
  doc["parts"] = list;
  ordered_json v;
  v["orthogonal"] = check.orthogonal;
  v["max_cross_inner"] = check.max_cross_inner;
  v["max_norm_defect"] = check.max_norm_defect;
  v["parts_parseval"] = check.parseval;
  v["dims_match"] = check.dims_match;
  v["part_dims"] = check.part_dims;
  v["space_dims"] = check.space_dims;
  v["generators_member"] = check.generators_member;
  v["max_member_residual"] = check.max_member_residual;
  v["ok"] = check.ok;
  doc["verification"] = v;
  ordered_json summary;
  summary["parts"] = parts.size();
  summary["length"] = length(range_from_generators(ctx.zak, ctx.scenario.generators, ctx.settings));
  if (union_report) {
    summary["union_A"] = union_report->lower;
    summary["union_B"] = union_report->upper;
    summary["union_parseval"] = union_report->is_parseval;
  } else {
    summary["union_parseval"] = false;
  }
  doc["summary"] = summary;
  return {check.ok ? kExitOk : kExitValidation, doc.dump(2) + "\n"};
}

// ------------------------------------------------------------ translation

TranslationScenario translation_context(const Scenario& scenario) {
  if (!scenario.translation) throw CommandError{kExitValidation, "command needs a 'translation' scenario"};
  return build_scenario(scenario.translation->group, scenario.translation->subgroup_generators);
}

struct ConsistencyResult {
  bool dims_equal = true;
  double frame_gap = 0.0;
  double riesz_gap = 0.0;
  double fiber_gap = 0.0;
};

// Runs the generic action pipeline on x -> x + g and compares with ti_analyze.
ConsistencyResult consistency(const TranslationScenario& s, const std::vector<Eigen::VectorXcd>& gens,
                              const Settings& settings) {
  const TranslationAnalysis direct = ti_analyze(s, gens, settings);
  const TranslationAction ta = translation_action(s);
  const ZakTransform zak(ta.action);
  const RangeFunction range = range_from_generators(zak, gens, settings);
  const FrameReport frame = frame_check(zak, gens, settings);
  const FrameReport riesz = riesz_check(zak, gens, settings);

  ConsistencyResult out;
  for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
    if (direct.range.dim(k) != range.dim(ta.fiber_of_omega[k])) out.dims_equal = false;
  }
  for (const auto& g : gens) {
    const FiberedVector a = zakG_forward(s, g);
    const FiberedVector b = zak.forward(g);
    for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
      out.fiber_gap = std::max(out.fiber_gap, (a.values.col(k) - b.values.col(ta.fiber_of_omega[k])).norm());
    }
  }
  if (direct.frame.degenerate != frame.degenerate) {
    out.frame_gap = out.riesz_gap = 1.0;
  } else if (!frame.degenerate) {
    const double scale = frame.upper;
    out.frame_gap = std::max(relative_gap(direct.frame.lower, frame.lower, 0.0),
                             relative_gap(direct.frame.upper, frame.upper, 0.0));
    out.riesz_gap = std::max(relative_gap(direct.riesz.lower, riesz.lower, scale),
                             relative_gap(direct.riesz.upper, riesz.upper, 0.0));
  }
  return out;
}

RunResult cmd_translation(const Scenario& scenario, const RunOptions& options, ordered_json doc) {
  const TranslationScenario s = translation_context(scenario);
  const auto& gens = scenario.translation->generators;
  const auto labels = omega_labels(s);
  doc["metadata"]["fiber_order"] = "sections of dual(G)/Gamma*, lexicographic";
  doc["metadata"]["normalization"] = ledger_json(s.ledger);
  doc["subcommand"] = options.subcommand;
  ordered_json results = ordered_json::array();
  const std::string& sub = options.subcommand;
  if (sub == "weil") {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const WeilCheck w = weil_check(s, gens[i]);
      results.push_back(
          {{"generator", i}, {"lhs", complex_value(w.lhs)}, {"rhs", complex_value(w.rhs)}, {"deviation", w.deviation}});
    }
  } else if (sub == "zak") {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const FiberedVector z = zakG_forward(s, gens[i]);
      ordered_json fibers = ordered_json::array();
      for (std::size_t k = 0; k < z.fiber_count(); ++k) {
        fibers.push_back({{"fiber", k}, {"omega", labels[k]}, {"values", complex_array(z.values.col(k))}});
      }
      results.push_back({{"generator", i}, {"zak_norm2", z.norm_squared()}, {"fibers", fibers}});
    }
  } else if (sub == "fiberize") {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Eigen::MatrixXcd t = fiberize_T(s, gens[i]);
      ordered_json fibers = ordered_json::array();
      for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
        fibers.push_back({{"fiber", k}, {"omega", labels[k]}, {"values", complex_array(t.col(k))}});
      }
      results.push_back({{"generator", i}, {"fibers", fibers}});
    }
  } else if (sub == "duality") {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      ordered_json r{{"generator", i}, {"deviation", duality_check(s, gens[i]).max_deviation}};
      ordered_json gram = ordered_json::array();
      for (std::size_t j = 0; j < gens.size(); ++j) gram.push_back(gramian_deviation(s, gens[i], gens[j]));
      r["gramian_deviation"] = gram;
      results.push_back(std::move(r));
    }
  } else if (sub == "analyze") {
    require_generators(gens);
    const TranslationAnalysis a = ti_analyze(s, gens, options.settings);
    if (options.format == ReportFormat::csv_fibers) return {kExitOk, csv_fibers(a.frame)};
    ordered_json fibers;
    ordered_json frame = frame_json(a.frame, labels, fibers);
    ordered_json riesz_fibers;
    ordered_json riesz = frame_json(a.riesz, labels, riesz_fibers);
    frame["length"] = length(a.range);
    doc["fibers"] = fibers;
    doc["summary"] = frame;
    doc["riesz"] = riesz;
    return {kExitOk, doc.dump(2) + "\n"};
  } else {
    throw CommandError{kExitValidation, "unknown translation subcommand '" + sub +
                                            "' (expected weil, zak, fiberize, duality, analyze)"};
  }
  doc["results"] = results;
  return {kExitOk, doc.dump(2) + "\n"};
}

// ------------------------------------------------------------------ verify

struct CheckList {
  ordered_json entries = ordered_json::array();
  bool all_ok = true;

  void add(const std::string& name, bool ok, double value, double threshold) {
    entries.push_back({{"check", name}, {"ok", ok}, {"value", value}, {"threshold", threshold}});
    all_ok = all_ok && ok;
  }
};

void verify_action(const Scenario& scenario, const Settings& settings, CheckList& checks) {
  const ZakTransform zak(*scenario.action);
  const auto& gens = scenario.generators;
  const auto& action = zak.action();

  double iso = 0.0, round_trip = 0.0;
  for (const auto& g : gens) {
    const double n2 = norm_squared(zak.space(), g);
    const FiberedVector z = zak.forward(g, settings.threads);
    iso = std::max(iso, std::abs(n2 - z.norm_squared()) / std::max(n2, 1e-300));
    round_trip = std::max(round_trip, (zak.inverse(z) - g).cwiseAbs().maxCoeff());
  }
  checks.add("zak_isometry", iso <= 1e-12, iso, 1e-12);
  checks.add("zak_round_trip", round_trip <= 1e-12, round_trip, 1e-12);

  const RangeFunction range = range_from_generators(zak, gens, settings);
  const auto ranks = oracle::dense_fiber_ranks(action, gens);
  const std::size_t oracle_length = ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
  checks.add("fiber_dims_vs_oracle", range.dims() == ranks, 0.0, 0.0);
  checks.add("length_vs_oracle", length(range) == oracle_length, static_cast<double>(length(range)),
             static_cast<double>(oracle_length));

  const FrameReport frame = frame_check(zak, gens, settings);
  const auto dense = oracle::dense_frame_bounds(action, gens);
  if (frame.degenerate || dense.degenerate) {
    checks.add("frame_degenerate_agree", frame.degenerate == dense.degenerate, 0.0, 0.0);
  } else {
    const double gap = std::max(relative_gap(frame.lower, dense.lower, 0.0), relative_gap(frame.upper, dense.upper, 0.0));
    checks.add("frame_bounds_vs_oracle", gap <= kOracleRelativeTolerance, gap, kOracleRelativeTolerance);
  }

  const FrameReport riesz = riesz_check(zak, gens, settings);
  const auto dense_r = oracle::dense_riesz_bounds(action, gens);
  if (!riesz.degenerate && !dense_r.degenerate) {
    const double gap = std::max(relative_gap(riesz.lower, dense_r.lower, dense_r.upper),
                                relative_gap(riesz.upper, dense_r.upper, 0.0));
    checks.add("riesz_bounds_vs_oracle", gap <= kOracleRelativeTolerance, gap, kOracleRelativeTolerance);
    checks.add("riesz_verdict_vs_oracle", riesz.is_riesz == dense_r.independent, riesz.is_riesz ? 1.0 : 0.0,
               dense_r.independent ? 1.0 : 0.0);
  }

  std::vector<Eigen::VectorXcd> probes = scenario.test_functions;
  for (const auto& g : gens) probes.push_back(apply_rep(action, action.group().order() - 1, g));
  bool verdicts = true;
  for (const auto& f : probes) {
    const Membership fiber = membership(zak, f, range, settings);
    const Membership dense_m = oracle::brute_membership(action, f, gens, settings.membership_ratio);
    verdicts = verdicts && fiber.member == dense_m.member;
  }
  checks.add("membership_vs_oracle", verdicts, static_cast<double>(probes.size()), 0.0);

  if (!frame.degenerate) {
    const auto parts = parseval_decompose(zak, gens, settings);
    const DecompositionReport dec = verify_decomposition(zak, gens, parts, settings);
    checks.add("decomposition_verified", dec.ok, dec.max_cross_inner, 1e-10);
    checks.add("decomposition_length", parts.size() == length(range), static_cast<double>(parts.size()),
               static_cast<double>(length(range)));
    const FrameReport u = frame_check(zak, parts, settings);
    const double dev = std::max(std::abs(u.lower - 1.0), std::abs(u.upper - 1.0));
    checks.add("union_parseval", dev <= 1e-10, dev, 1e-10);
  }
}

void verify_translation(const Scenario& scenario, const Settings& settings, CheckList& checks) {
  const TranslationScenario s = translation_context(scenario);
  const auto& gens = scenario.translation->generators;
  double weil = 0.0, duality = 0.0, gram = 0.0, iso = 0.0, round_trip = 0.0;
  for (const auto& f : gens) {
    weil = std::max(weil, weil_check(s, f).deviation);
    duality = std::max(duality, duality_check(s, f).max_deviation);
    for (const auto& g : gens) gram = std::max(gram, gramian_deviation(s, f, g));
    const FiberedVector z = zakG_forward(s, f);
    const double n2 = f.squaredNorm();
    iso = std::max(iso, std::abs(n2 - z.norm_squared()) / std::max(n2, 1e-300));
    round_trip = std::max(round_trip, (zakG_inverse(s, z) - f).cwiseAbs().maxCoeff());
  }
  checks.add("weil", weil <= 1e-12, weil, 1e-12);
  checks.add("duality", duality <= 1e-12, duality, 1e-12);
  checks.add("gramian", gram <= 1e-12, gram, 1e-12);
  checks.add("zak_isometry", iso <= 1e-12, iso, 1e-12);
  checks.add("zak_round_trip", round_trip <= 1e-12, round_trip, 1e-12);
  if (!gens.empty()) {
    const ConsistencyResult c = consistency(s, gens, settings);
    checks.add("action_pipeline_dims", c.dims_equal, 0.0, 0.0);
    checks.add("action_pipeline_fibers", c.fiber_gap <= 1e-10, c.fiber_gap, 1e-10);
    checks.add("action_pipeline_frame_bounds", c.frame_gap <= 1e-10, c.frame_gap, 1e-10);
    checks.add("action_pipeline_riesz_bounds", c.riesz_gap <= 1e-10, c.riesz_gap, 1e-10);
  }
}

RunResult cmd_verify(const Scenario& scenario, const RunOptions& options, ordered_json doc) {
  CheckList checks;
  if (scenario.translation) {
    verify_translation(scenario, options.settings, checks);
  } else {
    verify_action(scenario, options.settings, checks);
  }
  doc["checks"] = checks.entries;
  doc["summary"] = {{"ok", checks.all_ok}, {"checks", checks.entries.size()}};
  return {checks.all_ok ? kExitOk : kExitOracleDisagreement, doc.dump(2) + "\n"};
}

RunResult dispatch(const std::string& command, const Scenario& scenario, const RunOptions& options) {
  const Settings& settings = options.settings;
  if (!(settings.tolerance > 0.0 && settings.tolerance < 1.0)) {
    throw CommandError{kExitValidation, "tolerance must be in (0, 1)"};
  }
  ordered_json doc = envelope(command, scenario, metadata(settings, "lexicographic dual tuples"));
  const bool csv = options.format == ReportFormat::csv_fibers;
  const bool csv_capable = command == "range" || command == "length" || command == "frame" || command == "riesz" ||
                           command == "decompose" || (command == "translation" && options.subcommand == "analyze");
  if (csv && !csv_capable) throw CommandError{kExitValidation, "csv-fibers output is not available for " + command};

  if (command == "validate") return cmd_validate(command, scenario, options);
  if (command == "translation") return cmd_translation(scenario, options, std::move(doc));
  if (command == "verify") return cmd_verify(scenario, options, std::move(doc));

  const ActionContext ctx = action_context(scenario, settings);
  if (command == "zak") return cmd_zak(ctx, std::move(doc));
  if (command == "range") return cmd_range(ctx, std::move(doc), false, options.format);
  if (command == "length") return cmd_range(ctx, std::move(doc), true, options.format);
  if (command == "member") return cmd_member(ctx, std::move(doc));
  if (command == "frame") return cmd_frame(ctx, std::move(doc), false, options.format);
  if (command == "riesz") return cmd_frame(ctx, std::move(doc), true, options.format);
  if (command == "bracket") return cmd_bracket(ctx, std::move(doc));
  if (command == "decompose") return cmd_decompose(ctx, std::move(doc), options.format);
  throw CommandError{kExitValidation, "unknown command '" + command + "'"};
}

}  // namespace

RunResult run(const std::string& command, const Scenario& scenario, const RunOptions& options) {
  try {
    return dispatch(command, scenario, options);
  } catch (const CommandError& e) {
    return {e.code, "error: " + e.message + "\n", true};
  } catch (const NotFreeError& e) {
    return {kExitValidation, std::string("error: ") + e.what() + "\n", true};
  } catch (const InputError& e) {
    return {kExitValidation, std::string("error: ") + e.what() + "\n", true};
  }
}

}  // namespace gzak
