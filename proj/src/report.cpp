#include "reesalg/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "reesalg/asymptotics.hpp"

namespace reesalg {

using nlohmann::ordered_json;

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {}

  template <class F>
  auto time(const std::string& stage, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto out = f();
    if (enabled_) {
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      timings_[stage] = ms;
    }
    return out;
  }

  const ordered_json& timings() const { return timings_; }

 private:
  bool enabled_;
  ordered_json timings_ = ordered_json::object();
};

// Evaluates f, turning analyses that do not apply into UNSUPPORTED markers.
ordered_json guarded(const std::function<ordered_json()>& f) {
  try {
    return f();
  } catch (const UnsupportedInstance& err) {
    return unsupported_marker(err.what());
  } catch (const DomainError& err) {
    return unsupported_marker(err.what());
  }
}

ordered_json header(const Instance& inst, const std::string& command) {
  ordered_json j;
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = command;
  j["instance"] = inst.spec.name;
  return j;
}

ordered_json ring_json(const Instance& inst) {
  const Ring& r = *inst.ring;
  return ordered_json{{"char", r.field().characteristic()}, {"vars", r.names()}, {"grading", r.weights()}};
}

AnalysisOptions analysis_options(const Instance& inst) {
  AnalysisOptions o;
  o.n_max = inst.spec.n_max;
  o.window = inst.spec.window;
  o.seed = inst.spec.seed;
  o.instance = inst.spec.name;
  return o;
}

ordered_json ass_json(const Asymptotics& a) {
  return guarded([&] { return to_json(a.context().ring(), a.ass_sequence()); });
}

ordered_json fitting_heights(const ReesContext& ctx) {
  ordered_json by_index = ordered_json::array();
  for (int j = 0; j <= ctx.mu(); ++j) by_index.push_back(to_json(height(fitting_ideal(ctx.module(), j))));
  return ordered_json{{"invariant", to_json(ctx.fitting_height())}, {"byIndex", by_index}};
}

ordered_json predicates_json(const Instance& inst) {
  return guarded([&] {
    Predicates p = inst.context->predicates(inst.primes);
    ordered_json j;
    j["completeIntersection"] = p.complete_intersection;
    j["equimultiple"] = p.equimultiple;
    if (p.generically_ci) {
      j["genericallyCompleteIntersection"] = *p.generically_ci;
    } else {
      j["genericallyCompleteIntersection"] = unsupported_marker(p.generically_ci_note);
    }
    return j;
  });
}

void add_verdict(CommandResult& out, ordered_json& list, const CheckerVerdict& v) {
  if (v.verdict == Verdict::Violation) out.violation = true;
  list.push_back(v.to_json());
}

CommandResult report(const Instance& inst, const RunOptions& options) {
  const ReesContext& ctx = *inst.context;
  Asymptotics a(ctx, analysis_options(inst));
  Stopwatch watch(options.meta);
  CommandResult out;
  ordered_json j = header(inst, "report");
  j["ring"] = ring_json(inst);
  j["d"] = ctx.nvars();
  j["e"] = ctx.e();
  j["mu"] = ctx.mu();
  j["generatorDegrees"] = ctx.generator_degrees();
  j["rank"] = watch.time("rank", [&] { return ctx.rank(); });
  j["dimRees"] = watch.time("presentation", [&] { return ctx.dim_rees(); });
  j["analyticSpread"] = ctx.analytic_spread();
  j["depthSequence"] = watch.time("depthSequence", [&] { return to_json(a.depth_sequence()); });
  j["depthPowers"] = watch.time("depthPowers", [&] {
    ordered_json v = ordered_json::array();
    for (const auto& d : a.depth_powers()) v.push_back(to_json(d));
    return v;
  });
  j["quotientDimensions"] = a.quotient_dimensions();
  j["assSequence"] = watch.time("assSequence", [&] { return ass_json(a); });
  j["fittingHeights"] = watch.time("fitting", [&] { return fitting_heights(ctx); });
  j["idealModule"] = ctx.is_ideal_module();
  j["deviation"] = guarded([&] { return ordered_json(ctx.deviation()); });
  j["analyticDeviation"] = guarded([&] { return ordered_json(ctx.analytic_deviation()); });
  j["predicates"] = predicates_json(inst);

  auto superficial = watch.time("superficialElement", [&] { return a.superficial_element(); });
  j["superficialElement"] = superficial ? superficial->to_string() : "NONE";

  ordered_json checkers = ordered_json::array();
  watch.time("checkers", [&] {
    add_verdict(out, checkers, a.burch_check());
    add_verdict(out, checkers, a.grade_and_depth_checks());
    add_verdict(out, checkers, a.cm_equality_check());
    add_verdict(out, checkers, a.cowsik_nori_check(inst.primes));
    if (superficial) {
      add_verdict(out, checkers, a.bar_reduce_check(*superficial, std::min(4, inst.spec.n_max)));
    } else {
      ordered_json marker = unsupported_marker("no superficial linear form in the window");
      marker["name"] = "bar-reduce";
      checkers.push_back(marker);
    }
    return 0;
  });
  j["checkers"] = checkers;
  j["violation"] = out.violation;
  if (options.meta) {
    j["meta"] = ordered_json{{"tool", "reesalg"}, {"version", kToolVersion}, {"timingsMs", watch.timings()}};
  }
  out.json = std::move(j);
  return out;
}

CommandResult checker(const Instance& inst, const std::string& command) {
  Asymptotics a(*inst.context, analysis_options(inst));
  CheckerVerdict v;
  if (command == "burch") {
    v = a.burch_check();
  } else if (command == "grade") {
    v = a.grade_and_depth_checks();
  } else if (command == "cm-equality") {
    v = a.cm_equality_check();
  } else {
    v = a.cowsik_nori_check(inst.primes);
  }
  CommandResult out;
  out.violation = v.verdict == Verdict::Violation;
  out.json = header(inst, command);
  out.json["verdict"] = v.to_json();
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"power", "depth-seq", "ass-seq", "spread", "dim",
                                                 "burch", "grade", "cm-equality", "cowsik-nori", "report"};
  return names;
}

ordered_json unsupported_marker(const std::string& reason) {
  return ordered_json{{"status", "UNSUPPORTED"}, {"reason", reason}};
}

ordered_json error_json(const Error& err) {
  ordered_json e;
  e["code"] = error_code_name(err.code());
  e["message"] = err.what();
  if (const auto* p = dynamic_cast<const ParseError*>(&err)) {
    e["line"] = p->line();
    e["column"] = p->column();
  }
  return ordered_json{{"schemaVersion", kSchemaVersion}, {"error", e}};
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return 2;
    case ErrorCode::Validation:
    case ErrorCode::RingMismatch:
    case ErrorCode::Domain:
    case ErrorCode::Unsupported: return 3;
    case ErrorCode::Resource: return 4;
    case ErrorCode::InternalInconsistency: return 5;
  }
  return 5;
}

CommandResult run_command(const Instance& inst, const std::string& command, const RunOptions& options) {
  const ReesContext& ctx = *inst.context;
  if (command == "power") {
    CommandResult out;
    out.csv = ctx.power_csv(options.power_n);
    return out;
  }
  if (command == "report") return report(inst, options);
  if (command == "burch" || command == "grade" || command == "cm-equality" || command == "cowsik-nori") {
    return checker(inst, command);
  }
  CommandResult out;
  out.json = header(inst, command);
  if (command == "depth-seq") {
    Asymptotics a(ctx, analysis_options(inst));
    out.json["depthSequence"] = to_json(a.depth_sequence());
    ordered_json powers = ordered_json::array();
    for (const auto& d : a.depth_powers()) powers.push_back(to_json(d));
    out.json["depthPowers"] = powers;
  } else if (command == "ass-seq") {
    Asymptotics a(ctx, analysis_options(inst));
    out.json["assSequence"] = ass_json(a);
  } else if (command == "spread") {
    out.json["mu"] = ctx.mu();
    out.json["analyticSpread"] = ctx.analytic_spread();
    out.json["fiberIdeal"] = [&] {
      ordered_json gens = ordered_json::array();
      for (const auto& g : ctx.presentation().fiber_ideal.gens()) gens.push_back(g[0].to_string());
      return gens;
    }();
  } else if (command == "dim") {
    out.json["d"] = ctx.nvars();
    out.json["rank"] = ctx.rank();
    out.json["dimRees"] = ctx.dim_rees();
  } else {
    throw ValidationError("unknown command " + command);
  }
  return out;
}

}  // namespace reesalg
