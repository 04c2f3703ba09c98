#include "legfill/audit.hpp"

#include <sstream>

#include <json.hpp>

#include "legfill/error.hpp"
#include "legfill/homfly.hpp"

namespace legfill {

const char* to_string(FillingStatus status) noexcept {
  switch (status) {
    case FillingStatus::Constructed: return "Constructed";
    case FillingStatus::ScriptVerified: return "ScriptVerified";
    case FillingStatus::MethodFailed: return "MethodFailed";
    case FillingStatus::RuledOut: return "RuledOut";
  }
  return "?";
}

ConjectureReport audit(const BandPresentation& bands, const OrientedFront& front, const AuditOptions& options) {
  bands.validate();
  front.front.validate();
  const BraidWord word = expand_bands(bands);
  const int closure = closure_components(word).component_count;
  if (closure != 1)
    throw Error(ErrorCode::NotAKnot, "band closure has " + std::to_string(closure) + " components");
  if (FrontTopology(front.front).component_count() != 1) throw Error(ErrorCode::NotAKnot, "front is not a knot");

  ConjectureReport r;
  r.label = options.label;
  r.certificate = classify_certificate(bands);
  r.chi4 = chi4_quasipositive(bands);
  r.polynomial = homfly(front_to_pd(front));
  r.max_framing_degree = max_framing_degree(r.polynomial);
  r.homfly_bound = homfly_tb_bound(r.polynomial);
  const auto inv = classical_invariants(front);
  r.front_tb = inv.tb;
  r.front_rot = inv.rot;
  r.bound_sharp = r.front_tb == r.homfly_bound;

  if (options.cross_check && homfly(closure_diagram(word)) != r.polynomial)
    r.warnings.push_back("HOMFLY of the band closure differs from the front's");
  if (r.front_tb > r.homfly_bound) r.warnings.push_back("front tb exceeds the HOMFLY bound");

  // A filling forces tb = -chi4, and tb = -chi4 must then be the maximum,
  // which the HOMFLY bound caps.
  const bool contradiction = r.chi4 && -*r.chi4 != r.homfly_bound;

  auto take = [&](const FillingTrace& t, FillingStatus s) {
    r.filling = s;
    r.trace_euler = t.euler;
    r.trace_genus = t.genus;
    r.trace_steps = t.steps.size();
    if (r.chi4 && t.euler != *r.chi4) r.warnings.push_back("trace Euler characteristic differs from chi4");
    if (contradiction) r.warnings.push_back("filling found although -chi4 differs from the HOMFLY bound");
  };

  try {
    take(construct_filling(front), FillingStatus::Constructed);
    return r;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFillableByThisMethod) throw;
    r.reason = e.what();
  }

  if (options.script) {
    try {
      FillingTrace t = replay_script(*options.script);
      if (t.end().front == front.front && verify_trace(t, &bands).passed()) {
        r.reason.clear();
        take(t, FillingStatus::ScriptVerified);
        return r;
      }
      r.warnings.push_back("script does not verify as a filling of this front");
    } catch (const Error& e) {
      r.warnings.push_back(std::string("script failed: ") + e.what());
    }
  }

  if (contradiction && implies(r.certificate, HierarchyLevel::QuasiPositive)) {
    r.filling = FillingStatus::RuledOut;
    r.reason = "a filling would force max tb = -chi4 = " + std::to_string(-*r.chi4) +
               ", but the HOMFLY bound is " + std::to_string(r.homfly_bound) + " and would have to be sharp";
  }
  return r;
}

namespace {

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

}  // namespace

std::string format_report(const ConjectureReport& r) {
  std::ostringstream out;
  out << "label=" << r.label << "\n";
  out << "certificate=" << to_string(r.certificate) << "\n";
  out << "chi4=" << opt(r.chi4) << "\n";
  out << "homfly=" << r.polynomial.to_string() << "\n";
  out << "max_framing_degree=" << r.max_framing_degree << "\n";
  out << "homfly_bound=" << r.homfly_bound << "\n";
  out << "front_tb=" << r.front_tb << "\n";
  out << "front_rot=" << r.front_rot << "\n";
  out << "bound_sharp=" << (r.bound_sharp ? "true" : "false") << "\n";
  out << "filling=" << to_string(r.filling) << "\n";
  if (r.trace_euler) {
    out << "trace_chi=" << *r.trace_euler << "\n";
    out << "trace_genus=" << opt(r.trace_genus) << "\n";
    out << "trace_steps=" << r.trace_steps << "\n";
  }
  if (!r.reason.empty()) out << "reason=" << r.reason << "\n";
  for (const auto& w : r.warnings) out << "warning=" << w << "\n";
  return out.str();
}

std::string report_json(const ConjectureReport& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["certificate"] = to_string(r.certificate);
  j["chi4"] = r.chi4 ? nlohmann::ordered_json(*r.chi4) : nlohmann::ordered_json();
  j["homfly"] = r.polynomial.to_string();
  j["max_framing_degree"] = r.max_framing_degree;
  j["homfly_bound"] = r.homfly_bound;
  j["front_tb"] = r.front_tb;
  j["front_rot"] = r.front_rot;
  j["bound_sharp"] = r.bound_sharp;
  j["filling"] = to_string(r.filling);
  if (r.trace_euler) {
    j["trace"] = {{"chi", *r.trace_euler},
                  {"genus", r.trace_genus ? nlohmann::ordered_json(*r.trace_genus) : nlohmann::ordered_json()},
                  {"steps", r.trace_steps}};
  }
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["warnings"] = r.warnings;
  return j.dump(2);
}

}  // namespace legfill
