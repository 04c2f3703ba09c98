#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legfill/braid.hpp"
#include "legfill/cobordism.hpp"
#include "legfill/front.hpp"
#include "legfill/poly.hpp"

namespace legfill {

enum class FillingStatus { Constructed, ScriptVerified, MethodFailed, RuledOut };

const char* to_string(FillingStatus status) noexcept;

struct ConjectureReport {
  std::string label;
  HierarchyLevel certificate = HierarchyLevel::NoCertificate;
  std::optional<int> chi4;
  HomflyPoly polynomial;  // of the front
  int max_framing_degree = 0;
  int homfly_bound = 0;
  int front_tb = 0;
  int front_rot = 0;
  bool bound_sharp = false;
  FillingStatus filling = FillingStatus::MethodFailed;
  std::string reason;
  // Summary of the trace behind Constructed / ScriptVerified.
  std::optional<int> trace_euler;
  std::optional<int> trace_genus;
  std::size_t trace_steps = 0;
  std::vector<std::string> warnings;
};

struct AuditOptions {
  std::string label = "unnamed";
  // Filling script to try when the constructor does not apply.
  std::optional<std::vector<Move>> script;
  // Compare the HOMFLY polynomial of the band closure with the front's.
  bool cross_check = true;
};

// Throws NotAKnot when the band closure has more than one component.
ConjectureReport audit(const BandPresentation& bands, const OrientedFront& front, const AuditOptions& options = {});

// Flat key=value lines.
std::string format_report(const ConjectureReport& report);
std::string report_json(const ConjectureReport& report);

}  // namespace legfill
