#pragma once

#include <array>
#include <string>
#include <vector>

#include "legfill/braid.hpp"

namespace legfill {

// One crossing of an oriented planar diagram. `edges` lists the four incident
// edge labels counterclockwise, starting with the incoming under-edge; so
// edges[2] is the outgoing under-edge. For a positive crossing the over strand
// runs edges[3] -> edges[1], for a negative one edges[1] -> edges[3].
struct PdCrossing {
  std::array<int, 4> edges{};
  int sign = 1;

  int under_in() const noexcept { return edges[0]; }
  int under_out() const noexcept { return edges[2]; }
  int over_in() const noexcept { return sign > 0 ? edges[3] : edges[1]; }
  int over_out() const noexcept { return sign > 0 ? edges[1] : edges[3]; }

  static PdCrossing from_strands(int under_in, int under_out, int over_in, int over_out, int sign);

  friend bool operator==(const PdCrossing&, const PdCrossing&) = default;
};

struct PlanarDiagram {
  std::vector<PdCrossing> crossings;
  // Components that pass through no crossing.
  int free_loops = 0;

  // Every edge label must occur exactly once as an incoming and once as an
  // outgoing slot; signs must be +-1. Throws MalformedDiagram.
  void validate() const;

  int component_count() const;
  int writhe() const;

  // Crossing change at `index`: over and under strands exchange, sign flips.
  PlanarDiagram switched(std::size_t index) const;
  // Same crossing forced to the given sign (identity if it already has it).
  PlanarDiagram with_sign(std::size_t index, int sign) const;
  // Oriented smoothing at `index`.
  PlanarDiagram smoothed(std::size_t index) const;

  // Text form: one "X a b c d +|-" line per crossing, then "loops=<k>".
  std::string to_string() const;
};

// Trace closure of a braid. Strands run left to right with position 1 on top;
// sigma_i carries the strand at position i down to i+1 over the other strand,
// which makes it a positive crossing.
PlanarDiagram closure_diagram(const BraidWord& word);

}  // namespace legfill
