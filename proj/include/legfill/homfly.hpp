#pragma once

#include <cstddef>

#include "legfill/planar_diagram.hpp"
#include "legfill/poly.hpp"

namespace legfill {

struct HomflyStats {
  std::size_t skein_nodes = 0;   // diagrams resolved by a skein step
  std::size_t memo_hits = 0;
  std::size_t memo_entries = 0;
};

// HOMFLY polynomial under the convention a P(L+) - a^-1 P(L-) = z P(L0),
// P(unknot) = 1. Evaluated by a skein tree that switches crossings toward a
// descending diagram, memoized on canonically relabelled sub-diagrams.
HomflyPoly homfly(const PlanarDiagram& diagram, HomflyStats* stats = nullptr);

// Throws ZeroPolynomial for p == 0.
int max_framing_degree(const HomflyPoly& p);

// Upper bound on the maximal Thurston-Bennequin number:
// -max_framing_degree(p) - 1.
int homfly_tb_bound(const HomflyPoly& p);

}  // namespace legfill
