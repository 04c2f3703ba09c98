#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legfill/braid.hpp"
#include "legfill/planar_diagram.hpp"

namespace legfill {

enum class EventKind { LeftCusp, RightCusp, Crossing };

// One column event of a front. Levels are 1-based positions among the strands
// active at that column, counted top-down.
struct Event {
  EventKind kind = EventKind::Crossing;
  int level = 1;

  friend bool operator==(const Event&, const Event&) = default;
};

// A Legendrian front read left to right as a word of cusps and crossings.
struct Front {
  std::vector<Event> events;

  // Sweep check; throws SweepViolation carrying the offending event index
  // (events.size() when strands are left open at the end).
  void validate() const;

  // strand_counts()[j] is the number of strands after the first j events.
  std::vector<int> strand_counts() const;

  std::size_t crossing_count() const;
  std::size_t left_cusp_count() const;
  std::size_t right_cusp_count() const;
  // Event index of the n-th crossing (0-based ordinal).
  std::size_t crossing_event(std::size_t ordinal) const;
  // Ordinal of the crossing at event index `event`, or nullopt.
  std::optional<std::size_t> crossing_ordinal(std::size_t event) const;

  friend bool operator==(const Front&, const Front&) = default;
};

Front parse_front(const std::string& text);
// One event per line: "L <k>", "R <k>" or "X <k>".
std::string format_front(const Front& front);
// Same events joined by " / ".
std::string format_front_inline(const Front& front);

// Horizontal concatenation; a disjoint union of the two links.
Front disjoint_union(const Front& lhs, const Front& rhs);

// Strand pieces between consecutive events, with the cusp and crossing
// connections between them. Column j (1 <= j < events.size()) holds the
// strands after the first j events.
class FrontTopology {
 public:
  explicit FrontTopology(const Front& front);

  int segment_count() const noexcept { return static_cast<int>(column_.size()); }
  int segment(int column, int position) const;  // position is 1-based
  int column(int seg) const { return column_[seg]; }
  int position(int seg) const { return position_[seg]; }

  int component_count() const noexcept { return component_count_; }
  int component_of(int seg) const { return component_[seg]; }
  // Component of each event: for a crossing, the component of its upper
  // left strand; use crossing_components() for both.
  int component_of_event(std::size_t event) const;
  std::pair<int, int> crossing_components(std::size_t event) const;

  // Where a segment's end leads. `flip` marks a cusp turn-back, after which
  // the traversal runs the other way along `other`; `event` is the event
  // index passed through.
  struct Link {
    int other = -1;
    bool flip = false;
    std::size_t event = 0;
  };
  const Link& right_link(int seg) const { return right_[seg]; }
  const Link& left_link(int seg) const { return left_[seg]; }

  // One full traversal of a component, starting rightward on `seg`.
  struct Step {
    int seg;
    bool rightward;
  };
  std::vector<Step> trace(int seg) const;

 private:
  std::vector<int> offset_;  // first segment id of each column
  std::vector<int> column_, position_, component_;
  std::vector<Link> right_, left_;
  std::vector<std::size_t> event_segment_;  // a segment touching each event
  int component_count_ = 0;
};

// A front together with an orientation. `upper_rightward[i]` is meaningful
// for cusp events only: +1 if the upper strand at that cusp runs to the right,
// -1 otherwise; crossing entries are 0.
struct OrientedFront {
  Front front;
  std::vector<int> upper_rightward;

  friend bool operator==(const OrientedFront&, const OrientedFront&) = default;
};

// Orients every component. `hints` (same length as events, 0 = free) fixes
// chosen cusps; components without a hint get the default orientation, in
// which the upper strand of their first left cusp runs rightward. Throws
// PatternMismatch if hints contradict each other along a component.
OrientedFront orient(const Front& front, const std::vector<int>& hints = {});

// Orientation with the listed component indices reversed.
OrientedFront reverse_components(const OrientedFront& f, const std::vector<int>& components);

// +1 for rightward, -1 for leftward, per segment of FrontTopology(f.front).
std::vector<int> segment_directions(const OrientedFront& f);

// Both strands running the same horizontal way make a positive crossing.
std::vector<int> crossing_signs(const OrientedFront& f);
int writhe(const OrientedFront& f);

struct ClassicalInvariants {
  int tb = 0;
  int rot = 0;
  friend bool operator==(const ClassicalInvariants&, const ClassicalInvariants&) = default;
};

// tb = writhe - #right cusps; rot = (down cusps - up cusps) / 2.
ClassicalInvariants classical_invariants(const OrientedFront& f);

// Deletes the selected crossings (ordinals); cusps are untouched.
Front zero_resolution(const Front& front, const std::vector<std::size_t>& crossings);
OrientedFront zero_resolution(const OrientedFront& front, const std::vector<std::size_t>& crossings);

struct FrontComponent {
  int left_cusps = 0;
  int right_cusps = 0;
  // Event indices of crossings met along the component, once per passage.
  std::vector<std::size_t> crossing_incidences;
};

std::vector<FrontComponent> components(const Front& front);

// Smooth link diagram of the front; cusps become turn-backs. At each crossing
// the strand descending left to right passes over.
PlanarDiagram front_to_pd(const OrientedFront& f);

// Every crossing has both strands oriented leftward, and the full
// 0-resolution is a union of closed curves with one left and one right cusp.
bool check_tanaka_form(const OrientedFront& f);

// Legendrian closure of a braid: nested left cusps, the braid on the upper
// strands, nested right cusps. sigma_i is a plain crossing; sigma_i^-1 is a
// left cusp, one crossing and a right cusp on the strands at i, i+1.
OrientedFront legendrian_closure(const BraidWord& word);

}  // namespace legfill
