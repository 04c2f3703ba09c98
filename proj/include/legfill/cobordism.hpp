#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "legfill/braid.hpp"
#include "legfill/front.hpp"

namespace legfill {

// Moves act upward, from the lower end of an elementary cobordism to its upper
// end. Column arguments are event indices in the front the move is applied to.

// 0-handle: a crossing-free unknot [L level, R level] inserted before event
// `column` (defaults to the end of the word). `upper_rightward` orients it.
struct Birth {
  int level = 1;
  std::optional<std::size_t> column;
  int upper_rightward = 1;
  friend bool operator==(const Birth&, const Birth&) = default;
};

// Oriented 1-handle fused with the isotopies that realise a crossing: inserts
// X level before event `column`. The two strands there must run the same way,
// so the new crossing is positive; read downward it is the 0-resolution.
struct Pinch {
  std::size_t column = 0;
  int level = 1;
  friend bool operator==(const Pinch&, const Pinch&) = default;
};

// Oriented 1-handle: events column, column+1 must be R level, L level; both
// are removed so the two strands run straight through.
struct Saddle {
  std::size_t column = 0;
  int level = 1;
  friend bool operator==(const Saddle&, const Saddle&) = default;
};

// Legendrian Reidemeister moves as two-way rewrites at `column`: if the long
// form is present it is removed (or shortened), otherwise the short form is
// expanded.
//   R1 a: [] <-> [L l+1, X l, R l+1]      (loop below the strand at l)
//   R1 b: [] <-> [L l, X l+1, R l]        (loop above it)
//   R2 a: [L l+1] <-> [L l, X l+1, X l]   (cusp pushed up through strand l)
//   R2 b: [L l] <-> [L l+1, X l, X l+1]   (cusp pushed down through it)
//   R2 c: [R l+1] <-> [X l, X l+1, R l]
//   R2 d: [R l] <-> [X l+1, X l, R l+1]
//   R3:   [X l, X l+1, X l] <-> [X l+1, X l, X l+1]
struct Reidemeister1 {
  std::size_t column = 0;
  int level = 1;
  char variant = 'a';
  friend bool operator==(const Reidemeister1&, const Reidemeister1&) = default;
};
struct Reidemeister2 {
  std::size_t column = 0;
  int level = 1;
  char variant = 'a';
  friend bool operator==(const Reidemeister2&, const Reidemeister2&) = default;
};
struct Reidemeister3 {
  std::size_t column = 0;
  int level = 1;
  friend bool operator==(const Reidemeister3&, const Reidemeister3&) = default;
};

// Commutes events column and column+1, which must involve disjoint strands.
// `first_level` selects the level of the event moved to the front when the
// commuted word is not unique (e.g. a right cusp next to a left cusp).
struct Exchange {
  std::size_t column = 0;
  std::optional<int> first_level;
  friend bool operator==(const Exchange&, const Exchange&) = default;
};

using Move = std::variant<Birth, Pinch, Saddle, Reidemeister1, Reidemeister2, Reidemeister3, Exchange>;

bool is_isotopy(const Move& move) noexcept;
// Contribution to the Euler characteristic: +1 birth, -1 pinch or saddle.
int euler_contribution(const Move& move) noexcept;

// Throws PatternMismatch when the move's local pattern is absent.
OrientedFront apply_move(const OrientedFront& front, const Move& move);

// Downward pinch of a positive crossing (0-based ordinal): deletes it.
OrientedFront pinch_crossing(const OrientedFront& front, std::size_t crossing);

std::string format_move(const Move& move);
Move parse_move(const std::string& line);
std::vector<Move> parse_moves(const std::string& text);
std::string format_moves(const std::vector<Move>& moves);

struct TraceStep {
  Move move;
  OrientedFront after;
  int euler_after = 0;  // running Euler characteristic
};

struct FillingTrace {
  OrientedFront start;  // empty for a filling
  std::vector<TraceStep> steps;
  int euler = 0;
  // (1 - euler) / 2 when the end is a knot and the start is empty.
  std::optional<int> genus;

  const OrientedFront& end() const { return steps.empty() ? start : steps.back().after; }
  std::vector<Move> moves() const;
};

// Applies the moves in order from `start`. PatternMismatch errors carry the
// failing step index.
FillingTrace replay_script(const std::vector<Move>& script, const OrientedFront& start = {});

// Lower trace followed by upper; the upper trace must start where the lower
// one ends.
FillingTrace stack(const FillingTrace& lower, const FillingTrace& upper);

// Decomposable filling for a front with an oriented ruling switched at every
// crossing. Throws NotFillableByThisMethod if there is no such ruling.
FillingTrace construct_filling(const OrientedFront& front);

struct TraceCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TraceReport {
  std::vector<TraceCheck> checks;
  int tb = 0;
  int euler = 0;
  std::optional<int> genus;
  bool passed() const;
};

TraceReport verify_trace(const FillingTrace& trace, const BandPresentation* bands = nullptr);

// "step=<n> move=<...> chi=<running>" lines followed by the end front.
std::string format_trace(const FillingTrace& trace);

}  // namespace legfill
