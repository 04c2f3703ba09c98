#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legfill/front.hpp"

namespace legfill {

struct Ruling {
  // (left cusp event, right cusp event) for every ruling disk, by left cusp.
  std::vector<std::pair<std::size_t, std::size_t>> cusp_pairing;
  // Switched crossings as 0-based crossing ordinals, ascending.
  std::vector<std::size_t> switches;
  // matchings[j][p - 1] is the partner position of the strand at position p
  // after the first j events.
  std::vector<std::vector<int>> matchings;

  friend bool operator==(const Ruling&, const Ruling&) = default;
};

// The ruling with exactly these switches, if it is a normal ruling.
std::optional<Ruling> ruling_with_switches(const Front& front, std::vector<std::size_t> switches);

// All normal rulings, sorted lexicographically by switch set.
std::vector<Ruling> enumerate_rulings(const Front& front);
// With oriented_only, branches switching at negative crossings are pruned.
std::vector<Ruling> enumerate_rulings(const OrientedFront& front, bool oriented_only);

bool is_oriented(const Ruling& ruling, const OrientedFront& front);

// The oriented normal ruling switched at every crossing, if there is one.
std::optional<Ruling> find_all_switched_oriented(const OrientedFront& front);

// 0-resolving the switches of `ruling` leaves only crossing-free components
// with one left and one right cusp each.
bool unlinked_resolution(const Front& front, const Ruling& ruling);

// "switches=<i,j,...>"
std::string format_ruling(const Ruling& ruling);

}  // namespace legfill
