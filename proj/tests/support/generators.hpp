#pragma once

// Seeded random inputs for property tests.

#include <random>
#include <vector>

#include "legfill/braid.hpp"
#include "legfill/front.hpp"

namespace gen {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Braid on 2..max_strands strands with 1..max_letters letters.
inline legfill::BraidWord braid(Rng& rng, int max_strands, int max_letters) {
  legfill::BraidWord w;
  w.strand_count = uniform(rng, 2, max_strands);
  int len = uniform(rng, 1, max_letters);
  for (int i = 0; i < len; ++i) {
    int g = uniform(rng, 1, w.strand_count - 1);
    w.letters.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return w;
}

// Valid front: a random walk over cusps and crossings with at most
// max_strands strands and max_crossings crossings, closed off at the end.
inline legfill::Front front(Rng& rng, int max_strands, int max_crossings, int max_events = 16) {
  using legfill::Event;
  using legfill::EventKind;
  legfill::Front f;
  int strands = 0, crossings = 0;
  int target = uniform(rng, 2, max_events);
  while (static_cast<int>(f.events.size()) < target || strands > 0) {
    bool closing = static_cast<int>(f.events.size()) >= target;
    int choice = uniform(rng, 0, 2);
    if (strands == 0) choice = 0;
    if (closing) choice = 1;
    if (choice == 0 && strands + 2 > max_strands) choice = 1;
    if (choice == 2 && (crossings >= max_crossings || strands < 2)) choice = 1;
    if (choice == 0) {
      f.events.push_back({EventKind::LeftCusp, uniform(rng, 1, strands + 1)});
      strands += 2;
    } else if (choice == 1) {
      f.events.push_back({EventKind::RightCusp, uniform(rng, 1, strands - 1)});
      strands -= 2;
    } else {
      f.events.push_back({EventKind::Crossing, uniform(rng, 1, strands - 1)});
      ++crossings;
    }
  }
  return f;
}

}  // namespace gen
