#pragma once

// Test oracle: normal rulings by trying every subset of crossings as the
// switch set. Each subset is checked with a plain sweep over partner labels,
// stated in terms of disk intervals rather than the enumerator's position
// test.

#include <algorithm>
#include <set>
#include <vector>

#include "legfill/front.hpp"

namespace oracle {

inline bool is_normal_ruling(const legfill::Front& f, const std::vector<bool>& switched) {
  using legfill::EventKind;
  // partner[id] and pos -> strand id
  std::vector<int> at;
  std::vector<int> partner;
  std::size_t c = 0;
  for (const auto& e : f.events) {
    int k = e.level - 1;
    if (e.kind == EventKind::LeftCusp) {
      int a = static_cast<int>(partner.size());
      partner.push_back(a + 1);
      partner.push_back(a);
      at.insert(at.begin() + k, {a, a + 1});
    } else if (e.kind == EventKind::RightCusp) {
      if (partner[at[k]] != at[k + 1]) return false;
      at.erase(at.begin() + k, at.begin() + k + 2);
    } else {
      bool sw = switched[c++];
      int s = at[k], t = at[k + 1];
      if (partner[s] == t) return false;  // companions may meet only at cusps
      if (sw) {
        auto pos = [&](int id) { return static_cast<int>(std::find(at.begin(), at.end(), id) - at.begin()); };
        int lo1 = std::min(k, pos(partner[s])), hi1 = std::max(k, pos(partner[s]));
        int lo2 = std::min(k + 1, pos(partner[t])), hi2 = std::max(k + 1, pos(partner[t]));
        bool disjoint = hi1 < lo2 || hi2 < lo1;
        bool nested = (lo1 < lo2 && hi2 < hi1) || (lo2 < lo1 && hi1 < hi2);
        if (!disjoint && !nested) return false;
        // strands keep their positions: the ruling paths turn back
      } else {
        std::swap(at[k], at[k + 1]);
      }
    }
  }
  return true;
}

// Switch sets (crossing ordinals) of all normal rulings.
inline std::set<std::vector<std::size_t>> brute_force_rulings(const legfill::Front& f) {
  std::size_t n = f.crossing_count();
  std::set<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> sw(n);
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        sw[i] = true;
        set.push_back(i);
      }
    if (is_normal_ruling(f, sw)) out.insert(set);
  }
  return out;
}

}  // namespace oracle
