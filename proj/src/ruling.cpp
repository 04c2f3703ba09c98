#include "legfill/ruling.hpp"

#include <algorithm>
#include <sstream>

#include "legfill/error.hpp"

namespace legfill {

namespace {

// Strand labels in position order plus their partners; one instance per
// sweep state.
struct SweepState {
  std::vector<int> strand_at;     // position (0-based) -> label
  std::vector<int> partner;       // label -> label
  std::vector<std::size_t> disk;  // label -> left cusp event

  int position_of(int label) const {
    return static_cast<int>(std::find(strand_at.begin(), strand_at.end(), label) - strand_at.begin());
  }

  void open(int level, std::size_t event) {
    int a = static_cast<int>(partner.size()), b = a + 1;
    partner.push_back(b);
    partner.push_back(a);
    disk.push_back(event);
    disk.push_back(event);
    strand_at.insert(strand_at.begin() + (level - 1), {a, b});
  }

  // False unless the two strands are partners.
  bool close(int level) {
    int a = strand_at[level - 1], b = strand_at[level];
    if (partner[a] != b) return false;
    strand_at.erase(strand_at.begin() + (level - 1), strand_at.begin() + (level + 1));
    return true;
  }

  bool partners_at(int level) const { return partner[strand_at[level - 1]] == strand_at[level]; }

  // Switch admissibility at a crossing between positions k, k+1 (1-based),
  // using the partner positions p (of k) and q (of k+1) just before it:
  // disjoint disks (p < k, q > k+1) or nested ones (q < p < k, k+1 < q < p).
  bool normal_switch(int level) const {
    if (partners_at(level)) return false;
    int k = level, p = position_of(partner[strand_at[k - 1]]) + 1, q = position_of(partner[strand_at[k]]) + 1;
    return (p < k && q > k + 1) || (q < p && p < k) || (k + 1 < q && q < p);
  }

  void pass(int level) { std::swap(strand_at[level - 1], strand_at[level]); }

  std::vector<int> matching() const {
    std::vector<int> out(strand_at.size());
    for (std::size_t p = 0; p < strand_at.size(); ++p) out[p] = position_of(partner[strand_at[p]]) + 1;
    return out;
  }
};

void search(const Front& front, const std::vector<int>* signs, std::size_t event, std::size_t ordinal,
            SweepState state, std::vector<std::size_t>& switches, std::vector<std::vector<std::size_t>>& found) {
  for (; event < front.events.size(); ++event) {
    const Event& e = front.events[event];
    if (e.kind == EventKind::LeftCusp) {
      state.open(e.level, event);
    } else if (e.kind == EventKind::RightCusp) {
      if (!state.close(e.level)) return;
    } else {
      // companions meet only at cusps
      if (state.partners_at(e.level)) return;
      bool may_switch = state.normal_switch(e.level) && (!signs || (*signs)[ordinal] > 0);
      if (may_switch) {
        switches.push_back(ordinal);
        search(front, signs, event + 1, ordinal + 1, state, switches, found);
        switches.pop_back();
      }
      state.pass(e.level);
      ++ordinal;
    }
  }
  found.push_back(switches);
}

std::vector<Ruling> collect(const Front& front, const std::vector<int>* signs) {
  front.validate();
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> switches;
  search(front, signs, 0, 0, SweepState{}, switches, found);
  std::sort(found.begin(), found.end());
  std::vector<Ruling> out;
  for (auto& s : found) {
    auto r = ruling_with_switches(front, s);
    if (!r) throw Error(ErrorCode::Internal, "enumerated switch set failed re-simulation");
    out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace

std::optional<Ruling> ruling_with_switches(const Front& front, std::vector<std::size_t> switches) {
  front.validate();
  std::sort(switches.begin(), switches.end());
  switches.erase(std::unique(switches.begin(), switches.end()), switches.end());
  if (!switches.empty() && switches.back() >= front.crossing_count())
    throw Error(ErrorCode::IndexOutOfRange, "switch index beyond the crossing count", switches.back());

  Ruling r;
  r.switches = switches;
  SweepState state;
  r.matchings.push_back(state.matching());
  std::size_t ordinal = 0;
  for (std::size_t i = 0; i < front.events.size(); ++i) {
    const Event& e = front.events[i];
    if (e.kind == EventKind::LeftCusp) {
      state.open(e.level, i);
    } else if (e.kind == EventKind::RightCusp) {
      std::size_t left = state.disk[state.strand_at[e.level - 1]];
      if (!state.close(e.level)) return std::nullopt;
      r.cusp_pairing.emplace_back(left, i);
    } else {
      bool sw = std::binary_search(switches.begin(), switches.end(), ordinal);
      if (state.partners_at(e.level)) return std::nullopt;
      if (sw) {
        if (!state.normal_switch(e.level)) return std::nullopt;
      } else {
        state.pass(e.level);
      }
      ++ordinal;
    }
    r.matchings.push_back(state.matching());
  }
  std::sort(r.cusp_pairing.begin(), r.cusp_pairing.end());
  return r;
}

std::vector<Ruling> enumerate_rulings(const Front& front) { return collect(front, nullptr); }

std::vector<Ruling> enumerate_rulings(const OrientedFront& front, bool oriented_only) {
  if (!oriented_only) return collect(front.front, nullptr);
  auto signs = crossing_signs(front);
  return collect(front.front, &signs);
}

bool is_oriented(const Ruling& ruling, const OrientedFront& front) {
  auto signs = crossing_signs(front);
  return std::all_of(ruling.switches.begin(), ruling.switches.end(), [&](std::size_t s) { return signs[s] > 0; });
}

std::optional<Ruling> find_all_switched_oriented(const OrientedFront& front) {
  std::vector<std::size_t> all(front.front.crossing_count());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  auto r = ruling_with_switches(front.front, all);
  if (!r || !is_oriented(*r, front)) return std::nullopt;
  return r;
}

bool unlinked_resolution(const Front& front, const Ruling& ruling) {
  for (const auto& c : components(zero_resolution(front, ruling.switches)))
    if (c.left_cusps != 1 || c.right_cusps != 1 || !c.crossing_incidences.empty()) return false;
  return true;
}

std::string format_ruling(const Ruling& ruling) {
  std::ostringstream out;
  out << "switches=";
  for (std::size_t k = 0; k < ruling.switches.size(); ++k) out << (k ? "," : "") << ruling.switches[k];
  return out.str();
}

}  // namespace legfill
