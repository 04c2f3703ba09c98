#include "legfill/front.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "legfill/error.hpp"
#include "text_util.hpp"

namespace legfill {

namespace {

char event_letter(EventKind kind) {
  switch (kind) {
    case EventKind::LeftCusp: return 'L';
    case EventKind::RightCusp: return 'R';
    case EventKind::Crossing: return 'X';
  }
  return '?';
}

bool is_cusp(const Event& e) { return e.kind != EventKind::Crossing; }

}  // namespace

void Front::validate() const {
  int strands = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    switch (e.kind) {
      case EventKind::LeftCusp:
        if (e.level < 1 || e.level > strands + 1)
          throw Error(ErrorCode::SweepViolation,
                      "left cusp at level " + std::to_string(e.level) + " with " + std::to_string(strands) + " strands", i);
        strands += 2;
        break;
      case EventKind::RightCusp:
        if (e.level < 1 || e.level + 1 > strands)
          throw Error(ErrorCode::SweepViolation,
                      "right cusp at level " + std::to_string(e.level) + " with " + std::to_string(strands) + " strands", i);
        strands -= 2;
        break;
      case EventKind::Crossing:
        if (e.level < 1 || e.level + 1 > strands)
          throw Error(ErrorCode::SweepViolation,
                      "crossing at level " + std::to_string(e.level) + " with " + std::to_string(strands) + " strands", i);
        break;
    }
  }
  if (strands != 0)
    throw Error(ErrorCode::SweepViolation, std::to_string(strands) + " strands left open", events.size());
}

std::vector<int> Front::strand_counts() const {
  std::vector<int> out{0};
  int s = 0;
  for (const auto& e : events) {
    if (e.kind == EventKind::LeftCusp) s += 2;
    if (e.kind == EventKind::RightCusp) s -= 2;
    out.push_back(s);
  }
  return out;
}

std::size_t Front::crossing_count() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(),
                                                [](const Event& e) { return e.kind == EventKind::Crossing; }));
}

std::size_t Front::left_cusp_count() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(),
                                                [](const Event& e) { return e.kind == EventKind::LeftCusp; }));
}

std::size_t Front::right_cusp_count() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(),
                                                [](const Event& e) { return e.kind == EventKind::RightCusp; }));
}

std::size_t Front::crossing_event(std::size_t ordinal) const {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < events.size(); ++i)
    if (events[i].kind == EventKind::Crossing && seen++ == ordinal) return i;
  throw Error(ErrorCode::IndexOutOfRange, "front has no crossing #" + std::to_string(ordinal), ordinal);
}

std::optional<std::size_t> Front::crossing_ordinal(std::size_t event) const {
  if (event >= events.size() || events[event].kind != EventKind::Crossing) return std::nullopt;
  std::size_t ordinal = 0;
  for (std::size_t i = 0; i < event; ++i)
    if (events[i].kind == EventKind::Crossing) ++ordinal;
  return ordinal;
}

Front parse_front(const std::string& text) {
  Front front;
  for (const auto& line : detail::tokenize_lines(text)) {
    if (line.tokens.size() != 2) throw Error(ErrorCode::Parse, "expected '<L|R|X> <level>'", line.number);
    const std::string& kind = line.tokens[0];
    Event e;
    if (kind == "L") e.kind = EventKind::LeftCusp;
    else if (kind == "R") e.kind = EventKind::RightCusp;
    else if (kind == "X") e.kind = EventKind::Crossing;
    else throw Error(ErrorCode::Parse, "unknown event '" + kind + "'", line.number);
    e.level = detail::parse_int(line.tokens[1], line.number);
    front.events.push_back(e);
  }
  front.validate();
  return front;
}

std::string format_front(const Front& front) {
  std::ostringstream out;
  for (const auto& e : front.events) out << event_letter(e.kind) << ' ' << e.level << '\n';
  return out.str();
}

std::string format_front_inline(const Front& front) {
  std::ostringstream out;
  for (std::size_t i = 0; i < front.events.size(); ++i)
    out << (i ? " / " : "") << event_letter(front.events[i].kind) << ' ' << front.events[i].level;
  return out.str();
}

Front disjoint_union(const Front& lhs, const Front& rhs) {
  Front out = lhs;
  out.events.insert(out.events.end(), rhs.events.begin(), rhs.events.end());
  return out;
}

// ---------------------------------------------------------------------------

FrontTopology::FrontTopology(const Front& front) {
  front.validate();
  const auto counts = front.strand_counts();
  const std::size_t n = front.events.size();
  offset_.assign(n + 1, 0);
  int total = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    offset_[j] = total;
    for (int p = 1; p <= counts[j]; ++p) {
      column_.push_back(static_cast<int>(j));
      position_.push_back(p);
    }
    total += counts[j];
  }
  right_.assign(total, {});
  left_.assign(total, {});
  event_segment_.assign(n, 0);

  auto straight = [&](int l, int r, std::size_t ev) {
    right_[l] = {r, false, ev};
    left_[r] = {l, false, ev};
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Event& e = front.events[i];
    const int before = counts[i];
    const int col = static_cast<int>(i);
    const int k = e.level;
    switch (e.kind) {
      case EventKind::Crossing:
        for (int p = 1; p <= before; ++p) {
          int q = p == k ? k + 1 : p == k + 1 ? k : p;
          straight(segment(col, p), segment(col + 1, q), i);
        }
        event_segment_[i] = static_cast<std::size_t>(segment(col, k));
        break;
      case EventKind::LeftCusp: {
        for (int p = 1; p <= before; ++p) straight(segment(col, p), segment(col + 1, p < k ? p : p + 2), i);
        int upper = segment(col + 1, k), lower = segment(col + 1, k + 1);
        left_[upper] = {lower, true, i};
        left_[lower] = {upper, true, i};
        event_segment_[i] = static_cast<std::size_t>(upper);
        break;
      }
      case EventKind::RightCusp: {
        for (int p = 1; p <= before; ++p)
          if (p != k && p != k + 1) straight(segment(col, p), segment(col + 1, p < k ? p : p - 2), i);
        int upper = segment(col, k), lower = segment(col, k + 1);
        right_[upper] = {lower, true, i};
        right_[lower] = {upper, true, i};
        event_segment_[i] = static_cast<std::size_t>(upper);
        break;
      }
    }
  }

  component_.assign(total, -1);
  for (int s = 0; s < total; ++s) {
    if (component_[s] >= 0) continue;
    for (const Step& step : trace(s)) component_[step.seg] = component_count_;
    ++component_count_;
  }
}

int FrontTopology::segment(int column, int position) const {
  return offset_[column] + position - 1;
}

std::vector<FrontTopology::Step> FrontTopology::trace(int seg) const {
  std::vector<Step> out;
  int s = seg;
  bool rightward = true;
  do {
    out.push_back({s, rightward});
    const Link& link = rightward ? right_[s] : left_[s];
    s = link.other;
    if (link.flip) rightward = !rightward;
  } while (!(s == seg && rightward));
  return out;
}

int FrontTopology::component_of_event(std::size_t event) const {
  return component_[event_segment_[event]];
}

std::pair<int, int> FrontTopology::crossing_components(std::size_t event) const {
  int upper = static_cast<int>(event_segment_[event]);
  return {component_[upper], component_[upper + 1]};
}

// ---------------------------------------------------------------------------

namespace {

// Propagates segment directions from `seeds` (segment, direction) pairs;
// unseeded components get direction +1 on `defaults[c]`.
std::vector<int> propagate(const FrontTopology& topo, const std::vector<std::pair<int, int>>& seeds,
                           const std::vector<int>& defaults) {
  std::vector<int> dir(topo.segment_count(), 0);
  auto fill = [&](int seg, int d) {
    for (const auto& step : topo.trace(seg)) {
      int want = step.rightward ? d : -d;
      if (dir[step.seg] != 0 && dir[step.seg] != want)
        throw Error(ErrorCode::PatternMismatch, "inconsistent orientation along a component");
      dir[step.seg] = want;
    }
  };
  for (const auto& [seg, d] : seeds) {
    if (dir[seg] == 0) fill(seg, d);
    else if (dir[seg] != d) throw Error(ErrorCode::PatternMismatch, "inconsistent orientation along a component");
  }
  for (int c = 0; c < topo.component_count(); ++c)
    if (dir[defaults[c]] == 0) fill(defaults[c], 1);
  return dir;
}

// Segment carrying the upper strand of a cusp event.
int cusp_upper_segment(const FrontTopology& topo, const Front& front, std::size_t i) {
  const Event& e = front.events[i];
  int col = static_cast<int>(e.kind == EventKind::LeftCusp ? i + 1 : i);
  return topo.segment(col, e.level);
}

std::vector<int> cusp_directions(const FrontTopology& topo, const Front& front, const std::vector<int>& dir) {
  std::vector<int> out(front.events.size(), 0);
  for (std::size_t i = 0; i < front.events.size(); ++i)
    if (is_cusp(front.events[i])) out[i] = dir[cusp_upper_segment(topo, front, i)];
  return out;
}

}  // namespace

OrientedFront orient(const Front& front, const std::vector<int>& hints) {
  FrontTopology topo(front);
  if (!hints.empty() && hints.size() != front.events.size())
    throw Error(ErrorCode::PatternMismatch, "orientation hints must match the event count");
  std::vector<std::pair<int, int>> seeds;
  for (std::size_t i = 0; i < hints.size(); ++i)
    if (hints[i] != 0 && is_cusp(front.events[i]))
      seeds.emplace_back(cusp_upper_segment(topo, front, i), hints[i] > 0 ? 1 : -1);
  std::vector<int> defaults(topo.component_count(), -1);
  for (std::size_t i = 0; i < front.events.size(); ++i) {
    if (front.events[i].kind != EventKind::LeftCusp) continue;
    int seg = cusp_upper_segment(topo, front, i);
    int c = topo.component_of(seg);
    if (defaults[c] < 0) defaults[c] = seg;
  }
  auto dir = propagate(topo, seeds, defaults);
  return OrientedFront{front, cusp_directions(topo, front, dir)};
}

OrientedFront reverse_components(const OrientedFront& f, const std::vector<int>& comps) {
  FrontTopology topo(f.front);
  OrientedFront out = f;
  for (std::size_t i = 0; i < f.front.events.size(); ++i) {
    if (!is_cusp(f.front.events[i])) continue;
    int c = topo.component_of(cusp_upper_segment(topo, f.front, i));
    if (std::find(comps.begin(), comps.end(), c) != comps.end()) out.upper_rightward[i] = -out.upper_rightward[i];
  }
  return out;
}

std::vector<int> segment_directions(const OrientedFront& f) {
  FrontTopology topo(f.front);
  if (f.upper_rightward.size() != f.front.events.size())
    throw Error(ErrorCode::PatternMismatch, "orientation does not match the front");
  std::vector<std::pair<int, int>> seeds;
  for (std::size_t i = 0; i < f.front.events.size(); ++i) {
    if (!is_cusp(f.front.events[i])) continue;
    if (f.upper_rightward[i] == 0) throw Error(ErrorCode::PatternMismatch, "cusp without orientation", i);
    seeds.emplace_back(cusp_upper_segment(topo, f.front, i), f.upper_rightward[i]);
  }
  return propagate(topo, seeds, std::vector<int>(topo.component_count(), 0));
}

std::vector<int> crossing_signs(const OrientedFront& f) {
  FrontTopology topo(f.front);
  auto dir = segment_directions(f);
  std::vector<int> out;
  for (std::size_t i = 0; i < f.front.events.size(); ++i) {
    const Event& e = f.front.events[i];
    if (e.kind != EventKind::Crossing) continue;
    int col = static_cast<int>(i);
    out.push_back(dir[topo.segment(col, e.level)] == dir[topo.segment(col, e.level + 1)] ? 1 : -1);
  }
  return out;
}

int writhe(const OrientedFront& f) {
  int w = 0;
  for (int s : crossing_signs(f)) w += s;
  return w;
}

ClassicalInvariants classical_invariants(const OrientedFront& f) {
  ClassicalInvariants out;
  out.tb = writhe(f) - static_cast<int>(f.front.right_cusp_count());
  int down = 0, up = 0;
  for (std::size_t i = 0; i < f.front.events.size(); ++i) {
    const Event& e = f.front.events[i];
    if (!is_cusp(e)) continue;
    bool upper_right = f.upper_rightward[i] > 0;
    // Left cusp: traversal arrives on the upper strand when it runs leftward,
    // then leaves downward. Right cusp: the mirror statement.
    bool descending = e.kind == EventKind::LeftCusp ? !upper_right : upper_right;
    (descending ? down : up) += 1;
  }
  out.rot = (down - up) / 2;
  return out;
}

Front zero_resolution(const Front& front, const std::vector<std::size_t>& crossings) {
  std::vector<bool> drop(front.events.size(), false);
  for (std::size_t ordinal : crossings) drop[front.crossing_event(ordinal)] = true;
  Front out;
  for (std::size_t i = 0; i < front.events.size(); ++i)
    if (!drop[i]) out.events.push_back(front.events[i]);
  out.validate();
  return out;
}

OrientedFront zero_resolution(const OrientedFront& front, const std::vector<std::size_t>& crossings) {
  std::vector<bool> drop(front.front.events.size(), false);
  for (std::size_t ordinal : crossings) drop[front.front.crossing_event(ordinal)] = true;
  std::vector<int> hints;
  Front out;
  for (std::size_t i = 0; i < front.front.events.size(); ++i) {
    if (drop[i]) continue;
    out.events.push_back(front.front.events[i]);
    hints.push_back(front.upper_rightward[i]);
  }
  return orient(out, hints);
}

std::vector<FrontComponent> components(const Front& front) {
  FrontTopology topo(front);
  std::vector<FrontComponent> out(topo.component_count());
  std::vector<bool> done(topo.component_count(), false);
  for (int s = 0; s < topo.segment_count(); ++s) {
    int c = topo.component_of(s);
    if (done[c]) continue;
    done[c] = true;
    for (const auto& step : topo.trace(s)) {
      const auto& link = step.rightward ? topo.right_link(step.seg) : topo.left_link(step.seg);
      const Event& e = front.events[link.event];
      if (link.flip) {
        (e.kind == EventKind::LeftCusp ? out[c].left_cusps : out[c].right_cusps) += 1;
      } else if (e.kind == EventKind::Crossing && topo.position(step.seg) != topo.position(link.other) &&
                 (topo.position(step.seg) == e.level || topo.position(step.seg) == e.level + 1) &&
                 (topo.position(link.other) == e.level || topo.position(link.other) == e.level + 1)) {
        out[c].crossing_incidences.push_back(link.event);
      }
    }
    std::sort(out[c].crossing_incidences.begin(), out[c].crossing_incidences.end());
  }
  return out;
}

PlanarDiagram front_to_pd(const OrientedFront& f) {
  FrontTopology topo(f.front);
  auto dir = segment_directions(f);
  const auto& events = f.front.events;

  struct Slots {
    int ui = -1, uo = -1, oi = -1, oo = -1;
  };
  std::map<std::size_t, Slots> slots;
  PlanarDiagram pd;
  std::vector<bool> done(topo.component_count(), false);
  int next_label = 0;

  for (int s = 0; s < topo.segment_count(); ++s) {
    int c = topo.component_of(s);
    if (done[c]) continue;
    done[c] = true;
    // Walk along the orientation; start with the segment's own direction.
    std::vector<FrontTopology::Step> steps = topo.trace(s);
    if (dir[s] < 0) {
      // Reverse traversal: walk leftward from s.
      steps.clear();
      int seg = s;
      bool rightward = false;
      do {
        steps.push_back({seg, rightward});
        const auto& link = rightward ? topo.right_link(seg) : topo.left_link(seg);
        seg = link.other;
        if (link.flip) rightward = !rightward;
      } while (!(seg == s && !rightward));
    }
    // Collect crossing passages in order.
    struct Passage {
      std::size_t event;
      bool over;
    };
    std::vector<Passage> passages;
    for (const auto& step : steps) {
      const auto& link = step.rightward ? topo.right_link(step.seg) : topo.left_link(step.seg);
      const Event& e = events[link.event];
      if (link.flip || e.kind != EventKind::Crossing) continue;
      int p = topo.position(step.seg), q = topo.position(link.other);
      if (p == q) continue;
      int left_pos = step.rightward ? p : q;
      passages.push_back({link.event, left_pos == e.level});
    }
    if (passages.empty()) {
      ++pd.free_loops;
      continue;
    }
    const int first = next_label;
    for (std::size_t k = 0; k < passages.size(); ++k) {
      int in = next_label + static_cast<int>(k);
      int out = k + 1 < passages.size() ? in + 1 : first;
      auto& sl = slots[passages[k].event];
      if (passages[k].over) {
        sl.oi = in;
        sl.oo = out;
      } else {
        sl.ui = in;
        sl.uo = out;
      }
    }
    next_label += static_cast<int>(passages.size());
  }

  auto signs = crossing_signs(f);
  std::size_t ordinal = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i].kind != EventKind::Crossing) continue;
    const auto& sl = slots.at(i);
    pd.crossings.push_back(PdCrossing::from_strands(sl.ui, sl.uo, sl.oi, sl.oo, signs[ordinal++]));
  }
  return pd;
}

bool check_tanaka_form(const OrientedFront& f) {
  FrontTopology topo(f.front);
  auto dir = segment_directions(f);
  std::vector<std::size_t> all;
  for (std::size_t i = 0, ordinal = 0; i < f.front.events.size(); ++i) {
    const Event& e = f.front.events[i];
    if (e.kind != EventKind::Crossing) continue;
    int col = static_cast<int>(i);
    if (dir[topo.segment(col, e.level)] > 0 || dir[topo.segment(col, e.level + 1)] > 0) return false;
    all.push_back(ordinal++);
  }
  for (const auto& comp : components(zero_resolution(f.front, all)))
    if (comp.left_cusps != 1 || comp.right_cusps != 1) return false;
  return true;
}

OrientedFront legendrian_closure(const BraidWord& word) {
  word.validate();
  const int n = word.strand_count;
  Front front;
  for (int k = 1; k <= n; ++k) front.events.push_back({EventKind::LeftCusp, k});
  for (int letter : word.letters) {
    int i = std::abs(letter);
    if (letter > 0) {
      front.events.push_back({EventKind::Crossing, i});
    } else {
      front.events.push_back({EventKind::LeftCusp, i});
      front.events.push_back({EventKind::Crossing, i + 1});
      front.events.push_back({EventKind::RightCusp, i + 2});
    }
  }
  for (int k = n; k >= 1; --k) front.events.push_back({EventKind::RightCusp, k});
  // The braid strands (upper halves of the nested cusps) run rightward.
  std::vector<int> hints(front.events.size(), 0);
  for (int k = 0; k < n; ++k) hints[k] = 1;
  return orient(front, hints);
}

}  // namespace legfill
