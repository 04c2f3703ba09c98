#include "legfill/cobordism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "legfill/error.hpp"
#include "legfill/ruling.hpp"
#include "text_util.hpp"

namespace legfill {
namespace {

using Events = std::vector<Event>;

Event L(int k) { return {EventKind::LeftCusp, k}; }
Event R(int k) { return {EventKind::RightCusp, k}; }
Event X(int k) { return {EventKind::Crossing, k}; }

[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorCode::PatternMismatch, what); }

// Validates the rewritten word and re-derives the orientation from the cusps
// that survived.
OrientedFront rebuild(Events events, const std::vector<int>& hints) {
  Front f{std::move(events)};
  try {
    f.validate();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SweepViolation) throw;
    mismatch(std::string("move leaves an invalid front: ") + e.what());
  }
  return orient(f, hints);
}

bool matches_at(const Events& events, std::size_t column, const Events& pattern) {
  if (column + pattern.size() > events.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), events.begin() + static_cast<std::ptrdiff_t>(column));
}

// Replaces `len` events at `column` by `with`. `carried` maps positions in
// `with` to positions in the replaced block whose orientation hint they keep.
OrientedFront splice(const OrientedFront& f, std::size_t column, std::size_t len, const Events& with,
                     const std::vector<std::pair<std::size_t, std::size_t>>& carried = {}) {
  if (column > f.front.events.size() || column + len > f.front.events.size())
    mismatch("move column out of range");
  Events ev(f.front.events.begin(), f.front.events.begin() + static_cast<std::ptrdiff_t>(column));
  std::vector<int> hints(f.upper_rightward.begin(), f.upper_rightward.begin() + static_cast<std::ptrdiff_t>(column));
  for (std::size_t i = 0; i < with.size(); ++i) {
    ev.push_back(with[i]);
    int h = 0;
    for (auto [to, from] : carried)
      if (to == i) h = f.upper_rightward[column + from];
    hints.push_back(h);
  }
  for (std::size_t i = column + len; i < f.front.events.size(); ++i) {
    ev.push_back(f.front.events[i]);
    hints.push_back(f.upper_rightward[i]);
  }
  return rebuild(std::move(ev), hints);
}

int strands_before(const Front& f, std::size_t column) { return f.strand_counts().at(column); }

// Direction of the strand at `position` just before event `column`.
int direction_before(const OrientedFront& f, std::size_t column, int position) {
  FrontTopology topo(f.front);
  auto dirs = segment_directions(f);
  return dirs[topo.segment(static_cast<int>(column), position)];
}

OrientedFront do_birth(const OrientedFront& f, const Birth& m) {
  std::size_t column = m.column.value_or(f.front.events.size());
  if (column > f.front.events.size()) mismatch("birth column out of range");
  int count = strands_before(f.front, column);
  if (m.level < 1 || m.level > count + 1) mismatch("birth level out of range");
  if (m.upper_rightward != 1 && m.upper_rightward != -1) mismatch("birth orientation must be + or -");
  Events ev = f.front.events;
  std::vector<int> hints = f.upper_rightward;
  auto at = static_cast<std::ptrdiff_t>(column);
  ev.insert(ev.begin() + at, {L(m.level), R(m.level)});
  hints.insert(hints.begin() + at, {m.upper_rightward, m.upper_rightward});
  return rebuild(std::move(ev), hints);
}

OrientedFront do_pinch(const OrientedFront& f, const Pinch& m) {
  if (m.column == 0 || m.column >= f.front.events.size()) mismatch("pinch column must lie between events");
  int count = strands_before(f.front, m.column);
  if (m.level < 1 || m.level + 1 > count) mismatch("pinch level out of range");
  if (direction_before(f, m.column, m.level) != direction_before(f, m.column, m.level + 1))
    mismatch("pinch needs two strands running the same way");
  return splice(f, m.column, 0, {X(m.level)});
}

OrientedFront do_saddle(const OrientedFront& f, const Saddle& m) {
  if (!matches_at(f.front.events, m.column, {R(m.level), L(m.level)}))
    mismatch("saddle needs 'R " + std::to_string(m.level) + "' followed by 'L " + std::to_string(m.level) +
             "' at column " + std::to_string(m.column));
  // upper strand into the right cusp must continue along the upper strand out
  // of the left cusp
  if (f.upper_rightward[m.column] != f.upper_rightward[m.column + 1])
    mismatch("saddle would not be orientable");
  return splice(f, m.column, 2, {});
}

std::pair<Events, Events> r1_forms(int l, char v) {
  if (v == 'a') return {{}, {L(l + 1), X(l), R(l + 1)}};
  if (v == 'b') return {{}, {L(l), X(l + 1), R(l)}};
  throw Error(ErrorCode::Parse, std::string("unknown R1 variant '") + v + "'");
}

std::pair<Events, Events> r2_forms(int l, char v) {
  switch (v) {
    case 'a': return {{L(l + 1)}, {L(l), X(l + 1), X(l)}};
    case 'b': return {{L(l)}, {L(l + 1), X(l), X(l + 1)}};
    case 'c': return {{R(l + 1)}, {X(l), X(l + 1), R(l)}};
    case 'd': return {{R(l)}, {X(l + 1), X(l), R(l + 1)}};
    default: throw Error(ErrorCode::Parse, std::string("unknown R2 variant '") + v + "'");
  }
}

std::size_t cusp_index(const Events& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i].kind != EventKind::Crossing) return i;
  return e.size();
}

OrientedFront toggle(const OrientedFront& f, std::size_t column, const Events& shortf, const Events& longf,
                     bool carry_cusp, const char* name) {
  if (column > f.front.events.size()) mismatch(std::string(name) + " column out of range");
  std::vector<std::pair<std::size_t, std::size_t>> carried;
  if (matches_at(f.front.events, column, longf)) {
    if (carry_cusp) carried.emplace_back(cusp_index(shortf), cusp_index(longf));
    return splice(f, column, longf.size(), shortf, carried);
  }
  if (matches_at(f.front.events, column, shortf)) {
    if (carry_cusp) carried.emplace_back(cusp_index(longf), cusp_index(shortf));
    // the strand the loop or cusp interacts with has to exist
    return splice(f, column, shortf.size(), longf, carried);
  }
  mismatch(std::string(name) + " pattern not found at column " + std::to_string(column));
}

// Label sweep used to commute two events. Returns false when the event does
// not fit the current strands.
bool sweep(std::vector<int>& at, const Event& e, int fresh, std::vector<int>& touched) {
  int n = static_cast<int>(at.size());
  touched.clear();
  switch (e.kind) {
    case EventKind::LeftCusp:
      if (e.level < 1 || e.level > n + 1) return false;
      at.insert(at.begin() + e.level - 1, {fresh, fresh + 1});
      touched = {fresh, fresh + 1};
      return true;
    case EventKind::RightCusp:
      if (e.level < 1 || e.level + 1 > n) return false;
      touched = {at[e.level - 1], at[e.level]};
      at.erase(at.begin() + e.level - 1, at.begin() + e.level + 1);
      break;
    case EventKind::Crossing:
      if (e.level < 1 || e.level + 1 > n) return false;
      touched = {at[e.level - 1], at[e.level]};
      std::swap(at[e.level - 1], at[e.level]);
      break;
  }
  std::sort(touched.begin(), touched.end());
  return true;
}

OrientedFront do_exchange(const OrientedFront& f, const Exchange& m) {
  const Events& ev = f.front.events;
  if (m.column + 1 >= ev.size()) mismatch("exchange column out of range");
  const Event e1 = ev[m.column], e2 = ev[m.column + 1];
  const int s = strands_before(f.front, m.column);
  constexpr int kFresh = 1 << 20;

  std::vector<int> start(static_cast<std::size_t>(s));
  std::iota(start.begin(), start.end(), 0);
  std::vector<int> at = start, t1, t2;
  sweep(at, e1, kFresh, t1);
  sweep(at, e2, kFresh + 2, t2);
  for (int x : t1)
    if (std::find(t2.begin(), t2.end(), x) != t2.end())
      mismatch("exchanged events share a strand at column " + std::to_string(m.column));
  const std::vector<int> target = at;

  std::vector<std::pair<int, int>> found;
  for (int l2 = 1; l2 <= s + 3; ++l2) {
    if (m.first_level && *m.first_level != l2) continue;
    for (int l1 = 1; l1 <= s + 3; ++l1) {
      std::vector<int> cur = start, u1, u2;
      if (!sweep(cur, {e2.kind, l2}, kFresh + 2, u2) || u2 != t2) continue;
      if (!sweep(cur, {e1.kind, l1}, kFresh, u1) || u1 != t1) continue;
      if (cur == target) found.emplace_back(l2, l1);
    }
  }
  if (found.empty()) mismatch("events at column " + std::to_string(m.column) + " do not commute");
  if (found.size() > 1)
    mismatch("exchange at column " + std::to_string(m.column) + " is ambiguous; give the first event's level");
  auto [l2, l1] = found.front();
  return splice(f, m.column, 2, {{e2.kind, l2}, {e1.kind, l1}}, {{0, 1}, {1, 0}});
}

}  // namespace

bool is_isotopy(const Move& move) noexcept {
  return !std::holds_alternative<Birth>(move) && !std::holds_alternative<Pinch>(move) &&
         !std::holds_alternative<Saddle>(move);
}

int euler_contribution(const Move& move) noexcept {
  if (std::holds_alternative<Birth>(move)) return 1;
  if (std::holds_alternative<Pinch>(move) || std::holds_alternative<Saddle>(move)) return -1;
  return 0;
}

OrientedFront apply_move(const OrientedFront& front, const Move& move) {
  struct Visitor {
    const OrientedFront& f;
    OrientedFront operator()(const Birth& m) const { return do_birth(f, m); }
    OrientedFront operator()(const Pinch& m) const { return do_pinch(f, m); }
    OrientedFront operator()(const Saddle& m) const { return do_saddle(f, m); }
    OrientedFront operator()(const Reidemeister1& m) const {
      auto [s, l] = r1_forms(m.level, m.variant);
      if (m.level < 1) mismatch("R1 level out of range");
      return toggle(f, m.column, s, l, false, "R1");
    }
    OrientedFront operator()(const Reidemeister2& m) const {
      auto [s, l] = r2_forms(m.level, m.variant);
      if (m.level < 1) mismatch("R2 level out of range");
      return toggle(f, m.column, s, l, true, "R2");
    }
    OrientedFront operator()(const Reidemeister3& m) const {
      if (m.level < 1) mismatch("R3 level out of range");
      Events a{X(m.level), X(m.level + 1), X(m.level)};
      Events b{X(m.level + 1), X(m.level), X(m.level + 1)};
      if (matches_at(f.front.events, m.column, a)) return splice(f, m.column, 3, b);
      if (matches_at(f.front.events, m.column, b)) return splice(f, m.column, 3, a);
      mismatch("R3 pattern not found at column " + std::to_string(m.column));
    }
    OrientedFront operator()(const Exchange& m) const { return do_exchange(f, m); }
  };
  if (front.upper_rightward.size() != front.front.events.size())
    throw Error(ErrorCode::Internal, "orientation does not match the front");
  return std::visit(Visitor{front}, move);
}

OrientedFront pinch_crossing(const OrientedFront& front, std::size_t crossing) {
  if (crossing >= front.front.crossing_count())
    throw Error(ErrorCode::IndexOutOfRange, "crossing " + std::to_string(crossing) + " out of range");
  if (crossing_signs(front)[crossing] != 1)
    mismatch("crossing " + std::to_string(crossing) + " is negative; only positive crossings can be pinched");
  return zero_resolution(front, {crossing});
}

// ---------------------------------------------------------------- text form

std::string format_move(const Move& move) {
  struct Visitor {
    std::string operator()(const Birth& m) const {
      std::string s = "birth " + std::to_string(m.level);
      if (m.column) s += " " + std::to_string(*m.column);
      return s + (m.upper_rightward > 0 ? " +" : " -");
    }
    std::string operator()(const Pinch& m) const {
      return "pinch " + std::to_string(m.column) + " " + std::to_string(m.level);
    }
    std::string operator()(const Saddle& m) const {
      return "saddle " + std::to_string(m.column) + " " + std::to_string(m.level);
    }
    std::string operator()(const Reidemeister1& m) const {
      return "r1 " + std::to_string(m.column) + " " + std::to_string(m.level) + " " + m.variant;
    }
    std::string operator()(const Reidemeister2& m) const {
      return "r2 " + std::to_string(m.column) + " " + std::to_string(m.level) + " " + m.variant;
    }
    std::string operator()(const Reidemeister3& m) const {
      return "r3 " + std::to_string(m.column) + " " + std::to_string(m.level);
    }
    std::string operator()(const Exchange& m) const {
      std::string s = "xchg " + std::to_string(m.column);
      if (m.first_level) s += " " + std::to_string(*m.first_level);
      return s;
    }
  };
  return std::visit(Visitor{}, move);
}

namespace {

std::size_t parse_column(const std::string& tok, std::size_t line) {
  int v = detail::parse_int(tok, line);
  if (v < 0) throw Error(ErrorCode::Parse, "column must be non-negative", line);
  return static_cast<std::size_t>(v);
}

char parse_variant(const std::string& tok, const std::string& allowed, std::size_t line) {
  if (tok.size() != 1 || allowed.find(tok[0]) == std::string::npos)
    throw Error(ErrorCode::Parse, "variant must be one of '" + allowed + "'", line);
  return tok[0];
}

Move parse_tokens(const std::vector<std::string>& t, std::size_t line) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (t.size() < lo || t.size() > hi)
      throw Error(ErrorCode::Parse, "wrong number of arguments for '" + t[0] + "'", line);
  };
  const std::string& op = t[0];
  if (op == "birth") {
    need(2, 4);
    Birth b;
    b.level = detail::parse_int(t[1], line);
    for (std::size_t i = 2; i < t.size(); ++i) {
      if (t[i] == "+") b.upper_rightward = 1;
      else if (t[i] == "-") b.upper_rightward = -1;
      else if (!b.column && i == 2) b.column = parse_column(t[i], line);
      else throw Error(ErrorCode::Parse, "unexpected '" + t[i] + "' in birth", line);
    }
    return b;
  }
  if (op == "pinch") {
    need(3, 3);
    return Pinch{parse_column(t[1], line), detail::parse_int(t[2], line)};
  }
  if (op == "saddle") {
    need(3, 3);
    return Saddle{parse_column(t[1], line), detail::parse_int(t[2], line)};
  }
  if (op == "r1") {
    need(4, 4);
    return Reidemeister1{parse_column(t[1], line), detail::parse_int(t[2], line), parse_variant(t[3], "ab", line)};
  }
  if (op == "r2") {
    need(4, 4);
    return Reidemeister2{parse_column(t[1], line), detail::parse_int(t[2], line),
                         parse_variant(t[3], "abcd", line)};
  }
  if (op == "r3") {
    need(3, 3);
    return Reidemeister3{parse_column(t[1], line), detail::parse_int(t[2], line)};
  }
  if (op == "xchg") {
    need(2, 3);
    Exchange x{parse_column(t[1], line), std::nullopt};
    if (t.size() == 3) x.first_level = detail::parse_int(t[2], line);
    return x;
  }
  throw Error(ErrorCode::Parse, "unknown move '" + op + "'", line);
}

}  // namespace

Move parse_move(const std::string& line) {
  auto lines = detail::tokenize_lines(line);
  if (lines.size() != 1) throw Error(ErrorCode::Parse, "expected exactly one move");
  return parse_tokens(lines[0].tokens, lines[0].number);
}

std::vector<Move> parse_moves(const std::string& text) {
  std::vector<Move> out;
  for (const auto& line : detail::tokenize_lines(text)) out.push_back(parse_tokens(line.tokens, line.number));
  return out;
}

std::string format_moves(const std::vector<Move>& moves) {
  std::string out;
  for (const auto& m : moves) out += format_move(m) + "\n";
  return out;
}

// ---------------------------------------------------------------- traces

std::vector<Move> FillingTrace::moves() const {
  std::vector<Move> out;
  for (const auto& s : steps) out.push_back(s.move);
  return out;
}

namespace {

std::optional<int> genus_of(const OrientedFront& start, const OrientedFront& end, int euler) {
  if (!start.front.events.empty() || end.front.events.empty()) return std::nullopt;
  if (FrontTopology(end.front).component_count() != 1) return std::nullopt;
  return (1 - euler) / 2;
}

}  // namespace

FillingTrace replay_script(const std::vector<Move>& script, const OrientedFront& start) {
  FillingTrace trace;
  trace.start = start;
  OrientedFront cur = start;
  int euler = 0;
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      cur = apply_move(cur, script[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i) + " (" + format_move(script[i]) + "): " + e.what(), i);
    }
    euler += euler_contribution(script[i]);
    trace.steps.push_back({script[i], cur, euler});
  }
  trace.euler = euler;
  trace.genus = genus_of(start, cur, euler);
  return trace;
}

FillingTrace stack(const FillingTrace& lower, const FillingTrace& upper) {
  if (!(lower.end() == upper.start)) mismatch("traces do not share a boundary front");
  FillingTrace out = lower;
  for (auto step : upper.steps) {
    step.euler_after += lower.euler;
    out.steps.push_back(std::move(step));
  }
  out.euler = lower.euler + upper.euler;
  out.genus = genus_of(out.start, out.end(), out.euler);
  return out;
}

namespace {

// Disk of every strand position per column under the ruling switched at every
// crossing; positions never move at a switch.
struct DiskSweep {
  std::vector<std::vector<std::size_t>> before;  // before[i]: disks ahead of event i
};

DiskSweep sweep_disks(const Front& f) {
  DiskSweep d;
  std::vector<std::size_t> cur;
  for (std::size_t i = 0; i < f.events.size(); ++i) {
    d.before.push_back(cur);
    const Event& e = f.events[i];
    auto at = cur.begin() + e.level - 1;
    if (e.kind == EventKind::LeftCusp) cur.insert(at, {i, i});
    else if (e.kind == EventKind::RightCusp) cur.erase(at, at + 2);
  }
  return d;
}

// Disks in `active` with no other active disk nested inside.
std::set<std::size_t> innermost_disks(const DiskSweep& d, const std::set<std::size_t>& active) {
  std::set<std::size_t> all, outer;
  for (const auto& col : d.before) {
    std::map<std::size_t, std::pair<int, int>> span;
    for (int p = 0; p < static_cast<int>(col.size()); ++p) {
      all.insert(col[p]);
      auto it = span.find(col[p]);
      if (it == span.end()) span[col[p]] = {p, p};
      else it->second.second = p;
    }
    for (const auto& [a, sa] : span)
      for (const auto& [b, sb] : span)
        if (a != b && active.count(b) && sa.first < sb.first && sb.second < sa.second) outer.insert(a);
  }
  std::set<std::size_t> inner;
  for (auto a : all)
    if (active.count(a) && !outer.count(a)) inner.insert(a);
  return inner;
}

// Sub-front on a set of components of a crossing-free front, with positions
// recounted among the kept strands.
OrientedFront restrict_to(const OrientedFront& f, const std::vector<int>& comp_of_event, const std::set<int>& keep,
                          std::vector<std::size_t>* origin = nullptr) {
  Events ev;
  std::vector<int> hints;
  std::vector<int> at;  // component per position
  auto kept_above = [&](int k) {
    int n = 0;
    for (int p = 0; p < k - 1; ++p) n += keep.count(at[p]) ? 1 : 0;
    return n;
  };
  for (std::size_t i = 0; i < f.front.events.size(); ++i) {
    const Event& e = f.front.events[i];
    int c = comp_of_event[i];
    int level = kept_above(e.level) + 1;
    if (e.kind == EventKind::LeftCusp) at.insert(at.begin() + e.level - 1, {c, c});
    else if (e.kind == EventKind::RightCusp) at.erase(at.begin() + e.level - 1, at.begin() + e.level + 1);
    if (!keep.count(c)) continue;
    ev.push_back({e.kind, level});
    hints.push_back(f.upper_rightward[i]);
    if (origin) origin->push_back(i);
  }
  return orient(Front{ev}, hints);
}

}  // namespace

FillingTrace construct_filling(const OrientedFront& front) {
  if (!find_all_switched_oriented(front))
    throw Error(ErrorCode::NotFillableByThisMethod,
                "no oriented normal ruling switches at every crossing");

  // Downward: pinch crossings on innermost disks (among those still crossed)
  // until none are left.
  std::vector<std::pair<std::size_t, int>> removed;  // (event index, level)
  OrientedFront cur = front;
  while (cur.front.crossing_count() > 0) {
    DiskSweep d = sweep_disks(cur.front);
    // a disk with no crossings left cannot shield the ones around it
    std::set<std::size_t> active;
    for (std::size_t i = 0; i < cur.front.events.size(); ++i) {
      const Event& e = cur.front.events[i];
      if (e.kind != EventKind::Crossing) continue;
      active.insert(d.before[i][e.level - 1]);
      active.insert(d.before[i][e.level]);
    }
    auto inner = innermost_disks(d, active);
    auto signs = crossing_signs(cur);
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < cur.front.events.size() && !pick; ++i) {
      const Event& e = cur.front.events[i];
      if (e.kind != EventKind::Crossing) continue;
      const auto& col = d.before[i];
      if (!inner.count(col[e.level - 1]) && !inner.count(col[e.level])) continue;
      if (signs[*cur.front.crossing_ordinal(i)] != 1)
        throw Error(ErrorCode::Internal, "switched crossing is not positive");
      pick = i;
    }
    if (!pick) throw Error(ErrorCode::Internal, "no crossing on an innermost ruling disk");
    removed.emplace_back(*pick, cur.front.events[*pick].level);
    cur = pinch_crossing(cur, *cur.front.crossing_ordinal(*pick));
  }

  // Base: disjoint max-tb unknots, born outermost first (by left cusp) and
  // stretched into place by exchanges.
  const OrientedFront base = cur;
  FrontTopology topo(base.front);
  std::vector<int> comp_of_event(base.front.events.size());
  for (std::size_t i = 0; i < comp_of_event.size(); ++i) comp_of_event[i] = topo.component_of_event(i);
  for (const auto& c : components(base.front))
    if (c.left_cusps != 1 || c.right_cusps != 1)
      throw Error(ErrorCode::Internal, "resolution is not a union of max-tb unknots");

  std::vector<Move> script;
  std::set<int> born;
  OrientedFront built;
  for (std::size_t i = 0; i < base.front.events.size(); ++i) {
    if (base.front.events[i].kind != EventKind::LeftCusp) continue;
    int c = comp_of_event[i];
    born.insert(c);
    std::vector<std::size_t> origin;
    OrientedFront target = restrict_to(base, comp_of_event, born, &origin);
    std::size_t li = 0, ri = 0;
    for (std::size_t j = 0; j < origin.size(); ++j) {
      if (origin[j] == i) li = j;
      else if (comp_of_event[origin[j]] == c) ri = j;
    }
    Birth b{target.front.events[li].level, li, base.upper_rightward[i]};
    script.push_back(b);
    built = apply_move(built, b);
    for (std::size_t m = li + 1; m < ri; ++m) {
      Exchange x{m, target.front.events[m].level};
      script.push_back(x);
      built = apply_move(built, x);
    }
    if (!(built == target)) throw Error(ErrorCode::Internal, "births did not reproduce the resolved front");
  }

  // Upward: undo the pinches in reverse.
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) script.push_back(Pinch{it->first, it->second});

  FillingTrace trace = replay_script(script);
  if (!(trace.end() == front)) throw Error(ErrorCode::Internal, "constructed trace does not end at the input front");
  return trace;
}

bool TraceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TraceCheck& c) { return c.passed; });
}

TraceReport verify_trace(const FillingTrace& trace, const BandPresentation* bands) {
  TraceReport rep;
  rep.euler = trace.euler;
  rep.genus = trace.genus;

  {
    TraceCheck c{"replay", true, ""};
    try {
      FillingTrace again = replay_script(trace.moves(), trace.start);
      for (std::size_t i = 0; i < trace.steps.size() && c.passed; ++i) {
        if (!(again.steps[i].after == trace.steps[i].after) ||
            again.steps[i].euler_after != trace.steps[i].euler_after) {
          c.passed = false;
          c.detail = "step " + std::to_string(i) + " differs from its replay";
        }
      }
    } catch (const Error& e) {
      c.passed = false;
      c.detail = e.what();
    }
    rep.checks.push_back(c);
  }

  {
    int births = 0, handles = 0;
    for (const auto& s : trace.steps) {
      if (std::holds_alternative<Birth>(s.move)) ++births;
      if (std::holds_alternative<Pinch>(s.move) || std::holds_alternative<Saddle>(s.move)) ++handles;
    }
    bool ok = trace.euler == births - handles;
    rep.checks.push_back({"euler", ok,
                          "births=" + std::to_string(births) + " handles=" + std::to_string(handles) +
                              " chi=" + std::to_string(trace.euler)});
  }

  const OrientedFront& end = trace.end();
  bool knot = false;
  {
    TraceCheck c{"end-front", true, ""};
    try {
      end.front.validate();
      knot = !end.front.events.empty() && FrontTopology(end.front).component_count() == 1;
    } catch (const Error& e) {
      c.passed = false;
      c.detail = e.what();
    }
    rep.checks.push_back(c);
  }

  rep.tb = end.front.events.empty() ? 0 : classical_invariants(end).tb;
  if (knot && trace.start.front.events.empty()) {
    rep.checks.push_back({"tb=-chi", rep.tb == -trace.euler,
                          "tb=" + std::to_string(rep.tb) + " chi=" + std::to_string(trace.euler)});
    bool g = trace.genus && 1 - 2 * *trace.genus == trace.euler;
    rep.checks.push_back({"genus", g, trace.genus ? "g=" + std::to_string(*trace.genus) : "missing"});
  }
  if (bands) {
    int chi4 = chi4_quasipositive(*bands);
    rep.checks.push_back({"chi=chi4", chi4 == trace.euler,
                          "chi4=" + std::to_string(chi4) + " chi=" + std::to_string(trace.euler)});
  }
  return rep;
}

std::string format_trace(const FillingTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    out << "step=" << i << " move=" << format_move(trace.steps[i].move) << " chi=" << trace.steps[i].euler_after
        << "\n";
  out << format_front(trace.end().front);
  return out.str();
}

}  // namespace legfill
