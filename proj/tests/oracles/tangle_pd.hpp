#pragma once

// Test oracle: planar diagram of a horizontal tangle word with explicit
// crossing handedness, built from plane geometry alone (no front code).
// Events: {'L', k}, {'R', k}, {'X', k, over} where over = +1 puts the strand
// descending left to right on top, -1 the ascending one.

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "legfill/planar_diagram.hpp"

namespace oracle {

struct TangleEvent {
  char kind;
  int level;
  int over = 1;
};

inline legfill::PlanarDiagram tangle_pd(const std::vector<TangleEvent>& word) {
  // segments: (column, position); column j = after j events
  std::vector<std::vector<int>> seg_id;
  int nseg = 0;
  std::vector<int> count{0};
  for (const auto& e : word) {
    int c = count.back();
    if (e.kind == 'L') c += 2;
    if (e.kind == 'R') c -= 2;
    if (c < 0) throw std::logic_error("bad tangle");
    count.push_back(c);
  }
  for (int c : count) {
    std::vector<int> ids(c);
    for (int& x : ids) x = nseg++;
    seg_id.push_back(ids);
  }
  // neighbours: for each segment its left end and right end partner (segment, end)
  // end 0 = left end, 1 = right end
  std::vector<std::array<std::pair<int, int>, 2>> nb(nseg, {std::pair{-1, -1}, std::pair{-1, -1}});
  struct Cross {
    int ul, ll, ur, lr;  // upper-left, lower-left, upper-right, lower-right segments
    int over;
  };
  std::vector<Cross> crosses;
  auto join = [&](int a, int ea, int b, int eb) {
    nb[a][ea] = {b, eb};
    nb[b][eb] = {a, ea};
  };
  for (std::size_t j = 0; j < word.size(); ++j) {
    const auto& e = word[j];
    const auto& lft = seg_id[j];
    const auto& rgt = seg_id[j + 1];
    int k = e.level - 1;
    if (e.kind == 'L') {
      for (int p = 0; p < static_cast<int>(lft.size()); ++p) join(lft[p], 1, rgt[p < k ? p : p + 2], 0);
      join(rgt[k], 0, rgt[k + 1], 0);
    } else if (e.kind == 'R') {
      for (int p = 0; p < static_cast<int>(rgt.size()); ++p) join(lft[p < k ? p : p + 2], 1, rgt[p], 0);
      join(lft[k], 1, lft[k + 1], 1);
    } else {
      for (int p = 0; p < static_cast<int>(lft.size()); ++p)
        if (p != k && p != k + 1) join(lft[p], 1, rgt[p], 0);
      crosses.push_back({lft[k], lft[k + 1], rgt[k], rgt[k + 1], e.over});
    }
  }
  // crossing passes: descending strand ul -> lr, ascending ll -> ur
  std::map<std::pair<int, int>, std::pair<int, int>> through;  // (seg,end) -> (seg,end) across a crossing
  for (const auto& c : crosses) {
    through[{c.ul, 1}] = {c.lr, 0};
    through[{c.lr, 0}] = {c.ul, 1};
    through[{c.ll, 1}] = {c.ur, 0};
    through[{c.ur, 0}] = {c.ll, 1};
  }
  // orient: dir[s] = +1 rightward, -1 leftward
  std::vector<int> dir(nseg, 0);
  for (int s0 = 0; s0 < nseg; ++s0) {
    if (dir[s0]) continue;
    int s = s0, d = 1;
    while (!dir[s]) {
      dir[s] = d;
      int end = d > 0 ? 1 : 0;
      std::pair<int, int> nxt;
      auto it = through.find({s, end});
      if (it != through.end()) nxt = it->second;
      else nxt = nb[s][end];
      s = nxt.first;
      d = nxt.second == 0 ? 1 : -1;  // entering at the left end means moving right
    }
  }
  // edges: segments glued through cusps or plain continuation; cut at crossings
  std::vector<int> parent(nseg);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < nseg; ++s)
    for (int end = 0; end < 2; ++end)
      if (nb[s][end].first >= 0) parent[find(s)] = find(nb[s][end].first);
  std::map<int, int> edge_of_root;
  auto edge = [&](int s) {
    int r = find(s);
    auto it = edge_of_root.find(r);
    if (it != edge_of_root.end()) return it->second;
    int id = static_cast<int>(edge_of_root.size()) + 1;
    edge_of_root[r] = id;
    return id;
  };
  legfill::PlanarDiagram pd;
  for (const auto& c : crosses) {
    // ends in ccw order by angle: ur (45), ul (135), ll (225), lr (315)
    std::array<int, 4> ends{c.ur, c.ul, c.ll, c.lr};
    // direction vectors of the two strands (x right, y up)
    int ddesc = dir[c.ul];  // same strand as lr
    int dasc = dir[c.ll];
    std::array<int, 2> vdesc{ddesc, -ddesc}, vasc{dasc, dasc};
    auto over_v = c.over > 0 ? vdesc : vasc;
    auto under_v = c.over > 0 ? vasc : vdesc;
    int cross = over_v[0] * under_v[1] - over_v[1] * under_v[0];
    int sign = cross > 0 ? 1 : -1;
    // incoming end of the under strand
    int under_in;
    if (c.over > 0) under_in = dasc > 0 ? 2 : 0;   // ascending: ll in if rightward else ur
    else under_in = ddesc > 0 ? 1 : 3;             // descending: ul in if rightward else lr
    legfill::PdCrossing x;
    for (int i = 0; i < 4; ++i) x.edges[i] = edge(ends[(under_in + i) % 4]);
    x.sign = sign;
    pd.crossings.push_back(x);
  }
  // loops without crossings
  std::map<int, bool> touched;
  for (const auto& c : crosses)
    for (int s : {c.ul, c.ll, c.ur, c.lr}) touched[find(s)] = true;
  std::map<int, bool> seen;
  for (int s = 0; s < nseg; ++s) {
    int r = find(s);
    if (!touched.count(r) && !seen[r]) {
      seen[r] = true;
      ++pd.free_loops;
    }
  }
  return pd;
}

// Pretzel (p, q, r): three vertical twist regions between nested caps.
inline std::vector<TangleEvent> pretzel(int p, int q, int r) {
  std::vector<TangleEvent> w{{'L', 1}, {'L', 2}, {'L', 4}};
  for (auto [level, n] : {std::pair{1, p}, {3, q}, {5, r}})
    for (int i = 0; i < (n < 0 ? -n : n); ++i) w.push_back({'X', level, n > 0 ? 1 : -1});
  w.push_back({'R', 4});
  w.push_back({'R', 2});
  w.push_back({'R', 1});
  return w;
}

}  // namespace oracle
