#include "legfill/homfly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "legfill/error.hpp"

namespace legfill {

namespace {

struct Xing {
  int ui, uo, oi, oo;
  int sign;
};

// Kink-free or not; labels are compacted to 0..2n-1 before canonicalization.
struct Diagram {
  std::vector<Xing> x;
  int loops = 0;
};

struct KeyHash {
  std::size_t operator()(const std::vector<int>& key) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : key) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

HomflyPoly power(const HomflyPoly& base, int exponent) {
  HomflyPoly out = HomflyPoly::one();
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

void compact_labels(Diagram& d) {
  std::map<int, int> rename;
  for (const auto& c : d.x)
    for (int e : {c.ui, c.uo, c.oi, c.oo}) rename.try_emplace(e, 0);
  int next = 0;
  for (auto& [e, v] : rename) v = next++;
  for (auto& c : d.x) {
    c.ui = rename[c.ui];
    c.uo = rename[c.uo];
    c.oi = rename[c.oi];
    c.oo = rename[c.oo];
  }
}

// After removing a crossing, the strand arriving on `in_edge` continues on
// `out_edge`.
void splice(Diagram& d, int in_edge, int out_edge) {
  if (in_edge == out_edge) {
    ++d.loops;
    return;
  }
  for (auto& c : d.x) {
    if (c.ui == out_edge) c.ui = in_edge;
    if (c.oi == out_edge) c.oi = in_edge;
  }
}

// Reidemeister I reductions; the HOMFLY polynomial is unchanged by them.
void remove_kinks(Diagram& d) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < d.x.size(); ++k) {
      Xing c = d.x[k];
      if (c.uo == c.oi || c.oo == c.ui) {
        d.x.erase(d.x.begin() + static_cast<std::ptrdiff_t>(k));
        if (c.uo == c.oi && c.oo == c.ui) {
          ++d.loops;
        } else if (c.uo == c.oi) {
          splice(d, c.ui, c.oo);
        } else {
          splice(d, c.oi, c.uo);
        }
        changed = true;
        break;
      }
    }
  }
}

std::vector<Diagram> split_pieces(const Diagram& d) {
  const int n = static_cast<int>(d.x.size());
  std::unordered_map<int, int> tail, head;
  for (int k = 0; k < n; ++k) {
    tail[d.x[k].uo] = k;
    tail[d.x[k].oo] = k;
    head[d.x[k].ui] = k;
    head[d.x[k].oi] = k;
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [e, t] : tail) parent[find(t)] = find(head.at(e));
  std::map<int, Diagram> groups;
  for (int k = 0; k < n; ++k) groups[find(k)].x.push_back(d.x[k]);
  std::vector<Diagram> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

struct Canonical {
  Diagram diagram;            // relabelled: crossings in first-visit order
  std::vector<int> key;
  int bad = -1;               // first crossing met first on its under strand
  int components = 0;
};

class Engine {
 public:
  explicit Engine(HomflyStats* stats) : stats_(stats) {}

  HomflyPoly evaluate(Diagram d) {
    remove_kinks(d);
    if (d.x.empty()) {
      if (d.loops == 0) throw Error(ErrorCode::MalformedDiagram, "diagram has no components");
      return power(delta_, d.loops - 1);
    }
    compact_labels(d);
    auto pieces = split_pieces(d);
    HomflyPoly out = power(delta_, static_cast<int>(pieces.size()) + d.loops - 1);
    for (auto& piece : pieces) {
      compact_labels(piece);
      out *= evaluate_connected(piece);
    }
    return out;
  }

 private:
  HomflyPoly evaluate_connected(const Diagram& d) {
    Canonical canon = canonicalize(d);
    if (auto it = memo_.find(canon.key); it != memo_.end()) {
      if (stats_) ++stats_->memo_hits;
      return it->second;
    }
    HomflyPoly result;
    if (canon.bad < 0) {
      // Descending diagram: an unlink.
      result = power(delta_, canon.components - 1);
    } else {
      if (stats_) ++stats_->skein_nodes;
      const Xing c = canon.diagram.x[canon.bad];
      Diagram switched = canon.diagram;
      switched.x[canon.bad] = Xing{c.oi, c.oo, c.ui, c.uo, -c.sign};
      Diagram smoothed = canon.diagram;
      smoothed.x.erase(smoothed.x.begin() + canon.bad);
      splice(smoothed, c.ui, c.oo);
      int oi = c.oi == c.oo ? c.ui : c.oi;
      int uo = c.uo == c.oo ? c.ui : c.uo;
      splice(smoothed, oi, uo);

      HomflyPoly p_switched = evaluate(std::move(switched));
      HomflyPoly p_smoothed = evaluate(std::move(smoothed));
      if (c.sign > 0) {
        // P+ = a^-2 P- + a^-1 z P0
        result = p_switched.shifted(-2, 0) + p_smoothed.shifted(-1, 1);
      } else {
        // P- = a^2 P+ - a z P0
        result = p_switched.shifted(2, 0) - p_smoothed.shifted(1, 1);
      }
    }
    memo_.emplace(std::move(canon.key), result);
    if (stats_) stats_->memo_entries = memo_.size();
    return result;
  }

  // Relabels along a traversal chosen to minimise the over/under-blind
  // encoding, so a crossing change never moves the base points.
  Canonical canonicalize(const Diagram& d) {
    const int n = static_cast<int>(d.x.size());
    const int edges = 2 * n;
    head_cross_.assign(edges, -1);
    head_over_.assign(edges, 0);
    for (int k = 0; k < n; ++k) {
      head_cross_[d.x[k].ui] = k;
      head_over_[d.x[k].ui] = 0;
      head_cross_[d.x[k].oi] = k;
      head_over_[d.x[k].oi] = 1;
    }
    std::vector<int> best;
    int best_start = -1;
    std::vector<int> shadow;
    for (int start = 0; start < edges; ++start) {
      walk(d, start, shadow, nullptr);
      if (best_start < 0 || shadow < best) {
        best.swap(shadow);
        best_start = start;
      }
    }
    Canonical out;
    Walk w;
    walk(d, best_start, shadow, &w);
    out.key = std::move(shadow);
    out.components = w.components;
    out.diagram.loops = 0;
    out.diagram.x.resize(n);
    for (int k = 0; k < n; ++k) {
      const Xing& c = d.x[k];
      out.diagram.x[w.cross_id[k]] = Xing{w.edge_id[c.ui], w.edge_id[c.uo], w.edge_id[c.oi], w.edge_id[c.oo], c.sign};
    }
    for (int id = 0; id < n; ++id) {
      out.key.push_back(w.first_over[id]);
      if (out.bad < 0 && !w.first_over[id]) out.bad = id;
    }
    return out;
  }

  struct Walk {
    std::vector<int> cross_id, edge_id, first_over;
    int components = 0;
  };

  void walk(const Diagram& d, int start, std::vector<int>& shadow, Walk* record) {
    const int n = static_cast<int>(d.x.size());
    cross_id_.assign(n, -1);
    edge_id_.assign(2 * n, -1);
    order_.clear();
    first_over_.assign(n, 0);
    shadow.clear();
    int next_edge = 0;
    int components = 0;
    int e = start;
    std::size_t scan = 0;
    while (true) {
      ++components;
      while (edge_id_[e] < 0) {
        edge_id_[e] = next_edge++;
        int k = head_cross_[e];
        bool over = head_over_[e];
        const Xing& c = d.x[k];
        if (cross_id_[k] < 0) {
          cross_id_[k] = static_cast<int>(order_.size());
          order_.push_back(k);
          first_over_[cross_id_[k]] = over;
        }
        shadow.push_back(cross_id_[k]);
        shadow.push_back(over ? c.sign : -c.sign);
        e = over ? c.oo : c.uo;
      }
      shadow.push_back(-2);
      int next = -1;
      for (; scan < order_.size() && next < 0; ++scan) {
        const Xing& c = d.x[order_[scan]];
        if (edge_id_[c.ui] < 0) next = c.ui;
        else if (edge_id_[c.oi] < 0) next = c.oi;
        if (next >= 0) break;
      }
      if (next < 0) break;
      e = next;
    }
    if (record) {
      record->cross_id = cross_id_;
      record->edge_id = edge_id_;
      record->first_over = first_over_;
      record->components = components;
    }
  }

  HomflyStats* stats_;
  HomflyPoly delta_ = HomflyPoly::unlink_factor();
  std::unordered_map<std::vector<int>, HomflyPoly, KeyHash> memo_;
  std::vector<int> head_cross_, head_over_, cross_id_, edge_id_, order_, first_over_;
};

}  // namespace

HomflyPoly homfly(const PlanarDiagram& diagram, HomflyStats* stats) {
  diagram.validate();
  if (diagram.component_count() == 0) throw Error(ErrorCode::MalformedDiagram, "diagram has no components");
  Diagram d;
  d.loops = diagram.free_loops;
  for (const auto& c : diagram.crossings)
    d.x.push_back(Xing{c.under_in(), c.under_out(), c.over_in(), c.over_out(), c.sign});
  Engine engine(stats);
  return engine.evaluate(std::move(d));
}

int max_framing_degree(const HomflyPoly& p) { return p.max_a_degree(); }

int homfly_tb_bound(const HomflyPoly& p) { return -max_framing_degree(p) - 1; }

}  // namespace legfill
