#include "legfill/planar_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "legfill/error.hpp"

namespace legfill {

PdCrossing PdCrossing::from_strands(int under_in, int under_out, int over_in, int over_out, int sign) {
  PdCrossing c;
  c.sign = sign;
  c.edges = sign > 0 ? std::array<int, 4>{under_in, over_out, under_out, over_in}
                     : std::array<int, 4>{under_in, over_in, under_out, over_out};
  return c;
}

void PlanarDiagram::validate() const {
  if (free_loops < 0) throw Error(ErrorCode::MalformedDiagram, "negative loop count");
  std::map<int, int> in_count, out_count;
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const auto& c = crossings[k];
    if (c.sign != 1 && c.sign != -1) throw Error(ErrorCode::MalformedDiagram, "crossing sign must be +-1", k);
    ++in_count[c.under_in()];
    ++in_count[c.over_in()];
    ++out_count[c.under_out()];
    ++out_count[c.over_out()];
  }
  for (const auto& [edge, n] : in_count)
    if (n != 1 || out_count[edge] != 1)
      throw Error(ErrorCode::MalformedDiagram, "edge " + std::to_string(edge) + " is not used exactly twice");
  for (const auto& [edge, n] : out_count)
    if (n != 1 || in_count[edge] != 1)
      throw Error(ErrorCode::MalformedDiagram, "edge " + std::to_string(edge) + " is not used exactly twice");
}

int PlanarDiagram::component_count() const {
  // Union edges along strands through crossings.
  std::map<int, int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (const auto& c : crossings)
    for (int e : c.edges) parent.try_emplace(e, e);
  for (const auto& c : crossings) {
    unite(c.under_in(), c.under_out());
    unite(c.over_in(), c.over_out());
  }
  int roots = 0;
  for (const auto& [e, p] : parent)
    if (find(e) == e) ++roots;
  return roots + free_loops;
}

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

PlanarDiagram PlanarDiagram::switched(std::size_t index) const {
  if (index >= crossings.size()) throw Error(ErrorCode::IndexOutOfRange, "no such crossing", index);
  PlanarDiagram out = *this;
  const auto& c = crossings[index];
  out.crossings[index] = PdCrossing::from_strands(c.over_in(), c.over_out(), c.under_in(), c.under_out(), -c.sign);
  return out;
}

PlanarDiagram PlanarDiagram::with_sign(std::size_t index, int sign) const {
  if (index >= crossings.size()) throw Error(ErrorCode::IndexOutOfRange, "no such crossing", index);
  return crossings[index].sign == sign ? *this : switched(index);
}

PlanarDiagram PlanarDiagram::smoothed(std::size_t index) const {
  if (index >= crossings.size()) throw Error(ErrorCode::IndexOutOfRange, "no such crossing", index);
  const PdCrossing c = crossings[index];
  PlanarDiagram out;
  out.free_loops = free_loops;
  out.crossings = crossings;
  out.crossings.erase(out.crossings.begin() + static_cast<std::ptrdiff_t>(index));
  // The strand entering on under_in now leaves on over_out, and over_in
  // continues into under_out.
  auto splice = [&](int in_edge, int out_edge) {
    if (in_edge == out_edge) {
      ++out.free_loops;
      return;
    }
    for (auto& x : out.crossings)
      for (auto& e : x.edges)
        if (e == out_edge) e = in_edge;
  };
  int ui = c.under_in(), oo = c.over_out(), oi = c.over_in(), uo = c.under_out();
  splice(ui, oo);
  // The first splice may have renamed one of the second pair.
  if (oi == oo) oi = ui;
  if (uo == oo) uo = ui;
  splice(oi, uo);
  return out;
}

std::string PlanarDiagram::to_string() const {
  std::ostringstream out;
  for (const auto& c : crossings)
    out << "X " << c.edges[0] << " " << c.edges[1] << " " << c.edges[2] << " " << c.edges[3] << " "
        << (c.sign > 0 ? '+' : '-') << "\n";
  out << "loops=" << free_loops << "\n";
  return out.str();
}

PlanarDiagram closure_diagram(const BraidWord& word) {
  word.validate();
  const int n = word.strand_count;
  PlanarDiagram pd;
  // Edge entering column k at position p is labelled k * n + p; the closure
  // identifies the last column with the first.
  const int columns = static_cast<int>(word.letters.size());
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);
  int next_label = n;
  std::vector<bool> touched(n, false);
  for (int k = 0; k < columns; ++k) {
    int g = std::abs(word.letters[k]);
    int top = g - 1, bottom = g;
    int top_out = next_label++, bottom_out = next_label++;
    // The strand at `top` moves to `bottom` and vice versa.
    int down_in = current[top], up_in = current[bottom];
    if (word.letters[k] > 0)
      pd.crossings.push_back(PdCrossing::from_strands(up_in, top_out, down_in, bottom_out, 1));
    else
      pd.crossings.push_back(PdCrossing::from_strands(down_in, bottom_out, up_in, top_out, -1));
    current[top] = top_out;
    current[bottom] = bottom_out;
    touched[top] = touched[bottom] = true;
  }
  // Close up: the final edge at each position is the initial edge there.
  std::map<int, int> rename;
  for (int p = 0; p < n; ++p)
    if (touched[p]) rename[current[p]] = p;
  for (auto& c : pd.crossings)
    for (auto& e : c.edges)
      if (auto it = rename.find(e); it != rename.end()) e = it->second;
  for (int p = 0; p < n; ++p)
    if (!touched[p]) ++pd.free_loops;
  return pd;
}

}  // namespace legfill
