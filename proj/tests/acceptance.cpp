// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "legfill/audit.hpp"
#include "legfill/braid.hpp"
#include "legfill/cobordism.hpp"
#include "legfill/corpus.hpp"
#include "legfill/error.hpp"
#include "legfill/front.hpp"
#include "legfill/homfly.hpp"
#include "legfill/planar_diagram.hpp"
#include "legfill/ruling.hpp"
#include "oracles/known_homfly.hpp"
#include "oracles/tangle_pd.hpp"
#include "support/properties.hpp"

using namespace legfill;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed expectations for one criterion.
struct Checker {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Checker&)>& body) {
  Checker c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  std::printf("criterion %d %s: %s (%.2fs)%s\n", n, c.ok ? "PASS" : "FAIL", title, seconds_since(t0),
              c.notes.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

void trefoil_rulings(Checker& c) {
  auto t0 = Clock::now();
  auto f = corpus_get("trefoil").front;
  auto all = enumerate_rulings(f.front);
  auto oriented = enumerate_rulings(f, true);
  double dt = seconds_since(t0);
  c.expect(all.size() == 3, "count " + std::to_string(all.size()));
  c.expect(oriented.size() == all.size(), "oriented " + std::to_string(oriented.size()));
  c.expect(dt < 1.0, "took " + std::to_string(dt) + "s");
}

void stoimenow(Checker& c) {
  auto t0 = Clock::now();
  auto fx = corpus_get("stoimenow");
  c.expect(fx.bands.band_count() == 11, "band count");
  BraidWord word = expand_bands(fx.bands);
  c.expect(word.strand_count == 4, "strands " + std::to_string(word.strand_count));
  c.expect(word.letters.size() == 21, "letters " + std::to_string(word.letters.size()));
  c.expect(closure_components(word).component_count == 1, "closure is not a knot");
  c.expect(chi4_quasipositive(fx.bands) == -7, "chi4");
  HomflyPoly p = homfly(closure_diagram(word));
  c.expect(max_framing_degree(p) == -10, "max framing degree " + std::to_string(max_framing_degree(p)));
  c.expect(homfly_tb_bound(p) == 9, "bound " + std::to_string(homfly_tb_bound(p)));
  AuditOptions opt;
  opt.label = "stoimenow";
  auto r = audit(fx.bands, fx.front, opt);
  c.expect(r.filling == FillingStatus::RuledOut, std::string("status ") + to_string(r.filling));
  c.expect(!r.bound_sharp, "front reported sharp");
  c.expect(r.chi4 == -7 && r.homfly_bound == 9, "report fields");
  double dt = seconds_since(t0);
  c.expect(dt <= 60.0, "took " + std::to_string(dt) + "s");
}

void positive_fillings(Checker& c) {
  for (auto [label, k] : {std::pair{"trefoil", 1}, {"torus-2-5", 2}, {"torus-2-7", 3}}) {
    auto t0 = Clock::now();
    auto f = corpus_get(label).front;
    auto trace = construct_filling(f);
    double dt = seconds_since(t0);
    std::string l = label;
    int pairs = static_cast<int>(f.front.left_cusp_count()), crossings = static_cast<int>(f.front.crossing_count());
    int tb = classical_invariants(f).tb;
    c.expect(trace.end() == f, l + ": wrong end front");
    c.expect(trace.euler == pairs - crossings, l + ": chi != cusp pairs - crossings");
    c.expect(trace.euler == 2 - (2 * k + 1), l + ": chi " + std::to_string(trace.euler));
    c.expect(tb == -trace.euler, l + ": tb != -chi");
    c.expect(verify_trace(trace).passed(), l + ": verification");
    c.expect(dt < 5.0, l + ": took " + std::to_string(dt) + "s");
  }
}

void m946(Checker& c) {
  auto fx = corpus_get("m946");
  c.expect(fx.script.has_value(), "no script");
  if (!fx.script) return;
  auto trace = replay_script(*fx.script);
  const auto& end = trace.end();
  c.expect(classical_invariants(end).tb == -1, "tb");
  c.expect(trace.euler == 1, "chi " + std::to_string(trace.euler));
  c.expect(trace.genus == 0, "genus");
  c.expect(verify_trace(trace, &fx.bands).passed(), "verification");
  HomflyPoly p = homfly(front_to_pd(end));
  c.expect(p == homfly(closure_diagram(fx.braid)), "differs from braid closure");
  c.expect(p == homfly(oracle::tangle_pd(oracle::pretzel(-3, -3, 3))), "differs from pretzel diagram");
}

void properties(Checker& c) {
  auto report = [&](const char* name, const prop::Outcome& o) {
    c.expect(o.ok(), std::string(name) + ": " + o.failure.value_or(""));
  };
  report("markov", prop::markov_invariance(20260101, 200));
  report("rulings", prop::rulings_match_oracle(7, 50));
  report("skein", prop::skein_identity(99, 50));
  report("tb-bound", prop::tb_below_bound(4242, 0));
  report("trefoil", prop::trefoil_bound());
}

void tanaka_chain(Checker& c) {
  int seen = 0;
  for (const auto& label : corpus_list()) {
    auto f = corpus_get(label).front;
    if (!check_tanaka_form(f)) continue;
    ++seen;
    auto r = find_all_switched_oriented(f);
    c.expect(r.has_value(), label + ": no all-switched oriented ruling");
    if (r) c.expect(unlinked_resolution(f.front, *r), label + ": resolution not unlinked");
  }
  c.expect(seen > 0, "no corpus front in Tanaka form");
}

}  // namespace

int main() {
  criterion(1, "trefoil has 3 normal rulings, all oriented", trefoil_rulings);
  criterion(2, "Stoimenow knot: chi4 -7, bound 9, filling ruled out", stoimenow);
  criterion(3, "positive torus knots are filled with tb = -chi", positive_fillings);
  criterion(4, "m(9_46) script ends at tb -1 with chi 1", m946);
  criterion(5, "property suites", properties);
  criterion(6, "Tanaka-form fronts have unlinked all-switched rulings", tanaka_chain);
  std::printf("%d of 6 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
