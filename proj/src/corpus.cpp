#include "legfill/corpus.hpp"

#include <array>

#include "legfill/error.hpp"

namespace legfill {
namespace {

struct Entry {
  const char* label;
  const char* description;
  const char* braid;
  const char* bands;
  const char* front;  // empty: Legendrian closure of the expanded bands
  const char* script;  // nullptr: none
};

// m(9_46): the front is a plat with three cusp pairs; the script joins two
// max-tb unknots by one saddle after isotoping them into a clasp.
constexpr const char* kM946Script = R"(birth 1 0 +
birth 3 1 -
r1 2 3 b
r2 2 2 a
xchg 4 4
r2 2 2 b
xchg 1 3
xchg 0 1
r2 1 1 b
r1 3 3 a
xchg 5 2
r2 3 4 b
xchg 5 3
xchg 16 1
xchg 2 5
xchg 1 3
xchg 16 3
xchg 7 4
xchg 0 1
r2 9 4 a
xchg 8 4
xchg 18 1
xchg 17 1
xchg 0 1
r2 2 1 a
xchg 1 1
xchg 13 2
xchg 7 5
xchg 0 1
saddle 9 4
)";

constexpr std::array<Entry, 8> kEntries{{
    {"unknot", "max-tb unknot", "n=1", "n=1", "L 1 / R 1", ""},
    {"trefoil", "right-handed trefoil, closure of s1^3", "n=2 / 1 1 1", "n=2 / emb 1 2 / emb 1 2 / emb 1 2",
     "L 1 / L 3 / X 2 / X 2 / X 2 / R 1 / R 1", nullptr},
    {"fish", "unknot with a kink, tb -2", "n=1", "n=1", "L 1 / X 1 / R 1", nullptr},
    {"stab-unknot", "stabilized unknot, tb -2", "n=1", "n=1", "L 1 / L 2 / R 1 / R 1", nullptr},
    {"m946", "mirror of 9_46, slice, filled by two births and a saddle", "n=4 / 1 3 2 -1 2 3 -2 1 -2",
     "n=4 / band g=1 w= / band g=3 w= / band g=3 w=2 -1 2",
     "L 1 / L 3 / L 5 / X 2 / X 1 / X 1 / X 4 / X 5 / X 3 / X 2 / X 5 / X 2 / X 4 / X 3 / X 3 / X 4 / X 2 / "
     "R 1 / R 1 / R 1",
     kM946Script},
    {"stoimenow", "strongly quasipositive 4-braid with 11 bands", "",
     "n=4 / emb 1 2 / emb 1 2 / emb 1 3 / emb 2 3 / emb 1 2 / emb 3 4 / emb 1 3 / emb 2 3 / emb 2 4 / emb 1 3 / "
     "emb 2 4",
     "", nullptr},
    {"torus-2-5", "T(2,5), closure of s1^5", "n=2 / 1 1 1 1 1",
     "n=2 / emb 1 2 / emb 1 2 / emb 1 2 / emb 1 2 / emb 1 2", "L 1 / L 3 / X 2 / X 2 / X 2 / X 2 / X 2 / R 1 / R 1",
     nullptr},
    {"torus-2-7", "T(2,7), closure of s1^7", "n=2 / 1 1 1 1 1 1 1",
     "n=2 / emb 1 2 / emb 1 2 / emb 1 2 / emb 1 2 / emb 1 2 / emb 1 2 / emb 1 2",
     "L 1 / L 3 / X 2 / X 2 / X 2 / X 2 / X 2 / X 2 / X 2 / R 1 / R 1", nullptr},
}};

}  // namespace

std::vector<std::string> corpus_list() {
  std::vector<std::string> out;
  for (const auto& e : kEntries) out.emplace_back(e.label);
  return out;
}

Fixture corpus_get(const std::string& label) {
  for (const auto& e : kEntries) {
    if (label != e.label) continue;
    Fixture f;
    f.label = e.label;
    f.description = e.description;
    f.bands = parse_bands(e.bands);
    f.braid = *e.braid ? parse_braid(e.braid) : expand_bands(f.bands);
    f.front = *e.front ? orient(parse_front(e.front)) : legendrian_closure(f.braid);
    if (e.script) f.script = parse_moves(e.script);
    return f;
  }
  throw Error(ErrorCode::UnknownLabel, "unknown corpus label '" + label + "'");
}

}  // namespace legfill
