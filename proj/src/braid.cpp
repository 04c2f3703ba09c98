#include "legfill/braid.hpp"

#include <algorithm>
#include <sstream>

#include "legfill/error.hpp"
#include "text_util.hpp"

namespace legfill {

void BraidWord::validate() const {
  if (strand_count < 1) throw Error(ErrorCode::Parse, "strand count must be positive");
  for (std::size_t k = 0; k < letters.size(); ++k) {
    int g = letters[k] < 0 ? -letters[k] : letters[k];
    if (g < 1 || g >= strand_count)
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "letter " + std::to_string(letters[k]) + " outside 1.." +
                      std::to_string(strand_count - 1),
                  k);
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord out{strand_count, {}};
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
  BraidWord out{std::max(lhs.strand_count, rhs.strand_count), lhs.letters};
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

std::vector<int> expand_band(const Band& band) {
  std::vector<int> out;
  if (const auto* e = std::get_if<EmbeddedBand>(&band)) {
    for (int g = e->i; g <= e->j - 2; ++g) out.push_back(g);
    out.push_back(e->j - 1);
    for (int g = e->j - 2; g >= e->i; --g) out.push_back(-g);
  } else {
    const auto& c = std::get<ConjugatedBand>(band);
    out = c.conjugator;
    out.push_back(c.generator);
    for (auto it = c.conjugator.rbegin(); it != c.conjugator.rend(); ++it) out.push_back(-*it);
  }
  return out;
}

void BandPresentation::validate() const {
  if (strand_count < 1) throw Error(ErrorCode::Parse, "strand count must be positive");
  for (std::size_t k = 0; k < bands.size(); ++k) {
    if (const auto* e = std::get_if<EmbeddedBand>(&bands[k])) {
      if (!(1 <= e->i && e->i < e->j && e->j <= strand_count))
        throw Error(ErrorCode::GeneratorOutOfRange, "embedded band indices out of range", k);
    } else {
      const auto& c = std::get<ConjugatedBand>(bands[k]);
      if (c.generator < 1 || c.generator >= strand_count)
        throw Error(ErrorCode::GeneratorOutOfRange, "band generator out of range", k);
      for (int g : c.conjugator)
        if (g == 0 || std::abs(g) >= strand_count)
          throw Error(ErrorCode::GeneratorOutOfRange, "conjugator letter out of range", k);
    }
  }
}

const char* to_string(HierarchyLevel level) noexcept {
  switch (level) {
    case HierarchyLevel::BraidPositive: return "BraidPositive";
    case HierarchyLevel::Positive: return "Positive";
    case HierarchyLevel::StronglyQuasiPositive: return "StronglyQuasiPositive";
    case HierarchyLevel::QuasiPositive: return "QuasiPositive";
    case HierarchyLevel::NoCertificate: return "NoCertificate";
  }
  return "?";
}

bool implies(HierarchyLevel certified, HierarchyLevel level) noexcept {
  if (certified == HierarchyLevel::NoCertificate) return level == HierarchyLevel::NoCertificate;
  if (level == HierarchyLevel::NoCertificate) return false;
  return static_cast<int>(certified) <= static_cast<int>(level);
}

BraidWord parse_braid(const std::string& text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty braid file");
  if (lines[0].tokens.size() != 1) throw Error(ErrorCode::Parse, "first line must be n=<int>", 1);
  BraidWord word;
  word.strand_count = detail::parse_keyed_int(lines[0].tokens[0], "n", lines[0].number);
  if (lines.size() > 2) throw Error(ErrorCode::Parse, "braid letters must be on one line", lines[2].number);
  if (lines.size() == 2)
    for (const auto& tok : lines[1].tokens) word.letters.push_back(detail::parse_int(tok, lines[1].number));
  word.validate();
  return word;
}

BandPresentation parse_bands(const std::string& text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty bands file");
  if (lines[0].tokens.size() != 1) throw Error(ErrorCode::Parse, "first line must be n=<int>", 1);
  BandPresentation p;
  p.strand_count = detail::parse_keyed_int(lines[0].tokens[0], "n", lines[0].number);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto& t = line.tokens;
    if (t[0] == "emb") {
      if (t.size() != 3) throw Error(ErrorCode::Parse, "expected 'emb <i> <j>'", line.number);
      p.bands.emplace_back(EmbeddedBand{detail::parse_int(t[1], line.number), detail::parse_int(t[2], line.number)});
    } else if (t[0] == "band") {
      if (t.size() < 3) throw Error(ErrorCode::Parse, "expected 'band g=<i> w=<ints>'", line.number);
      ConjugatedBand band;
      band.generator = detail::parse_keyed_int(t[1], "g", line.number);
      if (t[2].rfind("w=", 0) != 0) throw Error(ErrorCode::Parse, "expected 'w='", line.number);
      std::string first = t[2].substr(2);
      if (!first.empty()) band.conjugator.push_back(detail::parse_int(first, line.number));
      for (std::size_t m = 3; m < t.size(); ++m) band.conjugator.push_back(detail::parse_int(t[m], line.number));
      p.bands.emplace_back(std::move(band));
    } else {
      throw Error(ErrorCode::Parse, "unknown band kind '" + t[0] + "'", line.number);
    }
  }
  p.validate();
  return p;
}

std::string format_braid(const BraidWord& word) {
  std::ostringstream out;
  out << "n=" << word.strand_count << "\n";
  for (std::size_t k = 0; k < word.letters.size(); ++k) out << (k ? " " : "") << word.letters[k];
  if (!word.letters.empty()) out << "\n";
  return out.str();
}

std::string format_bands(const BandPresentation& p) {
  std::ostringstream out;
  out << "n=" << p.strand_count << "\n";
  for (const auto& band : p.bands) {
    if (const auto* e = std::get_if<EmbeddedBand>(&band)) {
      out << "emb " << e->i << " " << e->j << "\n";
    } else {
      const auto& c = std::get<ConjugatedBand>(band);
      out << "band g=" << c.generator << " w=";
      for (std::size_t k = 0; k < c.conjugator.size(); ++k) out << (k ? " " : "") << c.conjugator[k];
      out << "\n";
    }
  }
  return out.str();
}

BraidWord expand_bands(const BandPresentation& p) {
  BraidWord out{p.strand_count, {}};
  for (const auto& band : p.bands) {
    auto letters = expand_band(band);
    out.letters.insert(out.letters.end(), letters.begin(), letters.end());
  }
  return out;
}

ClosurePermutation closure_components(const BraidWord& word) {
  const int n = word.strand_count;
  // occupant[pos] = starting position of the strand now at pos.
  std::vector<int> occupant(n);
  for (int s = 0; s < n; ++s) occupant[s] = s;
  for (int letter : word.letters) {
    int g = std::abs(letter);
    std::swap(occupant[g - 1], occupant[g]);
  }
  ClosurePermutation out;
  out.image.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) out.image[occupant[pos]] = pos;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++out.component_count;
    for (int t = s; !seen[t]; t = out.image[t]) seen[t] = true;
  }
  return out;
}

int exponent_sum(const BraidWord& word) {
  int sum = 0;
  for (int letter : word.letters) sum += letter > 0 ? 1 : -1;
  return sum;
}

int chi4_quasipositive(const BandPresentation& p) {
  return p.strand_count - static_cast<int>(p.bands.size());
}

std::optional<EmbeddedBand> as_embedded(const Band& band) {
  if (const auto* e = std::get_if<EmbeddedBand>(&band)) return *e;
  const auto& c = std::get<ConjugatedBand>(band);
  // sigma_{i,j} has conjugator i, i+1, ..., j-2 and generator j-1.
  const auto& w = c.conjugator;
  int i = w.empty() ? c.generator : w.front();
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != i + static_cast<int>(k)) return std::nullopt;
  if (c.generator != i + static_cast<int>(w.size())) return std::nullopt;
  return EmbeddedBand{i, c.generator + 1};
}

HierarchyLevel classify_certificate(const BraidWord& word) {
  bool positive = std::all_of(word.letters.begin(), word.letters.end(), [](int g) { return g > 0; });
  return positive ? HierarchyLevel::BraidPositive : HierarchyLevel::NoCertificate;
}

HierarchyLevel classify_certificate(const BandPresentation& p) {
  if (classify_certificate(expand_bands(p)) == HierarchyLevel::BraidPositive)
    return HierarchyLevel::BraidPositive;
  bool embedded = std::all_of(p.bands.begin(), p.bands.end(),
                              [](const Band& b) { return as_embedded(b).has_value(); });
  if (embedded) return HierarchyLevel::StronglyQuasiPositive;
  // Every Band is w sigma_i w^-1 with positive sigma_i by construction.
  return HierarchyLevel::QuasiPositive;
}

}  // namespace legfill
