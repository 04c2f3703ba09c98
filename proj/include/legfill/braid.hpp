#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace legfill {

// A word in the standard generators of the braid group on `strand_count`
// strands; letter +i is sigma_i and -i is its inverse.
struct BraidWord {
  int strand_count = 1;
  std::vector<int> letters;

  // Throws GeneratorOutOfRange if a letter is zero or |letter| >= strand_count.
  void validate() const;

  BraidWord inverse() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs);

// sigma_{i,j} = (sigma_i ... sigma_{j-2}) sigma_{j-1} (sigma_i ... sigma_{j-2})^-1.
struct EmbeddedBand {
  int i = 1;
  int j = 2;
  friend bool operator==(const EmbeddedBand&, const EmbeddedBand&) = default;
};

// conjugator * sigma_generator * conjugator^-1.
struct ConjugatedBand {
  std::vector<int> conjugator;
  int generator = 1;
  friend bool operator==(const ConjugatedBand&, const ConjugatedBand&) = default;
};

using Band = std::variant<EmbeddedBand, ConjugatedBand>;

std::vector<int> expand_band(const Band& band);

struct BandPresentation {
  int strand_count = 1;
  std::vector<Band> bands;

  void validate() const;
  std::size_t band_count() const noexcept { return bands.size(); }
};

enum class HierarchyLevel {
  BraidPositive,
  Positive,
  StronglyQuasiPositive,
  QuasiPositive,
  NoCertificate,
};

const char* to_string(HierarchyLevel level) noexcept;

// True when a certificate at `certified` also certifies membership at
// `level`: BP ⊂ P ⊂ SQP ⊂ QP.
bool implies(HierarchyLevel certified, HierarchyLevel level) noexcept;

struct ClosurePermutation {
  // image[s] is the final position of the strand that starts at position s
  // (0-based).
  std::vector<int> image;
  int component_count = 0;
};

BraidWord parse_braid(const std::string& text);
BandPresentation parse_bands(const std::string& text);
std::string format_braid(const BraidWord& word);
std::string format_bands(const BandPresentation& presentation);

BraidWord expand_bands(const BandPresentation& presentation);
ClosurePermutation closure_components(const BraidWord& word);
int exponent_sum(const BraidWord& word);

// Rudolph's count for a quasipositive band presentation: strands minus bands.
int chi4_quasipositive(const BandPresentation& presentation);

// Classifies the certificate itself, never the underlying knot type.
HierarchyLevel classify_certificate(const BraidWord& word);
HierarchyLevel classify_certificate(const BandPresentation& presentation);

// If `band` expands letter-for-letter to some sigma_{i,j}, returns it.
std::optional<EmbeddedBand> as_embedded(const Band& band);

}  // namespace legfill
