#include <gtest/gtest.h>

#include "legfill/braid.hpp"
#include "legfill/corpus.hpp"
#include "legfill/error.hpp"

#include "support/text.hpp"

using namespace legfill;

TEST(Braid, ParseAndFormat) {
  auto w = parse_braid(nl("n=3\n1 -2 1\n"));
  EXPECT_EQ(w.strand_count, 3);
  EXPECT_EQ(w.letters, (std::vector<int>{1, -2, 1}));
  EXPECT_EQ(format_braid(w), "n=3\n1 -2 1\n");
  EXPECT_EQ(parse_braid(format_braid(w)), w);
  EXPECT_EQ(parse_braid(nl("n=1")).letters.size(), 0u);
}

TEST(Braid, GeneratorOutOfRange) {
  try {
    parse_braid(nl("n=3 / 1 3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GeneratorOutOfRange);
    EXPECT_EQ(e.position(), 1u);
  }
  EXPECT_THROW(parse_braid(nl("n=2 / 0")), Error);
  EXPECT_THROW(parse_braid(nl("1 2")), Error);
}

TEST(Braid, InverseAndProduct) {
  BraidWord w{3, {1, -2, 2, 1}};
  EXPECT_EQ(w.inverse().letters, (std::vector<int>{-1, -2, 2, -1}));
  EXPECT_EQ((w * w.inverse()).letters.size(), 8u);
  EXPECT_EQ(exponent_sum(w), 2);
}

TEST(Braid, EmbeddedBandExpansion) {
  EXPECT_EQ(expand_band(EmbeddedBand{1, 2}), (std::vector<int>{1}));
  EXPECT_EQ(expand_band(EmbeddedBand{1, 3}), (std::vector<int>{1, 2, -1}));
  EXPECT_EQ(expand_band(EmbeddedBand{2, 4}), (std::vector<int>{2, 3, -2}));
  EXPECT_EQ(expand_band(EmbeddedBand{1, 4}), (std::vector<int>{1, 2, 3, -2, -1}));
  EXPECT_EQ(expand_band(ConjugatedBand{{2, -1}, 3}), (std::vector<int>{2, -1, 3, 1, -2}));
}

TEST(Braid, AsEmbeddedIsLetterExact) {
  EXPECT_EQ(as_embedded(ConjugatedBand{{1}, 2}), (EmbeddedBand{1, 3}));
  EXPECT_EQ(as_embedded(ConjugatedBand{{}, 2}), (EmbeddedBand{2, 3}));
  EXPECT_FALSE(as_embedded(ConjugatedBand{{-1}, 2}).has_value());
}

TEST(Braid, BandsParseFormat) {
  auto p = parse_bands(nl("n=4\nemb 1 3\nband g=2 w=1 -3\nband g=1 w=\n"));
  ASSERT_EQ(p.band_count(), 3u);
  EXPECT_EQ(parse_bands(format_bands(p)).bands, p.bands);
  EXPECT_THROW(parse_bands(nl("n=4 / emb 3 3")), Error);
  EXPECT_THROW(parse_bands(nl("n=4 / emb 1 5")), Error);
  EXPECT_THROW(parse_bands(nl("n=4 / hoop 1 2")), Error);
}

TEST(Braid, StoimenowExpansion) {
  auto bands = corpus_get("stoimenow").bands;
  EXPECT_EQ(bands.strand_count, 4);
  EXPECT_EQ(bands.band_count(), 11u);
  auto word = expand_bands(bands);
  // six one-letter bands and five three-letter ones
  EXPECT_EQ(word.letters.size(), 21u);
  EXPECT_EQ(exponent_sum(word), 11);
  EXPECT_EQ(closure_components(word).component_count, 1);
  EXPECT_EQ(chi4_quasipositive(bands), -7);
  EXPECT_EQ(classify_certificate(bands), HierarchyLevel::StronglyQuasiPositive);
}

TEST(Braid, ClosurePermutation) {
  EXPECT_EQ(closure_components(BraidWord{2, {1, 1}}).component_count, 2);
  EXPECT_EQ(closure_components(BraidWord{2, {1, 1, 1}}).component_count, 1);
  EXPECT_EQ(closure_components(BraidWord{4, {}}).component_count, 4);
  auto p = closure_components(BraidWord{3, {1, 2}});
  EXPECT_EQ(p.component_count, 1);
}

TEST(Braid, Classification) {
  EXPECT_EQ(classify_certificate(BraidWord{2, {1, 1, 1}}), HierarchyLevel::BraidPositive);
  EXPECT_EQ(classify_certificate(BraidWord{3, {1, -2}}), HierarchyLevel::NoCertificate);
  EXPECT_EQ(classify_certificate(parse_bands(nl("n=2 / emb 1 2 / emb 1 2 / emb 1 2"))), HierarchyLevel::BraidPositive);
  EXPECT_EQ(classify_certificate(parse_bands(nl("n=3 / emb 1 3"))), HierarchyLevel::StronglyQuasiPositive);
  EXPECT_EQ(classify_certificate(parse_bands(nl("n=3 / band g=2 w=-1"))), HierarchyLevel::QuasiPositive);
  EXPECT_EQ(classify_certificate(corpus_get("m946").bands), HierarchyLevel::QuasiPositive);
}

TEST(Braid, HierarchyImplications) {
  EXPECT_TRUE(implies(HierarchyLevel::BraidPositive, HierarchyLevel::QuasiPositive));
  EXPECT_TRUE(implies(HierarchyLevel::StronglyQuasiPositive, HierarchyLevel::QuasiPositive));
  EXPECT_FALSE(implies(HierarchyLevel::QuasiPositive, HierarchyLevel::StronglyQuasiPositive));
  EXPECT_FALSE(implies(HierarchyLevel::NoCertificate, HierarchyLevel::QuasiPositive));
  EXPECT_STREQ(to_string(HierarchyLevel::StronglyQuasiPositive), "StronglyQuasiPositive");
}

TEST(Braid, Chi4) {
  EXPECT_EQ(chi4_quasipositive(parse_bands(nl("n=2 / emb 1 2 / emb 1 2 / emb 1 2"))), -1);
  EXPECT_EQ(chi4_quasipositive(corpus_get("m946").bands), 1);
  EXPECT_EQ(chi4_quasipositive(parse_bands(nl("n=1"))), 1);
}
