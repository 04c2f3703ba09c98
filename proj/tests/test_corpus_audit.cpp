#include <gtest/gtest.h>

#include <json.hpp>

#include "legfill/audit.hpp"
#include "legfill/corpus.hpp"
#include "legfill/error.hpp"
#include "legfill/homfly.hpp"
#include "legfill/planar_diagram.hpp"
#include "oracles/known_homfly.hpp"

using namespace legfill;

namespace {
ConjectureReport audit_label(const std::string& label) {
  auto fx = corpus_get(label);
  AuditOptions opt;
  opt.label = label;
  opt.script = fx.script;
  return audit(fx.bands, fx.front, opt);
}
}  // namespace

TEST(Corpus, ListAndLookup) {
  auto labels = corpus_list();
  for (const char* l : {"unknot", "trefoil", "fish", "stab-unknot", "m946", "stoimenow", "torus-2-5", "torus-2-7"})
    EXPECT_NE(std::find(labels.begin(), labels.end(), l), labels.end()) << l;
  try {
    (void)corpus_get("no-such-knot");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLabel);
  }
}

TEST(Corpus, EntriesAreConsistent) {
  for (const auto& label : corpus_list()) {
    auto fx = corpus_get(label);
    EXPECT_EQ(fx.label, label);
    EXPECT_FALSE(fx.description.empty()) << label;
    EXPECT_NO_THROW(fx.front.front.validate()) << label;
    // braid, band expansion and front are the same knot
    auto pb = homfly(closure_diagram(fx.braid));
    EXPECT_EQ(homfly(closure_diagram(expand_bands(fx.bands))), pb) << label;
    EXPECT_EQ(homfly(front_to_pd(fx.front)), pb) << label;
    EXPECT_EQ(closure_components(fx.braid).component_count, 1) << label;
  }
}

TEST(Corpus, KnownPolynomials) {
  EXPECT_EQ(homfly(front_to_pd(corpus_get("trefoil").front)), oracle::trefoil());
  EXPECT_EQ(homfly(front_to_pd(corpus_get("torus-2-5").front)), oracle::torus_2(5));
  EXPECT_EQ(homfly(front_to_pd(corpus_get("torus-2-7").front)), oracle::torus_2(7));
  EXPECT_EQ(homfly(front_to_pd(corpus_get("m946").front)), oracle::m946());
}

TEST(Audit, Statuses) {
  EXPECT_EQ(audit_label("unknot").filling, FillingStatus::Constructed);
  EXPECT_EQ(audit_label("trefoil").filling, FillingStatus::Constructed);
  EXPECT_EQ(audit_label("torus-2-5").filling, FillingStatus::Constructed);
  EXPECT_EQ(audit_label("fish").filling, FillingStatus::MethodFailed);
  EXPECT_EQ(audit_label("stab-unknot").filling, FillingStatus::MethodFailed);
  EXPECT_EQ(audit_label("m946").filling, FillingStatus::ScriptVerified);
}

TEST(Audit, TrefoilFields) {
  auto r = audit_label("trefoil");
  EXPECT_EQ(r.certificate, HierarchyLevel::BraidPositive);
  EXPECT_EQ(r.chi4, -1);
  EXPECT_EQ(r.polynomial, oracle::trefoil());
  EXPECT_EQ(r.max_framing_degree, -2);
  EXPECT_EQ(r.homfly_bound, 1);
  EXPECT_EQ(r.front_tb, 1);
  EXPECT_TRUE(r.bound_sharp);
  EXPECT_EQ(r.trace_euler, -1);
  EXPECT_EQ(r.trace_genus, 1);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Audit, Stoimenow) {
  auto r = audit_label("stoimenow");
  EXPECT_EQ(r.certificate, HierarchyLevel::StronglyQuasiPositive);
  EXPECT_EQ(r.chi4, -7);
  EXPECT_EQ(r.max_framing_degree, -10);
  EXPECT_EQ(r.homfly_bound, 9);
  EXPECT_FALSE(r.bound_sharp);
  EXPECT_EQ(r.filling, FillingStatus::RuledOut);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Audit, RerunIsByteIdentical) {
  auto a = audit_label("m946"), b = audit_label("m946");
  EXPECT_EQ(format_report(a), format_report(b));
  EXPECT_EQ(report_json(a), report_json(b));
}

TEST(Audit, JsonShape) {
  auto j = nlohmann::json::parse(report_json(audit_label("trefoil")));
  EXPECT_EQ(j["label"], "trefoil");
  EXPECT_EQ(j["filling"], "Constructed");
  EXPECT_EQ(j["homfly_bound"], 1);
  EXPECT_EQ(j["chi4"], -1);
}

TEST(Audit, TextReport) {
  auto text = format_report(audit_label("fish"));
  EXPECT_NE(text.find("label=fish\n"), std::string::npos);
  EXPECT_NE(text.find("filling=MethodFailed\n"), std::string::npos);
  EXPECT_NE(text.find("reason=NotFillableByThisMethod"), std::string::npos);
}

TEST(Audit, RejectsLinks) {
  auto fx = corpus_get("trefoil");
  auto link = parse_bands("n=2\nemb 1 2\nemb 1 2\n");
  try {
    (void)audit(link, fx.front);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAKnot);
  }
  auto hopf_front = orient(parse_front("L 1\nL 3\nX 2\nX 2\nR 1\nR 1\n"));
  EXPECT_THROW(audit(fx.bands, hopf_front), Error);
}

TEST(Audit, CrossCheckWarns) {
  // trefoil bands with an unknot front
  auto fx = corpus_get("trefoil");
  auto mentions = [](const ConjectureReport& r) {
    return std::any_of(r.warnings.begin(), r.warnings.end(),
                       [](const std::string& w) { return w.find("band closure") != std::string::npos; });
  };
  EXPECT_TRUE(mentions(audit(fx.bands, corpus_get("unknot").front)));
  AuditOptions quiet;
  quiet.cross_check = false;
  EXPECT_FALSE(mentions(audit(fx.bands, corpus_get("unknot").front, quiet)));
}

TEST(Audit, BadScriptIsNotVerified) {
  auto fx = corpus_get("trefoil");
  AuditOptions opt;
  opt.script = parse_moves("birth 1\n");
  auto r = audit(fx.bands, fx.front, opt);
  EXPECT_NE(r.filling, FillingStatus::ScriptVerified);
}
