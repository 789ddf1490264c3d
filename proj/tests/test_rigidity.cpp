#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qhrigid/quasi_hereditary.hpp"
#include "qhrigid/rigidity.hpp"

using namespace qhr;
using qhr::test::bundled;

namespace {

std::size_t idx(const StandardSystem& sys, const std::string& l) { return *sys.poset().find(l); }

}  // namespace

TEST(FilteredHom, Sl2ProjectiveEndomorphisms) {
  StandardSystem sys(bundled("sl2block"));
  const auto& p1 = sys.projective_module(idx(sys, "1"));
  const std::vector<std::size_t> want = {2, 2, 2, 2, 1, 1, 0};
  for (long r = -3; r <= 3; ++r) EXPECT_EQ(filtered_hom(p1, p1, r).dim(), want[r + 3]) << "r=" << r;
}

TEST(FilteredHom, VacuousShiftGivesAllHoms) {
  StandardSystem sys(bundled("zigzag3"));
  for (std::size_t a = 0; a < sys.size(); ++a)
    for (std::size_t b = 0; b < sys.size(); ++b) {
      const auto& m = sys.projective_module(a);
      const auto& n = sys.tilting(b);
      EXPECT_EQ(filtered_hom(m, n, -static_cast<long>(loewy_length(m))).dim(), hom_space(m, n).size());
    }
}

TEST(FilteredExt, VanishesForSl2Tilting) {
  StandardSystem sys(bundled("sl2block"));
  const auto& t = sys.tilting(idx(sys, "2"));
  for (std::size_t l = 0; l < sys.size(); ++l)
    for (long r = -3; r <= 3; ++r) EXPECT_EQ(filtered_ext1_delta(sys, l, r, t).dim, 0u) << l << " " << r;
}

TEST(FilteredExt, VacuousShiftIsOrdinaryExt) {
  for (const std::string name : {"sl2block", "zigzag3", "stretched"}) {
    StandardSystem sys(bundled(name));
    for (std::size_t l = 0; l < sys.size(); ++l)
      for (std::size_t k = 0; k < sys.size(); ++k) {
        const auto& m = sys.simple_module(k);
        const long r = -static_cast<long>(loewy_length(sys.projective_module(l)) + 1);
        EXPECT_EQ(filtered_ext1_delta(sys, l, r, m).dim, ext1(sys.standard(l), m).dim) << name << " " << l << " " << k;
      }
  }
}

TEST(FilteredExt, DetectsStretchedTilting) {
  StandardSystem sys(bundled("stretched"));
  const auto& t = sys.tilting(idx(sys, "3"));
  EXPECT_EQ(filtered_ext1_delta(sys, idx(sys, "1"), 1, t).dim, 1u);
}

TEST(Detector, SemisimpleModulePasses) {
  StandardSystem sys(bundled("semisimple"));
  const auto m = direct_sum({sys.simple_module(0), sys.simple_module(1)});
  for (Side side : {Side::DeltaL, Side::LNabla}) EXPECT_TRUE(detect_stretched(sys, m, side).passed);
}

TEST(Detector, Sl2TiltingPasses) {
  StandardSystem sys(bundled("sl2block"));
  const auto& t = sys.tilting(idx(sys, "2"));
  EXPECT_TRUE(detect_stretched(sys, t, Side::DeltaL).passed);
  EXPECT_TRUE(detect_stretched(sys, t, Side::LNabla).passed);
}

TEST(Detector, StretchedTiltingFailsWithValidWitness) {
  StandardSystem sys(bundled("stretched"));
  const auto& t = sys.tilting(idx(sys, "3"));
  const auto c = detect_stretched(sys, t, Side::DeltaL, FiltrationKind::Radical);
  ASSERT_FALSE(c.passed);
  const Chain f = descending_filtration(t, FiltrationKind::Radical);
  bool seen = false;
  for (const auto& e : c.entries) {
    if (e.pass) continue;
    seen = true;
    EXPECT_EQ(e.label, idx(sys, "1"));
    ASSERT_FALSE(e.witnesses.empty());
    for (const auto& w : e.witnesses) EXPECT_TRUE(witness_is_valid(sys, t, f, e, w));
  }
  EXPECT_TRUE(seen);
  const auto en = enumerate_stretched(sys, t, Side::DeltaL, FiltrationKind::Radical);
  ASSERT_TRUE(en.applicable);
  EXPECT_TRUE(en.found());
  EXPECT_EQ(en.stretched.front().label, idx(sys, "1"));
  EXPECT_EQ(en.stretched.front().top, idx(sys, "3"));
}

TEST(Enumerator, NeedsFiniteField) {
  StandardSystem sys(bundled("semisimple"));
  const auto en = enumerate_stretched(sys, sys.simple_module(0), Side::DeltaL, FiltrationKind::Radical);
  EXPECT_FALSE(en.applicable);
  EXPECT_FALSE(en.reason.empty());
}

// Detector and enumerator on every indecomposable tilting module over F_2.
TEST(Detector, AgreesWithEnumeratorOnTiltings) {
  for (const std::string name : {"sl2block", "zigzag3", "stretched"}) {
    StandardSystem sys(bundled(name));
    for (std::size_t l = 0; l < sys.size(); ++l)
      for (Side side : {Side::DeltaL, Side::LNabla})
        for (auto kind : {FiltrationKind::Radical, FiltrationKind::Socle}) {
          const auto det = detect_stretched(sys, sys.tilting(l), side, kind);
          const auto en = enumerate_stretched(sys, sys.tilting(l), side, kind);
          ASSERT_TRUE(en.applicable);
          EXPECT_EQ(det.passed, !en.found()) << name << " T(" << sys.poset().label(l) << ") " << side_name(side) << "/"
                                             << filtration_name(kind);
        }
  }
}

// Known limits of the per-weight test, pinned so that a change in either
// direction is noticed. The enumerator is the reference in both cases.
TEST(DetectorLimits, SocleFiltrationOfStretchedProjective) {
  StandardSystem sys(bundled("stretched"));
  const auto& p = sys.projective_module(idx(sys, "1"));
  const auto det = detect_stretched(sys, p, Side::DeltaL, FiltrationKind::Socle);
  const auto en = enumerate_stretched(sys, p, Side::DeltaL, FiltrationKind::Socle);
  EXPECT_TRUE(det.passed);
  ASSERT_TRUE(en.found());
  // The stretched subquotient needs a non-zero M''.
  for (const auto& s : en.stretched) EXPECT_FALSE(s.inner.is_zero());
}

TEST(DetectorLimits, MixedGeneratorInDirectSum) {
  StandardSystem sys(bundled("zigzag3"));
  const auto m = direct_sum({sys.tilting(idx(sys, "2")), sys.tilting(idx(sys, "3"))});
  const auto det = detect_stretched(sys, m, Side::DeltaL, FiltrationKind::Radical);
  const auto en = enumerate_stretched(sys, m, Side::DeltaL, FiltrationKind::Radical);
  EXPECT_TRUE(det.passed);
  EXPECT_TRUE(en.found());
  // Both summands have Loewy length 3, so the sum is still rigid.
  EXPECT_TRUE(is_rigid(m).rigid);
}

TEST(DetectorLimits, UnionTestCatchesSimpleMixedGenerator) {
  StandardSystem sys(bundled("zigzag3"));
  const auto m = direct_sum({sys.tilting(idx(sys, "1")), sys.tilting(idx(sys, "3"))});
  EXPECT_FALSE(detect_stretched(sys, m, Side::DeltaL, FiltrationKind::Radical).passed);
  EXPECT_TRUE(enumerate_stretched(sys, m, Side::DeltaL, FiltrationKind::Radical).found());
}

TEST(Pipeline, Sl2BlockIsRigidBothWays) {
  StandardSystem sys(bundled("sl2block"));
  for (const std::string w : {"1", "2"}) {
    const auto r = rigidity_pipeline(sys, idx(sys, w));
    EXPECT_TRUE(r.hypothesis);
    EXPECT_EQ(r.rigid_theorem, std::optional<bool>(true)) << w;
    EXPECT_EQ(r.rigid_oracle, std::optional<bool>(true)) << w;
    EXPECT_TRUE(r.consistent);
    EXPECT_TRUE(r.errors.empty());
  }
}

TEST(Pipeline, StretchedTheoremDoesNotApply) {
  StandardSystem sys(bundled("stretched"));
  const auto r = rigidity_pipeline(sys, idx(sys, "3"));
  EXPECT_FALSE(r.rigid_theorem.has_value());
  EXPECT_EQ(r.rigid_oracle, std::optional<bool>(false));
  EXPECT_EQ(r.enumerator_agrees, std::optional<bool>(true));
  EXPECT_TRUE(r.consistent);
}

TEST(Pipeline, MethodsRestrictWork) {
  StandardSystem sys(bundled("zigzag3"));
  const auto th = rigidity_pipeline(sys, idx(sys, "3"), Method::Theorem);
  EXPECT_FALSE(th.rigid_oracle.has_value());
  EXPECT_EQ(th.rigid_theorem, std::optional<bool>(true));
  const auto orc = rigidity_pipeline(sys, idx(sys, "3"), Method::Oracle);
  EXPECT_FALSE(orc.rigid_theorem.has_value());
  EXPECT_EQ(orc.rigid_oracle, std::optional<bool>(true));
}

TEST(Pipeline, JsonIsDeterministic) {
  StandardSystem a(bundled("zigzag3"), 3), b(bundled("zigzag3"), 3);
  const auto ja = pipeline_json(a, rigidity_pipeline(a, 2)).dump();
  const auto jb = pipeline_json(b, rigidity_pipeline(b, 2)).dump();
  EXPECT_EQ(ja, jb);
  const auto j = nlohmann::json::parse(ja);
  for (const char* key : {"hypothesis", "stretched", "filteredExt", "rigid_theorem", "rigid_oracle", "consistent",
                          "errors", "shift_convention"})
    EXPECT_TRUE(j.contains(key)) << key;
}
