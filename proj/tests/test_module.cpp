#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"

using namespace qhr;
using qhr::test::bundled;
using qhr::test::data_path;

namespace {

LoewyProfile prof(const std::string& s) { return parse_profile(s); }

// Sl2-block modules: vertex 0 is "1", vertex 1 is "2".
struct Sl2 : ::testing::Test {
  AlgebraPtr a = bundled("sl2block");
  Representation p1 = projective(a, 0);
  Representation p2 = projective(a, 1);
  Representation l1 = simple(a, 0);
  Representation l2 = simple(a, 1);
};

}  // namespace

TEST_F(Sl2, HomDimensions) {
  EXPECT_EQ(hom_space(l1, l1).size(), 1u);
  EXPECT_EQ(hom_space(p1, p2).size(), 1u);
  EXPECT_EQ(hom_space(p1, p1).size(), 2u);
  for (const auto& g : hom_space(p1, p1)) EXPECT_TRUE(is_homomorphism(p1, p1, g));
}

TEST_F(Sl2, ProjectiveProfiles) {
  EXPECT_EQ(radical_profile(p1), prof("1 | 2 | 1"));
  EXPECT_EQ(radical_profile(p2), prof("2 | 1"));
  EXPECT_EQ(socle_profile(p2), prof("1 | 2"));
  EXPECT_EQ(loewy_length(p1), 3u);
}

TEST_F(Sl2, SemisimpleModuleHasOneLayer) {
  const auto s = direct_sum({l1, l2});
  EXPECT_EQ(radical_profile(s), prof("1,2"));
}

TEST_F(Sl2, Spin) {
  EXPECT_TRUE(spin(p1, {p1.field().zero_vec(p1.dim())}).is_zero());
  const auto top = p1.vertex_basis(0);
  // The head of P(1) is the idempotent path, basis index 0.
  EXPECT_EQ(spin(p1, {top.front()}), p1.full());
  const Chain soc = socle_series(p1);
  ASSERT_GE(soc.size(), 2u);
  const auto s = soc[1].basis();
  ASSERT_EQ(s.size(), 1u);
  const auto sp = spin(p1, {s[0]});
  EXPECT_EQ(sp.dim(), 1u);
  EXPECT_EQ(p1.dim_at(sp, 0), 1u);
}

TEST_F(Sl2, Subquotients) {
  const auto same = subquotient(p1, p1.full(), p1.zero_sub());
  EXPECT_EQ(radical_profile(same.rep), radical_profile(p1));
  const Chain rad = radical_series(p1);
  const auto layer = subquotient(p1, rad[1], rad[2]);
  EXPECT_EQ(radical_profile(layer.rep), prof("2"));
  const Chain soc = socle_series(p1);
  const auto top = subquotient(p1, p1.full(), soc[1]);
  EXPECT_EQ(radical_profile(top.rep), prof("1 | 2"));
  EXPECT_THROW((void)subquotient(p1, rad[2], rad[1]), InputError);
}

TEST_F(Sl2, Ext1) {
  EXPECT_EQ(ext1(l1, l1).dim, 0u);
  EXPECT_EQ(ext1(l1, l2).dim, 1u);
  EXPECT_EQ(ext1(l2, l1).dim, 1u);
  for (const auto& n : {l1, l2, p1, p2}) {
    EXPECT_EQ(ext1(p1, n).dim, 0u);
    EXPECT_EQ(ext1(p2, n).dim, 0u);
  }
}

TEST_F(Sl2, UniversalExtension) {
  const auto e = universal_extension(l2, l1);
  EXPECT_EQ(e.rep.dim(), 2u);
  EXPECT_EQ(radical_profile(e.rep), prof("1 | 2"));
  EXPECT_TRUE(is_homomorphism(l2, e.rep, e.inclusion));
}

TEST_F(Sl2, Decompose) {
  EXPECT_EQ(decompose(direct_sum({l1, l2})).summands.size(), 2u);
  const auto d = decompose(p1);
  ASSERT_EQ(d.summands.size(), 1u);
  EXPECT_TRUE(d.conclusive);
  const auto dd = decompose(direct_sum({p1, p1}), 7);
  ASSERT_EQ(dd.summands.size(), 2u);
  for (const auto& s : dd.summands) EXPECT_EQ(radical_profile(s.rep), prof("1 | 2 | 1"));
  EXPECT_EQ(has_local_endomorphism_ring(p1), std::optional<bool>(true));
}

TEST_F(Sl2, Rigidity) {
  EXPECT_TRUE(is_rigid(l1).rigid);
  EXPECT_TRUE(is_rigid(p1).rigid);
  const auto r = is_rigid(direct_sum({l1, p1}));
  EXPECT_FALSE(r.rigid);
  ASSERT_TRUE(r.failing_index.has_value());
}

TEST_F(Sl2, RepRoundTrip) {
  std::ostringstream os;
  write_rep(os, p1, "sl2block.alg");
  std::istringstream is(os.str());
  const Representation back = parse_rep_body(is, "<mem>", a);
  EXPECT_EQ(back.dims(), p1.dims());
  EXPECT_EQ(back.maps(), p1.maps());
}

TEST(RepFiles, BundledFixtures) {
  const auto t2 = load_rep_file(data_path("sl2block_T2.rep"));
  EXPECT_EQ(radical_profile(t2.rep), parse_profile("1 | 2 | 1"));
  const auto t3 = load_rep_file(data_path("zigzag3_T3.rep"));
  EXPECT_EQ(radical_profile(t3.rep), parse_profile("2 | 1,3 | 2"));
  EXPECT_EQ(socle_profile(t3.rep), parse_profile("2 | 1,3 | 2"));
  const auto s3 = load_rep_file(data_path("stretched_T3.rep"));
  EXPECT_EQ(radical_profile(s3.rep), parse_profile("1,1 | 2 | 3"));
  EXPECT_FALSE(is_rigid(s3.rep).rigid);
}

TEST(RepFiles, RejectsNonModules) {
  const auto a = bundled("sl2block");
  // b.a must act as zero; here both maps are the identity.
  std::istringstream is("dim 1 1\nmap a\n1\nmap b\n1\n");
  EXPECT_THROW((void)parse_rep_body(is, "<mem>", a), InputError);
}

TEST(Duality, ExchangesRadicalAndSocleLayers) {
  for (const std::string name : {"sl2block", "zigzag3"}) {
    const auto a = bundled(name);
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
      const auto p = projective(a, v);
      const auto d = duality_dual(p);
      // Socle layers are listed bottom first.
      EXPECT_EQ(radical_profile(p), socle_profile(d)) << name << " P(" << v << ")";
      EXPECT_EQ(socle_profile(p), radical_profile(d)) << name << " P(" << v << ")";
      EXPECT_EQ(d.dims(), p.dims());
    }
  }
}
