#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qhrigid/quasi_hereditary.hpp"

using namespace qhr;
using qhr::test::bundled;

namespace {

LoewyProfile prof(const std::string& s) { return parse_profile(s); }

std::size_t idx(const StandardSystem& sys, const std::string& l) { return *sys.poset().find(l); }

}  // namespace

TEST(WeightPoset, ClosureAndCycles) {
  const WeightPoset p({"1", "2", "3"}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(p.lt(0, 2));
  EXPECT_FALSE(p.lt(2, 0));
  EXPECT_EQ(p.maximal({0, 1, 2}), (std::vector<std::size_t>{2}));
  EXPECT_THROW(WeightPoset({"1", "2"}, {{0, 1}, {1, 0}}), InputError);
}

TEST(Standard, Sl2Block) {
  StandardSystem sys(bundled("sl2block"));
  EXPECT_EQ(radical_profile(sys.standard(idx(sys, "1"))), prof("1"));
  EXPECT_EQ(radical_profile(sys.standard(idx(sys, "2"))), prof("2 | 1"));
  EXPECT_EQ(radical_profile(sys.costandard(idx(sys, "2"))), prof("1 | 2"));
}

TEST(Standard, MaximalWeightGivesProjective) {
  for (const std::string name : {"sl2block", "zigzag3", "stretched"}) {
    StandardSystem sys(bundled(name));
    for (auto l : sys.poset().maximal([&] {
           std::vector<std::size_t> all(sys.size());
           for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
           return all;
         }()))
      EXPECT_EQ(sys.standard(l).dim(), sys.projective_module(l).dim()) << name;
  }
}

TEST(QuasiHereditary, Fixtures) {
  for (const std::string name : {"sl2block", "zigzag3", "stretched", "semisimple"}) {
    StandardSystem sys(bundled(name));
    EXPECT_TRUE(check_quasihereditary(sys).quasi_hereditary) << name;
  }
}

TEST(QuasiHereditary, ReversedOrderFailsAxiomTwo) {
  StandardSystem sys(bundled("sl2block_reversed"));
  const auto r = check_quasihereditary(sys);
  EXPECT_FALSE(r.quasi_hereditary);
  bool some_ii = false;
  for (const auto& w : r.weights) some_ii = some_ii || !w.axiom_ii;
  EXPECT_TRUE(some_ii);
}

TEST(DeltaFiltration, ProjectiveOfSl2Block) {
  StandardSystem sys(bundled("sl2block"));
  const auto f = find_delta_filtration(sys, sys.projective_module(idx(sys, "1")));
  ASSERT_TRUE(f.ok());
  ASSERT_EQ(f.filtration->steps.size(), 2u);
  EXPECT_EQ(f.filtration->steps[0].label, idx(sys, "1"));
  EXPECT_EQ(f.filtration->steps[0].shift, 0u);
  EXPECT_EQ(f.filtration->steps[1].label, idx(sys, "2"));
  EXPECT_EQ(f.filtration->steps[1].shift, 1u);
  EXPECT_EQ(predicted_profile(sys, *f.filtration), prof("1 | 2 | 1"));
  EXPECT_TRUE(check_radical_respecting(sys, sys.projective_module(idx(sys, "1")), *f.filtration));
}

TEST(DeltaFiltration, StandardIsSingleStep) {
  StandardSystem sys(bundled("zigzag3"));
  for (std::size_t l = 0; l < sys.size(); ++l) {
    const auto f = find_delta_filtration(sys, sys.standard(l));
    ASSERT_TRUE(f.ok());
    ASSERT_EQ(f.filtration->steps.size(), 1u);
    EXPECT_EQ(f.filtration->steps[0].label, l);
  }
}

TEST(DeltaFiltration, SemisimpleOfMinimalWeight) {
  StandardSystem sys(bundled("sl2block"));
  const std::size_t one = idx(sys, "1");
  const auto m = direct_sum({sys.simple_module(one), sys.simple_module(one)});
  const auto f = find_delta_filtration(sys, m);
  ASSERT_TRUE(f.ok());
  ASSERT_EQ(f.filtration->steps.size(), 2u);
  for (const auto& s : f.filtration->steps) {
    EXPECT_EQ(s.label, one);
    EXPECT_EQ(s.shift, 0u);
  }
}

TEST(DeltaFiltration, DirectSumWithStandard) {
  StandardSystem sys(bundled("sl2block"));
  const auto m = direct_sum({sys.simple_module(idx(sys, "1")), sys.standard(idx(sys, "2"))});
  EXPECT_EQ(radical_profile(m), prof("1,2 | 1"));
  const auto f = find_delta_filtration(sys, m);
  ASSERT_TRUE(f.ok());
  EXPECT_EQ(predicted_profile(sys, *f.filtration), radical_profile(m));
  EXPECT_TRUE(check_radical_respecting(sys, m, *f.filtration));
}

TEST(DeltaFiltration, SimpleOfHigherWeightHasNone) {
  StandardSystem sys(bundled("sl2block"));
  EXPECT_FALSE(find_delta_filtration(sys, sys.simple_module(idx(sys, "2"))).ok());
}

TEST(Tilting, Sl2Block) {
  StandardSystem sys(bundled("sl2block"));
  const auto& t2 = sys.tilting(idx(sys, "2"));
  EXPECT_EQ(radical_profile(t2), prof("1 | 2 | 1"));
  EXPECT_EQ(t2.dim(), sys.projective_module(idx(sys, "1")).dim());
  EXPECT_EQ(radical_profile(sys.tilting(idx(sys, "1"))), prof("1"));
}

TEST(Tilting, HasBothFiltrations) {
  for (const std::string name : {"sl2block", "zigzag3", "stretched"}) {
    StandardSystem sys(bundled(name));
    for (std::size_t l = 0; l < sys.size(); ++l) {
      const auto& t = sys.tilting(l);
      EXPECT_TRUE(find_delta_filtration(sys, t).ok()) << name << " " << l;
      EXPECT_TRUE(find_nabla_filtration(sys, t).ok()) << name << " " << l;
      EXPECT_TRUE(decompose(t).summands.size() == 1) << name << " " << l;
    }
  }
}

TEST(Tilting, KnownProfiles) {
  StandardSystem z(bundled("zigzag3"));
  EXPECT_EQ(radical_profile(z.tilting(idx(z, "3"))), prof("2 | 1,3 | 2"));
  StandardSystem s(bundled("stretched"));
  EXPECT_EQ(radical_profile(s.tilting(idx(s, "3"))), prof("1,1 | 2 | 3"));
}

TEST(Bgg, Sl2BlockReciprocity) {
  StandardSystem sys(bundled("sl2block"));
  const auto r = check_bgg(sys);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.passed);
}

TEST(Bgg, SkippedWithoutDuality) {
  StandardSystem sys(bundled("stretched"));
  EXPECT_FALSE(check_bgg(sys).applicable);
}

// [P(l) : Delta(m)] is independent of the filtration chosen.
TEST(DeltaFiltration, RandomChainsAgree) {
  for (const std::string name : {"sl2block", "zigzag3", "stretched"}) {
    StandardSystem sys(bundled(name));
    for (std::size_t l = 0; l < sys.size(); ++l) {
      const auto& p = sys.projective_module(l);
      const auto greedy = find_delta_filtration(sys, p);
      ASSERT_TRUE(greedy.ok());
      const auto want = delta_multiplicities(sys, *greedy.filtration);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto chain = random_delta_chain(sys, p, seed);
        ASSERT_TRUE(chain.has_value());
        const auto f = delta_filtration_from_chain(sys, p, *chain);
        ASSERT_TRUE(f.ok());
        EXPECT_EQ(delta_multiplicities(sys, *f.filtration), want);
      }
    }
  }
}

TEST(Json, QhReport) {
  StandardSystem sys(bundled("sl2block"));
  const auto j = qh_report_json(sys, check_quasihereditary(sys));
  EXPECT_EQ(j.at("quasi_hereditary"), true);
  ASSERT_EQ(j.at("weights").size(), 2u);
  EXPECT_EQ(j.at("weights")[0].at("label"), "1");
}
