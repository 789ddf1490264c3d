#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qhrigid/coeff_quiver.hpp"

using namespace qhr;
using qhr::test::bundled;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

CoefficientQuiver bare_pattern() {
  CoefficientQuiver cq;
  cq.add_node("1", 0);
  cq.add_node("2", 1);
  cq.add_node("3", 2);
  cq.add_edge(0, 1);
  cq.add_edge(1, 2);
  return cq;
}

const WeightPoset& chain3() {
  static const WeightPoset p({"1", "2", "3"}, {{0, 1}, {1, 2}});
  return p;
}

const std::set<std::pair<std::string, std::string>> kRad1 = {{"1", "3"}};

bool all_possible(const PruneReport& r, bool want) {
  if (!r.applicable || r.candidates.empty()) return false;
  for (const auto& c : r.candidates)
    if (c.possible != want) return false;
  return true;
}

}  // namespace

TEST(Extract, SimpleModule) {
  const auto a = bundled("sl2block");
  const auto cq = extract(simple(a, 0));
  ASSERT_EQ(cq.nodes.size(), 1u);
  EXPECT_TRUE(cq.edges.empty());
}

TEST(Extract, EmptyModule) {
  const auto cq = extract(Representation::zero(bundled("sl2block")));
  EXPECT_TRUE(cq.nodes.empty());
  EXPECT_TRUE(cq.edges.empty());
}

TEST(Extract, SemisimpleSum) {
  const auto a = bundled("sl2block");
  const auto cq = extract(direct_sum({simple(a, 0), simple(a, 1)}));
  EXPECT_EQ(cq.nodes.size(), 2u);
  EXPECT_TRUE(cq.edges.empty());
}

TEST(Extract, UniserialProjective) {
  const auto a = bundled("sl2block");
  const auto cq = extract(projective(a, 0));
  ASSERT_EQ(cq.nodes.size(), 3u);
  EXPECT_EQ(cq.profile(), parse_profile("1 | 2 | 1"));
  ASSERT_EQ(cq.edges.size(), 2u);
  EXPECT_TRUE(cq.has_edge(0, 1));
  EXPECT_TRUE(cq.has_edge(1, 2));
  EXPECT_TRUE(cq.stretched_edges().empty());
  const std::string dot = render_dot(cq, "P1");
  EXPECT_EQ(count(dot, "rank=same"), 3u);
  EXPECT_EQ(count(dot, "->"), 2u);
}

TEST(Extract, DiamondTilting) {
  StandardSystem sys(bundled("zigzag3"));
  const auto cq = extract(sys.tilting(*sys.poset().find("3")));
  EXPECT_EQ(cq.profile(), parse_profile("2 | 1,3 | 2"));
  EXPECT_EQ(cq.edges.size(), 4u);
  EXPECT_TRUE(cq.stretched_edges().empty());
}

TEST(Extract, StretchedEdge) {
  StandardSystem sys(bundled("stretched"));
  const auto cq = extract(sys.tilting(*sys.poset().find("3")));
  EXPECT_EQ(cq.profile(), parse_profile("1,1 | 2 | 3"));
  ASSERT_EQ(cq.stretched_edges().size(), 1u);
  const auto& e = cq.edges[cq.stretched_edges()[0]];
  EXPECT_EQ(cq.nodes[e.from].label, "1");
  EXPECT_EQ(cq.nodes[e.to].label, "3");
  EXPECT_NE(render_ascii(cq).find("stretched"), std::string::npos);
  EXPECT_NE(render_dot(cq).find("penwidth=2"), std::string::npos);
}

// The adapted basis really is a basis, and edges reproduce the arrow action.
TEST(Extract, EdgesMatchArrowAction) {
  for (const std::string name : {"sl2block", "zigzag3", "stretched"}) {
    StandardSystem sys(bundled(name));
    for (std::size_t l = 0; l < sys.size(); ++l) {
      const auto& m = sys.projective_module(l);
      const auto cq = extract(m);
      ASSERT_EQ(cq.basis.size(), m.dim());
      EXPECT_EQ(Subspace::span(m.field(), m.dim(), cq.basis).dim(), m.dim());
      EXPECT_EQ(cq.profile(), radical_profile(m));
      for (std::size_t j = 0; j < cq.basis.size(); ++j) {
        bool moves = false;
        for (std::size_t a = 0; a < m.algebra().quiver().arrow_count(); ++a)
          moves = moves || !is_zero(m.act_arrow(a, cq.basis[j]));
        bool has_out = false;
        for (const auto& e : cq.edges) has_out = has_out || e.from == j;
        EXPECT_EQ(moves, has_out) << name << " node " << j;
      }
    }
  }
}

TEST(Render, DottedEdgesAreDashed) {
  auto cq = bare_pattern();
  cq.add_edge(0, 2, EdgeStyle::Dotted);
  EXPECT_NE(render_dot(cq).find("style=dashed"), std::string::npos);
  EXPECT_NE(render_ascii(cq).find("..>"), std::string::npos);
}

TEST(LemmaPrune, BarePatternIsImpossible) {
  const auto r = lemma_prune(bare_pattern(), "1", "3", chain3(), kRad1);
  EXPECT_TRUE(all_possible(r, false));
}

TEST(LemmaPrune, SecondViaEscape) {
  auto cq = bare_pattern();
  const auto v = cq.add_node("2", 1);
  cq.add_edge(0, v);
  cq.add_edge(v, 2);
  const auto r = lemma_prune(cq, "1", "3", chain3(), kRad1);
  ASSERT_TRUE(all_possible(r, true));
  EXPECT_EQ(r.candidates.front().escape, "second-via");
}

TEST(LemmaPrune, SecondLambdaEscape) {
  auto cq = bare_pattern();
  const auto a = cq.add_node("1", 0);
  cq.add_edge(a, 1);
  const auto r = lemma_prune(cq, "1", "3", chain3(), kRad1);
  ASSERT_TRUE(all_possible(r, true));
  EXPECT_EQ(r.candidates.front().escape, "second-lambda");
}

TEST(LemmaPrune, Preconditions) {
  EXPECT_FALSE(lemma_prune(bare_pattern(), "3", "1", chain3(), kRad1).applicable);
  EXPECT_FALSE(lemma_prune(bare_pattern(), "1", "3", chain3(), {}).applicable);
  EXPECT_FALSE(lemma_prune(bare_pattern(), "1", "9", chain3(), kRad1).applicable);
}

TEST(LemmaPrune, ViaBelowLambdaIsIgnored) {
  // 0 < 1 here, so the middle factor is below lambda and pruning has nothing to say.
  const WeightPoset p({"0", "1", "3"}, {{0, 1}, {1, 2}});
  CoefficientQuiver cq;
  cq.add_node("1", 0);
  cq.add_node("0", 1);
  cq.add_node("3", 2);
  cq.add_edge(0, 1);
  cq.add_edge(1, 2);
  const auto r = lemma_prune(cq, "1", "3", p, kRad1);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.candidates.empty());
}
