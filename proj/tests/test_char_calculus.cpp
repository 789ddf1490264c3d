#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qhrigid/char_calculus.hpp"

using namespace qhr;

namespace {

const BlockData& sl4() { return BlockData::sl4(); }

Character unit_l(const std::string& l) { return Character::unit(Basis::L, sl4().size(), sl4().index(l)); }
Character unit_d(const std::string& l) { return Character::unit(Basis::Delta, sl4().size(), sl4().index(l)); }

std::string theta(const std::string& s, const std::string& l) { return format_character(wall_cross(s, unit_l(l), sl4()), sl4()); }

LoewyProfile prof(const std::string& s) { return parse_profile(s); }

}  // namespace

TEST(Characters, StandardsInSimpleBasis) {
  EXPECT_EQ(format_character(to_L_basis(unit_d("2"), sl4()), sl4()), "2 + 1");
  EXPECT_EQ(format_character(to_L_basis(unit_d("1"), sl4()), sl4()), "1");
  const auto d5 = to_L_basis(unit_d("5"), sl4());
  long total = 0;
  for (const auto& l : {"5", "4", "fl", "fl'", "3", "3'", "2"}) EXPECT_EQ(d5.coeffs[sl4().index(l)], 1) << l;
  for (long c : d5.coeffs) total += c;
  EXPECT_EQ(total, 7);
}

TEST(Characters, BasisChangeRoundTrip) {
  for (std::size_t i = 0; i < sl4().size(); ++i) {
    const auto c = Character::unit(Basis::L, sl4().size(), i);
    EXPECT_EQ(to_L_basis(to_delta_basis(c, sl4()), sl4()), c);
  }
}

TEST(WallCrossing, KnownValues) {
  EXPECT_EQ(theta("s2", "3"), "fl + 2·3 + 2");
  EXPECT_EQ(theta("s2", "3'"), "fl' + 2·3' + 2");
  EXPECT_EQ(theta("s2", "4"), "5 + 2·4 + 1");
}

TEST(WallCrossing, Vanishings) {
  for (const auto& [s, l] : std::vector<std::pair<std::string, std::string>>{
           {"s3", "1"}, {"s3", "3'"}, {"s1", "3"}, {"s2", "fl"}, {"s2", "fl'"}, {"s2", "2"}, {"s2", "1"}})
    EXPECT_EQ(theta(s, l), "0") << s << " " << l;
}

TEST(WallCrossing, UnknownWallIsAnError) {
  EXPECT_THROW((void)wall_cross("s9", unit_l("3"), sl4()), InputError);
}

TEST(WallCrossing, LinearInTheCharacter) {
  const auto a = unit_l("3"), b = unit_l("4");
  EXPECT_EQ(wall_cross("s2", a + b, sl4()), wall_cross("s2", a, sl4()) + wall_cross("s2", b, sl4()));
  EXPECT_EQ(wall_cross("s2", 3 * a, sl4()), 3 * wall_cross("s2", a, sl4()));
}

TEST(HomDim, Examples) {
  EXPECT_EQ(hom_dim(multiplicities("1", sl4()), multiplicities("1", sl4())), 1);
  EXPECT_EQ(hom_dim(multiplicities("4", sl4()), multiplicities("4,3,3',2", sl4())), 1);
  EXPECT_EQ(hom_dim(multiplicities("3", sl4()), multiplicities("5,4,fl,fl',3,3'", sl4())), 1);
  EXPECT_EQ(hom_dim(multiplicities("4,3,3',2", sl4()), multiplicities("4,3,3',2", sl4())), 4);
  EXPECT_THROW((void)multiplicities("4,nope", sl4()), InputError);
}

TEST(Projectives, KnownDiagrams) {
  EXPECT_EQ(projective_layers(sl4(), sl4().index("5")), prof("5 | fl,2,4,fl' | 3,3'"));
  EXPECT_EQ(projective_layers(sl4(), sl4().index("fl")), prof("fl | 3,5 | fl,2,4,fl' | 3,3'"));
  EXPECT_EQ(projective_layers(sl4(), sl4().index("1")), prof("1 | 2,4 | 1,3,1,3' | 2"));
  EXPECT_EQ(projective_layers(sl4(), sl4().index("2")), prof("2 | 3,1,5,3' | 2,fl,2,4,fl',2,4 | 3,3',3,1,3' | 2"));
}

TEST(Projectives, MatchGoldenFile) {
  const auto golden = parse_lay_string(bundled_file("sl4.projectives.lay"), "sl4.projectives.lay");
  ASSERT_EQ(golden.size(), 6u);
  for (const auto& e : golden) EXPECT_EQ(projective_layers(sl4(), sl4().index(e.label)), e.profile) << e.label;
}

TEST(Placement, Examples) {
  const auto& b = sl4();
  EXPECT_EQ(layers_from_placement({{b.index("2"), 0}, {b.index("3"), 1}}, b), prof("2 | 3,1 | 2"));
  EXPECT_EQ(layers_from_placement({{b.index("1"), 0}}, b), prof("1"));
  EXPECT_EQ(layers_from_placement({{b.index("3"), 0}, {b.index("3'"), 0}, {b.index("fl"), 1}, {b.index("fl'"), 1},
                                   {b.index("4"), 1}, {b.index("5"), 2}},
                                  b),
            prof("3,3' | fl',fl,2,2,4 | 3',3,5,3,1,3' | fl,2,4,fl',2 | 3,3'"));
}

TEST(Placement, SolveRecoversTilting) {
  const auto& b = sl4();
  const auto t4 = solve_placement(prof("2 | 1,3,3' | 2,2,4 | 1,3,3' | 2"),
                                  {b.index("4"), b.index("3"), b.index("3'"), b.index("2")}, b);
  ASSERT_EQ(t4.size(), 1u);
  auto got = t4[0];
  std::sort(got.begin(), got.end());
  HeadPlacement want = {{b.index("2"), 0}, {b.index("3"), 1}, {b.index("3'"), 1}, {b.index("4"), 2}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);

  const auto t1 = solve_placement(prof("1"), {b.index("1")}, b);
  ASSERT_EQ(t1.size(), 1u);
  EXPECT_EQ(t1[0], (HeadPlacement{{b.index("1"), 0}}));

  const auto t2 = solve_placement(prof("1 | 2 | 1"), {b.index("2"), b.index("1")}, b);
  ASSERT_EQ(t2.size(), 1u);
  auto g2 = t2[0];
  std::sort(g2.begin(), g2.end());
  HeadPlacement w2 = {{b.index("1"), 0}, {b.index("2"), 1}};
  std::sort(w2.begin(), w2.end());
  EXPECT_EQ(g2, w2);

  EXPECT_TRUE(solve_placement(prof("2 | 1"), {b.index("1")}, b).empty());
}

TEST(Placement, SharedTiltingTableMatchesGolden) {
  const auto golden = parse_lay_string(bundled_file("sl4.tiltings.lay"), "sl4.tiltings.lay");
  for (const auto& [label, placement] : sl4_tilting_placements()) {
    const auto it = std::find_if(golden.begin(), golden.end(), [&](const LayEntry& e) { return e.label == label; });
    ASSERT_NE(it, golden.end()) << label;
    EXPECT_EQ(layers_from_placement(placement_from_labels(placement, sl4()), sl4()), it->profile) << label;
  }
}

TEST(Symmetry, Sl4Passes) { EXPECT_TRUE(bgg_symmetry_check(sl4()).passed); }

TEST(Symmetry, CorruptedTableGivesWitness) {
  const auto& b = sl4();
  const auto bad = corrupted_projectives(b, b.index("1"), 2, "3");
  const auto r = bgg_symmetry_check(bad, b);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  const auto [s, l, m] = *r.witness;
  EXPECT_EQ(s, 2u);
  const std::set<std::size_t> pair = {l, m};
  EXPECT_EQ(pair, (std::set<std::size_t>{b.index("1"), b.index("3")}));
  EXPECT_FALSE(r.message.empty());
}

TEST(BlockFile, Validation) {
  const std::string ok = "labels a b\norder a < b\ndelta a : a\ndelta b : b | a\n";
  EXPECT_EQ(BlockData::from_string(ok, "t").size(), 2u);
  EXPECT_THROW((void)BlockData::from_string("labels a b\ndelta a : a\ndelta b : b | a\n", "t"), InputError);
  EXPECT_THROW((void)BlockData::from_string("labels a b\norder a < b\ndelta a : a\n", "t"), InputError);
  EXPECT_THROW((void)BlockData::from_string(ok + "wall a s up b\n", "t"), InputError);
  try {
    (void)BlockData::from_string("labels a\ndelta a : a\nbogus\n", "blk");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(LayFormat, RoundTrip) {
  const std::string text = bundled_file("sl4.tiltings.lay");
  EXPECT_EQ(format_lay(parse_lay_string(text, "t")), text);
}
