#include "qhrigid/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "qhrigid/char_calculus.hpp"
#include "qhrigid/coeff_quiver.hpp"
#include "qhrigid/data.hpp"
#include "qhrigid/rigidity.hpp"

namespace qhr {

namespace {

class Recorder {
 public:
  Recorder(int id, std::string title) {
    r_.id = id;
    r_.title = std::move(title);
  }

  bool check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      r_.passed = false;
      r_.notes.push_back("failed: " + what);
    }
    return ok;
  }

  CriterionResult finish() {
    r_.notes.push_back(std::to_string(checks_) + " checks");
    return r_;
  }

 private:
  CriterionResult r_;
  std::size_t checks_ = 0;
};

const BlockData& block() { return BlockData::sl4(); }

CriterionResult projectives() {
  Recorder rec(1, "SL4 projective reconstruction");
  const auto golden = parse_lay_string(bundled_file("sl4.projectives.lay"), "sl4.projectives.lay");
  rec.check(golden.size() == 6, "golden file lists six projectives");
  for (const auto& e : golden) {
    const LoewyProfile got = projective_layers(block(), block().index(e.label));
    rec.check(got == e.profile, "P(" + e.label + ") = " + got.str() + ", expected " + e.profile.str());
  }
  return rec.finish();
}

CriterionResult tiltings() {
  Recorder rec(2, "SL4 tilting reconstruction");
  const auto golden = parse_lay_string(bundled_file("sl4.tiltings.lay"), "sl4.tiltings.lay");
  rec.check(golden.size() == 6, "golden file lists six tilting modules");
  const BlockData& b = block();
  for (const auto& [label, placement] : sl4_tilting_placements()) {
    HeadPlacement hp;
    std::vector<std::size_t> labels;
    for (const auto& [l, s] : placement) {
      hp.emplace_back(b.index(l), s);
      labels.push_back(b.index(l));
    }
    const LoewyProfile got = layers_from_placement(hp, b);
    const LayEntry* want = nullptr;
    for (const auto& e : golden)
      if (e.label == label) want = &e;
    if (!rec.check(want != nullptr, "T(" + label + ") in golden file")) continue;
    rec.check(got == want->profile, "T(" + label + ") = " + got.str() + ", expected " + want->profile.str());
    const auto sols = solve_placement(want->profile, labels, b);
    std::sort(hp.begin(), hp.end());
    bool unique = sols.size() == 1;
    if (unique) {
      auto s = sols[0];
      std::sort(s.begin(), s.end());
      unique = s == hp;
    }
    rec.check(unique, "placement of T(" + label + ") recovered uniquely (" + std::to_string(sols.size()) +
                          " solutions)");
  }
  return rec.finish();
}

CriterionResult wall_crossing() {
  Recorder rec(3, "Wall-crossing characters");
  const BlockData& b = block();
  auto theta = [&](const std::string& s, const std::string& l) {
    return format_character(wall_cross(s, Character::unit(Basis::L, b.size(), b.index(l)), b), b);
  };
  const std::vector<std::tuple<std::string, std::string, std::string>> cases = {
      {"s2", "3", "fl + 2·3 + 2"},  {"s2", "3'", "fl' + 2·3' + 2"}, {"s2", "4", "5 + 2·4 + 1"},
      {"s3", "1", "0"},             {"s3", "3'", "0"},              {"s1", "3", "0"},
      {"s2", "fl", "0"},            {"s2", "fl'", "0"},             {"s2", "2", "0"},
  };
  for (const auto& [s, l, want] : cases) {
    std::string got;
    try {
      got = theta(s, l);
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
    }
    rec.check(got == want, "theta_" + s + " L(" + l + ") = " + got + ", expected " + want);
  }
  return rec.finish();
}

CriterionResult bgg_symmetry() {
  Recorder rec(4, "Layered BGG symmetry of SL4 projectives");
  const auto r = bgg_symmetry_check(block());
  rec.check(r.passed, r.message);
  return rec.finish();
}

struct Fixture {
  std::string name;
  AlgebraPtr alg;
};

std::vector<Fixture> qh_fixtures() {
  std::vector<Fixture> out;
  for (const std::string name : {"sl2block", "zigzag3", "stretched", "semisimple"})
    out.push_back({name, load_algebra(name)});
  return out;
}

CriterionResult sl2_end_to_end() {
  Recorder rec(5, "sl2-block end-to-end");
  StandardSystem sys(load_algebra("sl2block"));
  const auto qh = check_quasihereditary(sys);
  rec.check(qh.quasi_hereditary, "qh verify passes");
  const std::size_t two = *sys.poset().find("2");
  const LoewyProfile prof = radical_profile(ringel_tilting(sys, two));
  rec.check(prof == parse_profile("1 | 2 | 1"), "T(2) profile " + prof.str());
  const auto rep = rigidity_pipeline(sys, two, Method::Both);
  rec.check(rep.rigid_theorem.value_or(false), "rigid via the theorem path");
  rec.check(rep.rigid_oracle.value_or(false), "rigid via the direct check");
  rec.check(rep.consistent, "pipeline consistent");
  for (std::size_t l = 0; l < sys.size(); ++l)
    for (long r = -3; r <= 3; ++r) {
      const auto e = filtered_ext1_delta(sys, l, r, rep.tilting);
      rec.check(e.dim == 0, "filtered Ext^1(Delta(" + sys.poset().label(l) + ")<" + std::to_string(r) +
                                ">, T(2)) = " + std::to_string(e.dim));
    }
  return rec.finish();
}

Mat random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (rng() % 3 == 0) continue;  // keep some sparsity so ranks vary
      const long x = f.is_rational() ? static_cast<long>(rng() % 7) - 3 : static_cast<long>(rng() % f.characteristic());
      m.set(i, j, f.reduce(Rational(x)));
    }
  return m;
}

void linalg_properties(Recorder& rec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<Field> fields = {Field(0), Field(2), Field(3), Field(7)};
  for (int k = 0; k < 100; ++k) {
    const Field& f = fields[static_cast<std::size_t>(k) % fields.size()];
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
    const Mat a = random_matrix(f, r, c, rng);
    const std::size_t rk = rank(a);
    rec.check(rk + kernel_basis(a).size() == c, "rank-nullity case " + std::to_string(k));
    Mat e = random_matrix(f, r, r, rng);
    while (!inverse(e)) e = random_matrix(f, r, r, rng);
    const auto ra = rref(a), rea = rref(e * a);
    rec.check(ra.pivots == rea.pivots && ra.reduced.str() == rea.reduced.str(), "rref canonicity case " + std::to_string(k));
    const Mat b = random_matrix(f, 1 + rng() % 6, c, rng);
    std::vector<Vec> ra_rows, rb_rows;
    for (std::size_t i = 0; i < a.rows(); ++i) ra_rows.push_back(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) rb_rows.push_back(b.row(i));
    const Subspace u = Subspace::span(f, c, ra_rows), w = Subspace::span(f, c, rb_rows);
    rec.check((u + w).dim() + u.intersect(w).dim() == u.dim() + w.dim(), "subspace dimension formula case " + std::to_string(k));
  }
}

CriterionResult properties(std::uint64_t seed) {
  Recorder rec(6, "Property suites");
  const auto fixtures = qh_fixtures();
  std::vector<std::unique_ptr<StandardSystem>> systems;
  for (const auto& fx : fixtures) systems.push_back(std::make_unique<StandardSystem>(fx.alg, seed));

  // Detector against exhaustive enumeration on the indecomposable tilting
  // modules over F_2. Direct sums are left out: a generator mixing summands
  // can give a stretched subquotient the per-weight test does not see.
  std::size_t compared = 0;
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    const StandardSystem& sys = *systems[k];
    if (sys.algebra()->field().characteristic() != 2) continue;
    std::vector<std::pair<std::string, Representation>> mods;
    for (std::size_t l = 0; l < sys.size(); ++l) mods.emplace_back("T(" + sys.poset().label(l) + ")", sys.tilting(l));
    for (const auto& [name, m] : mods) {
      if (m.dim() > 8) continue;
      for (Side side : {Side::DeltaL, Side::LNabla})
        for (auto kind : {FiltrationKind::Radical, FiltrationKind::Socle}) {
          const auto det = detect_stretched(sys, m, side, kind);
          const auto en = enumerate_stretched(sys, m, side, kind);
          ++compared;
          rec.check(en.applicable && det.passed == !en.found(),
                    fixtures[k].name + " " + name + " " + side_name(side) + "/" + filtration_name(kind) +
                        ": detector " + (det.passed ? "pass" : "fail") + ", enumerator " +
                        (en.found() ? "found" : "none"));
        }
    }
  }
  rec.check(compared > 0, "some modules compared");

  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    const StandardSystem& sys = *systems[k];
    const std::string& fx = fixtures[k].name;
    std::vector<std::pair<std::string, Representation>> delta_mods, nabla_mods;
    for (std::size_t l = 0; l < sys.size(); ++l) {
      const std::string lab = sys.poset().label(l);
      delta_mods.emplace_back("Delta(" + lab + ")", sys.standard(l));
      delta_mods.emplace_back("P(" + lab + ")", sys.projective_module(l));
      delta_mods.emplace_back("T(" + lab + ")", sys.tilting(l));
      nabla_mods.emplace_back("nabla(" + lab + ")", sys.costandard(l));
      nabla_mods.emplace_back("I(" + lab + ")", sys.injective(l));
      nabla_mods.emplace_back("T(" + lab + ")", sys.tilting(l));
    }

    // Every Delta-filtration agrees with the first on being radical-respecting.
    for (const auto& [name, m] : delta_mods) {
      const auto greedy = find_delta_filtration(sys, m);
      if (!rec.check(greedy.ok(), fx + " " + name + " has a Delta-filtration")) continue;
      const bool respecting = check_radical_respecting(sys, m, *greedy.filtration);
      for (std::uint64_t s = 0; s < 8; ++s) {
        const auto chain = random_delta_chain(sys, m, seed * 1000 + s);
        if (!rec.check(chain.has_value(), fx + " " + name + " random chain")) continue;
        const auto f = delta_filtration_from_chain(sys, m, *chain);
        if (!rec.check(f.ok(), fx + " " + name + " random chain is a Delta-filtration: " + f.witness)) continue;
        rec.check(check_radical_respecting(sys, m, *f.filtration) == respecting,
                  fx + " " + name + " radical-respecting independent of the filtration");
      }
    }

    // dim Hom(M, N) = sum [M:Delta(l)][N:nabla(l)].
    for (const auto& [mn, m] : delta_mods) {
      const auto fm = find_delta_filtration(sys, m);
      if (!fm.ok()) continue;
      const auto dm = delta_multiplicities(sys, *fm.filtration);
      for (const auto& [nn, n] : nabla_mods) {
        const auto fn = find_nabla_filtration(sys, n);
        if (!rec.check(fn.ok(), fx + " " + nn + " has a nabla-filtration")) continue;
        const auto dn = delta_multiplicities(sys.dual_system(), *fn.filtration);
        std::size_t predicted = 0;
        for (std::size_t l = 0; l < sys.size(); ++l) predicted += dm[l] * dn[l];
        const std::size_t actual = hom_space(m, n).size();
        rec.check(actual == predicted, fx + " dim Hom(" + mn + ", " + nn + ") = " + std::to_string(actual) +
                                           ", formula gives " + std::to_string(predicted));
      }
    }

    // A duality fixing simples exchanges socle and radical layers.
    if (sys.algebra()->has_duality()) {
      for (const auto& [name, m] : delta_mods) {
        const Representation d = sys.dual(m);
        rec.check(socle_profile(d) == radical_profile(m) && radical_profile(d) == socle_profile(m),
                  fx + " duality exchanges socle and radical layers of " + name);
      }
    }
  }

  linalg_properties(rec, seed);
  return rec.finish();
}

CriterionResult negative_controls() {
  Recorder rec(7, "Negative controls");
  {
    StandardSystem sys(load_algebra("sl2block_reversed"));
    const auto qh = check_quasihereditary(sys);
    bool axiom_ii_fails = false;
    for (const auto& w : qh.weights) axiom_ii_fails = axiom_ii_fails || !w.axiom_ii;
    rec.check(!qh.quasi_hereditary && axiom_ii_fails, "reversed sl2-block fails axiom (ii)");
  }
  {
    const BlockData& b = block();
    const auto r = bgg_symmetry_check(corrupted_projectives(b, b.index("1"), 2, "3"), b);
    rec.check(!r.passed, "corrupted table fails the symmetry check");
    rec.check(r.witness == std::make_tuple(std::size_t{2}, b.index("1"), b.index("3")),
              "witness (s, lambda, mu) = (2, 1, 3): " + r.message);
  }
  {
    const WeightPoset order({"1", "2", "3"}, {{0, 1}, {1, 2}});
    const std::set<std::pair<std::string, std::string>> rad1 = {{"1", "3"}};
    auto base = [] {
      CoefficientQuiver cq;
      cq.add_node("1", 0);
      cq.add_node("2", 1);
      cq.add_node("3", 2);
      cq.add_edge(0, 1);
      cq.add_edge(1, 2);
      return cq;
    };
    auto all = [](const PruneReport& r, bool possible) {
      if (!r.applicable || r.candidates.empty()) return false;
      for (const auto& c : r.candidates)
        if (c.possible != possible) return false;
      return true;
    };
    const CoefficientQuiver bare = base();
    rec.check(all(lemma_prune(bare, "1", "3", order, rad1), false), "bare pattern is IMPOSSIBLE");
    CoefficientQuiver second_via = base();
    const auto v = second_via.add_node("2", 1);
    second_via.add_edge(0, v);
    second_via.add_edge(v, 2);
    rec.check(all(lemma_prune(second_via, "1", "3", order, rad1), true), "second copy of lambda' is POSSIBLE");
    CoefficientQuiver second_lambda = base();
    const auto a = second_lambda.add_node("1", 0);
    second_lambda.add_edge(a, 1);
    rec.check(all(lemma_prune(second_lambda, "1", "3", order, rad1), true), "second copy of lambda is POSSIBLE");
  }
  return rec.finish();
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const std::vector<std::string> titles = {"",
                                           "SL4 projective reconstruction",
                                           "SL4 tilting reconstruction",
                                           "Wall-crossing characters",
                                           "Layered BGG symmetry of SL4 projectives",
                                           "sl2-block end-to-end",
                                           "Property suites",
                                           "Negative controls"};
  try {
    switch (id) {
      case 1: return projectives();
      case 2: return tiltings();
      case 3: return wall_crossing();
      case 4: return bgg_symmetry();
      case 5: return sl2_end_to_end();
      case 6: return properties(seed);
      case 7: return negative_controls();
      default: break;
    }
  } catch (const std::exception& e) {
    CriterionResult r;
    r.id = id;
    r.title = titles.at(static_cast<std::size_t>(id));
    r.passed = false;
    r.notes.push_back(std::string("exception: ") + e.what());
    return r;
  }
  throw std::out_of_range("no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_criterion(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title;
  return os.str();
}

}  // namespace qhr
