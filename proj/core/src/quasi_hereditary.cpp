#include "qhrigid/quasi_hereditary.hpp"

#include <algorithm>
#include <random>

namespace qhr {

// ---------------------------------------------------------------------------
// WeightPoset

WeightPoset::WeightPoset(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& covers)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : covers) {
    if (a >= n || b >= n) throw InputError("order relation mentions an unknown weight");
    leq_[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i]) throw InputError("weight order has a cycle through '" + labels_[i] + "'");
}

WeightPoset WeightPoset::from_algebra(const Algebra& alg) {
  return WeightPoset(alg.quiver().labels(), alg.spec().order_covers);
}

std::optional<std::size_t> WeightPoset::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<std::size_t> WeightPoset::maximal(const std::vector<std::size_t>& set) const {
  std::vector<std::size_t> out;
  for (auto a : set) {
    bool dominated = false;
    for (auto b : set)
      if (lt(a, b)) dominated = true;
    if (!dominated && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
  return out;
}

// ---------------------------------------------------------------------------
// StandardSystem

StandardSystem::StandardSystem(AlgebraPtr alg, std::uint64_t seed)
    : alg_(std::move(alg)), seed_(seed), poset_(WeightPoset::from_algebra(*alg_)) {
  build();
}

void StandardSystem::build() {
  for (std::size_t l = 0; l < poset_.size(); ++l) {
    simples_.push_back(simple(alg_, l));
    std::vector<Path> paths;
    projectives_.push_back(projective(alg_, l, &paths));
    paths_.push_back(std::move(paths));
    const Representation& p = projectives_.back();
    std::vector<Vec> gens;
    for (std::size_t mu = 0; mu < poset_.size(); ++mu)
      if (!poset_.le(mu, l))
        for (auto& v : p.vertex_basis(mu)) gens.push_back(std::move(v));
    deltas_.push_back(subquotient(p, p.full(), spin(p, gens)));
  }
}

const StandardSystem& StandardSystem::dual_system() const {
  if (alg_->has_duality()) return *this;
  if (origin_) return *origin_;
  if (!opposite_) {
    opposite_ = std::make_shared<StandardSystem>(std::make_shared<const Algebra>(alg_->opposite()), seed_);
    opposite_->origin_ = this;
  }
  return *opposite_;
}

Representation StandardSystem::dual(const Representation& m) const {
  if (alg_->has_duality()) return duality_dual(m);
  return transpose_dual(m, dual_system().algebra());
}

const Representation& StandardSystem::costandard(std::size_t l) const {
  auto it = costandard_cache_.find(l);
  if (it == costandard_cache_.end()) {
    const StandardSystem& d = dual_system();
    it = costandard_cache_.emplace(l, d.dual(d.standard(l))).first;
  }
  return it->second;
}

const Representation& StandardSystem::injective(std::size_t l) const {
  auto it = injective_cache_.find(l);
  if (it == injective_cache_.end()) {
    const StandardSystem& d = dual_system();
    it = injective_cache_.emplace(l, d.dual(d.projective_module(l))).first;
  }
  return it->second;
}

const Representation& StandardSystem::tilting(std::size_t l) const {
  auto it = tilting_cache_.find(l);
  if (it == tilting_cache_.end()) it = tilting_cache_.emplace(l, ringel_tilting(*this, l)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Delta-filtrations

namespace {

std::size_t depth_count(const Representation& q, const Chain& f, std::size_t s, std::size_t v) {
  return s < f.size() ? q.dim_at(f[s], v) : 0;
}

}  // namespace

DeltaFiltrationResult find_delta_filtration(const StandardSystem& sys, const Representation& m) {
  DeltaFiltrationResult res;
  const WeightPoset& poset = sys.poset();
  Representation q = m;
  Chain f = radical_series(m);
  std::vector<DeltaStep> bottom_first;
  while (q.dim() > 0) {
    std::vector<std::size_t> present;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
      if (q.dim_at(v) > 0) present.push_back(v);
    const std::size_t l = poset.maximal(present).front();
    const Representation& delta = sys.standard(l);
    const std::size_t k = q.dim_at(l);
    res.failing_label = l;
    if (delta.dim_at(l) != 1) {
      res.witness = "[Delta(" + poset.label(l) + "):L(" + poset.label(l) + ")] = " + std::to_string(delta.dim_at(l));
      return res;
    }
    Subspace u = spin(q, q.vertex_basis(l));
    for (std::size_t mu = 0; mu < poset.size(); ++mu)
      if (!poset.le(mu, l) && q.dim_at(u, mu) > 0) {
        res.witness = "trace of P(" + poset.label(l) + ") has composition factor L(" + poset.label(mu) + ")";
        return res;
      }
    if (u.dim() != k * delta.dim()) {
      res.witness = "trace of P(" + poset.label(l) + ") has dimension " + std::to_string(u.dim()) + ", expected " +
                    std::to_string(k * delta.dim()) + " for Delta(" + poset.label(l) + ")^" + std::to_string(k);
      return res;
    }
    // Head depths of the k copies, deepest first.
    std::vector<DeltaStep> batch;
    for (std::size_t s = 0; s < f.size(); ++s) {
      const std::size_t here = depth_count(q, f, s, l) - depth_count(q, f, s + 1, l);
      for (std::size_t c = 0; c < here; ++c) batch.push_back({l, s});
    }
    std::reverse(batch.begin(), batch.end());
    bottom_first.insert(bottom_first.end(), batch.begin(), batch.end());
    Subquotient sq = subquotient(q, q.full(), u);
    f = sq.induced(f);
    q = sq.rep;
  }
  res.failing_label.reset();
  res.filtration = DeltaFiltration{{bottom_first.rbegin(), bottom_first.rend()}};
  return res;
}

DeltaFiltrationResult delta_filtration_from_chain(const StandardSystem& sys, const Representation& m,
                                                  const Chain& ascending) {
  DeltaFiltrationResult res;
  const WeightPoset& poset = sys.poset();
  if (ascending.empty() || !ascending.front().is_zero() || !(ascending.back() == m.full())) {
    res.witness = "chain must run from 0 to M";
    return res;
  }
  const Chain rad = radical_series(m);
  std::vector<DeltaStep> top_first;
  for (std::size_t i = ascending.size() - 1; i >= 1; --i) {
    Subquotient sq = subquotient(m, ascending[i], ascending[i - 1]);
    const Representation& q = sq.rep;
    const Chain qrad = radical_series(q);
    const Subspace r1 = qrad.size() > 1 ? qrad[1] : q.zero_sub();
    if (q.dim() - r1.dim() != 1) {
      res.witness = "quotient " + std::to_string(i) + " does not have a simple head";
      return res;
    }
    std::size_t l = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
      if (q.dim_at(v) > q.dim_at(r1, v)) l = v;
    res.failing_label = l;
    if (q.dims() != sys.standard(l).dims()) {
      res.witness = "quotient " + std::to_string(i) + " is not Delta(" + poset.label(l) + ")";
      return res;
    }
    for (std::size_t mu = 0; mu < poset.size(); ++mu)
      if (!poset.le(mu, l) && q.dim_at(mu) > 0) {
        res.witness = "quotient " + std::to_string(i) + " is not Delta(" + poset.label(l) + ")";
        return res;
      }
    const Chain f = sq.induced(rad);
    std::size_t shift = 0;
    for (std::size_t s = 0; s < f.size(); ++s)
      if (q.dim_at(f[s], l) > 0) shift = s;
    top_first.push_back({l, shift});
  }
  res.failing_label.reset();
  res.filtration = DeltaFiltration{top_first};
  return res;
}

DeltaFiltrationResult find_nabla_filtration(const StandardSystem& sys, const Representation& m) {
  return find_delta_filtration(sys.dual_system(), sys.dual(m));
}

LoewyProfile predicted_profile(const StandardSystem& sys, const DeltaFiltration& f) {
  const WeightPoset& poset = sys.poset();
  std::vector<std::vector<std::size_t>> counts;
  for (const auto& step : f.steps) {
    const LoewyProfile p = radical_profile(sys.standard(step.label));
    for (std::size_t t = 0; t < p.layers.size(); ++t) {
      const std::size_t layer = step.shift + t;
      if (counts.size() <= layer) counts.resize(layer + 1, std::vector<std::size_t>(poset.size(), 0));
      for (const auto& lab : p.layers[t]) ++counts[layer][*poset.find(lab)];
    }
  }
  LoewyProfile out;
  for (const auto& c : counts) {
    std::vector<std::string> layer;
    for (std::size_t v = 0; v < c.size(); ++v)
      for (std::size_t k = 0; k < c[v]; ++k) layer.push_back(poset.label(v));
    out.layers.push_back(std::move(layer));
  }
  return out;
}

std::optional<Chain> random_delta_chain(const StandardSystem& sys, const Representation& m, std::uint64_t seed) {
  if (!find_delta_filtration(sys, m).ok()) return std::nullopt;
  std::mt19937_64 rng(seed);
  const Field& f = m.field();
  auto coefficient = [&]() {
    if (f.is_rational()) return Rational(static_cast<long>(rng() % 5) - 2);
    return Rational(static_cast<long>(rng() % f.characteristic()));
  };
  Chain chain{m.zero_sub()};
  Subspace bottom = m.zero_sub();
  while (!(bottom == m.full())) {
    const Subquotient sq = subquotient(m, m.full(), bottom);
    const Representation& q = sq.rep;
    std::vector<std::size_t> present;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
      if (q.dim_at(v) > 0) present.push_back(v);
    const std::size_t l = sys.poset().maximal(present).front();
    const auto basis = q.vertex_basis(l);
    auto lift = [&](const Subspace& sub) {
      std::vector<Vec> vs = bottom.basis();
      for (const auto& w : sub.basis()) {
        Vec x = f.zero_vec(m.dim());
        for (std::size_t i = 0; i < w.size(); ++i)
          if (sgn(w[i]) != 0) x = vec_add(f, x, vec_scale(f, w[i], sq.lift[i]));
        vs.push_back(std::move(x));
      }
      return Subspace::span(f, m.dim(), vs);
    };
    // One standard section per random generator of the top part at l.
    Subspace spun = q.zero_sub();
    while (q.dim_at(spun, l) < basis.size()) {
      Vec g = f.zero_vec(q.dim());
      for (const auto& b : basis) g = vec_add(f, g, vec_scale(f, coefficient(), b));
      if (spun.contains(g)) continue;
      std::vector<Vec> gens = spun.basis();
      gens.push_back(g);
      spun = spin(q, gens);
      chain.push_back(lift(spun));
    }
    bottom = chain.back();
  }
  return chain;
}

bool check_radical_respecting(const StandardSystem& sys, const Representation& m, const DeltaFiltration& f) {
  return predicted_profile(sys, f) == radical_profile(m);
}

std::vector<std::size_t> delta_multiplicities(const StandardSystem& sys, const DeltaFiltration& f) {
  std::vector<std::size_t> out(sys.size(), 0);
  for (const auto& s : f.steps) ++out[s.label];
  return out;
}

// ---------------------------------------------------------------------------
// Axioms, tilting modules, BGG

QHReport check_quasihereditary(const StandardSystem& sys) {
  QHReport rep;
  rep.quasi_hereditary = true;
  for (std::size_t l = 0; l < sys.size(); ++l) {
    QHWeightReport w;
    w.label = l;
    w.end_dim = hom_space(sys.standard(l), sys.standard(l)).size();
    w.axiom_i = w.end_dim == 1;
    w.filtration = find_delta_filtration(sys, sys.projective_module(l));
    w.axiom_ii = w.filtration.ok();
    if (w.axiom_ii) {
      std::size_t own = 0;
      bool above = true;
      for (const auto& s : w.filtration.filtration->steps) {
        if (s.label == l) ++own;
        else if (!sys.poset().lt(l, s.label)) above = false;
      }
      w.heredity_order = own == 1 && above;
    }
    if (!(w.axiom_i && w.axiom_ii && w.heredity_order)) rep.quasi_hereditary = false;
    rep.weights.push_back(std::move(w));
  }
  return rep;
}

Representation ringel_tilting(const StandardSystem& sys, std::size_t l) {
  const WeightPoset& poset = sys.poset();
  Representation x = sys.standard(l);
  std::size_t max_proj = 1;
  for (std::size_t mu = 0; mu < sys.size(); ++mu) max_proj = std::max(max_proj, sys.projective_module(mu).dim());
  const std::size_t bound = poset.size() * max_proj * 10;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > bound) throw std::runtime_error("tilting construction did not stabilize");
    std::vector<std::size_t> pending;
    for (std::size_t mu = 0; mu < sys.size(); ++mu)
      if (ext1(sys.standard(mu), x).dim > 0) pending.push_back(mu);
    if (pending.empty()) break;
    const std::size_t mu = poset.maximal(pending).front();
    x = universal_extension(x, sys.standard(mu)).rep;
  }
  Decomposition d = decompose(x, sys.seed());
  for (auto& s : d.summands)
    if (s.rep.dim_at(l) > 0) return s.rep;
  throw std::runtime_error("tilting construction lost the highest weight");
}

BGGReport check_bgg(const StandardSystem& sys) {
  BGGReport rep;
  const Algebra& alg = *sys.algebra();
  if (!alg.has_duality()) {
    rep.message = "not a BGG presentation";
    return rep;
  }
  rep.applicable = true;
  for (std::size_t l = 0; l < sys.size(); ++l) {
    Representation d = duality_dual(sys.simple_module(l));
    if (d.dims() != sys.simple_module(l).dims()) {
      rep.message = "duality does not fix L(" + sys.poset().label(l) + ")";
      return rep;
    }
  }
  std::vector<LoewyProfile> profiles;
  std::size_t longest = 0;
  for (std::size_t l = 0; l < sys.size(); ++l) {
    profiles.push_back(radical_profile(sys.projective_module(l)));
    longest = std::max(longest, profiles.back().length());
  }
  auto count = [&](std::size_t p, std::size_t s, std::size_t l) {
    if (s >= profiles[p].layers.size()) return std::size_t{0};
    const auto& layer = profiles[p].layers[s];
    return static_cast<std::size_t>(std::count(layer.begin(), layer.end(), sys.poset().label(l)));
  };
  for (std::size_t s = 0; s < longest; ++s)
    for (std::size_t l = 0; l < sys.size(); ++l)
      for (std::size_t mu = 0; mu < sys.size(); ++mu)
        if (count(mu, s, l) != count(l, s, mu)) {
          rep.witness = std::make_tuple(s, l, mu);
          rep.message = "reciprocity fails";
          return rep;
        }
  rep.passed = true;
  rep.message = "reciprocity holds";
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json profile_json(const LoewyProfile& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& layer : p.layers) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& lab : layer) obj[lab] = obj.value(lab, 0) + 1;
    out.push_back(obj);
  }
  return out;
}

nlohmann::json filtration_json(const StandardSystem& sys, const DeltaFiltration& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : f.steps) out.push_back({{"label", sys.poset().label(s.label)}, {"shift", s.shift}});
  return out;
}

nlohmann::json qh_report_json(const StandardSystem& sys, const QHReport& r) {
  nlohmann::json out;
  out["quasi_hereditary"] = r.quasi_hereditary;
  out["shift_convention"] = "shifts are non-negative radical depths of standard heads";
  out["weights"] = nlohmann::json::array();
  for (const auto& w : r.weights) {
    nlohmann::json j;
    j["label"] = sys.poset().label(w.label);
    j["end_dim"] = w.end_dim;
    j["axiom_i"] = w.axiom_i;
    j["axiom_ii"] = w.axiom_ii;
    j["heredity_order"] = w.heredity_order;
    j["standard_profile"] = profile_json(radical_profile(sys.standard(w.label)));
    if (w.filtration.ok()) {
      j["filtration"] = filtration_json(sys, *w.filtration.filtration);
    } else {
      j["filtration"] = nullptr;
      j["witness"] = w.filtration.witness;
    }
    out["weights"].push_back(j);
  }
  return out;
}

}  // namespace qhr
