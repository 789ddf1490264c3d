#include "qhrigid/rigidity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qhr {

std::string side_name(Side s) { return s == Side::DeltaL ? "deltaL" : "Lnabla"; }

std::string filtration_name(FiltrationKind k) { return k == FiltrationKind::Radical ? "radical" : "socle"; }

const Subspace& filtration_level(const Chain& descending, long i, const Subspace& zero) {
  if (i < 0) return descending.front();
  if (static_cast<std::size_t>(i) >= descending.size()) return zero;
  return descending[static_cast<std::size_t>(i)];
}

Chain descending_filtration(const Representation& m, FiltrationKind kind) {
  if (kind == FiltrationKind::Radical) return radical_series(m);
  Chain soc = socle_series(m);
  std::reverse(soc.begin(), soc.end());
  return soc;
}

Chain dual_filtration(const Chain& descending) {
  Chain out;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) out.push_back(it->annihilator());
  return out;
}

namespace {

std::size_t vertex_of_vec(const Representation& m, const Vec& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) return m.vertex_of(i);
  return 0;
}

// Rows of ann(target) * g for a global matrix g.
void append_rows(std::vector<Vec>& rows, const Subspace& target, const Mat& g) {
  if (target.dim() == target.ambient()) return;
  const Mat ann = target.annihilator().basis_rows();
  if (ann.rows() == 0) return;
  const Mat prod = ann * g;
  for (std::size_t r = 0; r < prod.rows(); ++r) {
    Vec row = prod.row(r);
    if (!is_zero(row)) rows.push_back(std::move(row));
  }
}

Subspace solution_space(const Field& f, std::size_t n, const std::vector<Vec>& rows) {
  if (rows.empty()) return Subspace::full(f, n);
  return Subspace::span(f, n, kernel_basis(Mat::from_rows(f, n, rows)));
}

// For a module M and a weight l: g_t(p) = p . t for t in M_l, as matrices
// M.dim() x dim M_l, one per basis path of P(l).
struct PathAction {
  std::vector<Mat> per_path;
  std::size_t width = 0;

  [[nodiscard]] Mat of(const Field& f, std::size_t height, const Vec& element) const {
    Mat out(f, height, width);
    for (std::size_t p = 0; p < per_path.size(); ++p) {
      if (sgn(element[p]) == 0) continue;
      out = out + per_path[p].scaled(element[p]);
    }
    return out;
  }
};

PathAction path_action(const Representation& m, const std::vector<Path>& paths, std::size_t l) {
  PathAction pa;
  pa.width = m.dim_at(l);
  const auto basis = m.vertex_basis(l);
  for (const auto& p : paths) {
    std::vector<Vec> cols;
    for (const auto& t : basis) cols.push_back(m.act_path(p, t));
    pa.per_path.push_back(Mat::from_columns(m.field(), m.dim(), cols));
  }
  return pa;
}

// {t in M_l : g_t(S_k) in target_k for all k}, coordinates in M_l.
Subspace hom_condition(const Representation& m, const PathAction& pa,
                       const std::vector<std::pair<Subspace, const Subspace*>>& conditions) {
  std::vector<Vec> rows;
  for (const auto& [src, tgt] : conditions)
    for (const auto& w : src.basis()) append_rows(rows, *tgt, pa.of(m.field(), m.dim(), w));
  return solution_space(m.field(), pa.width, rows);
}

Vec to_global(const Representation& m, std::size_t l, const Vec& local) {
  Vec out = m.field().zero_vec(m.dim());
  for (std::size_t i = 0; i < local.size(); ++i) out[m.offset(l) + i] = local[i];
  return out;
}

struct LambdaData {
  PathAction action;
  Chain rad_p;
  Subspace omega;
};

LambdaData lambda_data(const StandardSystem& sys, const Representation& m, std::size_t l) {
  LambdaData d;
  d.action = path_action(m, sys.projective_paths(l), l);
  d.rad_p = radical_series(sys.projective_module(l));
  d.omega = sys.standard_quotient(l).inner;
  return d;
}

struct ShiftSpaces {
  Subspace g, h, k;
};

ShiftSpaces shift_spaces(const Representation& m, const LambdaData& d, const Chain& filtration, long s) {
  const Subspace zero = m.zero_sub();
  std::vector<std::pair<Subspace, const Subspace*>> g_cond, h_cond;
  for (std::size_t i = 0; i < d.rad_p.size(); ++i) {
    const Subspace& tgt = filtration_level(filtration, static_cast<long>(i) + s, zero);
    g_cond.emplace_back(d.rad_p[i].intersect(d.omega), &tgt);
    h_cond.emplace_back(d.rad_p[i], &tgt);
  }
  ShiftSpaces out;
  out.g = hom_condition(m, d.action, g_cond);
  out.h = hom_condition(m, d.action, h_cond);
  out.k = hom_condition(m, d.action, {{d.omega, &zero}});
  return out;
}

std::pair<long, long> shift_range(const StandardSystem& sys, const Chain& filtration) {
  long len = static_cast<long>(filtration.size()) - 1;
  long plen = 0;
  for (std::size_t l = 0; l < sys.size(); ++l)
    plen = std::max(plen, static_cast<long>(loewy_length(sys.projective_module(l))));
  return {-std::max(len, plen), len};
}

}  // namespace

FilteredHomSpace filtered_hom(const Representation& m, const Chain& fm, const Representation& n, const Chain& fn,
                              long r) {
  FilteredHomSpace out;
  out.source = m;
  out.target = n;
  out.shift = r;
  const Subspace zero = n.zero_sub();
  std::vector<HomConstraint> cons;
  for (std::size_t i = 0; i < fm.size(); ++i)
    cons.push_back({fm[i], filtration_level(fn, static_cast<long>(i) + r, zero)});
  out.basis = hom_space(m, n, cons);
  return out;
}

FilteredHomSpace filtered_hom(const Representation& m, const Representation& n, long r) {
  return filtered_hom(m, radical_series(m), n, radical_series(n), r);
}

FilteredExtResult filtered_ext1_delta(const StandardSystem& sys, std::size_t l, long r, const Representation& t) {
  FilteredExtResult res;
  res.label = l;
  res.shift = r;
  const Field& f = t.field();
  const Representation& p = sys.projective_module(l);
  const std::vector<Path>& p_paths = sys.projective_paths(l);
  const Chain rad_p = radical_series(p);
  const Subspace& omega = sys.standard_quotient(l).inner;
  const Quiver& q = p.algebra().quiver();

  // Generators x_j of Omega with depths m_j, chosen level by level so that
  // F^i P1 maps onto rad^i P cap Omega.
  struct Gen {
    Vec x;
    std::size_t vertex;
    std::size_t depth;
  };
  std::vector<Gen> gens;
  for (std::size_t i = 0; i < rad_p.size(); ++i) {
    const Subspace level = rad_p[i].intersect(omega);
    if (level.is_zero()) continue;
    std::vector<Vec> span;
    for (const auto& g : gens)
      for (const auto& path : sys.projective_paths(g.vertex))
        if (path.length() + g.depth >= i) span.push_back(p.act_path(path, g.x));
    for (const auto& w : level.basis())
      for (std::size_t a = 0; a < q.arrow_count(); ++a) span.push_back(p.act_arrow(a, w));
    const Subspace covered = Subspace::span(f, p.dim(), span);
    for (auto& x : covered.intersect(level).complement_in(level))
      gens.push_back({x, vertex_of_vec(p, x), i});
  }

  // d: P1 -> P(l) and its kernel.
  std::vector<Vec> d_cols;
  std::vector<std::pair<std::size_t, const Path*>> p1_index;  // (generator, path)
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (const auto& path : sys.projective_paths(gens[j].vertex)) {
      d_cols.push_back(p.act_path(path, gens[j].x));
      p1_index.emplace_back(j, &path);
    }
  const std::size_t p1_dim = d_cols.size();
  std::vector<Vec> ker;
  if (p1_dim > 0) ker = kernel_basis(Mat::from_columns(f, p.dim(), d_cols));

  // Cochains: y = (y_j) with y_j in T at vertex mu_j.
  std::vector<std::size_t> y_off(gens.size() + 1, 0);
  for (std::size_t j = 0; j < gens.size(); ++j) y_off[j + 1] = y_off[j] + t.dim_at(gens[j].vertex);
  const std::size_t ny = y_off.back();

  const Chain rad_t = radical_series(t);
  const Subspace zero_t = t.zero_sub();
  std::vector<Vec> rows;
  for (const auto& kappa : ker) {
    Mat block(f, t.dim(), ny);
    for (std::size_t c = 0; c < p1_dim; ++c) {
      if (sgn(kappa[c]) == 0) continue;
      const auto [j, path] = p1_index[c];
      const std::size_t v = gens[j].vertex;
      const auto basis = t.vertex_basis(v);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        Vec img = t.act_path(*path, basis[k]);
        for (std::size_t row = 0; row < t.dim(); ++row)
          if (sgn(img[row]) != 0) block.set(row, y_off[j] + k, f.add(block(row, y_off[j] + k), f.mul(kappa[c], img[row])));
      }
    }
    for (std::size_t row = 0; row < block.rows(); ++row) {
      Vec rv = block.row(row);
      if (!is_zero(rv)) rows.push_back(std::move(rv));
    }
  }
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const std::size_t v = gens[j].vertex;
    const Subspace& tgt = filtration_level(rad_t, static_cast<long>(gens[j].depth) + r, zero_t);
    const Subspace ann = tgt.annihilator();
    for (const auto& a : ann.basis()) {
      Vec row = f.zero_vec(ny);
      bool any = false;
      for (std::size_t k = 0; k < t.dim_at(v); ++k) {
        row[y_off[j] + k] = a[t.offset(v) + k];
        any = any || sgn(a[t.offset(v) + k]) != 0;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  const Subspace cocycles = solution_space(f, ny, rows);

  // Coboundaries from t in T_l cap rad^r T.
  std::vector<Vec> cob;
  const Subspace src = t.vertex_part(filtration_level(rad_t, r, zero_t), l);
  for (const auto& tv : src.basis()) {
    Vec y = f.zero_vec(ny);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Vec img = f.zero_vec(t.dim());
      for (std::size_t k = 0; k < p_paths.size(); ++k)
        if (sgn(gens[j].x[k]) != 0) img = vec_add(f, img, vec_scale(f, gens[j].x[k], t.act_path(p_paths[k], tv)));
      const std::size_t v = gens[j].vertex;
      for (std::size_t k = 0; k < t.dim_at(v); ++k) y[y_off[j] + k] = img[t.offset(v) + k];
    }
    cob.push_back(std::move(y));
  }
  const Subspace coboundaries = Subspace::span(f, ny, cob);
  if (!cocycles.contains(coboundaries)) throw DimensionError("filtered coboundary is not a cocycle");
  res.cocycle_dim = cocycles.dim();
  res.coboundary_dim = coboundaries.dim();
  res.dim = res.cocycle_dim - res.coboundary_dim;
  return res;
}

namespace {

// A vector of G outside both H and K; G is contained in neither.
Vec union_witness(const ShiftSpaces& sp) {
  const auto not_h = sp.h.intersect(sp.g).complement_in(sp.g);
  const auto not_k = sp.k.intersect(sp.g).complement_in(sp.g);
  for (const auto& v : not_h)
    if (!sp.k.contains(v)) return v;
  for (const auto& v : not_k)
    if (!sp.h.contains(v)) return v;
  return vec_add(sp.g.field(), not_h.front(), not_k.front());
}

}  // namespace

StretchCheck stretch_check(const StandardSystem& sys, const Representation& m, const Chain& filtration) {
  StretchCheck out;
  const auto [lo, hi] = shift_range(sys, filtration);
  for (std::size_t l = 0; l < sys.size(); ++l) {
    if (m.dim_at(l) == 0) continue;
    const LambdaData d = lambda_data(sys, m, l);
    for (long s = lo; s <= hi; ++s) {
      const ShiftSpaces sp = shift_spaces(m, d, filtration, s);
      StretchEntry e;
      e.label = l;
      e.shift = s;
      // A vector space lies in H u K only when it lies in one of them.
      if (!sp.h.contains(sp.g) && !sp.k.contains(sp.g)) {
        e.pass = false;
        e.witnesses.push_back(to_global(m, l, union_witness(sp)));
        out.passed = false;
      }
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

bool witness_is_valid(const StandardSystem& sys, const Representation& m, const Chain& filtration,
                      const StretchEntry& entry, const Vec& witness) {
  if (witness.size() != m.dim()) return false;
  Vec local(witness.begin() + static_cast<long>(m.offset(entry.label)),
            witness.begin() + static_cast<long>(m.offset(entry.label) + m.dim_at(entry.label)));
  if (!is_zero(vec_sub(m.field(), witness, to_global(m, entry.label, local)))) return false;
  const LambdaData d = lambda_data(sys, m, entry.label);
  const ShiftSpaces sp = shift_spaces(m, d, filtration, entry.shift);
  return sp.g.contains(local) && !sp.h.contains(local) && !sp.k.contains(local);
}

StretchCheck detect_stretched(const StandardSystem& sys, const Representation& t, Side side, FiltrationKind kind) {
  const Chain f = descending_filtration(t, kind);
  StretchCheck c = side == Side::DeltaL ? stretch_check(sys, t, f)
                                        : stretch_check(sys.dual_system(), sys.dual(t), dual_filtration(f));
  c.side = side;
  c.kind = kind;
  return c;
}

StretchReport detect_stretched(const StandardSystem& sys, const Representation& t, Side side) {
  StretchReport r;
  r.side = side;
  for (auto kind : {FiltrationKind::Radical, FiltrationKind::Socle}) {
    r.checks.push_back(detect_stretched(sys, t, side, kind));
    r.passed = r.passed && r.checks.back().passed;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

namespace {

std::string subspace_key(const Subspace& s) { return s.basis_rows().str(); }

std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vec> out{f.zero_vec(n)};
  const unsigned long p = f.characteristic();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (unsigned long c = 0; c < p; ++c) {
        Vec w = v;
        w[i] = Rational(static_cast<long>(c));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

bool vectors_fit(const Field& f, std::size_t n, std::size_t max_vectors) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= f.characteristic();
    if (count > max_vectors) return false;
  }
  return true;
}

}  // namespace

EnumerationResult enumerate_stretched(const StandardSystem& sys, const Representation& m, const Chain& filtration,
                                      std::size_t max_vectors) {
  EnumerationResult res;
  const Field& f = m.field();
  if (f.is_rational()) {
    res.reason = "field is infinite";
    return res;
  }
  if (!vectors_fit(f, m.dim(), max_vectors)) {
    res.reason = "module too large for enumeration";
    return res;
  }
  res.applicable = true;

  const std::vector<Vec> vectors = all_vectors(f, m.dim());
  std::vector<Subspace> subs{m.zero_sub()};
  std::set<std::string> seen{subspace_key(subs[0])};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    std::vector<Vec> seeds = subs[i].basis();
    for (const auto& v : vectors) {
      if (subs[i].contains(v)) continue;
      seeds.push_back(v);
      Subspace s = spin(m, seeds);
      seeds.pop_back();
      if (seen.insert(subspace_key(s)).second) subs.push_back(std::move(s));
    }
  }
  res.submodules = subs.size();

  const WeightPoset& poset = sys.poset();
  for (std::size_t l = 0; l < sys.size(); ++l) {
    if (m.dim_at(l) == 0) continue;
    const std::vector<Vec> local = all_vectors(f, m.dim_at(l));
    for (const auto& inner : subs) {
      std::set<std::string> outers;
      for (const auto& lv : local) {
        const Vec x = to_global(m, l, lv);
        if (inner.contains(x)) continue;
        std::vector<Vec> seeds = inner.basis();
        seeds.push_back(x);
        const Subspace outer = spin(m, seeds);
        if (!outers.insert(subspace_key(outer)).second) continue;
        const Subquotient sq = subquotient(m, outer, inner);
        const auto factors = composition_factors(sq.rep);
        std::optional<std::size_t> top;
        bool shape = true;
        for (std::size_t v = 0; v < factors.size() && shape; ++v) {
          if (factors[v] == 0 || poset.le(v, l)) continue;
          if (top || factors[v] != 1 || !poset.lt(l, v)) shape = false;
          top = v;
        }
        if (!shape || !top) continue;
        const Chain soc = socle_series(sq.rep);
        if (sq.rep.dim_at(soc[1], *top) != 1) continue;
        ++res.candidates;

        const Chain induced = sq.induced(filtration);
        const Subspace zero = sq.rep.zero_sub();
        long head = 0;
        while (static_cast<std::size_t>(head + 1) < induced.size() &&
               induced[static_cast<std::size_t>(head + 1)].dim() == sq.rep.dim())
          ++head;
        const Chain rad = radical_series(sq.rep);
        bool same = true;
        for (long i = 0; i <= static_cast<long>(induced.size()) + static_cast<long>(rad.size()) && same; ++i)
          same = filtration_level(induced, i, zero) == filtration_level(rad, i - head, zero);
        if (!same) res.stretched.push_back({l, *top, x, inner, outer});
      }
    }
  }
  return res;
}

EnumerationResult enumerate_stretched(const StandardSystem& sys, const Representation& t, Side side,
                                      FiltrationKind kind, std::size_t max_vectors) {
  const Chain f = descending_filtration(t, kind);
  if (side == Side::DeltaL) return enumerate_stretched(sys, t, f, max_vectors);
  return enumerate_stretched(sys.dual_system(), sys.dual(t), dual_filtration(f), max_vectors);
}

// ---------------------------------------------------------------------------
// Pipeline

PipelineReport rigidity_pipeline(const StandardSystem& sys, std::size_t l, Method method) {
  PipelineReport rep;
  rep.label = l;
  rep.hypothesis = true;
  for (std::size_t mu = 0; mu < sys.size(); ++mu) {
    const Representation& p = sys.projective_module(mu);
    const auto filt = find_delta_filtration(sys, p);
    if (!filt.ok() || !check_radical_respecting(sys, p, *filt.filtration)) {
      rep.hypothesis = false;
      rep.not_radical_respecting.push_back(mu);
    }
  }
  rep.tilting = sys.tilting(l);
  rep.profile = radical_profile(rep.tilting);
  const auto tf = find_delta_filtration(sys, rep.tilting);
  rep.filtration_radical_respecting = tf.ok() && check_radical_respecting(sys, rep.tilting, *tf.filtration);

  if (method != Method::Oracle) {
    rep.delta_l = detect_stretched(sys, rep.tilting, Side::DeltaL);
    rep.l_nabla = detect_stretched(sys, rep.tilting, Side::LNabla);
    const long len = static_cast<long>(loewy_length(rep.tilting));
    for (std::size_t mu = 0; mu < sys.size(); ++mu)
      for (long r = -len; r <= len; ++r) rep.filtered_ext.push_back(filtered_ext1_delta(sys, mu, r, rep.tilting));
    if (rep.hypothesis && rep.delta_l->passed && rep.l_nabla->passed) rep.rigid_theorem = true;
  }
  if (method != Method::Theorem) rep.rigid_oracle = is_rigid(rep.tilting).rigid;

  if (rep.rigid_theorem && rep.rigid_oracle && *rep.rigid_theorem != *rep.rigid_oracle) {
    rep.consistent = false;
    rep.errors.push_back("theorem path claims rigid but the direct check disagrees");
  }
  if (rep.delta_l && rep.delta_l->passed && rep.filtration_radical_respecting) {
    for (const auto& e : rep.filtered_ext)
      if (e.dim != 0) {
        rep.consistent = false;
        std::ostringstream os;
        os << "filtered Ext^1(Delta(" << sys.poset().label(e.label) << ")<" << e.shift
           << ">, T) has dimension " << e.dim << " although no stretched Delta-L subquotient was detected";
        rep.errors.push_back(os.str());
      }
  }
  if (rep.delta_l && rep.l_nabla) {
    bool agree = true;
    bool applicable = true;
    for (Side side : {Side::DeltaL, Side::LNabla})
      for (auto kind : {FiltrationKind::Radical, FiltrationKind::Socle}) {
        const auto en = enumerate_stretched(sys, rep.tilting, side, kind);
        if (!en.applicable) {
          applicable = false;
          continue;
        }
        const auto& report = side == Side::DeltaL ? *rep.delta_l : *rep.l_nabla;
        const auto& check = report.checks[kind == FiltrationKind::Radical ? 0 : 1];
        if (check.passed == en.found()) agree = false;
      }
    if (applicable) {
      rep.enumerator_agrees = agree;
      if (!agree) {
        rep.consistent = false;
        rep.errors.push_back("stretched-subquotient detector and exhaustive enumeration disagree");
      }
    }
  }
  return rep;
}

nlohmann::json vec_json(const Vec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

nlohmann::json stretch_json(const StandardSystem& sys, const StretchReport& r) {
  nlohmann::json out;
  out["passed"] = r.passed;
  out["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc;
    jc["filtration"] = filtration_name(c.kind);
    jc["passed"] = c.passed;
    jc["checked"] = c.entries.size();
    jc["failures"] = nlohmann::json::array();
    for (const auto& e : c.entries) {
      if (e.pass) continue;
      nlohmann::json je;
      je["lambda"] = sys.poset().label(e.label);
      je["s"] = e.shift;
      je["witnesses"] = nlohmann::json::array();
      for (const auto& w : e.witnesses) je["witnesses"].push_back(vec_json(w));
      jc["failures"].push_back(je);
    }
    out["checks"].push_back(jc);
  }
  return out;
}

nlohmann::json pipeline_json(const StandardSystem& sys, const PipelineReport& r) {
  const auto& poset = sys.poset();
  nlohmann::json out;
  out["lambda"] = poset.label(r.label);
  out["shift_convention"] = "shifts are non-negative radical depths";
  nlohmann::json hyp;
  hyp["projectives_radical_respecting"] = r.hypothesis;
  hyp["failing"] = nlohmann::json::array();
  for (auto mu : r.not_radical_respecting) hyp["failing"].push_back(poset.label(mu));
  out["hypothesis"] = hyp;
  out["tilting_profile"] = profile_json(r.profile);
  out["tilting_filtration_radical_respecting"] = r.filtration_radical_respecting;
  nlohmann::json st = nlohmann::json::object();
  if (r.delta_l) st["deltaL"] = stretch_json(sys, *r.delta_l);
  if (r.l_nabla) st["Lnabla"] = stretch_json(sys, *r.l_nabla);
  out["stretched"] = st;
  out["filteredExt"] = nlohmann::json::array();
  for (const auto& e : r.filtered_ext)
    out["filteredExt"].push_back({{"lambda", poset.label(e.label)}, {"r", e.shift}, {"dim", e.dim}});
  if (r.rigid_theorem)
    out["rigid_theorem"] = *r.rigid_theorem;
  else
    out["rigid_theorem"] = "n/a";
  if (r.rigid_oracle)
    out["rigid_oracle"] = *r.rigid_oracle;
  else
    out["rigid_oracle"] = "n/a";
  if (r.enumerator_agrees)
    out["enumerator_agrees"] = *r.enumerator_agrees;
  else
    out["enumerator_agrees"] = "n/a";
  out["consistent"] = r.consistent;
  out["errors"] = r.errors;
  return out;
}

}  // namespace qhr
