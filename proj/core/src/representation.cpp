#include "qhrigid/representation.hpp"

#include "qhrigid/data.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace qhr {

// ---------------------------------------------------------------------------
// LoewyProfile

std::vector<std::string> LoewyProfile::flattened() const {
  std::vector<std::string> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::string LoewyProfile::str() const {
  std::string out;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) out += " | ";
    for (std::size_t j = 0; j < layers[i].size(); ++j) {
      if (j) out += ',';
      out += layers[i][j];
    }
  }
  return out;
}

bool operator==(const LoewyProfile& a, const LoewyProfile& b) {
  if (a.layers.size() != b.layers.size()) return false;
  for (std::size_t i = 0; i < a.layers.size(); ++i) {
    auto x = a.layers[i];
    auto y = b.layers[i];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

LoewyProfile parse_profile(const std::string& text) {
  LoewyProfile p;
  if (trim(text).empty()) return p;
  std::istringstream layers(text);
  std::string layer;
  while (std::getline(layers, layer, '|')) {
    std::vector<std::string> labels;
    std::istringstream items(layer);
    std::string item;
    while (std::getline(items, item, ',')) {
      auto t = trim(item);
      if (t.empty()) throw InputError("empty label in profile '" + text + "'");
      labels.push_back(t);
    }
    if (labels.empty()) throw InputError("empty layer in profile '" + text + "'");
    p.layers.push_back(std::move(labels));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Representation

namespace {

Mat path_matrix(const Representation& m, const Path& p) {
  Mat acc = Mat::identity(m.field(), m.dim_at(p.source));
  for (auto a : p.arrows) acc = m.map(a) * acc;
  return acc;
}

}  // namespace

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> maps)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Quiver& q = alg_->quiver();
  if (dims_.size() != q.vertex_count()) throw InputError("representation has the wrong number of vertices");
  if (maps_.size() != q.arrow_count()) throw InputError("representation has the wrong number of arrow maps");
  offsets_.resize(dims_.size());
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    offsets_[v] = total_;
    total_ += dims_[v];
  }
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arr = q.arrow(a);
    if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source])
      throw InputError("matrix for arrow '" + arr.name + "' has the wrong shape");
    if (!(maps_[a].field() == alg_->field())) throw InputError("matrix for arrow '" + arr.name + "' has the wrong field");
  }
  for (const auto& rel : alg_->spec().relations) {
    const Path& first = rel.terms.front().path;
    Mat sum(field(), dims_[first.target], dims_[first.source]);
    for (const auto& t : rel.terms) sum = sum + path_matrix(*this, t.path).scaled(field().reduce(t.coeff));
    if (!sum.is_zero()) throw InputError("representation does not satisfy a relation");
  }
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps.emplace_back(alg->field(), 0, 0);
  return Representation(alg, std::vector<std::size_t>(q.vertex_count(), 0), std::move(maps));
}

std::size_t Representation::vertex_of(std::size_t index) const {
  for (std::size_t v = 0; v < dims_.size(); ++v)
    if (index < offsets_[v] + dims_[v]) return v;
  throw DimensionError("index outside the module");
}

Vec Representation::act_arrow(std::size_t arrow, const Vec& x) const {
  const auto& arr = alg_->quiver().arrow(arrow);
  const Mat& mat = maps_[arrow];
  const Field& f = field();
  Vec y(total_, Rational(0));
  const std::size_t so = offsets_[arr.source];
  const std::size_t to = offsets_[arr.target];
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < mat.cols(); ++c)
      if (sgn(mat(r, c)) != 0 && sgn(x[so + c]) != 0) acc += mat(r, c) * x[so + c];
    y[to + r] = f.reduce(acc);
  }
  return y;
}

Vec Representation::restrict_to(std::size_t v, const Vec& x) const {
  Vec y(total_, Rational(0));
  for (std::size_t i = 0; i < dims_[v]; ++i) y[offsets_[v] + i] = x[offsets_[v] + i];
  return y;
}

Vec Representation::act_path(const Path& p, const Vec& x) const {
  Vec y = restrict_to(p.source, x);
  for (auto a : p.arrows) y = act_arrow(a, y);
  return y;
}

Vec Representation::act(const Vec& element, const Vec& x) const {
  const Field& f = field();
  Vec out(total_, Rational(0));
  const auto& basis = alg_->basis();
  for (std::size_t b = 0; b < element.size(); ++b) {
    if (sgn(element[b]) == 0) continue;
    out = vec_add(f, out, vec_scale(f, element[b], act_path(basis[b], x)));
  }
  return out;
}

std::vector<Vec> Representation::vertex_basis(std::size_t v) const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dims_[v]; ++i) out.push_back(field().unit_vec(total_, offsets_[v] + i));
  return out;
}

std::size_t Representation::dim_at(const Subspace& sub, std::size_t v) const {
  return vertex_part(sub, v).dim();
}

Subspace Representation::vertex_part(const Subspace& sub, std::size_t v) const {
  std::vector<Vec> parts;
  for (const auto& b : sub.basis()) {
    Vec r = restrict_to(v, b);
    if (!is_zero(r)) parts.push_back(std::move(r));
  }
  return Subspace::span(field(), total_, parts);
}

bool Representation::is_submodule(const Subspace& sub) const {
  if (sub.ambient() != total_) return false;
  for (const auto& b : sub.basis()) {
    for (std::size_t v = 0; v < dims_.size(); ++v)
      if (!sub.contains(restrict_to(v, b))) return false;
    for (std::size_t a = 0; a < maps_.size(); ++a)
      if (!sub.contains(act_arrow(a, b))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

Representation projective(const AlgebraPtr& alg, std::size_t v, std::vector<Path>* paths) {
  const Quiver& q = alg->quiver();
  const auto& basis = alg->basis();
  std::vector<std::vector<std::size_t>> by_end(q.vertex_count());
  for (auto b : alg->paths_from(v)) by_end[basis[b].target].push_back(b);
  std::map<std::size_t, std::size_t> local;  // algebra basis index -> index within its vertex block
  std::vector<std::size_t> dims(q.vertex_count());
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    dims[w] = by_end[w].size();
    for (std::size_t i = 0; i < by_end[w].size(); ++i) local[by_end[w][i]] = i;
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Mat m(alg->field(), dims[arr.target], dims[arr.source]);
    Path ap{arr.source, arr.target, {a}};
    for (std::size_t j = 0; j < by_end[arr.source].size(); ++j) {
      auto p = concat(basis[by_end[arr.source][j]], ap);
      for (const auto& [b, c] : alg->reduce(*p)) m.set(local.at(b), j, c);
    }
    maps.push_back(std::move(m));
  }
  if (paths) {
    paths->clear();
    for (std::size_t w = 0; w < q.vertex_count(); ++w)
      for (auto b : by_end[w]) paths->push_back(basis[b]);
  }
  return Representation(alg, std::move(dims), std::move(maps));
}

Representation simple(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims.at(v) = 1;
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.emplace_back(alg->field(), dims[q.arrow(a).target], dims[q.arrow(a).source]);
  return Representation(alg, std::move(dims), std::move(maps));
}

std::size_t sum_index(const std::vector<Representation>& parts, std::size_t k, std::size_t i) {
  const auto& part = parts.at(k);
  const std::size_t v = part.vertex_of(i);
  std::size_t pos = 0;
  for (std::size_t u = 0; u < v; ++u)
    for (const auto& p : parts) pos += p.dim_at(u);
  for (std::size_t j = 0; j < k; ++j) pos += parts[j].dim_at(v);
  return pos + (i - part.offset(v));
}

Vec embed_in_sum(const std::vector<Representation>& parts, std::size_t k, const Vec& x) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  Vec out(total, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out[sum_index(parts, k, i)] = x[i];
  return out;
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw InputError("direct sum of no modules");
  const AlgebraPtr& alg = parts.front().algebra_ptr();
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (const auto& p : parts) {
    if (p.algebra_ptr() != alg) throw InputError("direct sum of modules over different algebras");
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim_at(v);
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Mat m(alg->field(), dims[arr.target], dims[arr.source]);
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
      const Mat& pm = p.map(a);
      for (std::size_t r = 0; r < pm.rows(); ++r)
        for (std::size_t c = 0; c < pm.cols(); ++c) m.set(ro + r, co + c, pm(r, c));
      ro += pm.rows();
      co += pm.cols();
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps));
}

Representation duality_dual(const Representation& m) {
  const Algebra& alg = m.algebra();
  if (!alg.has_duality()) throw InputError("algebra has no duality");
  const auto& dmap = *alg.spec().duality;
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < alg.quiver().arrow_count(); ++a) maps.push_back(m.map(dmap[a]).transpose());
  return Representation(m.algebra_ptr(), m.dims(), std::move(maps));
}

Representation transpose_dual(const Representation& m, const AlgebraPtr& opposite) {
  std::vector<Mat> maps;
  for (const auto& mat : m.maps()) maps.push_back(mat.transpose());
  return Representation(opposite, m.dims(), std::move(maps));
}

// ---------------------------------------------------------------------------
// Series

Subspace spin(const Representation& m, const std::vector<Vec>& vectors) {
  Subspace acc = m.zero_sub();
  std::deque<Vec> queue;
  for (const auto& x : vectors)
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      Vec r = m.restrict_to(v, x);
      if (!is_zero(r)) queue.push_back(std::move(r));
    }
  const Quiver& q = m.algebra().quiver();
  while (!queue.empty()) {
    Vec x = std::move(queue.front());
    queue.pop_front();
    if (acc.contains(x)) continue;
    acc = acc + Subspace::span(m.field(), m.dim(), {x});
    // x is homogeneous, so only arrows leaving its vertex act.
    std::size_t v = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (sgn(x[i]) != 0) {
        v = m.vertex_of(i);
        break;
      }
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      if (q.arrow(a).source != v) continue;
      Vec y = m.act_arrow(a, x);
      if (!is_zero(y)) queue.push_back(std::move(y));
    }
  }
  return acc;
}

Subspace graded_span(const Representation& m, const std::vector<Vec>& vectors) {
  std::vector<Vec> parts;
  for (const auto& x : vectors)
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      Vec r = m.restrict_to(v, x);
      if (!is_zero(r)) parts.push_back(std::move(r));
    }
  return Subspace::span(m.field(), m.dim(), parts);
}

Chain radical_series(const Representation& m) {
  Chain chain{m.full()};
  while (!chain.back().is_zero()) {
    std::vector<Vec> images;
    for (const auto& b : chain.back().basis())
      for (std::size_t a = 0; a < m.maps().size(); ++a) {
        Vec y = m.act_arrow(a, b);
        if (!is_zero(y)) images.push_back(std::move(y));
      }
    Subspace next = Subspace::span(m.field(), m.dim(), images);
    if (next == chain.back()) throw DimensionError("radical series does not terminate");
    chain.push_back(std::move(next));
  }
  return chain;
}

Chain socle_series(const Representation& m) {
  Chain chain{m.zero_sub()};
  const Subspace whole = m.full();
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.dim(); ++j) cols.push_back(m.act_arrow(a, m.field().unit_vec(m.dim(), j)));
    arrows.push_back(Mat::from_columns(m.field(), m.dim(), cols));
  }
  while (!(chain.back() == whole)) {
    const auto ann = chain.back().annihilator().basis();
    std::vector<Vec> rows;
    for (const auto& g : arrows) {
      // Row y of the annihilator gives the functional x -> y . (X_a x).
      for (const auto& y : ann) {
        Vec row(m.dim(), Rational(0));
        bool nonzero = false;
        for (std::size_t j = 0; j < m.dim(); ++j) {
          Rational acc = 0;
          for (std::size_t i = 0; i < m.dim(); ++i)
            if (sgn(g(i, j)) != 0 && sgn(y[i]) != 0) acc += g(i, j) * y[i];
          row[j] = m.field().reduce(acc);
          if (sgn(row[j]) != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    Subspace next = rows.empty() ? whole : Subspace::span(m.field(), m.dim(), kernel_basis(Mat::from_rows(m.field(), m.dim(), rows)));
    if (next == chain.back()) throw DimensionError("socle series does not terminate");
    chain.push_back(std::move(next));
  }
  return chain;
}

std::size_t loewy_length(const Representation& m) { return radical_series(m).size() - 1; }

LoewyProfile chain_profile(const Representation& m, const Chain& chain) {
  LoewyProfile p;
  const Quiver& q = m.algebra().quiver();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    std::vector<std::string> layer;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      const std::size_t a = m.dim_at(chain[i], v);
      const std::size_t b = m.dim_at(chain[i + 1], v);
      const std::size_t d = a > b ? a - b : b - a;
      for (std::size_t k = 0; k < d; ++k) layer.push_back(q.label(v));
    }
    p.layers.push_back(std::move(layer));
  }
  return p;
}

LoewyProfile radical_profile(const Representation& m) { return chain_profile(m, radical_series(m)); }
LoewyProfile socle_profile(const Representation& m) { return chain_profile(m, socle_series(m)); }

std::vector<std::size_t> composition_factors(const Representation& m) { return m.dims(); }

// ---------------------------------------------------------------------------
// Subquotients

Vec Subquotient::project(const Vec& v) const { return (*coords)(v); }

Subspace Subquotient::project(const Subspace& sub) const {
  std::vector<Vec> images;
  for (const auto& b : sub.basis()) images.push_back(project(b));
  return Subspace::span(rep.field(), rep.dim(), images);
}

Chain Subquotient::induced(const Chain& filtration) const {
  Chain out;
  for (const auto& f : filtration) out.push_back(project(f.intersect(outer)));
  return out;
}

Subquotient subquotient(const Representation& m, const Subspace& outer, const Subspace& inner) {
  if (!outer.contains(inner)) throw InputError("subquotient: inner submodule is not contained in outer");
  if (!m.is_submodule(outer) || !m.is_submodule(inner)) throw InputError("subquotient: subspace is not a submodule");
  auto complement = inner.complement_in(outer);
  auto vertex_of_vec = [&](const Vec& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (sgn(x[i]) != 0) return m.vertex_of(i);
    return std::size_t{0};
  };
  std::stable_sort(complement.begin(), complement.end(),
                   [&](const Vec& a, const Vec& b) { return vertex_of_vec(a) < vertex_of_vec(b); });
  std::vector<std::size_t> dims(m.vertex_count(), 0);
  for (const auto& c : complement) ++dims[vertex_of_vec(c)];
  auto coords = std::make_shared<QuotientCoordinates>(inner, complement);
  std::vector<std::size_t> offsets(m.vertex_count(), 0);
  for (std::size_t v = 1; v < dims.size(); ++v) offsets[v] = offsets[v - 1] + dims[v - 1];

  const Quiver& q = m.algebra().quiver();
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Mat mat(m.field(), dims[arr.target], dims[arr.source]);
    for (std::size_t j = 0; j < dims[arr.source]; ++j) {
      Vec image = (*coords)(m.act_arrow(a, complement[offsets[arr.source] + j]));
      for (std::size_t r = 0; r < dims[arr.target]; ++r) mat.set(r, j, image[offsets[arr.target] + r]);
    }
    maps.push_back(std::move(mat));
  }
  Subquotient sq{Representation(m.algebra_ptr(), dims, std::move(maps)), outer, inner, std::move(complement), coords};
  return sq;
}

// ---------------------------------------------------------------------------
// Hom spaces

std::vector<Mat> hom_space(const Representation& m, const Representation& n,
                           const std::vector<HomConstraint>& constraints) {
  if (m.algebra_ptr() != n.algebra_ptr() && &m.algebra() != &n.algebra())
    throw InputError("hom_space: modules over different algebras");
  const Field& f = m.field();
  const std::size_t nv = m.vertex_count();
  std::vector<std::size_t> uo(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) uo[v + 1] = uo[v] + n.dim_at(v) * m.dim_at(v);
  const std::size_t unknowns = uo[nv];
  auto var = [&](std::size_t v, std::size_t i, std::size_t j) { return uo[v] + i * m.dim_at(v) + j; };

  std::vector<Vec> eqs;
  const Quiver& q = m.algebra().quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const std::size_t s = arr.source, t = arr.target;
    const Mat& mc = m.map(a);
    const Mat& nc = n.map(a);
    for (std::size_t r = 0; r < n.dim_at(t); ++r)
      for (std::size_t j = 0; j < m.dim_at(s); ++j) {
        Vec e(unknowns, Rational(0));
        bool nonzero = false;
        for (std::size_t i = 0; i < n.dim_at(s); ++i)
          if (sgn(nc(r, i)) != 0) {
            e[var(s, i, j)] = f.add(e[var(s, i, j)], nc(r, i));
            nonzero = true;
          }
        for (std::size_t k = 0; k < m.dim_at(t); ++k)
          if (sgn(mc(k, j)) != 0) {
            e[var(t, r, k)] = f.sub(e[var(t, r, k)], mc(k, j));
            nonzero = true;
          }
        if (nonzero) eqs.push_back(std::move(e));
      }
  }
  for (const auto& c : constraints) {
    const auto ann = c.target_sub.annihilator().basis();
    for (const auto& u : c.source_sub.basis())
      for (const auto& y : ann) {
        Vec e(unknowns, Rational(0));
        bool nonzero = false;
        for (std::size_t v = 0; v < nv; ++v)
          for (std::size_t i = 0; i < n.dim_at(v); ++i) {
            const Rational& yi = y[n.offset(v) + i];
            if (sgn(yi) == 0) continue;
            for (std::size_t j = 0; j < m.dim_at(v); ++j) {
              const Rational& uj = u[m.offset(v) + j];
              if (sgn(uj) == 0) continue;
              e[var(v, i, j)] = f.mul(yi, uj);
              nonzero = true;
            }
          }
        if (nonzero) eqs.push_back(std::move(e));
      }
  }
  std::vector<Vec> kernel;
  if (eqs.empty()) {
    for (std::size_t k = 0; k < unknowns; ++k) kernel.push_back(f.unit_vec(unknowns, k));
  } else {
    kernel = kernel_basis(Mat::from_rows(f, unknowns, eqs));
  }
  std::vector<Mat> out;
  for (const auto& x : kernel) {
    Mat g(f, n.dim(), m.dim());
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t i = 0; i < n.dim_at(v); ++i)
        for (std::size_t j = 0; j < m.dim_at(v); ++j) g.set(n.offset(v) + i, m.offset(v) + j, x[var(v, i, j)]);
    out.push_back(std::move(g));
  }
  return out;
}

bool is_homomorphism(const Representation& m, const Representation& n, const Mat& g) {
  if (g.rows() != n.dim() || g.cols() != m.dim()) return false;
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (std::size_t i = 0; i < n.dim(); ++i)
      if (sgn(g(i, j)) != 0 && n.vertex_of(i) != m.vertex_of(j)) return false;
  for (std::size_t a = 0; a < m.maps().size(); ++a)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Vec e = m.field().unit_vec(m.dim(), j);
      if (g * m.act_arrow(a, e) != n.act_arrow(a, g * e)) return false;
    }
  return true;
}

Vec flatten(const Mat& g) {
  Vec out;
  out.reserve(g.rows() * g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out.push_back(g(r, c));
  return out;
}

Mat unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v) {
  Mat g(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) g.set(r, c, v[r * cols + c]);
  return g;
}

// ---------------------------------------------------------------------------
// Projective covers and Ext^1

ProjectiveCover projective_cover(const Representation& m) {
  ProjectiveCover pc;
  const Chain rad = radical_series(m);
  const Subspace r1 = rad.size() > 1 ? rad[1] : m.zero_sub();
  pc.generators = r1.complement_in(m.full());
  std::vector<Representation> parts;
  for (const auto& x : pc.generators) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (sgn(x[i]) != 0) {
        v = m.vertex_of(i);
        break;
      }
    pc.tops.push_back(v);
    std::vector<Path> paths;
    parts.push_back(projective(m.algebra_ptr(), v, &paths));
    pc.paths.push_back(std::move(paths));
  }
  pc.p0 = parts.empty() ? Representation::zero(m.algebra_ptr()) : direct_sum(parts);
  pc.cover = Mat(m.field(), m.dim(), pc.p0.dim());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < parts[j].dim(); ++i) {
      pos.push_back(sum_index(parts, j, i));
      Vec image = m.act_path(pc.paths[j][i], pc.generators[j]);
      for (std::size_t r = 0; r < m.dim(); ++r) pc.cover.set(r, pos.back(), image[r]);
    }
    pc.positions.push_back(std::move(pos));
  }
  pc.omega = Subspace::span(m.field(), pc.p0.dim(), kernel_basis(pc.cover));
  return pc;
}

Mat extend_from_generator(const ProjectiveCover& pc, std::size_t summand, const Representation& n, const Vec& y) {
  Mat g(n.field(), n.dim(), pc.p0.dim());
  for (std::size_t i = 0; i < pc.paths[summand].size(); ++i) {
    Vec image = n.act_path(pc.paths[summand][i], y);
    for (std::size_t r = 0; r < n.dim(); ++r) g.set(r, pc.positions[summand][i], image[r]);
  }
  return g;
}

Ext1Result ext1(const Representation& m, const Representation& n) {
  Ext1Result res;
  res.cover = projective_cover(m);
  const auto& pc = res.cover;
  res.omega = subquotient(pc.p0, pc.omega, pc.p0.zero_sub());
  const Representation& om = res.omega.rep;
  const Field& f = m.field();
  Mat incl = Mat::from_columns(f, pc.p0.dim(), res.omega.lift);

  std::vector<Vec> homs;
  for (const auto& g : hom_space(om, n)) homs.push_back(flatten(g));
  const Subspace hom_span = Subspace::span(f, n.dim() * om.dim(), homs);
  std::vector<Vec> restricted;
  for (std::size_t j = 0; j < pc.tops.size(); ++j)
    for (const auto& y : n.vertex_basis(pc.tops[j])) restricted.push_back(flatten(extend_from_generator(pc, j, n, y) * incl));
  const Subspace bound = Subspace::span(f, n.dim() * om.dim(), restricted);
  for (const auto& c : bound.complement_in(hom_span)) res.classes.push_back(unflatten(f, n.dim(), om.dim(), c));
  res.dim = res.classes.size();
  return res;
}

Extension universal_extension(const Representation& x, const Representation& m) {
  const Field& f = x.field();
  Ext1Result e = ext1(m, x);
  if (e.dim == 0) return {x, Mat::identity(f, x.dim())};
  std::vector<Representation> parts{x};
  for (std::size_t i = 0; i < e.dim; ++i) parts.push_back(e.cover.p0);
  Representation s = direct_sum(parts);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < e.dim; ++i)
    for (std::size_t k = 0; k < e.omega.lift.size(); ++k) {
      Vec a = embed_in_sum(parts, 0, e.classes[i].col(k));
      Vec b = embed_in_sum(parts, 1 + i, e.omega.lift[k]);
      gens.push_back(vec_sub(f, a, b));
    }
  Subspace u = Subspace::span(f, s.dim(), gens);
  Subquotient q = subquotient(s, s.full(), u);
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < x.dim(); ++j) cols.push_back(q.project(embed_in_sum(parts, 0, f.unit_vec(x.dim(), j))));
  return {q.rep, Mat::from_columns(f, q.rep.dim(), cols)};
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

// Stable kernel and image of powers of psi (Fitting decomposition).
std::pair<Subspace, Subspace> fitting(const Mat& psi) {
  const Field& f = psi.field();
  const std::size_t n = psi.rows();
  Subspace image = Subspace::full(f, n);
  for (;;) {
    std::vector<Vec> imgs;
    for (const auto& b : image.basis()) imgs.push_back(psi * b);
    Subspace next = Subspace::span(f, n, imgs);
    if (next.dim() == image.dim()) break;
    image = std::move(next);
  }
  Subspace kernel(f, n);
  for (;;) {
    // ker psi^{k+1} = {x : psi x in ker psi^k}
    auto ann = kernel.annihilator().basis();
    std::vector<Vec> rows;
    for (const auto& y : ann) {
      Vec row(n, Rational(0));
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (sgn(y[i]) != 0 && sgn(psi(i, j)) != 0) acc += y[i] * psi(i, j);
        row[j] = f.reduce(acc);
      }
      rows.push_back(std::move(row));
    }
    Subspace next = rows.empty() ? Subspace::full(f, n) : Subspace::span(f, n, kernel_basis(Mat::from_rows(f, n, rows)));
    if (next.dim() == kernel.dim()) break;
    kernel = std::move(next);
  }
  return {kernel, image};
}

// Coefficients c_0..c_{k-1} with psi^k = sum c_i psi^i, k minimal.
std::vector<Rational> minimal_polynomial(const Mat& phi) {
  const Field& f = phi.field();
  const std::size_t n = phi.rows();
  std::vector<Vec> powers{flatten(Mat::identity(f, n))};
  Mat cur = Mat::identity(f, n);
  for (;;) {
    cur = phi * cur;
    Vec target = flatten(cur);
    Mat sys = Mat::from_columns(f, n * n, powers);
    if (auto sol = solve(sys, target)) return *sol;
    powers.push_back(std::move(target));
  }
}

std::vector<mpz_class> divisors(mpz_class x) {
  x = abs(x);
  std::vector<mpz_class> out;
  if (x == 0 || x > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= x; ++d)
    if (x % d == 0) {
      out.push_back(d);
      if (d * d != x) out.push_back(x / d);
    }
  return out;
}

// Roots in the ground field of x^k - sum c_i x^i (rational roots for Q).
std::vector<Rational> polynomial_roots(const Field& f, const std::vector<Rational>& c) {
  const std::size_t k = c.size();
  // poly[i] = coefficient of x^i
  std::vector<Rational> poly(k + 1);
  for (std::size_t i = 0; i < k; ++i) poly[i] = f.neg(c[i]);
  poly[k] = 1;
  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = k + 1; i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
    return acc;
  };
  std::vector<Rational> roots;
  if (!f.is_rational()) {
    if (f.characteristic() > 65536) {
      if (sgn(eval(0)) == 0) roots.push_back(0);
      return roots;
    }
    for (unsigned long x = 0; x < f.characteristic(); ++x)
      if (sgn(eval(Rational(x))) == 0) roots.push_back(Rational(x));
    return roots;
  }
  mpz_class lcm = 1;
  for (const auto& p : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& p : poly) ints.push_back(mpz_class(p * lcm));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (low >= ints.size() - 1) return roots;
  for (const auto& num : divisors(ints[low]))
    for (const auto& den : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational x(num * sign, den);
        x.canonicalize();
        if (sgn(eval(x)) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  return roots;
}

std::optional<std::pair<Subspace, Subspace>> try_split(const Mat& phi) {
  const Field& f = phi.field();
  const std::size_t n = phi.rows();
  for (const auto& c : polynomial_roots(f, minimal_polynomial(phi))) {
    Mat psi = phi - Mat::identity(f, n).scaled(c);
    auto [k, i] = fitting(psi);
    if (!k.is_zero() && !i.is_zero()) return std::make_pair(k, i);
  }
  return std::nullopt;
}

Mat combination(const Field& f, const std::vector<Mat>& basis, const std::vector<Rational>& coeffs) {
  Mat acc(f, basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(coeffs[i]) != 0) acc = acc + basis[i].scaled(coeffs[i]);
  return acc;
}

bool small_enough_to_enumerate(const Field& f, std::size_t dim) {
  if (f.is_rational()) return false;
  double total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= static_cast<double>(f.characteristic());
    if (total > 65536) return false;
  }
  return true;
}

struct SplitSearch {
  std::optional<std::pair<Subspace, Subspace>> split;
  std::optional<bool> local;
};

SplitSearch search_split(const Representation& m, std::mt19937_64& rng) {
  const Field& f = m.field();
  SplitSearch out;
  const auto end = hom_space(m, m);
  if (end.size() <= 1) {
    out.local = true;
    return out;
  }
  for (const auto& phi : end)
    if ((out.split = try_split(phi))) return out;
  const int attempts = 64;
  for (int t = 0; t < attempts; ++t) {
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < end.size(); ++i) {
      if (f.is_rational()) {
        std::uniform_int_distribution<int> d(-2, 2);
        coeffs.emplace_back(d(rng));
      } else {
        std::uniform_int_distribution<unsigned long> d(0, f.characteristic() - 1);
        coeffs.emplace_back(d(rng));
      }
    }
    if ((out.split = try_split(combination(f, end, coeffs)))) return out;
  }
  if (small_enough_to_enumerate(f, end.size())) {
    // Every element either splits M by Fitting's lemma or is nilpotent/invertible.
    std::vector<Rational> coeffs(end.size(), Rational(0));
    const unsigned long p = f.characteristic();
    for (;;) {
      std::size_t i = 0;
      while (i < coeffs.size() && coeffs[i] == Rational(p - 1)) coeffs[i++] = 0;
      if (i == coeffs.size()) break;
      coeffs[i] += 1;
      auto [k, im] = fitting(combination(f, end, coeffs));
      if (!k.is_zero() && !im.is_zero()) {
        out.split = std::make_pair(k, im);
        return out;
      }
    }
    out.local = true;
    return out;
  }
  if (f.is_rational()) {
    // In characteristic 0 the radical of the trace form is the Jacobson radical.
    Mat gram(f, end.size(), end.size());
    for (std::size_t i = 0; i < end.size(); ++i)
      for (std::size_t j = 0; j < end.size(); ++j) {
        Mat prod = end[i] * end[j];
        Rational tr = 0;
        for (std::size_t d = 0; d < prod.rows(); ++d) tr += prod(d, d);
        gram.set(i, j, tr);
      }
    if (rank(gram) == 1) out.local = true;
  }
  return out;
}

void decompose_into(const Representation& m, const std::vector<Vec>& basis_in_root, std::mt19937_64& rng,
                    Decomposition& out) {
  if (m.dim() == 0) return;
  auto search = search_split(m, rng);
  if (search.split) {
    for (const auto& part : {search.split->first, search.split->second}) {
      Subquotient sq = subquotient(m, part, m.zero_sub());
      std::vector<Vec> lifted;
      const Field& f = m.field();
      for (const auto& v : sq.lift) {
        Vec acc(basis_in_root.front().size(), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i)
          if (sgn(v[i]) != 0) acc = vec_add(f, acc, vec_scale(f, v[i], basis_in_root[i]));
        lifted.push_back(std::move(acc));
      }
      decompose_into(sq.rep, lifted, rng, out);
    }
    return;
  }
  Summand s{m, basis_in_root, search.local.value_or(false)};
  if (!search.local) out.conclusive = false;
  out.summands.push_back(std::move(s));
}

}  // namespace

Decomposition decompose(const Representation& m, std::uint64_t seed) {
  Decomposition out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < m.dim(); ++i) basis.push_back(m.field().unit_vec(m.dim(), i));
  decompose_into(m, basis, rng, out);
  return out;
}

std::optional<bool> has_local_endomorphism_ring(const Representation& m) {
  if (m.dim() == 0) return false;
  std::mt19937_64 rng(0);
  auto search = search_split(m, rng);
  if (search.split) return false;
  return search.local;
}

RigidityResult is_rigid(const Representation& m) {
  RigidityResult res;
  const Chain rad = radical_series(m);
  const Chain soc = socle_series(m);
  res.loewy_length = rad.size() - 1;
  const std::size_t l = res.loewy_length;
  if (soc.size() != rad.size()) throw DimensionError("socle and radical lengths differ");
  for (std::size_t i = 0; i <= l; ++i)
    if (!(rad[i] == soc[l - i])) {
      res.rigid = false;
      res.failing_index = i;
      res.radical_part = rad[i];
      res.socle_part = soc[l - i];
      return res;
    }
  return res;
}

// ---------------------------------------------------------------------------
// .rep files

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> toks;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    auto t = tokens(line);
    if (!t.empty()) out.push_back({n, std::move(t)});
  }
  return out;
}

Representation build_from_lines(const std::vector<Line>& lines, std::size_t start, const std::string& source,
                                const AlgebraPtr& alg) {
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::vector<std::optional<Mat>> maps(q.arrow_count());
  bool maps_started = false;
  std::size_t i = start;
  while (i < lines.size()) {
    const auto& ln = lines[i];
    try {
      if (ln.toks[0] == "algebra") {
        ++i;
        continue;
      }
      if (ln.toks[0] == "dim") {
        if (maps_started) throw InputError("'dim' after 'map'");
        if (ln.toks.size() != 3) throw InputError("expected: dim <vertex> <n>");
        auto v = q.find_vertex(ln.toks[1]);
        if (!v) throw InputError("unknown vertex '" + ln.toks[1] + "'");
        dims[*v] = std::stoul(ln.toks[2]);
        ++i;
        continue;
      }
      if (ln.toks[0] == "map") {
        maps_started = true;
        if (ln.toks.size() != 2) throw InputError("expected: map <arrow>");
        auto a = q.find_arrow(ln.toks[1]);
        if (!a) throw InputError("unknown arrow '" + ln.toks[1] + "'");
        if (maps[*a]) throw InputError("arrow '" + ln.toks[1] + "' mapped twice");
        const std::size_t rows = dims[q.arrow(*a).target];
        const std::size_t cols = dims[q.arrow(*a).source];
        Mat m(f, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
          ++i;
          if (i >= lines.size()) throw InputError("matrix for '" + ln.toks[1] + "' is truncated");
          const auto& row = lines[i];
          if (row.toks.size() != cols)
            throw ParseError(source, row.number, "expected " + std::to_string(cols) + " entries");
          for (std::size_t c = 0; c < cols; ++c) {
            Rational x;
            if (x.set_str(row.toks[c], 10) != 0) throw ParseError(source, row.number, "bad entry '" + row.toks[c] + "'");
            if (row.toks[c].find('/') != std::string::npos && x.get_den() == 0)
              throw ParseError(source, row.number, "zero denominator");
            x.canonicalize();
            m.set(r, c, x);
          }
        }
        maps[*a] = std::move(m);
        ++i;
        continue;
      }
      throw InputError("unknown directive '" + ln.toks[0] + "'");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(source, ln.number, e.what());
    }
  }
  std::vector<Mat> out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    out.push_back(maps[a] ? *maps[a] : Mat(f, dims[q.arrow(a).target], dims[q.arrow(a).source]));
  try {
    return Representation(alg, dims, std::move(out));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

}  // namespace

LoadedModule parse_rep(std::istream& in, const std::string& source, const std::string& base_dir) {
  auto lines = read_lines(in);
  if (lines.empty() || lines[0].toks[0] != "algebra" || lines[0].toks.size() != 2)
    throw ParseError(source, lines.empty() ? 1 : lines[0].number, "expected header: algebra <path>");
  LoadedModule out;
  std::filesystem::path p(lines[0].toks[1]);
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  // Fall back to a bundled algebra of that name.
  out.algebra_path = std::filesystem::exists(p) ? p.string() : lines[0].toks[1];
  out.algebra = std::make_shared<const Algebra>(build_algebra(load_algebra_spec(out.algebra_path)));
  out.rep = build_from_lines(lines, 1, source, out.algebra);
  return out;
}

LoadedModule load_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_rep(in, path, std::filesystem::path(path).parent_path().string());
}

Representation parse_rep_body(std::istream& in, const std::string& source, const AlgebraPtr& alg) {
  return build_from_lines(read_lines(in), 0, source, alg);
}

void write_rep(std::ostream& out, const Representation& m, const std::string& algebra_path) {
  const Quiver& q = m.algebra().quiver();
  out << "algebra " << algebra_path << "\n";
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out << "dim " << q.label(v) << " " << m.dim_at(v) << "\n";
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    out << "map " << q.arrow(a).name << "\n";
    const Mat& mat = m.map(a);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      for (std::size_t c = 0; c < mat.cols(); ++c) out << (c ? " " : "") << mat(r, c).get_str();
      out << "\n";
    }
  }
}

}  // namespace qhr
