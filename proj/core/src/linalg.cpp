#include "qhrigid/linalg.hpp"

#include <sstream>
#include <utility>

namespace qhr {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Field::Field(unsigned long characteristic) : p_(characteristic) {
  if (p_ != 0 && !is_prime(p_))
    throw std::invalid_argument("field characteristic must be 0 or prime, got " +
                                std::to_string(p_));
}

Rational Field::reduce(const Rational& x) const {
  if (p_ == 0) {
    Rational y = x;
    y.canonicalize();
    return y;
  }
  mpz_class p(p_);
  mpz_class num = x.get_num() % p;
  mpz_class den = x.get_den() % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  return Rational(r);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  Rational s = a + b;
  if (p_ == 0) return s;
  if (s >= p_) s -= p_;
  return s;
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  Rational s = a - b;
  if (p_ == 0) return s;
  if (s < 0) s += p_;
  return s;
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  Rational s = a * b;
  if (p_ == 0) return s;
  mpz_class r = s.get_num() % mpz_class(p_);
  return Rational(r);
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return Rational(p_) - a;
}

Rational Field::inv(const Rational& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero");
  if (p_ == 0) return Rational(1) / a;
  mpz_class r;
  mpz_class num = a.get_num();
  mpz_class p(p_);
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

Vec Field::unit_vec(std::size_t n, std::size_t i) const {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& f, const Rational& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
  return r;
}

// ---------------------------------------------------------------------------

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Mat Mat::from_columns(Field f, std::size_t height, const std::vector<Vec>& cols) {
  Mat m(f, height, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != height) throw DimensionError("column height mismatch");
    for (std::size_t r = 0; r < height; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

Mat Mat::from_rows(Field f, std::size_t width, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw DimensionError("row width mismatch");
    for (std::size_t c = 0; c < width; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Mat::set(std::size_t r, std::size_t c, const Rational& x) {
  data_[r * cols_ + c] = field_.reduce(x);
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
  return v;
}

std::vector<Vec> Mat::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  Mat out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = data_[i * cols_ + k];
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs.data_[k * rhs.cols_ + j];
        if (sgn(b) == 0) continue;
        auto& slot = out.data_[i * rhs.cols_ + j];
        slot = field_.add(slot, field_.mul(a, b));
      }
    }
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = data_[i * cols_ + k];
      if (sgn(a) == 0 || sgn(v[k]) == 0) continue;
      out[i] = field_.add(out[i], field_.mul(a, v[k]));
    }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
  Mat out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
  Mat out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Mat Mat::scaled(const Rational& s) const {
  Mat out(field_, rows_, cols_);
  Rational sr = field_.reduce(s);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(sr, data_[i]);
  return out;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << data_[r * cols_ + c].get_str();
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

RrefResult rref(const Mat& m) {
  const Field& f = m.field();
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < rows.size(); ++c) {
    std::size_t pr = lead;
    while (pr < rows.size() && sgn(rows[pr][c]) == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[lead]);
    Rational inv = f.inv(rows[lead][c]);
    for (std::size_t j = c; j < m.cols(); ++j) rows[lead][j] = f.mul(rows[lead][j], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || sgn(rows[r][c]) == 0) continue;
      Rational factor = rows[r][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(rows[lead][j]) != 0) rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[lead][j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  Mat out(f, m.rows(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(rows[r][c]) != 0) out.set(r, c, rows[r][c]);
  return {out, pivots};
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const Field& f = m.field();
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side height mismatch");
  const Field& f = m.field();
  Mat aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
    aug.set(r, m.cols(), b[r]);
  }
  auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const Field& f = m.field();
  if (n == 0) return Mat(f, 0, 0);
  Mat aug(f, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, 1);
  }
  auto [red, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, red(r, n + c));
  return inv;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(f, ambient);
  if (vectors.empty()) return s;
  Mat m = Mat::from_rows(f, ambient, vectors);
  auto r = rref(m);
  Mat b(f, r.rank(), ambient);
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t c = 0; c < ambient; ++c) b.set(i, c, r.reduced(i, c));
  s.basis_ = std::move(b);
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  Subspace s(f, ambient);
  s.basis_ = Mat::identity(f, ambient);
  return s;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("contains: vector length mismatch");
  // Reduce v against the RREF rows.
  Vec w = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t piv = 0;
    while (sgn(basis_(r, piv)) == 0) ++piv;
    if (sgn(w[piv]) == 0) continue;
    Rational factor = w[piv];
    for (std::size_t c = piv; c < ambient_; ++c)
      if (sgn(basis_(r, c)) != 0) w[c] = field_.sub(w[c], field_.mul(factor, basis_(r, c)));
  }
  return qhr::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("contains: ambient mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace sum: ambient mismatch");
  auto vs = basis();
  auto ws = other.basis();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return span(field_, ambient_, vs);
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(field_, ambient_);
  return span(field_, ambient_, kernel_basis(basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace intersection: ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return Subspace(field_, ambient_);
  // U ∩ V = ann(ann U + ann V)
  return (annihilator() + other.annihilator()).annihilator();
}

std::vector<Vec> Subspace::complement_basis() const {
  std::vector<bool> pivot(ambient_, false);
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t c = 0;
    while (sgn(basis_(r, c)) == 0) ++c;
    pivot[c] = true;
  }
  std::vector<Vec> out;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!pivot[c]) out.push_back(field_.unit_vec(ambient_, c));
  return out;
}

std::vector<Vec> Subspace::complement_in(const Subspace& within) const {
  std::vector<Vec> out;
  Subspace acc = *this;
  for (const auto& v : within.basis()) {
    if (acc.contains(v)) continue;
    out.push_back(v);
    acc = acc + span(field_, ambient_, {v});
  }
  return out;
}

// ---------------------------------------------------------------------------

QuotientCoordinates::QuotientCoordinates(const Subspace& sub, const std::vector<Vec>& complement)
    : field_(sub.field()), sub_dim_(sub.dim()), complement_size_(complement.size()) {
  auto cols = sub.basis();
  cols.insert(cols.end(), complement.begin(), complement.end());
  const std::size_t n = sub.ambient();
  const std::size_t k = cols.size();
  Mat s = Mat::from_columns(field_, n, cols);
  // Pick k independent rows of s and invert that block.
  auto r = rref(s.transpose());
  if (r.rank() != k) throw DimensionError("quotient complement is not independent of the subspace");
  Mat block(field_, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) block.set(i, j, s(r.pivots[i], j));
  auto inv = inverse(block);
  if (!inv) throw DimensionError("quotient complement is not independent of the subspace");
  // Compose: coordinates = inv * (rows r.pivots of v); store as k x n.
  system_ = Mat(field_, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) system_.set(i, r.pivots[j], (*inv)(i, j));
}

Vec QuotientCoordinates::operator()(const Vec& v) const {
  Vec full = system_ * v;
  return Vec(full.begin() + static_cast<std::ptrdiff_t>(sub_dim_), full.end());
}

}  // namespace qhr
