#pragma once

// Exact dense linear algebra over the rationals and prime fields.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhr {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ground field: characteristic 0 is Q, a prime p is F_p. Elements of F_p are
/// stored as integer-valued rationals in [0, p).
class Field {
 public:
  Field() = default;
  explicit Field(unsigned long characteristic);

  [[nodiscard]] unsigned long characteristic() const { return p_; }
  [[nodiscard]] bool is_rational() const { return p_ == 0; }

  [[nodiscard]] Rational reduce(const Rational& x) const;
  [[nodiscard]] Rational add(const Rational& a, const Rational& b) const;
  [[nodiscard]] Rational sub(const Rational& a, const Rational& b) const;
  [[nodiscard]] Rational mul(const Rational& a, const Rational& b) const;
  [[nodiscard]] Rational neg(const Rational& a) const;
  [[nodiscard]] Rational inv(const Rational& a) const;
  [[nodiscard]] Rational div(const Rational& a, const Rational& b) const {
    return mul(a, inv(b));
  }

  [[nodiscard]] Vec zero_vec(std::size_t n) const { return Vec(n, Rational(0)); }
  [[nodiscard]] Vec unit_vec(std::size_t n, std::size_t i) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  unsigned long p_ = 0;
};

bool is_prime(unsigned long n);
bool is_zero(const Vec& v);

/// Row-major dense matrix with entries kept in canonical form.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(Field f, std::size_t n);
  /// Matrix whose columns are the given vectors (each of length `height`).
  static Mat from_columns(Field f, std::size_t height, const std::vector<Vec>& cols);
  static Mat from_rows(Field f, std::size_t width, const std::vector<Vec>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const Field& field() const { return field_; }

  [[nodiscard]] const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  /// Stores f.reduce(x).
  void set(std::size_t r, std::size_t c, const Rational& x);

  [[nodiscard]] Vec row(std::size_t r) const;
  [[nodiscard]] Vec col(std::size_t c) const;
  [[nodiscard]] std::vector<Vec> columns() const;

  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Mat operator*(const Mat& rhs) const;
  [[nodiscard]] Vec operator*(const Vec& v) const;
  [[nodiscard]] Mat operator+(const Mat& rhs) const;
  [[nodiscard]] Mat operator-(const Mat& rhs) const;
  [[nodiscard]] Mat scaled(const Rational& s) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel_basis(const Mat& m);
/// Some x with m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Rational& s, const Vec& a);

/// Subspace of K^n stored as its RREF row basis; equal subspaces have equal
/// representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient);  // zero subspace
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(Field f, std::size_t ambient);

  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] const Field& field() const { return field_; }
  [[nodiscard]] const Mat& basis_rows() const { return basis_; }
  [[nodiscard]] std::vector<Vec> basis() const;
  [[nodiscard]] bool contains(const Vec& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  [[nodiscard]] bool is_zero() const { return dim() == 0; }

  [[nodiscard]] Subspace operator+(const Subspace& other) const;
  [[nodiscard]] Subspace intersect(const Subspace& other) const;
  /// Rows spanning {y : y . u = 0 for all u in this}.
  [[nodiscard]] Subspace annihilator() const;
  /// Standard unit vectors extending this subspace's basis to all of K^n
  /// (non-pivot columns of the RREF).
  [[nodiscard]] std::vector<Vec> complement_basis() const;
  /// Vectors from `within` (a superspace) completing a basis of this one to a
  /// basis of `within`, chosen deterministically from within's RREF basis.
  [[nodiscard]] std::vector<Vec> complement_in(const Subspace& within) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Mat basis_;
};

/// Coordinates modulo a subspace: given a subspace U of `within` and a chosen
/// complement C (so within = U + C directly), maps v in `within` to its
/// C-coordinates.
class QuotientCoordinates {
 public:
  QuotientCoordinates(const Subspace& sub, const std::vector<Vec>& complement);
  [[nodiscard]] Vec operator()(const Vec& v) const;
  [[nodiscard]] std::size_t dim() const { return complement_size_; }

 private:
  Field field_;
  std::size_t sub_dim_ = 0;
  std::size_t complement_size_ = 0;
  Mat system_;  // columns: sub basis, then complement
};

}  // namespace qhr
