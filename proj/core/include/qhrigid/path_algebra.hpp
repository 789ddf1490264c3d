#pragma once

// Finite-dimensional algebras presented as a quiver with admissible relations.
//
// Path convention: the path `a.b` traverses `a` first, then `b`. A
// representation applies arrow matrices in traversal order, so `a.b` acts on a
// module vector as X_b * X_a.

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhrigid/linalg.hpp"

namespace qhr {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
 public:
  std::size_t add_vertex(const std::string& label);
  std::size_t add_arrow(const std::string& name, std::size_t source, std::size_t target);

  [[nodiscard]] std::size_t vertex_count() const { return labels_.size(); }
  [[nodiscard]] std::size_t arrow_count() const { return arrows_.size(); }
  [[nodiscard]] const std::string& label(std::size_t v) const { return labels_.at(v); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] std::optional<std::size_t> find_vertex(const std::string& label) const;
  [[nodiscard]] std::optional<std::size_t> find_arrow(const std::string& name) const;
  /// Same vertices, every arrow reversed (names kept).
  [[nodiscard]] Quiver opposite() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
};

/// A path in a quiver; length-0 paths are the vertex idempotents.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  [[nodiscard]] std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  /// Shorter paths first, then lexicographic.
  friend bool operator<(const Path& a, const Path& b);
};

std::string path_name(const Quiver& q, const Path& p);
/// Concatenation p then q; nullopt when target(p) != source(q).
std::optional<Path> concat(const Path& p, const Path& q);

struct Term {
  Rational coeff;
  Path path;
};

struct Relation {
  std::vector<Term> terms;
};

/// Everything an .alg file declares.
struct AlgebraSpec {
  Field field;
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<std::pair<std::size_t, std::size_t>> order_covers;  // (smaller, larger)
  std::optional<std::vector<std::size_t>> duality;                // arrow -> arrow
};

AlgebraSpec parse_alg(std::istream& in, const std::string& source = "<alg>");
AlgebraSpec parse_alg_file(const std::string& path);
AlgebraSpec parse_alg_string(const std::string& text, const std::string& source = "<alg>");

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Path algebra modulo an admissible ideal, with a basis of normal paths.
class Algebra {
 public:
  static constexpr std::size_t kDefaultDimCap = 10000;

  [[nodiscard]] const Field& field() const { return spec_.field; }
  [[nodiscard]] const Quiver& quiver() const { return spec_.quiver; }
  [[nodiscard]] const AlgebraSpec& spec() const { return spec_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::size_t vertex_count() const { return spec_.quiver.vertex_count(); }

  /// Normal paths; the first vertex_count() entries are the idempotents e_v.
  [[nodiscard]] const std::vector<Path>& basis() const { return basis_; }
  /// Basis indices of normal paths starting at v, in basis order.
  [[nodiscard]] const std::vector<std::size_t>& paths_from(std::size_t v) const { return from_.at(v); }
  /// Paths of length >= this bound are zero in the algebra.
  [[nodiscard]] std::size_t truncation() const { return truncation_; }

  /// Expansion of an arbitrary path in the normal basis.
  [[nodiscard]] SparseVec reduce(const Path& p) const;
  [[nodiscard]] Vec multiply(const Vec& x, const Vec& y) const;
  [[nodiscard]] Vec basis_vector(std::size_t i) const;

  /// J^0 = A, J^1 = arrow ideal, ..., ending with the zero subspace.
  [[nodiscard]] const std::vector<Subspace>& radical_powers() const { return radical_powers_; }

  [[nodiscard]] bool has_duality() const { return spec_.duality.has_value(); }
  /// Anti-involution induced by the duality pairs on basis vectors.
  [[nodiscard]] Vec dual(const Vec& x) const;

  /// Opposite algebra (reversed quiver and relations); duality dropped.
  [[nodiscard]] Algebra opposite() const;

  friend Algebra build_algebra(AlgebraSpec spec, std::size_t dim_cap);

 private:
  AlgebraSpec spec_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::size_t>> from_;
  std::map<Path, SparseVec> normal_form_;
  std::size_t truncation_ = 1;
  std::vector<Subspace> radical_powers_;
};

/// Throws InputError for non-admissible relations or when the basis exceeds
/// dim_cap (possibly infinite-dimensional).
Algebra build_algebra(AlgebraSpec spec, std::size_t dim_cap = Algebra::kDefaultDimCap);

}  // namespace qhr
