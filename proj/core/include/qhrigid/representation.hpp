#pragma once

// Modules over a path algebra with relations, as quiver representations.
//
// A representation stores one matrix per arrow, of shape dim(target) x
// dim(source). Vectors of the whole module use global coordinates: the vertex
// spaces are laid out one after another in vertex order. Submodules are kept as
// Subspaces of the global space; they are always graded (the direct sum of
// their vertex parts), so their canonical bases are vertex-homogeneous.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhrigid/linalg.hpp"
#include "qhrigid/path_algebra.hpp"

namespace qhr {

using AlgebraPtr = std::shared_ptr<const Algebra>;
/// A chain of submodules, given outermost-first or innermost-first as stated
/// by the producing function.
using Chain = std::vector<Subspace>;

/// Simple labels per layer; each layer is a multiset.
struct LoewyProfile {
  std::vector<std::vector<std::string>> layers;

  [[nodiscard]] std::size_t length() const { return layers.size(); }
  [[nodiscard]] std::vector<std::string> flattened() const;
  /// ".lay" syntax: "1 | 2,4 | 1".
  [[nodiscard]] std::string str() const;
  /// Layer-wise multiset equality.
  friend bool operator==(const LoewyProfile& a, const LoewyProfile& b);
};

LoewyProfile parse_profile(const std::string& text);

class Representation {
 public:
  Representation() = default;
  /// Validates matrix shapes and that every relation acts as zero.
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> maps);
  static Representation zero(AlgebraPtr alg);

  [[nodiscard]] const AlgebraPtr& algebra_ptr() const { return alg_; }
  [[nodiscard]] const Algebra& algebra() const { return *alg_; }
  [[nodiscard]] const Field& field() const { return alg_->field(); }
  [[nodiscard]] std::size_t vertex_count() const { return dims_.size(); }

  [[nodiscard]] std::size_t dim() const { return total_; }
  [[nodiscard]] std::size_t dim_at(std::size_t v) const { return dims_.at(v); }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
  [[nodiscard]] std::size_t offset(std::size_t v) const { return offsets_.at(v); }
  [[nodiscard]] std::size_t vertex_of(std::size_t index) const;
  [[nodiscard]] const Mat& map(std::size_t arrow) const { return maps_.at(arrow); }
  [[nodiscard]] const std::vector<Mat>& maps() const { return maps_; }

  [[nodiscard]] Vec act_arrow(std::size_t arrow, const Vec& x) const;
  [[nodiscard]] Vec act_path(const Path& p, const Vec& x) const;
  /// Action of an algebra element (coordinates in the algebra's basis).
  [[nodiscard]] Vec act(const Vec& element, const Vec& x) const;
  /// Projection onto the vertex-v part.
  [[nodiscard]] Vec restrict_to(std::size_t v, const Vec& x) const;
  /// Unit vectors spanning vertex v.
  [[nodiscard]] std::vector<Vec> vertex_basis(std::size_t v) const;
  /// Dimension of the vertex-v part of a graded subspace.
  [[nodiscard]] std::size_t dim_at(const Subspace& sub, std::size_t v) const;
  [[nodiscard]] Subspace vertex_part(const Subspace& sub, std::size_t v) const;
  [[nodiscard]] bool is_submodule(const Subspace& sub) const;
  [[nodiscard]] Subspace full() const { return Subspace::full(field(), total_); }
  [[nodiscard]] Subspace zero_sub() const { return Subspace(field(), total_); }

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<Mat> maps_;
};

// Constructions --------------------------------------------------------------

/// Projective P(v): normal paths starting at v. The basis is grouped by the
/// end vertex; `paths`, if given, receives the path of each basis vector.
Representation projective(const AlgebraPtr& alg, std::size_t v, std::vector<Path>* paths = nullptr);
Representation simple(const AlgebraPtr& alg, std::size_t v);
Representation direct_sum(const std::vector<Representation>& parts);
/// Position in direct_sum(parts) of basis index i of parts[k].
std::size_t sum_index(const std::vector<Representation>& parts, std::size_t k, std::size_t i);
Vec embed_in_sum(const std::vector<Representation>& parts, std::size_t k, const Vec& x);
/// Contravariant dual via the algebra's duality: (dM)_c = (M_{d(c)})^T.
Representation duality_dual(const Representation& m);
/// Linear dual, a module over `opposite` (the opposite algebra).
Representation transpose_dual(const Representation& m, const AlgebraPtr& opposite);

// Submodules and series -------------------------------------------------------

Subspace spin(const Representation& m, const std::vector<Vec>& vectors);
/// rad^0 = M, rad^1, ..., ending at the zero submodule.
Chain radical_series(const Representation& m);
/// soc^0 = 0, soc^1, ..., ending at M.
Chain socle_series(const Representation& m);
std::size_t loewy_length(const Representation& m);
/// Layers rad^i / rad^{i+1}, top first.
LoewyProfile radical_profile(const Representation& m);
/// Layers soc^{k+1} / soc^k, bottom first.
LoewyProfile socle_profile(const Representation& m);
/// Profile of any ascending (innermost first) or descending chain.
LoewyProfile chain_profile(const Representation& m, const Chain& chain);
/// Composition multiplicities per vertex.
std::vector<std::size_t> composition_factors(const Representation& m);
/// Subspace with m_v = sub_v at each vertex v, spanned inside M.
Subspace graded_span(const Representation& m, const std::vector<Vec>& vectors);

struct Subquotient {
  Representation rep;
  Subspace outer;
  Subspace inner;
  /// Lifts of the quotient basis vectors into M (complement of inner in outer).
  std::vector<Vec> lift;

  /// Coordinates in rep of a vector of outer.
  [[nodiscard]] Vec project(const Vec& v) const;
  /// Image in rep of a submodule of M contained in outer.
  [[nodiscard]] Subspace project(const Subspace& sub) const;
  /// F^i(M'/M'') = (F^i M cap M' + M'') / M''.
  [[nodiscard]] Chain induced(const Chain& filtration) const;

  std::shared_ptr<const QuotientCoordinates> coords;
};

/// Throws InputError if the subspaces are not nested submodules.
Subquotient subquotient(const Representation& m, const Subspace& outer, const Subspace& inner);

// Morphisms -------------------------------------------------------------------

/// Requires g(source_sub) to lie in target_sub.
struct HomConstraint {
  Subspace source_sub;
  Subspace target_sub;
};

/// Basis of Hom(M, N) as global matrices N.dim() x M.dim(), subject to the
/// constraints.
std::vector<Mat> hom_space(const Representation& m, const Representation& n,
                           const std::vector<HomConstraint>& constraints = {});
bool is_homomorphism(const Representation& m, const Representation& n, const Mat& g);
/// Row-major flattening, used to compare morphisms as vectors.
Vec flatten(const Mat& g);
Mat unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v);

// Projective covers and Ext^1 ----------------------------------------------------

struct ProjectiveCover {
  Representation p0;
  std::vector<std::size_t> tops;       // vertex of each summand
  std::vector<std::vector<Path>> paths;  // basis paths of summand j, local order
  std::vector<std::vector<std::size_t>> positions;  // summand j, local index -> P0 index
  std::vector<Vec> generators;         // head vectors of M
  Mat cover;                           // M.dim() x P0.dim()
  Subspace omega;                      // kernel of cover, inside P0
};

ProjectiveCover projective_cover(const Representation& m);
/// The homomorphism P0 -> N sending summand j's generator to y (y in N at
/// vertex tops[j]); other summands go to zero.
Mat extend_from_generator(const ProjectiveCover& pc, std::size_t summand, const Representation& n,
                          const Vec& y);

struct Ext1Result {
  std::size_t dim = 0;
  ProjectiveCover cover;
  Subquotient omega;             // Omega M as a subquotient of P0
  std::vector<Mat> classes;      // Omega -> N cocycles spanning a complement
};

Ext1Result ext1(const Representation& m, const Representation& n);

struct Extension {
  Representation rep;
  Mat inclusion;  // X -> E
};

/// 0 -> X -> E -> M^d -> 0 with d = dim Ext^1(M, X), built from a basis of
/// Ext^1(M, X).
Extension universal_extension(const Representation& x, const Representation& m);

// Decomposition and rigidity --------------------------------------------------

struct Summand {
  Representation rep;
  std::vector<Vec> basis;  // basis of the summand inside the original module
  bool proven_indecomposable = false;
};

struct Decomposition {
  std::vector<Summand> summands;
  bool conclusive = true;
  std::uint64_t seed = 0;
};

Decomposition decompose(const Representation& m, std::uint64_t seed = 0);
/// Locality test on End(M): true / false, nullopt when undecided.
std::optional<bool> has_local_endomorphism_ring(const Representation& m);

struct RigidityResult {
  bool rigid = true;
  std::size_t loewy_length = 0;
  std::optional<std::size_t> failing_index;
  Subspace radical_part;
  Subspace socle_part;
};

RigidityResult is_rigid(const Representation& m);

// Files ------------------------------------------------------------------------

struct LoadedModule {
  std::string algebra_path;
  AlgebraPtr algebra;
  Representation rep;
};

/// Parses a .rep file; `base_dir` resolves a relative algebra path.
LoadedModule parse_rep(std::istream& in, const std::string& source, const std::string& base_dir);
LoadedModule load_rep_file(const std::string& path);
/// Parses a .rep body against an already built algebra (the header line is
/// accepted and ignored).
Representation parse_rep_body(std::istream& in, const std::string& source, const AlgebraPtr& alg);
void write_rep(std::ostream& out, const Representation& m, const std::string& algebra_path);

}  // namespace qhr
