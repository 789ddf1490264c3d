#pragma once

// Highest-weight structure: standard and costandard modules, the
// quasi-hereditary axioms, Delta-filtrations and Ringel's tilting modules.

#include <cstdint>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qhrigid/representation.hpp"

namespace qhr {

class WeightPoset {
 public:
  WeightPoset() = default;
  /// Transitive closure of the cover relations; throws InputError on cycles.
  WeightPoset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  static WeightPoset from_algebra(const Algebra& alg);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::optional<std::size_t> find(const std::string& label) const;
  [[nodiscard]] bool le(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  [[nodiscard]] bool lt(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
  /// Maximal elements of the set, in lexicographic label order.
  [[nodiscard]] std::vector<std::size_t> maximal(const std::vector<std::size_t>& set) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

struct DeltaStep {
  std::size_t label = 0;
  std::size_t shift = 0;  // radical depth of the step's head in M
};

/// Steps listed top first.
struct DeltaFiltration {
  std::vector<DeltaStep> steps;
};

struct DeltaFiltrationResult {
  std::optional<DeltaFiltration> filtration;
  std::optional<std::size_t> failing_label;
  std::string witness;
  [[nodiscard]] bool ok() const { return filtration.has_value(); }
};

class StandardSystem {
 public:
  explicit StandardSystem(AlgebraPtr alg, std::uint64_t seed = 0);
  StandardSystem(const StandardSystem&) = delete;
  StandardSystem& operator=(const StandardSystem&) = delete;

  [[nodiscard]] const AlgebraPtr& algebra() const { return alg_; }
  [[nodiscard]] const WeightPoset& poset() const { return poset_; }
  [[nodiscard]] std::size_t size() const { return poset_.size(); }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }

  [[nodiscard]] const Representation& simple_module(std::size_t l) const { return simples_.at(l); }
  [[nodiscard]] const Representation& projective_module(std::size_t l) const { return projectives_.at(l); }
  [[nodiscard]] const std::vector<Path>& projective_paths(std::size_t l) const { return paths_.at(l); }
  [[nodiscard]] const Representation& standard(std::size_t l) const { return deltas_.at(l).rep; }
  /// P(l) -> Delta(l) as a subquotient of P(l).
  [[nodiscard]] const Subquotient& standard_quotient(std::size_t l) const { return deltas_.at(l); }
  [[nodiscard]] const Representation& costandard(std::size_t l) const;
  [[nodiscard]] const Representation& injective(std::size_t l) const;
  /// Ringel's construction, cached.
  [[nodiscard]] const Representation& tilting(std::size_t l) const;

  /// Contravariant dual: the duality image when the algebra has one,
  /// otherwise the linear dual over the opposite algebra.
  [[nodiscard]] Representation dual(const Representation& m) const;
  /// The system in which dual modules live (this one, or the opposite's).
  [[nodiscard]] const StandardSystem& dual_system() const;

 private:
  void build();

  AlgebraPtr alg_;
  std::uint64_t seed_;
  WeightPoset poset_;
  std::vector<Representation> simples_;
  std::vector<Representation> projectives_;
  std::vector<std::vector<Path>> paths_;
  std::vector<Subquotient> deltas_;
  mutable std::shared_ptr<StandardSystem> opposite_;
  const StandardSystem* origin_ = nullptr;  // set on an opposite system
  mutable std::map<std::size_t, Representation> costandard_cache_;
  mutable std::map<std::size_t, Representation> injective_cache_;
  mutable std::map<std::size_t, Representation> tilting_cache_;
};

DeltaFiltrationResult find_delta_filtration(const StandardSystem& sys, const Representation& m);
/// A Delta-filtration read off a given ascending chain 0 = C_0 < ... < C_n = M;
/// fails if some quotient is not a standard module.
DeltaFiltrationResult delta_filtration_from_chain(const StandardSystem& sys, const Representation& m,
                                                  const Chain& ascending);
/// An ascending chain 0 = C_0 < ... < C_n = M with standard quotients, built
/// from random generators inside each trace; nullopt when the greedy search
/// finds no Delta-filtration.
std::optional<Chain> random_delta_chain(const StandardSystem& sys, const Representation& m, std::uint64_t seed);
/// Delta-filtration of the dual module (a nabla-filtration of m).
DeltaFiltrationResult find_nabla_filtration(const StandardSystem& sys, const Representation& m);

/// Sum of the shifted standard profiles.
LoewyProfile predicted_profile(const StandardSystem& sys, const DeltaFiltration& f);
bool check_radical_respecting(const StandardSystem& sys, const Representation& m, const DeltaFiltration& f);
/// Filtration multiplicities [M : Delta(l)].
std::vector<std::size_t> delta_multiplicities(const StandardSystem& sys, const DeltaFiltration& f);

struct QHWeightReport {
  std::size_t label = 0;
  std::size_t end_dim = 0;
  bool axiom_i = false;
  bool axiom_ii = false;
  bool heredity_order = false;  // [P:Delta(l)] = 1, other labels above l
  DeltaFiltrationResult filtration;
};

struct QHReport {
  bool quasi_hereditary = false;
  std::vector<QHWeightReport> weights;
};

QHReport check_quasihereditary(const StandardSystem& sys);

Representation ringel_tilting(const StandardSystem& sys, std::size_t l);

struct BGGReport {
  bool applicable = false;
  bool passed = false;
  std::string message;
  /// (s, lambda, mu) of the first asymmetric entry.
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> witness;
};

BGGReport check_bgg(const StandardSystem& sys);

// JSON --------------------------------------------------------------------------

nlohmann::json profile_json(const LoewyProfile& p);
nlohmann::json filtration_json(const StandardSystem& sys, const DeltaFiltration& f);
nlohmann::json qh_report_json(const StandardSystem& sys, const QHReport& r);

}  // namespace qhr
