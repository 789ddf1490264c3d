#pragma once

// Filtered Hom and Ext for radically filtered modules, detection of stretched
// subquotients in tilting modules, and the rigidity pipeline.
//
// Filtrations are descending chains F^0 = M, F^1, ..., F^l = 0. Levels below 0
// are M and levels past the end are 0. A morphism g has shift r when
// g(F^i M) lies in F^{i+r} N for every i.

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qhrigid/quasi_hereditary.hpp"

namespace qhr {

enum class Side { DeltaL, LNabla };
enum class FiltrationKind { Radical, Socle };

std::string side_name(Side s);
std::string filtration_name(FiltrationKind k);

/// F^i with the out-of-range conventions above.
const Subspace& filtration_level(const Chain& descending, long i, const Subspace& zero);

/// The descending filtration of the given kind: rad^i M, or soc^{l-i} M.
Chain descending_filtration(const Representation& m, FiltrationKind kind);
/// F'^i = ann(F^{l-i}) on the dual module.
Chain dual_filtration(const Chain& descending);

struct FilteredHomSpace {
  Representation source;
  Representation target;
  long shift = 0;
  std::vector<Mat> basis;

  [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

/// Homomorphisms g with g(rad^i M) in rad^{i+r} N.
FilteredHomSpace filtered_hom(const Representation& m, const Representation& n, long r);
FilteredHomSpace filtered_hom(const Representation& m, const Chain& fm, const Representation& n, const Chain& fn,
                              long r);

struct FilteredExtResult {
  std::size_t label = 0;
  long shift = 0;
  std::size_t dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
};

/// Filtered Ext^1(Delta(l)<r>, T) with T radically filtered, from a minimal
/// filtration-surjective presentation P1 -> P(l) -> Delta(l).
FilteredExtResult filtered_ext1_delta(const StandardSystem& sys, std::size_t l, long r, const Representation& t);

struct StretchEntry {
  std::size_t label = 0;
  long shift = 0;
  bool pass = true;
  /// Vectors t of the module at vertex `label`, each defining g: P(label) -> M
  /// that is non-zero on ker(P -> Delta) and has shift s there, but not on
  /// all of P.
  std::vector<Vec> witnesses;
};

struct StretchCheck {
  Side side = Side::DeltaL;
  FiltrationKind kind = FiltrationKind::Radical;
  std::vector<StretchEntry> entries;  // sorted by (label, shift)
  bool passed = true;
};

struct StretchReport {
  Side side = Side::DeltaL;
  std::vector<StretchCheck> checks;  // radical, then socle
  bool passed = true;
};

/// Hom-lifting check on a module (over `sys`) with a given descending
/// filtration, for every weight and every shift in range.
StretchCheck stretch_check(const StandardSystem& sys, const Representation& m, const Chain& filtration);
StretchCheck detect_stretched(const StandardSystem& sys, const Representation& t, Side side, FiltrationKind kind);
StretchReport detect_stretched(const StandardSystem& sys, const Representation& t, Side side);
/// Re-checks a failing witness from scratch.
bool witness_is_valid(const StandardSystem& sys, const Representation& m, const Chain& filtration,
                      const StretchEntry& entry, const Vec& witness);

struct StretchedSubquotient {
  std::size_t label = 0;  // lambda
  std::size_t top = 0;    // mu
  Vec generator;          // generates M' modulo M''
  Subspace inner;         // M''
  Subspace outer;         // M'
};

struct EnumerationResult {
  bool applicable = false;
  std::string reason;  // why it was skipped
  std::size_t submodules = 0;
  std::size_t candidates = 0;  // Delta-L shaped subquotients seen
  std::vector<StretchedSubquotient> stretched;
  [[nodiscard]] bool found() const { return !stretched.empty(); }
};

/// Exhaustive search for stretched Delta-L subquotients of m with respect to
/// the filtration; needs a finite field and at most `max_vectors` vectors.
EnumerationResult enumerate_stretched(const StandardSystem& sys, const Representation& m, const Chain& filtration,
                                      std::size_t max_vectors = 256);
EnumerationResult enumerate_stretched(const StandardSystem& sys, const Representation& t, Side side,
                                      FiltrationKind kind, std::size_t max_vectors = 256);

enum class Method { Theorem, Oracle, Both };

struct PipelineReport {
  std::size_t label = 0;
  bool hypothesis = false;
  std::vector<std::size_t> not_radical_respecting;
  Representation tilting;
  LoewyProfile profile;
  std::optional<StretchReport> delta_l;
  std::optional<StretchReport> l_nabla;
  std::vector<FilteredExtResult> filtered_ext;
  bool filtration_radical_respecting = false;
  std::optional<bool> rigid_theorem;  // nullopt: theorem not applicable
  std::optional<bool> rigid_oracle;
  std::optional<bool> enumerator_agrees;
  bool consistent = true;
  std::vector<std::string> errors;
};

PipelineReport rigidity_pipeline(const StandardSystem& sys, std::size_t l, Method method = Method::Both);

nlohmann::json vec_json(const Vec& v);
nlohmann::json stretch_json(const StandardSystem& sys, const StretchReport& r);
nlohmann::json pipeline_json(const StandardSystem& sys, const PipelineReport& r);

}  // namespace qhr
