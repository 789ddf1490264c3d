#pragma once

// Grothendieck-group arithmetic for a block given by the radical layers of its
// standard modules: basis changes, wall-crossing, layered reciprocity and
// Loewy-layer reconstruction from Delta-head placements.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qhrigid/representation.hpp"

namespace qhr {

enum class WallKind { Up, Down, Exterior, Unknown };

struct WallEntry {
  WallKind kind = WallKind::Unknown;
  std::size_t partner = 0;  // for Up / Down
};

class BlockData {
 public:
  static BlockData parse(std::istream& in, const std::string& source);
  static BlockData from_file(const std::string& path);
  static BlockData from_string(const std::string& text, const std::string& source);
  /// The bundled regular SL4 block.
  static const BlockData& sl4();

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::size_t index(const std::string& label) const;  // throws InputError
  [[nodiscard]] bool le(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  [[nodiscard]] bool lt(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }

  /// [rad_t Delta(l) : L(m)] as counts per label, one vector per layer.
  [[nodiscard]] const std::vector<std::vector<long>>& layers(std::size_t l) const { return layered_.at(l); }
  [[nodiscard]] long decomposition(std::size_t l, std::size_t m) const;
  [[nodiscard]] LoewyProfile standard_profile(std::size_t l) const;

  [[nodiscard]] WallEntry wall(std::size_t l, const std::string& generator) const;
  [[nodiscard]] std::vector<std::string> generators() const;

  /// Replaces the layered table (used to build corrupted controls).
  void set_layers(std::size_t l, std::vector<std::vector<long>> layers);

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::vector<long>>> layered_;
  std::map<std::pair<std::size_t, std::string>, WallEntry> walls_;
};

enum class Basis { L, Delta };

struct Character {
  Basis basis = Basis::L;
  std::vector<long> coeffs;

  static Character unit(Basis b, std::size_t n, std::size_t i);
  friend bool operator==(const Character&, const Character&) = default;
};

Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a, const Character& b);
Character operator*(long k, const Character& c);

Character to_L_basis(const Character& c, const BlockData& b);
Character to_delta_basis(const Character& c, const BlockData& b);

/// Character of theta_s applied to c, in c's basis. Throws InputError on an
/// unknown wall, or when a Delta-basis term sits on an exterior wall.
Character wall_cross(const std::string& s, const Character& c, const BlockData& b);

/// "fl + 2·3 + 2": labels in descending block order, unit coefficients
/// omitted, "0" for the zero character.
std::string format_character(const Character& c, const BlockData& b);

/// Sum over labels of [M:Delta(l)] [N:nabla(l)].
long hom_dim(const std::vector<long>& delta_mults, const std::vector<long>& nabla_mults);
/// Multiplicity vector from a list of labels ("4,3,3',2").
std::vector<long> multiplicities(const std::string& labels, const BlockData& b);

using HeadPlacement = std::vector<std::pair<std::size_t, std::size_t>>;  // (label, shift)

/// Counts per layer and label.
using LayerCounts = std::vector<std::vector<long>>;

LayerCounts counts_of(const LoewyProfile& p, const BlockData& b);
/// Labels within a layer listed in block order.
LoewyProfile profile_of(const LayerCounts& c, const BlockData& b);

LayerCounts placement_counts(const HeadPlacement& hp, const BlockData& b);
LoewyProfile layers_from_placement(const HeadPlacement& hp, const BlockData& b);
/// Head placements of P(m) from the layered table: Delta(l) at depth t as
/// often as L(m) occurs in rad_t Delta(l).
HeadPlacement projective_placement(const BlockData& b, std::size_t m);
LoewyProfile projective_layers(const BlockData& b, std::size_t m);

/// Every placement of the given Delta labels (a multiset) whose layers equal
/// the target; shifts of repeated labels are listed nondecreasing.
std::vector<HeadPlacement> solve_placement(const LoewyProfile& target, const std::vector<std::size_t>& labels,
                                           const BlockData& b);

/// Head placements of the SL4 tilting modules T(1), T(2), T(3), T(fl), T(4),
/// T(5), from subtracting Weyl characters off the tilting diagrams.
const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::size_t>>>>& sl4_tilting_placements();
HeadPlacement placement_from_labels(const std::vector<std::pair<std::string, std::size_t>>& p, const BlockData& b);

struct SymmetryReport {
  bool passed = true;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> witness;  // (s, lambda, mu)
  std::string message;
};

/// [rad_s P(m) : L(l)] = [rad_s P(l) : L(m)] for all s, l, m; profiles[i]
/// is P(label i).
SymmetryReport bgg_symmetry_check(const std::vector<LoewyProfile>& projectives, const BlockData& b);
SymmetryReport bgg_symmetry_check(const BlockData& b);

/// The projective table with one copy of `label` removed from layer `layer`
/// of P(m); a negative control for the symmetry check.
std::vector<LoewyProfile> corrupted_projectives(const BlockData& b, std::size_t m, std::size_t layer,
                                                const std::string& label);

struct LayEntry {
  std::string kind;   // "delta", "projective", "tilting", ...
  std::string label;
  LoewyProfile profile;
};

std::vector<LayEntry> parse_lay(std::istream& in, const std::string& source);
std::vector<LayEntry> parse_lay_string(const std::string& text, const std::string& source);
std::string format_lay(const std::vector<LayEntry>& entries);

}  // namespace qhr
