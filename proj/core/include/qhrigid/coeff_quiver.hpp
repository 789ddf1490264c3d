#pragma once

// Coefficient quivers: one node per vector of a basis adapted to the radical
// series, one edge per non-zero arrow matrix entry.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qhrigid/quasi_hereditary.hpp"

namespace qhr {

enum class EdgeStyle { Solid, Dotted };

struct CQNode {
  std::string label;
  std::size_t layer = 0;
};

struct CQEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeStyle style = EdgeStyle::Solid;
  std::vector<std::string> arrows;
};

struct CoefficientQuiver {
  std::vector<CQNode> nodes;
  std::vector<CQEdge> edges;
  std::vector<Vec> basis;  // empty for hand-built quivers
  std::vector<std::string> label_order;

  std::size_t add_node(const std::string& label, std::size_t layer);
  void add_edge(std::size_t from, std::size_t to, EdgeStyle style = EdgeStyle::Solid);
  [[nodiscard]] bool has_edge(std::size_t from, std::size_t to) const;
  [[nodiscard]] std::size_t layer_count() const;
  [[nodiscard]] LoewyProfile profile() const;
  /// Edges that skip at least one layer.
  [[nodiscard]] std::vector<std::size_t> stretched_edges() const;
};

CoefficientQuiver extract(const Representation& m);

std::string render_dot(const CoefficientQuiver& cq, const std::string& name = "M");
std::string render_ascii(const CoefficientQuiver& cq);

struct PruneCandidate {
  std::size_t lambda_node = 0;
  std::size_t via_node = 0;
  std::size_t mu_node = 0;
  bool possible = false;
  std::string escape;  // "second-via", "second-lambda" or empty
};

struct PruneReport {
  bool applicable = false;
  std::string reason;
  std::vector<PruneCandidate> candidates;
};

/// Pruning of stretched-subquotient candidates between copies of lambda and
/// mu. `rad1` lists pairs (a, b) with L(b) in the first radical layer of P(a).
PruneReport lemma_prune(const CoefficientQuiver& cq, const std::string& lambda, const std::string& mu,
                        const WeightPoset& order, const std::set<std::pair<std::string, std::string>>& rad1);

}  // namespace qhr
