#include "qhrigid/coeff_quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qhr {

std::size_t CoefficientQuiver::add_node(const std::string& label, std::size_t layer) {
  nodes.push_back({label, layer});
  if (std::find(label_order.begin(), label_order.end(), label) == label_order.end()) label_order.push_back(label);
  return nodes.size() - 1;
}

void CoefficientQuiver::add_edge(std::size_t from, std::size_t to, EdgeStyle style) {
  edges.push_back({from, to, style, {}});
}

bool CoefficientQuiver::has_edge(std::size_t from, std::size_t to) const {
  return std::any_of(edges.begin(), edges.end(), [&](const CQEdge& e) { return e.from == from && e.to == to; });
}

std::size_t CoefficientQuiver::layer_count() const {
  std::size_t n = 0;
  for (const auto& v : nodes) n = std::max(n, v.layer + 1);
  return n;
}

namespace {

std::size_t label_rank(const CoefficientQuiver& cq, const std::string& l) {
  auto it = std::find(cq.label_order.begin(), cq.label_order.end(), l);
  return static_cast<std::size_t>(it - cq.label_order.begin());
}

// Node ids per layer, labels in the quiver's label order.
std::vector<std::vector<std::size_t>> layered_nodes(const CoefficientQuiver& cq) {
  std::vector<std::vector<std::size_t>> out(cq.layer_count());
  for (std::size_t i = 0; i < cq.nodes.size(); ++i) out[cq.nodes[i].layer].push_back(i);
  for (auto& layer : out)
    std::stable_sort(layer.begin(), layer.end(), [&](std::size_t a, std::size_t b) {
      return label_rank(cq, cq.nodes[a].label) < label_rank(cq, cq.nodes[b].label);
    });
  return out;
}

}  // namespace

LoewyProfile CoefficientQuiver::profile() const {
  LoewyProfile p;
  for (const auto& layer : layered_nodes(*this)) {
    std::vector<std::string> labels;
    for (auto i : layer) labels.push_back(nodes[i].label);
    p.layers.push_back(std::move(labels));
  }
  return p;
}

std::vector<std::size_t> CoefficientQuiver::stretched_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (nodes[edges[i].to].layer >= nodes[edges[i].from].layer + 2) out.push_back(i);
  return out;
}

CoefficientQuiver extract(const Representation& m) {
  CoefficientQuiver cq;
  const Quiver& q = m.algebra().quiver();
  cq.label_order = q.labels();
  const Chain rad = radical_series(m);
  const std::size_t len = rad.size() - 1;

  // Bottom-up: a basis of rad^{len-1}, extended through each larger term.
  std::vector<Vec> basis;
  std::vector<std::size_t> layer_of;
  for (std::size_t k = len; k-- > 0;) {
    auto ext = rad[k + 1].complement_in(rad[k]);
    for (auto& v : ext) {
      basis.push_back(std::move(v));
      layer_of.push_back(k);
    }
  }
  // Present top layer first.
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return layer_of[a] < layer_of[b]; });
  std::vector<std::size_t> node_of(basis.size());
  for (std::size_t i : order) {
    std::size_t v = 0;
    for (std::size_t c = 0; c < basis[i].size(); ++c)
      if (sgn(basis[i][c]) != 0) {
        v = m.vertex_of(c);
        break;
      }
    node_of[i] = cq.add_node(q.label(v), layer_of[i]);
    cq.basis.push_back(basis[i]);
  }
  if (basis.empty()) return cq;

  const Mat b = Mat::from_columns(m.field(), m.dim(), cq.basis);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    for (std::size_t j = 0; j < cq.basis.size(); ++j) {
      const Vec image = m.act_arrow(a, cq.basis[j]);
      if (is_zero(image)) continue;
      const auto coords = solve(b, image);
      if (!coords) throw DimensionError("adapted basis does not span the module");
      for (std::size_t i = 0; i < coords->size(); ++i) {
        if (sgn((*coords)[i]) == 0) continue;
        auto [it, fresh] = edge_index.emplace(std::make_pair(j, i), cq.edges.size());
        if (fresh) cq.add_edge(j, i);
        cq.edges[it->second].arrows.push_back(q.arrow(a).name);
      }
    }
  return cq;
}

std::string render_dot(const CoefficientQuiver& cq, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=TB;\n  node [shape=plaintext];\n";
  const auto layers = layered_nodes(cq);
  for (std::size_t k = 0; k < layers.size(); ++k) {
    os << "  { rank=same;";
    for (auto i : layers[k]) os << " n" << i << " [label=\"" << cq.nodes[i].label << "\"];";
    os << " }\n";
  }
  const auto stretched = cq.stretched_edges();
  for (std::size_t e = 0; e < cq.edges.size(); ++e) {
    const auto& edge = cq.edges[e];
    os << "  n" << edge.from << " -> n" << edge.to;
    std::vector<std::string> attrs;
    if (!edge.arrows.empty()) {
      std::string l;
      for (std::size_t i = 0; i < edge.arrows.size(); ++i) l += (i ? "," : "") + edge.arrows[i];
      attrs.push_back("label=\"" + l + "\"");
    }
    if (edge.style == EdgeStyle::Dotted) attrs.push_back("style=dashed");
    if (std::find(stretched.begin(), stretched.end(), e) != stretched.end()) attrs.push_back("penwidth=2");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_ascii(const CoefficientQuiver& cq) {
  std::ostringstream os;
  for (const auto& layer : layered_nodes(cq)) {
    for (std::size_t i = 0; i < layer.size(); ++i) os << (i ? "," : "") << cq.nodes[layer[i]].label;
    os << "\n";
  }
  if (!cq.edges.empty()) os << "--\n";
  const auto stretched = cq.stretched_edges();
  for (std::size_t e = 0; e < cq.edges.size(); ++e) {
    const auto& edge = cq.edges[e];
    os << "n" << edge.from << "(" << cq.nodes[edge.from].label << ") "
       << (edge.style == EdgeStyle::Dotted ? "..>" : "-->") << " n" << edge.to << "(" << cq.nodes[edge.to].label
       << ")";
    if (std::find(stretched.begin(), stretched.end(), e) != stretched.end()) os << " stretched";
    os << "\n";
  }
  return os.str();
}

PruneReport lemma_prune(const CoefficientQuiver& cq, const std::string& lambda, const std::string& mu,
                        const WeightPoset& order, const std::set<std::pair<std::string, std::string>>& rad1) {
  PruneReport rep;
  const auto l = order.find(lambda);
  const auto m = order.find(mu);
  if (!l || !m) {
    rep.reason = "unknown label";
    return rep;
  }
  if (!order.lt(*l, *m)) {
    rep.reason = "mu is not above lambda";
    return rep;
  }
  if (!rad1.count({lambda, mu})) {
    rep.reason = "L(mu) does not occur in the first radical layer of P(lambda)";
    return rep;
  }
  rep.applicable = true;
  auto below = [&](std::size_t a, std::size_t b) { return cq.nodes[b].layer > cq.nodes[a].layer && cq.has_edge(a, b); };
  const std::size_t n = cq.nodes.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (cq.nodes[a].label != lambda) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (!below(a, v)) continue;
      const auto vl = order.find(cq.nodes[v].label);
      if (!vl || order.lt(*vl, *l)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (cq.nodes[c].label != mu || !below(v, c)) continue;
        PruneCandidate cand{a, v, c, false, {}};
        for (std::size_t w = 0; w < n && !cand.possible; ++w)
          if (w != v && cq.nodes[w].label == cq.nodes[v].label && below(a, w) && below(w, c)) {
            cand.possible = true;
            cand.escape = "second-via";
          }
        for (std::size_t w = 0; w < n && !cand.possible; ++w)
          if (w != a && cq.nodes[w].label == lambda && below(w, v)) {
            cand.possible = true;
            cand.escape = "second-lambda";
          }
        rep.candidates.push_back(cand);
      }
    }
  }
  return rep;
}

}  // namespace qhr
