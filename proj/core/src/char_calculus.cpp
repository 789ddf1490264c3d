#include "qhrigid/char_calculus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "qhrigid/data.hpp"

namespace qhr {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockData

BlockData BlockData::parse(std::istream& in, const std::string& source) {
  BlockData b;
  std::vector<std::pair<std::size_t, std::string>> order_lines, wall_lines;
  std::vector<std::tuple<std::size_t, std::string, std::string>> delta_lines;  // line, label, profile
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto w = words(line);
    if (w.empty()) continue;
    if (w[0] == "labels") {
      if (!b.labels_.empty()) throw ParseError(source, lineno, "labels given twice");
      b.labels_.assign(w.begin() + 1, w.end());
      std::set<std::string> uniq(b.labels_.begin(), b.labels_.end());
      if (uniq.size() != b.labels_.size()) throw ParseError(source, lineno, "duplicate label");
    } else if (w[0] == "order") {
      order_lines.emplace_back(lineno, line);
    } else if (w[0] == "delta") {
      const auto colon = line.find(':');
      if (w.size() < 2 || colon == std::string::npos) throw ParseError(source, lineno, "expected 'delta <label> : layers'");
      delta_lines.emplace_back(lineno, w[1], line.substr(colon + 1));
    } else if (w[0] == "wall") {
      wall_lines.emplace_back(lineno, line);
    } else {
      throw ParseError(source, lineno, "unknown directive '" + w[0] + "'");
    }
  }
  if (b.labels_.empty()) throw ParseError(source, lineno, "missing labels line");
  const std::size_t n = b.labels_.size();
  auto find = [&](const std::string& l, std::size_t ln) {
    auto it = std::find(b.labels_.begin(), b.labels_.end(), l);
    if (it == b.labels_.end()) throw ParseError(source, ln, "unknown label '" + l + "'");
    return static_cast<std::size_t>(it - b.labels_.begin());
  };

  b.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) b.leq_[i][i] = true;
  for (const auto& [ln, text] : order_lines) {
    const auto w = words(text);
    if (w.size() != 4 || w[2] != "<") throw ParseError(source, ln, "expected 'order a < b'");
    b.leq_[find(w[1], ln)][find(w[3], ln)] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (b.leq_[i][k] && b.leq_[k][j]) b.leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (b.leq_[i][j] && b.leq_[j][i]) throw ParseError(source, lineno, "order contains a cycle");

  b.layered_.assign(n, {});
  std::vector<bool> have(n, false);
  for (const auto& [ln, label, text] : delta_lines) {
    const std::size_t l = find(label, ln);
    if (have[l]) throw ParseError(source, ln, "delta " + label + " given twice");
    have[l] = true;
    LoewyProfile p;
    try {
      p = parse_profile(text);
    } catch (const InputError& e) {
      throw ParseError(source, ln, e.what());
    }
    LayerCounts counts(p.length(), std::vector<long>(n, 0));
    for (std::size_t t = 0; t < p.length(); ++t)
      for (const auto& x : p.layers[t]) ++counts[t][find(x, ln)];
    if (counts.empty() || p.layers[0].size() != 1 || counts[0][l] != 1)
      throw ParseError(source, ln, "delta " + label + " must have head " + label);
    for (std::size_t t = 1; t < counts.size(); ++t)
      for (std::size_t m = 0; m < n; ++m)
        if (counts[t][m] && !b.lt(m, l))
          throw ParseError(source, ln, "delta " + label + " has factor " + b.labels_[m] + " not below its head");
    b.layered_[l] = std::move(counts);
  }
  for (std::size_t l = 0; l < n; ++l)
    if (!have[l]) throw ParseError(source, lineno, "missing delta line for " + b.labels_[l]);

  for (const auto& [ln, text] : wall_lines) {
    const auto w = words(text);
    if (w.size() < 4) throw ParseError(source, ln, "expected 'wall <label> <s> up|down <label> | exterior | unknown'");
    const std::size_t l = find(w[1], ln);
    WallEntry e;
    if ((w[3] == "up" || w[3] == "down") && w.size() == 5) {
      e.kind = w[3] == "up" ? WallKind::Up : WallKind::Down;
      e.partner = find(w[4], ln);
      const bool ordered = e.kind == WallKind::Up ? b.lt(l, e.partner) : b.lt(e.partner, l);
      if (!ordered) throw ParseError(source, ln, "wall partner is not on the stated side in the order");
    } else if (w[3] == "exterior" && w.size() == 4) {
      e.kind = WallKind::Exterior;
    } else if (w[3] == "unknown" && w.size() == 4) {
      e.kind = WallKind::Unknown;
    } else {
      throw ParseError(source, ln, "bad wall entry");
    }
    if (!b.walls_.emplace(std::make_pair(l, w[2]), e).second)
      throw ParseError(source, ln, "wall " + w[1] + " " + w[2] + " given twice");
  }
  for (const auto& [key, e] : b.walls_) {
    if (e.kind != WallKind::Up && e.kind != WallKind::Down) continue;
    auto it = b.walls_.find({e.partner, key.second});
    const WallKind want = e.kind == WallKind::Up ? WallKind::Down : WallKind::Up;
    if (it == b.walls_.end() || it->second.kind != want || it->second.partner != key.first)
      throw InputError(source + ": wall " + b.labels_[key.first] + " " + key.second +
                       " has no matching entry at " + b.labels_[e.partner]);
  }
  return b;
}

BlockData BlockData::from_string(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse(in, source);
}

BlockData BlockData::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse(in, path);
}

const BlockData& BlockData::sl4() {
  static const BlockData b = from_string(bundled_file("sl4.block"), "sl4.block");
  return b;
}

std::size_t BlockData::index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

long BlockData::decomposition(std::size_t l, std::size_t m) const {
  long s = 0;
  for (const auto& layer : layered_.at(l)) s += layer.at(m);
  return s;
}

LoewyProfile BlockData::standard_profile(std::size_t l) const { return profile_of(layered_.at(l), *this); }

WallEntry BlockData::wall(std::size_t l, const std::string& generator) const {
  auto it = walls_.find({l, generator});
  return it == walls_.end() ? WallEntry{} : it->second;
}

std::vector<std::string> BlockData::generators() const {
  std::set<std::string> g;
  for (const auto& [key, e] : walls_) g.insert(key.second);
  return {g.begin(), g.end()};
}

void BlockData::set_layers(std::size_t l, std::vector<std::vector<long>> layers) { layered_.at(l) = std::move(layers); }

// ---------------------------------------------------------------------------
// Characters

Character Character::unit(Basis b, std::size_t n, std::size_t i) {
  Character c{b, std::vector<long>(n, 0)};
  c.coeffs.at(i) = 1;
  return c;
}

namespace {

void check_compatible(const Character& a, const Character& b) {
  if (a.basis != b.basis || a.coeffs.size() != b.coeffs.size())
    throw InputError("characters in different bases or blocks");
}

}  // namespace

Character operator+(const Character& a, const Character& b) {
  check_compatible(a, b);
  Character c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
  return c;
}

Character operator-(const Character& a, const Character& b) { return a + (-1) * b; }

Character operator*(long k, const Character& c) {
  Character out = c;
  for (auto& x : out.coeffs) x *= k;
  return out;
}

Character to_L_basis(const Character& c, const BlockData& b) {
  if (c.basis == Basis::L) return c;
  Character out{Basis::L, std::vector<long>(b.size(), 0)};
  for (std::size_t l = 0; l < b.size(); ++l)
    for (std::size_t m = 0; m < b.size(); ++m) out.coeffs[m] += c.coeffs.at(l) * b.decomposition(l, m);
  return out;
}

Character to_delta_basis(const Character& c, const BlockData& b) {
  if (c.basis == Basis::Delta) return c;
  // Peel off maximal labels: the table is unitriangular.
  Character rest = c;
  Character out{Basis::Delta, std::vector<long>(b.size(), 0)};
  std::vector<std::size_t> order(b.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> done;
  while (done.size() < b.size()) {
    for (std::size_t l : order) {
      if (std::find(done.begin(), done.end(), l) != done.end()) continue;
      bool maximal = true;
      for (std::size_t m = 0; m < b.size(); ++m)
        if (b.lt(l, m) && std::find(done.begin(), done.end(), m) == done.end()) maximal = false;
      if (!maximal) continue;
      const long k = rest.coeffs[l];
      out.coeffs[l] = k;
      if (k != 0)
        for (std::size_t m = 0; m < b.size(); ++m) rest.coeffs[m] -= k * b.decomposition(l, m);
      done.push_back(l);
      break;
    }
  }
  return out;
}

Character wall_cross(const std::string& s, const Character& c, const BlockData& b) {
  const std::size_t n = b.size();
  auto delta_image = [&](std::size_t l) {
    const WallEntry e = b.wall(l, s);
    if (e.kind == WallKind::Unknown)
      throw InputError("insufficient alcove data for wall " + s + " at " + b.label(l));
    if (e.kind == WallKind::Exterior)
      throw InputError("wall " + s + " at " + b.label(l) + " is exterior; no standard partner");
    return Character::unit(Basis::Delta, n, l) + Character::unit(Basis::Delta, n, e.partner);
  };
  if (c.basis == Basis::Delta) {
    Character out{Basis::Delta, std::vector<long>(n, 0)};
    for (std::size_t l = 0; l < n; ++l)
      if (c.coeffs.at(l) != 0) out = out + c.coeffs[l] * delta_image(l);
    return out;
  }
  std::map<std::size_t, Character> memo;
  std::function<Character(std::size_t)> simple_image = [&](std::size_t l) -> Character {
    auto it = memo.find(l);
    if (it != memo.end()) return it->second;
    const WallEntry e = b.wall(l, s);
    Character out{Basis::L, std::vector<long>(n, 0)};
    if (e.kind == WallKind::Unknown)
      throw InputError("insufficient alcove data for wall " + s + " at " + b.label(l));
    if (e.kind == WallKind::Up) {
      out = to_L_basis(delta_image(l), b);
      for (std::size_t m = 0; m < n; ++m)
        if (b.lt(m, l) && b.decomposition(l, m) != 0) out = out - b.decomposition(l, m) * simple_image(m);
    }
    memo.emplace(l, out);
    return out;
  };
  Character out{Basis::L, std::vector<long>(n, 0)};
  for (std::size_t l = 0; l < n; ++l)
    if (c.coeffs.at(l) != 0) out = out + c.coeffs[l] * simple_image(l);
  return out;
}

std::string format_character(const Character& c, const BlockData& b) {
  std::string out;
  for (std::size_t k = b.size(); k-- > 0;) {
    long x = c.coeffs.at(k);
    if (x == 0) continue;
    if (out.empty()) {
      if (x < 0) out += "-";
    } else {
      out += x < 0 ? " - " : " + ";
    }
    if (x < 0) x = -x;
    if (x != 1) out += std::to_string(x) + "·";
    out += b.label(k);
  }
  return out.empty() ? "0" : out;
}

long hom_dim(const std::vector<long>& delta_mults, const std::vector<long>& nabla_mults) {
  if (delta_mults.size() != nabla_mults.size()) throw InputError("multiplicity vectors differ in length");
  long s = 0;
  for (std::size_t i = 0; i < delta_mults.size(); ++i) {
    if (delta_mults[i] < 0 || nabla_mults[i] < 0) throw InputError("negative filtration multiplicity");
    s += delta_mults[i] * nabla_mults[i];
  }
  return s;
}

std::vector<long> multiplicities(const std::string& labels, const BlockData& b) {
  std::vector<long> out(b.size(), 0);
  std::istringstream is(labels);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto t = trim(item);
    if (!t.empty()) ++out[b.index(t)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Layers

LayerCounts counts_of(const LoewyProfile& p, const BlockData& b) {
  LayerCounts out(p.length(), std::vector<long>(b.size(), 0));
  for (std::size_t t = 0; t < p.length(); ++t)
    for (const auto& x : p.layers[t]) ++out[t][b.index(x)];
  return out;
}

LoewyProfile profile_of(const LayerCounts& c, const BlockData& b) {
  LoewyProfile p;
  for (const auto& layer : c) {
    std::vector<std::string> labels;
    for (std::size_t m = 0; m < layer.size(); ++m)
      for (long k = 0; k < layer[m]; ++k) labels.push_back(b.label(m));
    p.layers.push_back(std::move(labels));
  }
  while (!p.layers.empty() && p.layers.back().empty()) p.layers.pop_back();
  return p;
}

LayerCounts placement_counts(const HeadPlacement& hp, const BlockData& b) {
  LayerCounts out;
  for (const auto& [l, shift] : hp) {
    const auto& layers = b.layers(l);
    if (out.size() < shift + layers.size()) out.resize(shift + layers.size(), std::vector<long>(b.size(), 0));
    for (std::size_t t = 0; t < layers.size(); ++t)
      for (std::size_t m = 0; m < b.size(); ++m) out[shift + t][m] += layers[t][m];
  }
  return out;
}

LoewyProfile layers_from_placement(const HeadPlacement& hp, const BlockData& b) {
  return profile_of(placement_counts(hp, b), b);
}

HeadPlacement projective_placement(const BlockData& b, std::size_t m) {
  HeadPlacement hp;
  for (std::size_t l = 0; l < b.size(); ++l) {
    const auto& layers = b.layers(l);
    for (std::size_t t = 0; t < layers.size(); ++t)
      for (long k = 0; k < layers[t][m]; ++k) hp.emplace_back(l, t);
  }
  std::sort(hp.begin(), hp.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second, x.first) < std::tie(y.second, y.first);
  });
  return hp;
}

LoewyProfile projective_layers(const BlockData& b, std::size_t m) {
  return layers_from_placement(projective_placement(b, m), b);
}

std::vector<HeadPlacement> solve_placement(const LoewyProfile& target, const std::vector<std::size_t>& labels,
                                           const BlockData& b) {
  const LayerCounts goal = counts_of(target, b);
  std::vector<std::size_t> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<HeadPlacement> found;
  if (sorted.empty()) {
    if (goal.empty()) found.emplace_back();
    return found;
  }
  LayerCounts acc(goal.size(), std::vector<long>(b.size(), 0));
  HeadPlacement current;
  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (k == sorted.size()) {
      if (acc == goal) found.push_back(current);
      return;
    }
    const std::size_t l = sorted[k];
    const auto& layers = b.layers(l);
    if (layers.size() > goal.size()) return;
    std::size_t lo = 0;
    if (k > 0 && sorted[k - 1] == l) lo = current.back().second;
    for (std::size_t shift = lo; shift + layers.size() <= goal.size(); ++shift) {
      bool fits = true;
      for (std::size_t t = 0; t < layers.size() && fits; ++t)
        for (std::size_t m = 0; m < b.size() && fits; ++m)
          fits = acc[shift + t][m] + layers[t][m] <= goal[shift + t][m];
      if (!fits) continue;
      for (std::size_t t = 0; t < layers.size(); ++t)
        for (std::size_t m = 0; m < b.size(); ++m) acc[shift + t][m] += layers[t][m];
      current.emplace_back(l, shift);
      search(k + 1);
      current.pop_back();
      for (std::size_t t = 0; t < layers.size(); ++t)
        for (std::size_t m = 0; m < b.size(); ++m) acc[shift + t][m] -= layers[t][m];
    }
  };
  search(0);
  return found;
}

const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::size_t>>>>& sl4_tilting_placements() {
  static const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::size_t>>>> p = {
      {"1", {{"1", 0}}},
      {"2", {{"1", 0}, {"2", 1}}},
      {"3", {{"2", 0}, {"3", 1}}},
      {"fl", {{"3", 0}, {"fl", 1}}},
      {"4", {{"2", 0}, {"3", 1}, {"3'", 1}, {"4", 2}}},
      {"5", {{"3", 0}, {"3'", 0}, {"fl", 1}, {"fl'", 1}, {"4", 1}, {"5", 2}}},
  };
  return p;
}

HeadPlacement placement_from_labels(const std::vector<std::pair<std::string, std::size_t>>& p, const BlockData& b) {
  HeadPlacement hp;
  for (const auto& [l, s] : p) hp.emplace_back(b.index(l), s);
  return hp;
}

SymmetryReport bgg_symmetry_check(const std::vector<LoewyProfile>& projectives, const BlockData& b) {
  SymmetryReport r;
  if (projectives.size() != b.size()) throw InputError("need one projective profile per label");
  std::vector<LayerCounts> counts;
  std::size_t depth = 0;
  for (const auto& p : projectives) {
    counts.push_back(counts_of(p, b));
    depth = std::max(depth, p.length());
  }
  auto at = [&](std::size_t m, std::size_t s, std::size_t l) -> long {
    return s < counts[m].size() ? counts[m][s][l] : 0;
  };
  for (std::size_t s = 0; s < depth; ++s)
    for (std::size_t l = 0; l < b.size(); ++l)
      for (std::size_t m = l + 1; m < b.size(); ++m)
        if (at(m, s, l) != at(l, s, m)) {
          r.passed = false;
          r.witness = std::make_tuple(s, l, m);
          std::ostringstream os;
          os << "[rad_" << s << " P(" << b.label(m) << "):L(" << b.label(l) << ")] = " << at(m, s, l)
             << " but [rad_" << s << " P(" << b.label(l) << "):L(" << b.label(m) << ")] = " << at(l, s, m);
          r.message = os.str();
          return r;
        }
  r.message = "symmetric in every layer";
  return r;
}

SymmetryReport bgg_symmetry_check(const BlockData& b) {
  std::vector<LoewyProfile> ps;
  for (std::size_t m = 0; m < b.size(); ++m) ps.push_back(projective_layers(b, m));
  return bgg_symmetry_check(ps, b);
}

std::vector<LoewyProfile> corrupted_projectives(const BlockData& b, std::size_t m, std::size_t layer,
                                                const std::string& label) {
  std::vector<LoewyProfile> ps;
  for (std::size_t k = 0; k < b.size(); ++k) ps.push_back(projective_layers(b, k));
  auto& l = ps.at(m).layers.at(layer);
  auto it = std::find(l.begin(), l.end(), label);
  if (it == l.end()) throw InputError("label " + label + " does not occur in that layer");
  l.erase(it);
  return ps;
}

// ---------------------------------------------------------------------------
// .lay files

std::vector<LayEntry> parse_lay(std::istream& in, const std::string& source) {
  std::vector<LayEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    const auto head = words(line.substr(0, colon == std::string::npos ? line.size() : colon));
    if (colon == std::string::npos || head.size() != 2)
      throw ParseError(source, lineno, "expected '<kind> <label> : layers'");
    LayEntry e{head[0], head[1], {}};
    try {
      e.profile = parse_profile(line.substr(colon + 1));
    } catch (const InputError& err) {
      throw ParseError(source, lineno, err.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<LayEntry> parse_lay_string(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_lay(in, source);
}

std::string format_lay(const std::vector<LayEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += e.kind + " " + e.label + " : " + e.profile.str() + "\n";
  return out;
}

}  // namespace qhr
