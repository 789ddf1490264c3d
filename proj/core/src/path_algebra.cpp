#include "qhrigid/path_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>

namespace qhr {

std::size_t Quiver::add_vertex(const std::string& label) {
  if (find_vertex(label)) throw InputError("duplicate vertex label '" + label + "'");
  labels_.push_back(label);
  return labels_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, std::size_t source, std::size_t target) {
  if (find_arrow(name)) throw InputError("duplicate arrow name '" + name + "'");
  if (source >= labels_.size() || target >= labels_.size())
    throw InputError("arrow '" + name + "' has an undeclared endpoint");
  arrows_.push_back({name, source, target});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  Quiver q;
  q.labels_ = labels_;
  for (const auto& a : arrows_) q.arrows_.push_back({a.name, a.target, a.source});
  return q;
}

bool operator<(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  return a.arrows < b.arrows;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.label(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '.';
    out += q.arrow(p.arrows[i]).name;
  }
  return out;
}

std::optional<Path> concat(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

// ---------------------------------------------------------------------------
// .alg parsing

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw InputError("bad coefficient '" + s + "'");
  if (s.find('/') != std::string::npos && r.get_den() == 0) throw InputError("zero denominator");
  r.canonicalize();
  return r;
}

Path parse_path(const Quiver& q, const std::string& text) {
  Path p;
  std::string name;
  std::istringstream is(text);
  bool first = true;
  while (std::getline(is, name, '.')) {
    auto a = q.find_arrow(name);
    if (!a) throw InputError("unknown arrow '" + name + "'");
    const auto& arr = q.arrow(*a);
    if (first) {
      p.source = arr.source;
      first = false;
    } else if (arr.source != p.target) {
      throw InputError("path '" + text + "' is not composable");
    }
    p.target = arr.target;
    p.arrows.push_back(*a);
  }
  if (first) throw InputError("empty path");
  return p;
}

Relation parse_relation(const Quiver& q, const std::string& body) {
  std::string cleaned = body;
  if (auto eq = cleaned.find('='); eq != std::string::npos) {
    auto rhs = split_ws(cleaned.substr(eq + 1));
    if (rhs.size() != 1 || rhs[0] != "0") throw InputError("relation right-hand side must be 0");
    cleaned = cleaned.substr(0, eq);
  }
  // '+' and '-' act as sign operators; a term is [coeff*]path with an unsigned coeff.
  Relation rel;
  std::size_t i = 0;
  int sign = 1;
  while (i < cleaned.size()) {
    char c = cleaned[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+' || c == '-') {
      if (c == '-') sign = -sign;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cleaned.size() && !std::isspace(static_cast<unsigned char>(cleaned[j])) && cleaned[j] != '+' &&
           cleaned[j] != '-')
      ++j;
    std::string tok = cleaned.substr(i, j - i);
    i = j;
    Rational coeff = 1;
    std::string path_text = tok;
    if (auto star = tok.find('*'); star != std::string::npos) {
      coeff = parse_rational(tok.substr(0, star));
      path_text = tok.substr(star + 1);
    }
    rel.terms.push_back({coeff * sign, parse_path(q, path_text)});
    sign = 1;
  }
  if (rel.terms.empty()) throw InputError("empty relation");
  return rel;
}

}  // namespace

AlgebraSpec parse_alg(std::istream& in, const std::string& source) {
  AlgebraSpec spec;
  bool have_field = false;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<std::size_t, std::string>> pending_relations;
  std::vector<std::pair<std::size_t, std::string>> pending_duality;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    try {
      const std::string& kw = toks[0];
      if (kw == "field") {
        if (toks.size() != 2) throw InputError("expected: field <0|p>");
        spec.field = Field(std::stoul(toks[1]));
        have_field = true;
      } else if (kw == "vertex") {
        if (toks.size() < 2) throw InputError("expected: vertex <label> ...");
        for (std::size_t i = 1; i < toks.size(); ++i) spec.quiver.add_vertex(toks[i]);
      } else if (kw == "order") {
        if (toks.size() != 4 || toks[2] != "<") throw InputError("expected: order <label> < <label>");
        auto a = spec.quiver.find_vertex(toks[1]);
        auto b = spec.quiver.find_vertex(toks[3]);
        if (!a || !b) throw InputError("order mentions an undeclared vertex");
        spec.order_covers.emplace_back(*a, *b);
      } else if (kw == "arrow") {
        if (toks.size() != 4) throw InputError("expected: arrow <name> <src> <dst>");
        auto s = spec.quiver.find_vertex(toks[2]);
        auto t = spec.quiver.find_vertex(toks[3]);
        if (!s || !t) throw InputError("arrow '" + toks[1] + "' has an undeclared endpoint");
        spec.quiver.add_arrow(toks[1], *s, *t);
      } else if (kw == "relation") {
        pending_relations.emplace_back(lineno, line.substr(line.find("relation") + 8));
      } else if (kw == "duality") {
        for (std::size_t i = 1; i < toks.size(); ++i) pending_duality.emplace_back(lineno, toks[i]);
      } else {
        throw InputError("unknown directive '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  if (!have_field) throw ParseError(source, lineno, "missing 'field' directive");
  for (const auto& [ln, body] : pending_relations) {
    try {
      spec.relations.push_back(parse_relation(spec.quiver, body));
    } catch (const std::exception& e) {
      throw ParseError(source, ln, e.what());
    }
  }
  if (!pending_duality.empty()) {
    std::vector<std::size_t> map(spec.quiver.arrow_count());
    std::vector<bool> seen(map.size(), false);
    for (const auto& [ln, tok] : pending_duality) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError(source, ln, "expected <arrow>=<arrow>");
      auto a = spec.quiver.find_arrow(tok.substr(0, eq));
      auto b = spec.quiver.find_arrow(tok.substr(eq + 1));
      if (!a || !b) throw ParseError(source, ln, "duality mentions an unknown arrow");
      if (seen[*a] || seen[*b]) {
        if (!(seen[*a] && map[*a] == *b)) throw ParseError(source, ln, "arrow paired twice in duality");
      }
      map[*a] = *b;
      map[*b] = *a;
      seen[*a] = seen[*b] = true;
    }
    for (std::size_t i = 0; i < map.size(); ++i)
      if (!seen[i]) throw ParseError(source, lineno, "arrow '" + spec.quiver.arrow(i).name + "' has no duality partner");
    spec.duality = map;
  }
  return spec;
}

AlgebraSpec parse_alg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_alg(in, path);
}

AlgebraSpec parse_alg_string(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_alg(in, source);
}

// ---------------------------------------------------------------------------
// Construction

namespace {

using SparseRow = std::map<std::size_t, Rational>;

class SparseEchelon {
 public:
  explicit SparseEchelon(Field f) : f_(f) {}

  // Returns the reduced, normalized vector if it was new.
  std::optional<SparseRow> insert(SparseRow v) {
    while (!v.empty()) {
      auto lead = v.begin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) break;
      Rational c = v.begin()->second;
      for (const auto& [col, x] : it->second) {
        Rational nv = f_.sub(v.count(col) ? v[col] : Rational(0), f_.mul(c, x));
        if (sgn(nv) == 0) v.erase(col);
        else v[col] = nv;
      }
    }
    if (v.empty()) return std::nullopt;
    Rational inv = f_.inv(v.begin()->second);
    for (auto& [col, x] : v) x = f_.mul(x, inv);
    rows_[v.begin()->first] = v;
    return v;
  }

  std::size_t rank() const { return rows_.size(); }

  // Fully reduced rows keyed by pivot.
  std::map<std::size_t, SparseRow> reduced() const {
    std::map<std::size_t, SparseRow> out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseRow r = it->second;
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto& [col, x] : r) {
          if (col == it->first) continue;
          auto done = out.find(col);
          if (done == out.end()) continue;
          Rational c = x;
          for (const auto& [c2, y] : done->second) {
            Rational nv = f_.sub(r.count(c2) ? r[c2] : Rational(0), f_.mul(c, y));
            if (sgn(nv) == 0) r.erase(c2);
            else r[c2] = nv;
          }
          changed = true;
          break;
        }
      }
      out[it->first] = r;
    }
    return out;
  }

 private:
  Field f_;
  std::map<std::size_t, SparseRow> rows_;
};

struct Truncated {
  std::vector<Path> paths;  // all paths of length < N, sorted
  std::map<Path, std::size_t> index;
};

Truncated enumerate_paths(const Quiver& q, std::size_t n, std::size_t cap) {
  Truncated t;
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) frontier.push_back({v, v, {}});
  for (std::size_t len = 0; len < n && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      t.paths.push_back(p);
      if (t.paths.size() > cap) throw InputError("path enumeration exceeded the dimension cap; possibly infinite-dimensional");
      if (len + 1 < n)
        for (std::size_t a = 0; a < q.arrow_count(); ++a)
          if (q.arrow(a).source == p.target) {
            Path e = p;
            e.arrows.push_back(a);
            e.target = q.arrow(a).target;
            next.push_back(std::move(e));
          }
    }
    frontier = std::move(next);
  }
  std::sort(t.paths.begin(), t.paths.end());
  for (std::size_t i = 0; i < t.paths.size(); ++i) t.index[t.paths[i]] = i;
  return t;
}

struct IdealResult {
  Truncated trunc;
  SparseEchelon echelon;
};

IdealResult truncated_ideal(const AlgebraSpec& spec, std::size_t n, std::size_t cap) {
  const Quiver& q = spec.quiver;
  IdealResult res{enumerate_paths(q, n, cap), SparseEchelon(spec.field)};
  const auto& idx = res.trunc.index;
  auto to_row = [&](const std::vector<std::pair<Rational, Path>>& terms) {
    SparseRow r;
    for (const auto& [c, p] : terms) {
      auto it = idx.find(p);
      if (it == idx.end()) continue;  // length >= n
      Rational nv = spec.field.add(r.count(it->second) ? r[it->second] : Rational(0), spec.field.reduce(c));
      if (sgn(nv) == 0) r.erase(it->second);
      else r[it->second] = nv;
    }
    return r;
  };
  std::deque<SparseRow> queue;
  for (const auto& rel : spec.relations) {
    std::vector<std::pair<Rational, Path>> terms;
    for (const auto& t : rel.terms) terms.emplace_back(t.coeff, t.path);
    queue.push_back(to_row(terms));
  }
  while (!queue.empty()) {
    SparseRow v = std::move(queue.front());
    queue.pop_front();
    auto added = res.echelon.insert(std::move(v));
    if (!added) continue;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      Path ap{q.arrow(a).source, q.arrow(a).target, {a}};
      std::vector<std::pair<Rational, Path>> left, right;
      for (const auto& [col, c] : *added) {
        const Path& p = res.trunc.paths[col];
        if (auto r = concat(p, ap)) right.emplace_back(c, *r);
        if (auto l = concat(ap, p)) left.emplace_back(c, *l);
      }
      if (!right.empty()) queue.push_back(to_row(right));
      if (!left.empty()) queue.push_back(to_row(left));
    }
  }
  return res;
}

}  // namespace

Algebra build_algebra(AlgebraSpec spec, std::size_t dim_cap) {
  if (dim_cap == 0) throw InputError("dimension cap must be positive");
  const Quiver& q = spec.quiver;
  for (const auto& rel : spec.relations) {
    const Path& first = rel.terms.front().path;
    for (const auto& t : rel.terms) {
      if (t.path.length() < 2) throw InputError("non-admissible relation: path '" + path_name(q, t.path) + "' has length < 2");
      if (t.path.source != first.source || t.path.target != first.target)
        throw InputError("relation terms do not share source and target");
    }
  }
  const std::size_t path_cap = 50 * dim_cap + 1000;

  // dim KQ/(I + J^n) is non-decreasing in n; once it stalls, J^n lies in I.
  std::size_t n = 1;
  auto current = truncated_ideal(spec, n, path_cap);
  std::size_t d = current.trunc.paths.size() - current.echelon.rank();
  for (;;) {
    if (d > dim_cap) throw InputError("basis exceeds dimension cap " + std::to_string(dim_cap) + "; possibly infinite-dimensional");
    auto next = truncated_ideal(spec, n + 1, path_cap);
    std::size_t dn = next.trunc.paths.size() - next.echelon.rank();
    if (dn == d) break;
    current = std::move(next);
    d = dn;
    ++n;
  }

  Algebra alg;
  alg.truncation_ = n;
  const auto reduced = current.echelon.reduced();
  const auto& paths = current.trunc.paths;
  std::vector<std::optional<std::size_t>> basis_index(paths.size());
  // Idempotents first, then the remaining normal paths in path order.
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (paths[i].length() == 0) {
      basis_index[i] = alg.basis_.size();
      alg.basis_.push_back(paths[i]);
    }
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (paths[i].length() > 0 && !reduced.count(i)) {
      basis_index[i] = alg.basis_.size();
      alg.basis_.push_back(paths[i]);
    }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    SparseVec nf;
    if (basis_index[i]) {
      nf.emplace_back(*basis_index[i], Rational(1));
    } else {
      for (const auto& [col, x] : reduced.at(i)) {
        if (col == i) continue;
        nf.emplace_back(*basis_index[col], spec.field.neg(x));
      }
      std::sort(nf.begin(), nf.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    alg.normal_form_[paths[i]] = std::move(nf);
  }
  alg.from_.assign(q.vertex_count(), {});
  for (std::size_t b = 0; b < alg.basis_.size(); ++b) alg.from_[alg.basis_[b].source].push_back(b);

  // Radical powers: normal forms of longer paths only involve longer paths,
  // so J^i is spanned by the normal paths of length >= i.
  const std::size_t dim = alg.basis_.size();
  for (std::size_t i = 0;; ++i) {
    std::vector<Vec> gens;
    for (std::size_t b = 0; b < dim; ++b)
      if (alg.basis_[b].length() >= i) gens.push_back(spec.field.unit_vec(dim, b));
    alg.radical_powers_.push_back(Subspace::span(spec.field, dim, gens));
    if (gens.empty()) break;
  }

  if (spec.duality) {
    const auto& dmap = *spec.duality;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& x = q.arrow(a);
      const auto& y = q.arrow(dmap[a]);
      if (dmap[dmap[a]] != a) throw InputError("duality pairing is not an involution");
      if (y.source != x.target || y.target != x.source)
        throw InputError("duality partner of '" + x.name + "' does not reverse it");
    }
  }
  alg.spec_ = std::move(spec);
  if (alg.spec_.duality) {
    for (const auto& rel : alg.spec_.relations) {
      Vec image(dim, Rational(0));
      for (const auto& t : rel.terms) {
        Path rev{t.path.target, t.path.source, {}};
        for (auto it = t.path.arrows.rbegin(); it != t.path.arrows.rend(); ++it)
          rev.arrows.push_back((*alg.spec_.duality)[*it]);
        for (const auto& [b, c] : alg.reduce(rev))
          image[b] = alg.field().add(image[b], alg.field().mul(c, alg.field().reduce(t.coeff)));
      }
      if (!is_zero(image)) throw InputError("duality does not preserve the relation ideal");
    }
  }
  return alg;
}

SparseVec Algebra::reduce(const Path& p) const {
  if (p.length() >= truncation_) return {};
  auto it = normal_form_.find(p);
  if (it == normal_form_.end()) throw InputError("path is not a path of this quiver");
  return it->second;
}

Vec Algebra::basis_vector(std::size_t i) const { return field().unit_vec(dim(), i); }

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  const Field& f = field();
  Vec out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      auto p = concat(basis_[i], basis_[j]);
      if (!p) continue;
      Rational c = f.mul(x[i], y[j]);
      for (const auto& [b, v] : reduce(*p)) out[b] = f.add(out[b], f.mul(c, v));
    }
  }
  return out;
}

Vec Algebra::dual(const Vec& x) const {
  if (!spec_.duality) throw InputError("algebra has no duality");
  const Field& f = field();
  Vec out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    const Path& p = basis_[i];
    Path rev{p.target, p.source, {}};
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) rev.arrows.push_back((*spec_.duality)[*it]);
    for (const auto& [b, v] : reduce(rev)) out[b] = f.add(out[b], f.mul(x[i], v));
  }
  return out;
}

Algebra Algebra::opposite() const {
  AlgebraSpec op;
  op.field = spec_.field;
  op.quiver = spec_.quiver.opposite();
  op.order_covers = spec_.order_covers;
  for (const auto& rel : spec_.relations) {
    Relation r;
    for (const auto& t : rel.terms) {
      Path rev{t.path.target, t.path.source, {t.path.arrows.rbegin(), t.path.arrows.rend()}};
      r.terms.push_back({t.coeff, rev});
    }
    op.relations.push_back(std::move(r));
  }
  return build_algebra(std::move(op), std::max<std::size_t>(dim(), 1));
}

}  // namespace qhr
