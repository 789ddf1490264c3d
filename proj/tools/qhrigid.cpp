#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qhrigid/acceptance.hpp"
#include "qhrigid/char_calculus.hpp"
#include "qhrigid/coeff_quiver.hpp"
#include "qhrigid/data.hpp"
#include "qhrigid/quasi_hereditary.hpp"
#include "qhrigid/rigidity.hpp"

namespace {

using namespace qhr;
using json = nlohmann::json;

enum Exit { kOk = 0, kFalse = 1, kInput = 2 };

struct RunConfig {
  std::uint64_t seed = 0;
  unsigned long field = 0;  // 0: keep the file's field
  std::string format = "text";
  bool verbose = false;
};

bool as_json(const RunConfig& c) { return c.format == "json"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::size_t weight_index(const StandardSystem& sys, const std::string& w) {
  auto i = sys.poset().find(w);
  if (!i) throw InputError("unknown weight '" + w + "'");
  return *i;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

LoadedModule load_module(const std::string& path, const RunConfig& cfg) {
  LoadedModule lm = load_rep_file(path);
  if (cfg.field != 0 && cfg.field != lm.algebra->field().characteristic()) {
    AlgebraPtr alg = load_algebra(lm.algebra_path, cfg.field);
    std::ifstream in(path);
    lm.rep = parse_rep_body(in, path, alg);
    lm.algebra = alg;
  }
  return lm;
}

// Socle layers listed top first, like radical layers.
LoewyProfile socle_top_first(const Representation& m) {
  LoewyProfile p = socle_profile(m);
  std::reverse(p.layers.begin(), p.layers.end());
  return p;
}

// ---------------------------------------------------------------------------

int algebra_check(const std::string& path, const RunConfig& cfg) {
  AlgebraPtr alg = load_algebra(path, cfg.field);
  const Quiver& q = alg->quiver();
  std::vector<std::string> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    arrows.push_back(q.arrow(a).name + ":" + q.label(q.arrow(a).source) + "->" + q.label(q.arrow(a).target));
  if (as_json(cfg)) {
    json j;
    j["field"] = alg->field().characteristic();
    j["vertices"] = q.labels();
    j["arrows"] = arrows;
    j["dim"] = alg->dim();
    j["loewy_length"] = alg->radical_powers().size() - 1;
    j["duality"] = alg->has_duality();
    json paths = json::array();
    for (const auto& p : alg->basis()) paths.push_back(path_name(q, p));
    j["basis"] = paths;
    emit(j);
  } else {
    std::cout << "field " << alg->field().characteristic() << "\n"
              << "vertices " << join(q.labels(), " ") << "\n"
              << "arrows " << join(arrows, " ") << "\n"
              << "dim " << alg->dim() << "\n"
              << "loewy length " << alg->radical_powers().size() - 1 << "\n"
              << "duality " << (alg->has_duality() ? "yes" : "no") << "\n";
    if (cfg.verbose)
      for (const auto& p : alg->basis()) std::cout << "  " << path_name(q, p) << "\n";
  }
  return kOk;
}

int module_series(const std::string& path, const std::string& type, const RunConfig& cfg) {
  LoadedModule lm = load_module(path, cfg);
  const LoewyProfile p = type == "socle" ? socle_top_first(lm.rep) : radical_profile(lm.rep);
  if (as_json(cfg)) {
    json j;
    j["type"] = type;
    j["dim"] = lm.rep.dim();
    j["loewy_length"] = p.length();
    j["layers"] = profile_json(p);
    emit(j);
  } else {
    std::cout << type << " : " << p.str() << "\n";
  }
  return kOk;
}

int qh_verify(const std::string& path, const RunConfig& cfg) {
  StandardSystem sys(load_algebra(path, cfg.field), cfg.seed);
  const QHReport r = check_quasihereditary(sys);
  if (as_json(cfg)) {
    emit(qh_report_json(sys, r));
  } else {
    for (const auto& w : r.weights) {
      std::cout << sys.poset().label(w.label) << ": Delta " << radical_profile(sys.standard(w.label)).str()
                << "  End=" << w.end_dim << "  (i) " << (w.axiom_i ? "ok" : "FAIL") << "  (ii) "
                << (w.axiom_ii ? "ok" : "FAIL") << "\n";
      if (!w.filtration.ok() && !w.filtration.witness.empty()) std::cout << "  " << w.filtration.witness << "\n";
    }
    std::cout << (r.quasi_hereditary ? "quasi-hereditary" : "not quasi-hereditary") << "\n";
  }
  return r.quasi_hereditary ? kOk : kFalse;
}

int tilting_build(const std::string& path, const std::string& weight, const std::string& out, const RunConfig& cfg) {
  StandardSystem sys(load_algebra(path, cfg.field), cfg.seed);
  const std::size_t l = weight_index(sys, weight);
  const Representation& t = sys.tilting(l);
  const auto f = find_delta_filtration(sys, t);
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw InputError("cannot write " + out);
    write_rep(os, t, path);
  }
  if (as_json(cfg)) {
    json j;
    j["weight"] = weight;
    j["dim"] = t.dim();
    j["radical"] = profile_json(radical_profile(t));
    j["socle"] = profile_json(socle_top_first(t));
    if (f.ok()) j["delta_filtration"] = filtration_json(sys, *f.filtration);
    emit(j);
  } else {
    std::cout << "T(" << weight << ") dim " << t.dim() << "\n"
              << "radical : " << radical_profile(t).str() << "\n"
              << "socle   : " << socle_top_first(t).str() << "\n";
    if (f.ok()) {
      std::vector<std::string> steps;
      for (const auto& s : f.filtration->steps)
        steps.push_back("Delta(" + sys.poset().label(s.label) + ")<" + std::to_string(s.shift) + ">");
      std::cout << "delta filtration : " << join(steps, ", ") << "\n";
    }
  }
  return kOk;
}

std::string verdict(const std::optional<bool>& v) { return v ? (*v ? "rigid" : "not rigid") : "n/a"; }

int rigidity_check(const std::string& path, const std::string& weight, const std::string& method,
                   const RunConfig& cfg) {
  StandardSystem sys(load_algebra(path, cfg.field), cfg.seed);
  const std::size_t l = weight_index(sys, weight);
  const Method m = method == "theorem" ? Method::Theorem : method == "direct" ? Method::Oracle : Method::Both;
  const PipelineReport r = rigidity_pipeline(sys, l, m);
  if (as_json(cfg)) {
    emit(pipeline_json(sys, r));
  } else {
    std::cout << "T(" << weight << ") : " << r.profile.str() << "\n"
              << "hypothesis (all P radical-respecting) : " << (r.hypothesis ? "yes" : "no") << "\n";
    for (const auto* rep : {&r.delta_l, &r.l_nabla}) {
      if (!*rep) continue;
      for (const auto& c : (*rep)->checks) {
        std::cout << side_name(c.side) << " " << filtration_name(c.kind) << " : " << (c.passed ? "pass" : "FAIL");
        for (const auto& e : c.entries)
          if (!e.pass) std::cout << "  [" << sys.poset().label(e.label) << ", s=" << e.shift << "]";
        std::cout << "\n";
      }
    }
    if (m != Method::Oracle) std::cout << "theorem : " << verdict(r.rigid_theorem) << "\n";
    if (m != Method::Theorem) std::cout << "direct  : " << verdict(r.rigid_oracle) << "\n";
    if (r.enumerator_agrees) std::cout << "enumerator agrees : " << (*r.enumerator_agrees ? "yes" : "no") << "\n";
    std::cout << "consistent : " << (r.consistent ? "true" : "false") << "\n";
    for (const auto& e : r.errors) std::cout << "error: " << e << "\n";
  }
  if (!r.consistent) return kFalse;
  const std::optional<bool> v = m == Method::Theorem ? r.rigid_theorem : r.rigid_oracle;
  return v && *v ? kOk : kFalse;
}

// ---------------------------------------------------------------------------

BlockData load_block(const std::string& path) { return path.empty() ? BlockData::sl4() : BlockData::from_file(path); }

int sl4_projectives(const std::string& block, bool all, const RunConfig& cfg) {
  const BlockData b = load_block(block);
  std::vector<LayEntry> entries;
  for (std::size_t m = 0; m < b.size(); ++m) {
    const std::string& l = b.label(m);
    // The primed labels mirror 3 and fl; they are listed only with --all.
    if (!all && block.empty() && !l.empty() && l.back() == '\'') continue;
    entries.push_back({"projective", l, projective_layers(b, m)});
  }
  if (as_json(cfg)) {
    json j = json::object();
    for (const auto& e : entries) j[e.label] = profile_json(e.profile);
    emit(j);
  } else {
    std::cout << format_lay(entries);
  }
  return kOk;
}

int sl4_tiltings(const std::string& block, const RunConfig& cfg) {
  const BlockData b = load_block(block);
  std::vector<LayEntry> entries;
  json j = json::object();
  for (const auto& [label, placement] : sl4_tilting_placements()) {
    const HeadPlacement hp = placement_from_labels(placement, b);
    const LoewyProfile p = layers_from_placement(hp, b);
    entries.push_back({"tilting", label, p});
    json pl = json::array();
    for (const auto& [l, s] : placement) pl.push_back({{"delta", l}, {"shift", s}});
    j[label] = {{"layers", profile_json(p)}, {"placement", pl}};
  }
  if (as_json(cfg))
    emit(j);
  else
    std::cout << format_lay(entries);
  return kOk;
}

int sl4_wallcross(const std::string& block, const std::string& s, const std::string& basis, const std::string& label,
                  const RunConfig& cfg) {
  const BlockData b = load_block(block);
  Basis bs;
  if (basis == "L")
    bs = Basis::L;
  else if (basis == "D" || basis == "Delta" || basis == "Δ")
    bs = Basis::Delta;
  else
    throw InputError("basis must be L or D");
  const Character c = wall_cross(s, Character::unit(bs, b.size(), b.index(label)), b);
  const std::string text = format_character(c, b);
  if (as_json(cfg)) {
    json coeffs = json::object();
    for (std::size_t i = 0; i < b.size(); ++i)
      if (c.coeffs[i] != 0) coeffs[b.label(i)] = c.coeffs[i];
    emit({{"generator", s}, {"basis", bs == Basis::L ? "L" : "Delta"}, {"label", label}, {"character", text},
          {"coefficients", coeffs}});
  } else {
    std::cout << text << "\n";
  }
  return kOk;
}

int sl4_homdim(const std::string& block, const std::string& delta, const std::string& nabla, const RunConfig& cfg) {
  const BlockData b = load_block(block);
  const long d = hom_dim(multiplicities(delta, b), multiplicities(nabla, b));
  if (as_json(cfg))
    emit({{"delta", delta}, {"nabla", nabla}, {"hom_dim", d}});
  else
    std::cout << d << "\n";
  return kOk;
}

int render(const std::string& path, bool ascii, const RunConfig& cfg) {
  LoadedModule lm = load_module(path, cfg);
  const CoefficientQuiver cq = extract(lm.rep);
  if (ascii) {
    std::cout << render_ascii(cq);
  } else {
    std::string name = path;
    const auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    std::cout << render_dot(cq, name);
  }
  return kOk;
}

int selftest(const RunConfig& cfg) {
  bool ok = true;
  json j = json::array();
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id, cfg.seed);
    ok = ok && r.passed;
    if (as_json(cfg)) {
      j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"notes", r.notes}});
    } else {
      std::cout << format_criterion(r) << "\n";
      if (!r.passed || cfg.verbose)
        for (const auto& n : r.notes) std::cout << "      " << n << "\n";
      std::cout.flush();
    }
  }
  if (as_json(cfg)) emit(j);
  return ok ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-hereditary algebras, tilting modules and rigidity"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--field", cfg.field, "Override the characteristic of the algebra (0 or a prime)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("-v,--verbose", cfg.verbose, "More detail");

  std::function<int()> action;
  std::string path, weight, type = "radical", method = "both", out, block, s, basis, label, delta, nabla;
  bool all = false, ascii = false, dot = false;

  auto* algebra = app.add_subcommand("algebra", "Algebra inspection");
  algebra->require_subcommand(1);
  auto* alg_check = algebra->add_subcommand("check", "Parse an algebra and report its basis");
  alg_check->add_option("algebra", path, "Algebra file or bundled name")->required();
  alg_check->callback([&] { action = [&] { return algebra_check(path, cfg); }; });

  auto* module = app.add_subcommand("module", "Module inspection");
  module->require_subcommand(1);
  auto* series = module->add_subcommand("series", "Radical or socle series");
  series->add_option("module", path, "Module file (.rep)")->required();
  series->add_option("--type", type, "radical or socle")->check(CLI::IsMember({"radical", "socle"}));
  series->callback([&] { action = [&] { return module_series(path, type, cfg); }; });

  auto* qh = app.add_subcommand("qh", "Quasi-hereditary structure");
  qh->require_subcommand(1);
  auto* verify = qh->add_subcommand("verify", "Check the quasi-hereditary axioms");
  verify->add_option("algebra", path)->required();
  verify->callback([&] { action = [&] { return qh_verify(path, cfg); }; });

  auto* tilting = app.add_subcommand("tilting", "Tilting modules");
  tilting->require_subcommand(1);
  auto* build = tilting->add_subcommand("build", "Build T(weight) by Ringel's construction");
  build->add_option("algebra", path)->required();
  build->add_option("--weight", weight)->required();
  build->add_option("--out", out, "Also write the module as a .rep file");
  build->callback([&] { action = [&] { return tilting_build(path, weight, out, cfg); }; });

  auto* rigidity = app.add_subcommand("rigidity", "Rigidity of tilting modules");
  rigidity->require_subcommand(1);
  auto* rcheck = rigidity->add_subcommand("check", "Decide whether T(weight) is rigid");
  rcheck->add_option("algebra", path)->required();
  rcheck->add_option("--weight", weight)->required();
  rcheck->add_option("--method", method)->check(CLI::IsMember({"theorem", "direct", "both"}))->capture_default_str();
  rcheck->callback([&] { action = [&] { return rigidity_check(path, weight, method, cfg); }; });

  auto* sl4 = app.add_subcommand("sl4", "Character calculus on the SL4 block");
  sl4->require_subcommand(1);
  sl4->add_option("--block", block, "Block data file instead of the bundled one");
  auto* projs = sl4->add_subcommand("projectives", "Loewy layers of the projectives");
  projs->add_flag("--all", all, "Include the primed labels");
  projs->callback([&] { action = [&] { return sl4_projectives(block, all, cfg); }; });
  auto* tilts = sl4->add_subcommand("tiltings", "Loewy layers of the tilting modules");
  tilts->callback([&] { action = [&] { return sl4_tiltings(block, cfg); }; });
  auto* wall = sl4->add_subcommand("wallcross", "Character of theta_s on L(label) or Delta(label)");
  wall->add_option("s", s)->required();
  wall->add_option("basis", basis, "L, D or Delta")->required();
  wall->add_option("label", label)->required();
  wall->callback([&] { action = [&] { return sl4_wallcross(block, s, basis, label, cfg); }; });
  auto* homdim = sl4->add_subcommand("homdim", "dim Hom(M, N) from Delta and nabla multiplicities");
  homdim->add_option("--delta", delta, "Delta factors of M, e.g. \"4,3,3',2\"")->required();
  homdim->add_option("--nabla", nabla, "nabla factors of N")->required();
  homdim->callback([&] { action = [&] { return sl4_homdim(block, delta, nabla, cfg); }; });

  auto* rend = app.add_subcommand("render", "Coefficient quiver of a module");
  rend->add_option("module", path)->required();
  auto* fdot = rend->add_flag("--dot", dot, "Graphviz output (default)");
  rend->add_flag("--ascii", ascii, "Plain text layers and edges")->excludes(fdot);
  rend->callback([&] { action = [&] { return render(path, ascii, cfg); }; });

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->callback([&] { action = [&] { return selftest(cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
