// isg: command line front end for the inverse semigroup toolkit.
//
// Exit status: 0 success, 1 a requested property check failed, 2 the
// input could not be read, parsed or validated.

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "isg/checks.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/groupoid.hpp"
#include "isg/ideals.hpp"
#include "isg/io.hpp"
#include "isg/tight.hpp"

using namespace isg;

namespace {

constexpr int exit_ok           = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error  = 2;

struct RunConfig {
  std::string command;
  std::string semigroup_path;
  std::string coverage_path;
  std::string nucleus_path;
  std::string units;
  std::string format      = "text";
  std::string check_level = "fast";
  std::string topology    = "patch";
  bool adjoin_improper    = false;
  std::size_t size_cap    = 4096;
};

struct Report {
  Json result;
  std::string text;
  std::vector<SuiteReport> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

// A file path, or a builtin fixture such as "symmetric_inverse(2)".
SemigroupPtr load_semigroup(const RunConfig& cfg) {
  SemigroupPtr s;
  if (std::filesystem::exists(cfg.semigroup_path)) {
    s = semigroup_from_json(read_json_file(cfg.semigroup_path));
  } else if (cfg.semigroup_path.find('(') != std::string::npos) {
    s = make_fixture(cfg.semigroup_path, {cfg.size_cap});
  } else {
    throw Error(ErrorKind::ParseError, "cannot read " + cfg.semigroup_path);
  }
  if (s->size() > cfg.size_cap)
    throw Error(ErrorKind::SizeLimit, std::to_string(s->size()) + " elements exceed --size-cap " + std::to_string(cfg.size_cap));
  return s;
}

Coverage load_coverage(const RunConfig& cfg, const SemigroupPtr& s) {
  if (cfg.coverage_path.empty()) return Coverage(s);
  if (cfg.coverage_path == "tight") return coverage_from_json(s, Json("tight"));
  return coverage_from_json(s, read_json_file(cfg.coverage_path));
}

std::string describe(const FiniteGroupoid& g) {
  std::ostringstream out;
  out << g.size() << " arrows, " << g.units().count() << " units\n";
  for (Arrow a = 0; a < g.size(); ++a)
    out << "  " << g.name(a) << " : " << g.name(g.d(a)) << " -> " << g.name(g.r(a)) << (g.is_unit(a) ? "  (unit)" : "")
        << "\n";
  return out.str();
}

Report groupoid_report(const FiniteGroupoid& g, const RunConfig& cfg) {
  Report r;
  r.result = groupoid_to_json(g);
  r.text   = cfg.format == "dot" ? groupoid_to_dot(g) : describe(g);
  return r;
}

FilterGroupoid universal(const SemigroupPtr& s, const RunConfig& cfg) {
  const auto top = cfg.topology == "tau" ? FilterTopology::tau : FilterTopology::patch;
  return filter_groupoid(s, {top, cfg.adjoin_improper});
}

Report cmd_validate(const RunConfig& cfg) {
  auto s = load_semigroup(cfg);
  Report r;
  r.result = semigroup_to_json(*s);
  std::ostringstream out;
  out << s->size() << " elements, " << s->idempotents().count() << " idempotents";
  if (s->zero()) out << ", zero " << s->name(*s->zero());
  if (s->identity()) out << ", identity " << s->name(*s->identity());
  bool pseudogroup = true;
  try {
    Pseudogroup p(s);
  } catch (const Error&) {
    pseudogroup = false;
  }
  out << (s->is_semilattice() ? ", semilattice" : "") << (pseudogroup ? ", pseudogroup" : "") << "\n";
  r.text = out.str();

  if (cfg.check_level == "full") {
    r.checks.push_back(germ_suite(s));
    r.checks.push_back(nucleus_suite(load_coverage(cfg, s)));
    if (pseudogroup && s->size() <= 16) r.checks.push_back(embedding_suite(Pseudogroup(s)));
    if (s->is_semilattice() && s->zero()) r.checks.push_back(tight_suite(s));
  }
  return r;
}

Report cmd_export(const RunConfig& cfg) {
  Report r;
  r.result = semigroup_to_json(*load_semigroup(cfg));
  return r;
}

Report cmd_pseudogroup(const RunConfig& cfg) {
  auto s   = load_semigroup(cfg);
  auto cov = load_coverage(cfg, s);
  auto u   = universal_pseudogroup(cov);
  Report r;
  r.result = pseudogroup_to_json(u);
  std::ostringstream out;
  out << u.semigroup().size() << " elements\n";
  for (ElementId i = 0; i < u.semigroup().size(); ++i) out << "  " << s->format(u.carrier(i)) << "\n";
  r.text = out.str();
  if (cfg.check_level == "full") {
    r.checks.push_back(nucleus_suite(cov));
    if (s->is_semilattice()) r.checks.push_back(embedding_suite(u.p()));
  }
  return r;
}

Report cmd_universal_groupoid(const RunConfig& cfg) {
  auto s = load_semigroup(cfg);
  auto r = groupoid_report(universal(s, cfg).groupoid, cfg);
  if (cfg.check_level == "full") r.checks.push_back(germ_suite(s));
  return r;
}

Report cmd_tight_groupoid(const RunConfig& cfg) {
  auto s = load_semigroup(cfg);
  auto t = tight_groupoid(s);
  auto r = groupoid_report(t.groupoid, cfg);
  if (cfg.check_level == "full") {
    SuiteReport sober{"tight groupoid", 0, {}};
    const auto rep = check_sober(t.groupoid);
    sober.check(rep.ok(), "sobriety: " + rep.witness);
    r.checks.push_back(sober);
    r.checks.push_back(tight_suite(idempotent_subsemigroup(*s).semigroup));
  }
  return r;
}

Report cmd_tight_filters(const RunConfig& cfg) {
  auto s   = load_semigroup(cfg);
  auto sub = idempotent_subsemigroup(*s);
  auto tf  = tight_filters(sub.semigroup);
  Report r;
  r.result = filters_to_json(*sub.semigroup, tf);
  std::ostringstream out;
  out << tf.size() << " tight filters of E(S)\n";
  for (const auto& f : tf.filters) out << "  ↑" << sub.semigroup->name(f.min) << " = " << sub.semigroup->format(f.carrier) << "\n";
  r.text = out.str();
  if (cfg.check_level == "full") r.checks.push_back(tight_suite(sub.semigroup));
  return r;
}

Report cmd_spectrum(const RunConfig& cfg) {
  auto s = load_semigroup(cfg);
  std::optional<UniversalPseudogroup> u;
  if (!cfg.coverage_path.empty()) u = universal_pseudogroup(load_coverage(cfg, s));
  const Pseudogroup frame = u ? u->p() : Pseudogroup(s);
  const auto sp = spectrum(frame);
  const auto& f = frame.semigroup();

  Report r;
  Json points = Json::array(), opens = Json::array();
  for (const auto& p : sp.points.filters) points.push_back({{"carrier", set_to_json(f, p.carrier)}, {"min", f.name(p.min)}});
  for (const auto& o : sp.space.opens()) {
    Json names = Json::array();
    for (auto i : o) names.push_back(sp.space.name(i));
    opens.push_back(std::move(names));
  }
  r.result = {{"opens", std::move(opens)}, {"points", std::move(points)}};
  std::ostringstream out;
  out << sp.points.size() << " points, " << sp.space.opens().size() << " open sets"
      << (sp.space.is_discrete() ? ", discrete" : "") << "\n";
  for (std::size_t i = 0; i < sp.points.size(); ++i) out << "  " << sp.space.name(i) << " = " << f.format(sp.points.filters[i].carrier) << "\n";
  r.text = out.str();
  if (cfg.check_level == "full") {
    SuiteReport sober{"spectrum", 0, {}};
    const auto rep = check_sober(space_groupoid(sp.space));
    sober.check(rep.ok(), "sobriety: " + rep.witness);
    r.checks.push_back(sober);
  }
  return r;
}

Report cmd_reduce(const RunConfig& cfg) {
  auto s = load_semigroup(cfg);
  auto l = universal(s, cfg);
  ElementSet units(l.groupoid.size());
  std::stringstream in(cfg.units);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    auto arrow = l.groupoid.find(item);
    if (!arrow) arrow = l.groupoid.find("↑" + item);
    if (!arrow || !l.groupoid.is_unit(*arrow)) throw Error(ErrorKind::ParseError, "--units: \"" + item + "\" is not a unit");
    units.insert(*arrow);
  }
  return groupoid_report(reduce(l, units).groupoid, cfg);
}

// {"fixed": [names]} gives nu(a) = least fixed point above a; otherwise an
// object mapping every element to its image.
ElementMap load_nucleus(const RunConfig& cfg, const FiniteInverseSemigroup& p) {
  const auto j = read_json_file(cfg.nucleus_path);
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "nucleus must be an object");
  auto lookup = [&](const Json& v, const std::string& where) {
    if (!v.is_string() || !p.find(v.get<std::string>())) throw Error(ErrorKind::ParseError, where + " is not an element");
    return *p.find(v.get<std::string>());
  };
  ElementMap nu(p.size());
  if (j.contains("fixed")) {
    ElementSet fixed(p.size());
    for (const auto& v : j["fixed"]) fixed.insert(lookup(v, "fixed point " + v.dump()));
    for (ElementId a = 0; a < p.size(); ++a) {
      auto m = minimum(p, p.up(a) & fixed);
      if (!m) throw Error(ErrorKind::ValidationError, "no least fixed point above " + p.name(a));
      nu[a] = *m;
    }
    return nu;
  }
  for (ElementId a = 0; a < p.size(); ++a) {
    if (!j.contains(p.name(a))) throw Error(ErrorKind::ParseError, "nucleus has no image for " + p.name(a));
    nu[a] = lookup(j[p.name(a)], "image of " + p.name(a));
  }
  return nu;
}

Report cmd_embed(const RunConfig& cfg) {
  auto s = load_semigroup(cfg);
  Pseudogroup p(s);
  const auto nu  = load_nucleus(cfg, *s);
  const auto rep = nucleus_embedding(p, nu);
  Report r;
  Json phi = Json::object();
  for (Arrow a = 0; a < rep.phi.size(); ++a) phi[rep.source.groupoid.name(a)] = rep.target.groupoid.name(rep.phi[a]);
  r.result = {{"phi", std::move(phi)},
              {"source", groupoid_to_json(rep.source.groupoid)},
              {"target", groupoid_to_json(rep.target.groupoid)}};
  std::ostringstream out;
  out << "embedding of " << rep.source.groupoid.size() << " arrows into " << rep.target.groupoid.size() << "\n";
  for (Arrow a = 0; a < rep.phi.size(); ++a)
    out << "  " << rep.source.groupoid.name(a) << " -> " << rep.target.groupoid.name(rep.phi[a]) << "\n";
  r.text = out.str();

  SuiteReport checks{"embedding", 0, {}};
  checks.check(rep.lands_in_target, "preimages are completely prime filters: " + rep.witness);
  checks.check(rep.injective, "injective: " + rep.witness);
  checks.check(rep.functorial, "functorial: " + rep.witness);
  checks.check(rep.preserves_inverse, "inverses: " + rep.witness);
  checks.check(rep.continuous, "continuous: " + rep.witness);
  checks.check(rep.open_onto_image, "open onto the image: " + rep.witness);
  checks.check(rep.r_closed, "image closed under ranges: " + rep.witness);
  r.checks.push_back(checks);
  return r;
}

void print(const RunConfig& cfg, const Report& r, double seconds) {
  if (cfg.command == "export") {
    std::cout << dump(r.result);
    return;
  }
  if (cfg.format == "json") {
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"cases", c.cases}, {"failures", c.failures}, {"name", c.name}, {"ok", c.ok()}});
    Json out = {{"command", cfg.command}, {"result", r.result}};
    if (!r.checks.empty()) out["checks"] = std::move(checks);
    std::cout << dump(out);
    return;
  }
  std::cout << r.text;
  if (cfg.format == "dot") return;
  for (const auto& c : r.checks) {
    std::cout << (c.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
    for (const auto& f : c.failures) std::cout << "  " << f << "\n";
  }
  std::cout << "time " << std::fixed << std::setprecision(3) << seconds << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverages, pseudogroups and groupoids of finite inverse semigroups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool coverage) {
    sub->add_option("--semigroup", cfg.semigroup_path, "JSON table, or a fixture such as symmetric_inverse(2)")->required();
    if (coverage) sub->add_option("--coverage", cfg.coverage_path, "JSON coverage file, or the builtin \"tight\"");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--size-cap", cfg.size_cap, "Largest semigroup accepted")->check(CLI::PositiveNumber);
    sub->add_option("--check-level", cfg.check_level, "Run the property suites with full")
        ->check(CLI::IsMember({"fast", "full"}));
  };
  auto groupoid_options = [&](CLI::App* sub) {
    sub->add_flag("--adjoin-improper", cfg.adjoin_improper, "Allow a semigroup without zero; S itself becomes an arrow");
    sub->add_option("--topology", cfg.topology, "Topology on the filters")->check(CLI::IsMember({"tau", "patch"}));
  };

  common(app.add_subcommand("validate", "Check a multiplication table and report its structure"), true);
  common(app.add_subcommand("export", "Print the canonical JSON table"), false);
  common(app.add_subcommand("pseudogroup", "Pseudogroup of closed compatible ideals of a coverage"), true);
  auto* ug = app.add_subcommand("universal-groupoid", "Groupoid of all filters");
  common(ug, false);
  groupoid_options(ug);
  common(app.add_subcommand("tight-groupoid", "Groupoid of filters over tight filters of E(S)"), false);
  common(app.add_subcommand("tight-filters", "Tight filters of the idempotents"), false);
  common(app.add_subcommand("spectrum", "Points of a finite frame"), true);
  auto* red = app.add_subcommand("reduce", "Restrict the filter groupoid to a set of units");
  common(red, false);
  groupoid_options(red);
  red->add_option("--units", cfg.units, "Comma separated units, as arrow or element names")->required();
  auto* emb = app.add_subcommand("embed", "Groupoid embedding induced by a nucleus");
  common(emb, false);
  emb->add_option("--nucleus", cfg.nucleus_path, "JSON file: a map a -> nu(a), or {\"fixed\": [...]}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  const std::map<std::string, Report (*)(const RunConfig&)> commands = {
      {"validate", cmd_validate},
      {"export", cmd_export},
      {"pseudogroup", cmd_pseudogroup},
      {"universal-groupoid", cmd_universal_groupoid},
      {"tight-groupoid", cmd_tight_groupoid},
      {"tight-filters", cmd_tight_filters},
      {"spectrum", cmd_spectrum},
      {"reduce", cmd_reduce},
      {"embed", cmd_embed},
  };
  try {
    const auto start  = std::chrono::steady_clock::now();
    const auto report = commands.at(cfg.command)(cfg);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    print(cfg, report, elapsed.count());
    return report.ok() ? exit_ok : exit_check_failed;
  } catch (const Error& e) {
    std::cerr << "isg " << cfg.command << ": " << e.what() << "\n";
    return exit_input_error;
  }
}
