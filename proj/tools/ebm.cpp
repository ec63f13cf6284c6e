// Command-line front end for the edge-biregular map toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 coset limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ebm/census.hpp"
#include "ebm/io.hpp"

namespace {

using namespace ebm;

constexpr int kOk = 0, kFail = 1, kInputError = 2, kResourceLimit = 3;

struct Options {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t jobs = 1;
  std::string out;
  std::string file;
  std::string family;
  long long p = 0, kappa = 0, lambda = 0, j = 0, m = 0;
  std::size_t index = 0;
  std::string profile = "exhaustive";
  std::string target;
  std::string what = "cayley";
  std::string format = "dot";
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw IoError("cannot write '" + o.out + "'");
  f << text;
}

EdgeBiregularMap load(const Options& o) { return load_map(read_text_file(o.file), o.max_cosets); }

int cmd_order(const Options& o) {
  MarkedGroup g = group_from_presentation(parse_presentation(read_text_file(o.file)), o.max_cosets);
  emit(o, std::to_string(g.g().order()) + "\n");
  return kOk;
}

int cmd_invariants(const Options& o) {
  emit(o, invariants_json(invariants(load(o))).dump(2) + "\n");
  return kOk;
}

Construction build(const Options& o) {
  const std::string& f = o.family;
  if (f == "dh1") return dihedral_family_1(o.p, o.max_cosets);
  if (f == "dh2") return dihedral_family_2(o.p, o.max_cosets);
  if (f == "hpj") return family_Hpj(HpjParams{o.kappa, o.lambda, o.j}, HpjRoute::Both, o.max_cosets);
  if (f == "hp") {
    if (auto w = hp_composite_warning(o.m)) std::cerr << "warning: " << *w << "\n";
    return family_Hp(o.m, o.max_cosets);
  }
  if (f == "h3") return map_H3(o.max_cosets);
  if (f == "chi2") return chi_minus_2_map(o.index, o.max_cosets);
  throw Error("unknown family '" + f + "'");
}

int cmd_construct(const Options& o) {
  Construction c = build(o);
  emit(o, "# " + c.label + "\n" + map_file_text(c.presentation, {"x", "y", "s", "t"}));
  return kOk;
}

Profile parse_profile(const std::string& s) {
  if (s == "exhaustive") return Profile::Exhaustive;
  if (s == "constructive") return Profile::Constructive;
  throw Error("unknown profile '" + s + "'");
}

int cmd_classify(const Options& o) {
  emit(o, catalog_json(classify(o.p, parse_profile(o.profile), o.jobs, o.max_cosets)).dump(2) + "\n");
  return kOk;
}

std::string describe(const CatalogEntry& e) {
  const auto& i = e.invariants;
  std::ostringstream s;
  s << (e.family ? *e.family : std::string("(unlabelled)")) << " |H|=" << i.group_order << " type=(" << i.type.k
    << "," << i.type.l << ") chi=" << i.chi << (i.orientable ? " orientable" : "")
    << (i.fully_regular ? " fully-regular" : "") << (i.self_dual ? " self-dual" : "");
  return s.str();
}

int verdict(std::ostringstream& log, const Options& o, bool pass, const std::string& summary) {
  log << (pass ? "PASS " : "FAIL ") << summary << "\n";
  emit(o, log.str());
  return pass ? kOk : kFail;
}

int verify_catalogs(const Options& o, long long p) {
  std::ostringstream log;
  const auto constructive = classify(p, Profile::Constructive, o.jobs, o.max_cosets);
  bool pass = true;
  for (const auto& e : constructive) {
    log << "  " << describe(e) << "\n";
    pass = pass && e.invariants.chi == -p;
  }
  std::vector<std::size_t> orders = admissible_orders(p);
  bool exhaustive = std::all_of(orders.begin(), orders.end(), atlas_supports);
  if (exhaustive) {
    const auto found = classify(p, Profile::Exhaustive, o.jobs, o.max_cosets);
    std::size_t matched = 0;
    for (const auto& e : found) matched += e.family.has_value();
    const bool agree = catalogs_agree(found, constructive);
    log << "exhaustive: " << found.size() << " maps, " << matched << "/" << constructive.size() << " matched\n";
    pass = pass && agree && matched == found.size();
    return verdict(log, o, pass, "p=" + std::to_string(p) + " " + std::to_string(matched) + "/" +
                                     std::to_string(constructive.size()) + " matched");
  }
  log << "exhaustive search unavailable: some admissible order has no atlas\n";
  if (p >= 3) {
    const auto ex = verify_p_divides_exclusions(p, o.jobs);
    for (const auto& g : ex.groups)
      log << "  order " << g.order << " " << g.group << ": " << g.maps << " maps" << (g.flagged ? " (unexpected)" : "")
          << "\n";
    for (const auto& u : ex.unsupported) log << "  order " << u << ": UNSUPPORTED\n";
    pass = pass && ex.pass;
  }
  return verdict(log, o, pass, "p=" + std::to_string(p) + " constructive catalog of " +
                                   std::to_string(constructive.size()) + " maps");
}

int cmd_verify(const Options& o) {
  const std::string& t = o.target;
  if (t == "thm-even") return verify_catalogs(o, 2);
  if (t == "thm-odd") {
    if (o.p < 3 || !is_prime(o.p)) throw Error("thm-odd needs --p <odd prime>");
    return verify_catalogs(o, o.p);
  }
  std::ostringstream log;
  if (t == "lemma-4-2") {
    const auto r = verify_no_maps_chi_minus_1(o.jobs);
    for (const auto& g : r.groups)
      log << "  order " << g.order << " " << g.group << ": " << g.maps << " maps" << (g.flagged ? " (unexpected)" : "")
          << "\n";
    return verdict(log, o, r.pass, "chi=-1 maps occur only in dihedral groups");
  }
  if (t == "lemma-4-3") {
    const auto r = cp_dihedral_probe(default_probe_grid(), o.jobs);
    for (const auto& c : r.cases)
      log << "  p=" << c.p << " nu=" << c.nu << " action=" << c.action << ": " << c.classes << " maps, "
          << c.checked << " checked, " << c.counterexamples << " counterexamples\n";
    return verdict(log, o, r.pass(),
                   std::to_string(r.checked) + " checked, " + std::to_string(r.counterexamples) + " counterexamples");
  }
  if (t == "exclusions") {
    const auto r = verify_p_divides_exclusions(o.p, o.jobs);
    for (const auto& g : r.groups)
      log << "  order " << g.order << " " << g.group << ": " << g.maps << " maps" << (g.flagged ? " (unexpected)" : "")
          << "\n";
    for (const auto& u : r.unsupported) log << "  order " << u << ": UNSUPPORTED\n";
    return verdict(log, o, r.pass, "p=" + std::to_string(o.p) + " exclusions");
  }
  throw Error("unknown verify target '" + t + "'");
}

int cmd_export(const Options& o) {
  const EdgeBiregularMap m = load(o);
  const bool dot = o.format == "dot";
  if (o.what == "cayley")
    emit(o, dot ? cayley_dot(m) : cayley_json(m).dump(2) + "\n");
  else
    emit(o, dot ? flags_dot(m) : flags_json(m).dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Edge-biregular map toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-cosets", o.max_cosets, "Coset table limit")->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "Enumeration shards")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Output path (default stdout)");

  auto* order = app.add_subcommand("order", "Print the order of a finitely presented group");
  order->add_option("file", o.file, "Presentation file")->required();

  auto* inv = app.add_subcommand("invariants", "Print map invariants as JSON");
  inv->add_option("file", o.file, "Map file")->required();

  auto* construct = app.add_subcommand("construct", "Write a family member as a map file");
  construct->add_option("--family", o.family)->required()->check(CLI::IsMember({"dh1", "dh2", "hpj", "hp", "h3", "chi2"}));
  construct->add_option("--p", o.p);
  construct->add_option("--kappa", o.kappa);
  construct->add_option("--lambda", o.lambda);
  construct->add_option("--j", o.j);
  construct->add_option("--m", o.m);
  construct->add_option("--index", o.index);

  auto* cls = app.add_subcommand("classify", "Classify maps with chi = -p");
  cls->add_option("--p", o.p)->required();
  cls->add_option("--profile", o.profile)->check(CLI::IsMember({"exhaustive", "constructive"}));

  auto* verify = app.add_subcommand("verify", "Run a verification report");
  verify->add_option("target", o.target)
      ->required()
      ->check(CLI::IsMember({"thm-odd", "thm-even", "lemma-4-2", "lemma-4-3", "exclusions"}));
  verify->add_option("--p", o.p);

  auto* exp = app.add_subcommand("export", "Export the Cayley or flag graph of a map");
  exp->add_option("file", o.file, "Map file")->required();
  exp->add_option("--what", o.what)->check(CLI::IsMember({"cayley", "flags"}));
  exp->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (order->parsed()) return cmd_order(o);
    if (inv->parsed()) return cmd_invariants(o);
    if (construct->parsed()) return cmd_construct(o);
    if (cls->parsed()) return cmd_classify(o);
    if (verify->parsed()) return cmd_verify(o);
    if (exp->parsed()) return cmd_export(o);
  } catch (const CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
