// qf: command-line front end for the quandle library.

#include <CLI11.hpp>

#include <iostream>

#include "quandle/all.hpp"

namespace {

using namespace qf;

enum Exit { kOk = 0, kMismatch = 1, kCapacity = 2, kBadInput = 3 };

void print_profile_text(const InvariantProfile& p) {
  auto tf = [](bool b) { return b ? "T" : "F"; };
  std::cout << "group_order           " << p.group_order << "\n"
            << "psi_order             " << p.psi_order << "\n"
            << "fix_size              " << p.fix_size << "\n"
            << "p_iso_type            " << p.p_iso_type.display() << "\n"
            << "p2_iso_type           " << p.p2_iso_type.display() << "\n"
            << "psi_restricted_class  " << p.psi_restricted_class.display << "\n"
            << "p_cap_fix             " << p.p_cap_fix << "\n"
            << "tn_size               " << p.tn_size << "\n"
            << "p1                    " << tf(p.p1) << "\n"
            << "p2                    " << tf(p.p2_flag) << "\n"
            << "inn_size              " << p.inn_size << "\n";
}

int cmd_groups_list(std::size_t n) {
  for (const auto& g : groups_of_order(n))
    std::cout << g.name() << "\torder " << g.order() << "\t" << (g.is_abelian() ? "abelian" : "nonabelian") << "\n";
  return kOk;
}

int cmd_aut(const std::string& name) {
  const FiniteGroup g = build_group(name);
  const AutomorphismClasses ac = automorphism_conjugacy_classes(g);
  std::cout << "|Aut(" << g.name() << ")| = " << ac.automorphisms.size() << ", " << ac.classes.size()
            << " conjugacy classes\n";
  for (std::size_t i = 0; i < ac.classes.size(); ++i) {
    const auto& c = ac.classes[i];
    std::cout << "  " << i << "\tord " << c.representative.order() << "\tsize " << c.size << "\t"
              << short_automorphism_name(c.representative) << "\n";
  }
  return kOk;
}

int cmd_invariants(const std::string& group, const std::string& aut, bool as_json) {
  const GroupMap psi = named_automorphism(build_group(group), aut);
  const InvariantProfile p = profile(psi);
  if (as_json)
    std::cout << to_json(p).dump(2) << "\n";
  else
    print_profile_text(p);
  return kOk;
}

int cmd_iso(const std::string& g1, const std::string& a1, const std::string& g2, const std::string& a2,
            const std::string& method) {
  const GroupMap x = named_automorphism(build_group(g1), a1);
  const GroupMap y = named_automorphism(build_group(g2), a2);
  DecideOptions opt;
  if (method == "brute")
    opt.mode = DecideOptions::Mode::Brute;
  else if (method == "thm13")
    opt.mode = DecideOptions::Mode::Theorem13;
  const IsoVerdict v = decide(x, y, opt);
  if (v.witness && !is_quandle_isomorphism(general_alexander(x), general_alexander(y), *v.witness)) {
    std::cerr << "witness failed verification\n";
    return kMismatch;
  }
  std::cout << to_json(v).dump() << "\n";
  return kOk;
}

int cmd_classify(std::size_t n, bool beyond, const std::string& format, const std::string& cache, bool no_cache) {
  ClassifyOptions opt;
  opt.beyond_paper = beyond;
  if (!no_cache) opt.cache_dir = cache.empty() ? default_cache_dir() : std::optional<std::filesystem::path>(cache);
  ClassificationReport r = classify_order(n, opt);
  if (n == 8 || n == 12) reference::annotate_published_labels(r);
  std::cout << emit_table(r, table_format_from_string(format));
  if (n <= 15 && r.classes.size() != reference::kTable1[n - 1]) {
    std::cerr << "class count " << r.classes.size() << " differs from the published " << reference::kTable1[n - 1] << "\n";
    return kMismatch;
  }
  return r.complete ? kOk : kCapacity;
}

int cmd_verify() {
  verify::Context ctx;
  bool ok = true;
  for (const auto& r : verify::run_all(ctx)) {
    std::cout << verify::format_line(r) << "\n";
    for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    for (const auto& f : r.failures) std::cout << "    FAILED: " << f << "\n";
    ok = ok && r.passed;
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Alexander quandles: invariants, isomorphism, classification"};
  app.require_subcommand(1);

  auto* groups = app.add_subcommand("groups", "Catalog groups");
  auto* groups_list = groups->add_subcommand("list", "Isomorphism types of order n");
  std::size_t list_n = 0;
  groups_list->add_option("n", list_n, "group order")->required();
  groups->require_subcommand(1);

  auto* aut = app.add_subcommand("aut", "Automorphism count and conjugacy class representatives");
  std::string aut_group;
  aut->add_option("group", aut_group, "group name, e.g. D4, C4xC2, Q8")->required();

  auto* inv = app.add_subcommand("invariants", "Invariant profile of Q(G, psi)");
  std::string inv_group, inv_aut;
  bool inv_json = false;
  inv->add_option("group", inv_group)->required();
  inv->add_option("automorphism", inv_aut, "e.g. id, phi:1,2, mul:3, psi4, conj:(12)")->required();
  inv->add_flag("--json", inv_json, "emit profile.v1 JSON");

  auto* iso = app.add_subcommand("iso", "Decide Q(G, psi) ~ Q(G', psi')");
  std::string g1, a1, g2, a2, method = "auto";
  iso->add_option("group1", g1)->required();
  iso->add_option("aut1", a1)->required();
  iso->add_option("group2", g2)->required();
  iso->add_option("aut2", a2)->required();
  iso->add_option("--method", method)->check(CLI::IsMember({"brute", "thm13", "auto"}));

  auto* cls = app.add_subcommand("classify", "List Q_GA(n)");
  std::size_t cls_n = 0;
  bool beyond = false, no_cache = false;
  std::string format = "md", cache;
  cls->add_option("n", cls_n)->required();
  cls->add_flag("--beyond-paper", beyond, "allow order 16");
  cls->add_option("--format", format)->check(CLI::IsMember({"md", "csv", "json"}));
  cls->add_option("--cache", cache, "cache directory (default $QF_CACHE_DIR or ~/.cache/qf)");
  cls->add_flag("--no-cache", no_cache, "neither read nor write the cache");

  auto* verify = app.add_subcommand("verify-paper", "Check every published claim covered by the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (groups_list->parsed()) return cmd_groups_list(list_n);
    if (aut->parsed()) return cmd_aut(aut_group);
    if (inv->parsed()) return cmd_invariants(inv_group, inv_aut, inv_json);
    if (iso->parsed()) return cmd_iso(g1, a1, g2, a2, method);
    if (cls->parsed()) return cmd_classify(cls_n, beyond, format, cache, no_cache);
    if (verify->parsed()) return cmd_verify();
  } catch (const qf::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const qf::InternalError& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kMismatch;
  } catch (const qf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kBadInput;
}
