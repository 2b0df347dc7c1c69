#pragma once

// Acceptance checks against the published results, one function per criterion.
// Every isomorphism witness produced along the way is collected so the last
// check can run the (i)-(iv) witness properties over all of them.

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "quandle/reference_data.hpp"

namespace qf::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;
};

struct WitnessRecord {
  GroupMap psi1;
  GroupMap psi2;
  std::vector<Elem> f;
  std::string origin;
};

class Context {
 public:
  const ClassificationReport& report(std::size_t n) {
    auto it = reports_.find(n);
    if (it != reports_.end()) return it->second;
    ClassifyOptions opt;
    opt.beyond_paper = n == 16;
    ClassificationReport r = classify_order(n, opt);
    if (n == 8 || n == 12) reference::annotate_published_labels(r);
    for (const auto& rec : r.verdict_log)
      if (rec.verdict.isomorphic())
        add_witness(r.automorphism(rec.a), r.automorphism(rec.b), *rec.verdict.witness,
                    "classify " + std::to_string(n) + ": " + r.pairs[rec.a].group + " " + r.pairs[rec.a].automorphism_name +
                        " ~ " + r.pairs[rec.b].group + " " + r.pairs[rec.b].automorphism_name);
    return reports_.emplace(n, std::move(r)).first->second;
  }

  void add_witness(const GroupMap& a, const GroupMap& b, const std::vector<Elem>& f, std::string origin) {
    witnesses_.push_back({a, b, f, std::move(origin)});
  }

  const std::vector<WitnessRecord>& witnesses() const { return witnesses_; }

 private:
  std::map<std::size_t, ClassificationReport> reports_;
  std::vector<WitnessRecord> witnesses_;
};

namespace detail {

inline bool same_members(const Subgroup& h, const std::vector<Elem>& v) {
  return std::equal(h.members().begin(), h.members().end(), v.begin(), v.end());
}

inline std::string describe(const GroupMap& psi) { return psi.source().name() + " " + short_automorphism_name(psi); }

/// Runs body, converting exceptions into failures and timing the run.
inline CriterionResult run(int id, std::string title, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = r.failures.empty();
  return r;
}

/// Requires an isomorphic verdict with a witness that verifies; records it.
inline void expect_isomorphic(Context& ctx, CriterionResult& r, const GroupMap& a, const GroupMap& b,
                              const IsoVerdict& v, const std::string& what) {
  if (!v.isomorphic() || !v.witness) {
    r.failures.push_back(what + ": expected isomorphic, got " + to_string(v.result) + " via " + to_string(v.method));
    return;
  }
  if (!is_quandle_isomorphism(general_alexander(a), general_alexander(b), *v.witness)) {
    r.failures.push_back(what + ": witness does not verify");
    return;
  }
  ctx.add_witness(a, b, *v.witness, what);
}

}  // namespace detail

// 1 -----------------------------------------------------------------------

inline CriterionResult check_table1(Context& ctx) {
  return detail::run(1, "Table 1: |Q_GA(n)| for n = 1..15", [&](CriterionResult& r) {
    std::ostringstream got;
    for (std::size_t n = 1; n <= 15; ++n) {
      const auto& rep = ctx.report(n);
      got << (n > 1 ? "," : "") << rep.classes.size();
      if (!rep.complete) r.failures.push_back("n=" + std::to_string(n) + " incomplete: " + rep.incomplete_reason);
      if (rep.classes.size() != reference::kTable1[n - 1])
        r.failures.push_back("n=" + std::to_string(n) + ": got " + std::to_string(rep.classes.size()) + ", expected " +
                             std::to_string(reference::kTable1[n - 1]));
    }
    r.notes.push_back("counts " + got.str());
  });
}

// 2 -----------------------------------------------------------------------

inline CriterionResult check_closed_forms(Context& ctx) {
  return detail::run(2, "Closed forms p-1, p, 2p^2-2p-1 and the order-p^2 merges", [&](CriterionResult& r) {
    for (std::size_t n : {2, 3, 5, 7, 11, 13, 6, 10, 14, 4, 9}) {
      const auto formula = closed_form_counts(n);
      const std::size_t got = ctx.report(n).classes.size();
      if (!formula || *formula != got)
        r.failures.push_back("n=" + std::to_string(n) + ": classifier " + std::to_string(got) + ", closed form " +
                             (formula ? std::to_string(*formula) : std::string("absent")));
    }
    for (std::size_t p : {2, 3}) {
      const std::size_t n = p * p;
      const auto& rep = ctx.report(n);
      const std::string cyc = "C" + std::to_string(n);
      const std::string ele = "C" + std::to_string(p) + "xC" + std::to_string(p);
      const auto c1 = reference::find_pair(rep, named_automorphism(build_group(cyc), "mul:1"));
      const auto e1 = reference::find_pair(rep, named_automorphism(build_group(ele), "id"));
      const auto c2 = reference::find_pair(rep, named_automorphism(build_group(cyc), "mul:" + std::to_string(p + 1)));
      const auto e2 = reference::find_pair(rep, named_automorphism(build_group(ele), "mat:0,-1;1,2"));
      if (!c1 || !e1 || !c2 || !e2) {
        r.failures.push_back("p=" + std::to_string(p) + ": reference pairs missing from the report");
        continue;
      }
      if (rep.class_of(*c1) != rep.class_of(*e1))
        r.failures.push_back("p=" + std::to_string(p) + ": Q(C_p^2,1) and Q(C_p x C_p, I) not merged");
      if (rep.class_of(*c2) != rep.class_of(*e2))
        r.failures.push_back("p=" + std::to_string(p) + ": Q(C_p^2,p+1) and its companion-matrix partner not merged");
      std::set<std::size_t> allowed{rep.class_of(*c1), rep.class_of(*c2)};
      for (std::size_t c = 0; c < rep.classes.size(); ++c) {
        std::set<std::string> groups;
        for (std::size_t i : rep.classes[c]) groups.insert(rep.pairs[i].group);
        if (groups.size() > 1 && !allowed.count(c))
          r.failures.push_back("p=" + std::to_string(p) + ": unexpected cross-group merge in row " + std::to_string(c + 1));
      }
    }
  });
}

// 3 -----------------------------------------------------------------------

inline CriterionResult check_merge_lists(Context& ctx) {
  return detail::run(3, "Order-8 and order-12 merge lists", [&](CriterionResult& r) {
    for (std::size_t order : {8, 12}) {
      const auto& rep = ctx.report(order);
      const auto shown = order == 8 ? reference::displayed_merges_8() : reference::displayed_merges_12();
      // every displayed identity, decided directly with a verified witness
      for (const auto& set : shown)
        for (std::size_t k = 1; k < set.size(); ++k) {
          const GroupMap a = reference::reference_automorphism(reference::reference_row(order, set.front()));
          const GroupMap b = reference::reference_automorphism(reference::reference_row(order, set[k]));
          detail::expect_isomorphic(ctx, r, a, b, decide(a, b),
                                    reference::label_name(order, set.front()) + " ~ " + reference::label_name(order, set[k]));
        }
      // the classifier's partition of the labelled pairs is exactly the expected one
      std::map<std::size_t, std::vector<std::size_t>> by_class;
      for (const auto& row : reference::reference_rows()) {
        if (row.order != order) continue;
        std::optional<std::size_t> cls;
        for (std::size_t k = 0; k < row.automorphisms.size(); ++k) {
          const auto i = reference::find_pair(rep, reference::reference_automorphism(row, k));
          if (!i) {
            r.failures.push_back(reference::label_name(order, row.label) + " missing from the report");
            continue;
          }
          if (cls && *cls != rep.class_of(*i))
            r.failures.push_back(reference::label_name(order, row.label) + ": its automorphisms land in different classes");
          cls = rep.class_of(*i);
        }
        if (cls) by_class[*cls].push_back(row.label);
      }
      reference::LabelSets got;
      for (auto& [c, labels] : by_class) {
        std::sort(labels.begin(), labels.end());
        got.push_back(labels);
      }
      std::sort(got.begin(), got.end());
      if (got != reference::expected_partition(order)) {
        std::ostringstream os;
        for (const auto& s : got) {
          os << "{";
          for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
          os << "}";
        }
        r.failures.push_back("order " + std::to_string(order) + " labelled partition differs: " + os.str());
      }
      // the printed final list names one label per class
      std::set<std::size_t> rows_hit;
      for (std::size_t label : reference::final_list_labels(order)) {
        const auto i = reference::find_pair(rep, reference::reference_automorphism(reference::reference_row(order, label)));
        if (i) rows_hit.insert(rep.class_of(*i));
      }
      if (rows_hit.size() != rep.classes.size())
        r.failures.push_back("order " + std::to_string(order) + ": final list covers " + std::to_string(rows_hit.size()) +
                             " of " + std::to_string(rep.classes.size()) + " classes");
    }
    r.notes.push_back("order 12 also merges Q^12_11 ~ Q^12_17 and Q^12_12 ~ Q^12_18, which the final list requires");
    for (const auto& s : reference::implied_merges_12()) {
      const GroupMap a = reference::reference_automorphism(reference::reference_row(12, s[0]));
      const GroupMap b = reference::reference_automorphism(reference::reference_row(12, s[1]));
      detail::expect_isomorphic(ctx, r, a, b, decide(a, b),
                                reference::label_name(12, s[0]) + " ~ " + reference::label_name(12, s[1]));
    }
  });
}

// 4 -----------------------------------------------------------------------

inline CriterionResult check_invariant_tables(Context&) {
  return detail::run(4, "Per-group invariant tables (orders 8 and 12)", [&](CriterionResult& r) {
    for (const auto& row : reference::reference_rows())
      for (std::size_t k = 0; k < row.automorphisms.size(); ++k) {
        const GroupMap psi = reference::reference_automorphism(row, k);
        const InvariantProfile pr = profile(psi);
        const std::string who = reference::label_name(row.order, row.label) + " (" + row.group + " " + row.automorphisms[k] + ")";
        auto mismatch = [&](const std::string& field, const std::string& got, const std::string& want) {
          r.failures.push_back(who + " " + field + ": got " + got + ", expected " + want);
        };
        if (pr.psi_order != row.psi_order) mismatch("ord psi", std::to_string(pr.psi_order), std::to_string(row.psi_order));
        if (pr.fix_size != row.fix_size) mismatch("|Fix|", std::to_string(pr.fix_size), std::to_string(row.fix_size));
        if (pr.p_iso_type.display() != row.p_type) mismatch("P", pr.p_iso_type.display(), row.p_type);
        if (row.p_type != "1") {
          const GroupMap want = named_automorphism(build_group(row.p_type), row.psi_on_p);
          const std::size_t want_class = catalog_automorphism_classes(row.p_type).class_index(want);
          if (pr.psi_restricted_class.class_id != want_class)
            mismatch("psi|P class", pr.psi_restricted_class.display, row.psi_on_p);
        }
        if (row.p1 && pr.p1 != *row.p1) mismatch("P1", pr.p1 ? "T" : "F", *row.p1 ? "T" : "F");
        if (row.p2 && pr.p2_flag != *row.p2) mismatch("P2", pr.p2_flag ? "T" : "F", *row.p2 ? "T" : "F");
      }
    r.notes.push_back(std::to_string(reference::reference_rows().size()) + " printed rows checked");
  });
}

// 5 -----------------------------------------------------------------------

inline CriterionResult check_dihedral_formulas(Context&) {
  return detail::run(5, "Dihedral formulas vs Cayley-table enumeration (n <= 8)", [&](CriterionResult& r) {
    std::size_t checked = 0;
    for (long long n = 3; n <= 8; ++n) {
      const FiniteGroup g = build_group("D" + std::to_string(n));
      const AutomorphismClasses ac = automorphism_conjugacy_classes(g);
      std::vector<DihedralAut> all;
      for (long long a : units_mod(n))
        for (long long b = 0; b < n; ++b) all.emplace_back(n, a, b);
      if (all.size() != ac.automorphisms.size())
        r.failures.push_back("D" + std::to_string(n) + ": |Aff| != |Aut|");
      for (const auto& phi : all) {
        const GroupMap psi = to_group_map(phi);
        const std::string who = phi.name();
        if (static_cast<long long>(fixed_subgroup(psi).size()) != fix_size_dn(phi))
          r.failures.push_back(who + ": |Fix| formula");
        const auto dp = p_subgroups_dn(phi);
        if (!detail::same_members(compute_P(psi), rotation_subgroup(n, dp.p_step))) r.failures.push_back(who + ": P formula");
        if (!detail::same_members(compute_P2(psi), rotation_subgroup(n, dp.p2_step)))
          r.failures.push_back(who + ": P^2 formula");
        ++checked;
      }
      for (const auto& x : all)
        for (const auto& y : all)
          if (are_conjugate_dn(x, y) != (ac.class_index(to_group_map(x)) == ac.class_index(to_group_map(y))))
            r.failures.push_back(x.name() + " vs " + y.name() + ": conjugacy formula");
      if (conjugacy_reps_aut_dn(n).size() != ac.classes.size())
        r.failures.push_back("D" + std::to_string(n) + ": class representative count");
    }
    r.notes.push_back(std::to_string(checked) + " automorphisms phi_{a,b} with 3 <= n <= 8");
  });
}

// 6 -----------------------------------------------------------------------

inline CriterionResult check_decider_agreement(Context& ctx) {
  return detail::run(6, "Decider cross-validation (order <= 12)", [&](CriterionResult& r) {
    std::size_t thm = 0, abel = 0, cyc = 0, dih = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
      std::vector<GroupMap> reps;
      for (const auto& name : group_names_of_order(n))
        for (const auto& cls : catalog_automorphism_classes(name).classes) reps.push_back(cls.representative);
      std::vector<InvariantProfile> prof;
      for (const auto& psi : reps) prof.push_back(profile(psi));
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i; j < reps.size(); ++j) {
          const GroupMap& a = reps[i];
          const GroupMap& b = reps[j];
          const IsoVerdict bf = brute_force_iso(a, b);
          const std::string who = detail::describe(a) + " / " + detail::describe(b);
          auto compare = [&](const IsoVerdict& v, const char* name) {
            if (v.result != bf.result)
              r.failures.push_back(who + ": " + name + " says " + to_string(v.result) + ", brute force " + to_string(bf.result));
            else if (v.isomorphic())
              detail::expect_isomorphic(ctx, r, a, b, v, std::string(name) + " " + who);
          };
          if (prof[i].p1 && prof[i].p2_flag && prof[j].p1 && prof[j].p2_flag) {
            compare(theorem13_iso(a, b), "theorem13");
            ++thm;
          }
          if (a.source().is_abelian() && b.source().is_abelian()) {
            compare(abelian_decider(a, b), "abelian");
            ++abel;
          }
          if (recognize_cyclic(a) && recognize_cyclic(b)) {
            compare(cyclic_decider(a, b), "cyclic");
            ++cyc;
          }
          const auto da = recognize_dihedral(a), db = recognize_dihedral(b);
          if (da && db && da->n == db->n && da->n <= 6) {
            compare(dihedral_decider(a, b), "dihedral");
            ++dih;
          }
        }
    }
    r.notes.push_back("pairs compared: theorem13 " + std::to_string(thm) + ", abelian " + std::to_string(abel) +
                      ", cyclic " + std::to_string(cyc) + ", dihedral " + std::to_string(dih));
  });
}

// 7 -----------------------------------------------------------------------

inline CriterionResult check_cyclic_dihedral_witnesses(Context& ctx) {
  return detail::run(7, "Q(C_2n, a) ~ Q(D_n, phi_{a~,g}) witnesses (n <= 8)", [&](CriterionResult& r) {
    std::size_t count = 0;
    for (long long n = 1; n <= 8; ++n) {
      const FiniteGroup c = build_group("C" + std::to_string(2 * n));
      const FiniteGroup d = build_group("D" + std::to_string(n));
      for (long long a : units_mod(2 * n)) {
        const DihedralAut phi = cyclic_to_dihedral(n, a);
        const GroupMap x = named_automorphism(c, "mul:" + std::to_string(a));
        const GroupMap y = named_automorphism(d, phi.name());
        const std::string who = "C" + std::to_string(2 * n) + " x" + std::to_string(a) + " ~ D" + std::to_string(n) +
                                " phi:" + std::to_string(phi.a) + "," + std::to_string(phi.b);
        const IsoVerdict t = theorem13_iso(x, y);
        detail::expect_isomorphic(ctx, r, x, y, t, who + " (theorem13)");
        const IsoVerdict bf = brute_force_iso(x, y);
        detail::expect_isomorphic(ctx, r, x, y, bf, who + " (brute force)");
        ++count;
      }
    }
    r.notes.push_back(std::to_string(count) + " units checked");
  });
}

// 8 -----------------------------------------------------------------------

inline CriterionResult check_structural(Context&) {
  return detail::run(8, "Structure of P and Inn(Q)", [&](CriterionResult& r) {
    std::size_t checked = 0, centerless = 0;
    for (std::size_t n = 1; n <= 12; ++n)
      for (const auto& name : group_names_of_order(n))
        for (const auto& cls : catalog_automorphism_classes(name).classes) {
          const GroupMap& psi = cls.representative;
          const std::string who = detail::describe(psi);
          const Subgroup p = compute_P(psi);  // orbit of e and <x psi(x)^-1> cross-checked inside
          if (!is_normal(psi.source(), p)) r.failures.push_back(who + ": P not normal");
          const InnStructure s = inn_structure(psi);
          if (!s.size_formula_holds) r.failures.push_back(who + ": |Inn| != |P| m");
          if (!s.semidirect_isomorphic) r.failures.push_back(who + ": Inn not isomorphic to P x| C_m");
          if (s.p_centerless) {
            ++centerless;
            if (s.direct_isomorphic != s.restriction_inner)
              r.failures.push_back(who + ": centerless P but Inn ~ P x C_m disagrees with psi|P inner");
          }
          ++checked;
        }
    const FiniteGroup sl = build_group("SL23");
    const GroupMap psi = named_automorphism(sl, "conj:0,2;1,0");
    const InnStructure s = inn_structure(psi);
    if (identify_group(compute_P(psi).as_group()) != std::optional<std::string>("Q8"))
      r.failures.push_back("SL(2,3): P is not Q8");
    if (s.psi_order != 2 || !s.semidirect_isomorphic || s.direct_isomorphic || !s.restriction_inner || s.p_centerless)
      r.failures.push_back("SL(2,3): expected Inn ~ Q8 x| C2, not Q8 x C2, with psi|P inner and P not centerless");
    r.notes.push_back(std::to_string(checked) + " class representatives, " + std::to_string(centerless) +
                      " with centerless P, plus the SL(2,3) case");
  });
}

// 9 -----------------------------------------------------------------------

/// The order-3 automorphism taken on the second group of the unresolved order-16 pair.
inline GroupMap order16_open_pair_second() {
  for (const auto& cls : catalog_automorphism_classes("SD16").classes)
    if (cls.representative.order() == 3) return cls.representative;
  throw InternalError("SD16 has no order-3 automorphism");
}

inline GroupMap order16_open_pair_first() {
  return named_automorphism(build_group("C2xQ8"), "componentwise:id|psi4");
}

inline CriterionResult check_order16(Context& ctx) {
  return detail::run(9, "Order 16: D8 pair and the open pair", [&](CriterionResult& r) {
    const FiniteGroup d8 = build_group("D8");
    const GroupMap a = named_automorphism(d8, "phi:1,2");
    const GroupMap b = named_automorphism(d8, "phi:5,2");
    const IsoVerdict v = decide(a, b);
    if (v.result != IsoResult::NotIsomorphic || v.separator != std::optional<std::string>("fix_size"))
      r.failures.push_back("D8 phi:1,2 vs phi:5,2: expected not-isomorphic separated by fix_size, got " +
                           std::string(to_string(v.result)) + " " + v.separator.value_or("-"));
    const auto pa = profile(a), pb = profile(b);
    if (pa.fix_size != 8 || pb.fix_size != 4) r.failures.push_back("D8 pair: |Fix| should be 8 and 4");
    if (!(pa.p_iso_type == pb.p_iso_type) || pa.p_iso_type.display() != "C4" ||
        !(pa.psi_restricted_class == pb.psi_restricted_class))
      r.failures.push_back("D8 pair: P and psi|P should coincide (C4, id)");
    if (brute_force_iso(a, b).result != IsoResult::NotIsomorphic)
      r.failures.push_back("D8 pair: brute force disagrees");

    const GroupMap x = order16_open_pair_first();
    const GroupMap y = order16_open_pair_second();
    const auto px = profile(x), py = profile(y);
    if (px.p2_flag || py.p2_flag) r.failures.push_back("open pair: (P2) should fail on both sides");
    if (theorem13_iso(x, y).decided()) r.failures.push_back("open pair: theorem13 should be undecided");
    const IsoVerdict bf = brute_force_iso(x, y);
    if (!bf.decided()) r.failures.push_back("open pair: brute force did not decide");
    if (bf.isomorphic()) detail::expect_isomorphic(ctx, r, x, y, bf, "open order-16 pair (brute force)");
    r.notes.push_back(std::string("beyond-paper: Q(C2xQ8, id x psi4) vs Q(SD16, ") + short_automorphism_name(y) +
                      ") is " + to_string(bf.result) + " by exhaustive search; profiles " +
                      (px == py ? "coincide" : "differ in " + first_difference(px, py).value_or("?")));
  });
}

// 10 ----------------------------------------------------------------------

inline CriterionResult check_witness_properties(Context& ctx) {
  return detail::run(10, "Witness properties (i)-(iv) for every witness above", [&](CriterionResult& r) {
    for (const auto& w : ctx.witnesses()) {
      const Theorem39Report rep = check_theorem39_properties(w.f, w.psi1, w.psi2);
      if (!rep.ok()) r.failures.push_back(w.origin + ": " + rep.failure);
    }
    if (ctx.witnesses().empty()) r.failures.push_back("no witnesses were collected");
    r.notes.push_back(std::to_string(ctx.witnesses().size()) + " witnesses checked");
  });
}

/// Runs criteria 1-10 in order on a shared context.
inline std::vector<CriterionResult> run_all(Context& ctx) {
  std::vector<CriterionResult> out;
  out.push_back(check_table1(ctx));
  out.push_back(check_closed_forms(ctx));
  out.push_back(check_merge_lists(ctx));
  out.push_back(check_invariant_tables(ctx));
  out.push_back(check_dihedral_formulas(ctx));
  out.push_back(check_decider_agreement(ctx));
  out.push_back(check_cyclic_dihedral_witnesses(ctx));
  out.push_back(check_structural(ctx));
  out.push_back(check_order16(ctx));
  out.push_back(check_witness_properties(ctx));
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " (" << r.seconds << " s)";
  return os.str();
}

}  // namespace qf::verify
