#pragma once

// Published reference values: the per-group invariant tables for orders 8 and 12,
// the merge lists, the counts |Q_GA(n)| for n <= 15, and helpers that attach the
// published labels Q^n_k to classifier output.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quandle/classify.hpp"

namespace qf::reference {

inline constexpr std::array<std::size_t, 15> kTable1 = {1, 1, 2, 3, 4, 3, 6, 9, 11, 5, 10, 11, 12, 7, 8};

/// One printed row. psi_on_p names an automorphism of the catalog group p_type.
struct ReferenceRow {
  std::size_t order;
  std::size_t label;                    // k in Q^order_k
  std::string group;
  std::vector<std::string> automorphisms;  // first is the printed one; others share the row
  std::size_t psi_order;
  std::size_t fix_size;
  std::string p_type;                   // "1" for the trivial group
  std::string psi_on_p;
  std::optional<bool> p1, p2;           // only where printed
};

inline const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      // C4 x C2
      {8, 1, "C4xC2", {"id"}, 1, 8, "1", "id", {}, {}},
      {8, 2, "C4xC2", {"psi_sigma"}, 4, 2, "C2xC2", "mat:0,1;1,0", {}, {}},
      {8, 3, "C4xC2", {"psi_sigma^2"}, 2, 4, "C2", "id", {}, {}},
      {8, 4, "C4xC2", {"psi_tau"}, 2, 4, "C2", "id", {}, {}},
      {8, 5, "C4xC2", {"psi_sigma*psi_tau"}, 2, 4, "C2", "id", {}, {}},
      // C2 x C2 x C2
      {8, 6, "C2xC2xC2", {"M1"}, 1, 8, "1", "id", {}, {}},
      {8, 7, "C2xC2xC2", {"M2"}, 2, 4, "C2", "id", {}, {}},
      {8, 8, "C2xC2xC2", {"M3"}, 3, 2, "C2xC2", "mat:0,1;1,1", {}, {}},
      {8, 9, "C2xC2xC2", {"M4"}, 4, 2, "C2xC2", "mat:0,1;1,0", {}, {}},
      {8, 10, "C2xC2xC2", {"M5"}, 7, 1, "C2xC2xC2", "M5", {}, {}},
      {8, 11, "C2xC2xC2", {"M6"}, 7, 1, "C2xC2xC2", "M6", {}, {}},
      // D4
      {8, 12, "D4", {"phi:1,0"}, 1, 8, "1", "id", {}, {}},
      {8, 13, "D4", {"phi:3,1"}, 2, 2, "C4", "mul:3", {}, {}},
      {8, 14, "D4", {"phi:1,2", "phi:3,2"}, 2, 4, "C2", "id", {}, {}},
      {8, 15, "D4", {"phi:1,1"}, 4, 4, "C4", "id", {}, {}},
      // Q8
      {8, 16, "Q8", {"psi1"}, 1, 8, "1", "id", true, true},
      {8, 17, "Q8", {"psi2"}, 2, 4, "C2", "id", true, true},
      {8, 18, "Q8", {"psi3"}, 2, 2, "C4", "mul:3", true, true},
      {8, 19, "Q8", {"psi4"}, 3, 2, "Q8", "psi4", true, false},
      {8, 20, "Q8", {"psi5"}, 4, 4, "C4", "id", true, true},
      // C6 x C2
      {12, 1, "C6xC2", {"id"}, 1, 12, "1", "id", {}, {}},
      {12, 2, "C6xC2", {"alpha_tau"}, 2, 2, "C6", "mul:5", {}, {}},
      {12, 3, "C6xC2", {"alpha_sigma^3"}, 2, 4, "C3", "mul:2", {}, {}},
      {12, 4, "C6xC2", {"alpha_tau*alpha_sigma"}, 2, 6, "C2", "id", {}, {}},
      {12, 5, "C6xC2", {"alpha_sigma^2"}, 3, 3, "C2xC2", "mat:0,1;1,1", {}, {}},
      {12, 6, "C6xC2", {"alpha_sigma"}, 6, 1, "C6xC2", "alpha_sigma", {}, {}},
      // D6
      {12, 7, "D6", {"phi:1,0"}, 1, 12, "1", "id", {}, {}},
      {12, 8, "D6", {"phi:5,1"}, 2, 2, "C6", "mul:5", {}, {}},
      {12, 9, "D6", {"phi:5,2"}, 2, 4, "C3", "mul:2", {}, {}},
      {12, 10, "D6", {"phi:1,3"}, 2, 6, "C2", "id", {}, {}},
      {12, 11, "D6", {"phi:1,2"}, 3, 6, "C3", "id", {}, {}},
      {12, 12, "D6", {"phi:1,1"}, 6, 6, "C6", "id", {}, {}},
      // Dic3
      {12, 13, "Dic3", {"id"}, 1, 12, "1", "id", true, true},
      {12, 14, "Dic3", {"beta_tau*beta_sigma"}, 2, 2, "C6", "mul:5", true, true},
      {12, 15, "Dic3", {"beta_tau"}, 2, 4, "C3", "mul:2", true, true},
      {12, 16, "Dic3", {"beta_sigma^3"}, 2, 6, "C2", "id", true, true},
      {12, 17, "Dic3", {"beta_sigma^2"}, 3, 6, "C3", "id", true, true},
      {12, 18, "Dic3", {"beta_sigma"}, 6, 6, "C6", "id", true, true},
      // A4
      {12, 19, "A4", {"id"}, 1, 12, "1", "id", true, true},
      {12, 20, "A4", {"conj:(12)"}, 2, 2, "A4", "conj:(12)", true, false},
      {12, 21, "A4", {"conj:(12)(34)"}, 2, 4, "C2xC2", "id", true, true},
      {12, 22, "A4", {"conj:(123)"}, 3, 3, "C2xC2", "mat:0,1;1,1", true, true},
      {12, 23, "A4", {"conj:(1234)"}, 4, 2, "A4", "conj:(1234)", true, false},
  };
  return rows;
}

inline const ReferenceRow& reference_row(std::size_t order, std::size_t label) {
  for (const auto& r : reference_rows())
    if (r.order == order && r.label == label) return r;
  throw LookupError("no reference row Q^" + std::to_string(order) + "_" + std::to_string(label));
}

inline GroupMap reference_automorphism(const ReferenceRow& r, std::size_t which = 0) {
  return named_automorphism(build_group(r.group), r.automorphisms.at(which));
}

using LabelSets = std::vector<std::vector<std::size_t>>;

/// Merges displayed for order 8.
inline const LabelSets& displayed_merges_8() {
  static const LabelSets m = {{1, 6, 12, 16}, {13, 18}, {3, 4, 5, 7, 14, 17}, {2, 9}, {15, 20}};
  return m;
}

/// Merges displayed for order 12.
inline const LabelSets& displayed_merges_12() {
  static const LabelSets m = {{1, 7, 13, 19}, {2, 8, 14}, {3, 9, 15}, {4, 10, 16}, {5, 22}};
  return m;
}

/// Order-12 merges implied by the final 11-row list but not displayed with the others.
inline const LabelSets& implied_merges_12() {
  static const LabelSets m = {{11, 17}, {12, 18}};
  return m;
}

/// The partition of all labels of an order into expected quandle classes.
inline LabelSets expected_partition(std::size_t order) {
  LabelSets sets;
  if (order == 8) {
    sets = displayed_merges_8();
  } else if (order == 12) {
    sets = displayed_merges_12();
    for (const auto& s : implied_merges_12()) sets.push_back(s);
  } else {
    throw LookupError("merge lists exist for orders 8 and 12 only");
  }
  for (const auto& r : reference_rows()) {
    if (r.order != order) continue;
    bool seen = false;
    for (const auto& s : sets) seen = seen || std::find(s.begin(), s.end(), r.label) != s.end();
    if (!seen) sets.push_back({r.label});
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

/// Labels printed in the final lists, in printed order.
inline std::vector<std::size_t> final_list_labels(std::size_t order) {
  if (order == 8) return {1, 13, 3, 8, 19, 2, 15, 10, 11};
  if (order == 12) return {1, 2, 20, 3, 21, 4, 5, 11, 23, 6, 12};
  throw LookupError("final lists exist for orders 8 and 12 only");
}

inline std::string label_name(std::size_t order, std::size_t label) {
  return "Q^" + std::to_string(order) + "_" + std::to_string(label);
}

/// Pair index in a report realizing (group, automorphism class of psi), if any.
inline std::optional<std::size_t> find_pair(const ClassificationReport& rep, const GroupMap& psi) {
  const auto& ac = catalog_automorphism_classes(psi.source().name());
  const std::size_t want = ac.class_index(psi);
  for (std::size_t i = 0; i < rep.pairs.size(); ++i)
    if (rep.pairs[i].group == psi.source().name() && ac.class_index(rep.automorphism(i)) == want) return i;
  return std::nullopt;
}

/// Writes the published labels onto the pairs they name.
inline void annotate_published_labels(ClassificationReport& rep) {
  for (const auto& row : reference_rows()) {
    if (row.order != rep.order) continue;
    for (std::size_t k = 0; k < row.automorphisms.size(); ++k)
      if (auto i = find_pair(rep, reference_automorphism(row, k))) {
        auto& lbl = rep.pairs[*i].published_label;
        const std::string name = label_name(row.order, row.label);
        if (("," + lbl + ",").find("," + name + ",") == std::string::npos) lbl += (lbl.empty() ? "" : ",") + name;
      }
  }
}

}  // namespace qf::reference
