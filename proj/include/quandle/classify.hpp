#pragma once

// Enumerates Q(G, psi) over the groups of one order, merges them by quandle
// isomorphism and renders the resulting list.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "quandle/io.hpp"

namespace qf {

inline constexpr const char* kClassifySchema = "qf-classify-v1";

struct ClassifiedPair {
  std::string group;
  std::vector<Elem> automorphism;
  std::string automorphism_name;  // parseable by named_automorphism
  InvariantProfile profile;
  std::string published_label;        // empty unless annotated
};

struct VerdictRecord {
  std::size_t a = 0, b = 0;  // pair indices
  IsoVerdict verdict;
};

struct ClassificationReport {
  std::size_t order = 0;
  bool beyond_paper = false;
  bool complete = true;
  std::string incomplete_reason;
  bool from_cache = false;
  std::vector<ClassifiedPair> pairs;
  std::vector<std::vector<std::size_t>> classes;  // in row order; members ascending
  std::vector<InvariantProfile> class_profiles;
  std::vector<VerdictRecord> verdict_log;

  std::size_t class_of(std::size_t pair) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (std::find(classes[c].begin(), classes[c].end(), pair) != classes[c].end()) return c;
    throw LookupError("pair index " + std::to_string(pair) + " not in report");
  }
  GroupMap automorphism(std::size_t pair) const {
    const FiniteGroup g = build_group(pairs.at(pair).group);
    return GroupMap(g, g, pairs[pair].automorphism);
  }
};

/// Compact name for psi: "id", "mul:a", "phi:a,b", else the image list.
inline std::string short_automorphism_name(const GroupMap& psi) {
  if (psi.is_identity()) return "id";
  if (auto a = recognize_cyclic(psi)) return "mul:" + std::to_string(*a);
  if (auto phi = recognize_dihedral(psi)) return "phi:" + std::to_string(phi->a) + "," + std::to_string(phi->b);
  std::string s = "images:";
  for (std::size_t i = 0; i < psi.images().size(); ++i) s += (i ? "," : "") + std::to_string(psi.images()[i]);
  return s;
}

struct ClassifyOptions {
  bool beyond_paper = false;
  std::optional<std::filesystem::path> cache_dir;  // no caching when empty
  DecideOptions decide;
};

namespace detail {

inline bool row_less(const ClassificationReport& r, std::size_t x, std::size_t y) {
  const auto& a = r.pairs[r.classes[x].front()];
  const auto& b = r.pairs[r.classes[y].front()];
  const auto ka = std::tie(a.profile.psi_order, a.profile.fix_size, a.profile.p_iso_type);
  const auto kb = std::tie(b.profile.psi_order, b.profile.fix_size, b.profile.p_iso_type);
  if (ka != kb) return ka < kb;
  return r.classes[x].front() < r.classes[y].front();
}

inline void order_classes(ClassificationReport& r) {
  for (auto& c : r.classes) std::sort(c.begin(), c.end());
  std::vector<std::size_t> idx(r.classes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return row_less(r, x, y); });
  std::vector<std::vector<std::size_t>> sorted;
  for (std::size_t i : idx) sorted.push_back(std::move(r.classes[i]));
  r.classes = std::move(sorted);
  r.class_profiles.clear();
  for (const auto& c : r.classes) r.class_profiles.push_back(r.pairs[c.front()].profile);
}

inline std::vector<ClassifiedPair> enumerate_pairs(const std::vector<FiniteGroup>& groups) {
  std::vector<ClassifiedPair> out;
  for (const auto& g : groups) {
    const auto& ac = catalog_automorphism_classes(g.name());
    for (const auto& cls : ac.classes) {
      const GroupMap& psi = cls.representative;
      out.push_back({g.name(), psi.image_vector(), short_automorphism_name(psi), profile(psi), {}});
    }
  }
  return out;
}

inline void check_order_allowed(std::size_t n, bool beyond_paper) {
  if (n == 0) throw ContractViolation("order must be positive");
  if (n == 16 && !beyond_paper) throw ContractViolation("order 16 is beyond the published tables; pass beyond_paper");
  if (n > 16) throw CapacityError("classification covers orders up to 16");
}

}  // namespace detail

/// Merges the given pairs: profiles bucket first, then decide() against one representative per class.
inline ClassificationReport classify_pairs(std::size_t order, std::vector<ClassifiedPair> pairs,
                                           const DecideOptions& opt = {}) {
  ClassificationReport r;
  r.order = order;
  r.pairs = std::move(pairs);
  std::vector<std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [&](const auto& b) { return r.pairs[b.front()].profile == r.pairs[i].profile; });
    if (it == buckets.end())
      buckets.push_back({i});
    else
      it->push_back(i);
  }
  for (const auto& bucket : buckets) {
    std::vector<std::vector<std::size_t>> local;
    for (std::size_t i : bucket) {
      const GroupMap psi = r.automorphism(i);
      bool placed = false;
      for (auto& cls : local) {
        IsoVerdict v = decide(r.automorphism(cls.front()), psi, opt);
        const bool iso = v.isomorphic();
        if (!v.decided()) {
          r.complete = false;
          r.incomplete_reason = "undecided pair " + r.pairs[cls.front()].group + " / " + r.pairs[i].group;
        }
        r.verdict_log.push_back({cls.front(), i, std::move(v)});
        if (iso) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) local.push_back({i});
    }
    for (auto& c : local) r.classes.push_back(std::move(c));
  }
  detail::order_classes(r);
  return r;
}

inline ClassificationReport classify_group(const FiniteGroup& g, const DecideOptions& opt = {}) {
  const auto id = identify_group(g);
  if (!id || !(build_group(*id) == g))
    throw ContractViolation("classify_group needs a catalog group, got " + g.name());
  return classify_pairs(g.order(), detail::enumerate_pairs({g}), opt);
}

// ---------------------------------------------------------------------------
// Persistence

inline json to_json(const ClassificationReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json e = {{"group", p.group}, {"automorphism", p.automorphism_name}, {"images", p.automorphism},
              {"profile", to_json(p.profile)}};
    if (!p.published_label.empty()) e["published_label"] = p.published_label;
    pairs.push_back(std::move(e));
  }
  json log = json::array();
  for (const auto& v : r.verdict_log) log.push_back({{"a", v.a}, {"b", v.b}, {"verdict", to_json(v.verdict)}});
  json out = {{"schema", kClassifySchema}, {"order", r.order},     {"beyond_paper", r.beyond_paper},
              {"complete", r.complete},    {"class_count", r.classes.size()}, {"pairs", std::move(pairs)},
              {"classes", r.classes},      {"verdict_log", std::move(log)}};
  if (!r.complete) out["incomplete_reason"] = r.incomplete_reason;
  return out;
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, std::size_t order) {
  return dir / (std::string(kClassifySchema) + "-n" + std::to_string(order) + ".json");
}

/// Default cache directory: $QF_CACHE_DIR, else $XDG_CACHE_HOME/qf, else ~/.cache/qf.
inline std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* d = std::getenv("QF_CACHE_DIR"); d && *d) return std::filesystem::path(d);
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "qf";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "qf";
  return std::nullopt;
}

/// Loads a cached report, re-verifying every merge witness. Returns nullopt on any mismatch.
inline std::optional<ClassificationReport> load_cached(const std::filesystem::path& file, std::size_t order,
                                                       const std::vector<ClassifiedPair>& expected_pairs) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("schema") != kClassifySchema || j.at("order").get<std::size_t>() != order) return std::nullopt;
    ClassificationReport r;
    r.order = order;
    r.beyond_paper = j.at("beyond_paper").get<bool>();
    r.complete = j.at("complete").get<bool>();
    if (!r.complete) return std::nullopt;
    r.pairs = expected_pairs;
    const auto& jp = j.at("pairs");
    if (jp.size() != r.pairs.size()) return std::nullopt;
    for (std::size_t i = 0; i < jp.size(); ++i)
      if (jp[i].at("group") != r.pairs[i].group || jp[i].at("images").get<std::vector<Elem>>() != r.pairs[i].automorphism)
        return std::nullopt;
    r.classes = j.at("classes").get<std::vector<std::vector<std::size_t>>>();
    for (const auto& e : j.at("verdict_log"))
      r.verdict_log.push_back({e.at("a").get<std::size_t>(), e.at("b").get<std::size_t>(), verdict_from_json(e.at("verdict"))});
    // every merge must be re-proved by its witness, and the merges must generate the classes
    std::vector<std::size_t> parent(r.pairs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (const auto& rec : r.verdict_log) {
      if (rec.a >= r.pairs.size() || rec.b >= r.pairs.size()) return std::nullopt;
      if (!rec.verdict.isomorphic()) continue;
      if (!rec.verdict.witness) return std::nullopt;
      if (!is_quandle_isomorphism(general_alexander(r.automorphism(rec.a)), general_alexander(r.automorphism(rec.b)),
                                  *rec.verdict.witness))
        return std::nullopt;
      parent[root(rec.a)] = root(rec.b);
    }
    std::size_t covered = 0;
    for (const auto& c : r.classes) {
      for (std::size_t x : c)
        if (x >= r.pairs.size() || root(x) != root(c.front())) return std::nullopt;
      covered += c.size();
    }
    if (covered != r.pairs.size()) return std::nullopt;
    for (std::size_t x = 0; x < r.classes.size(); ++x)
      for (std::size_t y = x + 1; y < r.classes.size(); ++y)
        if (root(r.classes[x].front()) == root(r.classes[y].front())) return std::nullopt;
    detail::order_classes(r);
    r.from_cache = true;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline void store_cached(const std::filesystem::path& file, const ClassificationReport& r) {
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp);
    out << to_json(r).dump(1) << '\n';
  }
  std::filesystem::rename(tmp, file);
}

/// All Q(G, psi) with |G| = n, merged into quandle-isomorphism classes.
inline ClassificationReport classify_order(std::size_t n, const ClassifyOptions& opt = {}) {
  detail::check_order_allowed(n, opt.beyond_paper);
  auto pairs = detail::enumerate_pairs(groups_of_order(n));
  if (opt.cache_dir)
    if (auto cached = load_cached(cache_file(*opt.cache_dir, n), n, pairs)) {
      cached->beyond_paper = opt.beyond_paper;
      return *cached;
    }
  ClassificationReport r = classify_pairs(n, std::move(pairs), opt.decide);
  r.beyond_paper = opt.beyond_paper;
  if (opt.cache_dir && r.complete) store_cached(cache_file(*opt.cache_dir, n), r);
  return r;
}

/// |Q_GA(n)| from the closed forms: p-1 for n = p, p for n = 2p (p odd), 2p^2-2p-1 for n = p^2.
inline std::optional<std::size_t> closed_form_counts(std::size_t n) {
  auto prime = [](std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  };
  if (prime(n)) return n - 1;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (p * p == n && prime(p)) return 2 * n - 2 * p - 1;
  if (n % 2 == 0 && n / 2 > 2 && prime(n / 2)) return n / 2;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tables

enum class TableFormat { Markdown, Csv, Json };

inline TableFormat table_format_from_string(const std::string& s) {
  if (s == "md" || s == "markdown") return TableFormat::Markdown;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  throw LookupError("unknown table format '" + s + "'");
}

struct TableRow {
  std::size_t row = 0;
  std::string published_labels;
  std::string representative;
  std::size_t psi_order = 0;
  std::size_t fix_size = 0;
  std::string p_type;
  std::string psi_on_p;
  bool p1 = false;
  bool p2 = false;
  std::string members;
};

inline std::vector<TableRow> table_rows(const ClassificationReport& r) {
  std::vector<TableRow> rows;
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    const auto& cls = r.classes[c];
    const auto& rep = r.pairs[cls.front()];
    TableRow t;
    t.row = c + 1;
    t.representative = rep.group + " " + rep.automorphism_name;
    t.psi_order = rep.profile.psi_order;
    t.fix_size = rep.profile.fix_size;
    t.p_type = rep.profile.p_iso_type.display();
    t.psi_on_p = rep.profile.psi_restricted_class.display;
    t.p1 = rep.profile.p1;
    t.p2 = rep.profile.p2_flag;
    std::vector<std::pair<std::size_t, std::string>> labels;  // (number after '_', label)
    for (std::size_t i : cls) {
      const auto& p = r.pairs[i];
      std::istringstream in(p.published_label);
      for (std::string l; std::getline(in, l, ',');)
        labels.emplace_back(std::stoul(l.substr(l.rfind('_') + 1)), l);
      if (i != cls.front()) t.members += (t.members.empty() ? "" : "; ") + p.group + " " + p.automorphism_name;
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (const auto& [k, l] : labels) t.published_labels += (t.published_labels.empty() ? "" : " ") + l;
    rows.push_back(std::move(t));
  }
  return rows;
}

inline std::string emit_table(const ClassificationReport& r, TableFormat fmt) {
  const auto rows = table_rows(r);
  auto tf = [](bool b) { return b ? "T" : "F"; };
  std::ostringstream os;
  switch (fmt) {
    case TableFormat::Markdown: {
      if (!r.complete) os << "> INCOMPLETE: " << r.incomplete_reason << "\n\n";
      os << "Q_GA(" << r.order << "): " << r.classes.size() << " classes";
      if (r.beyond_paper) os << " (beyond-paper)";
      os << "\n\n| # | published | representative | ord psi | abs Fix | P | psi on P | P1 | P2 | also realized by |\n";
      os << "|---|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& t : rows)
        os << "| " << t.row << " | " << t.published_labels << " | " << t.representative << " | " << t.psi_order << " | "
           << t.fix_size << " | " << t.p_type << " | " << t.psi_on_p << " | " << tf(t.p1) << " | " << tf(t.p2) << " | "
           << t.members << " |\n";
      break;
    }
    case TableFormat::Csv: {
      auto q = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
      };
      if (!r.complete) os << "# INCOMPLETE: " << r.incomplete_reason << "\n";
      os << "row,published,representative,psi_order,fix_size,p_type,psi_on_p,p1,p2,also_realized_by\n";
      for (const auto& t : rows)
        os << t.row << "," << q(t.published_labels) << "," << q(t.representative) << "," << t.psi_order << ","
           << t.fix_size << "," << q(t.p_type) << "," << q(t.psi_on_p) << "," << tf(t.p1) << "," << tf(t.p2) << ","
           << q(t.members) << "\n";
      break;
    }
    case TableFormat::Json: {
      json j = to_json(r);
      json table = json::array();
      for (const auto& t : rows)
        table.push_back({{"row", t.row},           {"published", t.published_labels}, {"representative", t.representative},
                         {"psi_order", t.psi_order}, {"fix_size", t.fix_size},  {"p_type", t.p_type},
                         {"psi_on_p", t.psi_on_p},   {"p1", t.p1},              {"p2", t.p2},
                         {"also_realized_by", t.members}});
      j["table"] = std::move(table);
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace qf
