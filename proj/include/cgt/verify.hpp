#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cgt/catalog.hpp"
#include "cgt/errors.hpp"
#include "cgt/group.hpp"
#include "cgt/poset.hpp"
#include "cgt/subgroup_posets.hpp"

namespace cgt {

// Structure facts computed from element orders and the minimal-subgroup
// count only. The classification side of the harness deliberately never
// touches the poset machinery, so predicted and computed values come from
// independent code paths.
struct Classification {
  bool is_cyclic = false;
  std::optional<std::pair<std::size_t, std::size_t>> p_group;  // (p, k)
  bool is_generalized_quaternion = false;
};

inline bool is_cyclic(const GroupTable& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.order_of(x) == g.order()) return true;
  return false;
}

// (p, k) with |G| = p^k, k >= 1; the trivial group is not a p-group here.
inline std::optional<std::pair<std::size_t, std::size_t>> is_p_group(const GroupTable& g) {
  std::size_t n = g.order();
  if (n == 1) return std::nullopt;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  std::size_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

// Noncyclic of order 2^n (n >= 3) with exactly one subgroup of prime order.
inline bool is_generalized_quaternion(const GroupTable& g) {
  if (g.order() < 8) return false;
  auto pk = is_p_group(g);
  if (!pk || pk->first != 2) return false;
  if (is_cyclic(g)) return false;
  return minimal_subgroups(g).size() == 1;
}

inline Classification classify(const GroupTable& g) {
  Classification c;
  c.is_cyclic = is_cyclic(g);
  c.p_group = is_p_group(g);
  c.is_generalized_quaternion = is_generalized_quaternion(g);
  return c;
}

// C(G) has a breaking point iff G is a cyclic p-group of order at least p^2
// or a generalized quaternion 2-group.
inline bool predicted_breaking_existence(const Classification& c) {
  return (c.is_cyclic && c.p_group && c.p_group->second >= 2) ||
         c.is_generalized_quaternion;
}

inline bool predicted_breaking_existence(const GroupTable& g) {
  return predicted_breaking_existence(classify(g));
}

// The breaking point is unique iff G is cyclic of order exactly p^2 or
// generalized quaternion.
inline bool predicted_breaking_uniqueness(const Classification& c) {
  return (c.is_cyclic && c.p_group && c.p_group->second == 2) ||
         c.is_generalized_quaternion;
}

inline bool predicted_breaking_uniqueness(const GroupTable& g) {
  return predicted_breaking_uniqueness(classify(g));
}

// Predicted-versus-computed facts for one group. Any disagreement marks the
// record failed.
struct AgreementRecord {
  std::string group_name;
  std::size_t order = 0;
  Classification classification;

  bool predicted_exists = false;
  bool computed_exists = false;
  bool predicted_unique = false;
  std::size_t computed_count = 0;

  bool cbar_exists = false;
  bool cbar_checked = false;  // the Cbar lemma applies to p-groups only
  bool weaker_condition_ok = true;

  std::vector<std::string> breaking_labels;       // breaking points of C(G)
  std::vector<std::string> cbar_breaking_labels;  // breaking points of Cbar(G)

  bool failed = false;
};

// Computes the breaking points of C(G) and Cbar(G) and compares them with
// the classification predicates: existence, uniqueness, the Cbar lemma for
// p-groups, and the implication that a breaking point of C(G) stays one in
// Cbar(G).
inline AgreementRecord check_group(const GroupTable& g) {
  if (g.order() > kDefaultTableCap)
    throw BadParameter("check_group supported up to order " +
                       std::to_string(kDefaultTableCap));
  AgreementRecord r;
  r.group_name = g.name();
  r.order = g.order();
  r.classification = classify(g);
  r.predicted_exists = predicted_breaking_existence(r.classification);
  r.predicted_unique = predicted_breaking_uniqueness(r.classification);

  auto c_poset = cyclic_subgroup_poset(g);
  auto c_breaking = breaking_points(c_poset.poset, PosetKind::cyclic,
                                    c_poset.minimum_node, c_poset.maximum_nodes);
  r.computed_count = c_breaking.count;
  r.computed_exists = c_breaking.count > 0;
  for (const auto& [id, label] : c_breaking.breaking_nodes) r.breaking_labels.push_back(label);

  auto cbar = conjugacy_classes_of_cyclic(g);
  auto cbar_breaking =
      breaking_points(cbar.poset, PosetKind::classes, cbar.minimum_node, cbar.maximum_nodes);
  r.cbar_exists = cbar_breaking.count > 0;
  for (const auto& [id, label] : cbar_breaking.breaking_nodes)
    r.cbar_breaking_labels.push_back(label);

  // every breaking point H of C(G) must reappear as the breaking class [H]
  for (const auto& [id, label] : c_breaking.breaking_nodes) {
    const SubgroupSet& h = c_poset.poset.node(id);
    bool found = false;
    for (const auto& [cid, clabel] : cbar_breaking.breaking_nodes) {
      for (const auto& m : cbar.poset.node(cid).members)
        if (m == h) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) r.weaker_condition_ok = false;
  }

  r.cbar_checked = r.classification.p_group.has_value();
  bool cbar_ok = !r.cbar_checked || r.cbar_exists == r.predicted_exists;
  r.failed = r.computed_exists != r.predicted_exists ||
             (r.computed_count == 1) != r.predicted_unique || !cbar_ok ||
             !r.weaker_condition_ok;
  return r;
}

// A non-p-group whose Cbar(G) has breaking points; the general
// characterization is an open problem, so findings are reported, never
// asserted against.
struct CbarFinding {
  std::string group_name;
  std::size_t order = 0;
  std::vector<std::string> breaking_class_labels;
};

struct VerificationReport {
  unsigned schema_version = 1;
  std::size_t max_order = 0;
  std::vector<AgreementRecord> entries;
  std::size_t total = 0;
  std::size_t failed_count = 0;
  std::map<std::size_t, std::size_t> coverage;  // entries per order
  std::vector<CbarFinding> findings;
};

inline VerificationReport run_corpus(std::size_t max_order) {
  VerificationReport report;
  report.max_order = max_order;
  for (const auto& entry : corpus(max_order)) {
    AgreementRecord r = check_group(entry.group);
    ++report.coverage[r.order];
    if (r.failed) ++report.failed_count;
    if (!r.classification.p_group && r.cbar_exists)
      report.findings.push_back({r.group_name, r.order, r.cbar_breaking_labels});
    report.entries.push_back(std::move(r));
  }
  report.total = report.entries.size();
  return report;
}

// Scans the non-p-groups of the corpus for breaking points of Cbar(G).
inline std::vector<CbarFinding> search_cbar(std::size_t max_order) {
  std::vector<CbarFinding> findings;
  for (const auto& entry : corpus(max_order)) {
    if (is_p_group(entry.group)) continue;
    auto cbar = conjugacy_classes_of_cyclic(entry.group);
    auto breaking =
        breaking_points(cbar.poset, PosetKind::classes, cbar.minimum_node, cbar.maximum_nodes);
    if (breaking.count == 0) continue;
    CbarFinding f;
    f.group_name = entry.name;
    f.order = entry.group.order();
    for (const auto& [id, label] : breaking.breaking_nodes)
      f.breaking_class_labels.push_back(label);
    findings.push_back(std::move(f));
  }
  return findings;
}

inline nlohmann::ordered_json to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["is_cyclic"] = c.is_cyclic;
  if (c.p_group)
    j["p_group"] = {{"p", c.p_group->first}, {"k", c.p_group->second}};
  else
    j["p_group"] = nullptr;
  j["is_generalized_quaternion"] = c.is_generalized_quaternion;
  return j;
}

inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = report.schema_version;
  j["max_order"] = report.max_order;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& r : report.entries) {
    nlohmann::ordered_json e;
    e["name"] = r.group_name;
    e["order"] = r.order;
    e["classification"] = to_json(r.classification);
    e["predicted"] = {{"exists", r.predicted_exists}, {"unique", r.predicted_unique}};
    e["computed"] = {{"exists", r.computed_exists},
                     {"count", r.computed_count},
                     {"breaking_points", r.breaking_labels},
                     {"cbar_exists", r.cbar_exists},
                     {"cbar_checked", r.cbar_checked},
                     {"weaker_condition_ok", r.weaker_condition_ok}};
    e["agree"] = !r.failed;
    j["entries"].push_back(std::move(e));
  }
  nlohmann::ordered_json per_order;
  for (const auto& [order, count] : report.coverage)
    per_order[std::to_string(order)] = count;
  j["summary"] = {{"total", report.total},
                  {"failed", report.failed_count},
                  {"per_order", per_order}};
  j["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : report.findings) {
    j["findings"].push_back({{"name", f.group_name},
                             {"order", f.order},
                             {"breaking_classes", f.breaking_class_labels}});
  }
  return j;
}

inline std::string to_text(const VerificationReport& report) {
  std::string out;
  out += "verification corpus up to order " + std::to_string(report.max_order) + "\n";
  for (const auto& r : report.entries) {
    out += r.failed ? "DISAGREE " : "agree    ";
    out += r.group_name;
    out += " (order " + std::to_string(r.order) + "): predicted=" +
           (r.predicted_exists ? "yes" : "no") + " computed=" +
           (r.computed_exists ? "yes" : "no") + " count=" +
           std::to_string(r.computed_count);
    if (r.cbar_checked)
      out += std::string(" cbar=") + (r.cbar_exists ? "yes" : "no");
    out += "\n";
  }
  out += "coverage:";
  for (const auto& [order, count] : report.coverage)
    out += " " + std::to_string(order) + ":" + std::to_string(count);
  out += "\n";
  out += "total " + std::to_string(report.total) + ", failed " +
         std::to_string(report.failed_count) + "\n";
  if (report.findings.empty()) {
    out += "no non-p-group in the corpus has a breaking point in Cbar(G)\n";
  } else {
    for (const auto& f : report.findings) {
      out += "FINDING " + f.group_name + " (order " + std::to_string(f.order) +
             "): breaking classes";
      for (const auto& l : f.breaking_class_labels) out += " [" + l + "]";
      out += "\n";
    }
  }
  return out;
}

}  // namespace cgt
