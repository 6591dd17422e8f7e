// Command-line front end: analyze a group's subgroup posets, realize a
// presentation, verify the breaking-point classification over the corpus,
// run the open-problem search on Cbar(G), and export Hasse diagrams.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgt/cgt.hpp"

namespace {

using nlohmann::ordered_json;

struct GroupOptions {
  std::string spec;
  std::size_t max_cosets = cgt::kDefaultMaxCosets;
  std::size_t table_cap = cgt::kDefaultTableCap;
};

// Accepts catalog names (Z_12, D_16, Q16, SD_32, M_16, Dic_5, S_4, A_5,
// Z_2 x Z_4) or an inline presentation prefixed with "pres:".
cgt::GroupTable resolve_group(const GroupOptions& opt) {
  if (opt.spec.rfind("pres:", 0) == 0) {
    auto p = cgt::parse_presentation(opt.spec.substr(5));
    return cgt::todd_coxeter(p, opt.max_cosets);
  }
  return cgt::make_group(opt.spec, opt.table_cap);
}

ordered_json fingerprint_json(const cgt::Fingerprint& f) {
  ordered_json histogram;
  for (const auto& [k, v] : f.order_histogram) histogram[std::to_string(k)] = v;
  return ordered_json{{"order", f.order},
                      {"abelian", f.abelian},
                      {"order_histogram", histogram},
                      {"class_sizes", f.class_sizes}};
}

template <typename Node>
ordered_json poset_json(const cgt::GroupTable& g, const cgt::GroupPoset<Node>& gp,
                        const cgt::BreakingReport& breaking) {
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < gp.poset.size(); ++i)
    nodes.push_back({{"id", i}, {"label", gp.poset.label(i)}});
  ordered_json points = ordered_json::array();
  for (const auto& [id, label] : breaking.breaking_nodes)
    points.push_back({{"id", id}, {"label", label}});
  return ordered_json{{"group", g.name()},
                      {"order", g.order()},
                      {"poset", cgt::to_string(breaking.poset_kind)},
                      {"nodes", nodes},
                      {"breaking", {{"count", breaking.count}, {"points", points}}}};
}

template <typename Node>
void print_poset_text(const cgt::GroupTable& g, const cgt::GroupPoset<Node>& gp,
                      const cgt::BreakingReport& breaking) {
  std::cout << "group: " << g.name() << " (order " << g.order() << ")\n";
  std::cout << "poset: " << cgt::to_string(breaking.poset_kind) << ", "
            << gp.poset.size() << " nodes\n";
  std::cout << "breaking points: " << breaking.count << "\n";
  for (const auto& [id, label] : breaking.breaking_nodes)
    std::cout << "  n" << id << ": " << label << "\n";
}

// Runs fn on the poset of the requested kind with its exclusions.
template <typename Fn>
void with_poset(const cgt::GroupTable& g, const std::string& kind, Fn fn) {
  if (kind == "cyclic") {
    auto gp = cgt::cyclic_subgroup_poset(g);
    fn(gp, cgt::breaking_points(gp.poset, cgt::PosetKind::cyclic, gp.minimum_node,
                                gp.maximum_nodes));
  } else if (kind == "lattice") {
    auto gp = cgt::subgroup_lattice_poset(g);
    fn(gp, cgt::breaking_points(gp.poset, cgt::PosetKind::lattice, gp.minimum_node,
                                gp.maximum_nodes));
  } else {
    auto gp = cgt::conjugacy_classes_of_cyclic(g);
    fn(gp, cgt::breaking_points(gp.poset, cgt::PosetKind::classes, gp.minimum_node,
                                gp.maximum_nodes));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group toolkit: subgroup posets and their breaking points"};
  app.require_subcommand(1);

  GroupOptions group_opt;
  std::string poset_kind = "cyclic";
  std::string format = "text";
  std::string presentation_text;
  std::string report_path;
  std::string out_path;
  std::size_t max_order = 15;

  auto add_group_flags = [&](CLI::App* cmd, bool with_poset_flag) {
    cmd->add_option("--group", group_opt.spec,
                    "group spec (catalog name or pres:<presentation>)")
        ->required();
    if (with_poset_flag)
      cmd->add_option("--poset", poset_kind, "poset kind")
          ->check(CLI::IsMember({"cyclic", "lattice", "classes"}))
          ->capture_default_str();
    cmd->add_option("--max-cosets", group_opt.max_cosets,
                    "coset budget for pres: specs")
        ->capture_default_str();
    cmd->add_option("--table-cap", group_opt.table_cap,
                    "largest multiplication table to build")
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "poset summary and breaking points");
  add_group_flags(analyze, true);
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* build = app.add_subcommand("build", "realize a presentation as a group");
  build->add_option("--presentation", presentation_text, "presentation text")->required();
  build->add_option("--max-cosets", group_opt.max_cosets, "coset budget")
      ->capture_default_str();
  build->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "check the breaking-point classification over the corpus");
  verify->add_option("--max-order", max_order, "largest group order to include")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}))
      ->capture_default_str();
  verify->add_option("--report", report_path, "also write the JSON report to this path");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* search = app.add_subcommand(
      "search-cbar", "scan non-p-groups for breaking points of Cbar(G)");
  search->add_option("--max-order", max_order, "largest group order to include")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}))
      ->capture_default_str();
  search->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* hasse = app.add_subcommand("hasse", "write the Hasse diagram as DOT");
  add_group_flags(hasse, true);
  hasse->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) {
      auto g = resolve_group(group_opt);
      with_poset(g, poset_kind, [&](const auto& gp, const cgt::BreakingReport& br) {
        if (format == "json")
          std::cout << poset_json(g, gp, br).dump(2) << "\n";
        else
          print_poset_text(g, gp, br);
      });
      return 0;
    }
    if (build->parsed()) {
      auto p = cgt::parse_presentation(presentation_text);
      auto g = cgt::todd_coxeter(p, group_opt.max_cosets);
      auto f = cgt::fingerprint(g);
      if (format == "json") {
        ordered_json j{{"presentation", cgt::to_string(p)},
                       {"order", g.order()},
                       {"fingerprint", fingerprint_json(f)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "presentation: " << cgt::to_string(p) << "\n";
        std::cout << "order: " << g.order() << "\n";
        std::cout << "fingerprint: " << cgt::to_string(f) << "\n";
      }
      return 0;
    }
    if (verify->parsed()) {
      auto report = cgt::run_corpus(max_order);
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw cgt::Error("cannot write report to " + report_path);
        out << cgt::to_json(report).dump(2) << "\n";
      }
      if (format == "json")
        std::cout << cgt::to_json(report).dump(2) << "\n";
      else
        std::cout << cgt::to_text(report);
      return report.failed_count == 0 ? 0 : 1;
    }
    if (search->parsed()) {
      auto findings = cgt::search_cbar(max_order);
      if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& f : findings)
          j.push_back({{"name", f.group_name},
                       {"order", f.order},
                       {"breaking_classes", f.breaking_class_labels}});
        std::cout << ordered_json{{"max_order", max_order}, {"findings", j}}.dump(2)
                  << "\n";
      } else {
        std::cout << "searched non-p-groups up to order " << max_order << "\n";
        if (findings.empty()) {
          std::cout << "no breaking points of Cbar(G) found\n";
        } else {
          for (const auto& f : findings) {
            std::cout << "FINDING " << f.group_name << " (order " << f.order
                      << "): breaking classes";
            for (const auto& l : f.breaking_class_labels) std::cout << " [" << l << "]";
            std::cout << "\n";
          }
        }
      }
      return 0;
    }
    if (hasse->parsed()) {
      auto g = resolve_group(group_opt);
      with_poset(g, poset_kind, [&](const auto& gp, const cgt::BreakingReport& br) {
        std::ofstream out(out_path);
        if (!out) throw cgt::Error("cannot write DOT to " + out_path);
        out << cgt::to_dot(gp.poset, br);
      });
      return 0;
    }
  } catch (const cgt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
