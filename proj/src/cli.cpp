// Copyright 2026 The etw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "etw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "etw/bisection.hpp"
#include "etw/blocks.hpp"
#include "etw/bounds.hpp"
#include "etw/containment.hpp"
#include "etw/error.hpp"
#include "etw/families.hpp"
#include "etw/graph_io.hpp"
#include "etw/layout.hpp"
#include "etw/obstructions.hpp"
#include "etw/rewrite.hpp"
#include "etw/tree_layout.hpp"
#include "etw/width.hpp"

namespace etw {
namespace {

using nlohmann::json;

struct Budgets {
  int iso_limit = kDefaultIsoLimit;
  std::int64_t bfs_budget = 2'000'000;
  int exact_limit = WidthOptions{}.exact_limit;
  double timeout = 0;  // seconds, 0 = none
  int threads = 0;

  std::optional<std::chrono::steady_clock::time_point> deadline() const {
    if (timeout <= 0) return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(timeout));
  }
  WidthOptions width() const { return {exact_limit, threads, deadline()}; }
  ContainmentOptions containment() const { return {iso_limit, bfs_budget, deadline()}; }
};

CostKind param_kind(const std::string& param) {
  if (param == "etw") return CostKind::ec;
  if (param == "tw") return CostKind::vc;
  if (param == "pw") return CostKind::v;
  return CostKind::e;  // cw
}

Layout layout_argument(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) return parse_layout(read_text_file(file));
  return parse_layout(inline_text);
}

json layout_json(const Layout& l) { return json(l.order()); }

json tree_layout_json(const TreeLayout& t) {
  std::vector<int> parent(t.node_count());
  for (int u = 0; u < t.node_count(); ++u) parent[u] = t.parent(u);
  return json{{"root", t.root()}, {"parent", parent}, {"placement", t.placement()}};
}

void print_bounds_text(std::ostream& out, const BoundReport& r) {
  const auto row = [&](const std::string& name, const std::string& value) {
    out << std::left << std::setw(32) << name << value << '\n';
  };
  row("tw", std::to_string(r.tw));
  row("pw", std::to_string(r.pw));
  row("cw", std::to_string(r.cw));
  row("etw", std::to_string(r.etw));
  row("p_block", std::to_string(r.p_block));
  row("max_edge_degree", std::to_string(r.max_edge_degree));
  row("witness tw", format_layout(r.tw_witness.witness));
  row("witness pw", format_layout(r.pw_witness.witness));
  row("witness cw", format_layout(r.cw_witness.witness));
  row("witness etw", format_layout(r.etw_witness.witness));
  for (const NamedVerdict& v : r.verdicts) row("verdict " + v.name, v.holds ? "true" : "false");
}

json bounds_json(const BoundReport& r) {
  json verdicts = json::object();
  for (const NamedVerdict& v : r.verdicts) verdicts[v.name] = v.holds;
  return json{
      {"tw", r.tw},
      {"pw", r.pw},
      {"cw", r.cw},
      {"etw", r.etw},
      {"p_block", r.p_block},
      {"max_edge_degree", r.max_edge_degree},
      {"witnesses",
       {{"tw", layout_json(r.tw_witness.witness)},
        {"pw", layout_json(r.pw_witness.witness)},
        {"cw", layout_json(r.cw_witness.witness)},
        {"etw", layout_json(r.etw_witness.witness)},
        {"etw_tree_layout", tree_layout_json(r.etw_tree_layout)}}},
      {"verdicts", verdicts},
  };
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-treewidth toolkit for multigraphs", "etw"};
  app.require_subcommand(1);
  app.fallthrough();

  Budgets budgets;
  app.add_option("--iso-limit", budgets.iso_limit, "Max vertices for canonical codes")
      ->envname("ETW_ISO_LIMIT")
      ->check(CLI::Range(1, 16));
  app.add_option("--bfs-budget", budgets.bfs_budget, "Max states per containment search")
      ->envname("ETW_BFS_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--exact-limit", budgets.exact_limit, "Max vertices for exact widths")
      ->envname("ETW_EXACT_LIMIT")
      ->check(CLI::Range(1, kMaxExactVertices));
  app.add_option("--timeout", budgets.timeout, "Wall-clock limit in seconds (0 = none)")
      ->envname("ETW_TIMEOUT")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", budgets.threads, "Worker threads (0 = all cores)")
      ->envname("ETW_THREADS")
      ->check(CLI::NonNegativeNumber);

  // compute
  auto* compute = app.add_subcommand("compute", "Exact width with a witness layout");
  std::string param;
  std::optional<int> root;
  std::string mode_name = "dp";
  bool with_tree = false;
  std::string compute_file;
  compute->add_option("--param", param, "etw, tw, pw, cw or p-block")
      ->required()
      ->check(CLI::IsMember({"etw", "tw", "pw", "cw", "p-block"}));
  compute->add_option("--root", root, "Force the first vertex of the layout");
  compute->add_option("--mode", mode_name, "dp, bnb or greedy")->check(CLI::IsMember({"dp", "bnb", "greedy"}));
  compute->add_flag("--tree", with_tree, "Also print the derived tree-layout (etw only)");
  compute->add_option("file", compute_file, "Graph file")->required();

  // profile
  auto* profile = app.add_subcommand("profile", "Cost profile of a given layout or tree-layout");
  std::string kind_name = "ec";
  std::string layout_text;
  std::string layout_file;
  std::string tree_file;
  std::string profile_file;
  profile->add_option("--kind", kind_name, "v, vc, e, ec (layouts) or v, e (tree-layouts)")
      ->check(CLI::IsMember({"v", "vc", "e", "ec"}));
  profile->add_option("--layout", layout_text, "Layout as a quoted list of vertices");
  profile->add_option("--layout-file", layout_file, "File holding the layout");
  profile->add_option("--tree-layout", tree_file, "Tree-layout file");
  profile->add_option("file", profile_file, "Graph file")->required();

  // generate
  auto* gen = app.add_subcommand("generate", "Print a member of a named family");
  std::string family_name;
  int index = 0;
  bool as_dot = false;
  gen->add_option("--family", family_name, "Family name")->required();
  gen->add_option("--index", index, "Family index")->required();
  gen->add_flag("--dot", as_dot, "DOT output");

  // contain
  auto* contain = app.add_subcommand("contain", "Is H contained in G under a relation?");
  std::string relation_name;
  std::string h_file;
  std::string g_file;
  contain->add_option("--relation", relation_name, "mn, tp, im or wtp")
      ->required()
      ->check(CLI::IsMember({"mn", "tp", "im", "wtp"}));
  contain->add_option("H", h_file, "Pattern graph")->required();
  contain->add_option("G", g_file, "Host graph")->required();

  // obstruction-check
  auto* obs = app.add_subcommand("obstruction-check", "Is the graph a minimal obstruction for etw <= k?");
  int obs_k = 0;
  std::string obs_file;
  obs->add_option("--k", obs_k, "Threshold (1 or 2)")->required();
  obs->add_option("file", obs_file, "Graph file")->required();

  // universal-p
  auto* unip = app.add_subcommand("universal-p", "Largest antichain layer contained as a weak topological minor");
  int max_layer = 2;
  std::string unip_file;
  unip->add_option("--max-layer", max_layer, "Highest layer to test")->check(CLI::NonNegativeNumber);
  unip->add_option("file", unip_file, "Graph file")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "All widths, p_block and the inequality checks");
  bool bounds_json_out = false;
  std::string bounds_file;
  bounds->add_flag("--json", bounds_json_out, "JSON output");
  bounds->add_option("file", bounds_file, "Graph file")->required();

  // blocks
  auto* blocks = app.add_subcommand("blocks", "Blocks and cut vertices");
  std::string blocks_file;
  blocks->add_option("file", blocks_file, "Graph file")->required();

  // convert
  auto* convert = app.add_subcommand("convert", "Convert between graph, layout and tree-layout forms");
  std::string convert_to;
  std::string convert_file;
  std::string convert_layout_text;
  std::string convert_layout_file;
  std::string convert_tree_file;
  convert->add_option("--to", convert_to, "treelayout, layout, dot or native")
      ->required()
      ->check(CLI::IsMember({"treelayout", "layout", "dot", "native"}));
  convert->add_option("--layout", convert_layout_text, "Layout (for --to treelayout)");
  convert->add_option("--layout-file", convert_layout_file, "Layout file (for --to treelayout)");
  convert->add_option("--tree-layout", convert_tree_file, "Tree-layout file (for --to layout)");
  convert->add_option("file", convert_file, "Graph file")->required();

  // np-reduce / verify-reduction / min-bisection
  auto* reduce = app.add_subcommand("np-reduce", "Build the edge-treewidth instance of a bisection instance");
  std::int64_t reduce_k = 0;
  std::string reduce_file;
  reduce->add_option("--k", reduce_k, "Bisection budget")->required()->check(CLI::NonNegativeNumber);
  reduce->add_option("file", reduce_file, "Graph file")->required();

  auto* verify = app.add_subcommand("verify-reduction", "Solve both sides of the reduction exactly");
  std::int64_t verify_k = 0;
  std::string verify_file;
  verify->add_option("--k", verify_k, "Bisection budget")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("file", verify_file, "Graph file")->required();

  auto* bisect = app.add_subcommand("min-bisection", "Exact minimum bisection");
  std::string bisect_file;
  bisect->add_option("file", bisect_file, "Graph file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const Multigraph g = read_graph_file(compute_file);
      if (param == "p-block") {
        out << p_block(g, budgets.width()) << '\n';
        return kExitOk;
      }
      if (root && !g.contains_vertex(*root)) throw PreconditionError("root vertex out of range");
      const SolveMode mode = *solve_mode_from_string(mode_name);
      const WidthCertificate cert = width_exact(g, param_kind(param), root, mode, budgets.width());
      check_certificate(g, cert);
      out << cert.value << '\n';
      out << "layout " << format_layout(cert.witness) << '\n';
      if (mode == SolveMode::greedy_upper) out << "note upper bound only\n";
      if (with_tree && param == "etw") {
        out << "tree-layout\n" << serialize_tree_layout(layout_to_tree_layout(g, cert.witness));
      }
      return kExitOk;
    }

    if (profile->parsed()) {
      const Multigraph g = read_graph_file(profile_file);
      if (!tree_file.empty()) {
        if (kind_name != "v" && kind_name != "e") {
          throw PreconditionError("tree-layout costs are v or e (got " + kind_name + ")");
        }
        const TreeLayout t = parse_tree_layout(read_text_file(tree_file));
        const TreeLayoutVerdict verdict = validate_tree_layout(g, t);
        if (!verdict.valid) {
          for (const auto& p : verdict.problems) err << "problem: " << p << '\n';
          for (const Edge& e : verdict.violations) err << "edge " << e.u << ' ' << e.v << " spans incomparable nodes\n";
          return kExitFalse;
        }
        const TreeCostProfile prof =
            tree_cost_profile(g, t, kind_name == "v" ? TreeCostKind::v : TreeCostKind::e);
        out << "costs";
        for (auto c : prof.node_cost) out << ' ' << c;
        out << "\nmax " << prof.max << '\n';
        return kExitOk;
      }
      if (layout_text.empty() && layout_file.empty()) throw PreconditionError("profile needs --layout, --layout-file or --tree-layout");
      const Layout l = layout_argument(layout_text, layout_file);
      const auto costs = cost_profile(g, l, *cost_kind_from_string(kind_name));
      out << "costs";
      for (auto c : costs) out << ' ' << c;
      out << "\nmax " << profile_max(costs) << '\n';
      return kExitOk;
    }

    if (gen->parsed()) {
      const auto family = family_from_string(family_name);
      if (!family) throw PreconditionError("unknown family '" + family_name + "'");
      out << serialize_graph(generate(*family, index), as_dot ? GraphFormat::dot : GraphFormat::native);
      return kExitOk;
    }

    if (contain->parsed()) {
      const Multigraph h = read_graph_file(h_file);
      const Multigraph g = read_graph_file(g_file);
      const ContainmentResult r = contains(h, g, *relation_from_string(relation_name), budgets.containment());
      out << to_string(r.verdict) << '\n' << "states " << r.states << '\n';
      if (!r.reason.empty()) out << "reason " << r.reason << '\n';
      switch (r.verdict) {
        case Verdict::contained: return kExitOk;
        case Verdict::not_contained: return kExitFalse;
        case Verdict::indeterminate: return kExitIndeterminate;
      }
    }

    if (obs->parsed()) {
      fixed_obstruction_set(obs_k);  // rejects unsupported k
      const Multigraph g = read_graph_file(obs_file);
      const bool minimal = minimality_check(g, obs_k, budgets.width());
      out << (minimal ? "minimal" : "not minimal") << '\n';
      return minimal ? kExitOk : kExitFalse;
    }

    if (unip->parsed()) {
      const Multigraph g = read_graph_file(unip_file);
      const UniversalPResult r = universal_p(g, max_layer, Antichain{}, budgets.containment());
      for (const auto& line : r.undecided) out << "undecided " << line << '\n';
      if (r.value) {
        out << *r.value << '\n';
        return kExitOk;
      }
      out << "indeterminate (at least " << r.lower_bound << ")\n";
      return kExitIndeterminate;
    }

    if (bounds->parsed()) {
      const Multigraph g = read_graph_file(bounds_file);
      const BoundReport r = bound_report(g, budgets.width());
      if (bounds_json_out) {
        out << bounds_json(r).dump(2) << '\n';
      } else {
        print_bounds_text(out, r);
      }
      if (!r.all_hold()) {
        err << "bound violated; graph follows\n" << serialize_graph(g);
        return kExitInvariant;
      }
      return kExitOk;
    }

    if (blocks->parsed()) {
      const Multigraph g = read_graph_file(blocks_file);
      const BlockDecomposition bd = block_decomposition(g);
      for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        out << "block " << i << ':';
        for (Vertex v : bd.blocks[i].vertices) out << ' ' << v;
        if (bd.blocks[i].is_bridge) out << " (bridge)";
        out << '\n';
      }
      out << "cut-vertices";
      for (Vertex v : bd.cut_vertices) out << ' ' << v;
      out << '\n';
      return kExitOk;
    }

    if (convert->parsed()) {
      const Multigraph g = read_graph_file(convert_file);
      if (convert_to == "dot" || convert_to == "native") {
        out << serialize_graph(g, convert_to == "dot" ? GraphFormat::dot : GraphFormat::native);
      } else if (convert_to == "treelayout") {
        if (convert_layout_text.empty() && convert_layout_file.empty()) {
          throw PreconditionError("--to treelayout needs --layout or --layout-file");
        }
        out << serialize_tree_layout(layout_to_tree_layout(g, layout_argument(convert_layout_text, convert_layout_file)));
      } else {
        if (convert_tree_file.empty()) throw PreconditionError("--to layout needs --tree-layout");
        out << format_layout(tree_layout_to_layout(g, parse_tree_layout(read_text_file(convert_tree_file)))) << '\n';
      }
      return kExitOk;
    }

    if (reduce->parsed()) {
      const EtwInstance inst = reduce_bisection_to_etw({read_graph_file(reduce_file), reduce_k});
      out << "# w " << inst.w << '\n' << serialize_graph(inst.h);
      return kExitOk;
    }

    if (verify->parsed()) {
      const ReductionCheck c = verify_reduction({read_graph_file(verify_file), verify_k}, budgets.width());
      out << "min-bisection " << c.min_bisection << '\n'
          << "etw(H) " << c.etw_h << '\n'
          << "w " << c.w << '\n'
          << "bisection " << (c.bisection_yes ? "yes" : "no") << '\n'
          << "edge-treewidth " << (c.etw_yes ? "yes" : "no") << '\n';
      if (c.witness_cost) out << "witness-cost " << *c.witness_cost << '\n';
      out << "agree " << (c.agree() ? "true" : "false") << '\n';
      if (!c.agree() || !c.witness_ok()) return kExitInvariant;
      return kExitOk;
    }

    if (bisect->parsed()) {
      const BisectionResult r = min_bisection_exact(read_graph_file(bisect_file));
      out << r.value << "\nside";
      for (Vertex v : r.side) out << ' ' << v;
      out << '\n';
      return kExitOk;
    }
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace etw
