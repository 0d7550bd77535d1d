#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ternhom/chain.hpp"
#include "ternhom/cocycle.hpp"
#include "ternhom/cube_io.hpp"
#include "ternhom/errors.hpp"
#include "ternhom/homology.hpp"
#include "ternhom/knot.hpp"
#include "ternhom/presentation.hpp"
#include "ternhom/report_io.hpp"

namespace ternhom::cli {

namespace {

using nlohmann::json;

struct Options {
  std::vector<unsigned> triangle;
  std::string presentation;
  std::string cube_file;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 20240101;
  ComputeLimits limits;
  long long snf_budget_ms = 0;

  std::string out_file;
  int degree = 1;
  std::string export_boundary;
  std::string braid;
  std::optional<std::size_t> strands;
  std::string name;
  bool table = false;
  std::uint64_t modulus = 0;
};

struct Source {
  TernaryCube cube;
  std::vector<std::string> labels;  // words of the odd elements, when built from a presentation
};

void read_env(Options& o) {
  auto number = [](const char* key) -> std::optional<unsigned long long> {
    const char* v = std::getenv(key);
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    const auto x = std::strtoull(v, &end, 10);
    if (*end || x == 0) throw MalformedInput(std::string(key) + " must be a positive integer");
    return x;
  };
  if (auto v = number("TERNHOM_MAX_COSETS")) o.limits.max_cosets = *v;
  if (auto v = number("TERNHOM_MAX_BASIS")) o.limits.max_basis = *v;
  if (auto v = number("TERNHOM_SNF_BUDGET")) o.snf_budget_ms = static_cast<long long>(*v);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for randomized checks");
  cmd->add_option("--max-cosets", o.limits.max_cosets, "Coset table limit (env TERNHOM_MAX_COSETS)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-basis", o.limits.max_basis, "Tuples per chain basis limit (env TERNHOM_MAX_BASIS)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--snf-time-budget", o.snf_budget_ms, "Milliseconds per Smith form, 0 = none (env TERNHOM_SNF_BUDGET)")
      ->check(CLI::NonNegativeNumber);
}

void add_source(CLI::App* cmd, Options& o) {
  auto* tri = cmd->add_option("--triangle", o.triangle, "Odd part of the triangle group (l m n)")->expected(3);
  auto* pres = cmd->add_option("--presentation", o.presentation, "Odd part of a presented group, \"a,b | ...\"");
  auto* file = cmd->add_option("--cube", o.cube_file, "Cube file (JSON or text)");
  tri->excludes(pres)->excludes(file);
  pres->excludes(file);
}

Source load_source(const Options& o, bool default_trefoil_cube) {
  auto from_presentation = [&](const GroupPresentation& p, std::string name) {
    auto split = odd_even_from_presentation(p, o.limits.max_cosets);
    split.odd.set_name(std::move(name));
    return Source{std::move(split.odd), std::move(split.odd_labels)};
  };
  if (!o.triangle.empty()) {
    const auto& t = o.triangle;
    if (t[0] < 2 || t[1] < 2 || t[2] < 2) throw MalformedInput("triangle exponents must be at least 2");
    return from_presentation(triangle_presentation(t[0], t[1], t[2]), "O(triangle(" + std::to_string(t[0]) + "," +
                                                                            std::to_string(t[1]) + "," +
                                                                            std::to_string(t[2]) + "))");
  }
  if (!o.presentation.empty())
    return from_presentation(parse_presentation(o.presentation), "O(" + o.presentation + ")");
  if (!o.cube_file.empty()) return Source{read_cube_file(o.cube_file), {}};
  if (default_trefoil_cube) return from_presentation(triangle_presentation(2, 2, 3), "O(triangle(2,2,3))");
  throw MalformedInput("give a cube source: --triangle l m n, --presentation TEXT or --cube FILE");
}

ComputeLimits limits_of(const Options& o) {
  ComputeLimits l = o.limits;
  l.jobs = o.jobs;
  l.snf_time_budget = std::chrono::milliseconds(o.snf_budget_ms);
  return l;
}

json skew_json(const TernaryGroup& g) {
  json s = json::array();
  for (auto e : g.skew().skew) s.push_back(e.index + 1);
  return s;
}

std::string skew_text(const TernaryGroup& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.order(); ++i) s += (i ? "," : "") + std::to_string(g.bar(static_cast<std::uint32_t>(i)) + 1);
  return s + ")";
}

// ---------------------------------------------------------------------------

int cmd_group(const Options& o, std::ostream& out, std::ostream& err) {
  const auto src = load_source(o, false);
  const auto axioms = verify_group(src.cube, {10, o.jobs});
  json report{{"name", src.cube.name()}, {"order", src.cube.order()}, {"axioms", to_json(axioms)}};
  if (!src.labels.empty()) report["labels"] = src.labels;

  std::optional<TernaryGroup> group;
  if (axioms.is_group()) {
    group = TernaryGroup::verified(src.cube, {10, o.jobs});
    report["skew"] = skew_json(*group);
    const auto reduction = is_reducible(*group);
    report["reducible"] = reduction.has_value();
    if (reduction) report["identity"] = reduction->identity.index + 1;
    report["t_axioms_hold"] = !check_t_axioms(*group).has_value();
    report["division_contracts_hold"] = !check_division_contracts(*group).has_value();
  }
  if (!o.out_file.empty())
    write_cube_file(o.out_file, src.cube);
  else
    report["cube"] = cube_to_json(src.cube);

  if (o.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << src.cube.name() << ": order " << src.cube.order() << "\n";
    if (!src.labels.empty()) {
      out << "elements:";
      for (std::size_t i = 0; i < src.labels.size(); ++i) out << " " << i + 1 << ")" << src.labels[i];
      out << "\n";
    }
    out << "ternary group: " << (axioms.is_group() ? "yes" : "no") << "\n";
    for (const auto& w : report["axioms"]["witnesses"]) out << "  violation " << w.dump() << "\n";
    if (group) {
      out << "skew: " << skew_text(*group) << "\n";
      out << "reducible: " << (report["reducible"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (o.out_file.empty()) out << cube_to_text(src.cube);
  }
  if (!axioms.is_group()) {
    err << "error: cube fails the ternary group axioms\n";
    return Contract;
  }
  return Ok;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const auto group = TernaryGroup::verified(load_source(o, false).cube, {10, o.jobs});
  HomologyCalculator h(group, limits_of(o));
  const auto result = h.homology(o.degree);
  if (!o.export_boundary.empty()) {
    std::ofstream file(o.export_boundary);
    if (!file) throw MalformedInput("cannot write " + o.export_boundary);
    write_boundary_matrix(file, h.boundary(o.degree + 1));
  }
  if (o.format == "json")
    out << to_json(result).dump(2) << "\n";
  else
    out << "H_" << o.degree << " = " << result.to_string() << "\n";
  return Ok;
}

int cmd_knot(const Options& o, std::ostream& out) {
  const auto group = TernaryGroup::verified(load_source(o, true).cube, {10, o.jobs});
  HomologyCalculator h(group, limits_of(o));

  std::vector<std::pair<BraidWord, const KnotTableEntry*>> work;
  if (o.table) {
    if (!o.braid.empty()) throw MalformedInput("--table and --braid are exclusive");
    for (const auto& e : knot_table()) {
      auto b = parse_braid(e.braid);
      b.name = e.name;
      work.emplace_back(std::move(b), &e);
    }
  } else {
    if (o.braid.empty()) throw MalformedInput("give --braid \"[...]\" or --table");
    auto b = parse_braid(o.braid, o.strands);
    b.name = o.name;
    work.emplace_back(std::move(b), nullptr);
  }

  json reports = json::array();
  for (const auto& [braid, entry] : work) {
    const auto r = invariant_report(h, braid);
    if (o.format == "json") {
      auto j = to_json(r);
      if (entry) {
        j["published_total"] = entry->published_total;
        j["published_order3_count"] = entry->published_order3;
      }
      reports.push_back(std::move(j));
    } else {
      out << (r.name.empty() ? "-" : r.name) << ", " << braid.to_string() << ", " << r.total << ", "
          << r.order3_count << "\n";
    }
  }
  if (o.format == "json") out << (o.table ? reports : reports[0]).dump(2) << "\n";
  return Ok;
}

int cmd_cocycle(const Options& o, std::ostream& out) {
  if (o.modulus < 2) throw MalformedInput("--modulus must be at least 2");
  const auto group = TernaryGroup::verified(load_source(o, true).cube, {10, o.jobs});
  HomologyCalculator h(group, limits_of(o));
  const auto cocycles = cocycle_space(h, o.modulus);
  const auto coboundaries = coboundary_space(h, o.modulus);
  std::optional<BraidWord> braid;
  if (!o.braid.empty()) braid = parse_braid(o.braid, o.strands);

  json report{{"modulus", o.modulus}, {"coboundary_generators", coboundaries.size()}};
  json list = json::array();
  for (std::size_t k = 0; k < cocycles.size(); ++k) {
    json entry{{"order", cocycles.orders[k]}, {"cocycle", to_json(cocycles.generators[k])}};
    if (braid) entry["state_sum"] = to_json(state_sum(group, *braid, cocycles.generators[k], limits_of(o)));
    list.push_back(std::move(entry));
  }
  report["cocycles"] = std::move(list);

  if (o.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << "Z_" << o.modulus << " cocycle generators: " << cocycles.size() << ", coboundary generators: "
        << coboundaries.size() << "\n";
    if (braid)
      for (std::size_t k = 0; k < cocycles.size(); ++k)
        out << "  f" << k << " (order " << cocycles.orders[k]
            << "): " << state_sum(group, *braid, cocycles.generators[k], limits_of(o)).to_string() << "\n";
  }
  return Ok;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  bool all = true;
  auto check = [&](const std::string& what, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << what << "\n";
    all = all && ok;
  };
  const auto limits = limits_of(o);
  const auto group = TernaryGroup::verified(triangle_cube(2, 2, 3, limits.max_cosets));
  check("O(triangle(2,2,3)) has order 6", group.order() == 6);
  check("complex identities through degree 2", verify_complex(group, 2, o.jobs).ok);

  HomologyCalculator h(group, limits);
  const auto h1 = h.homology(1);
  check("H_1 torsion is Z_9", h1.torsion == std::vector<Integer>{9});

  const auto trefoil = parse_braid("[1,1,1]");
  const auto report = invariant_report(h, trefoil);
  check("trefoil: 72 colorings, 36 of order 3", report.total == 72 && report.order3_count == 36);

  const auto cocycles = cocycle_space(h, 9);
  const auto coboundaries = coboundary_space(h, 9);
  std::mt19937_64 rng(o.seed);
  bool invariant = !cocycles.generators.empty();
  for (std::size_t k = 0; k < cocycles.size() && invariant; ++k) {
    auto f = cocycles.generators[k];
    const auto base = state_sum(group, trefoil, f, limits);
    for (const auto& b : coboundaries.generators) f = f + b * static_cast<std::int64_t>(rng() % 9);
    invariant = state_sum(group, trefoil, f, limits) == base;
  }
  check("Z_9 state sums unchanged by random coboundaries (seed " + std::to_string(o.seed) + ")", invariant);
  return all ? Ok : Contract;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Homology of finite ternary groups and knot colorings"};
  app.require_subcommand(1);

  auto* group = app.add_subcommand("group", "Build or verify a cube; report axioms and skew elements");
  add_source(group, o);
  add_common(group, o);
  group->add_option("--out", o.out_file, "Write the cube here (.txt for text, else JSON)");

  auto* homology = app.add_subcommand("homology", "Betti number and torsion of the quotient complex");
  add_source(homology, o);
  add_common(homology, o);
  homology->add_option("--degree", o.degree, "Homology degree (>= -1)");
  homology->add_option("--export-boundary", o.export_boundary, "Write d_{degree+1} as MatrixMarket");

  auto* knot = app.add_subcommand("knot", "Coloring counts and class histograms of braid closures");
  add_source(knot, o);
  add_common(knot, o);
  knot->add_option("--braid", o.braid, "Braid word, e.g. \"[1,-2,1]\"");
  knot->add_option("--strands", o.strands, "Strand count (default: max index + 1)");
  knot->add_option("--name", o.name, "Label for the report");
  knot->add_flag("--table", o.table, "Run the built-in table of 25 knots");

  auto* cocycle = app.add_subcommand("cocycle", "Z_m cocycles and state sums");
  add_source(cocycle, o);
  add_common(cocycle, o);
  cocycle->add_option("--modulus", o.modulus, "Coefficient modulus m >= 2")->required();
  cocycle->add_option("--braid", o.braid, "Evaluate state sums on this braid closure");
  cocycle->add_option("--strands", o.strands, "Strand count (default: max index + 1)");

  auto* selftest = app.add_subcommand("selftest", "Quick end-to-end consistency checks");
  add_common(selftest, o);

  try {
    read_env(o);
    app.parse(argc, argv);
    if (group->parsed()) return cmd_group(o, out, err);
    if (homology->parsed()) return cmd_homology(o, out);
    if (knot->parsed()) return cmd_knot(o, out);
    if (cocycle->parsed()) return cmd_cocycle(o, out);
    return cmd_selftest(o, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return Resource;
  } catch (const NotAGroup& e) {
    err << "not a ternary group: " << e.what() << "\n";
    return Contract;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return Contract;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << "\n";
    return Contract;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
}

}  // namespace ternhom::cli
