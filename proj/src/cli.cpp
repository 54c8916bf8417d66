#include "kchroma/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kchroma/coloring.hpp"
#include "kchroma/desk.hpp"
#include "kchroma/error.hpp"
#include "kchroma/io.hpp"
#include "kchroma/verifier.hpp"

namespace kchroma::cli {

namespace {

unsigned default_workers() {
  if (const char* env = std::getenv("KNESER_CHROMA_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

struct Options {
  unsigned k = 0;
  unsigned r = 0;
  unsigned n = 0;
  unsigned m = 0;
  unsigned t_prime = 0;
  std::string construction = "full-field";
  std::string property = "square";
  std::string variant = "square";
  std::string mode = "bertrand98";
  std::string output;
  std::string input;
  std::string format = "json";
  unsigned workers = 1;
  bool timing = false;
  bool all_desk = false;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void warn_range(unsigned k, unsigned r, std::ostream& err) {
  if (auto w = parameter_range_warning(k, r)) err << "warning: " << *w << "\n";
}

int cmd_color(const Options& o, std::ostream& out, std::ostream& err) {
  warn_range(o.k, o.r, err);
  const GroundSet x = build_ground_set(o.k, o.r, {construction_from_string(o.construction), o.t_prime});
  const ColoringTable table = color_all(x, o.k, o.r, o.workers);
  const std::string body = o.format == "csv" ? coloring_to_csv(table) : dump(coloring_to_json(table));
  if (o.output.empty()) {
    out << body;
  } else {
    write_output(o.output, body);
  }
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Property property = property_from_string(o.property);
  VerificationReport report;
  std::vector<std::uint64_t> imported_colors;
  if (!o.input.empty()) {
    ImportedColoring imported = read_coloring_file(o.input);
    GroundSet x = imported.ground ? *imported.ground
                                  : build_ground_set(o.k, o.r, {construction_from_string(o.construction), o.t_prime});
    if (o.k && imported.k != o.k) {
      throw Error(Errc::invalid_argument, "file holds " + std::to_string(imported.k) + "-subsets, --k is " +
                                              std::to_string(o.k));
    }
    const unsigned entries = imported.r ? imported.r : o.r;
    const GraphSpec spec = graph_for_property(static_cast<unsigned>(x.size()), imported.k, property, o.m);
    if (imported.masks != enumerate_masks(spec.n, spec.k)) {
      throw Error(Errc::invalid_argument, "file rows are not the vertex set of K(" + std::to_string(spec.n) +
                                              "," + std::to_string(spec.k) + ") in ascending order");
    }
    report = verify_table(spec, x, entries, property, imported.masks, imported.colors, o.workers);
    imported_colors = std::move(imported.colors);
  } else {
    warn_range(o.k, o.r, err);
    const GroundSet x = build_ground_set(o.k, o.r, {construction_from_string(o.construction), o.t_prime});
    const GraphSpec spec = graph_for_property(static_cast<unsigned>(x.size()), o.k, property, o.m);
    report = verify_coloring(spec, x, o.r, property, o.workers);
  }
  const std::string body = dump(to_json(report, o.timing));
  if (o.output.empty()) {
    out << body;
  } else {
    write_output(o.output, body);
  }
  if (report.passed) return kPass;
  if (recheck_violation(report, imported_colors)) return kViolation;
  err << "error: recorded violation did not survive an independent recheck\n";
  return kUsage;
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream& err) {
  warn_range(o.k, o.r, err);
  out << dump(to_json(bounds_report(o.k, o.r)));
  return kPass;
}

int cmd_exact(const Options& o, std::ostream& out, std::ostream&) {
  GraphSpec spec;
  if (o.variant == "kneser") {
    spec = GraphSpec::kneser(o.n, o.k);
  } else if (o.variant == "square") {
    spec = GraphSpec::kneser_square(o.n, o.k);
  } else if (o.variant == "johnson") {
    spec = GraphSpec::johnson_power(o.n, o.k, o.m);
  } else {
    throw Error(Errc::invalid_argument, "unknown variant '" + o.variant + "'");
  }
  Json j;
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["variant"] = o.variant;
  if (spec.variant == GraphVariant::johnson_power) j["m"] = spec.m;
  j["vertices"] = binomial(spec.n, spec.k);
  j["chromatic_number"] = exact_chromatic(spec);
  j["greedy_colors"] = greedy_chromatic(spec);
  out << dump(j);
  return kPass;
}

int cmd_prime(const Options& o, std::ostream& out, std::ostream&) {
  const PrimeMode mode = o.mode == "ln2" ? PrimeMode::ln2 : PrimeMode::bertrand98;
  if (o.mode != "ln2" && o.mode != "bertrand98") {
    throw Error(Errc::invalid_argument, "unknown mode '" + o.mode + "'");
  }
  out << find_prime_in_interval(o.n, mode) << "\n";
  return kPass;
}

int cmd_clique(const Options& o, std::ostream& out, std::ostream&) {
  const auto witness = clique_witness(o.k, o.r);
  Json j;
  j["k"] = o.k;
  j["r"] = o.r;
  j["n"] = 2 * o.k + o.r;
  j["size"] = witness.size();
  Json members = Json::array();
  for (const auto& v : witness) members.push_back(v.mask);
  j["members"] = std::move(members);
  out << dump(j);
  return kPass;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.all_desk) {
    err << "report: pass --all-desk-instances\n";
    return kUsage;
  }
  bool all_ok = true;
  Json rows = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(44) << "instance" << std::setw(18) << "property" << std::setw(8)
        << "verdict" << std::setw(10) << "expected" << std::setw(10) << "colors" << "space\n";
  for (const auto& inst : desk_instances()) {
    const DeskResult res = run_desk_instance(inst, o.workers);
    all_ok = all_ok && res.as_expected;
    table << std::left << std::setw(44) << inst.name << std::setw(18) << to_string(inst.property)
          << std::setw(8) << (res.report.passed ? "pass" : "FAIL") << std::setw(10)
          << (inst.expect_pass ? "pass" : "FAIL") << std::setw(10) << res.report.distinct_colors
          << res.color_space << (res.as_expected ? "" : "   <-- unexpected") << "\n";
    Json row;
    row["instance"] = inst.name;
    row["expected_pass"] = inst.expect_pass;
    row["as_expected"] = res.as_expected;
    row["ground_check"] = res.ground_check;
    row["color_space"] = res.color_space;
    row["report"] = to_json(res.report, o.timing);
    rows.push_back(std::move(row));
  }
  out << (o.format == "json" ? dump(rows) : table.str());
  return all_ok ? kPass : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic colorings of Kneser graph squares over finite fields"};
  app.require_subcommand(1);
  Options o;
  o.workers = default_workers();

  const std::vector<std::string> constructions{"full-field", "field-minus-zero", "field-minus-subfield",
                                               "field-minus-subfield-plus-zero", "prime-prefix"};
  auto add_kr = [&](CLI::App* sub, bool required = true) {
    auto* k = sub->add_option("--k", o.k, "subset size k")->check(CLI::Range(2u, 31u));
    auto* r = sub->add_option("--r", o.r, "r = n - 2k")->check(CLI::Range(1u, 30u));
    if (required) {
      k->required();
      r->required();
    }
  };
  auto add_ground = [&](CLI::App* sub) {
    sub->add_option("--construction", o.construction, "ground-set construction")
        ->transform([](std::string v) {
          std::replace(v.begin(), v.end(), '_', '-');
          return v;
        })
        ->check(CLI::IsMember(constructions));
    sub->add_option("--t-prime", o.t_prime, "subfield degree for the subfield constructions");
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "worker threads (default $KNESER_CHROMA_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
  };

  auto* color = app.add_subcommand("color", "color every vertex and export the table");
  add_kr(color);
  add_ground(color);
  add_workers(color);
  color->add_option("--output,-o", o.output, "output path (stdout when omitted)");
  color->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "exhaustively verify a coloring");
  add_kr(verify, false);
  add_ground(verify);
  add_workers(verify);
  verify->add_option("--property", o.property, "square, injective or johnson")
      ->check(CLI::IsMember({"square", "injective", "johnson"}));
  verify->add_option("--m", o.m, "Johnson power m");
  verify->add_option("--input", o.input, "verify an exported coloring file instead of recoloring");
  verify->add_option("--output,-o", o.output, "report path (stdout when omitted)");
  verify->add_flag("--timing", o.timing, "include elapsed time in the report");

  auto* bounds = app.add_subcommand("bounds", "evaluate every bound formula for (k, r)");
  add_kr(bounds);

  auto* exact = app.add_subcommand("exact", "exact chromatic number of a tiny instance");
  exact->add_option("--n", o.n, "ground size")->required();
  exact->add_option("--k", o.k, "subset size")->required();
  exact->add_option("--variant", o.variant, "kneser, square or johnson")
      ->check(CLI::IsMember({"kneser", "square", "johnson"}));
  exact->add_option("--m", o.m, "Johnson power m");

  auto* prime = app.add_subcommand("prime", "smallest prime in the interval starting at n");
  prime->add_option("--n", o.n, "interval start")->required();
  prime->add_option("--mode", o.mode, "bertrand98 or ln2")->check(CLI::IsMember({"bertrand98", "ln2"}));

  auto* clique = app.add_subcommand("clique", "clique witness in K^2(2k+r, k)");
  add_kr(clique);

  auto* report = app.add_subcommand("report", "run the desk-scale instance matrix");
  report->add_flag("--all-desk-instances", o.all_desk, "run every desk instance");
  report->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  add_workers(report);
  report->add_flag("--timing", o.timing, "include elapsed time in JSON rows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (report->parsed() && report->count("--format") == 0) o.format = "text";

  try {
    if (color->parsed()) return cmd_color(o, out, err);
    if (verify->parsed()) {
      if (o.input.empty() && (o.k == 0 || o.r == 0)) {
        err << "error: verify needs --k and --r (or --input)\n";
        return kUsage;
      }
      if (o.property == "johnson" && o.m == 0) {
        err << "error: --property johnson needs --m\n";
        return kUsage;
      }
      return cmd_verify(o, out, err);
    }
    if (bounds->parsed()) return cmd_bounds(o, out, err);
    if (exact->parsed()) return cmd_exact(o, out, err);
    if (prime->parsed()) return cmd_prime(o, out, err);
    if (clique->parsed()) return cmd_clique(o, out, err);
    if (report->parsed()) return cmd_report(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::no_prime_in_interval ? kTheoremFalsified : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace kchroma::cli
