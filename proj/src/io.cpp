#include "kchroma/io.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>
#include <string_view>

#include "kchroma/error.hpp"

namespace kchroma {

namespace {

std::uint64_t parse_u64(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::invalid_argument,
                "line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(v.str());
}

unsigned popcount_k(const std::vector<std::uint64_t>& masks) {
  if (masks.empty()) return 0;
  const auto k = static_cast<unsigned>(std::popcount(masks.front()));
  for (auto m : masks) {
    if (static_cast<unsigned>(std::popcount(m)) != k) {
      throw Error(Errc::invalid_argument, "rows mix subsets of different sizes");
    }
  }
  return k;
}

}  // namespace

Json to_json(const Field& field) {
  Json j;
  if (field.kind() == FieldKind::prime) {
    j["kind"] = "prime";
    j["p"] = field.order();
  } else {
    j["kind"] = "binary";
    j["t"] = field.degree();
    j["modulus"] = field.modulus();
  }
  return j;
}

Field field_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "prime") return Field::prime(j.at("p").get<std::uint64_t>());
  if (kind == "binary") {
    Field f = Field::binary(j.at("t").get<unsigned>());
    if (j.contains("modulus") && j.at("modulus").get<std::uint32_t>() != f.modulus()) {
      throw Error(Errc::invalid_argument, "binary field modulus differs from the canonical modulus");
    }
    return f;
  }
  throw Error(Errc::invalid_argument, "unknown field kind '" + kind + "'");
}

Json to_json(const GroundSet& x) {
  Json j;
  j["field"] = to_json(x.field);
  j["construction"] = std::string(to_string(x.construction));
  if (x.t_prime) j["t_prime"] = x.t_prime;
  j["size"] = x.size();
  j["elements"] = x.elements;
  return j;
}

GroundSet ground_set_from_json(const Json& j) {
  const Field f = field_from_json(j.at("field"));
  GroundSet x = make_explicit_ground_set(f, j.at("elements").get<std::vector<Element>>());
  x.construction = construction_from_string(j.value("construction", std::string("explicit")));
  x.t_prime = j.value("t_prime", 0u);
  return x;
}

std::string format_rational(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  // Round half away from zero to 5 decimal places.
  const BigInt mag = num < 0 ? BigInt(-num) : num;
  const BigInt scaled = (mag * 200000 + den) / (2 * den);
  const BigInt whole = scaled / 100000;
  std::string frac = BigInt(scaled % 100000).str();
  frac.insert(0, 5 - frac.size(), '0');
  return num.str() + "/" + den.str() + " (≈ " + (num < 0 ? "-" : "") + whole.str() + "." + frac + ")";
}

Json rational_to_json(const Rational& q) {
  if (denominator(q) == 1) return bigint_to_json(numerator(q));
  return Json(format_rational(q));
}

Json to_json(const BoundsReport& b) {
  Json j;
  j["k"] = b.k;
  j["r"] = b.r;
  j["n"] = 2 * b.k + b.r;
  j["clique_lower"] = rational_to_json(b.clique_lower);
  j["trivial_upper"] = rational_to_json(b.trivial_upper);
  j["thm1_upper"] = rational_to_json(b.thm1_upper);
  j["thm1_upper_floor"] = bigint_to_json(numerator(b.thm1_upper) / denominator(b.thm1_upper));
  j["thm1_applicable"] = b.thm1_applicable;
  j["injective_upper"] = rational_to_json(b.injective_upper);
  j["injective_upper_floor"] =
      bigint_to_json(numerator(b.injective_upper) / denominator(b.injective_upper));
  j["thm2a_upper"] = b.thm2a_upper ? rational_to_json(*b.thm2a_upper) : Json(nullptr);
  j["thm2b_upper"] = b.thm2b_upper ? rational_to_json(*b.thm2b_upper) : Json(nullptr);
  Json cor3 = Json::array();
  for (const auto& c : b.cor3_uppers) {
    cor3.push_back(Json{{"variant", c.plus_zero ? "ii" : "i"},
                        {"t", c.t},
                        {"t_prime", c.t_prime},
                        {"upper", rational_to_json(c.upper)}});
  }
  j["cor3_uppers"] = std::move(cor3);
  if (b.r == 1) {
    Json r1 = Json::array();
    for (const auto& nb : b.r1_bounds) {
      r1.push_back(Json{{"formula", nb.formula},
                        {"applicable", nb.applicable},
                        {"upper", rational_to_json(nb.upper)}});
    }
    for (const auto& f : b.r1_family) {
      r1.push_back(Json{{"formula", "2^(n+1)k/(2^n-1) + 2^n(2^(n+1)-3)/(2^n-1)"},
                        {"n", f.n},
                        {"applicable", true},
                        {"upper", rational_to_json(f.upper)}});
    }
    j["r1_bounds"] = std::move(r1);
  } else {
    j["r1_bounds"] = nullptr;
  }
  j["best_upper"] = bigint_to_json(b.best_upper);
  j["best_source"] = b.best_source;
  return j;
}

Json to_json(const VerificationReport& report, bool include_timing) {
  Json j;
  Json spec;
  spec["n"] = report.spec.n;
  spec["k"] = report.spec.k;
  switch (report.spec.variant) {
    case GraphVariant::kneser: spec["variant"] = "kneser"; break;
    case GraphVariant::kneser_square: spec["variant"] = "kneser_square"; break;
    case GraphVariant::johnson_power:
      spec["variant"] = "johnson_power";
      spec["m"] = report.spec.m;
      break;
  }
  j["spec"] = std::move(spec);
  j["ground"] = to_json(report.ground);
  j["property"] = std::string(to_string(report.property));
  j["color_entries"] = report.color_entries;
  j["passed"] = report.passed;
  if (report.violation) {
    const auto& v = *report.violation;
    j["violation"] = Json{{"first", v.first},
                          {"second", v.second},
                          {"first_mask", v.first_mask},
                          {"second_mask", v.second_mask},
                          {"first_color", v.first_color},
                          {"second_color", v.second_color},
                          {"intersection", v.intersection}};
  } else {
    j["violation"] = nullptr;
  }
  j["violating_pairs"] = report.violating_pairs;
  j["distinct_colors"] = report.distinct_colors;
  j["pairs_checked"] = report.pairs_checked;
  j["related_pairs"] = report.related_pairs;
  if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

std::string coloring_to_csv(const ColoringTable& table) {
  std::string out = "vertex_index,mask,color_index\n";
  out.reserve(out.size() + table.masks.size() * 24);
  for (std::size_t i = 0; i < table.masks.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(table.masks[i]);
    out += ',';
    out += std::to_string(table.colors[i]);
    out += '\n';
  }
  return out;
}

Json coloring_to_json(const ColoringTable& table) {
  Json j;
  j["groundset"] = to_json(table.ground);
  j["k"] = table.k;
  j["r"] = table.r;
  j["distinct_colors"] = table.distinct_colors;
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.masks.size(); ++i) {
    rows.push_back(Json{{"vertex_index", i}, {"mask", table.masks[i]}, {"color_index", table.colors[i]}});
  }
  j["rows"] = std::move(rows);
  return j;
}

ImportedColoring read_coloring_csv(std::istream& in) {
  ImportedColoring out;
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line) || line != "vertex_index,mask,color_index") {
    throw Error(Errc::invalid_argument, "missing CSV header vertex_index,mask,color_index");
  }
  ++lineno;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw Error(Errc::invalid_argument, "line " + std::to_string(lineno) + ": expected 3 fields");
    }
    const std::string_view view(line);
    const auto index = parse_u64(view.substr(0, c1), lineno);
    if (index != out.masks.size()) {
      throw Error(Errc::invalid_argument, "line " + std::to_string(lineno) + ": rows out of order");
    }
    out.masks.push_back(parse_u64(view.substr(c1 + 1, c2 - c1 - 1), lineno));
    out.colors.push_back(parse_u64(view.substr(c2 + 1), lineno));
  }
  out.k = popcount_k(out.masks);
  return out;
}

ImportedColoring read_coloring_json(const Json& j) {
  ImportedColoring out;
  out.ground = ground_set_from_json(j.at("groundset"));
  out.r = j.value("r", 0u);
  for (const auto& row : j.at("rows")) {
    if (row.at("vertex_index").get<std::uint64_t>() != out.masks.size()) {
      throw Error(Errc::invalid_argument, "rows out of order");
    }
    out.masks.push_back(row.at("mask").get<std::uint64_t>());
    out.colors.push_back(row.at("color_index").get<std::uint64_t>());
  }
  out.k = popcount_k(out.masks);
  return out;
}

ImportedColoring read_coloring_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (is_json) {
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("'" + path + "': " + e.what());
    }
    return read_coloring_json(j);
  }
  return read_coloring_csv(in);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace kchroma
