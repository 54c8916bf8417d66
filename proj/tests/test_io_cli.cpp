#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kchroma/cli.hpp"
#include "kchroma/io.hpp"

using namespace kchroma;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kchroma_test_" + name);
}

}  // namespace

TEST_CASE("bounds match the exact-rational oracle", "[io]") {
  std::ifstream in(std::string(KCHROMA_GOLDEN_DIR) + "/bounds_golden.json");
  REQUIRE(in);
  const auto golden = Json::parse(in);
  REQUIRE(golden.size() == 5);
  for (const auto& entry : golden) {
    const unsigned k = entry["k"];
    const unsigned r = entry["r"];
    CAPTURE(k, r);
    CHECK(to_json(bounds_report(k, r)) == entry);
  }
}

TEST_CASE("rational formatting", "[io]") {
  CHECK(format_rational(Rational(64)) == "64");
  CHECK(format_rational(Rational(45, 2)) == "45/2 (≈ 22.50000)");
  CHECK(format_rational(Rational(-1, 3)) == "-1/3 (≈ -0.33333)");
  CHECK(format_rational(Rational(2, 3)) == "2/3 (≈ 0.66667)");
  CHECK(rational_to_json(Rational(7)) == Json(7));
  CHECK(rational_to_json(Rational(BigInt(1) << 70)).is_string());
}

TEST_CASE("field and ground-set JSON round trip", "[io]") {
  for (const Field& f : {Field::prime(11), Field::binary(4), Field::binary(1)}) {
    CHECK(field_from_json(to_json(f)) == f);
  }
  Json bad = to_json(Field::binary(3));
  bad["modulus"] = 13;
  CHECK_THROWS(field_from_json(bad));

  const auto x = build_ground_set(5, 2, {Construction::field_minus_subfield, 2});
  const auto back = ground_set_from_json(to_json(x));
  CHECK(back.field == x.field);
  CHECK(back.elements == x.elements);
  CHECK(back.construction == x.construction);
  CHECK(back.t_prime == x.t_prime);
}

TEST_CASE("coloring export and re-import", "[io]") {
  const auto x = build_ground_set(3, 2, {Construction::full_field, 0});
  const auto table = color_all(x, 3, 2);

  const auto csv = coloring_to_csv(table);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "vertex_index,mask,color_index");
  int rows = 0;
  while (std::getline(lines, line)) rows += !line.empty();
  CHECK(rows == 56);

  std::istringstream csv_in(csv);
  const auto from_csv = read_coloring_csv(csv_in);
  CHECK(from_csv.masks == table.masks);
  CHECK(from_csv.colors == table.colors);

  const auto j = coloring_to_json(table);
  CHECK(j["rows"].size() == 56);
  const auto from_json = read_coloring_json(j);
  CHECK(from_json.colors == table.colors);
  REQUIRE(from_json.ground);
  CHECK(from_json.ground->elements == x.elements);
  CHECK(from_json.k == 3);
  CHECK(from_json.r == 2);

  std::istringstream garbage("vertex_index,mask,color_index\n0,7,oops\n");
  CHECK_THROWS(read_coloring_csv(garbage));
  CHECK_THROWS(read_coloring_file(temp_path("does_not_exist.csv").string()));
}

TEST_CASE("report JSON is stable", "[io]") {
  const auto x = build_ground_set(3, 2, {Construction::full_field, 0});
  const auto rep = verify_coloring(GraphSpec::kneser_square(8, 3), x, 2, Property::square_proper);
  const auto j = to_json(rep);
  CHECK(j["passed"] == true);
  CHECK(j["violation"].is_null());
  CHECK(j["pairs_checked"] == 1540);
  CHECK_FALSE(j.contains("elapsed_seconds"));
  CHECK(to_json(rep, true).contains("elapsed_seconds"));
}

TEST_CASE("cli exit codes", "[cli]") {
  CHECK(run_cli({"verify", "--k", "3", "--r", "2", "--construction", "full_field"}).code == cli::kPass);
  CHECK(run_cli({"verify", "--k", "6", "--r", "1", "--construction", "field-minus-subfield-plus-zero",
             "--t-prime", "2"})
            .code == cli::kViolation);
  CHECK(run_cli({"verify", "--k", "4", "--r", "2", "--construction", "full_field"}).code == cli::kUsage);
  CHECK(run_cli({"nonsense"}).code == cli::kUsage);
  CHECK(run_cli({"bounds", "--k", "3"}).code == cli::kUsage);
  CHECK(run_cli({"prime", "--n", "100", "--mode", "ln2"}).code == cli::kUsage);
  CHECK(run_cli({}).code == cli::kUsage);
}

TEST_CASE("cli subcommands", "[cli]") {
  const auto bounds = run_cli({"bounds", "--k", "3", "--r", "2"});
  REQUIRE(bounds.code == 0);
  const auto bj = Json::parse(bounds.out);
  CHECK(bj["thm2a_upper"] == 64);
  CHECK(bj["clique_lower"] == 21);
  CHECK(bj["best_upper"] == 64);

  const auto prime = run_cli({"prime", "--n", "10"});
  CHECK(prime.code == 0);
  CHECK(prime.out == "11\n");

  const auto exact = run_cli({"exact", "--n", "5", "--k", "2", "--variant", "square"});
  REQUIRE(exact.code == 0);
  CHECK(Json::parse(exact.out)["chromatic_number"] == 10);

  const auto clique = run_cli({"clique", "--k", "3", "--r", "2"});
  REQUIRE(clique.code == 0);
  CHECK(Json::parse(clique.out)["size"] == 21);

  const auto report = run_cli({"report", "--all-desk-instances", "--format", "json"});
  CHECK(report.code == cli::kViolation);  // the truncated r = 1 instance at k = 6 fails
  CHECK(Json::parse(report.out).is_array());
}

TEST_CASE("cli output does not depend on workers", "[cli]") {
  const std::vector<std::string> base{"verify", "--k", "5", "--r", "2", "--construction", "field_minus_subfield"};
  auto with = [&](const std::string& w) {
    auto args = base;
    args.insert(args.end(), {"--workers", w});
    return run_cli(args);
  };
  const auto one = with("1");
  REQUIRE(one.code == 0);
  CHECK(with("3").out == one.out);
  CHECK(with("7").out == one.out);
}

TEST_CASE("cli verify from an exported file", "[cli]") {
  for (const std::string ext : {"csv", "json"}) {
    const auto path = temp_path("coloring." + ext).string();
    REQUIRE(run_cli({"color", "--k", "3", "--r", "2", "--construction", "full_field", "--format", ext, "-o", path})
                .code == 0);
    const auto v = run_cli({"verify", "--k", "3", "--r", "2", "--construction", "full_field", "--input", path});
    CHECK(v.code == cli::kPass);
    CHECK(Json::parse(v.out)["passed"] == true);

    // Corrupt one color so two adjacent vertices collide.
    auto imported = read_coloring_file(path);
    imported.colors[1] = imported.colors[0];
    std::ostringstream csv;
    csv << "vertex_index,mask,color_index\n";
    for (std::size_t i = 0; i < imported.masks.size(); ++i) {
      csv << i << ',' << imported.masks[i] << ',' << imported.colors[i] << '\n';
    }
    const auto bad_path = temp_path("tampered.csv").string();
    write_output(bad_path, csv.str());
    const auto t = run_cli({"verify", "--k", "3", "--r", "2", "--construction", "full_field", "--input", bad_path});
    CHECK(t.code == cli::kViolation);
    std::filesystem::remove(path);
    std::filesystem::remove(bad_path);
  }
}
