#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "kchroma/coloring.hpp"
#include "kchroma/verifier.hpp"

namespace kchroma {

using Json = nlohmann::ordered_json;

// Field: {"kind":"prime","p":11} or {"kind":"binary","t":3,"modulus":11}
Json to_json(const Field& field);
Field field_from_json(const Json& j);

Json to_json(const GroundSet& x);
GroundSet ground_set_from_json(const Json& j);

/// Integer-valued rationals become JSON integers (strings past 64 bits);
/// others become "p/q (≈ d.ddddd)".
Json rational_to_json(const Rational& q);
/// "p/q (≈ d.ddddd)", or just the integer when q is whole. Locale-free.
std::string format_rational(const Rational& q);

Json to_json(const BoundsReport& b);
/// Elapsed time is left out unless include_timing is set, so reports from
/// repeated runs compare byte-for-byte.
Json to_json(const VerificationReport& report, bool include_timing = false);

/// CSV header `vertex_index,mask,color_index`, one row per vertex.
std::string coloring_to_csv(const ColoringTable& table);
/// {"groundset": ..., "k", "r", "distinct_colors", "rows": [...]}.
Json coloring_to_json(const ColoringTable& table);

struct ImportedColoring {
  std::vector<std::uint64_t> masks;
  std::vector<std::uint64_t> colors;
  std::optional<GroundSet> ground;  // JSON imports only
  unsigned k = 0;
  unsigned r = 0;  // 0 when the file does not record it
};

/// Parses either export format. Rows must be in vertex order starting at 0.
ImportedColoring read_coloring_csv(std::istream& in);
ImportedColoring read_coloring_json(const Json& j);
/// Dispatches on extension (.json, otherwise CSV). Throws std::runtime_error
/// naming the path on IO failure.
ImportedColoring read_coloring_file(const std::string& path);

/// Writes `content` to `path`, or to stdout when path is empty.
void write_output(const std::string& path, const std::string& content);

}  // namespace kchroma
