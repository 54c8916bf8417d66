#include "kchroma/desk.hpp"

namespace kchroma {

std::vector<DeskInstance> desk_instances() {
  using C = Construction;
  return {
      {"GF(8), K^2(8,3)", 3, 2, {C::full_field, 0}, Property::square_proper, 0, 0, true},
      {"GF(16), K^2(16,7)", 7, 2, {C::full_field, 0}, Property::square_proper, 0, 0, true},
      {"GF(8)\\{0}, K^2(7,3)", 3, 1, {C::field_minus_zero, 0}, Property::square_proper, 0, 0, true},
      {"GF(16)\\{0}, K^2(15,6)", 6, 3, {C::field_minus_zero, 0}, Property::square_proper, 0, 0, true},
      {"GF(16)\\GF(4), K^2(12,5)", 5, 2, {C::field_minus_subfield, 2}, Property::square_proper, 0, 0, true},
      {"(GF(16)\\GF(4))u{0}, K^2(13,6)", 6, 1, {C::field_minus_subfield_plus_zero, 2},
       Property::square_proper, 0, 0, true},
      {"Z_11 prefix, K(10,4) injective", 4, 2, {C::prime_prefix, 0}, Property::injective, 0, 0, true},
      {"Z_11 prefix, J^2(10,4)", 4, 2, {C::prime_prefix, 0}, Property::johnson_m_proper, 2, 0, true},
      {"GF(8), K^2(8,3), f truncated to 1 entry", 3, 2, {C::full_field, 0}, Property::square_proper,
       0, 1, false},
  };
}

DeskResult run_desk_instance(const DeskInstance& inst, unsigned workers) {
  DeskResult out;
  out.instance = inst;
  const GroundSet x = build_ground_set(inst.k, inst.r, inst.ground);
  const unsigned n = static_cast<unsigned>(x.size());
  const GraphSpec spec = graph_for_property(n, inst.k, inst.property, inst.m);
  const unsigned entries = inst.color_entries ? inst.color_entries : inst.r;
  out.report = verify_coloring(spec, x, entries, inst.property, workers);
  out.ground_check = check_ground_set(x, inst.r);
  out.color_space = color_space_size(x.field, out.report.color_entries);
  out.as_expected = out.report.passed == inst.expect_pass &&
                    (out.report.passed || recheck_violation(out.report));
  return out;
}

}  // namespace kchroma
