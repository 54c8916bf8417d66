#pragma once

#include <string>
#include <vector>

#include "kchroma/coloring.hpp"
#include "kchroma/verifier.hpp"

namespace kchroma {

/// One verification instance of the desk-scale matrix.
struct DeskInstance {
  std::string name;
  unsigned k = 0;
  unsigned r = 0;
  GroundSetRequest ground;
  Property property = Property::square_proper;
  unsigned m = 0;               // johnson_m_proper only
  unsigned color_entries = 0;   // 0: use r (or m)
  bool expect_pass = true;
};

struct DeskResult {
  DeskInstance instance;
  VerificationReport report;
  bool ground_check = false;          // e_odd(X) vanishing up to r
  std::uint64_t color_space = 0;      // |F|^entries
  bool as_expected = false;           // passed == expect_pass, violations recheck
};

/// Every colored instance the repository certifies, plus the truncated
/// negative control.
std::vector<DeskInstance> desk_instances();

DeskResult run_desk_instance(const DeskInstance& inst, unsigned workers = 1);

}  // namespace kchroma
