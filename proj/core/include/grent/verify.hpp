#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grent/group.hpp"
#include "grent/roots.hpp"

namespace grent {

enum class VerifySuite { Bounds, RootSums, Reciprocity, ClosedForms, Discrepancies, All };

VerifySuite parse_verify_suite(const std::string& name);
std::string to_string(VerifySuite suite);

struct VerifyCheck {
  std::string suite;
  std::string subject;
  std::string name;
  bool passed = true;
  double residual = 0.0;
  std::string detail;
};

/// A value printed in the literature that the computation does not reproduce.
/// Reported, never treated as a failure.
struct Discrepancy {
  std::string subject;
  std::string computed;
  std::string printed;
  std::string note;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  std::vector<Discrepancy> discrepancies;
  bool passed() const;
  std::size_t failures() const;
  double max_residual(const std::string& check_name) const;
  std::string to_json() const;
  /// One line per check.
  std::string to_table() const;
};

struct VerifyOptions {
  unsigned n_max = 8;
  /// Random generated subgroups of S_6 added to the root and bound batteries.
  unsigned random_subgroups = 20;
  std::uint64_t seed = 20240601;
  RootOptions roots;
  Budget budget;
};

/// Named families up to n_max (Dihedral from 3) in a fixed order.
std::vector<GroupSpec> family_specs(unsigned n_max);
/// `count` subgroups of S_degree generated by one or two seeded random permutations.
std::vector<GroupSpec> random_generated_specs(unsigned degree, unsigned count, std::uint64_t seed);

VerifyResult run_verify(VerifySuite suite, const VerifyOptions& options = {});

}  // namespace grent
