#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "grent/permutation.hpp"
#include "grent/polynomial.hpp"

namespace grent {

/// Enumeration limits shared by every operation that materializes elements.
struct Budget {
  /// Largest permutation set that may be enumerated explicitly (covers S_9).
  std::size_t max_elements = 500'000;
  /// Largest degree for which Symmetric/Alternating class tables are built
  /// from integer partitions.
  unsigned max_class_degree = 60;
};

enum class Family { Symmetric, Alternating, Cyclic, Dihedral };

std::string to_string(Family f);
/// Accepts "symmetric", "S", "alternating", "A", "cyclic", "C", "dihedral", "D" (case-insensitive).
Family parse_family(const std::string& name);

/// Which permutation set an operation acts on: a named family at degree n, an
/// explicit deduplicated set, or the closure of a generator set.
class GroupSpec {
 public:
  struct Named {
    Family family;
    unsigned n;
  };
  struct Explicit {
    std::vector<Permutation> elements;  // sorted, deduplicated
  };
  struct Generated {
    std::vector<Permutation> generators;
  };

  static GroupSpec symmetric(unsigned n) { return named(Family::Symmetric, n); }
  static GroupSpec alternating(unsigned n) { return named(Family::Alternating, n); }
  static GroupSpec cyclic(unsigned n) { return named(Family::Cyclic, n); }
  static GroupSpec dihedral(unsigned n) { return named(Family::Dihedral, n); }
  /// Validates the size (Dihedral needs n >= 3, every family n >= 1).
  static GroupSpec named(Family family, unsigned n);
  /// Deduplicates; throws on an empty set or mixed degrees.
  static GroupSpec explicit_set(std::vector<Permutation> elements);
  /// Throws on an empty generator set or mixed degrees.
  static GroupSpec generated(std::vector<Permutation> generators);

  unsigned degree() const { return degree_; }
  const std::variant<Named, Explicit, Generated>& variant() const { return variant_; }
  const Named* as_named() const { return std::get_if<Named>(&variant_); }
  std::string name() const;

 private:
  GroupSpec(std::variant<Named, Explicit, Generated> v, unsigned degree) : variant_(std::move(v)), degree_(degree) {}
  std::variant<Named, Explicit, Generated> variant_;
  unsigned degree_;
};

/// All elements of the set, sorted lexicographically by images.
/// Throws BudgetExceeded when the set is larger than budget.max_elements.
std::vector<Permutation> materialize(const GroupSpec& spec, const Budget& budget = {});

/// Smallest composition-closed set containing the generators and the identity.
std::vector<Permutation> close_under_composition(const std::vector<Permutation>& generators,
                                                 const Budget& budget = {});

/// True iff the set contains the identity and is closed under composition.
bool is_group(const std::vector<Permutation>& elements);

struct ClassEntry {
  CycleType type;
  Integer count;
};

/// Element counts per cycle type, ordered descending-lexicographically by
/// cycle type: (n), (n-1,1), ..., (1,...,1).
struct ClassTable {
  unsigned degree = 0;
  std::vector<ClassEntry> entries;

  Integer total() const;
  /// Count for a cycle type, zero if absent.
  Integer count(const CycleType& type) const;
  /// Tallies of the cycle-count and transposition-count polynomials.
  IntPolynomial cycle_polynomial() const;
  IntPolynomial transposition_polynomial() const;
};

/// Size of the S_n conjugacy class of a cycle type: n! / prod_k k^{m_k} m_k!.
Integer conjugacy_class_size(const CycleType& type);

/// Class table by closed form for named families (partition formula for
/// Symmetric/Alternating, divisor patterns for Cyclic/Dihedral) and by
/// enumeration otherwise.
ClassTable class_table(const GroupSpec& spec, const Budget& budget = {});
/// Tallies the cycle types of an explicit element list.
ClassTable tally_class_table(const std::vector<Permutation>& elements);

}  // namespace grent
