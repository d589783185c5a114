#include "grent/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <unordered_set>

#include "grent/combinatorics.hpp"
#include "grent/error.hpp"

namespace grent {

std::string to_string(Family f) {
  switch (f) {
    case Family::Symmetric: return "symmetric";
    case Family::Alternating: return "alternating";
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "symmetric" || lower == "s") return Family::Symmetric;
  if (lower == "alternating" || lower == "a") return Family::Alternating;
  if (lower == "cyclic" || lower == "c") return Family::Cyclic;
  if (lower == "dihedral" || lower == "d") return Family::Dihedral;
  throw Error("unknown group family: " + name);
}

GroupSpec GroupSpec::named(Family family, unsigned n) {
  if (n == 0) throw Error(to_string(family) + " family requires n >= 1");
  if (family == Family::Dihedral && n < 3) {
    throw Error("dihedral(" + std::to_string(n) + ") is degenerate; D_n needs an n-gon with n >= 3 (use symmetric(" +
                std::to_string(n) + ") instead)");
  }
  return GroupSpec(Named{family, n}, n);
}

namespace {

unsigned common_degree(const std::vector<Permutation>& perms, const char* what) {
  if (perms.empty()) throw Error(std::string(what) + " must be nonempty");
  unsigned degree = perms.front().degree();
  for (const auto& p : perms) {
    if (p.degree() != degree) throw Error(std::string(what) + " mixes permutations of different degree");
  }
  return degree;
}

}  // namespace

GroupSpec GroupSpec::explicit_set(std::vector<Permutation> elements) {
  unsigned degree = common_degree(elements, "explicit permutation set");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return GroupSpec(Explicit{std::move(elements)}, degree);
}

GroupSpec GroupSpec::generated(std::vector<Permutation> generators) {
  unsigned degree = common_degree(generators, "generator set");
  return GroupSpec(Generated{std::move(generators)}, degree);
}

std::string GroupSpec::name() const {
  if (auto* n = as_named()) return to_string(n->family) + "(" + std::to_string(n->n) + ")";
  if (auto* e = std::get_if<Explicit>(&variant_)) {
    return "explicit(" + std::to_string(e->elements.size()) + " elements, degree " + std::to_string(degree_) + ")";
  }
  const auto& g = std::get<Generated>(variant_);
  return "generated(" + std::to_string(g.generators.size()) + " generators, degree " + std::to_string(degree_) + ")";
}

namespace {

void check_budget(const Integer& size, const Budget& budget, const std::string& what) {
  if (size > Integer(static_cast<unsigned long>(budget.max_elements))) {
    throw BudgetExceeded(what + " has " + size.get_str() + " elements, above the enumeration budget of " +
                         std::to_string(budget.max_elements));
  }
}

std::vector<Permutation> all_permutations(unsigned n, bool even_only) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> out;
  do {
    Permutation p(images);
    if (!even_only || p.is_even()) out.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation rotation(unsigned n, unsigned k) {
  std::vector<Point> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = (i + k) % n;
  return Permutation(std::move(images));
}

Permutation reflection(unsigned n, unsigned k) {
  std::vector<Point> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = (k + n - i) % n;
  return Permutation(std::move(images));
}

}  // namespace

std::vector<Permutation> materialize(const GroupSpec& spec, const Budget& budget) {
  std::vector<Permutation> out;
  if (const auto* named = spec.as_named()) {
    const unsigned n = named->n;
    switch (named->family) {
      case Family::Symmetric:
        check_budget(factorial(n), budget, spec.name());
        out = all_permutations(n, false);
        break;
      case Family::Alternating:
        check_budget(n >= 2 ? Integer(factorial(n) / 2) : Integer(1), budget, spec.name());
        out = all_permutations(n, true);
        break;
      case Family::Cyclic:
        check_budget(Integer(n), budget, spec.name());
        for (unsigned k = 0; k < n; ++k) out.push_back(rotation(n, k));
        break;
      case Family::Dihedral:
        check_budget(Integer(2ul * n), budget, spec.name());
        for (unsigned k = 0; k < n; ++k) {
          out.push_back(rotation(n, k));
          out.push_back(reflection(n, k));
        }
        break;
    }
  } else if (const auto* e = std::get_if<GroupSpec::Explicit>(&spec.variant())) {
    check_budget(Integer(static_cast<unsigned long>(e->elements.size())), budget, spec.name());
    out = e->elements;
  } else {
    out = close_under_composition(std::get<GroupSpec::Generated>(spec.variant()).generators, budget);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> close_under_composition(const std::vector<Permutation>& generators, const Budget& budget) {
  unsigned degree = common_degree(generators, "generator set");
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> elements;
  auto add = [&](Permutation p) {
    if (seen.insert(p).second) {
      elements.push_back(std::move(p));
      if (elements.size() > budget.max_elements) {
        throw BudgetExceeded("closure exceeds the enumeration budget of " + std::to_string(budget.max_elements) +
                             " elements");
      }
    }
  };
  add(Permutation::identity(degree));
  for (const auto& g : generators) add(g);
  // Multiplying every element by every generator reaches the whole generated
  // group; inverses come for free because each element has finite order.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) add(compose(g, elements[i]));
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

bool is_group(const std::vector<Permutation>& elements) {
  if (elements.empty()) return false;
  unsigned degree = common_degree(elements, "permutation set");
  std::unordered_set<Permutation> members(elements.begin(), elements.end());
  if (!members.count(Permutation::identity(degree))) return false;
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (!members.count(compose(a, b))) return false;
    }
  }
  return true;
}

Integer ClassTable::total() const {
  Integer sum = 0;
  for (const auto& e : entries) sum += e.count;
  return sum;
}

Integer ClassTable::count(const CycleType& type) const {
  for (const auto& e : entries) {
    if (e.type == type) return e.count;
  }
  return 0;
}

IntPolynomial ClassTable::cycle_polynomial() const {
  std::vector<Integer> c(degree + 1, 0);
  for (const auto& e : entries) c[e.type.parts()] += e.count;
  return IntPolynomial(std::move(c));
}

IntPolynomial ClassTable::transposition_polynomial() const {
  std::vector<Integer> c(degree + 1, 0);
  for (const auto& e : entries) c[degree - e.type.parts()] += e.count;
  return IntPolynomial(std::move(c));
}

Integer conjugacy_class_size(const CycleType& type) {
  Integer denom = 1;
  auto mult = type.multiplicities();
  for (std::size_t k = 1; k < mult.size(); ++k) {
    if (mult[k] == 0) continue;
    Integer kpow;
    mpz_ui_pow_ui(kpow.get_mpz_t(), k, mult[k]);
    denom *= kpow * factorial(static_cast<unsigned>(mult[k]));
  }
  return factorial(type.degree()) / denom;
}

namespace {

ClassTable from_map(unsigned degree, std::map<CycleType, Integer, std::greater<>> counts) {
  ClassTable table{degree, {}};
  table.entries.reserve(counts.size());
  for (auto& [type, count] : counts) table.entries.push_back({type, std::move(count)});
  return table;
}

ClassTable partition_table(unsigned n, bool even_only, const Budget& budget) {
  if (n > budget.max_class_degree) {
    throw BudgetExceeded("class table for degree " + std::to_string(n) + " exceeds the partition budget (n <= " +
                         std::to_string(budget.max_class_degree) + ")");
  }
  ClassTable table{n, {}};
  PartitionGenerator gen(n);
  while (gen.next()) {
    CycleType type(gen.current());
    if (even_only && !type.is_even()) continue;
    Integer size = conjugacy_class_size(type);
    table.entries.push_back({std::move(type), std::move(size)});
  }
  return table;
}

std::vector<Point> repeated(Point value, std::size_t times, std::size_t ones = 0) {
  std::vector<Point> v(times, value);
  v.insert(v.end(), ones, 1);
  return v;
}

}  // namespace

ClassTable tally_class_table(const std::vector<Permutation>& elements) {
  unsigned degree = common_degree(elements, "permutation set");
  std::map<CycleType, Integer, std::greater<>> counts;
  for (const auto& p : elements) counts[p.cycle_type()] += 1;
  return from_map(degree, std::move(counts));
}

ClassTable class_table(const GroupSpec& spec, const Budget& budget) {
  const auto* named = spec.as_named();
  if (!named) return tally_class_table(materialize(spec, budget));
  const unsigned n = named->n;
  switch (named->family) {
    case Family::Symmetric:
      return partition_table(n, false, budget);
    case Family::Alternating:
      return partition_table(n, true, budget);
    case Family::Cyclic:
    case Family::Dihedral: {
      std::map<CycleType, Integer, std::greater<>> counts;
      // Rotations of order d split the n-gon into n/d cycles of length d.
      for (std::uint64_t d : divisors(n)) {
        counts[CycleType(repeated(static_cast<Point>(d), n / d))] += static_cast<unsigned long>(totient(d));
      }
      if (named->family == Family::Dihedral) {
        if (n % 2 == 1) {
          counts[CycleType(repeated(2, (n - 1) / 2, 1))] += n;
        } else {
          counts[CycleType(repeated(2, (n - 2) / 2, 2))] += n / 2;
          counts[CycleType(repeated(2, n / 2))] += n / 2;
        }
      }
      return from_map(n, std::move(counts));
    }
  }
  throw Error("unreachable family");
}

}  // namespace grent
