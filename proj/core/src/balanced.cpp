#include "grent/balanced.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "grent/combinatorics.hpp"
#include "grent/cycle_poly.hpp"
#include "grent/error.hpp"

namespace grent {

BalanceReport balance_report(const std::vector<Permutation>& elements, const RootOptions& options) {
  if (elements.empty()) throw Error("balance_report needs a nonempty set");
  BalanceReport r;
  r.degree = elements.front().degree();
  r.size = elements.size();
  IntPolynomial p = cycle_polynomial_of(elements);
  IntPolynomial q = transposition_polynomial_of(elements);
  r.expected_cycles = log_derivative_at_one(p);
  r.expected_transpositions = log_derivative_at_one(q);
  Rational half(r.degree, 2);
  half.canonicalize();
  r.is_balanced = r.expected_cycles == half && r.expected_transpositions == half;
  r.is_group = is_group(elements);
  auto roots = find_roots(p, options);
  double dc = std::fabs(root_sum_cycles(roots).value - to_double(r.expected_cycles));
  double dt = std::fabs(root_sum_transpositions(roots).value - to_double(r.expected_transpositions));
  r.root_identity_residual = std::max(dc, dt);
  return r;
}

std::string BalanceReport::to_json() const {
  nlohmann::json j = {{"degree", degree},
                      {"size", size},
                      {"expected_cycles", expected_cycles.get_str()},
                      {"expected_transpositions", expected_transpositions.get_str()},
                      {"is_balanced", is_balanced},
                      {"is_group", is_group},
                      {"root_identity_residual", root_identity_residual}};
  return j.dump(2);
}

std::string BalancedSearchResult::to_json() const {
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& s : solutions) {
    nlohmann::json deleted = nlohmann::json::array();
    for (const auto& d : s.deleted) deleted.push_back(d.to_cycle_string());
    sols.push_back({{"deleted", deleted},
                    {"cycle_polynomial", s.cycle_poly.to_string()},
                    {"transposition_polynomial", s.transposition_poly.to_string()},
                    {"report", nlohmann::json::parse(s.report.to_json())}});
  }
  nlohmann::json j = {{"n", n},
                      {"scope", scope == DeletionScope::Transpositions ? "transpositions" : "any-class"},
                      {"minimal_deletions", minimal_deletions ? nlohmann::json(*minimal_deletions) : nlohmann::json()},
                      {"solution_count", solution_count.get_str()},
                      {"solutions_emitted", solutions.size()},
                      {"solutions", sols},
                      {"diagnostics", diagnostics}};
  return j.dump(2);
}

namespace {

BalancedSolution build_solution(const std::vector<Permutation>& all, std::vector<Permutation> deleted,
                                const RootOptions& options) {
  BalancedSolution s;
  std::sort(deleted.begin(), deleted.end());
  std::set_difference(all.begin(), all.end(), deleted.begin(), deleted.end(), std::back_inserter(s.elements));
  s.deleted = std::move(deleted);
  s.cycle_poly = cycle_polynomial_of(s.elements);
  s.transposition_poly = transposition_polynomial_of(s.elements);
  s.report = balance_report(s.elements, options);
  return s;
}

// Minimal number of deletions with per-cycle-count caps whose weights
// (2c - n) sum to `target`. Returns per-cycle-count deletion counts.
std::optional<std::vector<std::size_t>> min_deletions(unsigned n, const std::vector<std::size_t>& available,
                                                      long long target) {
  long long lo = 0, hi = 0;
  for (unsigned c = 1; c <= n; ++c) {
    long long w = 2ll * c - n;
    long long total = w * static_cast<long long>(available[c]);
    (total < 0 ? lo : hi) += total;
  }
  if (target < lo || target > hi) return std::nullopt;
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  // Bounded knapsack via binary splitting of each cap.
  struct Item {
    unsigned c;
    std::size_t copies;
  };
  std::vector<Item> items;
  for (unsigned c = 1; c <= n; ++c) {
    std::size_t left = available[c];
    for (std::size_t chunk = 1; left > 0; chunk *= 2) {
      std::size_t take = std::min(chunk, left);
      items.push_back({c, take});
      left -= take;
    }
  }
  std::vector<std::size_t> best(width, inf);
  std::vector<std::vector<bool>> used(items.size(), std::vector<bool>(width, false));
  best[static_cast<std::size_t>(-lo)] = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    long long shift = (2ll * items[i].c - n) * static_cast<long long>(items[i].copies);
    std::vector<std::size_t> next = best;
    for (std::size_t s = 0; s < width; ++s) {
      if (best[s] == inf) continue;
      long long t = static_cast<long long>(s) + shift;
      if (t < 0 || t >= static_cast<long long>(width)) continue;
      std::size_t cand = best[s] + items[i].copies;
      if (cand < next[static_cast<std::size_t>(t)]) {
        next[static_cast<std::size_t>(t)] = cand;
        used[i][static_cast<std::size_t>(t)] = true;
      }
    }
    best = std::move(next);
  }
  std::size_t pos = static_cast<std::size_t>(target - lo);
  if (best[pos] == inf) return std::nullopt;
  std::vector<std::size_t> counts(n + 1, 0);
  for (std::size_t i = items.size(); i-- > 0;) {
    if (!used[i][pos]) continue;
    counts[items[i].c] += items[i].copies;
    long long shift = (2ll * items[i].c - n) * static_cast<long long>(items[i].copies);
    pos = static_cast<std::size_t>(static_cast<long long>(pos) - shift);
  }
  return counts;
}

}  // namespace

BalancedSearchResult make_balanced_from_symmetric(unsigned n, DeletionScope scope, std::size_t max_solutions,
                                                  const Budget& budget, const RootOptions& options) {
  BalancedSearchResult result;
  result.n = n;
  result.scope = scope;
  const auto all = materialize(GroupSpec::symmetric(n), budget);
  const Integer order = factorial(n);
  Integer total_cycles = 0;
  for (const auto& p : all) total_cycles += static_cast<unsigned long>(p.cycle_count());
  Rational half(n, 2);
  half.canonicalize();

  if (scope == DeletionScope::Transpositions) {
    std::vector<Permutation> transpositions;
    for (const auto& p : all) {
      if (p.transposition_count() == 1) transpositions.push_back(p);
    }
    for (std::size_t d = 0; d <= transpositions.size(); ++d) {
      Integer remaining = order - static_cast<unsigned long>(d);
      if (remaining == 0) break;
      Rational mean(total_cycles - Integer(static_cast<unsigned long>(d * (n - 1))), remaining);
      mean.canonicalize();
      if (mean == half) {
        result.minimal_deletions = d;
        break;
      }
    }
    if (!result.minimal_deletions) {
      result.diagnostics = "no number of deleted transpositions (0.." + std::to_string(transpositions.size()) +
                           ") brings the mean cycle count of S_" + std::to_string(n) + " (" +
                           Rational(total_cycles, order).get_str() + " before deletion) to " + half.get_str();
      return result;
    }
    const std::size_t d = *result.minimal_deletions;
    result.solution_count = binomial(static_cast<unsigned>(transpositions.size()), static_cast<unsigned>(d));
    // Enumerate index combinations in lexicographic order.
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (result.solutions.size() < max_solutions) {
      std::vector<Permutation> deleted;
      for (std::size_t i : idx) deleted.push_back(transpositions[i]);
      result.solutions.push_back(build_solution(all, std::move(deleted), options));
      std::size_t i = d;
      while (i > 0 && idx[i - 1] == transpositions.size() - d + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return result;
  }

  if (n > 8) throw BudgetExceeded("any-class balanced search supports n <= 8");
  std::vector<std::size_t> available(n + 1, 0);
  for (const auto& p : all) ++available[p.cycle_count()];
  // Deleted weights (2c - n) must sum to the full-group surplus 2*sum(c) - n*n!.
  long long target = 2 * total_cycles.get_si() - static_cast<long long>(n) * order.get_si();
  auto counts = min_deletions(n, available, target);
  if (!counts) {
    result.diagnostics = "no deletion multiset from S_" + std::to_string(n) + " balances the mean cycle count";
    return result;
  }
  std::size_t d = 0;
  result.solution_count = 1;
  for (unsigned c = 1; c <= n; ++c) {
    d += (*counts)[c];
    result.solution_count *= binomial(static_cast<unsigned>(available[c]), static_cast<unsigned>((*counts)[c]));
  }
  if (d == all.size()) {
    result.diagnostics = "only the empty set balances; no solution";
    result.solution_count = 0;
    return result;
  }
  result.minimal_deletions = d;
  if (max_solutions > 0) {
    std::vector<Permutation> deleted;
    std::vector<std::size_t> taken(n + 1, 0);
    for (const auto& p : all) {
      std::size_t c = p.cycle_count();
      if (taken[c] < (*counts)[c]) {
        ++taken[c];
        deleted.push_back(p);
      }
    }
    result.solutions.push_back(build_solution(all, std::move(deleted), options));
    result.diagnostics = "one representative deletion set emitted (first elements of each cycle count)";
  }
  return result;
}

std::vector<Permutation> sb4_elements() {
  auto search = make_balanced_from_symmetric(4, DeletionScope::Transpositions, 1);
  if (search.solutions.empty()) throw Error("deletion search found no balanced subset of S_4");
  return search.solutions.front().elements;
}

std::pair<IntPolynomial, IntPolynomial> sb4_fixture() {
  auto elements = sb4_elements();
  IntPolynomial p = cycle_polynomial_of(elements);
  IntPolynomial q = transposition_polynomial_of(elements);
  const IntPolynomial printed_p{0, 6, 11, 4, 1};
  const IntPolynomial printed_q{1, 4, 11, 6};
  if (p != printed_p || q != printed_q) {
    throw Error("balanced S_4 polynomials " + p.to_string() + " / " + q.to_string() +
                " differ from the expected x^4 + 4x^3 + 11x^2 + 6x / 6x^3 + 11x^2 + 4x + 1");
  }
  return {p, q};
}

}  // namespace grent
