#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grent/combinatorics.hpp"
#include "grent/cycle_poly.hpp"
#include "grent/entropy.hpp"
#include "grent/error.hpp"
#include "oracle.hpp"

using namespace grent;

namespace {

// Integer entropy straight from brute-force mean cycle counts.
Rational oracle_J(Family f, const std::vector<unsigned>& parts) {
  auto mean = [f](unsigned n) {
    switch (f) {
      case Family::Symmetric: return oracle::mean_cycles(oracle::all_permutations(n));
      case Family::Alternating: return oracle::mean_cycles(oracle::alternating(n));
      case Family::Cyclic: return oracle::mean_cycles(oracle::cyclic(n));
      case Family::Dihedral: return oracle::mean_cycles(oracle::dihedral(n));
    }
    return mpq_class(0);
  };
  unsigned total = 0;
  for (unsigned p : parts) total += p;
  mpq_class weighted = 0;
  for (unsigned p : parts) weighted += mean(p) * p;
  weighted /= total;
  return mean(total) - weighted;
}

}  // namespace

TEST_CASE("partition specs") {
  auto p = PartitionSpec::parse("3,3,5,5");
  CHECK(p.total() == 16);
  CHECK(p.size() == 4);
  CHECK(p.to_string() == "(3,3,5,5)");
  CHECK(p.sorted_descending().to_string() == "(5,5,3,3)");
  CHECK(PartitionSpec::parse("(1, 3)").parts() == std::vector<unsigned>{1, 3});
  CHECK(p.scaled(10).total() == 160);
  CHECK_THROWS_AS(PartitionSpec::parse("3,0"), Error);
  CHECK_THROWS_AS(PartitionSpec::parse(""), Error);
  CHECK_THROWS_AS(PartitionSpec::parse("3,a"), Error);
}

TEST_CASE("Shannon entropy") {
  CHECK(shannon_entropy(PartitionSpec({7})) == 0.0);
  CHECK(shannon_entropy(PartitionSpec({1, 1})) == doctest::Approx(std::numbers::ln2));
  CHECK(shannon_entropy(PartitionSpec({5, 5, 5, 5, 5})) == doctest::Approx(std::log(5.0)));
  CHECK(shannon_entropy(PartitionSpec({1, 1}), LogBase::Two) == doctest::Approx(1.0));
}

TEST_CASE("integer entropy examples") {
  CHECK(integer_entropy(Family::Symmetric, PartitionSpec({9})).J == 0);
  CHECK(integer_entropy(Family::Symmetric, PartitionSpec({1, 1})).J == Rational(1, 2));
  CHECK(transposition_entropy(Family::Symmetric, PartitionSpec({1, 1})) == Rational(1, 2));
  CHECK(transposition_entropy(Family::Symmetric, PartitionSpec({6})) == 0);
  auto r = integer_entropy(Family::Alternating, PartitionSpec::parse("3,3,5,5"));
  CHECK(r.cross_checked);
  CHECK(r.surprisals.size() == 4);
}

TEST_CASE("integer entropy against brute-force means") {
  for (auto f : {Family::Symmetric, Family::Alternating, Family::Cyclic}) {
    for (const auto& parts : std::vector<std::vector<unsigned>>{{1, 1}, {2, 3}, {1, 2, 4}, {3, 3}, {2, 2, 2, 1}, {4, 4}}) {
      CAPTURE(parts.size());
      CHECK(integer_entropy(f, PartitionSpec(parts)).J == oracle_J(f, parts));
    }
  }
  CHECK(integer_entropy(Family::Dihedral, PartitionSpec({3, 4})).J == oracle_J(Family::Dihedral, {3, 4}));
}

TEST_CASE("cycle form equals transposition form") {
  for (auto f : {Family::Symmetric, Family::Alternating, Family::Cyclic}) {
    for (unsigned total = 2; total <= 14; ++total) {
      for (unsigned m = 1; m <= std::min(total, 4u); ++m) {
        PartitionGenerator gen(total, m);
        while (gen.next()) {
          PartitionSpec p(std::vector<unsigned>(gen.current().begin(), gen.current().end()));
          CHECK(integer_entropy(f, p).J == transposition_entropy(f, p));
        }
      }
    }
  }
}

TEST_CASE("Symmetric J vanishes only for a single part") {
  for (unsigned total = 1; total <= 12; ++total) {
    for (const auto& type : partitions(total)) {
      PartitionSpec p(std::vector<unsigned>(type.lengths().begin(), type.lengths().end()));
      Rational j = integer_entropy(Family::Symmetric, p).J;
      CHECK(j >= 0);
      CHECK((j == 0) == (p.size() == 1));
    }
  }
}

TEST_CASE("family means use two routes") {
  FamilyMeans means(Family::Alternating);
  for (unsigned n = 1; n <= 40; ++n) CHECK(means.mean_cycles(n) == alternating_series(n));
  CHECK(means.all_cross_checked());
  CHECK(means.mean_transpositions(6) == 6 - alternating_series(6));
  FamilyMeans dihedral(Family::Dihedral);
  CHECK_THROWS_AS(dihedral.mean_cycles(2), Error);
}

TEST_CASE("balanced closed forms") {
  CHECK(balanced_entropy(PartitionSpec({9})) == 0);
  CHECK(balanced_entropy_uniform(20, 4) == Rational(15, 2));
  CHECK(balanced_entropy(PartitionSpec({5, 5, 5, 5})) == Rational(15, 2));
  CHECK(balanced_entropy_fraction(20, 4, Rational(1)) == balanced_entropy_uniform(20, 4));
  CHECK_THROWS_AS(balanced_entropy_uniform(10, 4), Error);
  for (unsigned total = 2; total <= 60; ++total) {
    for (unsigned m = 1; m <= total; ++m) {
      if (total % m != 0) continue;
      std::vector<unsigned> parts(m, total / m);
      CHECK(balanced_entropy(PartitionSpec(parts)) == balanced_entropy_uniform(total, m));
      for (unsigned occupied = 1; occupied <= m; ++occupied) {
        if (total % occupied != 0) continue;
        Rational f(occupied, m);
        f.canonicalize();
        std::vector<unsigned> fewer(occupied, total / occupied);
        CHECK(balanced_entropy_fraction(total, m, f) == balanced_entropy(PartitionSpec(fewer)));
      }
    }
  }
  // Any partition with the balanced mean n/2 at every size.
  auto half = [](unsigned n) { return Rational(n, 2); };
  for (const auto& parts : std::vector<std::vector<unsigned>>{{1, 2}, {3, 4, 5}, {6, 6, 1}}) {
    CHECK(transposition_entropy(PartitionSpec(parts), half) == balanced_entropy(PartitionSpec(parts)));
  }
}

TEST_CASE("convergence toward Shannon entropy") {
  for (const auto& shape : {PartitionSpec({1, 1}), PartitionSpec({1, 3}), PartitionSpec({2, 3, 5})}) {
    auto rows = convergence_profile(shape, {1, 10, 100, 1000});
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].abs_diff < rows[i - 1].abs_diff);
    CHECK(rows.back().abs_diff < 1e-3);
    CHECK(rows.back().total == 1000 * shape.total());
  }
  auto csv = convergence_csv(convergence_profile(PartitionSpec({1, 1}), {1, 10}));
  CHECK(csv.rfind("scale,N,J,I,abs_diff\n", 0) == 0);
}

TEST_CASE("(1,3) at scale 1000 from exact harmonics") {
  Rational j = harmonic(4000) - (harmonic(1000) + 3 * harmonic(3000)) / 4;
  double shannon = shannon_entropy(PartitionSpec({1, 3}));
  CHECK(std::fabs(j.get_d() - shannon) < 1e-3);
  CHECK(integer_entropy(Family::Symmetric, PartitionSpec({1000, 3000})).J == j);
}

TEST_CASE("maximum entropy partitions") {
  auto s25 = max_entropy_partition(Family::Symmetric, 25, 5);
  CHECK(s25.best().partition.to_string() == "(5,5,5,5,5)");
  auto a25 = max_entropy_partition(Family::Alternating, 25, 5);
  CHECK(a25.best().partition.to_string() == "(5,5,5,5,5)");

  auto s16 = max_entropy_partition(Family::Symmetric, 16, 4);
  CHECK(s16.best().partition.to_string() == "(4,4,4,4)");
  auto a16 = max_entropy_partition(Family::Alternating, 16, 4);
  CHECK(a16.rank_of(PartitionSpec::parse("3,3,5,5")) == 1);
  CHECK(a16.ranking.size() == 34);

  for (auto f : {Family::Symmetric, Family::Alternating}) {
    CHECK(max_entropy_partition(f, 28, 4).best().partition.to_string() == "(7,7,7,7)");
  }
  CHECK(max_entropy_partition(Family::Symmetric, 24, 4).best().partition.to_string() == "(6,6,6,6)");
  // A_n weights parts unevenly: (7,7,5,5) beats the uniform split for N = 24.
  auto a24 = max_entropy_partition(Family::Alternating, 24, 4);
  CHECK(a24.best().partition.to_string() == "(7,7,5,5)");
  CHECK(*a24.best().exact == Rational(1203454949, 892371480));
  CHECK(a24.rank_of(PartitionSpec({6, 6, 6, 6})) == 8);
}

TEST_CASE("Shannon search returns the most uniform split") {
  for (unsigned total = 4; total <= 30; ++total) {
    for (unsigned m = 2; m <= std::min(total, 6u); ++m) {
      auto best = max_entropy_partition(Family::Symmetric, total, m, Functional::Shannon).best().partition;
      unsigned lo = total / m;
      for (unsigned v : best.parts()) CHECK((v == lo || v == lo + 1));
    }
  }
}

TEST_CASE("search ranking is sorted with lexicographic tie-break") {
  auto r = max_entropy_partition(Family::Cyclic, 20, 3);
  for (std::size_t i = 1; i < r.ranking.size(); ++i) {
    const auto& a = r.ranking[i - 1];
    const auto& b = r.ranking[i];
    CHECK(*a.exact >= *b.exact);
    if (*a.exact == *b.exact) CHECK(a.partition.parts() < b.partition.parts());
  }
  CHECK_THROWS_AS(max_entropy_partition(Family::Symmetric, 61, 3), BudgetExceeded);
}

TEST_CASE("fat-part alternating entropy stays close to symmetric") {
  unsigned checked = 0;
  for (unsigned m = 1; m <= 5; ++m) {
    PartitionGenerator g(30, m);
    while (g.next()) {
      const auto& parts = g.current();
      if (parts.back() < 6) continue;
      PartitionSpec p(std::vector<unsigned>(parts.begin(), parts.end()));
      Rational gap = abs(integer_entropy(Family::Alternating, p).J - integer_entropy(Family::Symmetric, p).J);
      Rational bound = abs(alternating_series(30) - harmonic(30));
      Rational worst = 0;
      for (unsigned v : p.parts()) worst = std::max(worst, Rational(abs(alternating_series(v) - harmonic(v))));
      CHECK(gap <= worst + bound);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("report serialisation") {
  auto r = integer_entropy(Family::Symmetric, PartitionSpec({1, 1}));
  CHECK(r.to_json().find("\"J\"") != std::string::npos);
  CHECK(r.to_csv().rfind("family,N,m,parts,J_exact,J,shannon\n", 0) == 0);
}
