#include "grent/entropy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "grent/combinatorics.hpp"
#include "grent/cycle_poly.hpp"
#include "grent/error.hpp"

namespace grent {

PartitionSpec::PartitionSpec(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error("partition needs at least one part");
  for (unsigned p : parts_) {
    if (p == 0) throw Error("partition parts must be positive");
    total_ += p;
  }
}

PartitionSpec PartitionSpec::parse(const std::string& text) {
  std::vector<unsigned> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    unsigned long v = std::stoul(token);
    if (v > 1'000'000'000ul) throw Error("partition part too large: " + token);
    parts.push_back(static_cast<unsigned>(v));
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '\t') {
      flush();
    } else {
      throw Error("invalid character in partition \"" + text + "\"");
    }
  }
  flush();
  return PartitionSpec(std::move(parts));
}

PartitionSpec PartitionSpec::sorted_descending() const {
  auto p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>());
  return PartitionSpec(std::move(p));
}

PartitionSpec PartitionSpec::scaled(unsigned factor) const {
  if (factor == 0) throw Error("scale factor must be positive");
  auto p = parts_;
  for (auto& v : p) v *= factor;
  return PartitionSpec(std::move(p));
}

std::string PartitionSpec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

double shannon_entropy(const PartitionSpec& p, LogBase base) {
  const double total = p.total();
  double h = 0.0;
  for (unsigned n : p.parts()) {
    double prob = n / total;
    h -= prob * std::log(prob);
  }
  if (base == LogBase::Two) h /= std::log(2.0);
  return h == 0.0 ? 0.0 : h;
}

FamilyMeans::FamilyMeans(Family family, unsigned cross_check_limit) : family_(family), limit_(cross_check_limit) {}

const Rational& FamilyMeans::mean_cycles(unsigned n) {
  if (n == 0) throw Error("family size must be positive");
  if (cycles_.size() <= n) cycles_.resize(n + 1);
  if (!cycles_[n]) {
    GroupSpec spec = GroupSpec::named(family_, n);  // validates degenerate sizes
    Rational series = family_mean_cycles(family_, n);
    if (n <= limit_) {
      Rational via_poly = expected_cycles(spec);
      if (via_poly != series) {
        throw Error("mean cycle count routes disagree for " + spec.name() + ": series " + series.get_str() +
                    ", log-derivative " + via_poly.get_str());
      }
    } else {
      all_cross_checked_ = false;
    }
    cycles_[n] = std::move(series);
  }
  return *cycles_[n];
}

const Rational& FamilyMeans::mean_transpositions(unsigned n) {
  if (n == 0) throw Error("family size must be positive");
  if (transpositions_.size() <= n) transpositions_.resize(n + 1);
  if (!transpositions_[n]) {
    Rational cayley = Rational(n) - mean_cycles(n);
    cayley.canonicalize();
    if (n <= limit_) {
      // Throws if Q'(1)/Q(1) and n - <C> disagree.
      transpositions_[n] = expected_transpositions(GroupSpec::named(family_, n));
      if (*transpositions_[n] != cayley) throw Error("transposition means disagree");
    } else {
      transpositions_[n] = std::move(cayley);
    }
  }
  return *transpositions_[n];
}

Rational integer_entropy_value(FamilyMeans& means, const PartitionSpec& p) {
  const unsigned total = p.total();
  Rational weighted = 0;
  for (unsigned n : p.parts()) weighted += Rational(n) * means.mean_cycles(n);
  Rational j = means.mean_cycles(total) - weighted / Rational(total);
  j.canonicalize();
  return j;
}

EntropyReport integer_entropy(Family family, const PartitionSpec& p, LogBase base) {
  FamilyMeans means(family);
  EntropyReport report;
  report.family = family;
  report.partition = p;
  report.base = base;
  report.J = integer_entropy_value(means, p);
  report.shannon = shannon_entropy(p, base);
  for (unsigned n : p.parts()) {
    Rational s = means.mean_cycles(p.total()) - means.mean_cycles(n);
    s.canonicalize();
    report.surprisals.push_back(s);
  }
  report.cross_checked = means.all_cross_checked();
  return report;
}

std::string EntropyReport::to_json() const {
  nlohmann::json surprisal_json = nlohmann::json::array();
  for (const auto& s : surprisals) surprisal_json.push_back({{"exact", s.get_str()}, {"value", to_double(s)}});
  nlohmann::json j = {{"family", grent::to_string(family)},
                      {"N", partition.total()},
                      {"m", partition.size()},
                      {"parts", partition.parts()},
                      {"J_exact", J.get_str()},
                      {"J", to_double(J)},
                      {"shannon", shannon},
                      {"log_base", base == LogBase::Two ? "2" : "e"},
                      {"surprisals", surprisal_json},
                      {"cross_checked", cross_checked}};
  return j.dump(2);
}

std::string EntropyReport::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  std::string parts;
  for (std::size_t i = 0; i < partition.parts().size(); ++i) {
    if (i) parts += ' ';
    parts += std::to_string(partition.parts()[i]);
  }
  out << "family,N,m,parts,J_exact,J,shannon\n";
  out << grent::to_string(family) << ',' << partition.total() << ',' << partition.size() << ',' << parts << ','
      << J.get_str() << ',' << to_double(J) << ',' << shannon << '\n';
  return out.str();
}

Rational transposition_entropy(const PartitionSpec& p, const std::function<Rational(unsigned)>& mean_transpositions) {
  const unsigned total = p.total();
  Rational sum = 0;
  for (unsigned n : p.parts()) sum += Rational(n, total) * (Rational(n) - mean_transpositions(n));
  Rational j = (Rational(total) - mean_transpositions(total)) - sum;
  j.canonicalize();
  return j;
}

Rational transposition_entropy(Family family, const PartitionSpec& p) {
  FamilyMeans means(family);
  Rational j = transposition_entropy(p, [&](unsigned n) { return means.mean_transpositions(n); });
  Rational direct = integer_entropy_value(means, p);
  if (j != direct) {
    throw Error("transposition entropy " + j.get_str() + " differs from integer entropy " + direct.get_str());
  }
  return j;
}

Rational balanced_entropy(const PartitionSpec& p) {
  const unsigned total = p.total();
  Rational squares = 0;
  for (unsigned n : p.parts()) squares += Rational(static_cast<unsigned long>(n) * n);
  Rational j = Rational(total, 2) - squares / Rational(2ul * total);
  j.canonicalize();
  return j;
}

Rational balanced_entropy_uniform(unsigned total, unsigned m) {
  if (m == 0 || total % m != 0) {
    throw Error("uniform balanced entropy needs m to divide N (N = " + std::to_string(total) +
                ", m = " + std::to_string(m) + ")");
  }
  Rational j = Rational(total, 2) * Rational(m - 1, m);
  j.canonicalize();
  return j;
}

Rational balanced_entropy_fraction(unsigned total, unsigned m, const Rational& fraction) {
  if (m == 0) throw Error("balanced entropy needs m >= 1");
  Rational occupied = fraction * Rational(m);
  occupied.canonicalize();
  if (fraction <= 0 || fraction > 1 || occupied.get_den() != 1) {
    throw Error("fraction f = " + fraction.get_str() + " must make f*m a positive integer with f <= 1");
  }
  Integer k = occupied.get_num();
  if (Integer(total) % k != 0) {
    throw Error("N = " + std::to_string(total) + " is not divisible by the " + k.get_str() + " occupied parts");
  }
  Rational inverse = 1 / fraction;
  Rational j = Rational(total, 2) * (Rational(m) - inverse) / Rational(m);
  j.canonicalize();
  return j;
}

std::vector<ConvergenceRow> convergence_profile(const PartitionSpec& shape, const std::vector<unsigned>& scales,
                                                LogBase base) {
  std::vector<ConvergenceRow> rows;
  for (unsigned s : scales) {
    PartitionSpec p = shape.scaled(s);
    // Harmonic numbers only; the cycle-polynomial route is out of reach at these sizes.
    FamilyMeans means(Family::Symmetric, 0);
    ConvergenceRow row;
    row.scale = s;
    row.total = p.total();
    row.J = integer_entropy_value(means, p);
    double ln2 = std::log(2.0);
    row.J_value = to_double(row.J) / (base == LogBase::Two ? ln2 : 1.0);
    row.shannon = shannon_entropy(p, base);
    row.abs_diff = std::fabs(row.J_value - row.shannon);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out.precision(12);
  out << "scale,N,J,I,abs_diff\n";
  for (const auto& r : rows) {
    out << r.scale << ',' << r.total << ',' << r.J_value << ',' << r.shannon << ',' << r.abs_diff << '\n';
  }
  return out.str();
}

std::size_t MaxEntropyResult::rank_of(const PartitionSpec& p) const {
  PartitionSpec key = p.sorted_descending();
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (ranking[i].partition == key) return i + 1;
  }
  return 0;
}

MaxEntropyResult max_entropy_partition(Family family, unsigned total, unsigned parts, Functional functional,
                                       const Budget& budget) {
  if (total > budget.max_class_degree) {
    throw BudgetExceeded("partition search for N = " + std::to_string(total) + " exceeds the budget (N <= " +
                         std::to_string(budget.max_class_degree) + ")");
  }
  if (parts == 0 || parts > total) {
    throw Error("cannot split N = " + std::to_string(total) + " into " + std::to_string(parts) + " positive parts");
  }
  MaxEntropyResult result;
  result.family = family;
  result.functional = functional;
  result.total = total;
  result.parts = parts;
  FamilyMeans means(family);
  PartitionGenerator gen(total, parts);
  while (gen.next()) {
    PartitionSpec p(std::vector<unsigned>(gen.current().begin(), gen.current().end()));
    RankedPartition ranked{p, std::nullopt, 0.0};
    if (functional == Functional::Integer) {
      ranked.exact = integer_entropy_value(means, p);
      ranked.value = to_double(*ranked.exact);
    } else {
      ranked.value = shannon_entropy(p);
    }
    result.ranking.push_back(std::move(ranked));
  }
  // Shannon values are floats, so near-equal values count as ties.
  auto lex_less = [](const RankedPartition& a, const RankedPartition& b) {
    return a.partition.parts() < b.partition.parts();
  };
  auto better = [&](const RankedPartition& a, const RankedPartition& b) {
    if (a.exact && b.exact) {
      if (*a.exact != *b.exact) return *a.exact > *b.exact;
    } else if (std::fabs(a.value - b.value) > 1e-12 * std::max(1.0, std::fabs(a.value))) {
      return a.value > b.value;
    }
    return lex_less(a, b);
  };
  std::sort(result.ranking.begin(), result.ranking.end(), better);
  return result;
}

}  // namespace grent
