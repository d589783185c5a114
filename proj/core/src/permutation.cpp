#include "grent/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "grent/error.hpp"

namespace grent {

CycleType::CycleType(std::vector<Point> lengths) : lengths_(std::move(lengths)) {
  if (std::any_of(lengths_.begin(), lengths_.end(), [](Point l) { return l == 0; })) {
    throw Error("cycle lengths must be positive");
  }
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

Point CycleType::degree() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), Point{0});
}

std::vector<std::size_t> CycleType::multiplicities() const {
  std::vector<std::size_t> m(degree() + 1, 0);
  for (Point l : lengths_) ++m[l];
  return m;
}

std::string CycleType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths_[i]);
  }
  return out;
}

std::string CycleType::support_string() const {
  std::string out;
  for (Point l : lengths_) {
    if (l == 1) break;
    if (!out.empty()) out += ',';
    out += std::to_string(l);
  }
  return out;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) throw Error("images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(Point degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(Point degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree) throw Error("cycle point " + std::to_string(from + 1) + " exceeds degree");
      if (used[from]) throw Error("point " + std::to_string(from + 1) + " appears in more than one cycle");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<Point> cycle;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  std::vector<Point> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    Point len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(std::move(lengths));
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (Point j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return count;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error("cannot compose permutations of degree " + std::to_string(p.degree()) + " and " +
                std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < p.degree(); ++i) images[i] = p(q(i));
  return Permutation(std::move(images));
}

std::size_t hash_value(const Permutation& p) {
  // FNV-1a over the image sequence.
  std::size_t h = 14695981039346656037ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// 1-based cycles as written; validated against the final degree later.
std::vector<std::vector<Point>> parse_cycles(std::string_view text, Point& max_point) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error("expected '(' in cycle notation: \"" + std::string(text) + "\"");
    }
    ++i;
    std::vector<Point> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) throw Error("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error("unexpected character '" + std::string(1, text[i]) + "' in cycle notation");
      }
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > 0xFFFFFFul) throw Error("point label too large");
        ++i;
      }
      if (value == 0) throw Error("cycle notation points are 1-based; got 0");
      cycle.push_back(static_cast<Point>(value));
      max_point = std::max(max_point, static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

Permutation build(const std::vector<std::vector<Point>>& one_based, Point degree) {
  std::vector<std::vector<Point>> zero_based;
  zero_based.reserve(one_based.size());
  for (const auto& c : one_based) {
    std::vector<Point> z;
    z.reserve(c.size());
    for (Point v : c) z.push_back(v - 1);
    zero_based.push_back(std::move(z));
  }
  return Permutation::from_cycles(degree, zero_based);
}

}  // namespace

Permutation parse_cycle_notation(std::string_view text, Point degree) {
  Point max_point = 0;
  auto cycles = parse_cycles(text, max_point);
  if (degree == 0) degree = std::max<Point>(max_point, 1);
  if (max_point > degree) throw Error("point " + std::to_string(max_point) + " exceeds degree " + std::to_string(degree));
  return build(cycles, degree);
}

std::vector<Permutation> parse_permutation_list(std::string_view text, Point degree) {
  std::vector<std::vector<std::vector<Point>>> parsed;
  Point max_point = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::size_t last = line.find_last_not_of(" \t\r");
    try {
      parsed.push_back(parse_cycles(line.substr(first, last - first + 1), max_point));
    } catch (const Error& e) {
      throw Error("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (end == text.size()) break;
  }
  if (parsed.empty()) throw Error("permutation list is empty");
  if (degree == 0) degree = std::max<Point>(max_point, 1);
  if (max_point > degree) throw Error("point " + std::to_string(max_point) + " exceeds degree " + std::to_string(degree));
  std::vector<Permutation> out;
  out.reserve(parsed.size());
  for (const auto& cycles : parsed) out.push_back(build(cycles, degree));
  return out;
}

std::vector<Permutation> load_permutation_file(const std::string& path, Point degree) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open permutation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_permutation_list(buf.str(), degree);
}

}  // namespace grent
