#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grent {

using Point = std::uint32_t;

/// Cycle structure of a permutation: cycle lengths in descending order,
/// fixed points included as cycles of length one.
class CycleType {
 public:
  CycleType() = default;
  /// Accepts lengths in any order; throws if any length is zero.
  explicit CycleType(std::vector<Point> lengths);

  const std::vector<Point>& lengths() const { return lengths_; }
  std::size_t parts() const { return lengths_.size(); }
  Point degree() const;

  /// multiplicities()[k] = number of cycles of length k (index 0 unused).
  std::vector<std::size_t> multiplicities() const;

  /// Even permutations have (degree - parts) even.
  bool is_even() const { return (degree() - parts()) % 2 == 0; }

  /// "3,1,1" style rendering.
  std::string to_string() const;
  /// Non-trivial cycles only ("3,2"), empty for the identity.
  std::string support_string() const;

  auto operator<=>(const CycleType&) const = default;

 private:
  std::vector<Point> lengths_;
};

/// A bijection on {0, ..., n-1}; images()[i] is the image of point i.
class Permutation {
 public:
  /// Throws grent::Error unless `images` is a bijection on {0..n-1}, n >= 1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(Point degree);
  /// Builds from 0-based disjoint cycles; unmentioned points are fixed.
  static Permutation from_cycles(Point degree, const std::vector<std::vector<Point>>& cycles);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  CycleType cycle_type() const;
  /// Number of disjoint cycles, fixed points included.
  std::size_t cycle_count() const;
  /// Minimum number of transpositions that restore the identity: degree - cycle_count.
  std::size_t transposition_count() const { return degree() - cycle_count(); }
  bool is_even() const { return transposition_count() % 2 == 0; }

  /// Disjoint cycles in 0-based points, each starting at its smallest point,
  /// ordered by that point. Fixed points appear as singleton cycles.
  std::vector<std::vector<Point>> cycles() const;

  /// 1-based cycle notation with fixed points written out, e.g. "(1 2)(3)(4)".
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// Composition with the right factor applied first: compose(p, q)(i) = p(q(i)).
/// Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

std::size_t hash_value(const Permutation& p);

/// Parses 1-based cycle notation such as "(1 2)(3)(4)" or "(1,3,2)".
/// "()" and "" denote the identity. The degree is the largest point mentioned
/// unless `degree` is nonzero, in which case it must cover every point.
Permutation parse_cycle_notation(std::string_view text, Point degree = 0);

/// Parses a newline-delimited list of cycle-notation permutations. Blank
/// lines and lines starting with '#' are skipped. All permutations share the
/// largest degree mentioned anywhere in the file (or `degree` if nonzero).
std::vector<Permutation> parse_permutation_list(std::string_view text, Point degree = 0);
std::vector<Permutation> load_permutation_file(const std::string& path, Point degree = 0);

}  // namespace grent

template <>
struct std::hash<grent::Permutation> {
  std::size_t operator()(const grent::Permutation& p) const { return grent::hash_value(p); }
};
