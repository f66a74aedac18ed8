#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace tarep {

/// Encoded difference bound: raw = 2*b + (non-strict ? 1 : 0); kInfinity for
/// no bound. Ordering of raw values matches the ordering of bounds.
using RawBound = std::int64_t;

inline constexpr RawBound kInfinity = std::numeric_limits<RawBound>::max() / 4;
inline constexpr RawBound kLeZero = 1;

constexpr RawBound raw_bound(std::int64_t b, bool strict) { return 2 * b + (strict ? 0 : 1); }
constexpr std::int64_t bound_value(RawBound r) { return r >> 1; }
constexpr bool bound_strict(RawBound r) { return (r & 1) == 0; }

constexpr RawBound raw_add(RawBound a, RawBound b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b - ((a | b) & 1);
}

/// Difference bound matrix over clocks 1..n plus the reference clock 0;
/// entry (i, j) bounds x_i - x_j. All mutators keep the matrix canonical.
class Dbm {
 public:
  /// The zone where every clock equals zero.
  static Dbm zero(std::size_t clocks);
  /// All non-negative valuations.
  static Dbm universe(std::size_t clocks);

  std::size_t dim() const { return dim_; }
  RawBound at(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }

  bool is_empty() const;
  void up();
  /// x_clock := 0 (clock indices are 1-based in the matrix).
  void reset(std::size_t clock);
  /// Intersect with x_i - x_j <= raw; closes incrementally.
  void constrain(std::size_t i, std::size_t j, RawBound raw);
  void canonicalize();
  /// Classic maximal-constant extrapolation with one constant k (scaled).
  void extrapolate(std::int64_t k);
  bool includes(const Dbm& other) const;

  std::size_t hash() const;
  bool operator==(const Dbm&) const = default;
  std::string to_string() const;

 private:
  explicit Dbm(std::size_t dim) : dim_(dim), m_(dim * dim, kInfinity) {}
  RawBound& ref(std::size_t i, std::size_t j) { return m_[i * dim_ + j]; }
  void mark_empty();

  std::size_t dim_ = 1;
  std::vector<RawBound> m_;
};

}  // namespace tarep
