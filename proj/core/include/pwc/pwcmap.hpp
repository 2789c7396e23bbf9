#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pwc/exactnum.hpp"

namespace pwc {

/// Half-open interval [lo, hi).  lo == hi is the (valid) empty interval.
struct Interval {
  Scalar lo;
  Scalar hi;

  bool empty() const { return !(lo < hi); }
  bool contains(const Scalar& x) const { return lo <= x && x < hi; }
  Scalar length() const { return empty() ? Scalar(0) : hi - lo; }
  Scalar midpoint() const { return (lo + hi) / Scalar(2); }
  Interval shifted(const Scalar& by) const { return {lo + by, hi + by}; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// I \ g(I) as its sorted connected components.
struct GapSet {
  std::vector<Interval> components;

  std::size_t size() const { return components.size(); }
  Scalar measure() const;
  bool equal_lengths() const;
  bool contains(const Scalar& x) const;

  friend bool operator==(const GapSet&, const GapSet&) = default;
};

struct Evaluation {
  Scalar value;
  int branch;  // 1-based: x lies in [x_{branch-1}, x_branch)
};

struct ImageResult {
  std::vector<Interval> pieces;
  bool split = false;  // the source interval straddled a discontinuity
};

/// x -> slope * x + offset_i on [x_{i-1}, x_i), for breakpoints
/// 0 = x_0 < ... < x_n = 1.  The constructor validates every branch image
/// against [0, 1) and checks that the images are pairwise disjoint, so a
/// constructed map is always an injective piecewise contraction.
class PiecewiseAffineMap {
 public:
  PiecewiseAffineMap(std::vector<Scalar> breakpoints, Scalar slope, std::vector<Scalar> offsets);

  std::size_t branch_count() const { return offsets_.size(); }
  const std::vector<Scalar>& breakpoints() const { return breakpoints_; }
  /// x_1 ... x_{n-1}; 0 and 1 are not discontinuities.
  std::span<const Scalar> discontinuities() const {
    return std::span<const Scalar>(breakpoints_).subspan(1, breakpoints_.size() - 2);
  }
  const Scalar& slope() const { return slope_; }
  const std::vector<Scalar>& offsets() const { return offsets_; }

  Interval domain(int branch) const;
  Interval image(int branch) const;

  /// Branch label of x in [0, 1); throws out_of_domain otherwise.
  int branch_of(const Scalar& x) const;
  Evaluation evaluate(const Scalar& x) const;
  Scalar operator()(const Scalar& x) const { return evaluate(x).value; }

  /// The unique x with g(x) = y, if any.
  std::optional<Scalar> preimage(const Scalar& y) const;

  /// Exact image of J, split at the discontinuities J contains.
  ImageResult image_interval(const Interval& J) const;

  GapSet gap_set() const;

  friend bool operator==(const PiecewiseAffineMap&, const PiecewiseAffineMap&) = default;

 private:
  std::vector<Scalar> breakpoints_;
  Scalar slope_;
  std::vector<Scalar> offsets_;
};

struct Cycle {
  std::size_t first;   // g^first(x) == g^repeat(x)
  std::size_t repeat;
};

struct Orbit {
  std::vector<Scalar> points;  // x, g(x), ..., g^K(x)
  std::vector<int> branches;
  std::optional<Cycle> cycle;  // earliest exact repetition
};

Orbit orbit(const PiecewiseAffineMap& g, const Scalar& x, std::size_t steps);

/// A validated member of the one-parameter family: base map with slope 1/b,
/// all gap components of one common length, at least one circle gluing
/// d_i - d_{i+1} = 1.
struct DeltaFamily {
  PiecewiseAffineMap base;
  int b;
  GapSet gap;
  Scalar gap_length;
  Scalar window_lo;  // -inf G   (open)
  Scalar window_hi;  // 1 - sup G (open)
  std::size_t gluings;

  std::size_t n() const { return base.branch_count(); }
  std::size_t m() const { return gap.size(); }
  bool in_window(const Scalar& delta) const { return window_lo < delta && delta < window_hi; }
};

DeltaFamily validate_family(const PiecewiseAffineMap& f, int b);

/// f_delta = R_delta o f as a standalone map.  Each branch is shifted by delta
/// and split where it wraps; adjacent pieces with equal offsets are merged.
PiecewiseAffineMap rotate_compose(const DeltaFamily& family, const Scalar& delta);

}  // namespace pwc
