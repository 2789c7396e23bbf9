#include "pwc/pwcmap.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace pwc {

Scalar GapSet::measure() const {
  Scalar total(0);
  for (const auto& c : components) total += c.length();
  return total;
}

bool GapSet::equal_lengths() const {
  if (components.empty()) return true;
  const Scalar first = components.front().length();
  return std::all_of(components.begin(), components.end(),
                     [&](const Interval& c) { return c.length() == first; });
}

bool GapSet::contains(const Scalar& x) const {
  return std::any_of(components.begin(), components.end(), [&](const Interval& c) { return c.contains(x); });
}

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<Scalar> breakpoints, Scalar slope, std::vector<Scalar> offsets)
    : breakpoints_(std::move(breakpoints)), slope_(std::move(slope)), offsets_(std::move(offsets)) {
  if (offsets_.empty()) throw Error(ErrorKind::invalid_map, "map needs at least one branch");
  if (breakpoints_.size() != offsets_.size() + 1)
    throw Error(ErrorKind::invalid_map, "expected " + std::to_string(offsets_.size() + 1) + " breakpoints, got " +
                                            std::to_string(breakpoints_.size()));
  if (breakpoints_.front() != Scalar(0) || breakpoints_.back() != Scalar(1))
    throw Error(ErrorKind::invalid_map, "breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw Error(ErrorKind::invalid_map, "breakpoints must be strictly increasing");
  }
  if (!(Scalar(0) < slope_ && slope_ < Scalar(1)))
    throw Error(ErrorKind::invalid_map, "slope " + slope_.str() + " is not in (0, 1)");

  const std::size_t n = offsets_.size();
  std::vector<Interval> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Interval img = image(static_cast<int>(i + 1));
    if (img.lo < Scalar(0) || Scalar(1) < img.hi)
      throw Error(ErrorKind::invalid_map, "image of branch " + std::to_string(i + 1) + " leaves [0, 1)");
    images.push_back(std::move(img));
  }
  std::sort(images.begin(), images.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].lo < images[i - 1].hi)
      throw Error(ErrorKind::not_injective, "branch images overlap at " + images[i].lo.str());
  }
}

Interval PiecewiseAffineMap::domain(int branch) const {
  const auto i = static_cast<std::size_t>(branch);
  return {breakpoints_[i - 1], breakpoints_[i]};
}

Interval PiecewiseAffineMap::image(int branch) const {
  const auto i = static_cast<std::size_t>(branch);
  return {slope_ * breakpoints_[i - 1] + offsets_[i - 1], slope_ * breakpoints_[i] + offsets_[i - 1]};
}

int PiecewiseAffineMap::branch_of(const Scalar& x) const {
  if (x < Scalar(0) || !(x < Scalar(1)))
    throw Error(ErrorKind::out_of_domain, x.str() + " is not in [0, 1)");
  // First breakpoint strictly greater than x closes x's branch.
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<int>(it - breakpoints_.begin());
}

Evaluation PiecewiseAffineMap::evaluate(const Scalar& x) const {
  const int branch = branch_of(x);
  return {slope_ * x + offsets_[static_cast<std::size_t>(branch - 1)], branch};
}

std::optional<Scalar> PiecewiseAffineMap::preimage(const Scalar& y) const {
  std::optional<Scalar> found;
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    Scalar x = (y - offsets_[i]) / slope_;
    if (breakpoints_[i] <= x && x < breakpoints_[i + 1]) {
      if (found) throw Error(ErrorKind::injectivity_violation, "two preimages of " + y.str());
      found = std::move(x);
    }
  }
  return found;
}

ImageResult PiecewiseAffineMap::image_interval(const Interval& J) const {
  ImageResult out;
  if (J.empty()) return out;
  const Scalar& lo = J.lo;
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    const Scalar& a = breakpoints_[i];
    const Scalar& b = breakpoints_[i + 1];
    if (!(lo < b)) continue;
    if (!(a < J.hi)) break;
    const Scalar& piece_lo = lo < a ? a : lo;
    const Scalar& piece_hi = J.hi < b ? J.hi : b;
    if (piece_lo < piece_hi)
      out.pieces.push_back({slope_ * piece_lo + offsets_[i], slope_ * piece_hi + offsets_[i]});
  }
  out.split = out.pieces.size() > 1;
  return out;
}

GapSet PiecewiseAffineMap::gap_set() const {
  std::vector<Interval> images;
  for (std::size_t i = 1; i <= offsets_.size(); ++i) images.push_back(image(static_cast<int>(i)));
  std::sort(images.begin(), images.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  GapSet gaps;
  Scalar cursor(0);
  for (const auto& img : images) {
    if (cursor < img.lo) gaps.components.push_back({cursor, img.lo});
    cursor = img.hi;
  }
  if (cursor < Scalar(1)) gaps.components.push_back({cursor, Scalar(1)});
  return gaps;
}

Orbit orbit(const PiecewiseAffineMap& g, const Scalar& x, std::size_t steps) {
  Orbit out;
  out.points.reserve(steps + 1);
  out.branches.reserve(steps + 1);
  std::unordered_map<Scalar, std::size_t, ScalarHash> seen;
  Scalar current = x;
  for (std::size_t k = 0; k <= steps; ++k) {
    Evaluation e = g.evaluate(current);
    if (!out.cycle) {
      auto [it, inserted] = seen.emplace(current, k);
      if (!inserted) out.cycle = Cycle{it->second, k};
    }
    out.points.push_back(std::move(current));
    out.branches.push_back(e.branch);
    current = std::move(e.value);
  }
  return out;
}

DeltaFamily validate_family(const PiecewiseAffineMap& f, int b) {
  const std::size_t n = f.branch_count();
  if (b < 2 || f.slope() != Scalar::rational(1, b))
    throw Error(ErrorKind::slope_not_inverse_base, "slope " + f.slope().str() + " is not 1/" + std::to_string(b));
  if (n < 2) throw Error(ErrorKind::invalid_map, "family maps need n >= 2 branches");
  if (static_cast<std::size_t>(b) < n)
    throw Error(ErrorKind::invalid_map, "need b >= n, got b = " + std::to_string(b) + ", n = " + std::to_string(n));

  std::size_t gluings = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Equal offsets make x_{i+1} a removable breakpoint, so f would not have n - 1 discontinuities.
    if (f.offsets()[i] == f.offsets()[i + 1])
      throw Error(ErrorKind::invalid_map, "breakpoint " + f.breakpoints()[i + 1].str() + " is not a discontinuity");
    if (f.offsets()[i] - f.offsets()[i + 1] == Scalar(1)) ++gluings;
  }
  if (gluings == 0) throw Error(ErrorKind::no_circle_gluing, "no i with d_i - d_{i+1} = 1");

  GapSet gap = f.gap_set();
  if (gap.size() == 0) throw Error(ErrorKind::invalid_map, "empty gap set");
  if (!gap.equal_lengths()) throw Error(ErrorKind::unequal_gap_lengths, "gap components differ in length");

  Scalar length = gap.components.front().length();
  Scalar lo = -gap.components.front().lo;
  Scalar hi = Scalar(1) - gap.components.back().hi;
  return DeltaFamily{f, b, std::move(gap), std::move(length), std::move(lo), std::move(hi), gluings};
}

PiecewiseAffineMap rotate_compose(const DeltaFamily& family, const Scalar& delta) {
  if (!family.in_window(delta))
    throw Error(ErrorKind::delta_outside_window, delta.str() + " is not in (" + family.window_lo.str() + ", " +
                                                     family.window_hi.str() + ")");
  const PiecewiseAffineMap& f = family.base;
  const Scalar& slope = f.slope();
  const Scalar one(1);
  const Scalar zero(0);

  std::vector<Scalar> cuts{zero};
  std::vector<Scalar> offsets;
  auto push = [&](const Scalar& end, Scalar offset) {
    if (!offsets.empty() && offsets.back() == offset) {
      cuts.back() = end;  // continuous across the old breakpoint: merge
    } else {
      offsets.push_back(std::move(offset));
      cuts.push_back(end);
    }
  };

  for (std::size_t i = 0; i < f.branch_count(); ++i) {
    const Scalar& a = f.breakpoints()[i];
    const Scalar& b = f.breakpoints()[i + 1];
    const Scalar shifted = f.offsets()[i] + delta;
    const Scalar lo_value = slope * a + shifted;
    const Scalar hi_value = slope * b + shifted;
    if (one <= lo_value) {
      push(b, shifted - one);
    } else if (lo_value < one && one < hi_value) {
      push((one - shifted) / slope, shifted);
      push(b, shifted - one);
    } else if (hi_value <= zero) {
      push(b, shifted + one);
    } else if (lo_value < zero && zero < hi_value) {
      push((zero - shifted) / slope, shifted + one);
      push(b, shifted);
    } else {
      push(b, shifted);
    }
  }

  PiecewiseAffineMap out(std::move(cuts), slope, std::move(offsets));
  if (out.branch_count() != f.branch_count())
    throw Error(ErrorKind::invalid_map, "f_delta has " + std::to_string(out.branch_count() - 1) +
                                            " discontinuities, expected " + std::to_string(f.branch_count() - 1));
  return out;
}

}  // namespace pwc
