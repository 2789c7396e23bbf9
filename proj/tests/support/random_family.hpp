#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pwc/pwcmap.hpp"

namespace pwc::testing {

struct RandomFamily {
  PiecewiseAffineMap map;
  int b;
  std::size_t m;
};

/// A random valid family member built from the circle picture: the branch
/// images are laid out from 0 with image i+1 first and image i last (so
/// d_i - d_{i+1} = 1), and m equal gaps of length (1 - 1/b)/m are placed at
/// distinct junctions between consecutive images.
template <class Rng>
RandomFamily random_family(Rng& rng) {
  std::uniform_int_distribution<int> pick_b(2, 9);
  const int b = pick_b(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, static_cast<std::size_t>(b))(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);

  // Distinct interior breakpoints k / den.
  const long den = std::uniform_int_distribution<long>(static_cast<long>(n) + 1, 97)(rng);
  std::vector<long> cuts(static_cast<std::size_t>(den - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(n - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Scalar> x{Scalar(0)};
  for (long c : cuts) x.push_back(Scalar::rational(c, den));
  x.emplace_back(1);

  const std::size_t glue = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);  // 1-based i
  std::vector<std::size_t> order;
  std::vector<bool> has_gap;
  // Image j followed directly by image j+1 would make x_j removable; redraw.
  for (bool removable = true; removable;) {
    order = {glue + 1};
    std::vector<std::size_t> middle;
    for (std::size_t j = 1; j <= n; ++j)
      if (j != glue && j != glue + 1) middle.push_back(j);
    std::shuffle(middle.begin(), middle.end(), rng);
    order.insert(order.end(), middle.begin(), middle.end());
    order.push_back(glue);

    std::vector<std::size_t> junctions(n - 1);
    std::iota(junctions.begin(), junctions.end(), 0);
    std::shuffle(junctions.begin(), junctions.end(), rng);
    junctions.resize(m);
    has_gap.assign(n - 1, false);
    for (std::size_t j : junctions) has_gap[j] = true;
    removable = false;
    for (std::size_t s = 0; s + 1 < n; ++s) removable = removable || (!has_gap[s] && order[s + 1] == order[s] + 1);
  }

  const Scalar slope = Scalar::rational(1, b);
  const Scalar gap = (Scalar(1) - slope) / Scalar(static_cast<long>(m));
  std::vector<Scalar> offsets(n);
  Scalar cursor(0);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t j = order[s];
    offsets[j - 1] = cursor - slope * x[j - 1];
    cursor += slope * (x[j] - x[j - 1]);
    if (s + 1 < n && has_gap[s]) cursor += gap;
  }
  return {PiecewiseAffineMap(std::move(x), slope, std::move(offsets)), b, m};
}

}  // namespace pwc::testing
