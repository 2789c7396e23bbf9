#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pwc/iet.hpp"

namespace pwc {

struct SemiconjugacyOptions {
  std::size_t samples = 100000;  // N orbit points averaged
  std::size_t k_iter = 60;       // burn-in, also the required certificate depth
  std::size_t grid = 4096;       // h is reported on x = i / grid
  std::size_t window = 128;      // coding letters past the longest segment, extending every suffix
  std::size_t transfer_samples = 100;
  std::size_t transfer_depth = 10;
};

/// Numerical h with h o g ~ T o h.  h is the distribution function of the
/// empirical measure of one long orbit started in the gap, so it is
/// non-decreasing with h(0) = 0 by construction.  The orbit segment is
/// closed up: its length is the return time in [N, 3N/2] whose coding agrees
/// longest with the start.
struct Semiconjugacy {
  SemiconjugacyOptions options;
  long certificate_depth = -1;
  std::size_t orbit_length = 0;  // points averaged, in [N, 3N/2]
  std::size_t closure = 0;       // common coding prefix of z_0 and z_orbit_length

  std::vector<Scalar> h_grid;  // h(i / grid), i = 0..grid
  std::vector<Scalar> yhat;    // 0 = y_0, h(x_1), ..., h(x_{n-1}), 1
  std::vector<Scalar> constants;  // fitted c_i, one interior sample per branch
  std::optional<IntervalExchange> iet;  // exact exchange with the fitted order

  Scalar tolerance;       // 2 / grid
  Scalar residual;        // max_k |h(g z_k) - T(h(z_k))| over orbit samples
  Scalar tiling_error;    // distance of the fitted images from a tiling
  Scalar snap_error;      // max |c_i - iet constant|
  Scalar gap_jump;        // max rise of h across a checked gap iterate
  std::size_t transfer_matches = 0;
  bool monotone = true;
  bool spacing_collapse = false;  // some yhat spacing below 1 / grid

  bool residual_ok() const { return residual <= tolerance; }
  bool transfer_ok() const { return transfer_matches == options.transfer_samples; }
  bool ok() const {
    return monotone && residual_ok() && tiling_error <= tolerance && iet && transfer_ok();
  }
};

/// Refuses (refused_uncertified) unless g certifies to depth >= k_iter.
Semiconjugacy estimate_semiconjugacy(const PiecewiseAffineMap& g, const SemiconjugacyOptions& options = {});

}  // namespace pwc
