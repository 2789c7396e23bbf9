#include "pwc/semiconj.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace pwc {

namespace {

/// rank[i] is the position of the suffix letters[i..] in lexicographic
/// order, a suffix that is a prefix of another sorting first.  Prefix
/// doubling stops once every rank is distinct.
std::vector<std::uint32_t> suffix_ranks(const std::vector<Letter>& letters) {
  const std::size_t total = letters.size();
  std::vector<std::uint32_t> rank(letters.begin(), letters.end());
  std::vector<std::uint32_t> next(total);
  std::vector<std::size_t> order(total);
  for (std::size_t len = 1;; len *= 2) {
    auto second = [&](std::size_t i) { return i + len < total ? rank[i + len] + 1 : 0U; };
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rank[a] != rank[b] ? rank[a] < rank[b] : second(a) < second(b);
    });
    std::uint32_t r = 0;
    for (std::size_t p = 0; p < total; ++p) {
      if (p > 0 && (rank[order[p - 1]] != rank[order[p]] || second(order[p - 1]) != second(order[p]))) ++r;
      next[order[p]] = r;
    }
    rank.swap(next);
    if (r + 1 == total || len >= total) break;
  }
  return rank;
}

/// z[k] = length of the longest common prefix of s and s[k..].
std::vector<std::size_t> z_function(const std::vector<Letter>& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n > 0) z[0] = n;
  for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

}  // namespace

Semiconjugacy estimate_semiconjugacy(const PiecewiseAffineMap& g, const SemiconjugacyOptions& options) {
  std::size_t N = options.samples;
  const std::size_t depth = options.transfer_depth;
  if (N < 2 || options.grid == 0 || options.transfer_samples == 0 || N <= depth + options.transfer_samples)
    throw Error(ErrorKind::invalid_config, "semiconjugacy needs more samples than transfer checks");

  GapSet gap = g.gap_set();
  Certificate cert = certify(g, gap, options.k_iter);
  if (!cert.pass) {
    std::string why = "map fails certification at depth " + std::to_string(cert.certified_depth + 1);
    if (cert.witness)
      why += " (" + std::string(to_string(cert.witness->kind)) + " at x_" +
             std::to_string(cert.witness->discontinuity) + " = " + cert.witness->point.str() + ")";
    throw Error(ErrorKind::refused_uncertified, why);
  }

  Semiconjugacy out;
  out.options = options;
  out.certificate_depth = cert.certified_depth;
  const std::size_t n = g.branch_count();
  const std::size_t grid = options.grid;
  const std::size_t window = options.window;
  const std::size_t longest = N + N / 2;
  const std::size_t total = longest + window;

  Scalar z = gap.components.front().midpoint();
  for (std::size_t k = 0; k < options.k_iter; ++k) z = g(z);
  std::vector<Letter> theta(total);
  std::vector<std::size_t> cell(longest);
  const Scalar scale(static_cast<long>(grid));
  for (std::size_t k = 0; k < total; ++k) {
    if (k < longest) cell[k] = (z * scale).floor_integer().get_ui();
    Evaluation e = g.evaluate(z);
    theta[k] = static_cast<Letter>(e.branch);
    z = std::move(e.value);
  }

  // Average over the first return in [N, 3N/2] that comes closest to the
  // start; a closed-up segment makes the empirical measure nearly invariant.
  {
    const std::vector<std::size_t> lcp = z_function(theta);
    std::size_t best = N;
    for (std::size_t k = N; k <= longest; ++k) {
      if (lcp[k] > lcp[best]) best = k;
    }
    out.orbit_length = best;
    out.closure = lcp[best];
  }
  N = out.orbit_length;
  cell.resize(N);

  // Branches are increasing and ordered, so points compare like their codings.
  // g contracts, so points close in h share long codings: rank whole suffixes.
  const std::vector<std::uint32_t> rank = suffix_ranks(theta);
  std::vector<std::uint32_t> sorted(rank.begin(), rank.begin() + static_cast<std::ptrdiff_t>(N));
  std::sort(sorted.begin(), sorted.end());
  std::vector<long> h(N);  // h(z_k) * N
  for (std::size_t k = 0; k < N; ++k)
    h[k] = std::lower_bound(sorted.begin(), sorted.end(), rank[k]) - sorted.begin();

  const Scalar inv_n = Scalar::rational(1, static_cast<long>(N));
  std::vector<long> Y(n + 1, 0);
  for (std::size_t k = 0; k < N; ++k) ++Y[theta[k]];
  for (std::size_t i = 1; i <= n; ++i) Y[i] += Y[i - 1];
  for (long y : Y) out.yhat.push_back(Scalar(y) * inv_n);

  std::vector<std::vector<std::size_t>> by_branch(n + 1);
  for (std::size_t k = 0; k + 1 < N; ++k) by_branch[theta[k]].push_back(k);
  std::vector<long> C(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    auto& ks = by_branch[i];
    if (ks.empty()) throw Error(ErrorKind::degenerate_branch, "no orbit sample in branch " + std::to_string(i));
    auto mid = ks.begin() + static_cast<std::ptrdiff_t>(ks.size() / 2);
    std::nth_element(ks.begin(), mid, ks.end(), [&](std::size_t a, std::size_t b) { return h[a] < h[b]; });
    C[i] = h[*mid + 1] - h[*mid];
    out.constants.push_back(Scalar(C[i]) * inv_n);
  }

  long worst = 0;
  for (std::size_t k = 0; k + 1 < N; ++k) worst = std::max(worst, std::abs(h[k + 1] - h[k] - C[theta[k]]));
  out.tolerance = Scalar::rational(2, static_cast<long>(grid));
  out.residual = Scalar(worst) * inv_n;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return Y[a - 1] + C[a] < Y[b - 1] + C[b]; });
  long tiling = std::abs(Y[order.front() - 1] + C[order.front()]);
  for (std::size_t s = 1; s < n; ++s)
    tiling = std::max(tiling, std::abs(Y[order[s] - 1] + C[order[s]] - (Y[order[s - 1]] + C[order[s - 1]])));
  tiling = std::max(tiling, std::abs(Y[order.back()] + C[order.back()] - static_cast<long>(N)));
  out.tiling_error = Scalar(tiling) * inv_n;

  std::vector<Scalar> lengths;
  std::vector<int> perm(n);
  for (std::size_t s = 0; s < n; ++s) perm[order[s] - 1] = static_cast<int>(s + 1);
  bool empty_branch = false;
  long min_spacing = static_cast<long>(N);
  for (std::size_t i = 1; i <= n; ++i) {
    lengths.push_back(out.yhat[i] - out.yhat[i - 1]);
    min_spacing = std::min(min_spacing, Y[i] - Y[i - 1]);
    if (Y[i] == Y[i - 1]) empty_branch = true;
  }
  out.spacing_collapse = Scalar(min_spacing) * inv_n < Scalar::rational(1, static_cast<long>(grid));
  out.snap_error = Scalar(0);
  if (!empty_branch) {
    out.iet = IntervalExchange::from_permutation(lengths, perm);
    for (std::size_t i = 0; i < n; ++i)
      out.snap_error = max(out.snap_error, abs(out.constants[i] - out.iet->constants()[i]));
  }

  std::vector<long> counts(grid + 1, 0);
  for (std::size_t c : cell) ++counts[c + 1];
  out.h_grid.reserve(grid + 1);
  long running = 0;
  for (std::size_t i = 0; i <= grid; ++i) {
    running += counts[i];
    out.h_grid.push_back(Scalar(running) * inv_n);
    if (i > 0 && out.h_grid[i] < out.h_grid[i - 1]) out.monotone = false;
  }

  // Orbit points never enter an early gap iterate, so h must be flat there.
  out.gap_jump = Scalar(0);
  std::vector<Interval> iterates = gap.components;
  for (std::size_t k = 0; k <= options.k_iter; ++k) {
    for (auto& J : iterates) {
      const long lo = (J.lo * scale).floor_integer().get_si() + 1;
      const long hi = ((J.hi * scale).floor_integer().get_si());
      const long last = Scalar(hi) == J.hi * scale ? hi - 1 : hi;
      if (lo < last)
        out.gap_jump = max(out.gap_jump, out.h_grid[static_cast<std::size_t>(last)] -
                                             out.h_grid[static_cast<std::size_t>(lo)]);
      if (k < options.k_iter) J = g.image_interval(J).pieces.front();
    }
  }

  if (out.iet) {
    const std::size_t stride = (N - depth - 1) / options.transfer_samples;
    for (std::size_t s = 0; s < options.transfer_samples; ++s) {
      const std::size_t k = s * stride;
      Word expected(theta.begin() + static_cast<std::ptrdiff_t>(k),
                    theta.begin() + static_cast<std::ptrdiff_t>(k + depth + 1));
      if (iet_coding(*out.iet, Scalar(h[k]) * inv_n, depth + 1) == expected) ++out.transfer_matches;
    }
  }
  return out;
}

}  // namespace pwc
