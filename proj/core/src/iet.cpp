#include "pwc/iet.hpp"

#include <algorithm>
#include <numeric>

namespace pwc {

IntervalExchange::IntervalExchange(std::vector<Scalar> breakpoints, std::vector<Scalar> constants)
    : breakpoints_(std::move(breakpoints)), constants_(std::move(constants)) {
  const std::size_t n = constants_.size();
  if (n == 0) throw Error(ErrorKind::invalid_iet, "exchange needs at least one interval");
  if (breakpoints_.size() != n + 1)
    throw Error(ErrorKind::invalid_iet, "expected " + std::to_string(n + 1) + " breakpoints, got " +
                                            std::to_string(breakpoints_.size()));
  if (breakpoints_.front() != Scalar(0) || breakpoints_.back() != Scalar(1))
    throw Error(ErrorKind::invalid_iet, "breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i <= n; ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw Error(ErrorKind::invalid_iet, "breakpoints must be strictly increasing");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return breakpoints_[a] + constants_[a] < breakpoints_[b] + constants_[b];
  });
  Scalar cursor(0);
  perm_.assign(n, 0);
  for (std::size_t slot = 0; slot < n; ++slot) {
    const std::size_t i = order[slot];
    const Scalar lo = breakpoints_[i] + constants_[i];
    if (lo < cursor) throw Error(ErrorKind::invalid_iet, "images overlap at " + lo.str());
    if (cursor < lo) throw Error(ErrorKind::invalid_iet, "images leave [" + cursor.str() + ", " + lo.str() + ") uncovered");
    cursor = breakpoints_[i + 1] + constants_[i];
    perm_[i] = static_cast<int>(slot + 1);
  }
  if (cursor != Scalar(1)) throw Error(ErrorKind::invalid_iet, "images end at " + cursor.str() + ", not 1");
}

IntervalExchange IntervalExchange::build(std::vector<Scalar> interior, std::vector<Scalar> constants) {
  interior.insert(interior.begin(), Scalar(0));
  interior.emplace_back(1);
  return IntervalExchange(std::move(interior), std::move(constants));
}

IntervalExchange IntervalExchange::from_permutation(const std::vector<Scalar>& lengths, const std::vector<int>& perm) {
  const std::size_t n = lengths.size();
  if (perm.size() != n) throw Error(ErrorKind::invalid_iet, "permutation and lengths differ in size");
  std::vector<Scalar> breakpoints{Scalar(0)};
  for (const auto& l : lengths) breakpoints.push_back(breakpoints.back() + l);
  std::vector<Scalar> constants;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar image_lo(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (perm[j] < perm[i]) image_lo += lengths[j];
    }
    constants.push_back(image_lo - breakpoints[i]);
  }
  return IntervalExchange(std::move(breakpoints), std::move(constants));
}

std::vector<Scalar> IntervalExchange::lengths() const {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) out.push_back(breakpoints_[i] - breakpoints_[i - 1]);
  return out;
}

bool IntervalExchange::irreducible() const {
  int top = 0;
  for (std::size_t k = 0; k + 1 < perm_.size(); ++k) {
    top = std::max(top, perm_[k]);
    if (top == static_cast<int>(k + 1)) return false;
  }
  return true;
}

int IntervalExchange::branch_of(const Scalar& y) const {
  if (y < Scalar(0) || !(y < Scalar(1))) throw Error(ErrorKind::out_of_domain, y.str() + " is not in [0, 1)");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), y);
  return static_cast<int>(it - breakpoints_.begin());
}

Evaluation IntervalExchange::evaluate(const Scalar& y) const {
  const int branch = branch_of(y);
  return {y + constants_[static_cast<std::size_t>(branch - 1)], branch};
}

std::string_view to_string(KeaneVerdict v) {
  switch (v) {
    case KeaneVerdict::independent: return "independent";
    case KeaneVerdict::dependent: return "dependent";
    case KeaneVerdict::inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

KeaneVerdict keane_criterion(const IntervalExchange& T) {
  const std::size_t n = T.size();
  if (n < 2 || !T.irreducible()) return KeaneVerdict::inapplicable;
  // Lengths live in Q + Q*sqrt(d), a 2-dimensional Q-space.
  std::vector<std::vector<mpq_class>> rows(2, std::vector<mpq_class>(n));
  const auto lengths = T.lengths();
  for (std::size_t i = 0; i < n; ++i) {
    rows[0][i] = lengths[i].rational_part();
    rows[1][i] = lengths[i].irrational_coeff();
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const mpq_class factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank == n ? KeaneVerdict::independent : KeaneVerdict::dependent;
}

IdocReport idoc_certify(const IntervalExchange& T, std::size_t K) {
  IdocReport report;
  report.depth = K;
  report.keane = keane_criterion(T);
  const auto disc = T.discontinuities();
  std::vector<Scalar> points(disc.begin(), disc.end());
  for (std::size_t k = 1; k <= K && report.no_collision; ++k) {
    for (std::size_t i = 0; i < points.size() && report.no_collision; ++i) {
      points[i] = T(points[i]);
      for (std::size_t j = 0; j < disc.size(); ++j) {
        if (points[i] == disc[j]) {
          report.no_collision = false;
          report.witness = IdocWitness{i + 1, j + 1, k};
          break;
        }
      }
    }
  }
  return report;
}

bool replay_witness(const IntervalExchange& T, const IdocWitness& witness) {
  const auto disc = T.discontinuities();
  if (witness.source == 0 || witness.source > disc.size() || witness.target == 0 || witness.target > disc.size())
    return false;
  Scalar y = disc[witness.source - 1];
  for (std::size_t k = 0; k < witness.iterate; ++k) y = T(y);
  return witness.iterate > 0 && y == disc[witness.target - 1];
}

Word iet_coding(const IntervalExchange& T, const Scalar& x, std::size_t length) {
  Word w;
  w.reserve(length);
  Scalar y = x;
  for (std::size_t i = 0; i < length; ++i) {
    Evaluation e = T.evaluate(y);
    w.push_back(static_cast<Letter>(e.branch));
    y = std::move(e.value);
  }
  return w;
}

ComplexityProfile iet_coding_complexity(const IntervalExchange& T, const Scalar& x, std::size_t k_max,
                                        std::size_t prefix) {
  if (prefix == 0) prefix = 64 * (k_max + 1);
  return word_complexity(iet_coding(T, x, prefix), k_max);
}

}  // namespace pwc
