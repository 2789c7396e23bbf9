#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwc/symbolic.hpp"

namespace pwc {

/// Indicator word of the orbit of a gap midpoint: bit i is 1 iff
/// f_delta^i(q_j) lies in J = [0, d_1 + delta).
struct GapWord {
  Word bits;
  std::size_t component = 0;  // 1-based
  Scalar midpoint;
  Scalar threshold;  // d_1 + delta = f_delta(0)
  Scalar delta;
  /// Iterates landing exactly on the threshold.  Impossible under a passing
  /// certificate; a nonzero count means the depth used was insufficient.
  std::size_t threshold_hits = 0;

  std::size_t depth() const { return bits.empty() ? 0 : bits.size() - 1; }
};

std::vector<GapWord> gap_words(const DeltaFamily& fam, const Scalar& delta, std::size_t K);

/// bits[i + 1] == eta(coding[i]) for every gap-midpoint coding of f_delta,
/// where eta(i) = 1 iff branch i's image lies in [0, f_delta(0)).
std::vector<Letter> eta_table(const PiecewiseAffineMap& g);

struct Reconstruction {
  Scalar value;        // -d_1 + L * sum_j sum_{i <= K} w_i^(j) b^-i
  Scalar partial_sum;  // value + d_1
  std::size_t depth = 0;
  Scalar tail_bound;   // b^-K
  long certificate_depth = -1;
  /// |value - delta| <= tail_bound is guaranteed only when the certificate
  /// reaches depth K.
  bool guaranteed = false;
};

Reconstruction reconstruct_delta(const DeltaFamily& fam, const std::vector<GapWord>& words, std::size_t K,
                                 long certificate_depth);

struct SumWord {
  Word letters;
  std::size_t constituents = 0;
};

SumWord sum_words(const std::vector<GapWord>& words, int b);
SumWord sum_words(const std::vector<Word>& words, int b);

struct RhoValue {
  Scalar value;  // sum_{i <= K} w_i b^-(i+1)
  Scalar tail;   // b^-(K+1), the supremum of what the remaining letters add
};

RhoValue rho(const Word& w, int b, std::size_t K);

struct EntropyEstimate {
  int b = 2;
  std::vector<std::uint64_t> counts;  // p_w(k)
  std::vector<long double> values;    // log_b(p_w(k)) / k
};

EntropyEstimate entropy_profile(const Word& w, int b, std::size_t k_max, std::optional<std::size_t> margin = {});

struct BoundsReport {
  std::size_t k_max = 0;
  long certificate_depth = -1;
  bool certified = false;  // certificate depth >= k_max
  bool word_bound = true;     // p_{w^(j)}(k) <= (n-1)k + 2
  bool product_bound = true;  // p_sum(k) <= prod_j p_{w^(j)}(k)
  bool power_bound = true;    // prod_j p_{w^(j)}(k) <= ((n-1)k + 2)^m
  std::vector<std::string> violations;

  bool ok() const { return word_bound && product_bound && power_bound; }
};

BoundsReport complexity_bounds_check(const std::vector<GapWord>& words, std::size_t n, int b, std::size_t k_max,
                                     long certificate_depth);

}  // namespace pwc
