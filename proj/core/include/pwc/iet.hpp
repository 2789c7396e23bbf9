#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pwc/symbolic.hpp"

namespace pwc {

/// T(y) = y + c_i on [y_{i-1}, y_i), validated to tile [0, 1) exactly.
class IntervalExchange {
 public:
  /// Full breakpoint list 0 = y_0 < ... < y_n = 1.
  IntervalExchange(std::vector<Scalar> breakpoints, std::vector<Scalar> constants);

  /// Interior breakpoints y_1 ... y_{n-1} only.
  static IntervalExchange build(std::vector<Scalar> interior, std::vector<Scalar> constants);
  /// The exchange of intervals with the given lengths, placed in the image
  /// in the order given by perm (perm[i] = 1-based image slot of interval i).
  static IntervalExchange from_permutation(const std::vector<Scalar>& lengths, const std::vector<int>& perm);

  std::size_t size() const { return constants_.size(); }
  const std::vector<Scalar>& breakpoints() const { return breakpoints_; }
  std::span<const Scalar> discontinuities() const {
    return std::span<const Scalar>(breakpoints_).subspan(1, breakpoints_.size() - 2);
  }
  const std::vector<Scalar>& constants() const { return constants_; }
  std::vector<Scalar> lengths() const;
  /// perm[i] = position (1-based) of the image of interval i + 1.
  const std::vector<int>& permutation() const { return perm_; }
  bool irreducible() const;

  int branch_of(const Scalar& y) const;
  Evaluation evaluate(const Scalar& y) const;
  Scalar operator()(const Scalar& y) const { return evaluate(y).value; }

 private:
  std::vector<Scalar> breakpoints_;
  std::vector<Scalar> constants_;
  std::vector<int> perm_;
};

enum class KeaneVerdict { independent, dependent, inapplicable };
std::string_view to_string(KeaneVerdict v);

/// Lengths independent over Q, decided exactly on (rational, sqrt(d))
/// coordinates.  Inapplicable for n = 1 or a reducible permutation.
KeaneVerdict keane_criterion(const IntervalExchange& T);

struct IdocWitness {
  std::size_t source;   // i with T^k(y_i) = y_j (1-based)
  std::size_t target;   // j
  std::size_t iterate;  // k >= 1
};

struct IdocReport {
  std::size_t depth = 0;
  bool no_collision = true;
  std::optional<IdocWitness> witness;
  KeaneVerdict keane = KeaneVerdict::inapplicable;

  /// The finite-depth orbit check together with Keane independence.
  bool pass() const { return no_collision && keane == KeaneVerdict::independent; }
};

IdocReport idoc_certify(const IntervalExchange& T, std::size_t K);
bool replay_witness(const IntervalExchange& T, const IdocWitness& witness);

/// Natural T-coding of x, prefix length defaults to 64 * (k_max + 1) so
/// that every factor of length <= k_max of a minimal exchange shows up.
Word iet_coding(const IntervalExchange& T, const Scalar& x, std::size_t length);
ComplexityProfile iet_coding_complexity(const IntervalExchange& T, const Scalar& x, std::size_t k_max,
                                        std::size_t prefix = 0);

}  // namespace pwc
