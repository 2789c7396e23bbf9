#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwc/pwcmap.hpp"

namespace pwc {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// ASCII digits, one per letter (letters must be < 10).
std::string to_string(const Word& w);
Word word_from_string(std::string_view digits);

struct Coding {
  Word word;  // word[i] = branch of g^i(x)
  Scalar source;
  std::string map_id;
};

Coding natural_coding(const PiecewiseAffineMap& g, const Scalar& x, std::size_t K, std::string map_id = {});

/// p(1) ... p(k_max).  For the geometric method, new_points[l] is the number
/// of division points first appearing among the l-th preimages.
struct ComplexityProfile {
  std::vector<std::uint64_t> values;
  std::vector<std::uint64_t> new_points;

  std::size_t k_max() const { return values.size(); }
  std::uint64_t operator()(std::size_t k) const { return values.at(k - 1); }
};

constexpr std::size_t default_margin(std::size_t k_max) { return 4 * k_max; }

/// Number of distinct length-k factors of w.  No length requirement.
std::uint64_t factor_count(const Word& w, std::size_t k);

/// Factor census for k = 1..k_max.  Throws prefix_too_short unless
/// w.size() >= k_max + margin (default 4 * k_max).
ComplexityProfile word_complexity(const Word& w, std::size_t k_max, std::optional<std::size_t> margin = {});

/// 1 + (number of distinct division points in (0, 1) among g^{-l}(x_i),
/// l < k), for k = 1..k_max.  An upper bound for the factor count of every
/// natural coding of g.
ComplexityProfile geometric_complexity(const PiecewiseAffineMap& g, std::size_t k_max);

struct Witness {
  enum class Kind { connection, gap_hits_discontinuity };
  Kind kind;
  std::size_t iterate;        // k
  std::size_t discontinuity;  // j with x_j hit (1-based)
  Scalar point;               // x_j
  std::size_t source = 0;     // connection: i with g^k(x_i) = x_j
  std::size_t gap_component = 0;  // gap hit: component index (1-based)
};

std::string_view to_string(Witness::Kind kind);

/// Finite-depth check that g has no connection g^k(x_i) = x_j and that no
/// gap iterate g^k(G^(j)) meets a discontinuity, for 0 <= k <= depth.
struct Certificate {
  std::size_t depth = 0;
  bool pass = false;
  std::optional<Witness> witness;
  /// Deepest k for which every check succeeded (depth on pass, -1 if k = 0 fails).
  long certified_depth = -1;
  bool disjoint = true;  // all checked gap iterates pairwise disjoint
  Scalar covered_measure;   // Leb of the union of checked gap iterates
  Scalar expected_measure;  // |G| * (1 + l + ... + l^certified_depth)
  /// Pass only: geometric_complexity(k) == (n-1)k + 1 for all k <= depth.
  bool complexity_verified = false;
};

Certificate certify(const PiecewiseAffineMap& g, const GapSet& gap, std::size_t depth);
Certificate certify(const PiecewiseAffineMap& g, std::size_t depth);

/// Re-runs the witness with plain map operations; true iff it reproduces.
bool replay_witness(const PiecewiseAffineMap& g, const GapSet& gap, const Witness& witness);

struct PeriodicityVerdict {
  bool eventually_periodic = false;
  std::size_t witness_k = 0;       // p(k + 1) == p(k)
  std::size_t observed_depth = 0;  // census trusted up to here
};

/// Morse-Hedlund test on a finite prefix.  Factor counts are trusted for
/// k <= observed_depth = (|w| - 1) * 2 / 5, where short-prefix undercounting
/// cannot fake a plateau for the words this library produces.
PeriodicityVerdict morse_hedlund_classify(const Word& w);

/// Letter counts of equal-length factors differ by at most one.
bool is_balanced(const Word& w, Letter letter);

/// Binary word with p(k) = k + 1 for all k <= k_max and balanced factors.
bool is_sturmian_prefix(const Word& w, std::size_t k_max);

}  // namespace pwc
