#include "pwc/badic.hpp"

#include <algorithm>
#include <cmath>

namespace pwc {

std::vector<GapWord> gap_words(const DeltaFamily& fam, const Scalar& delta, std::size_t K) {
  const PiecewiseAffineMap g = rotate_compose(fam, delta);
  const Scalar threshold = g(Scalar(0));
  std::vector<GapWord> out;
  for (std::size_t j = 0; j < fam.gap.size(); ++j) {
    GapWord w;
    w.component = j + 1;
    w.midpoint = fam.gap.components[j].shifted(delta).midpoint();
    w.threshold = threshold;
    w.delta = delta;
    w.bits.reserve(K + 1);
    Scalar x = w.midpoint;
    for (std::size_t i = 0; i <= K; ++i) {
      if (x == threshold) ++w.threshold_hits;
      w.bits.push_back(x < threshold ? 1 : 0);
      if (i < K) x = g(x);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Letter> eta_table(const PiecewiseAffineMap& g) {
  const Scalar threshold = g(Scalar(0));
  std::vector<Letter> eta(g.branch_count() + 1, 0);
  for (std::size_t i = 1; i <= g.branch_count(); ++i) {
    eta[i] = g.image(static_cast<int>(i)).hi <= threshold ? 1 : 0;
  }
  return eta;
}

Reconstruction reconstruct_delta(const DeltaFamily& fam, const std::vector<GapWord>& words, std::size_t K,
                                 long certificate_depth) {
  if (words.size() != fam.m())
    throw Error(ErrorKind::inconsistent_words,
                "expected " + std::to_string(fam.m()) + " words, got " + std::to_string(words.size()));
  for (const auto& w : words) {
    if (w.bits.size() < K + 1)
      throw Error(ErrorKind::inconsistent_words, "word " + std::to_string(w.component) + " is shorter than depth " +
                                                     std::to_string(K));
    if (w.delta != words.front().delta) throw Error(ErrorKind::inconsistent_words, "words come from different delta");
    if (w.bits.size() != words.front().bits.size())
      throw Error(ErrorKind::inconsistent_words, "words have different depths");
  }

  const Scalar inv_b = Scalar::rational(1, fam.b);
  Scalar sum(0);
  Scalar weight(1);
  for (std::size_t i = 0; i <= K; ++i) {
    long ones = 0;
    for (const auto& w : words) ones += w.bits[i];
    if (ones != 0) sum += weight * Scalar(ones);
    weight *= inv_b;
  }
  Reconstruction r;
  r.partial_sum = fam.gap_length * sum;
  r.value = r.partial_sum - fam.base.offsets().front();
  r.depth = K;
  r.tail_bound = pow(inv_b, static_cast<unsigned>(K));
  r.certificate_depth = certificate_depth;
  r.guaranteed = certificate_depth >= 0 && static_cast<std::size_t>(certificate_depth) >= K;
  return r;
}

SumWord sum_words(const std::vector<Word>& words, int b) {
  SumWord out;
  out.constituents = words.size();
  if (words.empty()) return out;
  if (words.size() > static_cast<std::size_t>(b - 1))
    throw Error(ErrorKind::alphabet_too_large,
                std::to_string(words.size()) + " words exceed the alphabet {0, ..., " + std::to_string(b - 1) + "}");
  const std::size_t len = words.front().size();
  out.letters.assign(len, 0);
  for (const auto& w : words) {
    if (w.size() != len) throw Error(ErrorKind::inconsistent_words, "words have different depths");
    for (std::size_t i = 0; i < len; ++i) out.letters[i] = static_cast<Letter>(out.letters[i] + w[i]);
  }
  return out;
}

SumWord sum_words(const std::vector<GapWord>& words, int b) {
  std::vector<Word> bits;
  bits.reserve(words.size());
  for (const auto& w : words) bits.push_back(w.bits);
  return sum_words(bits, b);
}

RhoValue rho(const Word& w, int b, std::size_t K) {
  const Scalar inv_b = Scalar::rational(1, b);
  Scalar weight = inv_b;
  Scalar value(0);
  for (std::size_t i = 0; i <= K; ++i) {
    const Letter c = i < w.size() ? w[i] : 0;
    if (c >= b) throw Error(ErrorKind::letter_out_of_range, "letter " + std::to_string(c) + " is not below " +
                                                                std::to_string(b));
    if (c != 0) value += weight * Scalar(static_cast<long>(c));
    weight *= inv_b;
  }
  return {value, weight * Scalar(b)};  // (b - 1) sum_{i > K} b^-(i+1) = b^-(K+1)
}

EntropyEstimate entropy_profile(const Word& w, int b, std::size_t k_max, std::optional<std::size_t> margin) {
  ComplexityProfile p = word_complexity(w, k_max, margin);
  EntropyEstimate out;
  out.b = b;
  out.counts = p.values;
  const long double log_b = std::log(static_cast<long double>(b));
  for (std::size_t k = 1; k <= k_max; ++k) {
    out.values.push_back(std::log(static_cast<long double>(p(k))) / log_b / static_cast<long double>(k));
  }
  return out;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

BoundsReport complexity_bounds_check(const std::vector<GapWord>& words, std::size_t n, int b, std::size_t k_max,
                                     long certificate_depth) {
  BoundsReport r;
  r.k_max = k_max;
  r.certificate_depth = certificate_depth;
  r.certified = certificate_depth >= 0 && static_cast<std::size_t>(certificate_depth) >= k_max;
  const SumWord sum = sum_words(words, b);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::uint64_t ceiling = (n - 1) * k + 2;
    std::uint64_t product = 1;
    std::uint64_t power = 1;
    for (const auto& w : words) {
      const std::uint64_t p = factor_count(w.bits, k);
      if (p > ceiling) {
        r.word_bound = false;
        r.violations.push_back("p_w" + std::to_string(w.component) + "(" + std::to_string(k) +
                               ") = " + std::to_string(p) + " > " + std::to_string(ceiling));
      }
      product = saturating_mul(product, p);
      power = saturating_mul(power, ceiling);
    }
    const std::uint64_t ps = factor_count(sum.letters, k);
    if (ps > product) {
      r.product_bound = false;
      r.violations.push_back("p_sum(" + std::to_string(k) + ") = " + std::to_string(ps) + " > product " +
                             std::to_string(product));
    }
    if (product > power) {
      r.power_bound = false;
      r.violations.push_back("product(" + std::to_string(k) + ") = " + std::to_string(product) + " > " +
                             std::to_string(power));
    }
  }
  return r;
}

}  // namespace pwc
