#pragma once

#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pwc/exactnum.hpp"
#include "pwc/symbolic.hpp"

namespace pwc::testing {

/// Distinct length-k factors by brute force.
inline std::size_t brute_factor_count(const Word& w, std::size_t k) {
  std::set<std::vector<Letter>> seen;
  for (std::size_t i = 0; i + k <= w.size(); ++i) seen.emplace(w.begin() + i, w.begin() + i + k);
  return seen.size();
}

/// Prefix of the Fibonacci word, fixed point of 0 -> 01, 1 -> 0.
inline Word fibonacci_word(std::size_t length) {
  Word w{0};
  while (w.size() < length) {
    Word next;
    for (Letter c : w) {
      next.push_back(0);
      if (c == 0) next.push_back(1);
    }
    w.swap(next);
  }
  w.resize(length);
  return w;
}

/// Sturmian parameter of the golden rotation psi = (3 - sqrt 5)/2 through
/// the rotation number formula for Example (a):
///   delta*(psi) = -2/3 + (1/2) sum_{i < terms} w_i 2^-i,
///   w_i = ceil((i + 1) psi) - ceil(i psi).
/// floor(i psi) is computed with an integer square root of 5 i^2, so this
/// oracle shares no code with the library's quadratic arithmetic.
inline Scalar golden_delta_star(unsigned terms) {
  auto ceil_i_psi = [](unsigned long i) -> mpz_class {
    if (i == 0) return 0;
    mpz_class s;
    mpz_class five_i2 = mpz_class(5) * i * i;
    mpz_sqrt(s.get_mpz_t(), five_i2.get_mpz_t());
    mpz_class t = mpz_class(3) * i - s - 1;
    mpz_class f;
    mpz_fdiv_q_ui(f.get_mpz_t(), t.get_mpz_t(), 2);
    return f + 1;
  };
  mpq_class sum = 0;
  for (unsigned i = 0; i < terms; ++i) {
    mpz_class w = ceil_i_psi(i + 1) - ceil_i_psi(i);
    mpz_class den = 1;
    den <<= i;
    sum += mpq_class(w, den);
  }
  sum.canonicalize();
  return Scalar(mpq_class(mpq_class(-2, 3) + sum / 2));
}

}  // namespace pwc::testing
