#include "pwc/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace pwc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::incompatible_field: return "incompatible-field";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_map: return "invalid-map";
    case ErrorKind::not_injective: return "not-injective";
    case ErrorKind::unequal_gap_lengths: return "unequal-gap-lengths";
    case ErrorKind::no_circle_gluing: return "no-circle-gluing";
    case ErrorKind::slope_not_inverse_base: return "slope-not-1-over-b";
    case ErrorKind::delta_outside_window: return "delta-outside-window";
    case ErrorKind::out_of_domain: return "out-of-domain";
    case ErrorKind::injectivity_violation: return "injectivity-violation";
    case ErrorKind::prefix_too_short: return "prefix-too-short";
    case ErrorKind::gap_mismatch: return "gap-mismatch";
    case ErrorKind::inconsistent_words: return "inconsistent-words";
    case ErrorKind::alphabet_too_large: return "alphabet-too-large";
    case ErrorKind::letter_out_of_range: return "letter-out-of-range";
    case ErrorKind::invalid_iet: return "invalid-iet";
    case ErrorKind::refused_uncertified: return "refused-uncertified-map";
    case ErrorKind::degenerate_branch: return "degenerate-branch";
    case ErrorKind::invalid_config: return "invalid-config";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

namespace {

int sgn_of(const mpq_class& q) { return sgn(q); }

// floor(sqrt(t)) for rational t >= 0.
mpz_class isqrt_floor(const mpq_class& t) {
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), whole.get_mpz_t());
  return root;
}

mpz_class floor_of(const mpq_class& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Strict "[+-]digits[/digits]".
mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den)))
    throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_square_free(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(mpq_class value) : a_(std::move(value)) { a_.canonicalize(); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::quadratic(mpq_class a, mpq_class b, long d) {
  if (!is_square_free(d))
    throw Error(ErrorKind::parse, "radicand " + std::to_string(d) + " is not square-free >= 2");
  Scalar out;
  out.a_ = std::move(a);
  out.b_ = std::move(b);
  out.a_.canonicalize();
  out.b_.canonicalize();
  out.d_ = d;
  out.normalize();
  return out;
}

void Scalar::normalize() {
  if (d_ != 0 && sgn(b_) == 0) d_ = 0;
  if (d_ == 0) b_ = 0;
}

long Scalar::common_radicand(const Scalar& rhs) const {
  if (d_ == 0) return rhs.d_;
  if (rhs.d_ == 0 || rhs.d_ == d_) return d_;
  throw Error(ErrorKind::incompatible_field,
              "sqrt(" + std::to_string(d_) + ") mixed with sqrt(" + std::to_string(rhs.d_) + ")");
}

int Scalar::sign() const {
  const int sa = sgn_of(a_);
  if (d_ == 0) return sa;
  const int sb = sgn_of(b_);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d; equality is impossible for square-free d.
  mpq_class lhs = a_ * a_;
  mpq_class rhs = b_ * b_ * d_;
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

bool Scalar::is_integer() const { return d_ == 0 && a_.get_den() == 1; }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const long d = common_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  const long d = common_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  const long d = common_radicand(rhs);
  if (d == 0) {
    a_ *= rhs.a_;
    return *this;
  }
  mpq_class a = a_ * rhs.a_ + b_ * rhs.b_ * d;
  mpq_class b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  const long d = common_radicand(rhs);
  if (rhs.is_zero()) throw Error(ErrorKind::division_by_zero, "division by zero");
  if (rhs.d_ == 0) {
    const mpq_class divisor = rhs.a_;
    a_ /= divisor;
    b_ /= divisor;
    d_ = d;
    normalize();
    return *this;
  }
  // Multiply by the conjugate: (a + b r)(c - e r) / (c^2 - e^2 d).
  mpq_class norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * d;
  mpq_class a = (a_ * rhs.a_ - b_ * rhs.b_ * d) / norm;
  mpq_class b = (b_ * rhs.a_ - a_ * rhs.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.d_ != 0 && rhs.d_ != 0 && lhs.d_ != rhs.d_) lhs.common_radicand(rhs);
  return lhs.d_ == rhs.d_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.d_ == 0 && rhs.d_ == 0) {
    const int c = cmp(lhs.a_, rhs.a_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const int s = (lhs - rhs).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare(const Scalar& lhs, const Scalar& rhs) { return lhs <=> rhs; }

mpz_class Scalar::floor_integer() const {
  if (d_ == 0) return floor_of(a_);
  // floor(b sqrt(d)) from an integer square root of b^2 d (never a perfect square).
  mpq_class t = b_ * b_ * d_;
  mpz_class root = isqrt_floor(t);
  mpz_class irr = sgn(b_) > 0 ? root : mpz_class(-root - 1);
  mpz_class candidate = floor_of(a_) + irr;
  // x lies in [candidate, candidate + 2); decide the upper half exactly.
  if (*this >= Scalar(mpq_class(candidate + 1))) return candidate + 1;
  return candidate;
}

Scalar Scalar::frac() const { return *this - floor(); }

double Scalar::to_double() const {
  double v = a_.get_d();
  if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

long double Scalar::to_long_double() const {
  // Split off the integer part so the fraction keeps full mantissa precision.
  const mpz_class whole = floor_of(a_);
  mpq_class rest = a_ - whole;
  long double v = static_cast<long double>(whole.get_d()) + static_cast<long double>(rest.get_d());
  if (d_ != 0) v += static_cast<long double>(b_.get_d()) * std::sqrt(static_cast<long double>(d_));
  return v;
}

std::string Scalar::str() const {
  if (d_ == 0) return a_.get_str();
  return a_.get_str() + "+" + b_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
}

Scalar Scalar::parse(std::string_view raw) {
  const std::string_view text = trim(raw);
  if (text.empty()) throw Error(ErrorKind::parse, "empty scalar");
  const auto root = text.find("sqrt(");
  if (root == std::string_view::npos) return Scalar(parse_rational(text));

  if (text.back() != ')') throw Error(ErrorKind::parse, "malformed quadratic '" + std::string(text) + "'");
  std::string_view radicand = text.substr(root + 5, text.size() - root - 6);
  if (!is_digits(radicand)) throw Error(ErrorKind::parse, "malformed radicand in '" + std::string(text) + "'");
  const long d = std::stol(std::string(radicand));

  std::string_view head = text.substr(0, root);
  if (!head.empty() && head.back() == '*') {
    head.remove_suffix(1);
    if (head.empty() || head.back() == '+' || head.back() == '-')
      throw Error(ErrorKind::parse, "missing coefficient in '" + std::string(text) + "'");
  }

  // Split "a+b" / "a-b" at the first sign that follows a digit.
  std::string_view a_text;
  std::string_view b_text = head;
  bool negate_b = false;
  for (std::size_t i = 1; i < head.size(); ++i) {
    if ((head[i] == '+' || head[i] == '-') && std::isdigit(static_cast<unsigned char>(head[i - 1]))) {
      a_text = head.substr(0, i);
      negate_b = head[i] == '-';
      b_text = head.substr(i + 1);
      break;
    }
  }
  mpq_class a = a_text.empty() ? mpq_class(0) : parse_rational(a_text);
  mpq_class b;
  if (b_text.empty() || b_text == "+") {
    b = 1;
  } else if (b_text == "-") {
    b = -1;
  } else {
    b = parse_rational(b_text);
  }
  if (negate_b) b = -b;
  return quadratic(std::move(a), std::move(b), d);
}

std::size_t Scalar::hash() const noexcept {
  auto mix = [](std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  };
  auto hash_mpz = [&](std::size_t seed, mpz_srcptr z) {
    seed = mix(seed, static_cast<std::size_t>(mpz_sgn(z) + 1));
    const std::size_t limbs = mpz_size(z);
    seed = mix(seed, limbs);
    for (std::size_t i = 0; i < limbs; ++i) seed = mix(seed, static_cast<std::size_t>(mpz_getlimbn(z, i)));
    return seed;
  };
  std::size_t h = static_cast<std::size_t>(d_);
  h = hash_mpz(h, a_.get_num_mpz_t());
  h = hash_mpz(h, a_.get_den_mpz_t());
  if (d_ != 0) {
    h = hash_mpz(h, b_.get_num_mpz_t());
    h = hash_mpz(h, b_.get_den_mpz_t());
  }
  return h;
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar out(1);
  Scalar sq = base;
  while (exponent != 0) {
    if (exponent & 1U) out *= sq;
    exponent >>= 1U;
    if (exponent != 0) sq *= sq;
  }
  return out;
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace pwc
