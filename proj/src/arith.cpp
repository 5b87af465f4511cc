#include "optoa/arith.hpp"

#include "optoa/error.hpp"

namespace optoa {

std::int64_t floor_of(const Rational& q) {
  // boost::rational keeps the denominator positive.
  std::int64_t num = q.numerator();
  std::int64_t den = q.denominator();
  std::int64_t quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) fail(Errc::too_large, "integer overflow in multiplication");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(Errc::too_large, "integer overflow in addition");
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  require(exp >= 0, Errc::invalid_argument, "negative exponent");
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::int64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) {
    // out * (n - r + i) is divisible by i at every step.
    out = checked_mul(out, n - r + i) / i;
  }
  return out;
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace optoa
