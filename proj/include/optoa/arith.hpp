#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace optoa {

// All bound quantities are exact fractions of 64-bit integers.
using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& q);
std::string to_string(const Rational& q);

// Overflow-checked helpers; throw Error(too_large) when the result does not fit.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exp);

// C(n, r); zero when r < 0 or r > n.
std::int64_t binomial(int n, int r);

bool is_prime(std::int64_t q);

}  // namespace optoa
