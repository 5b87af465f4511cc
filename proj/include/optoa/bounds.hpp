#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "optoa/arith.hpp"
#include "optoa/designs.hpp"

namespace optoa {

// lambda n^2 / (k(n-1)+1): the largest possible multiplicity of a repeated row.
Rational rao_repeat_bound(int k, int n, std::int64_t lambda);

// The bound obtained from sum (a_i - alpha)(a_i - alpha - 1) >= 0 over the
// non-repeated rows:
//   lambda (k(k-1) - 2 alpha k n + (alpha^2 + alpha) n^2)
//   / (k(k-1) - 2 alpha k + alpha^2 + alpha).
// Throws Error(invalid_argument) when the denominator is not positive, i.e.
// the bound is not applicable for this alpha.
Rational refined_bound(int k, int n, std::int64_t lambda, int alpha);

std::int64_t floor_bound(int k, int n, std::int64_t lambda);

struct RefinedEntry {
  int alpha = 0;
  std::optional<Rational> value;  // empty when the denominator is not positive
  bool vacuous = false;           // no value, or value >= lambda n^2
};

struct BoundReport {
  int k = 0;
  int n = 0;
  std::int64_t lambda = 0;
  Rational rao_bound;
  std::int64_t floor_bound = 0;
  std::vector<RefinedEntry> refined;  // alpha = 1..k
  std::optional<RefinedEntry> best_refined;

  bool abar_integral() const { return (k - 1) % n == 0 && (k - 1) / n >= 1; }
  // The rational bound is an integer and (k-1)/n is a positive integer.
  bool optimal_possible() const { return rao_bound.denominator() == 1 && abar_integral(); }
};

BoundReport bound_report(int k, int n, std::int64_t lambda);

// All feasible (m, lambda, k, n) with lambda <= lambda_max, ascending in lambda.
std::vector<Quadruple> feasible_quadruples(int k, int n, std::int64_t lambda_max);

// The basic quadruple with m > 1 for (k, n), if any. For prime n the result is
// cross-checked against m = n, k = ns+1, lambda = (n-1)s+1, gcd(n, s-1) = 1.
std::optional<Quadruple> basic_quadruple(int k, int n);

}  // namespace optoa
