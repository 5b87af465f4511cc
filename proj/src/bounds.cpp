#include "optoa/bounds.hpp"

#include <numeric>
#include <stdexcept>

#include "optoa/error.hpp"

namespace optoa {

namespace {

void check_domain(int k, int n, std::int64_t lambda) {
  require(k >= 2, Errc::invalid_argument, "k must be at least 2");
  require(n >= 2, Errc::invalid_argument, "n must be at least 2");
  require(lambda >= 1, Errc::invalid_argument, "lambda must be at least 1");
}

std::int64_t repeat_denominator(int k, int n) { return checked_add(checked_mul(k, n - 1), 1); }

}  // namespace

Rational rao_repeat_bound(int k, int n, std::int64_t lambda) {
  check_domain(k, n, lambda);
  return Rational(checked_mul(lambda, std::int64_t{n} * n), repeat_denominator(k, n));
}

Rational refined_bound(int k, int n, std::int64_t lambda, int alpha) {
  check_domain(k, n, lambda);
  require(alpha >= 1, Errc::invalid_argument, "alpha must be a positive integer");
  const std::int64_t K = k, N = n, A = alpha;
  const std::int64_t den = K * (K - 1) - 2 * A * K + A * A + A;
  if (den <= 0)
    fail(Errc::invalid_argument,
         "bound not applicable for this alpha (denominator " + std::to_string(den) + ")");
  const std::int64_t inner = K * (K - 1) - 2 * A * K * N + checked_mul(A * A + A, N * N);
  return Rational(checked_mul(lambda, inner), den);
}

std::int64_t floor_bound(int k, int n, std::int64_t lambda) {
  return floor_of(rao_repeat_bound(k, n, lambda));
}

BoundReport bound_report(int k, int n, std::int64_t lambda) {
  BoundReport rep;
  rep.k = k;
  rep.n = n;
  rep.lambda = lambda;
  rep.rao_bound = rao_repeat_bound(k, n, lambda);
  rep.floor_bound = floor_of(rep.rao_bound);
  const Rational rows(checked_mul(lambda, std::int64_t{n} * n));
  for (int alpha = 1; alpha <= k; ++alpha) {
    RefinedEntry e;
    e.alpha = alpha;
    try {
      e.value = refined_bound(k, n, lambda, alpha);
      e.vacuous = *e.value >= rows || *e.value < Rational(0);
    } catch (const Error&) {
      e.vacuous = true;
    }
    if (!e.vacuous && (!rep.best_refined || *e.value < *rep.best_refined->value)) rep.best_refined = e;
    rep.refined.push_back(e);
  }
  return rep;
}

std::vector<Quadruple> feasible_quadruples(int k, int n, std::int64_t lambda_max) {
  require(k >= 2 && n >= 2, Errc::invalid_argument, "k and n must be at least 2");
  std::vector<Quadruple> out;
  if ((k - 1) % n != 0 || (k - 1) / n < 1) return out;
  const std::int64_t den = repeat_denominator(k, n);
  for (std::int64_t lambda = 1; lambda <= lambda_max; ++lambda) {
    const std::int64_t num = checked_mul(lambda, std::int64_t{n} * n);
    if (num % den == 0) out.push_back({num / den, lambda, k, n});
  }
  return out;
}

std::optional<Quadruple> basic_quadruple(int k, int n) {
  require(k >= 2 && n >= 2, Errc::invalid_argument, "k and n must be at least 2");
  if ((k - 1) % n != 0 || (k - 1) / n < 1) return std::nullopt;
  // Smallest solution of m (k(n-1)+1) = lambda n^2; its m and lambda are coprime.
  const std::int64_t den = repeat_denominator(k, n);
  const std::int64_t sq = std::int64_t{n} * n;
  const std::int64_t g = std::gcd(den, sq);
  Quadruple q{sq / g, den / g, k, n};
  if (q.m <= 1) return std::nullopt;

  if (is_prime(n)) {
    const std::int64_t s = (k - 1) / n;
    const bool closed_form = q.m == n && q.lambda == (n - 1) * s + 1 && std::gcd<std::int64_t>(n, s - 1) == 1;
    if (!closed_form)
      throw std::logic_error("basic quadruple for prime n disagrees with m = n, lambda = (n-1)s+1");
  }
  return q;
}

}  // namespace optoa
