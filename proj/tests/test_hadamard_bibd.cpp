#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "optoa/error.hpp"
#include "optoa/hadamard_bibd.hpp"
#include "optoa/verifier.hpp"

using namespace optoa;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<Errc>(0);
}

// Random row/column permutation and sign changes; still Hadamard.
HadamardMatrix scramble(const HadamardMatrix& h, std::mt19937& rng) {
  const int n = h.order();
  std::vector<int> rp(static_cast<std::size_t>(n)), cp(static_cast<std::size_t>(n));
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  std::vector<int> rs(static_cast<std::size_t>(n)), cs(static_cast<std::size_t>(n));
  for (auto& s : rs) s = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
  for (auto& s : cs) s = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
  std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e[static_cast<std::size_t>(i) * n + j] = static_cast<std::int8_t>(h.at(rp[i], cp[j]) * rs[i] * cs[j]);
  return HadamardMatrix(n, e);
}

}  // namespace

TEST_SUITE("hadamard_bibd") {
  TEST_CASE("reachable orders up to 64") {
    for (int order = 1; order <= 64; ++order) {
      CAPTURE(order);
      if (order > 2 && order % 4 != 0) {
        CHECK(code_of([&] { hadamard(order); }) == Errc::unreachable);
        continue;
      }
      if (order == 52) {
        CHECK(code_of([&] { hadamard(order); }) == Errc::unreachable);
        continue;
      }
      const auto h = hadamard(order);
      CHECK(h.order() == order);
      // Gram matrix recomputed here as well as in the constructor.
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
          int dot = 0;
          for (int c = 0; c < order; ++c) dot += h.at(i, c) * h.at(j, c);
          CHECK(dot == (i == j ? order : 0));
        }
    }
    CHECK(code_of([] { hadamard(92); }) == Errc::unreachable);
    CHECK(code_of([] { hadamard(0); }) == Errc::invalid_argument);
  }

  TEST_CASE("construction is deterministic") {
    CHECK(hadamard(36) == hadamard(36));
    CHECK(hadamard(28) == hadamard(28));
  }

  TEST_CASE("pipeline for t = 1..4") {
    for (int t = 1; t <= 4; ++t) {
      CAPTURE(t);
      const auto sym = hadamard_to_symmetric_bibd(hadamard(8 * t + 4));
      CHECK(sym.v() == 8 * t + 3);
      CHECK(sym.b() == 8 * t + 3);
      CHECK(sym.block_size() == 4 * t + 1);
      CHECK(sym.r() == 4 * t + 1);
      CHECK(sym.lambda() == 2 * t);
      const auto d = derived_then_complement(sym);
      CHECK(d.v() == 4 * t + 1);
      CHECK(d.b() == 8 * t + 2);
      CHECK(d.block_size() == 2 * t + 1);
      CHECK(d.lambda() == 2 * t + 1);
      const auto a = bibd_to_oa(d);
      const auto rep = verify_strength2(a);
      CHECK(rep.is_oa);
      CHECK(a.k() == 4 * t + 1);
      CHECK(rep.lambda_observed == 2 * t + 1);
      CHECK(rep.m_observed == 2);
      CHECK(rep.classification.to_string() == "optimal basic m-optimal");
      CHECK(oracle::pair_balance(corpus::to_rows(a), a.k(), 2).ok);
      CHECK(oa_to_bibd(a) == d);
    }
  }

  TEST_CASE("every block index gives a valid derived design") {
    for (int t = 1; t <= 3; ++t) {
      const auto sym = hadamard_to_symmetric_bibd(hadamard(8 * t + 4));
      for (int b = 0; b < sym.b(); ++b) {
        const auto d = derived_then_complement(sym, b);
        CHECK(d.v() == 4 * t + 1);
        CHECK(d.lambda() == 2 * t + 1);
        CHECK(verify_strength2(bibd_to_oa(d)).classification.basic);
      }
      CHECK_THROWS_AS(derived_then_complement(sym, sym.b()), Error);
    }
  }

  TEST_CASE("any equivalent Hadamard matrix gives designs with the same parameters") {
    std::mt19937 rng(2718);
    for (int t = 1; t <= 4; ++t)
      for (int trial = 0; trial < 5; ++trial) {
        const auto h = scramble(hadamard(8 * t + 4), rng);
        const auto sym = hadamard_to_symmetric_bibd(h);
        CHECK(sym.block_size() == 4 * t + 1);
        CHECK(sym.lambda() == 2 * t);
        const auto a = bibd_to_oa(derived_then_complement(sym));
        CHECK(verify_strength2(a).classification.basic);
      }
  }

  TEST_CASE("shape checks") {
    CHECK_THROWS_AS(hadamard_to_symmetric_bibd(hadamard(8)), Error);
    CHECK_THROWS_AS(hadamard_to_symmetric_bibd(hadamard(4)), Error);
    const auto sym = hadamard_to_symmetric_bibd(hadamard(12));
    CHECK_THROWS_AS(bibd_to_oa(sym), Error);
    CHECK_THROWS_AS(derived_then_complement(derived_then_complement(sym)), Error);
    CHECK_THROWS_AS(oa_to_bibd(OrthogonalArray::from_rows(2, 2, 1, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})), Error);
  }
}
