#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "optoa/bounds.hpp"
#include "optoa/cyclic.hpp"
#include "optoa/error.hpp"
#include "optoa/verifier.hpp"

using namespace optoa;

namespace {

bool developed_is_oa(const StartingRowSet& s, std::int64_t lambda) {
  const auto a = develop(s);
  return a.lambda() == lambda && verify_strength2(a).is_oa;
}

// All rows over {inf} U Z_{n-1} of length k, as base-n counters.
std::vector<std::vector<int>> all_rows(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> r(static_cast<std::size_t>(k), corpus::I);
  while (true) {
    out.push_back(r);
    int i = k - 1;
    while (i >= 0 && r[i] == n - 2) r[i--] = corpus::I;
    if (i < 0) break;
    ++r[i];
  }
  return out;
}

std::vector<int> orbit_min_naive(const std::vector<int>& row, int n) {
  const int k = static_cast<int>(row.size());
  std::vector<int> best = row;
  for (int s = 0; s < k; ++s)
    for (int c = 0; c < n - 1; ++c) {
      std::vector<int> t(row.size());
      for (int j = 0; j < k; ++j) {
        const int x = row[(j + s) % k];
        t[j] = x < 0 ? x : (x + c) % (n - 1);
      }
      best = std::min(best, t);
    }
  return best;
}

}  // namespace

TEST_SUITE("cyclic") {
  TEST_CASE("two starting rows give the reference OA3(5,2)") {
    const auto a = develop(corpus::oa3_5_2());
    CHECK(oracle::sorted(corpus::to_rows(a)) == oracle::sorted(corpus::reference_oa3_5_2()));
    CHECK(corpus::to_rows(a) == corpus::reference_oa3_5_2());
  }

  TEST_CASE("development matches the direct construction") {
    for (const auto& c : corpus::verified_sets()) {
      const auto a = develop(c.rows);
      CHECK(corpus::to_rows(a) == oracle::develop(c.rows.base_rows(), c.rows.k(), c.rows.n()));
    }
    const auto s = corpus::oa5_7_3();
    CHECK(corpus::to_rows(develop(s)) == oracle::develop(s.base_rows(), 7, 3));
  }

  TEST_CASE("corpus sets develop into basic arrays") {
    for (const auto& c : corpus::verified_sets()) {
      CAPTURE(c.name);
      const auto a = develop(c.rows);
      const auto rep = verify_strength2(a);
      CHECK(rep.is_oa);
      CHECK(rep.lambda_observed == c.lambda);
      CHECK(rep.m_observed == c.m);
      CHECK(rep.classification.optimal);
      CHECK(rep.classification.basic);
      CHECK(distance_check(c.rows, c.lambda).ok);
    }
  }

  TEST_CASE("the listed OA5(7,3) rows do not develop into an OA") {
    const auto s = corpus::oa5_7_3();
    const auto a = develop(s);
    CHECK(a.row_count() == 45);
    CHECK_FALSE(verify_strength2(a).is_oa);
    CHECK_FALSE(oracle::pair_balance(corpus::to_rows(a), 7, 3).ok);
    CHECK_FALSE(distance_check(s, 5).ok);
  }

  TEST_CASE("no cyclic OA5(7,3) exists: search and brute force agree") {
    CHECK(search_starting_rows(7, 3, 3, 5, 1).empty());

    std::set<std::vector<int>> reps;
    for (const auto& r : all_rows(7, 3))
      if (std::count(r.begin(), r.end(), corpus::I) == 2) reps.insert(orbit_min_naive(r, 3));
    CHECK(reps.size() == 48);
    const std::vector<std::vector<int>> v(reps.begin(), reps.end());
    int found = 0;
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a; b < v.size(); ++b)
        for (std::size_t c = b; c < v.size(); ++c)
          found += oracle::pair_balance(oracle::develop({v[a], v[b], v[c]}, 7, 3), 7, 3).ok;
    CHECK(found == 0);
  }

  TEST_CASE("distance profile totals") {
    for (const auto& c : corpus::verified_sets()) {
      const auto p = distance_profile(c.rows);
      for (int d = 1; d <= p.distances(); ++d)
        CHECK(p.total(d) == std::int64_t{c.rows.m()} * c.rows.k() * (c.rows.n() - 1));
    }
  }

  TEST_CASE("distance check agrees with full development, exhaustively for small sets") {
    // Even k = 4, n = 3: every single row and every pair of rows. No set of
    // either size develops into an OA, so only agreement is checked.
    int agree = 0, total = 0, good = 0;
    const auto rows43 = all_rows(4, 3);
    for (std::size_t i = 0; i < rows43.size(); ++i) {
      const StartingRowSet s(4, 3, {rows43[i]});
      const bool full = oracle::pair_balance(oracle::develop({rows43[i]}, 4, 3), 4, 3).ok;
      agree += distance_check(s, 1).ok == full;
      good += full;
      ++total;
      for (std::size_t j = i; j < rows43.size(); ++j) {
        const StartingRowSet p(4, 3, {rows43[i], rows43[j]});
        const bool pf = oracle::pair_balance(oracle::develop({rows43[i], rows43[j]}, 4, 3), 4, 3).ok;
        agree += distance_check(p, 2).ok == pf;
        good += pf;
        ++total;
      }
    }
    CHECK(agree == total);
    CHECK(good == 0);

    // k = 5, n = 2, every pair of rows.
    agree = total = good = 0;
    const auto rows = all_rows(5, 2);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i; j < rows.size(); ++j) {
        const StartingRowSet s(5, 2, {rows[i], rows[j]});
        const bool full = developed_is_oa(s, 3);
        agree += distance_check(s, 3).ok == full;
        good += full;
        ++total;
      }
    CHECK(agree == total);
    CHECK(good > 0);
  }

  TEST_CASE("distance check agrees with full development on random sets") {
    std::mt19937 rng(31337);
    struct P {
      int k, n, m;
      std::int64_t lambda;
    };
    const std::vector<P> params{{5, 2, 2, 3}, {9, 2, 2, 5}, {7, 3, 3, 5}, {9, 4, 4, 7},
                                {10, 3, 3, 7}, {13, 3, 3, 9}, {4, 3, 2, 2}, {16, 3, 3, 11}};
    int agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto& p = params[static_cast<std::size_t>(trial) % params.size()];
      const int abar = (p.k - 1) / p.n;
      std::vector<std::vector<int>> base;
      for (int i = 0; i < p.m; ++i) {
        std::vector<int> r(static_cast<std::size_t>(p.k));
        for (auto& x : r) x = std::uniform_int_distribution<int>(0, p.n - 2)(rng);
        // Usually exactly abar infinities, sometimes any number.
        const int infs = trial % 5 == 0 ? std::uniform_int_distribution<int>(0, p.k)(rng) : abar;
        for (int j = 0; j < infs; ++j) r[std::uniform_int_distribution<int>(0, p.k - 1)(rng)] = corpus::I;
        base.push_back(r);
      }
      const StartingRowSet s(p.k, p.n, base);
      agree += distance_check(s, p.lambda).ok == developed_is_oa(s, p.lambda);
    }
    CHECK(agree == 100);

    // Passing sets, in random rotations and translations.
    for (const auto& c : corpus::verified_sets()) {
      for (int trial = 0; trial < 5; ++trial) {
        auto rows = c.rows.base_rows();
        for (auto& r : rows) {
          r = rotate_row(r, std::uniform_int_distribution<int>(0, c.rows.k() - 1)(rng));
          const int t = std::uniform_int_distribution<int>(0, c.rows.n() - 2)(rng);
          for (int& x : r)
            if (x >= 0) x = (x + t) % (c.rows.n() - 1);
        }
        const StartingRowSet s(c.rows.k(), c.rows.n(), rows);
        CHECK(distance_check(s, c.lambda).ok);
        CHECK(developed_is_oa(s, c.lambda));
      }
    }
  }

  TEST_CASE("rotating a base row gives the same multiset of rows") {
    for (const auto& c : corpus::verified_sets()) {
      const auto ref = sorted_rows(develop(c.rows));
      for (std::size_t i = 0; i < c.rows.base_rows().size(); ++i)
        for (int shift = 1; shift < c.rows.k(); ++shift) {
          auto rows = c.rows.base_rows();
          rows[i] = rotate_row(rows[i], shift);
          CHECK(sorted_rows(develop(StartingRowSet(c.rows.k(), c.rows.n(), rows))) == ref);
        }
      CHECK(sorted_rows(develop(canonical_form(c.rows))) == ref);
    }
  }

  TEST_CASE("rotate_row direction") {
    CHECK(rotate_row({1, 2, 3, 4}, 1) == std::vector<int>{4, 1, 2, 3});
    CHECK(rotate_row({1, 2, 3, 4}, -1) == std::vector<int>{2, 3, 4, 1});
  }

  TEST_CASE("development row count is lambda n^2 for every feasible quadruple") {
    for (int n = 2; n <= 5; ++n)
      for (int k = n + 1; k <= 21; ++k)
        for (const auto& q : feasible_quadruples(k, n, 3 * (std::int64_t{k} * (n - 1) + 1))) {
          std::vector<int> row(static_cast<std::size_t>(k), 0);
          for (int j = 0; j < (k - 1) / n; ++j) row[j] = corpus::I;
          const StartingRowSet s(k, n, std::vector<std::vector<int>>(static_cast<std::size_t>(q.m), row));
          const auto a = develop(s);
          CHECK(static_cast<std::int64_t>(a.row_count()) == q.m * (std::int64_t{k} * (n - 1) + 1));
          CHECK(static_cast<std::int64_t>(a.row_count()) == q.lambda * n * n);
          CHECK(a.lambda() == q.lambda);
        }
  }

  TEST_CASE("develop rejects row counts that are not multiples of n^2") {
    CHECK_THROWS_AS(develop(StartingRowSet(5, 2, {{-1, -1, 0, 0, 0}})), Error);
  }

  TEST_CASE("search finds basic arrays") {
    struct P {
      int k, n, m;
      std::int64_t lambda;
    };
    for (const auto& p : std::vector<P>{{5, 2, 2, 3}, {9, 2, 2, 5}, {13, 2, 2, 7}, {9, 4, 4, 7}}) {
      CAPTURE(p.k);
      const auto found = search_starting_rows(p.k, p.n, p.m, p.lambda, 1);
      REQUIRE(found.size() == 1);
      const auto& s = found[0];
      CHECK(s.m() == p.m);
      CHECK(distance_check(s, p.lambda).ok);
      const auto rep = verify_strength2(develop(s));
      CHECK(rep.is_oa);
      CHECK(rep.classification.basic);
      CHECK(canonical_form(s) == s);
    }
  }

  TEST_CASE("search returns distinct canonical solutions in order") {
    const auto found = search_starting_rows(9, 2, 2, 5, 50);
    REQUIRE_FALSE(found.empty());
    for (std::size_t i = 0; i < found.size(); ++i) {
      CHECK(developed_is_oa(found[i], 5));
      CHECK(canonical_form(found[i]) == found[i]);
      if (i) CHECK(found[i - 1].base_rows() < found[i].base_rows());
    }
    CHECK(search_starting_rows(9, 2, 2, 5, 0).empty());
  }

  TEST_CASE("search rejects infeasible parameters") {
    try {
      search_starting_rows(6, 3, 3, 5, 1);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::infeasible);
    }
    CHECK_THROWS_AS(search_starting_rows(5, 2, 3, 3, 1), Error);
  }
}
