// One PASS/FAIL line per acceptance criterion. With arguments, only the
// listed criteria run. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "optoa/bounds.hpp"
#include "optoa/cyclic.hpp"
#include "optoa/deletion.hpp"
#include "optoa/enumerate_partition.hpp"
#include "optoa/hadamard_bibd.hpp"
#include "optoa/verifier.hpp"

using namespace optoa;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

using Check = std::function<void(Outcome&)>;

bool run(int id, const std::string& name, double budget_s, const Check& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.notes << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    out.ok = false;
    out.notes << " [over budget " << budget_s << " s]";
  }
  std::printf("%s %2d %s (%.2f s)%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              out.notes.str().c_str());
  std::fflush(stdout);
  return out.ok;
}

std::string name_of(const std::string& base, std::int64_t lambda, int k, int n) {
  return base + std::to_string(lambda) + "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

void reference_array(Outcome& o) {
  const auto a = develop(corpus::oa3_5_2());
  o.expect(sorted_rows(a) == sorted_rows(OrthogonalArray::from_rows(5, 2, 3, corpus::reference_oa3_5_2())),
           "row multiset differs");
  const auto r = verify_strength2(a);
  o.expect(r.is_oa && r.lambda_observed == 3, "lambda 3");
  o.expect(r.m_observed == 2, "m 2");
  o.expect(r.classification.to_string() == "optimal basic m-optimal", "classes");
}

void starting_row_corpus(Outcome& o) {
  struct Case {
    std::string name;
    StartingRowSet rows;
    std::int64_t lambda, m;
  };
  const std::vector<Case> cases{{"OA5(9,2)", corpus::oa5_9_2(), 5, 2},
                                {"OA7(13,2)", corpus::oa7_13_2(), 7, 2},
                                {"OA9(17,2)", corpus::oa9_17_2(), 9, 2},
                                {"OA5(7,3)", corpus::oa5_7_3(), 5, 3},
                                {"OA7(9,4)", corpus::oa7_9_4(), 7, 4}};
  for (const auto& c : cases) {
    const auto r = verify_strength2(develop(c.rows));
    if (!r.is_oa && r.offending) {
      const auto& w = *r.offending;
      std::ostringstream s;
      s << c.name << " is not an OA: columns (" << w.col_a << "," << w.col_b << ") symbols ("
        << int{w.sym_a} << "," << int{w.sym_b} << ") occur " << w.count << " times";
      o.expect(false, s.str());
      continue;
    }
    o.expect(r.is_oa && r.lambda_observed == c.lambda, c.name + " lambda");
    o.expect(r.m_observed == c.m, c.name + " m");
    o.expect(r.classification.basic, c.name + " basic");
  }
}

void hadamard_pipeline(Outcome& o) {
  for (int t = 1; t <= 4; ++t) {
    const auto a = bibd_to_oa(derived_then_complement(hadamard_to_symmetric_bibd(hadamard(8 * t + 4))));
    const auto r = verify_strength2(a);
    const auto label = name_of("OA", 2 * t + 1, 4 * t + 1, 2);
    o.expect(a.k() == 4 * t + 1 && a.n() == 2, label + " shape");
    o.expect(r.is_oa && r.lambda_observed == 2 * t + 1, label + " lambda");
    o.expect(r.m_observed == 2, label + " m");
    o.expect(r.classification.basic, label + " basic");
  }
}

void enumeration_example(Outcome& o) {
  const auto a = enumerate_oa(7, 3);
  std::int64_t zero_rows = 0;
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    bool all_zero = true;
    for (auto x : a.row(i)) all_zero = all_zero && x == 0;
    zero_rows += all_zero;
  }
  o.expect(a.row_count() == 720, "720 rows");
  o.expect(zero_rows == 48, "48 zero rows");
  o.expect(static_cast<std::int64_t>(a.row_count()) - zero_rows == 672, "672 other rows");
  const auto r = verify_strength2(a);
  o.expect(r.is_oa && r.lambda_observed == 80, "lambda 80");
  o.expect(r.m_observed == 48, "m 48");
  o.expect(Rational(r.m_observed, 80) == Rational(3, 5), "m/lambda 3/5");
}

void partition_desk_scale(Outcome& o) {
  const auto p7 = partition_oa(7, 3);
  o.expect(p7.size() == 2, "two parts for (7,3)");
  for (const auto& a : p7) {
    const auto r = verify_strength2(a);
    o.expect(r.is_oa && r.lambda_observed == 40, "(7,3) part lambda 40");
    o.expect(r.m_observed == 24, "(7,3) part m 24");
    o.expect(r.classification.optimal, "(7,3) part optimal");
  }
  const auto p9 = partition_oa(9, 4);
  o.expect(p9.size() == 3, "three parts for (9,4)");
  for (const auto& a : p9) {
    const auto r = verify_strength2(a);
    o.expect(r.is_oa && r.lambda_observed == 1701, "(9,4) part lambda 1701");
    o.expect(r.classification.optimal, "(9,4) part optimal");
  }
}

void multi_partition_16_3(Outcome& o) {
  const auto spec = default_partition_spec(16, 3);
  o.expect(spec.gamma() == 2, "gamma 2");
  o.expect(spec.parts(3) == 4, "4 parts");
  const auto p = enumeration_params(16, 3);
  const auto pp = part_params(p, spec.gamma());
  o.expect(pp.lambda == oracle::choose(14, 4) * 256 && pp.lambda == 256256, "part lambda 256256");
  o.expect(pp.m * 4 == p.m, "part m = m/4");
  const auto reps = verify_multi_partition_streaming(16, 3, spec);
  o.expect(reps.size() == 4, "4 reports");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& r = reps[i];
    const auto tag = partition_class_label(i, 3, 2);
    o.expect(r.is_oa && r.lambda_observed == 256256, tag + " counts all 256256");
    o.expect(r.rows_seen == static_cast<std::uint64_t>(256256) * 9, tag + " rows");
    o.expect(r.m_observed == pp.m, tag + " m");
    o.expect(r.classification.optimal, tag + " optimal");
  }
}

void counting_identities(Outcome& o) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {9, 2}, {9, 4}}) {
    const int abar = (k - 1) / n;
    const std::int64_t single = oracle::choose(k - 2, abar - 1) * oracle::power(n - 1, k - abar - 1);
    const std::int64_t both = oracle::choose(k - 2, abar - 2) * oracle::power(n - 1, k - abar);
    std::vector<std::int64_t> tally(static_cast<std::size_t>(n * n), 0);
    for_each_enumerated_row(k, n, [&](std::span<const Symbol> r) { ++tally[r[0] * n + r[1]]; });
    const auto tag = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
    o.expect(tally[0] == both, tag + " 00");
    for (int x = 1; x < n; ++x) {
      o.expect(tally[x] == single, tag + " 0x");
      o.expect(tally[x * n] == single, tag + " x0");
      for (int y = 1; y < n; ++y) o.expect(tally[x * n + y] == single, tag + " xy");
    }
  }
}

void deletion_13_2(Outcome& o) {
  const auto a = develop(corpus::oa7_13_2());
  o.expect(verify_strength2(a).classification.basic, "input basic");
  int subsets_checked = 0;
  for (int s = 1; s <= 4; ++s)
    for (unsigned mask = 0; mask < (1u << 13); ++mask) {
      if (__builtin_popcount(mask) != s) continue;
      std::vector<int> cols;
      for (int j = 0; j < 13; ++j)
        if (mask >> j & 1u) cols.push_back(j);
      const auto r = verify_strength2(delete_columns(a, s, cols));
      ++subsets_checked;
      if (!(r.is_oa && r.m_observed == 2 && r.classification.m_optimal)) {
        o.expect(false, "s=" + std::to_string(s) + " subset mask " + std::to_string(mask));
        return;
      }
    }
  o.expect(subsets_checked == 13 + 78 + 286 + 715, "all subsets");
  const auto r5 = verify_strength2(delete_columns(a, 5));
  o.expect(r5.is_oa, "s=5 still an OA");
  o.expect(!r5.classification.m_optimal, "s=5 not m-optimal");
}

void bound_arithmetic(Outcome& o) {
  o.expect(floor_bound(5, 3, 3) == 2, "floor 27/11");
  o.expect(floor_bound(5, 3, 6) == 4, "floor 54/11");
  o.expect(floor_bound(5, 3, 9) == 7, "floor 81/11");
  for (int n = 2; n <= 10; ++n)
    for (int s = 2; s * n <= 100; ++s)
      for (std::int64_t lambda = 1; lambda <= 5; ++lambda) {
        const int k = s * n;
        if (refined_bound(k, n, lambda, s - 1) != Rational(lambda * n * n, std::int64_t{k} * (n - 1) + n)) {
          o.expect(false, "identity at k=" + std::to_string(k) + " n=" + std::to_string(n));
          return;
        }
      }
}

void property_suites(Outcome& o) {
  // Verifier against the naive recount.
  std::vector<OrthogonalArray> arrays;
  for (const auto& c : corpus::verified_sets()) arrays.push_back(develop(c.rows));
  for (int t = 1; t <= 4; ++t)
    arrays.push_back(bibd_to_oa(derived_then_complement(hadamard_to_symmetric_bibd(hadamard(8 * t + 4)))));
  arrays.push_back(enumerate_oa(5, 2));
  arrays.push_back(enumerate_oa(7, 3));
  for (const auto& a : partition_oa(7, 3)) arrays.push_back(a);
  auto agrees = [](const OrthogonalArray& a) {
    const auto rows = corpus::to_rows(a);
    const auto rep = verify_strength2(a);
    const auto naive = oracle::pair_balance(rows, a.k(), a.n());
    const auto [row, m] = oracle::most_repeated(rows);
    return rep.is_oa == (naive.ok && *naive.lambda == a.lambda()) && rep.m_observed == m &&
           std::vector<int>(rep.repeated_row.begin(), rep.repeated_row.end()) == row;
  };
  for (const auto& a : arrays) o.expect(agrees(a), "corpus recount");
  std::mt19937 rng(2024);
  int mutated_ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = arrays[static_cast<std::size_t>(trial) % arrays.size()];
    auto rows = corpus::to_rows(a);
    auto& r = rows[std::uniform_int_distribution<std::size_t>(0, rows.size() - 1)(rng)];
    auto& cell = r[std::uniform_int_distribution<int>(0, a.k() - 1)(rng)];
    cell = (cell + std::uniform_int_distribution<int>(1, a.n() - 1)(rng)) % a.n();
    mutated_ok += agrees(OrthogonalArray::from_rows(a.k(), a.n(), a.lambda(), rows));
  }
  o.expect(mutated_ok == 200, "mutated recount");

  // Shift bijection, every row of the (7,3) enumeration and every shift.
  std::set<std::vector<int>> rows;
  for_each_enumerated_row(7, 3, [&](std::span<const Symbol> r) {
    std::vector<int> x;
    for (auto s : r) x.push_back(s == 0 ? StartingRowSet::kInfinity : s - 1);
    rows.insert(x);
  });
  const std::vector<int> sizes{7};
  bool bij = rows.size() == 672;
  for (int kappa = 0; kappa < 2; ++kappa) {
    const std::vector<int> kv{kappa}, inv{(2 - kappa) % 2};
    std::set<std::vector<int>> image;
    for (const auto& x : rows) {
      const auto y = shift_bijection(x, 3, sizes, kv);
      bij = bij && shift_bijection(y, 3, sizes, inv) == x && y[0] == x[0] && y[1] == x[1];
      image.insert(y);
    }
    bij = bij && image == rows;
  }
  o.expect(bij, "shift bijection on (7,3)");

  // Development row count.
  bool counts = true;
  for (int n = 2; n <= 5; ++n)
    for (int k = n + 1; k <= 21; ++k)
      for (const auto& q : feasible_quadruples(k, n, 3 * (std::int64_t{k} * (n - 1) + 1))) {
        std::vector<int> row(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < (k - 1) / n; ++j) row[j] = StartingRowSet::kInfinity;
        const auto a = develop(StartingRowSet(k, n, std::vector<std::vector<int>>(q.m, row)));
        counts = counts && static_cast<std::int64_t>(a.row_count()) == q.m * (std::int64_t{k} * (n - 1) + 1) &&
                 static_cast<std::int64_t>(a.row_count()) == q.lambda * n * n;
      }
  o.expect(counts, "development row count");
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    const char* name;
    double budget_s;
    void (*body)(Outcome&);
  };
  const std::vector<Criterion> all{
      {"reference OA3(5,2) from two starting rows", 1, reference_array},
      {"starting-row corpus develops into basic arrays", 5, starting_row_corpus},
      {"Hadamard pipeline for t = 1..4", 5, hadamard_pipeline},
      {"enumeration of OA80(7,3)", 2, enumeration_example},
      {"partitions of (7,3) and (9,4)", 60, partition_desk_scale},
      {"four-part partition of (16,3), streamed", 600, multi_partition_16_3},
      {"counting identities", 60, counting_identities},
      {"column deletion from OA7(13,2)", 60, deletion_13_2},
      {"bound arithmetic", 60, bound_arithmetic},
      {"property suites", 600, property_suites},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failed = 0, ran = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!wanted.empty() && !wanted.count(id)) continue;
    ++ran;
    failed += !run(id, all[i].name, all[i].budget_s, all[i].body);
  }
  std::printf("%d of %d criteria failed\n", failed, ran);
  return failed ? 1 : 0;
}
