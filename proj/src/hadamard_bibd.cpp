#include "optoa/hadamard_bibd.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "optoa/error.hpp"
#include "optoa/verifier.hpp"

namespace optoa {

namespace {

using Matrix = std::vector<std::int8_t>;

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

// chi(a) over Z_q by direct squaring.
std::vector<int> quadratic_character(int q) {
  std::vector<int> chi(static_cast<std::size_t>(q), -1);
  chi[0] = 0;
  for (std::int64_t x = 1; x < q; ++x) chi[static_cast<std::size_t>(x * x % q)] = 1;
  return chi;
}

Matrix kronecker(const Matrix& a, int na, const Matrix& b, int nb) {
  const int n = na * nb;
  Matrix out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int p = 0; p < nb; ++p)
        for (int r = 0; r < nb; ++r)
          out[static_cast<std::size_t>(i * nb + p) * n + (j * nb + r)] =
              static_cast<std::int8_t>(a[static_cast<std::size_t>(i) * na + j] * b[static_cast<std::size_t>(p) * nb + r]);
  return out;
}

const Matrix kH2 = {1, 1, 1, -1};

// q prime, q = 3 mod 4; order q+1. H = I + S with S = [[0, 1^T], [-1, Q]].
Matrix paley_one(int q) {
  const auto chi = quadratic_character(q);
  const int n = q + 1;
  Matrix h(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> std::int8_t& { return h[static_cast<std::size_t>(i) * n + j]; };
  for (int j = 1; j < n; ++j) {
    at(0, j) = 1;
    at(j, 0) = -1;
  }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) at(i + 1, j + 1) = static_cast<std::int8_t>(chi[static_cast<std::size_t>(((j - i) % q + q) % q)]);
  for (int i = 0; i < n; ++i) at(i, i) = static_cast<std::int8_t>(at(i, i) + 1);
  return h;
}

// q prime, q = 1 mod 4; order 2(q+1). Zero entries of the symmetric
// conference matrix become [[1,-1],[-1,-1]], +-1 entries +-[[1,1],[1,-1]].
Matrix paley_two(int q) {
  const auto chi = quadratic_character(q);
  const int c = q + 1;
  std::vector<int> conf(static_cast<std::size_t>(c) * c, 0);
  for (int j = 1; j < c; ++j) conf[j] = conf[static_cast<std::size_t>(j) * c] = 1;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      conf[static_cast<std::size_t>(i + 1) * c + j + 1] = chi[static_cast<std::size_t>(((j - i) % q + q) % q)];
  const int n = 2 * c;
  Matrix h(static_cast<std::size_t>(n) * n);
  static constexpr int kZero[2][2] = {{1, -1}, {-1, -1}};
  static constexpr int kOne[2][2] = {{1, 1}, {1, -1}};
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      const int e = conf[static_cast<std::size_t>(i) * c + j];
      for (int p = 0; p < 2; ++p)
        for (int r = 0; r < 2; ++r)
          h[static_cast<std::size_t>(2 * i + p) * n + 2 * j + r] =
              static_cast<std::int8_t>(e == 0 ? kZero[p][r] : e * kOne[p][r]);
    }
  return h;
}

bool plausible_order(int order) { return order == 1 || order == 2 || (order > 0 && order % 4 == 0); }

std::optional<Matrix> build(int order, std::map<int, std::optional<Matrix>>& memo) {
  if (auto it = memo.find(order); it != memo.end()) return it->second;
  std::optional<Matrix> out;
  if (order == 1) {
    out = Matrix{1};
  } else if (order == 2) {
    out = kH2;
  } else if (order % 4 != 0) {
    out = std::nullopt;
  } else if (is_power_of_two(order)) {
    out = kronecker(kH2, 2, *build(order / 2, memo), order / 2);
  } else if (is_prime(order - 1) && (order - 1) % 4 == 3) {
    out = paley_one(order - 1);
  } else if (is_prime(order / 2 - 1) && (order / 2 - 1) % 4 == 1) {
    out = paley_two(order / 2 - 1);
  } else {
    if (auto half = build(order / 2, memo)) out = kronecker(kH2, 2, *half, order / 2);
    for (int a = 4; !out && a * a <= order; a += 4) {
      if (order % a != 0 || !plausible_order(order / a)) continue;
      auto left = build(a, memo);
      auto right = left ? build(order / a, memo) : std::nullopt;
      if (left && right) out = kronecker(*left, a, *right, order / a);
    }
  }
  memo[order] = out;
  return out;
}

}  // namespace

HadamardMatrix hadamard(int order) {
  require(order >= 1, Errc::invalid_argument, "order must be positive");
  if (!plausible_order(order))
    fail(Errc::unreachable, "no Hadamard matrix of order " + std::to_string(order) +
                                " exists (order must be 1, 2 or a multiple of 4)");
  std::map<int, std::optional<Matrix>> memo;
  auto m = build(order, memo);
  if (!m)
    fail(Errc::unreachable, "order " + std::to_string(order) + " not constructible by implemented methods");
  return HadamardMatrix(order, std::move(*m));
}

BlockDesign hadamard_to_symmetric_bibd(const HadamardMatrix& h) {
  const int order = h.order();
  require(order >= 12 && order % 8 == 4, Errc::invalid_argument,
          "order " + std::to_string(order) + " is not of the form 8t+4 with t >= 1");
  std::vector<std::int8_t> e(h.entries().begin(), h.entries().end());
  auto at = [&](int i, int j) -> std::int8_t& { return e[static_cast<std::size_t>(i) * order + j]; };
  for (int j = 0; j < order; ++j)
    if (at(0, j) < 0)
      for (int i = 0; i < order; ++i) at(i, j) = static_cast<std::int8_t>(-at(i, j));
  for (int i = 0; i < order; ++i)
    if (at(i, 0) < 0)
      for (int j = 0; j < order; ++j) at(i, j) = static_cast<std::int8_t>(-at(i, j));

  std::vector<std::vector<std::uint8_t>> blocks;
  for (int i = 1; i < order; ++i) {
    std::vector<std::uint8_t> blk;
    for (int j = 1; j < order; ++j) blk.push_back(at(i, j) > 0 ? 1 : 0);
    blocks.push_back(std::move(blk));
  }
  BlockDesign d(order - 1, std::move(blocks));
  const int t = (order - 4) / 8;
  require(d.symmetric() && d.block_size() == 4 * t + 1 && d.lambda() == 2 * t, Errc::invalid_argument,
          "normalized matrix did not give a symmetric (8t+3, 4t+1, 2t) design");
  return d;
}

BlockDesign derived_then_complement(const BlockDesign& d, int block_index) {
  const int v = d.v();
  const bool shape = d.symmetric() && v >= 11 && v % 8 == 3;
  const int t = (v - 3) / 8;
  require(shape && d.block_size() == 4 * t + 1 && d.lambda() == 2 * t, Errc::invalid_argument,
          "input is not a symmetric (8t+3, 4t+1, 2t) design");
  require(block_index >= 0 && block_index < d.b(), Errc::invalid_argument, "block index out of range");

  const auto& chosen = d.incidence()[static_cast<std::size_t>(block_index)];
  std::vector<int> points;
  for (int p = 0; p < v; ++p)
    if (chosen[p]) points.push_back(p);

  std::vector<std::vector<std::uint8_t>> blocks;
  for (int i = 0; i < d.b(); ++i) {
    if (i == block_index) continue;
    const auto& blk = d.incidence()[static_cast<std::size_t>(i)];
    std::vector<std::uint8_t> out;
    for (int p : points) out.push_back(blk[p] ? 0 : 1);
    blocks.push_back(std::move(out));
  }
  BlockDesign out(static_cast<int>(points.size()), std::move(blocks));
  require(out.v() == 4 * t + 1 && out.block_size() == 2 * t + 1 && out.lambda() == 2 * t + 1,
          Errc::invalid_argument, "derived complement did not give a (4t+1, 2t+1, 2t+1) design");
  return out;
}

OrthogonalArray bibd_to_oa(const BlockDesign& d) {
  const int v = d.v();
  const int t = (v - 1) / 4;
  require(v >= 5 && v % 4 == 1 && d.block_size() == 2 * t + 1 && d.lambda() == 2 * t + 1 &&
              d.b() == 8 * t + 2,
          Errc::invalid_argument, "design parameters are not (4t+1, 2t+1, 2t+1) with 8t+2 blocks");
  std::vector<Symbol> cells(static_cast<std::size_t>(2) * v, 0);
  for (const auto& blk : d.incidence()) cells.insert(cells.end(), blk.begin(), blk.end());
  return OrthogonalArray(v, 2, 2 * t + 1, std::move(cells));
}

BlockDesign oa_to_bibd(const OrthogonalArray& a) {
  const int k = a.k();
  const int t = (k - 1) / 4;
  require(a.n() == 2 && k >= 5 && k % 4 == 1 && a.lambda() == 2 * t + 1, Errc::invalid_argument,
          "array is not an OA_{2t+1}(4t+1, 2)");
  auto [row, m] = repeated_row(a);
  require(std::all_of(row.begin(), row.end(), [](Symbol x) { return x == 0; }), Errc::invalid_argument,
          "repeated row is not all-zero");
  require(m == 2, Errc::invalid_argument, "repeated row occurs " + std::to_string(m) + " times, expected 2");

  std::vector<std::vector<std::uint8_t>> blocks;
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    auto r = a.row(i);
    if (std::all_of(r.begin(), r.end(), [](Symbol x) { return x == 0; })) continue;
    blocks.emplace_back(r.begin(), r.end());
  }
  BlockDesign d(k, std::move(blocks));
  require(d.block_size() == 2 * t + 1 && d.lambda() == 2 * t + 1, Errc::invalid_argument,
          "rows do not form a (4t+1, 2t+1, 2t+1) design");
  return d;
}

}  // namespace optoa
