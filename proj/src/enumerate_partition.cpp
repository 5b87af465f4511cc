#include "optoa/enumerate_partition.hpp"

#include <fstream>
#include <numeric>

#include "optoa/error.hpp"

namespace optoa {

namespace {

constexpr int kInf = -1;

std::string type_label(std::size_t index, int n, int gamma) {
  std::string out = "class";
  for (int x : type_from_index(index, n, gamma)) out += " " + std::to_string(x);
  return out;
}

void append_row_text(std::string& buf, std::span<const Symbol> row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c) buf.push_back(' ');
    if (row[c] < 10) {
      buf.push_back(static_cast<char>('0' + row[c]));
    } else {
      buf += std::to_string(row[c]);
    }
  }
  buf.push_back('\n');
}

}  // namespace

EnumerationParams enumeration_params(int k, int n) {
  require(k >= 2 && n >= 2 && n <= kMaxAlphabet, Errc::invalid_argument, "k and n must be at least 2");
  require((k - 1) % n == 0 && (k - 1) / n >= 1, Errc::infeasible,
          "(k-1)/n = " + std::to_string(k - 1) + "/" + std::to_string(n) + " is not a positive integer");
  const std::int64_t den = std::int64_t{k} * (n - 1) + 1;
  require(std::int64_t{n} * n <= den, Errc::infeasible, "n^2 > k(n-1)+1");

  EnumerationParams p;
  p.k = k;
  p.n = n;
  p.abar = (k - 1) / n;
  p.lambda = checked_mul(binomial(k - 2, p.abar - 1), checked_pow(n - 1, k - p.abar - 1));
  p.tuple_count = checked_mul(binomial(k, p.abar), checked_pow(n - 1, k - p.abar));
  const std::int64_t rows = checked_mul(p.lambda, std::int64_t{n} * n);
  p.m = rows / den;
  if (rows % den != 0 || rows - p.tuple_count != p.m)
    throw std::logic_error("enumeration counts are inconsistent");
  return p;
}

void for_each_enumerated_row(int k, int n, const std::function<void(std::span<const Symbol>)>& sink) {
  const auto p = enumeration_params(k, n);
  std::vector<int> zeros(static_cast<std::size_t>(p.abar));
  std::iota(zeros.begin(), zeros.end(), 0);
  std::vector<Symbol> row(static_cast<std::size_t>(k));
  std::vector<int> free;
  free.reserve(static_cast<std::size_t>(k));

  while (true) {
    free.clear();
    std::fill(row.begin(), row.end(), Symbol{1});
    std::size_t z = 0;
    for (int c = 0; c < k; ++c) {
      if (z < zeros.size() && zeros[z] == c) {
        row[c] = 0;
        ++z;
      } else {
        free.push_back(c);
      }
    }
    // Odometer over the nonzero positions, last position fastest.
    while (true) {
      sink(row);
      int i = static_cast<int>(free.size()) - 1;
      while (i >= 0 && row[free[i]] == n - 1) {
        row[free[i]] = 1;
        --i;
      }
      if (i < 0) break;
      ++row[free[i]];
    }
    // Next zero-position subset in lexicographic order.
    int i = p.abar - 1;
    while (i >= 0 && zeros[i] == k - p.abar + i) --i;
    if (i < 0) break;
    ++zeros[i];
    for (int j = i + 1; j < p.abar; ++j) zeros[j] = zeros[j - 1] + 1;
  }
}

OrthogonalArray enumerate_oa(int k, int n, std::uint64_t max_rows) {
  const auto p = enumeration_params(k, n);
  const auto rows = static_cast<std::uint64_t>(p.tuple_count + p.m);
  require(rows <= max_rows, Errc::too_large,
          std::to_string(rows) + " rows exceed the materialization limit; use the streaming interface");
  std::vector<Symbol> cells;
  cells.reserve(rows * static_cast<std::uint64_t>(k));
  for_each_enumerated_row(k, n, [&](std::span<const Symbol> r) { cells.insert(cells.end(), r.begin(), r.end()); });
  cells.insert(cells.end(), static_cast<std::size_t>(p.m) * k, Symbol{0});
  return OrthogonalArray(k, n, p.lambda, std::move(cells));
}

int PartitionSpec::parts(int n) const { return static_cast<int>(checked_pow(n - 1, gamma())); }

PartitionSpec default_partition_spec(int k, int n) {
  const auto p = enumeration_params(k, n);
  const int width = p.abar + 3;
  const int gamma = k / width;
  require(gamma >= 1, Errc::infeasible, "gamma = floor(k/(abar+3)) is 0; no valid column classes");
  PartitionSpec spec;
  spec.class_sizes.assign(static_cast<std::size_t>(gamma - 1), width);
  spec.class_sizes.push_back(k - (gamma - 1) * width);
  return spec;
}

void validate_partition_spec(const PartitionSpec& spec, int k, int n) {
  const auto p = enumeration_params(k, n);
  require(!spec.class_sizes.empty(), Errc::invalid_argument, "no column classes given");
  int sum = 0;
  for (int size : spec.class_sizes) {
    require(size >= p.abar + 3, Errc::invalid_argument,
            "class size " + std::to_string(size) + " is below abar+3 = " + std::to_string(p.abar + 3));
    sum += size;
  }
  require(sum == k, Errc::invalid_argument, "class sizes sum to " + std::to_string(sum) + ", not k");
}

std::vector<int> row_type(std::span<const Symbol> row, int n, const PartitionSpec& spec) {
  std::vector<int> tau;
  tau.reserve(spec.class_sizes.size());
  std::size_t col = 0;
  for (int size : spec.class_sizes) {
    int s = 0;
    for (int j = 0; j < size; ++j, ++col)
      if (row[col] != 0) s += row[col] - 1;
    tau.push_back(s % (n - 1));
  }
  return tau;
}

std::size_t type_index(std::span<const int> tau, int n) {
  std::size_t idx = 0;
  for (int x : tau) idx = idx * static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(x);
  return idx;
}

std::vector<int> type_from_index(std::size_t index, int n, int gamma) {
  std::vector<int> tau(static_cast<std::size_t>(gamma));
  for (int i = gamma - 1; i >= 0; --i) {
    tau[i] = static_cast<int>(index % static_cast<std::size_t>(n - 1));
    index /= static_cast<std::size_t>(n - 1);
  }
  return tau;
}

std::vector<int> shift_bijection(const std::vector<int>& row, int n, std::span<const int> class_sizes,
                                 std::span<const int> kappa) {
  require(n >= 2, Errc::invalid_argument, "n must be at least 2");
  require(class_sizes.size() == kappa.size(), Errc::invalid_argument, "kappa needs one entry per class");
  require(std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0}) == row.size(),
          Errc::invalid_argument, "class sizes do not cover the row");
  const int mod = n - 1;
  std::vector<int> out(row);
  std::size_t start = 0;
  for (std::size_t i = 0; i < class_sizes.size(); ++i) {
    const auto end = start + static_cast<std::size_t>(class_sizes[i]);
    std::size_t j = start + 2;
    while (j < end && out[j] == kInf) ++j;
    require(j < end, Errc::invalid_argument,
            "class " + std::to_string(i) + " has no finite entry past its second column");
    out[j] = ((out[j] + kappa[i]) % mod + mod) % mod;
    start = end;
  }
  return out;
}

PartParams part_params(const EnumerationParams& p, int gamma) {
  const std::int64_t div = checked_pow(p.n - 1, gamma);
  require(p.lambda % div == 0 && p.m % div == 0, Errc::infeasible,
          "lambda or m is not divisible by (n-1)^gamma");
  return {p.lambda / div, p.m / div};
}

std::vector<OrthogonalArray> partition_oa(int k, int n, std::uint64_t max_rows) {
  if (n == 2 && k == 3) return {enumerate_oa(k, n, max_rows)};
  return multi_partition_oa(k, n, PartitionSpec{{k}}, max_rows);
}

std::vector<OrthogonalArray> multi_partition_oa(int k, int n, std::optional<PartitionSpec> spec,
                                                std::uint64_t max_rows) {
  const auto p = enumeration_params(k, n);
  if (!spec) spec = default_partition_spec(k, n);
  validate_partition_spec(*spec, k, n);
  const auto pp = part_params(p, spec->gamma());
  const auto parts = static_cast<std::size_t>(spec->parts(n));
  const auto total = static_cast<std::uint64_t>(p.tuple_count + p.m);
  require(total <= max_rows, Errc::too_large,
          std::to_string(total) + " rows exceed the materialization limit; use the streaming interface");

  std::vector<std::vector<Symbol>> cells(parts);
  const auto per_part = static_cast<std::size_t>(pp.lambda) * n * n * k;
  for (auto& c : cells) c.reserve(per_part);
  stream_multi_partition(k, n, *spec, [&](std::size_t part, std::span<const Symbol> row) {
    cells[part].insert(cells[part].end(), row.begin(), row.end());
  });
  std::vector<OrthogonalArray> out;
  out.reserve(parts);
  for (auto& c : cells) out.emplace_back(k, n, pp.lambda, std::move(c));
  return out;
}

void stream_multi_partition(int k, int n, const PartitionSpec& spec,
                            const std::function<void(std::size_t, std::span<const Symbol>)>& sink) {
  const auto p = enumeration_params(k, n);
  validate_partition_spec(spec, k, n);
  const auto pp = part_params(p, spec.gamma());
  const auto parts = static_cast<std::size_t>(spec.parts(n));
  for_each_enumerated_row(k, n, [&](std::span<const Symbol> row) {
    const auto tau = row_type(row, n, spec);
    sink(type_index(tau, n), row);
  });
  const std::vector<Symbol> zero(static_cast<std::size_t>(k), 0);
  for (std::size_t part = 0; part < parts; ++part)
    for (std::int64_t i = 0; i < pp.m; ++i) sink(part, zero);
}

VerificationReport verify_enumeration_streaming(int k, int n) {
  const auto p = enumeration_params(k, n);
  StreamingVerifier v(k, n, p.lambda);
  for_each_enumerated_row(k, n, [&](std::span<const Symbol> row) { v.push(row); });
  v.push_repeated(std::vector<Symbol>(static_cast<std::size_t>(k), 0), p.m);
  return v.finish();
}

std::vector<VerificationReport> verify_multi_partition_streaming(int k, int n, const PartitionSpec& spec) {
  const auto p = enumeration_params(k, n);
  validate_partition_spec(spec, k, n);
  const auto pp = part_params(p, spec.gamma());
  const auto parts = static_cast<std::size_t>(spec.parts(n));
  std::vector<StreamingVerifier> verifiers(parts, StreamingVerifier(k, n, pp.lambda));
  for_each_enumerated_row(k, n, [&](std::span<const Symbol> row) {
    verifiers[type_index(row_type(row, n, spec), n)].push(row);
  });
  const std::vector<Symbol> zero(static_cast<std::size_t>(k), 0);
  std::vector<VerificationReport> out;
  out.reserve(parts);
  for (auto& v : verifiers) {
    v.push_repeated(zero, pp.m);
    out.push_back(v.finish());
  }
  return out;
}

std::vector<std::string> write_multi_partition_files(int k, int n, const PartitionSpec& spec,
                                                     const std::string& stem) {
  const auto p = enumeration_params(k, n);
  validate_partition_spec(spec, k, n);
  const auto pp = part_params(p, spec.gamma());
  const auto parts = static_cast<std::size_t>(spec.parts(n));

  std::vector<std::string> paths;
  std::vector<std::ofstream> files;
  std::vector<std::string> buffers(parts);
  for (std::size_t i = 0; i < parts; ++i) {
    paths.push_back(stem + "." + std::to_string(i) + ".txt");
    files.emplace_back(paths.back(), std::ios::binary);
    require(static_cast<bool>(files.back()), Errc::invalid_argument, "cannot open " + paths.back());
    files.back() << "OA " << k << ' ' << n << ' ' << pp.lambda << '\n'
                 << "# " << type_label(i, n, spec.gamma()) << '\n';
  }
  stream_multi_partition(k, n, spec, [&](std::size_t part, std::span<const Symbol> row) {
    auto& buf = buffers[part];
    append_row_text(buf, row);
    if (buf.size() > (1u << 16)) {
      files[part] << buf;
      buf.clear();
    }
  });
  for (std::size_t i = 0; i < parts; ++i) {
    files[i] << buffers[i];
    files[i].close();
    require(!files[i].fail(), Errc::invalid_argument, "failed writing " + paths[i]);
  }
  return paths;
}

void write_enumeration_file(int k, int n, const std::string& path) {
  const auto p = enumeration_params(k, n);
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), Errc::invalid_argument, "cannot open " + path);
  out << "OA " << k << ' ' << n << ' ' << p.lambda << '\n';
  std::string buf;
  auto flush = [&] {
    out << buf;
    buf.clear();
  };
  for_each_enumerated_row(k, n, [&](std::span<const Symbol> row) {
    append_row_text(buf, row);
    if (buf.size() > (1u << 16)) flush();
  });
  const std::vector<Symbol> zero(static_cast<std::size_t>(k), 0);
  for (std::int64_t i = 0; i < p.m; ++i) {
    append_row_text(buf, zero);
    if (buf.size() > (1u << 16)) flush();
  }
  flush();
  out.close();
  require(!out.fail(), Errc::invalid_argument, "failed writing " + path);
}

std::string partition_class_label(std::size_t index, int n, int gamma) { return type_label(index, n, gamma); }

}  // namespace optoa
