#include "optoa/optoa.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "optoa/bounds.hpp"
#include "optoa/cyclic.hpp"
#include "optoa/deletion.hpp"
#include "optoa/enumerate_partition.hpp"
#include "optoa/error.hpp"
#include "optoa/hadamard_bibd.hpp"
#include "optoa/verifier.hpp"

struct optoa_array {
  optoa::OrthogonalArray value;
};
struct optoa_array_list {
  std::vector<optoa_array> items;
};
struct optoa_report {
  optoa::VerificationReport value;
};
struct optoa_report_list {
  std::vector<optoa_report> items;
};
struct optoa_start {
  optoa::StartingRowSet value;
};
struct optoa_start_list {
  std::vector<optoa_start> items;
};
struct optoa_design {
  optoa::BlockDesign value;
};
struct optoa_hadamard {
  optoa::HadamardMatrix value;
};

namespace {

thread_local std::string g_last_error;

// Failure while reading or writing a file.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

optoa_status to_status(optoa::Errc c) {
  switch (c) {
    case optoa::Errc::invalid_argument: return OPTOA_ERR_INVALID_ARGUMENT;
    case optoa::Errc::parse: return OPTOA_ERR_PARSE;
    case optoa::Errc::infeasible: return OPTOA_ERR_INFEASIBLE;
    case optoa::Errc::unreachable: return OPTOA_ERR_UNREACHABLE;
    case optoa::Errc::too_large: return OPTOA_ERR_TOO_LARGE;
    case optoa::Errc::not_found: return OPTOA_ERR_NOT_FOUND;
  }
  return OPTOA_ERR_INTERNAL;
}

template <class F>
optoa_status guard(F&& f) {
  try {
    f();
    return OPTOA_OK;
  } catch (const optoa::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const IoError& e) {
    g_last_error = e.what();
    return OPTOA_ERR_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return OPTOA_ERR_TOO_LARGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OPTOA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return OPTOA_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) optoa::fail(optoa::Errc::invalid_argument, std::string(what) + " is null");
}

std::ifstream open_in(const char* path) {
  need(path, "path");
  std::ifstream in(path);
  if (!in) throw IoError(std::string("cannot open ") + path + " for reading");
  return in;
}

template <class W>
void write_file(const char* path, W&& w) {
  need(path, "path");
  std::ofstream out(path);
  if (!out) throw IoError(std::string("cannot open ") + path + " for writing");
  w(out);
  out.flush();
  if (!out) throw IoError(std::string("write to ") + path + " failed");
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

optoa_fraction fraction(const optoa::Rational& q) { return {q.numerator(), q.denominator()}; }

std::optional<optoa::PartitionSpec> spec_from(int k, int n, const int* sizes, size_t count) {
  if (count == 0) return std::nullopt;
  need(sizes, "class_sizes");
  optoa::PartitionSpec spec{std::vector<int>(sizes, sizes + count)};
  optoa::validate_partition_spec(spec, k, n);
  return spec;
}

std::uint64_t row_limit(uint64_t max_rows) { return max_rows ? max_rows : optoa::kDefaultMaterializeLimit; }

optoa::PartitionSpec resolve_spec(int k, int n, const int* sizes, size_t count) {
  auto spec = spec_from(k, n, sizes, count);
  return spec ? *spec : optoa::default_partition_spec(k, n);
}

}  // namespace

extern "C" {

const char* optoa_last_error(void) { return g_last_error.c_str(); }

const char* optoa_status_name(optoa_status status) {
  switch (status) {
    case OPTOA_OK: return "ok";
    case OPTOA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OPTOA_ERR_PARSE: return "parse error";
    case OPTOA_ERR_INFEASIBLE: return "infeasible";
    case OPTOA_ERR_UNREACHABLE: return "unreachable";
    case OPTOA_ERR_TOO_LARGE: return "too large";
    case OPTOA_ERR_NOT_FOUND: return "not found";
    case OPTOA_ERR_IO: return "i/o error";
    case OPTOA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void optoa_string_free(char* s) { std::free(s); }

// Arrays

optoa_status optoa_array_read_file(const char* path, optoa_array** out) {
  return guard([&] {
    need(out, "out");
    auto in = open_in(path);
    *out = new optoa_array{optoa::read_oa(in)};
  });
}

optoa_status optoa_array_parse(const char* text, optoa_array** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new optoa_array{optoa::parse_oa(text)};
  });
}

optoa_status optoa_array_write_file(const optoa_array* a, const char* path, const char* comment) {
  return guard([&] {
    need(a, "array");
    write_file(path, [&](std::ostream& o) { optoa::write_oa(o, a->value, comment ? comment : ""); });
  });
}

optoa_status optoa_array_format(const optoa_array* a, char** out_text) {
  return guard([&] {
    need(a, "array");
    need(out_text, "out_text");
    *out_text = dup_string(optoa::format_oa(a->value));
  });
}

optoa_status optoa_array_stack(const optoa_array* a, int copies, optoa_array** out) {
  return guard([&] {
    need(a, "array");
    need(out, "out");
    *out = new optoa_array{optoa::stack(a->value, copies)};
  });
}

int optoa_array_k(const optoa_array* a) { return a ? a->value.k() : 0; }
int optoa_array_n(const optoa_array* a) { return a ? a->value.n() : 0; }
int64_t optoa_array_lambda(const optoa_array* a) { return a ? a->value.lambda() : 0; }
uint64_t optoa_array_rows(const optoa_array* a) { return a ? a->value.row_count() : 0; }

optoa_status optoa_array_get(const optoa_array* a, uint64_t row, int col, int* out) {
  return guard([&] {
    need(a, "array");
    need(out, "out");
    optoa::require(row < a->value.row_count() && col >= 0 && col < a->value.k(),
                   optoa::Errc::invalid_argument, "cell index out of range");
    *out = a->value.row(row)[static_cast<std::size_t>(col)];
  });
}

void optoa_array_free(optoa_array* a) { delete a; }

size_t optoa_array_list_size(const optoa_array_list* l) { return l ? l->items.size() : 0; }

const optoa_array* optoa_array_list_get(const optoa_array_list* l, size_t i) {
  return l && i < l->items.size() ? &l->items[i] : nullptr;
}

void optoa_array_list_free(optoa_array_list* l) { delete l; }

// Bounds

optoa_status optoa_compute_bounds(int k, int n, int64_t lambda, optoa_bounds* out) {
  return guard([&] {
    need(out, "out");
    const auto r = optoa::bound_report(k, n, lambda);
    optoa_bounds b{};
    b.rao_bound = fraction(r.rao_bound);
    b.floor_bound = r.floor_bound;
    if (r.best_refined && r.best_refined->value) {
      b.has_best_refined = 1;
      b.best_alpha = r.best_refined->alpha;
      b.best_refined = fraction(*r.best_refined->value);
    }
    b.abar_integral = r.abar_integral();
    b.optimal_possible = r.optimal_possible();
    b.basic = b.optimal_possible && boost::gcd(r.rao_bound.numerator(), lambda) == 1;
    *out = b;
  });
}

optoa_status optoa_refined_bound(int k, int n, int64_t lambda, int alpha, optoa_fraction* out) {
  return guard([&] {
    need(out, "out");
    *out = fraction(optoa::refined_bound(k, n, lambda, alpha));
  });
}

optoa_status optoa_basic_quadruple(int k, int n, int64_t* m, int64_t* lambda) {
  return guard([&] {
    need(m, "m");
    need(lambda, "lambda");
    auto q = optoa::basic_quadruple(k, n);
    if (!q) optoa::fail(optoa::Errc::not_found, "no basic quadruple with m > 1 for these (k, n)");
    *m = q->m;
    *lambda = q->lambda;
  });
}

optoa_status optoa_feasible_quadruples(int k, int n, int64_t lambda_max, int64_t* m_out, int64_t* lambda_out,
                                       size_t capacity, size_t* count) {
  return guard([&] {
    need(count, "count");
    const auto qs = optoa::feasible_quadruples(k, n, lambda_max);
    if (capacity > 0) {
      need(m_out, "m_out");
      need(lambda_out, "lambda_out");
    }
    for (size_t i = 0; i < qs.size() && i < capacity; ++i) {
      m_out[i] = qs[i].m;
      lambda_out[i] = qs[i].lambda;
    }
    *count = qs.size();
  });
}

// Verification

optoa_status optoa_verify(const optoa_array* a, optoa_report** out) {
  return guard([&] {
    need(a, "array");
    need(out, "out");
    *out = new optoa_report{optoa::verify_strength2(a->value)};
  });
}

optoa_status optoa_verify_file_streaming(const char* path, optoa_report** out) {
  return guard([&] {
    need(out, "out");
    auto in = open_in(path);
    optoa::OaReader reader(in);
    const auto& h = reader.header();
    optoa::StreamingVerifier v(h.k, h.n, h.lambda);
    std::vector<optoa::Symbol> row;
    while (reader.next(row)) v.push(row);
    *out = new optoa_report{v.finish()};
  });
}

optoa_status optoa_zero_count_check(const optoa_array* a, int* out) {
  return guard([&] {
    need(a, "array");
    need(out, "out");
    *out = optoa::zero_count_check(a->value) ? 1 : 0;
  });
}

int optoa_report_is_oa(const optoa_report* r) { return r && r->value.is_oa ? 1 : 0; }

int optoa_report_lambda_observed(const optoa_report* r, int64_t* out) {
  if (!r || !r->value.lambda_observed) return 0;
  if (out) *out = *r->value.lambda_observed;
  return 1;
}

int64_t optoa_report_m(const optoa_report* r) { return r ? r->value.m_observed : 0; }
uint64_t optoa_report_rows(const optoa_report* r) { return r ? r->value.rows_seen : 0; }

size_t optoa_report_repeated_row(const optoa_report* r, int* buf, size_t capacity) {
  if (!r) return 0;
  const auto& row = r->value.repeated_row;
  for (size_t i = 0; buf && i < row.size() && i < capacity; ++i) buf[i] = row[i];
  return row.size();
}

int optoa_report_witness(const optoa_report* r, int* col_a, int* col_b, int* sym_a, int* sym_b,
                         int64_t* count) {
  if (!r || !r->value.offending) return 0;
  const auto& w = *r->value.offending;
  if (col_a) *col_a = w.col_a;
  if (col_b) *col_b = w.col_b;
  if (sym_a) *sym_a = w.sym_a;
  if (sym_b) *sym_b = w.sym_b;
  if (count) *count = w.count;
  return 1;
}

unsigned optoa_report_classes(const optoa_report* r) {
  if (!r) return 0;
  const auto& c = r->value.classification;
  unsigned out = 0;
  if (c.optimal) out |= OPTOA_CLASS_OPTIMAL;
  if (c.basic) out |= OPTOA_CLASS_BASIC;
  if (c.m_optimal) out |= OPTOA_CLASS_M_OPTIMAL;
  return out;
}

size_t optoa_report_histogram_size(const optoa_report* r) {
  return r ? r->value.zero_count_histogram.size() : 0;
}

optoa_status optoa_report_histogram_entry(const optoa_report* r, size_t i, int* zeros, int64_t* rows) {
  return guard([&] {
    need(r, "report");
    const auto& h = r->value.zero_count_histogram;
    optoa::require(i < h.size(), optoa::Errc::invalid_argument, "histogram index out of range");
    auto it = std::next(h.begin(), static_cast<std::ptrdiff_t>(i));
    if (zeros) *zeros = it->first;
    if (rows) *rows = it->second;
  });
}

void optoa_report_free(optoa_report* r) { delete r; }

size_t optoa_report_list_size(const optoa_report_list* l) { return l ? l->items.size() : 0; }

const optoa_report* optoa_report_list_get(const optoa_report_list* l, size_t i) {
  return l && i < l->items.size() ? &l->items[i] : nullptr;
}

void optoa_report_list_free(optoa_report_list* l) { delete l; }

// Cyclic construction

optoa_status optoa_start_read_file(const char* path, optoa_start** out) {
  return guard([&] {
    need(out, "out");
    auto in = open_in(path);
    *out = new optoa_start{optoa::read_start(in)};
  });
}

optoa_status optoa_start_parse(const char* text, optoa_start** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::istringstream in{std::string(text)};
    *out = new optoa_start{optoa::read_start(in)};
  });
}

optoa_status optoa_start_write_file(const optoa_start* s, const char* path) {
  return guard([&] {
    need(s, "start");
    write_file(path, [&](std::ostream& o) { optoa::write_start(o, s->value); });
  });
}

optoa_status optoa_start_format(const optoa_start* s, char** out_text) {
  return guard([&] {
    need(s, "start");
    need(out_text, "out_text");
    std::ostringstream o;
    optoa::write_start(o, s->value);
    *out_text = dup_string(o.str());
  });
}

optoa_status optoa_develop(const optoa_start* s, optoa_array** out) {
  return guard([&] {
    need(s, "start");
    need(out, "out");
    *out = new optoa_array{optoa::develop(s->value)};
  });
}

optoa_status optoa_distance_check(const optoa_start* s, int64_t lambda, int* ok) {
  return guard([&] {
    need(s, "start");
    need(ok, "ok");
    *ok = optoa::distance_check(s->value, lambda).ok ? 1 : 0;
  });
}

void optoa_start_free(optoa_start* s) { delete s; }

optoa_status optoa_search(int k, int n, int64_t m, int64_t lambda, size_t limit, optoa_start_list** out) {
  return guard([&] {
    need(out, "out");
    auto found = optoa::search_starting_rows(k, n, m, lambda, limit);
    auto* l = new optoa_start_list;
    for (auto& s : found) l->items.push_back(optoa_start{std::move(s)});
    *out = l;
  });
}

size_t optoa_start_list_size(const optoa_start_list* l) { return l ? l->items.size() : 0; }

const optoa_start* optoa_start_list_get(const optoa_start_list* l, size_t i) {
  return l && i < l->items.size() ? &l->items[i] : nullptr;
}

void optoa_start_list_free(optoa_start_list* l) { delete l; }

// Hadamard matrices and designs

optoa_status optoa_hadamard_construct(int order, optoa_hadamard** out) {
  return guard([&] {
    need(out, "out");
    *out = new optoa_hadamard{optoa::hadamard(order)};
  });
}

int optoa_hadamard_order(const optoa_hadamard* h) { return h ? h->value.order() : 0; }

optoa_status optoa_hadamard_write_file(const optoa_hadamard* h, const char* path) {
  return guard([&] {
    need(h, "hadamard");
    write_file(path, [&](std::ostream& o) { optoa::write_hadamard(o, h->value); });
  });
}

void optoa_hadamard_free(optoa_hadamard* h) { delete h; }

optoa_status optoa_hadamard_to_bibd(const optoa_hadamard* h, optoa_design** out) {
  return guard([&] {
    need(h, "hadamard");
    need(out, "out");
    *out = new optoa_design{optoa::hadamard_to_symmetric_bibd(h->value)};
  });
}

optoa_status optoa_design_derived_complement(const optoa_design* d, int block_index, optoa_design** out) {
  return guard([&] {
    need(d, "design");
    need(out, "out");
    *out = new optoa_design{optoa::derived_then_complement(d->value, block_index)};
  });
}

optoa_status optoa_design_to_array(const optoa_design* d, optoa_array** out) {
  return guard([&] {
    need(d, "design");
    need(out, "out");
    *out = new optoa_array{optoa::bibd_to_oa(d->value)};
  });
}

optoa_status optoa_array_to_design(const optoa_array* a, optoa_design** out) {
  return guard([&] {
    need(a, "array");
    need(out, "out");
    *out = new optoa_design{optoa::oa_to_bibd(a->value)};
  });
}

optoa_status optoa_design_read_file(const char* path, optoa_design** out) {
  return guard([&] {
    need(out, "out");
    auto in = open_in(path);
    *out = new optoa_design{optoa::read_bibd(in)};
  });
}

optoa_status optoa_design_write_file(const optoa_design* d, const char* path) {
  return guard([&] {
    need(d, "design");
    write_file(path, [&](std::ostream& o) { optoa::write_bibd(o, d->value); });
  });
}

void optoa_design_params(const optoa_design* d, int* v, int* b, int* r, int* k, int* lambda) {
  if (!d) return;
  if (v) *v = d->value.v();
  if (b) *b = d->value.b();
  if (r) *r = d->value.r();
  if (k) *k = d->value.block_size();
  if (lambda) *lambda = d->value.lambda();
}

void optoa_design_free(optoa_design* d) { delete d; }

// Enumeration and partitions

optoa_status optoa_enumeration_params(int k, int n, int* abar, int64_t* lambda, int64_t* m, int64_t* tuples) {
  return guard([&] {
    const auto p = optoa::enumeration_params(k, n);
    if (abar) *abar = p.abar;
    if (lambda) *lambda = p.lambda;
    if (m) *m = p.m;
    if (tuples) *tuples = p.tuple_count;
  });
}

optoa_status optoa_enumerate(int k, int n, uint64_t max_rows, optoa_array** out) {
  return guard([&] {
    need(out, "out");
    *out = new optoa_array{optoa::enumerate_oa(k, n, row_limit(max_rows))};
  });
}

optoa_status optoa_partition(int k, int n, uint64_t max_rows, optoa_array_list** out) {
  return guard([&] {
    need(out, "out");
    auto parts = optoa::partition_oa(k, n, row_limit(max_rows));
    auto* l = new optoa_array_list;
    for (auto& p : parts) l->items.push_back(optoa_array{std::move(p)});
    *out = l;
  });
}

optoa_status optoa_multi_partition(int k, int n, const int* class_sizes, size_t count, uint64_t max_rows,
                                   optoa_array_list** out) {
  return guard([&] {
    need(out, "out");
    auto parts = optoa::multi_partition_oa(k, n, spec_from(k, n, class_sizes, count), row_limit(max_rows));
    auto* l = new optoa_array_list;
    for (auto& p : parts) l->items.push_back(optoa_array{std::move(p)});
    *out = l;
  });
}

optoa_status optoa_default_partition(int k, int n, int* class_sizes, size_t capacity, size_t* count) {
  return guard([&] {
    need(count, "count");
    const auto spec = optoa::default_partition_spec(k, n);
    for (size_t i = 0; class_sizes && i < spec.class_sizes.size() && i < capacity; ++i)
      class_sizes[i] = spec.class_sizes[i];
    *count = spec.class_sizes.size();
  });
}

optoa_status optoa_partition_class_label(size_t index, int n, int gamma, char** out_text) {
  return guard([&] {
    need(out_text, "out_text");
    *out_text = dup_string(optoa::partition_class_label(index, n, gamma));
  });
}

optoa_status optoa_verify_enumeration_streaming(int k, int n, optoa_report** out) {
  return guard([&] {
    need(out, "out");
    *out = new optoa_report{optoa::verify_enumeration_streaming(k, n)};
  });
}

optoa_status optoa_verify_multi_partition_streaming(int k, int n, const int* class_sizes, size_t count,
                                                    optoa_report_list** out) {
  return guard([&] {
    need(out, "out");
    auto reports = optoa::verify_multi_partition_streaming(k, n, resolve_spec(k, n, class_sizes, count));
    auto* l = new optoa_report_list;
    for (auto& r : reports) l->items.push_back(optoa_report{std::move(r)});
    *out = l;
  });
}

optoa_status optoa_write_enumeration_file(int k, int n, const char* path) {
  return guard([&] {
    need(path, "path");
    optoa::write_enumeration_file(k, n, path);
  });
}

optoa_status optoa_write_multi_partition_files(int k, int n, const int* class_sizes, size_t count,
                                               const char* stem, size_t* files) {
  return guard([&] {
    need(stem, "stem");
    auto written = optoa::write_multi_partition_files(k, n, resolve_spec(k, n, class_sizes, count), stem);
    if (files) *files = written.size();
  });
}

// Deletion

optoa_status optoa_delete_columns(const optoa_array* a, int s, const int* columns, optoa_array** out) {
  return guard([&] {
    need(a, "array");
    need(out, "out");
    std::optional<std::vector<int>> cols;
    if (columns) {
      optoa::require(s >= 0, optoa::Errc::invalid_argument, "s must be nonnegative");
      cols.emplace(columns, columns + s);
    }
    *out = new optoa_array{optoa::delete_columns(a->value, s, cols)};
  });
}

optoa_status optoa_max_safe_deletions(int k, int n, int64_t lambda, int* out) {
  return guard([&] {
    need(out, "out");
    *out = optoa::max_safe_deletions(k, n, lambda);
  });
}

optoa_status optoa_m_optimal_after_deletion(int k, int n, int64_t lambda, int s, int* out) {
  return guard([&] {
    need(out, "out");
    *out = optoa::m_optimal_after_deletion(k, n, lambda, s) ? 1 : 0;
  });
}

}  // extern "C"
