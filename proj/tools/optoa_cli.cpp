// optoa: construct, verify, search and trim orthogonal arrays with a
// maximally repeated row.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optoa/optoa.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kInfeasible = 2, kVerifyFailed = 3, kUnreachable = 4 };

struct Failure {
  int code;
};

int exit_code(optoa_status s) {
  switch (s) {
    case OPTOA_OK: return kOk;
    case OPTOA_ERR_INFEASIBLE: return kInfeasible;
    case OPTOA_ERR_UNREACHABLE: return kUnreachable;
    default: return kUsage;
  }
}

void check(optoa_status s) {
  if (s == OPTOA_OK) return;
  std::cerr << "error: " << optoa_status_name(s) << ": " << optoa_last_error() << '\n';
  throw Failure{exit_code(s)};
}

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  throw Failure{code};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Array = std::unique_ptr<optoa_array, Deleter<optoa_array, optoa_array_free>>;
using ArrayList = std::unique_ptr<optoa_array_list, Deleter<optoa_array_list, optoa_array_list_free>>;
using Report = std::unique_ptr<optoa_report, Deleter<optoa_report, optoa_report_free>>;
using ReportList = std::unique_ptr<optoa_report_list, Deleter<optoa_report_list, optoa_report_list_free>>;
using Start = std::unique_ptr<optoa_start, Deleter<optoa_start, optoa_start_free>>;
using StartList = std::unique_ptr<optoa_start_list, Deleter<optoa_start_list, optoa_start_list_free>>;
using Design = std::unique_ptr<optoa_design, Deleter<optoa_design, optoa_design_free>>;
using Hadamard = std::unique_ptr<optoa_hadamard, Deleter<optoa_hadamard, optoa_hadamard_free>>;

std::string take_string(char* s) {
  std::string out(s);
  optoa_string_free(s);
  return out;
}

std::string fraction_text(const optoa_fraction& f) {
  return f.den == 1 ? std::to_string(f.num) : std::to_string(f.num) + "/" + std::to_string(f.den);
}

std::string class_text(unsigned c) {
  std::string out;
  auto add = [&](const char* s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (c & OPTOA_CLASS_OPTIMAL) add("optimal");
  if (c & OPTOA_CLASS_BASIC) add("basic");
  if (c & OPTOA_CLASS_M_OPTIMAL) add("m-optimal");
  return out.empty() ? "none" : out;
}

std::string summary(const optoa_report* r) {
  if (!optoa_report_is_oa(r)) return "OA: no";
  int64_t lambda = 0;
  optoa_report_lambda_observed(r, &lambda);
  return "OA: yes, lambda=" + std::to_string(lambda) + ", m=" + std::to_string(optoa_report_m(r)) +
         ", classes: " + class_text(optoa_report_classes(r));
}

void print_details(const optoa_report* r) {
  std::vector<int> row(optoa_report_repeated_row(r, nullptr, 0));
  optoa_report_repeated_row(r, row.data(), row.size());
  std::cout << "rows: " << optoa_report_rows(r) << "\nrepeated row:";
  for (int x : row) std::cout << ' ' << x;
  std::cout << "\nzero counts:";
  for (size_t i = 0; i < optoa_report_histogram_size(r); ++i) {
    int zeros = 0;
    int64_t rows = 0;
    check(optoa_report_histogram_entry(r, i, &zeros, &rows));
    std::cout << ' ' << zeros << ':' << rows;
  }
  std::cout << '\n';
}

// Prints the summary; a failed report prints its witness and aborts.
void require_oa(const optoa_report* r, const std::string& what) {
  std::cout << (what.empty() ? "" : what + ": ") << summary(r) << '\n';
  if (optoa_report_is_oa(r)) return;
  int a = 0, b = 0, x = 0, y = 0;
  int64_t count = 0;
  if (optoa_report_witness(r, &a, &b, &x, &y, &count))
    std::cerr << "witness: columns (" << a << ", " << b << ") symbols (" << x << ", " << y << ") occur "
              << count << " times\n";
  die(kVerifyFailed, "verification failed" + (what.empty() ? std::string() : " for " + what));
}

Report verify(const optoa_array* a) {
  optoa_report* r = nullptr;
  check(optoa_verify(a, &r));
  return Report(r);
}

void write_array(const optoa_array* a, const std::string& path, const std::string& comment = {}) {
  check(optoa_array_write_file(a, path.c_str(), comment.empty() ? nullptr : comment.c_str()));
  std::cout << "wrote " << path << '\n';
}

// bounds

struct BoundsArgs {
  int k = 0;
  int n = 0;
  int64_t lambda = 0;
};

int run_bounds(const BoundsArgs& args) {
  optoa_bounds b{};
  check(optoa_compute_bounds(args.k, args.n, args.lambda, &b));
  std::cout << "OA_" << args.lambda << "(" << args.k << "," << args.n << ")\n";
  std::cout << "rational bound: m <= " << fraction_text(b.rao_bound) << '\n';
  std::cout << "floor bound: " << b.floor_bound << '\n';
  if (b.has_best_refined)
    std::cout << "best refined bound: m <= " << fraction_text(b.best_refined) << " (alpha=" << b.best_alpha
              << ")\n";
  else
    std::cout << "best refined bound: none\n";

  if (!b.abar_integral)
    std::cout << "optimal impossible: k ≢ 1 mod n\n";
  else if (!b.optimal_possible)
    std::cout << "optimal impossible: bound " << fraction_text(b.rao_bound) << " is not an integer\n";
  else
    std::cout << "feasible: m=" << b.rao_bound.num << '\n';
  std::cout << "basic: " << (b.basic ? "yes" : "no") << '\n';

  int64_t m = 0, lambda = 0;
  const auto s = optoa_basic_quadruple(args.k, args.n, &m, &lambda);
  if (s == OPTOA_OK)
    std::cout << "basic quadruple: m=" << m << ", lambda=" << lambda << '\n';
  else if (s == OPTOA_ERR_NOT_FOUND || s == OPTOA_ERR_INFEASIBLE)
    std::cout << "basic quadruple: none\n";
  else
    check(s);

  int safe = 0;
  if (b.optimal_possible && optoa_max_safe_deletions(args.k, args.n, args.lambda, &safe) == OPTOA_OK)
    std::cout << "safe deletions: " << safe << '\n';
  return kOk;
}

// construct

struct ConstructArgs {
  std::string method;
  int k = 0;
  int n = 0;
  int t = 0;
  std::string start;
  std::string output;
  std::vector<int> classes;
  bool stream = false;
};

int construct_cyclic(const ConstructArgs& args) {
  if (args.start.empty()) die(kUsage, "--method cyclic needs --start");
  optoa_start* s = nullptr;
  check(optoa_start_read_file(args.start.c_str(), &s));
  Start start(s);
  optoa_array* a = nullptr;
  check(optoa_develop(start.get(), &a));
  Array arr(a);
  auto rep = verify(arr.get());
  require_oa(rep.get(), "");
  if (!args.output.empty()) write_array(arr.get(), args.output);
  return kOk;
}

int construct_hadamard(const ConstructArgs& args) {
  if (args.t < 1) die(kUsage, "--method hadamard needs -t >= 1");
  const int order = 8 * args.t + 4;
  optoa_hadamard* h = nullptr;
  check(optoa_hadamard_construct(order, &h));
  Hadamard had(h);
  optoa_design* d = nullptr;
  check(optoa_hadamard_to_bibd(had.get(), &d));
  Design sym(d);
  check(optoa_design_derived_complement(sym.get(), 0, &d));
  Design derived(d);
  optoa_array* a = nullptr;
  check(optoa_design_to_array(derived.get(), &a));
  Array arr(a);
  auto rep = verify(arr.get());
  require_oa(rep.get(), "");
  if (!args.output.empty()) write_array(arr.get(), args.output);
  return kOk;
}

int construct_enumerate(const ConstructArgs& args) {
  if (args.stream) {
    optoa_report* r = nullptr;
    check(optoa_verify_enumeration_streaming(args.k, args.n, &r));
    Report rep(r);
    require_oa(rep.get(), "");
    if (!args.output.empty()) {
      check(optoa_write_enumeration_file(args.k, args.n, args.output.c_str()));
      std::cout << "wrote " << args.output << '\n';
    }
    return kOk;
  }
  optoa_array* a = nullptr;
  const auto s = optoa_enumerate(args.k, args.n, 0, &a);
  if (s == OPTOA_ERR_TOO_LARGE) die(kUsage, std::string(optoa_last_error()) + "; rerun with --stream");
  check(s);
  Array arr(a);
  auto rep = verify(arr.get());
  require_oa(rep.get(), "");
  if (!args.output.empty()) write_array(arr.get(), args.output);
  return kOk;
}

std::string part_path(const std::string& stem, size_t i) { return stem + "." + std::to_string(i) + ".txt"; }

int construct_parts(const ConstructArgs& args, bool multi) {
  const int* sizes = nullptr;
  size_t count = 0;
  std::vector<int> one_class{args.k};
  if (!multi) {
    sizes = one_class.data();
    count = 1;
  } else if (!args.classes.empty()) {
    sizes = args.classes.data();
    count = args.classes.size();
  }
  int gamma = static_cast<int>(count);
  if (multi && count == 0) {
    size_t g = 0;
    check(optoa_default_partition(args.k, args.n, nullptr, 0, &g));
    gamma = static_cast<int>(g);
  }
  auto label = [&](size_t i) {
    char* s = nullptr;
    check(optoa_partition_class_label(i, args.n, gamma, &s));
    return take_string(s);
  };

  if (args.stream) {
    optoa_report_list* l = nullptr;
    check(optoa_verify_multi_partition_streaming(args.k, args.n, sizes, count, &l));
    ReportList reps(l);
    for (size_t i = 0; i < optoa_report_list_size(reps.get()); ++i)
      require_oa(optoa_report_list_get(reps.get(), i), "part " + std::to_string(i) + " (" + label(i) + ")");
    if (!args.output.empty()) {
      size_t files = 0;
      check(optoa_write_multi_partition_files(args.k, args.n, sizes, count, args.output.c_str(), &files));
      for (size_t i = 0; i < files; ++i) std::cout << "wrote " << part_path(args.output, i) << '\n';
    }
    return kOk;
  }

  optoa_array_list* l = nullptr;
  optoa_status s = multi ? optoa_multi_partition(args.k, args.n, sizes, count, 0, &l)
                         : optoa_partition(args.k, args.n, 0, &l);
  if (s == OPTOA_ERR_TOO_LARGE) die(kUsage, std::string(optoa_last_error()) + "; rerun with --stream");
  check(s);
  ArrayList parts(l);
  const size_t n_parts = optoa_array_list_size(parts.get());
  if (n_parts == 1) gamma = 0;
  for (size_t i = 0; i < n_parts; ++i) {
    auto rep = verify(optoa_array_list_get(parts.get(), i));
    require_oa(rep.get(), "part " + std::to_string(i) + (gamma ? " (" + label(i) + ")" : ""));
  }
  if (!args.output.empty())
    for (size_t i = 0; i < n_parts; ++i)
      write_array(optoa_array_list_get(parts.get(), i), part_path(args.output, i), gamma ? label(i) : "");
  return kOk;
}

int run_construct(const ConstructArgs& args) {
  if (args.method == "cyclic") return construct_cyclic(args);
  if (args.method == "hadamard") return construct_hadamard(args);
  if (args.k == 0 || args.n == 0) die(kUsage, "--method " + args.method + " needs -k and -n");
  if (args.method == "enumerate") return construct_enumerate(args);
  if (args.method == "partition") return construct_parts(args, false);
  return construct_parts(args, true);
}

// verify

struct VerifyArgs {
  std::string input;
  bool stream = false;
};

int run_verify(const VerifyArgs& args) {
  optoa_report* r = nullptr;
  if (args.stream) {
    check(optoa_verify_file_streaming(args.input.c_str(), &r));
  } else {
    optoa_array* a = nullptr;
    check(optoa_array_read_file(args.input.c_str(), &a));
    Array arr(a);
    check(optoa_verify(arr.get(), &r));
  }
  Report rep(r);
  if (optoa_report_is_oa(rep.get())) {
    std::cout << summary(rep.get()) << '\n';
    print_details(rep.get());
    return kOk;
  }
  require_oa(rep.get(), "");
  return kVerifyFailed;
}

// search

struct SearchArgs {
  int k = 0;
  int n = 0;
  size_t limit = 1;
  std::string output;
};

int run_search(const SearchArgs& args) {
  int64_t m = 0, lambda = 0;
  const auto s = optoa_basic_quadruple(args.k, args.n, &m, &lambda);
  if (s == OPTOA_ERR_NOT_FOUND) {
    if ((args.k - 1) % args.n != 0)
      die(kInfeasible, "infeasible: k ≢ 1 mod n (" + std::to_string(args.k) + " ≢ 1 mod " +
                           std::to_string(args.n) + ")");
    die(kInfeasible, optoa_last_error());
  }
  check(s);
  std::cout << "searching (m, lambda, k, n) = (" << m << ", " << lambda << ", " << args.k << ", " << args.n
            << ")\n";
  optoa_start_list* l = nullptr;
  check(optoa_search(args.k, args.n, m, lambda, args.limit, &l));
  StartList found(l);
  const size_t count = optoa_start_list_size(found.get());
  if (count == 0) die(kUnreachable, "search exhausted: no starting rows found");

  for (size_t i = 0; i < count; ++i) {
    const optoa_start* st = optoa_start_list_get(found.get(), i);
    optoa_array* a = nullptr;
    check(optoa_develop(st, &a));
    Array arr(a);
    auto rep = verify(arr.get());
    require_oa(rep.get(), "set " + std::to_string(i));
    if (args.output.empty()) {
      char* text = nullptr;
      check(optoa_start_format(st, &text));
      std::cout << take_string(text);
    } else {
      const std::string path = i == 0 ? args.output : args.output + "." + std::to_string(i);
      check(optoa_start_write_file(st, path.c_str()));
      std::cout << "wrote " << path << '\n';
    }
  }
  return kOk;
}

// delete

struct DeleteArgs {
  std::string input;
  int s = 0;
  std::vector<int> columns;
  std::string output;
};

int run_delete(const DeleteArgs& args) {
  optoa_array* a = nullptr;
  check(optoa_array_read_file(args.input.c_str(), &a));
  Array arr(a);
  auto before = verify(arr.get());
  require_oa(before.get(), "input");
  if (!args.columns.empty() && static_cast<int>(args.columns.size()) != args.s)
    die(kUsage, "--columns must list exactly s indices");

  optoa_array* b = nullptr;
  check(optoa_delete_columns(arr.get(), args.s, args.columns.empty() ? nullptr : args.columns.data(), &b));
  Array out(b);
  auto after = verify(out.get());
  require_oa(after.get(), "result");
  std::cout << "m-optimal: " << ((optoa_report_classes(after.get()) & OPTOA_CLASS_M_OPTIMAL) ? "yes" : "no")
            << '\n';
  if (!args.output.empty()) write_array(out.get(), args.output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and search orthogonal arrays with a maximally repeated row"};
  app.require_subcommand(1);

  BoundsArgs bounds;
  auto* cmd_bounds = app.add_subcommand("bounds", "Repeated-row bounds and feasibility for OA_lambda(k, n)");
  cmd_bounds->add_option("-k", bounds.k, "Columns")->required()->check(CLI::Range(2, 100000));
  cmd_bounds->add_option("-n", bounds.n, "Symbols")->required()->check(CLI::Range(2, 256));
  cmd_bounds->add_option("-l,--lambda", bounds.lambda, "Index")->required()->check(CLI::PositiveNumber);

  ConstructArgs construct;
  auto* cmd_construct = app.add_subcommand("construct", "Build an array, verify it and write it");
  cmd_construct->add_option("--method", construct.method, "Construction")
      ->required()
      ->check(CLI::IsMember({"cyclic", "hadamard", "enumerate", "partition", "multipartition"}));
  cmd_construct->add_option("-k", construct.k, "Columns")->check(CLI::Range(2, 100000));
  cmd_construct->add_option("-n", construct.n, "Symbols")->check(CLI::Range(2, 256));
  cmd_construct->add_option("-t", construct.t, "Hadamard order is 8t+4")->check(CLI::PositiveNumber);
  cmd_construct->add_option("--start", construct.start, "START file for --method cyclic")
      ->check(CLI::ExistingFile);
  cmd_construct->add_option("--classes", construct.classes, "Column class sizes for multipartition");
  cmd_construct->add_option("-o,--output", construct.output, "Output file (or stem for partitions)");
  cmd_construct->add_flag("--stream", construct.stream, "Verify and write without materializing");

  VerifyArgs verify_args;
  auto* cmd_verify = app.add_subcommand("verify", "Check the strength-2 property and classify");
  cmd_verify->add_option("input", verify_args.input, "OA file")->required();
  cmd_verify->add_flag("--stream", verify_args.stream, "Read row by row");

  SearchArgs search;
  auto* cmd_search = app.add_subcommand("search", "Search cyclic starting rows for the basic quadruple");
  cmd_search->add_option("-k", search.k, "Columns")->required()->check(CLI::Range(2, 1000));
  cmd_search->add_option("-n", search.n, "Symbols")->required()->check(CLI::Range(2, 256));
  cmd_search->add_option("--limit", search.limit, "Number of solutions")->check(CLI::PositiveNumber);
  cmd_search->add_option("-o,--output", search.output, "START file");

  DeleteArgs del;
  auto* cmd_delete = app.add_subcommand("delete", "Delete columns and classify the result");
  cmd_delete->add_option("input", del.input, "OA file")->required();
  cmd_delete->add_option("-s", del.s, "Number of columns to delete")->required();
  cmd_delete->add_option("--columns", del.columns, "Column indices to delete (default: the last s)");
  cmd_delete->add_option("-o,--output", del.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cmd_bounds) return run_bounds(bounds);
    if (*cmd_construct) return run_construct(construct);
    if (*cmd_verify) return run_verify(verify_args);
    if (*cmd_search) return run_search(search);
    if (*cmd_delete) return run_delete(del);
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
