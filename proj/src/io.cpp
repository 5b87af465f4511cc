#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "optoa/designs.hpp"
#include "optoa/error.hpp"

namespace optoa {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  fail(Errc::parse, "line " + std::to_string(line_no) + ": " + what);
}

std::int64_t to_int(std::string_view tok, std::size_t line_no) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    parse_error(line_no, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

// Header tokens after the magic word, as integers.
std::vector<std::int64_t> read_header(std::istream& in, std::string_view magic, std::size_t count) {
  std::string line;
  if (!std::getline(in, line)) parse_error(1, "missing header");
  auto toks = tokens(line);
  if (toks.size() != count + 1 || toks[0] != magic)
    parse_error(1, "header must be '" + std::string(magic) + "' followed by " +
                       std::to_string(count) + " integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < toks.size(); ++i) out.push_back(to_int(toks[i], 1));
  return out;
}

bool is_comment(const std::string& line) { return !line.empty() && line[0] == '#'; }

// Remaining non-comment lines, numbered from 2.
std::vector<std::pair<std::size_t, std::string>> body_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t no = 1;
  while (std::getline(in, line)) {
    ++no;
    if (is_comment(line)) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.emplace_back(no, line);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> read_char_matrix(
    std::istream& in, std::size_t rows, std::size_t cols, char one, char zero, std::string_view what) {
  auto lines = body_lines(in);
  if (lines.size() != rows)
    fail(Errc::parse, std::string(what) + ": expected " + std::to_string(rows) + " rows, found " +
                          std::to_string(lines.size()));
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(rows);
  for (auto& [no, line] : lines) {
    if (line.size() != cols) parse_error(no, "row of wrong length");
    std::vector<std::uint8_t> row(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] == one)
        row[c] = 1;
      else if (line[c] == zero)
        row[c] = 0;
      else
        parse_error(no, std::string("unexpected character '") + line[c] + "'");
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

OaReader::OaReader(std::istream& in) : in_(in) {
  auto h = read_header(in, "OA", 3);
  if (h[0] < 2 || h[0] > 1'000'000) parse_error(1, "k must be at least 2");
  if (h[1] < 2 || h[1] > kMaxAlphabet) parse_error(1, "n out of range");
  if (h[2] < 1) parse_error(1, "lambda must be at least 1");
  header_ = {static_cast<int>(h[0]), static_cast<int>(h[1]), h[2]};
  expected_ = static_cast<std::uint64_t>(checked_mul(h[2], h[1] * h[1]));
}

bool OaReader::next(std::vector<Symbol>& row) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (is_comment(line)) continue;
    auto toks = tokens(line);
    if (static_cast<int>(toks.size()) != header_.k)
      parse_error(line_no_, "row has " + std::to_string(toks.size()) + " entries, expected " +
                                std::to_string(header_.k));
    row.resize(toks.size());
    for (std::size_t i = 0; i < toks.size(); ++i) {
      auto v = to_int(toks[i], line_no_);
      if (v < 0 || v >= header_.n) parse_error(line_no_, "symbol " + std::to_string(v) + " out of range");
      row[i] = static_cast<Symbol>(v);
    }
    if (++seen_ > expected_)
      fail(Errc::parse, "more than lambda*n^2 = " + std::to_string(expected_) + " rows");
    return true;
  }
  if (seen_ != expected_)
    fail(Errc::parse, "found " + std::to_string(seen_) + " rows, expected lambda*n^2 = " +
                          std::to_string(expected_));
  return false;
}

OrthogonalArray read_oa(std::istream& in) {
  OaReader reader(in);
  const auto& h = reader.header();
  std::vector<Symbol> cells;
  std::vector<Symbol> row;
  while (reader.next(row)) cells.insert(cells.end(), row.begin(), row.end());
  return OrthogonalArray(h.k, h.n, h.lambda, std::move(cells));
}

OrthogonalArray parse_oa(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_oa(in);
}

void write_oa(std::ostream& out, const OrthogonalArray& a, std::string_view comment) {
  out << "OA " << a.k() << ' ' << a.n() << ' ' << a.lambda() << '\n';
  if (!comment.empty()) out << "# " << comment << '\n';
  std::string line;
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    line.clear();
    auto r = a.row(i);
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line.push_back(' ');
      line += std::to_string(r[c]);
    }
    line.push_back('\n');
    out << line;
  }
}

std::string format_oa(const OrthogonalArray& a) {
  std::ostringstream out;
  write_oa(out, a);
  return out.str();
}

BlockDesign read_bibd(std::istream& in) {
  auto h = read_header(in, "BIBD", 5);
  const auto v = h[0], b = h[1];
  if (v < 2 || b < 1 || v > 1'000'000 || b > 1'000'000) parse_error(1, "v or b out of range");
  auto blocks = read_char_matrix(in, static_cast<std::size_t>(b), static_cast<std::size_t>(v), '1',
                                 '0', "BIBD");
  BlockDesign d(static_cast<int>(v), std::move(blocks));
  if (d.r() != h[2] || d.block_size() != h[3] || d.lambda() != h[4])
    fail(Errc::parse, "BIBD header parameters disagree with the incidence matrix");
  return d;
}

void write_bibd(std::ostream& out, const BlockDesign& d) {
  out << "BIBD " << d.v() << ' ' << d.b() << ' ' << d.r() << ' ' << d.block_size() << ' '
      << d.lambda() << '\n';
  for (const auto& blk : d.incidence()) {
    std::string line(blk.size(), '0');
    for (std::size_t i = 0; i < blk.size(); ++i)
      if (blk[i]) line[i] = '1';
    out << line << '\n';
  }
}

HadamardMatrix read_hadamard(std::istream& in) {
  auto h = read_header(in, "HAD", 1);
  if (h[0] < 1 || h[0] > 100'000) parse_error(1, "order out of range");
  const auto order = static_cast<std::size_t>(h[0]);
  auto rows = read_char_matrix(in, order, order, '+', '-', "HAD");
  std::vector<std::int8_t> entries;
  entries.reserve(order * order);
  for (const auto& r : rows)
    for (auto x : r) entries.push_back(x ? 1 : -1);
  return HadamardMatrix(static_cast<int>(order), std::move(entries));
}

void write_hadamard(std::ostream& out, const HadamardMatrix& h) {
  out << "HAD " << h.order() << '\n';
  for (int i = 0; i < h.order(); ++i) {
    std::string line(static_cast<std::size_t>(h.order()), '+');
    for (int j = 0; j < h.order(); ++j)
      if (h.at(i, j) < 0) line[j] = '-';
    out << line << '\n';
  }
}

StartingRowSet read_start(std::istream& in) {
  auto h = read_header(in, "START", 3);
  const auto k = h[0], n = h[1], m = h[2];
  if (k < 2 || k > 1'000'000) parse_error(1, "k out of range");
  if (n < 2 || n > kMaxAlphabet) parse_error(1, "n out of range");
  if (m < 1 || m > 1'000'000) parse_error(1, "m out of range");
  auto lines = body_lines(in);
  if (static_cast<std::int64_t>(lines.size()) != m)
    fail(Errc::parse, "START: expected " + std::to_string(m) + " rows, found " +
                          std::to_string(lines.size()));
  std::vector<std::vector<int>> rows;
  for (auto& [no, line] : lines) {
    auto toks = tokens(line);
    if (static_cast<std::int64_t>(toks.size()) != k) parse_error(no, "row of wrong length");
    std::vector<int> row;
    for (auto tok : toks) {
      if (tok == "*") {
        row.push_back(StartingRowSet::kInfinity);
        continue;
      }
      auto v = to_int(tok, no);
      if (v < 0 || v > n - 2) parse_error(no, "symbol " + std::string(tok) + " out of range");
      row.push_back(static_cast<int>(v));
    }
    rows.push_back(std::move(row));
  }
  return StartingRowSet(static_cast<int>(k), static_cast<int>(n), std::move(rows));
}

void write_start(std::ostream& out, const StartingRowSet& s) {
  out << "START " << s.k() << ' ' << s.n() << ' ' << s.m() << '\n';
  for (const auto& row : s.base_rows()) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line.push_back(' ');
      line += row[i] == StartingRowSet::kInfinity ? std::string("*") : std::to_string(row[i]);
    }
    out << line << '\n';
  }
}

}  // namespace optoa
