#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "facnum/errors.hpp"
#include "facnum/group.hpp"

namespace facnum {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

// Splits on single spaces; any other layout is a parse error.
template <typename F>
void for_each_field(std::string_view line, std::size_t lineno, F&& f) {
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(' ', pos);
    const std::string_view field = line.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (field.empty()) fail(lineno, "empty field (fields are separated by single spaces)");
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || end != field.data() + field.size()) {
      fail(lineno, "not a decimal integer: '" + std::string(field) + "'");
    }
    f(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
}

}  // namespace

FiniteGroup load_cayley_table(std::istream& in, std::string label, std::size_t max_order) {
  std::string raw;
  std::size_t lineno = 0;
  bool have_order = false;
  std::uint64_t n = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = strip_cr(raw);
    if (!line.empty() && line.front() == '#') continue;
    for_each_field(line, lineno, [&](std::uint64_t v) {
      if (have_order) fail(lineno, "expected only the group order on the first line");
      n = v;
      have_order = true;
    });
    break;
  }
  if (!have_order) fail(std::max<std::size_t>(lineno, 1), "missing group order");
  if (n == 0) fail(lineno, "group order must be positive");
  if (n > max_order) {
    throw ResourceError("group order " + std::to_string(n) + " exceeds the order cap " +
                        std::to_string(max_order));
  }

  std::vector<Element> table;
  table.reserve(n * n);
  for (std::uint64_t row = 0; row < n; ++row) {
    if (!std::getline(in, raw)) fail(lineno + 1, "expected " + std::to_string(n) + " table rows");
    ++lineno;
    std::size_t count = 0;
    for_each_field(strip_cr(raw), lineno, [&](std::uint64_t v) {
      if (v >= n) fail(lineno, "entry " + std::to_string(v) + " is out of range");
      if (++count > n) fail(lineno, "row has more than " + std::to_string(n) + " entries");
      table.push_back(static_cast<Element>(v));
    });
    if (count != n) fail(lineno, "row has " + std::to_string(count) + " entries, expected " + std::to_string(n));
  }
  while (std::getline(in, raw)) {
    ++lineno;
    if (!strip_cr(raw).empty()) fail(lineno, "unexpected content after the table");
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(label), max_order);
}

FiniteGroup load_cayley_table_file(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open Cayley table file '" + path + "'");
  try {
    return load_cayley_table(in, path, max_order);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_cayley_table(const FiniteGroup& g, std::ostream& out) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (Element i = 0; i < n; ++i) {
    const auto row = g.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != 0) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

}  // namespace facnum
