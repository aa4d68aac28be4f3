#pragma once

// Line-oriented text formats shared by every tool:
//
//   points N            coloring L Q N
//   x y                 i1 ... iL c      (one line per L-subset, lexicographic)
//   ...                 ...
//
// Integers are decimal and unbounded. '#' starts a comment that runs to the end
// of the line; blank lines are ignored.

#include "georamsey/coloring.hpp"
#include "georamsey/errors.hpp"
#include "georamsey/point.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace georamsey {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line split into whitespace-separated tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.resize(hash);
      }
      tokens.clear();
      std::istringstream ss(line);
      for (std::string tok; ss >> tok;) {
        tokens.push_back(std::move(tok));
      }
      if (!tokens.empty()) {
        return true;
      }
    }
    return false;
  }

  std::size_t line() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

inline Integer parse_integer(std::string_view tok, std::size_t line) {
  std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (start == tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  for (std::size_t i = start; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') {
      throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    }
  }
  Integer v(std::string(tok.substr(start)));
  return tok[0] == '-' ? Integer(-v) : v;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace detail

inline std::vector<ExactPoint> read_points(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) {
    throw ParseError(reader.line(), "missing 'points N' header");
  }
  if (tok.size() != 2 || tok[0] != "points") {
    throw ParseError(reader.line(), "expected 'points N' header");
  }
  const std::size_t n = detail::parse_count(tok[1], reader.line());
  std::vector<ExactPoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!reader.next(tok)) {
      throw ParseError(reader.line(), "expected " + std::to_string(n) + " points, found " + std::to_string(i));
    }
    if (tok.size() != 2) {
      throw ParseError(reader.line(), "expected 'x y'");
    }
    pts.push_back({detail::parse_integer(tok[0], reader.line()), detail::parse_integer(tok[1], reader.line())});
  }
  if (reader.next(tok)) {
    throw ParseError(reader.line(), "trailing content after " + std::to_string(n) + " points");
  }
  return pts;
}

inline void write_points(std::ostream& out, std::span<const ExactPoint> points) {
  out << "points " << points.size() << '\n';
  for (const auto& p : points) {
    out << p.x << ' ' << p.y << '\n';
  }
}

inline EdgeColoring read_coloring(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok.size() != 4 || tok[0] != "coloring") {
    throw ParseError(reader.line(), "expected 'coloring L Q N' header");
  }
  const std::size_t l = detail::parse_count(tok[1], reader.line());
  const std::size_t q = detail::parse_count(tok[2], reader.line());
  const std::size_t n = detail::parse_count(tok[3], reader.line());
  if (l < 1 || q < 1 || q > 0xFFFF) {
    throw ParseError(reader.line(), "arity and color count must be positive");
  }
  EdgeColoring coloring;
  try {
    coloring = EdgeColoring(l, q, n);
  } catch (const BadInput& e) {
    throw ParseError(reader.line(), e.what());
  }
  std::vector<std::size_t> got(l);
  bool complete = true;
  for_each_combination(n, l, [&](std::span<const std::size_t> expected) {
    if (!reader.next(tok)) {
      complete = false;
      return false;
    }
    if (tok.size() != l + 1) {
      throw ParseError(reader.line(), "expected " + std::to_string(l) + " vertices and a color");
    }
    for (std::size_t i = 0; i < l; ++i) {
      got[i] = detail::parse_count(tok[i], reader.line());
    }
    if (!std::equal(got.begin(), got.end(), expected.begin())) {
      throw ParseError(reader.line(), "subsets must be listed once each in lexicographic order");
    }
    const std::size_t c = detail::parse_count(tok[l], reader.line());
    if (c >= q) {
      throw ParseError(reader.line(), "color " + std::to_string(c) + " out of range");
    }
    coloring.set(expected, static_cast<Color>(c));
    return true;
  });
  if (!complete) {
    throw ParseError(reader.line(), "coloring is not total: subsets missing");
  }
  if (reader.next(tok)) {
    throw ParseError(reader.line(), "trailing content after the last subset");
  }
  return coloring;
}

template <SubsetColoring C>
void write_coloring(std::ostream& out, const C& coloring) {
  out << "coloring " << coloring.arity() << ' ' << coloring.colors() << ' ' << coloring.vertex_count() << '\n';
  for_each_combination(coloring.vertex_count(), coloring.arity(), [&](std::span<const std::size_t> s) {
    for (std::size_t v : s) {
      out << v << ' ';
    }
    out << coloring.color(s) << '\n';
    return true;
  });
}

}  // namespace georamsey
