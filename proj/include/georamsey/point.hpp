#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace georamsey {

// Expression templates off: every arithmetic result is a plain Integer.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

template <class T>
struct BasicPoint {
  T x{};
  T y{};

  friend bool operator==(const BasicPoint&, const BasicPoint&) = default;
};

/// Planar point with arbitrary-precision integer coordinates.
using ExactPoint = BasicPoint<Integer>;

enum class Orientation : std::int8_t { Clockwise = -1, Collinear = 0, Counterclockwise = 1 };

inline Orientation flip(Orientation o) { return static_cast<Orientation>(-static_cast<int>(o)); }

inline const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Clockwise:
      return "CLOCKWISE";
    case Orientation::Counterclockwise:
      return "COUNTERCLOCKWISE";
    case Orientation::Collinear:
      break;
  }
  return "COLLINEAR";
}

namespace detail {

inline Orientation sign_to_orientation(int s) {
  return s > 0 ? Orientation::Counterclockwise
               : (s < 0 ? Orientation::Clockwise : Orientation::Collinear);
}

template <class T>
struct Widened {
  using type = T;
};

template <>
struct Widened<std::int64_t> {
  using type = __int128;
};

// Cross product of (b - a) and (c - a); exact for cpp_int and for int64 inputs
// below 2^62 in magnitude: differences stay below 2^63, products below 2^126
// and their difference below 2^127, all in __int128.
template <class T>
auto cross(const BasicPoint<T>& a, const BasicPoint<T>& b, const BasicPoint<T>& c) {
  using W = typename Widened<T>::type;
  const W bx = W(b.x) - W(a.x);
  const W by = W(b.y) - W(a.y);
  const W cx = W(c.x) - W(a.x);
  const W cy = W(c.y) - W(a.y);
  return bx * cy - by * cx;
}

template <class W>
int sign_of(const W& v) {
  if constexpr (std::is_same_v<W, Integer>) {
    return v.sign();
  } else {
    return (v > 0) - (v < 0);
  }
}

using SmallPoint = BasicPoint<std::int64_t>;

inline constexpr std::int64_t kSmallCoordinateLimit = std::int64_t{1} << 62;

// Copies the points into int64 storage when every coordinate is below 2^62 in
// magnitude, where the __int128 cross product cannot overflow.
inline std::optional<std::vector<SmallPoint>> to_small(std::span<const ExactPoint> points) {
  std::vector<SmallPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (abs(p.x) >= kSmallCoordinateLimit || abs(p.y) >= kSmallCoordinateLimit) {
      return std::nullopt;
    }
    out.push_back({p.x.convert_to<std::int64_t>(), p.y.convert_to<std::int64_t>()});
  }
  return out;
}

}  // namespace detail

/// Sign of det(q - p, r - p). Positive is a left turn.
template <class T>
Orientation orientation(const BasicPoint<T>& p, const BasicPoint<T>& q, const BasicPoint<T>& r) {
  return detail::sign_to_orientation(detail::sign_of(detail::cross(p, q, r)));
}

inline ExactPoint make_point(long long x, long long y) { return ExactPoint{Integer(x), Integer(y)}; }

inline std::vector<ExactPoint> make_points(std::initializer_list<std::pair<long long, long long>> xy) {
  std::vector<ExactPoint> out;
  out.reserve(xy.size());
  for (const auto& [x, y] : xy) {
    out.push_back(make_point(x, y));
  }
  return out;
}

inline std::string to_string(const ExactPoint& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

}  // namespace georamsey
