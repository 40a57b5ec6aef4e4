#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace jlcomb {

/// Exact exponent of a twist by the absolute value of the determinant.
using Exponent = boost::rational<std::int64_t>;

/// Raised when an operation is applied outside its domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the expression parser and the JSON readers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LineId {
  int value = -1;

  std::strong_ordering operator<=>(const LineId&) const = default;
  bool operator==(const LineId&) const = default;
};

/// A registered cuspidal line: the set of all twists of a base cuspidal of
/// GL_p. The base point (exponent 0) is taken to be unitary.
struct LineInfo {
  LineId id;
  std::string name;
  int p = 1;
  LineId dual;
  // Base cuspidal is an unramified character (only meaningful for p == 1).
  bool unramified = false;
};

/// Registry of cuspidal lines. Populate once, then share by const reference.
class LineRegistry {
 public:
  LineId register_line(std::string name, int p, std::optional<LineId> dual = std::nullopt,
                       bool unramified = false);

  // Pairs two already registered lines as each other's contragredient.
  void set_dual_pair(LineId a, LineId b);

  const LineInfo& info(LineId id) const;
  std::optional<LineId> find(std::string_view name) const;
  LineId require(std::string_view name) const;
  const std::vector<LineInfo>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  bool contains(LineId id) const {
    return id.value >= 0 && static_cast<std::size_t>(id.value) < lines_.size();
  }

  /// Step of segments on `id` for the inner form of index d (1 = split).
  int step(LineId id, int d) const;

 private:
  std::vector<LineInfo> lines_;
};

/// Smallest s >= 1 with d | s*p.
int s_invariant(int p, int d);

struct CuspidalPoint {
  LineId line;
  Exponent exp;

  std::strong_ordering operator<=>(const CuspidalPoint& o) const;
  bool operator==(const CuspidalPoint&) const = default;
};

CuspidalPoint contragredient_point(const LineRegistry& reg, const CuspidalPoint& pt);

struct AlgebraLocal {
  int d = 1;
};

// Rational helpers.
std::strong_ordering compare(const Exponent& a, const Exponent& b);
/// x mod m, as a value in [0, m).
Exponent floor_mod(const Exponent& x, const Exponent& m);
std::int64_t floor_div(const Exponent& x, const Exponent& m);
bool is_integer(const Exponent& x);
std::string to_string(const Exponent& x);
Exponent parse_exponent(std::string_view text);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

struct ExponentHash {
  std::size_t operator()(const Exponent& x) const noexcept {
    return std::hash<std::int64_t>{}(x.numerator()) * 1000003u ^
           std::hash<std::int64_t>{}(x.denominator());
  }
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace jlcomb
