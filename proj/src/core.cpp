#include "jlcomb/core.hpp"

#include <charconv>
#include <numeric>

namespace jlcomb {

LineId LineRegistry::register_line(std::string name, int p, std::optional<LineId> dual,
                                   bool unramified) {
  if (name.empty()) throw DomainError("line name must be non-empty");
  if (p < 1) throw DomainError("line '" + name + "': p must be positive");
  if (find(name)) throw DomainError("duplicate line name '" + name + "'");
  if (dual && !contains(*dual)) throw DomainError("line '" + name + "': unknown dual line");

  LineId id{static_cast<int>(lines_.size())};
  lines_.push_back(LineInfo{id, std::move(name), p, dual.value_or(id), unramified});
  if (dual) {
    // The pairing must stay an involution.
    LineInfo& other = lines_[dual->value];
    if (other.dual != other.id && other.dual != id) {
      lines_.pop_back();
      throw DomainError("line '" + other.name + "' is already paired");
    }
    if (other.p != p) {
      lines_.pop_back();
      throw DomainError("contragredient lines must have equal p");
    }
    other.dual = id;
  }
  return id;
}

void LineRegistry::set_dual_pair(LineId a, LineId b) {
  LineInfo& la = lines_.at(a.value);
  LineInfo& lb = lines_.at(b.value);
  if (la.p != lb.p) throw DomainError("contragredient lines must have equal p");
  if ((la.dual != la.id && la.dual != b) || (lb.dual != lb.id && lb.dual != a))
    throw DomainError("line already paired");
  la.dual = b;
  lb.dual = a;
}

const LineInfo& LineRegistry::info(LineId id) const {
  if (!contains(id)) throw DomainError("unknown line id " + std::to_string(id.value));
  return lines_[id.value];
}

std::optional<LineId> LineRegistry::find(std::string_view name) const {
  for (const auto& l : lines_)
    if (l.name == name) return l.id;
  return std::nullopt;
}

LineId LineRegistry::require(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw DomainError("unknown line '" + std::string(name) + "'");
}

int LineRegistry::step(LineId id, int d) const { return s_invariant(info(id).p, d); }

int s_invariant(int p, int d) {
  if (p < 1 || d < 1) throw DomainError("s_invariant: p and d must be positive");
  return d / std::gcd(d, p);
}

std::strong_ordering CuspidalPoint::operator<=>(const CuspidalPoint& o) const {
  if (auto c = line <=> o.line; c != 0) return c;
  return compare(exp, o.exp);
}

CuspidalPoint contragredient_point(const LineRegistry& reg, const CuspidalPoint& pt) {
  return CuspidalPoint{reg.info(pt.line).dual, -pt.exp};
}

std::strong_ordering compare(const Exponent& a, const Exponent& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t floor_div(const Exponent& x, const Exponent& m) {
  Exponent q = x / m;
  std::int64_t n = q.numerator(), den = q.denominator();
  std::int64_t f = n / den;
  if ((n % den != 0) && ((n < 0) != (den < 0))) --f;
  return f;
}

Exponent floor_mod(const Exponent& x, const Exponent& m) {
  return x - m * Exponent(floor_div(x, m));
}

bool is_integer(const Exponent& x) { return x.denominator() == 1; }

std::string to_string(const Exponent& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {
std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  return v;
}
}  // namespace

Exponent parse_exponent(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Exponent(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::int64_t den = parse_int(den_text, text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Exponent(num, den);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace jlcomb
