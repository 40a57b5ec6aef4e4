#include "jlcomb/text.hpp"

#include <cctype>

namespace jlcomb {

LineRegistry default_registry() {
  LineRegistry reg;
  reg.register_line("rho", 1, std::nullopt, true);
  return reg;
}

std::string render(const LineRegistry& reg, const Segment& seg, int d) {
  std::string out = reg.info(seg.line).name;
  if (d > 1) out += '\'';
  out += ":[" + to_string(seg.start);
  if (d == 1 || seg.len > 1) out += "," + to_string(seg.end());
  return out + "]";
}

std::string render(const LineRegistry& reg, const Multisegment& m, int d) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : m) {
    if (!first) out += ", ";
    first = false;
    out += render(reg, s, d);
  }
  return out + "}";
}

std::string render(const LineRegistry& reg, const VirtualRep& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : v.terms()) {
    if (out.empty()) {
      out += std::to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += std::to_string(c < 0 ? -c : c);
    }
    out += " * " + render(reg, m, v.d());
  }
  return out;
}

std::string render(const LineRegistry& reg, const SpehUnit& u) {
  const int d = u.base.step == 1 && u.kind == UnitKind::u ? 1 : 2;
  std::string name = u.kind == UnitKind::u ? "u" : u.kind == UnitKind::u_prime ? "u'" : "ubar";
  std::string out;
  if (u.twist != Exponent(0)) out += "nu^(" + to_string(u.twist) + ") ";
  std::string core = name + "(" + render(reg, u.base, d) + ", " + std::to_string(u.k) + ")";
  if (u.alpha) core = "pi(" + core + ", " + to_string(*u.alpha) + ")";
  return out + core;
}

std::string render(const LineRegistry& reg, const UnitaryProduct& p) {
  if (p.units.empty()) return "1";
  std::string out;
  for (const auto& u : p.units) {
    if (!out.empty()) out += " x ";
    out += render(reg, u);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string name() {
    skip();
    std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (begin == pos_) fail("expected a line name");
    if (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::string number() {
    skip();
    std::size_t begin = pos_;
    auto digits = [&] {
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip();
      digits();
    }
    std::string raw(text_.substr(begin, pos_ - begin));
    std::string compact;
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) fail("expected a number");
    return compact;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Segment read_segment(Cursor& cur, const LineRegistry& reg, int d) {
  std::string name = cur.name();
  const bool quoted = name.back() == '\'';
  if (quoted) name.pop_back();
  if (d > 1 && !quoted) cur.fail("inner-form line names need a trailing quote");
  if (d == 1 && quoted) cur.fail("quoted line name on the split side");
  auto id = reg.find(name);
  if (!id) throw DomainError("unknown line '" + name + "'");
  cur.expect(':');
  cur.expect('[');
  const Exponent a = parse_exponent(cur.number());
  Exponent b = a;
  if (cur.accept(',')) b = parse_exponent(cur.number());
  cur.expect(']');
  if (b < a) throw ParseError("segment start exceeds its end: " + to_string(a) + " > " + to_string(b));
  const int step = reg.step(*id, d);
  const Exponent span = (b - a) / Exponent(step);
  if (!is_integer(span)) throw ParseError("segment bounds are not a whole number of steps apart");
  return Segment{*id, a, static_cast<int>(span.numerator()) + 1, step};
}

Multisegment read_multisegment(Cursor& cur, const LineRegistry& reg, int d) {
  cur.expect('{');
  std::vector<Segment> segs;
  if (!cur.accept('}')) {
    do {
      segs.push_back(read_segment(cur, reg, d));
    } while (cur.accept(','));
    cur.expect('}');
  }
  return Multisegment(std::move(segs));
}

}  // namespace

Segment parse_segment(std::string_view text, const LineRegistry& reg, int d) {
  Cursor cur(text);
  Segment s = read_segment(cur, reg, d);
  if (!cur.done()) cur.fail("trailing input");
  return s;
}

Multisegment parse_multisegment(std::string_view text, const LineRegistry& reg, int d) {
  Cursor cur(text);
  Multisegment m = read_multisegment(cur, reg, d);
  if (!cur.done()) cur.fail("trailing input");
  return m;
}

VirtualRep parse_virtual(std::string_view text, const LineRegistry& reg, int d) {
  Cursor cur(text);
  VirtualRep out(d);
  bool first = true;
  while (first || !cur.done()) {
    std::int64_t sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    std::int64_t coeff = 1;
    if (cur.peek() != '{') {
      Exponent c = parse_exponent(cur.number());
      if (!is_integer(c)) cur.fail("coefficients must be integers");
      if (c == Exponent(0) && cur.done()) break;
      coeff = c.numerator();
      cur.expect('*');
    }
    out.add(read_multisegment(cur, reg, d), sign * coeff);
  }
  return out;
}

LineRegistry lines_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("line registry must be a JSON array");
  LineRegistry reg;
  std::vector<std::pair<std::string, std::string>> pairs;
  try {
    for (const auto& entry : j) {
      const std::string name = entry.at("name").get<std::string>();
      reg.register_line(name, entry.value("p", 1), std::nullopt, entry.value("unramified", false));
      if (entry.contains("dual") && !entry.at("dual").is_null())
        pairs.emplace_back(name, entry.at("dual").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("line registry: ") + e.what());
  }
  for (const auto& [a, b] : pairs) {
    const LineId ia = reg.require(a), ib = reg.require(b);
    if (reg.info(ia).dual == ib) continue;
    if (ia == ib) continue;
    reg.set_dual_pair(ia, ib);
  }
  return reg;
}

nlohmann::json lines_to_json(const LineRegistry& reg) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& l : reg.lines())
    out.push_back({{"name", l.name}, {"p", l.p}, {"dual", reg.info(l.dual).name},
                   {"unramified", l.unramified}});
  return out;
}

nlohmann::json to_json(const LineRegistry& reg, const VirtualRep& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : v.terms())
    out.push_back({{"coeff", c}, {"multisegment", render(reg, m, v.d())}});
  return out;
}

VirtualRep virtual_from_json(const nlohmann::json& j, const LineRegistry& reg, int d) {
  VirtualRep out(d);
  try {
    for (const auto& t : j)
      out.add(parse_multisegment(t.at("multisegment").get<std::string>(), reg, d),
              t.at("coeff").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("virtual representation: ") + e.what());
  }
  return out;
}

nlohmann::json to_json(const LineRegistry& reg, const UnitaryProduct& p, int d) {
  nlohmann::json units = nlohmann::json::array();
  for (const auto& u : p.units) {
    nlohmann::json ju = {{"kind", u.kind == UnitKind::u ? "u" : u.kind == UnitKind::u_prime ? "u'" : "ubar"},
                         {"base", render(reg, u.base, u.kind == UnitKind::u ? 1 : d)},
                         {"k", u.k},
                         {"twist", to_string(u.twist)}};
    if (u.alpha) ju["alpha"] = to_string(*u.alpha);
    units.push_back(ju);
  }
  return {{"units", units}, {"label", render(reg, product_label(p), d)}};
}

nlohmann::json to_json(const FormalLFactor& l) {
  nlohmann::json shifts = nlohmann::json::array();
  for (const auto& a : l.shifts) shifts.push_back(to_string(a));
  return {{"shifts", shifts}};
}

nlohmann::json to_json(const LineRegistry& reg, const EpsilonFactor& e) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [line, a] : e.factors)
    factors.push_back({{"line", reg.info(line).name}, {"shift", to_string(a)}});
  return {{"factors", factors}};
}

GlobalAlgebra algebra_from_json(const nlohmann::json& j) {
  GlobalAlgebra alg;
  try {
    for (const auto& p : j.at("places")) alg.add_place(p.at("name").get<std::string>(), p.at("d_v").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra: ") + e.what());
  }
  return alg;
}

nlohmann::json to_json(const GlobalAlgebra& alg) {
  nlohmann::json places = nlohmann::json::array();
  for (const auto& [name, dv] : alg.places()) places.push_back({{"name", name}, {"d_v", dv}});
  return {{"places", places}};
}

GlobalCuspidalData cuspidal_from_json(const nlohmann::json& j, const LineRegistry& reg) {
  GlobalCuspidalData rho;
  try {
    const std::string line = j.at("line").get<std::string>();
    rho.line = reg.require(line);
    rho.name = j.value("name", line);
    if (j.contains("p") && j.at("p").get<int>() != reg.info(rho.line).p)
      throw DomainError("cuspidal data: p does not match the line registry");
    for (const auto& [place, factors] : j.at("locals").items()) {
      auto& out = rho.locals[place];
      for (const auto& f : factors) {
        Segment seg = parse_segment(f.at("segment").get<std::string>(), reg, 1);
        if (seg.center() != Exponent(0))
          throw DomainError("local square integrable must be centered at 0");
        const Exponent e = parse_exponent(f.value("e", std::string("0")));
        out.push_back(GenericFactor{seg.line, seg.len, e});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cuspidal data: ") + e.what());
  }
  return rho;
}

nlohmann::json to_json(const LineRegistry& reg, const GlobalCuspidalData& rho) {
  nlohmann::json locals = nlohmann::json::object();
  for (const auto& [place, factors] : rho.locals) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : factors)
      arr.push_back({{"segment", render(reg, centered_segment(f.line, f.len, 1, Exponent(0)), 1)},
                     {"e", to_string(f.e)}});
    locals[place] = arr;
  }
  return {{"name", rho.name}, {"line", reg.info(rho.line).name}, {"p", reg.info(rho.line).p},
          {"locals", locals}};
}

}  // namespace jlcomb
