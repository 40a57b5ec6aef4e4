#include "jlcomb/lfactors.hpp"

#include <algorithm>

#include "jlcomb/transfer.hpp"

namespace jlcomb {

FormalLFactor FormalLFactor::operator*(const FormalLFactor& o) const {
  FormalLFactor r{shifts};
  r.shifts.insert(r.shifts.end(), o.shifts.begin(), o.shifts.end());
  std::sort(r.shifts.begin(), r.shifts.end());
  return r;
}

EpsilonFactor EpsilonFactor::operator*(const EpsilonFactor& o) const {
  EpsilonFactor r{factors};
  r.factors.insert(r.factors.end(), o.factors.begin(), o.factors.end());
  std::sort(r.factors.begin(), r.factors.end());
  return r;
}

FormalRSProduct FormalRSProduct::operator*(const FormalRSProduct& o) const {
  FormalRSProduct r = *this;
  for (const auto& [a, e] : o.exps) {
    auto& slot = r.exps[a];
    slot += e;
    if (slot == 0) r.exps.erase(a);
  }
  return r;
}

FormalRSProduct FormalRSProduct::inverse() const {
  FormalRSProduct r;
  for (const auto& [a, e] : exps) r.exps.emplace(a, -e);
  return r;
}

FormalRSProduct FormalRSProduct::shifted(const Exponent& t) const {
  FormalRSProduct r;
  for (const auto& [a, e] : exps) r.exps.emplace(a + t, e);
  return r;
}

FormalLFactor l_esi(const LineRegistry& reg, const Segment& seg, int d) {
  const LineInfo& info = reg.info(seg.line);
  if (!info.unramified || info.p != 1 || seg.step != reg.step(seg.line, d)) return {};
  if (info.p * seg.step != d) return {};
  return FormalLFactor{{seg.end() + Exponent(d - 1, 2)}};
}

FormalLFactor l_irr(const LineRegistry& reg, const Multisegment& m, int d) {
  FormalLFactor r;
  for (const auto& s : m) r = r * l_esi(reg, s, d);
  return r;
}

EpsilonFactor eps_irr(const Multisegment& m) {
  EpsilonFactor e;
  for (const auto& pt : f_support(m)) e.factors.emplace_back(pt.line, pt.exp);
  std::sort(e.factors.begin(), e.factors.end());
  return e;
}

FormalRSProduct rs_lg(int s) {
  if (s < 1) throw DomainError("rs_lg needs s >= 1");
  FormalRSProduct r;
  r.exps[Exponent(0)] = s;
  for (int j = 1; j < s; ++j) {
    r.exps[Exponent(s - j)] += j;
    r.exps[Exponent(j - s)] += j;
  }
  return r;
}

std::pair<FormalRSProduct, FormalRSProduct> normalizing_factor(int s) {
  if (s < 1) throw DomainError("normalizing_factor needs s >= 1");
  FormalRSProduct num, den;
  for (int j = 1; j <= s; ++j) {
    num.exps[Exponent(j - s)] += 1;
    den.exps[Exponent(j)] += 1;
  }
  return {num, den};
}

std::pair<FormalRSProduct, FormalRSProduct> rs_quotient(const FormalRSProduct& l) {
  FormalRSProduct q = l * l.shifted(Exponent(1)).inverse();
  FormalRSProduct num, den;
  for (const auto& [a, e] : q.exps) (e > 0 ? num : den).exps.emplace(a, e > 0 ? e : -e);
  return {num, den};
}

std::string render(const FormalLFactor& l) {
  if (l.shifts.empty()) return "1";
  std::string out;
  for (const auto& a : l.shifts) {
    if (!out.empty()) out += ' ';
    out += "(1 - q^(-s";
    if (a != Exponent(0)) out += (a < Exponent(0) ? "+" : "-") + to_string(a < Exponent(0) ? -a : a);
    out += "))^-1";
  }
  return out;
}

std::string render(const LineRegistry& reg, const EpsilonFactor& e) {
  if (e.factors.empty()) return "1";
  std::string out;
  for (const auto& [line, a] : e.factors) {
    if (!out.empty()) out += ' ';
    out += "eps'(s";
    if (a != Exponent(0)) out += (a < Exponent(0) ? "-" : "+") + to_string(a < Exponent(0) ? -a : a);
    out += ", " + reg.info(line).name + ")";
  }
  return out;
}

std::string render(const FormalRSProduct& r) {
  if (r.exps.empty()) return "1";
  std::string out;
  for (const auto& [a, e] : r.exps) {
    if (!out.empty()) out += ' ';
    out += "L(z";
    if (a != Exponent(0)) out += (a < Exponent(0) ? "-" : "+") + to_string(a < Exponent(0) ? -a : a);
    out += ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace jlcomb
