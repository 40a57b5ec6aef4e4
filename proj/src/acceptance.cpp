#include "jlcomb/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "jlcomb/duality.hpp"
#include "jlcomb/global.hpp"
#include "jlcomb/lfactors.hpp"
#include "jlcomb/sweeps.hpp"
#include "jlcomb/text.hpp"
#include "jlcomb/transfer.hpp"

namespace jlcomb {

namespace {

// Time budgets in seconds.
constexpr double kDualityBudget = 60.0;
constexpr double kTransferBudget = 10.0;
constexpr double kDivisibilityBudget = 30.0;
constexpr double kNonunitBudget = 300.0;
// Minimum corpus size for the duality sweep.
constexpr std::size_t kMinDualityCases = 300;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

LineRegistry lines() {
  LineRegistry reg;
  reg.register_line("rho", 1, std::nullopt, true);
  reg.register_line("chi", 1, std::nullopt, false);
  reg.register_line("tau", 2, std::nullopt, false);
  return reg;
}

std::vector<Multisegment> flatten(const std::vector<std::vector<Multisegment>>& groups) {
  std::vector<Multisegment> out;
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

// 1
void duality_involution(Outcome& o, double& budget) {
  const LineRegistry reg = lines();
  const auto corpus = flatten(window_corpus(reg.require("rho"), 5, 7));
  const auto bad = failing_indices(corpus.size(), [&](std::size_t i) { return duality_roundtrip(corpus[i]); });
  o.detail << corpus.size() << " multisegments, " << bad.size() << " failures";
  o.require(bad.empty(), std::to_string(bad.size()) + " of " + std::to_string(corpus.size()) +
                             " multisegments break the round trip");
  o.require(corpus.size() >= kMinDualityCases, "corpus too small");
  budget = kDualityBudget;
}

// 2
void speh_duality(Outcome& o, double&) {
  const LineId rho = lines().require("rho");
  int checked = 0;
  for (int l = 1; l <= 5; ++l)
    for (int k = 1; k <= 5; ++k, ++checked)
      o.require(dual_irr(speh_u(l, rho, k, Exponent(0))) == speh_u(k, rho, l, Exponent(0)),
                "dual of u(sigma_" + std::to_string(l) + "," + std::to_string(k) + ") is wrong");
  if (o.pass) o.detail << checked << " pairs (l, k)";
}

// Right-hand side of LJ(u(Z(rho,l),k)) expanded on the inner-form basis.
VirtualRep transferred_unit_expansion(const LineRegistry& reg, LineId rho, int l, int k, int d) {
  const int s = reg.step(rho, d);
  if (l % s == 0) return expand_ubar(rho, l / s, k, s, d);
  SignedUnitaryProduct t = lj_u(reg, rho, l, k, d);
  return expand_product(t.product, d).scaled(t.sign);
}

// 3
void transfer_identity(Outcome& o, double& budget) {
  const LineRegistry reg = lines();
  const LineId rho = reg.require("rho");
  int by_l = 0, by_k = 0;
  for (int d : {2, 3})
    for (int l = 1; l <= 3; ++l)
      for (int k = 1; k <= 3; ++k) {
        if (l % d != 0 && k % d != 0) continue;
        (l % d == 0 ? by_l : by_k)++;
        const VirtualRep lhs = lj_std(reg, expand_u(l, rho, k), d);
        const VirtualRep rhs = transferred_unit_expansion(reg, rho, l, k, d);
        o.require(lhs == rhs, "d=" + std::to_string(d) + " l=" + std::to_string(l) +
                                  " k=" + std::to_string(k) + " differs");
      }
  o.require(by_l > 0 && by_k > 0, "both divisibility configurations must occur");
  if (o.pass) o.detail << by_l << " cases with s|l, " << by_k << " with s|k";
  budget = kTransferBudget;
}

bool some_permutation_divisible(int s, int k, int l) {
  std::vector<int> w(static_cast<std::size_t>(k));
  std::iota(w.begin(), w.end(), 1);
  do {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i) ok = (l + w[static_cast<std::size_t>(i - 1)] - i) % s == 0;
    if (ok) return true;
  } while (std::next_permutation(w.begin(), w.end()));
  return false;
}

// 4
void divisibility_lemma(Outcome& o, double& budget) {
  const LineRegistry reg = lines();
  const LineId rho = reg.require("rho");
  int cases = 0, vanishing = 0;
  for (int s = 1; s <= 6; ++s)
    for (int k = 1; k <= 6; ++k)
      for (int l = 1; l <= 6; ++l, ++cases) {
        const bool zero = lj_u(reg, rho, l, k, s).sign == 0;
        vanishing += zero;
        o.require(zero == !some_permutation_divisible(s, k, l),
                  "s=" + std::to_string(s) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
      }
  if (o.pass) o.detail << cases << " triples, " << vanishing << " vanishing";
  budget = kDivisibilityBudget;
}

// 5
void ubar_factorization(Outcome& o, double&) {
  const LineId rho = lines().require("rho");
  int cases = 0;
  for (int s = 1; s <= 4; ++s)
    for (int len = 1; len <= 3; ++len)
      for (int k = 1; k <= 8; ++k, ++cases) {
        const Segment sigma = centered_segment(rho, len, s, Exponent(0));
        o.require(speh_ubar(sigma, k, Exponent(0)) == product_label(ubar_factor(sigma, k)),
                  "s=" + std::to_string(s) + " len=" + std::to_string(len) + " k=" + std::to_string(k));
      }
  if (o.pass) o.detail << cases << " cases";
}

// 6
void ubar_dual_formula(Outcome& o, double&) {
  const LineId rho = lines().require("rho");
  int cases = 0;
  for (int s = 1; s <= 3; ++s)
    for (int kk = 1; kk <= 3; ++kk)
      for (int l = 1; l <= 5; ++l, ++cases) {
        const Segment tau = centered_segment(rho, kk, s, Exponent(0));
        const int a = l / s, b = l % s;
        UnitaryProduct rhs;
        for (int i = 1; i <= b; ++i)
          rhs.units.push_back(make_u_prime(centered_segment(rho, a + 1, s, Exponent(0)), kk,
                                           Exponent(2 * i - b - 1, 2)));
        if (a != 0)
          for (int j = 1; j <= s - b; ++j)
            rhs.units.push_back(make_u_prime(centered_segment(rho, a, s, Exponent(0)), kk,
                                             Exponent(2 * j - (s - b + 1), 2)));
        o.require(dual_irr(speh_ubar(tau, l, Exponent(0))) == product_label(rhs),
                  "s=" + std::to_string(s) + " k=" + std::to_string(kk) + " l=" + std::to_string(l));
      }
  if (o.pass) o.detail << cases << " cases";
}

// 7
void second_counterexample(Outcome& o, double&) {
  const LineRegistry reg = lines();
  const LineId rho = reg.require("rho");
  const int d = 2;
  const Segment st1 = base_d_cuspidal(reg, rho, d);

  const Multisegment lj_u_st3 = product_label(lj_u(reg, rho, 3, 2, d).product);
  const Multisegment ubar_st1_3 = speh_ubar(st1, 3, Exponent(0));
  const VirtualRep st4_st2 = VirtualRep::basis(Multisegment({centered_segment(rho, 4, 1, Exponent(0)),
                                                             centered_segment(rho, 2, 1, Exponent(0))}));
  const VirtualRep lj_pi = lj_std(reg, st4_st2, d);
  const Multisegment st2p_st1p({centered_segment(rho, 2, 2, Exponent(0)), st1});
  const Multisegment one2_st1 = speh_u_prime(st1, 2, Exponent(0)) + Multisegment({st1});

  const bool a = lj_u_st3 == ubar_st1_3;
  const bool b = lj_pi.size() == 1 && lj_pi.terms().begin()->first == st2p_st1p;
  const bool c = ubar_st1_3 == one2_st1;
  const bool differ = !(lj_pi.size() == 1 && lj_pi.terms().begin()->first == lj_u_st3);
  o.require(a, "|LJ|(u(St_3,2)) = " + render(reg, lj_u_st3, d) + ", expected " +
                   render(reg, ubar_st1_3, d));
  o.require(b, "|LJ|(St_4 x St_2) = " + render(reg, lj_pi) + ", expected " + render(reg, st2p_st1p, d));
  o.require(c, "ubar(St'_1,3) is not 1'_2 x St'_1");
  o.require(differ, "the two transfers coincide");
}

// 8
void nonunit_lemma(Outcome& o, double& budget) {
  const LineRegistry reg = lines();
  const LineId rho = reg.require("rho");
  const int d = 4, s = 4;
  const Segment st3 = centered_segment(rho, 3, s, Exponent(0));
  const Segment st4 = centered_segment(rho, 4, s, Exponent(0));
  UnitaryProduct pi;
  pi.units = {make_u_prime(st3, 4, Exponent(-3, 2)), make_u_prime(st4, 3, Exponent(-1, 2)),
              make_u_prime(st4, 3, Exponent(1, 2)), make_u_prime(st3, 4, Exponent(3, 2))};
  const Multisegment label = product_label(pi);
  const Multisegment ubar = speh_ubar(st3, 16, Exponent(0));
  UnitaryProduct ubar_units;
  for (int i = -3; i <= 3; i += 2) ubar_units.units.push_back(make_u_prime(st3, 4, Exponent(i, 2)));

  o.require(product_label(ubar_units) == ubar, "ubar(St'_3,16) factorization");
  o.require(is_lower(label, ubar), "pi is not below ubar(St'_3,16)");
  const auto pre = in_image_lju(reg, pi, d);
  o.require(!pre.has_value(), "unexpected preimage " + (pre ? render(reg, *pre) : std::string()));
  if (o.pass) o.detail << "pi < ubar(St'_3,16); no preimage under |LJ^u|";
  budget = kNonunitBudget;
}

// 9
void l_epsilon_suite(Outcome& o, double&) {
  const LineRegistry reg = lines();
  const LineId rho = reg.require("rho");
  int checks = 0;
  for (int d = 1; d <= 4; ++d) {
    const Segment one1 = base_d_cuspidal(reg, rho, d);
    for (int n = 1; n <= 6; ++n) {
      // Trivial representation 1'_n and Steinberg St'_n.
      FormalLFactor expected;
      for (int j = 0; j < n; ++j) expected.shifts.push_back(Exponent(d * n - 1, 2) - Exponent(d * j));
      std::sort(expected.shifts.begin(), expected.shifts.end());
      o.require(l_irr(reg, speh_u_prime(one1, n, Exponent(0)), d) == expected,
                "L(1'_" + std::to_string(n) + ") d=" + std::to_string(d));
      const Multisegment st({centered_segment(rho, n, d, Exponent(0))});
      o.require(l_irr(reg, st, d) == FormalLFactor{{Exponent(d * n - 1, 2)}},
                "L(St'_" + std::to_string(n) + ") d=" + std::to_string(d));
      EpsilonFactor eps;
      for (int j = 0; j < d * n; ++j) eps.factors.emplace_back(rho, Exponent(d * n - 1, 2) - Exponent(j));
      std::sort(eps.factors.begin(), eps.factors.end());
      o.require(eps_irr(st) == eps, "eps'(St'_" + std::to_string(n) + ") d=" + std::to_string(d));
      checks += 3;
    }
  }
  // Invariance under C for single esi and for small labels.
  for (int d = 1; d <= 4; ++d)
    for (const char* name : {"rho", "chi", "tau"}) {
      const LineId line = reg.require(name);
      const int s = reg.step(line, d);
      for (int k = 1; k <= 4; ++k)
        for (const Exponent& t : {Exponent(0), Exponent(1, 2), Exponent(-1), Exponent(1, 3)}) {
          const Segment dseg = centered_segment(line, k, s, t);
          const Multisegment dm({dseg});
          const Multisegment fm({c_inv(dseg)});
          o.require(l_irr(reg, dm, d) == l_irr(reg, fm, 1) && eps_irr(dm) == eps_irr(fm),
                    std::string("C-invariance ") + name + " d=" + std::to_string(d));
          ++checks;
        }
      for (const auto& group : window_corpus(line, 3, 3, s))
        for (const auto& dm : group) {
          const Multisegment fm = m_map(dm);
          o.require(l_irr(reg, dm, d) == l_irr(reg, fm, 1) && eps_irr(dm) == eps_irr(fm),
                    "Lg(S') vs Lg(S) for " + render(reg, dm, d));
          ++checks;
        }
    }
  // eps' is kept by |LJ| on the transfer corpus; L may differ when s|k only.
  int l_differs = 0, lj_cases = 0;
  for (int d : {2, 3})
    for (int l = 1; l <= 3; ++l)
      for (int k = 1; k <= 3; ++k) {
        SignedUnitaryProduct t = lj_u(reg, rho, l, k, d);
        if (t.sign == 0) continue;
        ++lj_cases;
        const Multisegment split = speh_u(l, rho, k, Exponent(0));
        const Multisegment inner = product_label(t.product);
        o.require(eps_irr(split) == eps_irr(inner),
                  "eps' not preserved for l=" + std::to_string(l) + " k=" + std::to_string(k));
        const bool same_l = l_irr(reg, split, 1) == l_irr(reg, inner, d);
        if (l % d == 0) o.require(same_l, "L not preserved in the s|l case");
        else if (!same_l) ++l_differs;
      }
  if (o.pass)
    o.detail << checks << " closed-form and invariance checks; eps' kept on " << lj_cases
             << " transfers; L differs in " << l_differs << " dual-case transfers";
}

// 10
void normalizing_identity(Outcome& o, double&) {
  for (int s = 1; s <= 5; ++s)
    o.require(rs_quotient(rs_lg(s)) == normalizing_factor(s), "s=" + std::to_string(s));
  if (o.pass) o.detail << "s = 1..5";
}

// 11
void interval_suite(Outcome& o, double&) {
  // Every multiset of radii in 0..4 whose union has at most 10 elements.
  std::map<std::vector<std::int64_t>, std::vector<std::vector<std::int64_t>>> decompositions;
  std::vector<std::int64_t> radii;
  std::function<void(std::int64_t, int)> grow = [&](std::int64_t min_c, int room) {
    std::vector<std::int64_t> values;
    for (auto c : radii)
      for (std::int64_t x = -c; x <= c; ++x) values.push_back(x);
    std::sort(values.begin(), values.end());
    decompositions[values].push_back(radii);
    for (std::int64_t c = min_c; c <= 4; ++c)
      if (2 * c + 1 <= room) {
        radii.push_back(c);
        grow(c, room - static_cast<int>(2 * c + 1));
        radii.pop_back();
      }
  };
  grow(0, 10);

  std::size_t multisets = 0, decomposable = 0;
  std::vector<std::int64_t> a;
  std::function<void(std::int64_t)> walk = [&](std::int64_t v) {
    ++multisets;
    auto greedy = interval_decomposition(a);
    auto it = decompositions.find(a);
    if (it == decompositions.end()) {
      o.require(!greedy.has_value(), "greedy decomposed an indecomposable multiset");
    } else {
      ++decomposable;
      o.require(it->second.size() == 1, "decomposition not unique");
      std::vector<Exponent> expect(it->second.front().begin(), it->second.front().end());
      o.require(greedy && *greedy == expect, "greedy differs from exhaustive search");
    }
    if (a.size() == 10) return;
    for (std::int64_t x = v; x <= 4; ++x) {
      a.push_back(x);
      walk(x);
      a.pop_back();
    }
  };
  walk(-4);
  if (o.pass) o.detail << multisets << " multisets, " << decomposable << " decomposable";
}

std::int64_t count_partitions(int n, int l) {
  // Set partitions of {0..n-1} into l unordered blocks of size n/l: always
  // place the smallest unused element first.
  const int m = n / l;
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  std::vector<int> size(static_cast<std::size_t>(l), 0);
  std::function<std::int64_t(int, int)> rec = [&](int i, int opened) -> std::int64_t {
    if (i == n) return 1;
    std::int64_t total = 0;
    for (int b = 0; b < opened; ++b)
      if (size[static_cast<std::size_t>(b)] < m) {
        ++size[static_cast<std::size_t>(b)];
        total += rec(i + 1, opened);
        --size[static_cast<std::size_t>(b)];
      }
    if (opened < l) {
      ++size[static_cast<std::size_t>(opened)];
      total += rec(i + 1, opened + 1);
      --size[static_cast<std::size_t>(opened)];
    }
    return total;
  };
  return rec(0, 0);
}

// 12
void counting(Outcome& o, double&) {
  for (auto [n, l, expected] : {std::tuple{4, 2, 3}, std::tuple{6, 3, 15}}) {
    const auto value = levi_conjugate_count(n, l);
    o.require(value == expected && count_partitions(n, l) == expected,
              "(" + std::to_string(n) + "," + std::to_string(l) + ") gave " + value.str());
  }
  if (o.pass) o.detail << "(4,2)=3, (6,3)=15";
}

// 13
void order_sanity(Outcome& o, double&) {
  const LineRegistry reg = lines();
  const auto groups = window_corpus(reg.require("rho"), 5, 7);
  const auto corpus = flatten(groups);
  const auto bad_succ =
      failing_indices(corpus.size(), [&](std::size_t i) { return successor_properties(corpus[i]); });
  const auto bad_order =
      failing_indices(groups.size(), [&](std::size_t i) { return order_axioms(groups[i]); });
  o.require(bad_succ.empty(), std::to_string(bad_succ.size()) + " multisegments violate the successor lemma");
  o.require(bad_order.empty(), std::to_string(bad_order.size()) + " support groups violate the order axioms");
  if (o.pass) o.detail << corpus.size() << " multisegments in " << groups.size() << " support groups";
}

// 14
void sign_coherence(Outcome& o, double&) {
  const LineRegistry reg = lines();
  const LineId rho = reg.require("rho");
  std::ostringstream thetas;
  for (int d : {2, 3}) {
    std::map<std::size_t, int> theta;
    for (const auto& group : window_corpus(rho, 5, 6))
      for (const auto& m : group) {
        const VirtualRep x = VirtualRep::basis(m);
        const VirtualRep lhs = lj_std(reg, raw_dual_std(x), d);
        const VirtualRep rhs = raw_dual_std(lj_std(reg, x, d));
        const std::size_t n = m.support_size();
        if (lhs.empty() && rhs.empty()) continue;
        auto it = theta.find(n);
        if (it == theta.end()) {
          int t = 0;
          if (lhs == rhs) t = 1;
          else if (lhs == -rhs) t = -1;
          o.require(t != 0, "no sign fits " + render(reg, m, 1) + " for d=" + std::to_string(d));
          if (t != 0) theta.emplace(n, t);
          continue;
        }
        o.require(lhs == rhs.scaled(it->second),
                  "sign changes inside component N=" + std::to_string(n) + " at " + render(reg, m, 1));
      }
    for (auto [n, t] : theta) {
      const int expected = ((n - n / static_cast<std::size_t>(d)) % 2 == 0) ? 1 : -1;
      thetas << " d=" << d << ",N=" << n << ":" << (t > 0 ? "+" : "-");
      o.require(t == expected, "theta for N=" + std::to_string(n) + " is not (-1)^(N-N/d)");
    }
  }
  if (o.pass) o.detail << "theta" << thetas.str();
}

struct Entry {
  const char* title;
  void (*run)(Outcome&, double&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {"duality involution on the window corpus", duality_involution},
      {"dual of u(sigma,k) is u(tau,l)", speh_duality},
      {"LJ of the u(sigma,k) expansion equals the transferred expansion", transfer_identity},
      {"divisibility lemma matches vanishing of the transfer", divisibility_lemma},
      {"ubar factorization at label level", ubar_factorization},
      {"dual of ubar(tau',l) via the stretched and shortened factors", ubar_dual_formula},
      {"second global counterexample, d=2", second_counterexample},
      {"non-unitary-image product, d=4", nonunit_lemma},
      {"L and eps' factors", l_epsilon_suite},
      {"Rankin-Selberg normalizing factor cancellation", normalizing_identity},
      {"symmetric interval decomposition", interval_suite},
      {"conjugate Levi count", counting},
      {"order relation sanity", order_sanity},
      {"sign coherence of LJ with the duals", sign_coherence},
  };
  return list;
}

}  // namespace

int criterion_count() { return static_cast<int>(entries().size()); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw DomainError("no criterion " + std::to_string(id));
  const Entry& e = entries()[static_cast<std::size_t>(id - 1)];
  CriterionResult r{id, e.title, false, "", 0};
  Outcome o;
  double budget = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    e.run(o, budget);
  } catch (const std::exception& ex) {
    o.require(false, std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0) o.require(r.seconds < budget, "over the time budget");
  r.pass = o.pass;
  r.detail = o.detail.str();
  return r;
}

std::vector<CriterionResult> run_all_criteria() {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= criterion_count(); ++i) out.push_back(run_criterion(i));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << r.seconds << " s)";
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

}  // namespace jlcomb
