#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jlcomb/acceptance.hpp"
#include "jlcomb/duality.hpp"
#include "jlcomb/global.hpp"
#include "jlcomb/lfactors.hpp"
#include "jlcomb/text.hpp"
#include "jlcomb/transfer.hpp"

using namespace jlcomb;
using nlohmann::json;

namespace {

struct Options {
  std::string lines_file;
  int d = 1;
  bool json_out = false;
  std::size_t limit = 10;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

LineRegistry load_registry(const Options& opt) {
  if (opt.lines_file.empty()) return default_registry();
  return lines_from_json(read_json(opt.lines_file));
}

// "l=2" style arguments.
std::map<std::string, int> key_values(const std::vector<std::string>& args) {
  std::map<std::string, int> out;
  for (const auto& a : args) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + a + "'");
    Exponent v = parse_exponent(a.substr(eq + 1));
    if (!is_integer(v)) throw ParseError("'" + a + "' needs an integer value");
    out[a.substr(0, eq)] = static_cast<int>(v.numerator());
  }
  return out;
}

int need(const std::map<std::string, int>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError("missing argument " + key + "=<int>");
  if (it->second < 1) throw DomainError(key + " must be positive");
  return it->second;
}

void emit(const Options& opt, const std::string& text, const json& j) {
  if (opt.json_out) std::cout << j.dump() << "\n";
  else std::cout << text << "\n";
}

void emit_virtual(const Options& opt, const LineRegistry& reg, const VirtualRep& v) {
  emit(opt, render(reg, v), to_json(reg, v));
}

void emit_signed(const Options& opt, const LineRegistry& reg, const SignedUnitaryProduct& t, int d) {
  std::string text = t.sign == 0 ? "0" : std::to_string(t.sign) + " * " + render(reg, t.product);
  if (t.sign != 0) text += "  " + render(reg, product_label(t.product), d);
  json j = {{"sign", t.sign}};
  if (t.sign != 0) j["product"] = to_json(reg, t.product, d);
  emit(opt, text, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multisegment calculus for GL_n and its inner forms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--lines", opt.lines_file, "line registry (JSON array of {name, p, dual})");
  app.add_option("--d", opt.d, "index of the division algebra (1 = split)")->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json_out, "machine-readable output");
  app.add_option("--limit", opt.limit, "search cap");

  std::string expr_a, expr_b, line_name = "rho";
  std::vector<std::string> kv_args, ids;
  bool use_expand = false, use_unit = false, ll = false;
  int n_arg = 0, l_arg = 0, k_arg = 0;
  std::string algebra_file, cuspidal_file;

  auto* dual = app.add_subcommand("dual", "dual of an irreducible label");
  dual->add_option("label", expr_a)->required();

  auto* order = app.add_subcommand("order", "is the first label below the second");
  order->add_option("lower", expr_a)->required();
  order->add_option("upper", expr_b)->required();
  order->add_flag("--ll", ll, "compare the split-side images (the << order)");

  auto* expand_u_cmd = app.add_subcommand("expand-u", "standard expansion of u(Z(rho,l),k) or u'(T(rho',l),k)");
  expand_u_cmd->add_option("args", kv_args, "l=<int> k=<int>")->required();
  expand_u_cmd->add_option("--line", line_name);

  auto* expand_ubar_cmd = app.add_subcommand("expand-ubar", "standard expansion of ubar(T(rho',l),k)");
  expand_ubar_cmd->add_option("args", kv_args, "l=<int> k=<int>")->required();
  expand_ubar_cmd->add_option("--line", line_name);

  auto* lj = app.add_subcommand("lj", "Jacquet-Langlands transfer");
  lj->add_option("input", kv_args, "virtual representation, or l=<int> k=<int>");
  lj->add_flag("--expand-u", use_expand, "transfer the expansion of u(Z(rho,l),k)");
  lj->add_flag("--unit", use_unit, "closed-form transfer of u(Z(rho,l),k)");
  lj->add_option("--line", line_name);

  auto* recognize = app.add_subcommand("recognize", "factor a label into unitary units");
  recognize->add_option("label", expr_a)->required();

  auto* lfun = app.add_subcommand("lfun", "L-function of an irreducible label");
  lfun->add_option("label", expr_a)->required();
  auto* eps = app.add_subcommand("eps", "eps' factor of an irreducible label");
  eps->add_option("label", expr_a)->required();

  auto* enumerate = app.add_subcommand("enumerate", "all labels with the support of the given one");
  enumerate->add_option("label", expr_a)->required();

  auto* global = app.add_subcommand("global-check", "global discrete series bookkeeping");
  global->add_option("--algebra", algebra_file)->required();
  global->add_option("--cuspidal", cuspidal_file)->required();
  global->add_option("k", k_arg)->required()->check(CLI::PositiveNumber);

  auto* levi = app.add_subcommand("count-levi", "conjugate Levi subgroups of type (m,...,m)");
  levi->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  levi->add_option("l", l_arg)->required()->check(CLI::PositiveNumber);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the acceptance criteria");
  selfcheck->add_option("ids", ids, "criterion numbers (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const LineRegistry reg = load_registry(opt);
    const int d = opt.d;

    if (*dual) {
      Multisegment m = parse_multisegment(expr_a, reg, d);
      Multisegment r = dual_irr(m);
      emit(opt, render(reg, r, d), json(render(reg, r, d)));
    } else if (*order) {
      Multisegment a = parse_multisegment(expr_a, reg, d), b = parse_multisegment(expr_b, reg, d);
      const bool r = ll ? ll_less(a, b) : is_lower(a, b);
      emit(opt, r ? "true" : "false", json(r));
    } else if (*expand_u_cmd) {
      auto kv = key_values(kv_args);
      const LineId line = reg.require(line_name);
      const int l = need(kv, "l"), k = need(kv, "k");
      emit_virtual(opt, reg, d == 1 ? expand_u(l, line, k) : expand_u_prime(line, l, k, reg.step(line, d), d));
    } else if (*expand_ubar_cmd) {
      auto kv = key_values(kv_args);
      const LineId line = reg.require(line_name);
      emit_virtual(opt, reg, expand_ubar(line, need(kv, "l"), need(kv, "k"), reg.step(line, d), d));
    } else if (*lj) {
      if (d == 1) throw DomainError("lj needs --d > 1");
      if (use_expand || use_unit) {
        auto kv = key_values(kv_args);
        const LineId line = reg.require(line_name);
        const int l = need(kv, "l"), k = need(kv, "k");
        if (use_unit) emit_signed(opt, reg, lj_u(reg, line, l, k, d), d);
        else emit_virtual(opt, reg, lj_std(reg, expand_u(l, line, k), d));
      } else {
        std::string text;
        for (const auto& part : kv_args) text += part + " ";
        emit_virtual(opt, reg, lj_std(reg, parse_virtual(text, reg, 1), d));
      }
    } else if (*recognize) {
      Multisegment m = parse_multisegment(expr_a, reg, d);
      auto p = recognize_unitary(m, std::max<std::size_t>(opt.limit, 24));
      if (!p) emit(opt, "none", json(nullptr));
      else emit(opt, render(reg, *p), to_json(reg, *p, d));
    } else if (*lfun) {
      FormalLFactor l = l_irr(reg, parse_multisegment(expr_a, reg, d), d);
      emit(opt, render(l), to_json(l));
    } else if (*eps) {
      EpsilonFactor e = eps_irr(parse_multisegment(expr_a, reg, d));
      emit(opt, render(reg, e), to_json(reg, e));
    } else if (*enumerate) {
      Multisegment m = parse_multisegment(expr_a, reg, d);
      auto all = enumerate_multisegments(reg, m.support(), d, opt.limit);
      json arr = json::array();
      std::string text;
      for (const auto& x : all) {
        arr.push_back(render(reg, x, d));
        text += render(reg, x, d) + "\n";
      }
      if (!text.empty()) text.pop_back();
      emit(opt, text, arr);
    } else if (*global) {
      GlobalAlgebra alg = algebra_from_json(read_json(algebra_file));
      GlobalCuspidalData rho = cuspidal_from_json(read_json(cuspidal_file), reg);
      const int s = s_rho_D(reg, rho, alg);
      const bool compatible = d_compatible_mw(reg, rho, k_arg, alg);
      DiscreteSeriesLabel split{1, rho, k_arg};
      std::string text = "s_rho,D = " + std::to_string(s) + "\nMW(" + rho.name + "," +
                         std::to_string(k_arg) + ") D-compatible: " + (compatible ? "yes" : "no");
      json j = {{"s_rho_D", s}, {"compatible", compatible}};
      if (compatible) {
        DiscreteSeriesLabel inner = g_inverse(reg, split, alg);
        text += "\nG^-1: MW'(" + rho.name + "'," + std::to_string(inner.k) + ")" +
                (inner.cuspidal() ? " (cuspidal)" : "");
        j["inner_k"] = inner.k;
      }
      json locals = json::object();
      for (const auto& [v, gamma] : rho.locals) {
        LocalComponent c = local_component(reg, split, v, alg);
        if (auto* m = std::get_if<Multisegment>(&c)) {
          text += "\n" + v + ": " + render(reg, *m, 1);
          locals[v] = render(reg, *m, 1);
        } else {
          const auto& t = std::get<SignedUnitaryProduct>(c);
          const int dv = alg.d_at(v);
          text += "\n" + v + ": " + (t.sign == 0 ? std::string("0") :
                                     std::to_string(t.sign) + " * " + render(reg, product_label(t.product), dv));
          locals[v] = {{"sign", t.sign}, {"label", render(reg, product_label(t.product), dv)}};
        }
      }
      j["locals"] = locals;
      emit(opt, text, j);
    } else if (*levi) {
      auto c = levi_conjugate_count(n_arg, l_arg);
      emit(opt, c.str(), json(c.str()));
    } else if (*selfcheck) {
      std::vector<CriterionResult> results;
      if (ids.empty()) {
        results = run_all_criteria();
      } else {
        for (const auto& id : ids) results.push_back(run_criterion(std::stoi(id)));
      }
      json arr = json::array();
      std::string text;
      bool all = true;
      for (const auto& r : results) {
        all = all && r.pass;
        text += format_result(r) + "\n";
        arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                       {"seconds", r.seconds}});
      }
      if (!text.empty()) text.pop_back();
      emit(opt, text, arr);
      return all ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
