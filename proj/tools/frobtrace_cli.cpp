// frobtrace command-line tool: single computations, verification sweeps, and
// machine-readable JSON Lines / CSV output.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobtrace/verify.hpp"

namespace ft = frobtrace;

namespace {

struct GlobalOpts {
  double tolerance = 1e-6;
  unsigned threads = ft::default_thread_count();
  std::uint64_t seed = 0;  // reserved; everything is deterministic
};

void emit(const std::string& line) { std::fputs((line + "\n").c_str(), stdout); }

std::optional<ft::CurveFamily> parse_family(const std::string& s) {
  for (ft::CurveFamily f :
       {ft::CurveFamily::t1728, ft::CurveFamily::beukers_a, ft::CurveFamily::beukers_b,
        ft::CurveFamily::legendre, ft::CurveFamily::twisted})
    if (s == ft::family_name(f)) return f;
  return std::nullopt;
}

// The hypergeometric value paired with each family's trace identity, the
// power of p it is scaled by, and the identity residual.
struct FamilyIdentity {
  ft::Complex F;
  int p_power = 1;
  double residual = 0;
};

FamilyIdentity family_identity(const ft::FpContext& ctx, const ft::GaussTable* table,
                               ft::CurveFamily fam, std::uint32_t t, std::int64_t trace) {
  const double pd = ctx.p;
  const double a = static_cast<double>(trace);
  FamilyIdentity out;
  switch (fam) {
    case ft::CurveFamily::t1728: {
      out.F = ft::hg_t1728(ctx, t);
      out.residual = std::abs(pd * out.F - ft::psi_t1728(ctx, t) * a);
      return out;
    }
    case ft::CurveFamily::legendre: {
      const auto phi = ft::quadratic_char(ctx);
      out.F = ft::hg_2f1(phi, phi, ft::trivial_char(ctx), t);
      out.residual = std::abs(pd * out.F + static_cast<double>(ctx.legendre(-1)) * a);
      return out;
    }
    case ft::CurveFamily::twisted: {
      const auto phi = ft::quadratic_char(ctx);
      const auto eps = ft::trivial_char(ctx);
      const std::uint32_t arg = ctx.reduce(1 + static_cast<std::int64_t>(ctx.inv(t)));
      out.F = ft::hg_general(*table, ft::HgSpec{{phi, phi, phi}, {eps, eps}, arg});
      out.p_power = 2;
      out.residual = std::abs(pd * pd * out.F -
                              static_cast<double>(ctx.legendre(-static_cast<std::int64_t>(t))) *
                                  (a * a - pd));
      return out;
    }
    case ft::CurveFamily::beukers_a: {
      const auto xi = ft::order12_char(ctx);
      const std::uint32_t w = ctx.mul(ctx.pow_mod(t, 3), ctx.inv(27));
      const std::uint32_t arg = ctx.reduce(-4 * static_cast<std::int64_t>(w));
      out.F = ft::hg_2f1(xi, xi.pow(7), xi.pow(8), arg);
      const ft::Complex chi_t = -xi.pow(-1)(-4) * xi.pow(-4)(w);
      out.residual = std::abs(pd * out.F - chi_t * a);
      return out;
    }
    case ft::CurveFamily::beukers_b: {
      const auto xi = ft::order12_char(ctx);
      const std::uint32_t arg = ctx.mul(ctx.mul(27 % ctx.p, ctx.mul(t, t)), ctx.inv(4));
      out.F = ft::hg_2f1(xi, xi.pow(5), ft::quadratic_char(ctx), arg);
      out.residual = std::abs(pd * out.F + xi.pow(3)(-27) * a);
      return out;
    }
  }
  return out;
}

int cmd_hg(std::uint32_t p, std::int64_t x, std::vector<std::int64_t> upper,
           std::vector<std::int64_t> lower) {
  const ft::FpContext ctx = ft::make_context(p);
  if (upper.empty()) {
    // default: the order-12 specialization tied to the j = 1728/t family
    const std::int64_t s = (p - 1) / 12;
    if (p % 12 != 1)
      ft::raise(ft::ErrorCode::bad_residue, "default characters need p = 1 mod 12");
    upper = {s, 5 * s};
    lower = {0};
  }
  if (upper.size() != lower.size() + 1)
    ft::raise(ft::ErrorCode::bad_argument, "need one more upper than lower character");
  ft::HgSpec spec;
  for (std::int64_t m : upper) spec.upper.push_back(ft::character(ctx, m));
  for (std::int64_t m : lower) spec.lower.push_back(ft::character(ctx, m));
  spec.x = ctx.reduce(x);
  ft::Complex value;
  if (spec.upper.size() == 2) {
    value = ft::hg_2f1(spec.upper[0], spec.upper[1], spec.lower[0], spec.x);
  } else {
    const ft::GaussTable table = ft::build_gauss_table(ctx);
    value = ft::hg_general(table, spec);
  }
  double scale = 1;
  for (std::size_t i = 0; i < spec.lower.size(); ++i) scale *= p;
  ft::JsonArray uj, lj;
  for (std::int64_t m : upper) uj.value(ctx.reduce_exp(m));
  for (std::int64_t m : lower) lj.value(ctx.reduce_exp(m));
  emit(ft::JsonObject{}
           .field("schema", "hg")
           .field("p", p)
           .field("x", ctx.reduce(x))
           .raw("upper", uj.str())
           .raw("lower", lj.str())
           .field("re", value.real())
           .field("im", value.imag())
           .field("scaled_re", scale * value.real())
           .field("scaled_im", scale * value.imag())
           .str());
  return 0;
}

int cmd_trace(std::uint32_t p, const std::string& family_str, std::optional<std::int64_t> t_opt,
              const std::string& format) {
  const auto fam = parse_family(family_str);
  if (!fam) ft::raise(ft::ErrorCode::bad_parameter, "unknown family " + family_str);
  const ft::FpContext ctx = ft::make_context(p);
  std::optional<ft::GaussTable> table;
  if (*fam == ft::CurveFamily::twisted) table = ft::build_gauss_table(ctx);

  std::vector<std::uint32_t> ts;
  if (t_opt) {
    ts.push_back(ctx.reduce(*t_opt));
  } else {
    for (std::uint32_t t = 0; t < p; ++t)
      if (!ft::family_excludes(ctx, *fam, t)) ts.push_back(t);
  }
  const bool csv = format == "csv";
  if (csv) emit("p,t,a_t,re_F,im_F,residual");
  for (std::uint32_t t : ts) {
    const auto cnt = ft::count_curve(ctx, ft::family_cubic(ctx, *fam, t));
    FamilyIdentity id{};
    bool have_identity = true;
    // the hypergeometric side degenerates at argument 0
    if ((*fam == ft::CurveFamily::beukers_b || *fam == ft::CurveFamily::twisted) && t == 0)
      have_identity = false;
    if (have_identity) id = family_identity(ctx, table ? &*table : nullptr, *fam, t, cnt.trace);
    if (csv) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%u,%u,%lld,%s,%s,%s", p, t,
                    static_cast<long long>(cnt.trace),
                    ft::json_double(id.F.real()).c_str(), ft::json_double(id.F.imag()).c_str(),
                    ft::json_double(id.residual).c_str());
      emit(buf);
    } else {
      ft::JsonObject o;
      o.field("schema", "trace")
          .field("p", p)
          .field("t", t)
          .field("family", family_str)
          .field("count", cnt.count)
          .field("trace", cnt.trace);
      if (have_identity)
        o.field("re_F", id.F.real()).field("im_F", id.F.imag()).field("residual", id.residual);
      emit(o.str());
    }
  }
  return 0;
}

int cmd_hecke_trace(int k, std::uint32_t p, const std::string& method, bool with_table) {
  ft::JsonObject o;
  o.field("schema", "hecke.trace").field("k", k).field("p", p).field("method", method);
  ft::Int trace;
  if (method == "oracle") {
    trace = ft::trace_oracle(k, p);
    o.field("trace", trace);
    emit(o.str());
    return 0;
  }
  if (p % 12 != 1) ft::raise(ft::ErrorCode::bad_residue, "trace formulas need p = 1 mod 12");
  const ft::PrimeData d = ft::make_prime_data(p);
  const ft::Int P(p);
  if (method == "thm2") {
    trace = ft::trace_via_frobenius(k, P, d.traces, d.gd, d.ed);
  } else if (method == "recursion") {
    std::map<int, ft::Int> prior;
    for (int kk = 4; kk < k; kk += 2)
      prior.emplace(kk, ft::trace_via_frobenius(kk, P, d.traces, d.gd, d.ed));
    trace = ft::trace_via_recursion(k, P, d.traces, d.gd, d.ed, prior);
  } else if (method == "hijikata") {
    trace = ft::trace_via_hijikata(k, p);
  } else {
    ft::raise(ft::ErrorCode::bad_parameter, "unknown method " + method);
  }
  o.field("trace", trace);
  if (k >= 4) o.field("lambda", ft::lambda_eval(k, P, d.gd, d.ed));
  o.raw("decomposition", ft::JsonObject{}
                             .field("a", d.gd.a)
                             .field("b", d.gd.b)
                             .field("c", d.ed.c)
                             .field("d", d.ed.d)
                             .str());
  if (method == "hijikata") {
    // the h*(-4p) term enters with coefficient 1/2, pinned by the k = 2
    // balance identity and the oracle agreement
    o.field("hstar_m4p_coefficient", "1/2");
  }
  if (with_table) {
    ft::JsonArray arr;
    for (auto a : d.traces) arr.value(a);
    o.raw("trace_table", arr.str());
  }
  emit(o.str());
  return 0;
}

int cmd_tau(std::uint32_t p, const std::string& method) {
  ft::JsonObject o;
  o.field("schema", "tau").field("p", p).field("method", method);
  if (method == "oracle") {
    o.field("tau", ft::trace_oracle(12, p));
    emit(o.str());
    return 0;
  }
  if (p % 12 != 1) ft::raise(ft::ErrorCode::bad_residue, "tau formulas need p = 1 mod 12");
  const ft::PrimeData d = ft::make_prime_data(p);
  const ft::Int P(p);
  ft::Int tau;
  if (method == "cor1") {
    tau = ft::tau_closed_form(P, d.traces, d.gd, d.ed);
  } else if (method == "cor2") {
    tau = ft::tau_tenth_power(P, d.traces, d.gd, d.ed);
  } else if (method == "cor3") {
    tau = ft::tau_twelfth_power(P, d.traces, d.gd, d.ed);
  } else {
    ft::raise(ft::ErrorCode::bad_parameter, "unknown method " + method);
  }
  o.field("tau", tau);
  o.raw("decomposition", ft::JsonObject{}
                             .field("a", d.gd.a)
                             .field("b", d.gd.b)
                             .field("c", d.ed.c)
                             .field("d", d.ed.d)
                             .str());
  if (method == "cor1") {
    o.field("x", ft::Int(d.gd.a) * d.gd.a * d.gd.b * d.gd.b);
    o.field("y", ft::Int(d.ed.c) * d.ed.d);
  }
  emit(o.str());
  return 0;
}

int cmd_decomp(std::uint32_t p) {
  const auto gd = ft::gaussian_decomp(p);
  const auto ed = ft::eisenstein_decomp(p);
  emit(ft::JsonObject{}
           .field("schema", "decomp")
           .field("p", p)
           .raw("gaussian", ft::JsonObject{}.field("a", gd.a).field("b", gd.b).str())
           .raw("eisenstein", ft::JsonObject{}.field("c", ed.c).field("d", ed.d).str())
           .str());
  return 0;
}

int cmd_classno(std::int64_t d) {
  const auto data = ft::class_number(d);
  ft::JsonArray forms;
  for (const auto& f : data.forms)
    forms.raw(ft::JsonArray{}.value(f.a).value(f.b).value(f.c).str());
  emit(ft::JsonObject{}
           .field("schema", "classno")
           .field("d", d)
           .field("h", data.h)
           .field("w", data.w)
           .field("h_star", data.h_star.str())
           .field("H", ft::hurwitz_H(d))
           .raw("forms", forms.str())
           .str());
  return 0;
}

int cmd_mforms_coeffs(const std::string& form, std::uint32_t n) {
  if (n > 10000) ft::raise(ft::ErrorCode::too_large, "coefficient order capped at 10000");
  ft::JsonArray arr;
  if (form == "delta") {
    const auto d = ft::delta_series(std::max<std::uint32_t>(n, 1));
    for (std::uint32_t i = 0; i <= n; ++i) arr.value(d[i]);
  } else if (form == "e4" || form == "e6") {
    const auto e = ft::eisenstein_series(form == "e4" ? 4 : 6, n);
    for (std::uint32_t i = 0; i <= n; ++i) arr.value(e[i]);
  } else if (form == "f16" || form == "f18" || form == "f20" || form == "f22") {
    const int k = std::stoi(form.substr(1));
    const auto d = ft::delta_series(std::max<std::uint32_t>(n, 1));
    auto s = d * ft::eisenstein_series(k == 18 || k == 22 ? 6 : 4, std::max<std::uint32_t>(n, 1));
    if (k == 20) s = s * ft::eisenstein_series(4, std::max<std::uint32_t>(n, 1));
    if (k == 22) {
      s = ft::delta_series(std::max<std::uint32_t>(n, 1)) *
          ft::eisenstein_series(4, std::max<std::uint32_t>(n, 1));
      s = s * ft::eisenstein_series(6, std::max<std::uint32_t>(n, 1));
    }
    for (std::uint32_t i = 0; i <= n; ++i) arr.value(s[i]);
  } else {
    ft::raise(ft::ErrorCode::bad_parameter, "unknown form " + form);
  }
  emit(ft::JsonObject{}
           .field("schema", "mforms.coeffs")
           .field("form", form)
           .field("n", n)
           .raw("coefficients", arr.str())
           .str());
  return 0;
}

int cmd_verify(const std::string& target_str, std::uint32_t pmax, const GlobalOpts& g) {
  const auto target = ft::parse_target(target_str);
  if (!target) ft::raise(ft::ErrorCode::bad_parameter, "unknown target " + target_str);
  ft::VerifyOptions opt;
  opt.pmax = pmax;
  opt.tolerance = g.tolerance;
  opt.threads = g.threads;
  bool all_pass = true;
  for (const auto& vr : ft::run_verify(*target, opt)) {
    for (const auto& pr : vr.primes) emit(ft::prime_report_json(vr, pr));
    emit(ft::summary_json(vr));
    std::fprintf(stderr, "%-16s primes=%zu pass=%s max_residual=%.3g mismatches=%ld (%.2fs)\n",
                 vr.target.c_str(), vr.primes.size(), vr.pass() ? "yes" : "NO",
                 vr.max_residual(), vr.mismatches(), vr.wall_seconds);
    all_pass = all_pass && vr.pass();
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-field hypergeometric functions, traces of Frobenius, and "
               "Hecke-operator traces, with built-in verification sweeps"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalOpts g;
  app.add_option("--tolerance", g.tolerance, "absolute tolerance on p-scaled residuals")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for sweeps")->capture_default_str();
  app.add_option("--seed", g.seed, "reserved (all computations are deterministic)");

  // hg
  auto* hg = app.add_subcommand("hg", "evaluate a hypergeometric function over F_p");
  std::uint32_t hg_p = 13;
  std::int64_t hg_x = 0;
  std::vector<std::int64_t> hg_upper, hg_lower;
  hg->add_option("--p", hg_p, "prime modulus")->required();
  hg->add_option("--x", hg_x, "argument in F_p")->required();
  hg->add_option("--upper", hg_upper, "upper character exponents (powers of T)")->delimiter(',');
  hg->add_option("--lower", hg_lower, "lower character exponents (powers of T)")->delimiter(',');

  // trace
  auto* tr = app.add_subcommand("trace", "trace of Frobenius on a curve family");
  std::uint32_t tr_p = 13;
  std::string tr_family = "t1728";
  std::string tr_format = "jsonl";
  std::int64_t tr_t = 0;
  bool tr_has_t = false;
  tr->add_option("--p", tr_p, "prime modulus")->required();
  tr->add_option("--family", tr_family, "t1728|beukers-a|beukers-b|legendre|twisted")
      ->capture_default_str();
  auto* tr_t_opt = tr->add_option("--t", tr_t, "single parameter value (default: sweep)");
  tr->add_option("--format", tr_format, "jsonl|csv")->capture_default_str();

  // hecke trace
  auto* hk = app.add_subcommand("hecke", "Hecke-operator traces");
  auto* hk_tr = hk->add_subcommand("trace", "trace of T_k(p) on level-1 weight-k cusp forms");
  int hk_k = 12;
  std::uint32_t hk_p = 13;
  std::string hk_method = "thm2";
  bool hk_table = false;
  hk_tr->add_option("--k", hk_k, "even weight")->required();
  hk_tr->add_option("--p", hk_p, "prime, 1 mod 12")->required();
  hk_tr->add_option("--method", hk_method, "thm2|recursion|hijikata|oracle")
      ->capture_default_str();
  hk_tr->add_flag("--with-trace-table", hk_table, "include the per-t trace table");
  hk->require_subcommand(1);

  // tau
  auto* ta = app.add_subcommand("tau", "Ramanujan tau at a prime");
  std::uint32_t ta_p = 13;
  std::string ta_method = "cor1";
  ta->add_option("--p", ta_p, "prime, 1 mod 12 (oracle accepts any prime)")->required();
  ta->add_option("--method", ta_method, "cor1|cor2|cor3|oracle")->capture_default_str();

  // decomp
  auto* de = app.add_subcommand("decomp", "normalized quadratic decompositions of p");
  std::uint32_t de_p = 13;
  de->add_option("--p", de_p, "prime")->required();

  // classno
  auto* cn = app.add_subcommand("classno", "class numbers of an imaginary quadratic order");
  std::int64_t cn_d = -3;
  cn->add_option("--d", cn_d, "negative discriminant")->required();

  // mforms coeffs
  auto* mf = app.add_subcommand("mforms", "q-expansion oracle");
  auto* mf_co = mf->add_subcommand("coeffs", "emit q-expansion coefficients");
  std::string mf_form = "delta";
  std::uint32_t mf_n = 24;
  mf_co->add_option("--form", mf_form, "delta|e4|e6|f16|f18|f20|f22")->capture_default_str();
  mf_co->add_option("--n", mf_n, "truncation order")->required();
  mf->require_subcommand(1);

  // verify
  auto* ve = app.add_subcommand("verify", "run verification sweeps");
  std::string ve_target = "all";
  std::uint32_t ve_pmax = 500;
  ve->add_option("--target", ve_target,
                 "thm1|thm2|recursion|props|koike-ono|schoof|lemmas|hasse-davenport|"
                 "power-sums|all")
      ->capture_default_str();
  ve->add_option("--pmax", ve_pmax, "sweep primes up to this bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*hg) return cmd_hg(hg_p, hg_x, hg_upper, hg_lower);
    if (*tr) {
      tr_has_t = tr_t_opt->count() > 0;
      return cmd_trace(tr_p, tr_family, tr_has_t ? std::optional(tr_t) : std::nullopt, tr_format);
    }
    if (*hk) return cmd_hecke_trace(hk_k, hk_p, hk_method, hk_table);
    if (*ta) return cmd_tau(ta_p, ta_method);
    if (*de) return cmd_decomp(de_p);
    if (*cn) return cmd_classno(cn_d);
    if (*mf) return cmd_mforms_coeffs(mf_form, mf_n);
    if (*ve) return cmd_verify(ve_target, ve_pmax, g);
  } catch (const ft::Error& e) {
    emit(ft::JsonObject{}
             .field("schema", "error")
             .field("code", ft::error_code_name(e.code()))
             .field("message", e.what())
             .str());
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
