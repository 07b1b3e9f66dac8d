#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "slicepoly/bounds.hpp"
#include "slicepoly/closure.hpp"
#include "slicepoly/constructions.hpp"
#include "slicepoly/distinguish.hpp"
#include "slicepoly/harness.hpp"
#include "slicepoly/spectrum.hpp"

namespace slicepoly {

namespace {

const char* kWithoutReplacement =
    "sampled coordinates are drawn without replacement (the construction draws i.u.a.r. with replacement)";

std::string rat(Rational r) {
  r.canonicalize();
  return to_string(r);
}
// Exact form when short, decimal otherwise; for human-readable check details.
std::string brief(const Rational& r) {
  std::string s = to_string(r);
  return s.size() <= 24 ? s : to_string(to_real(r), 8);
}
double approx(const Rational& r) { return r.get_d(); }
std::string real_str(const Real& x) { return to_string(x, 12); }

ParamSchema P(std::string name, std::string type, Json def, std::string help) {
  return {std::move(name), std::move(type), std::move(def), std::move(help)};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

std::uint64_t power_gap_expected(int k, int K, std::uint32_t p) {
  return largest_power_dividing(static_cast<std::uint64_t>(std::abs(K - k)), p);
}

Json report_json(const DistinguishReport& r) {
  Json j{{"n", r.n},
         {"p", r.p},
         {"k", r.k},
         {"K", r.K},
         {"degree", r.degree},
         {"mode", to_string(r.mode)},
         {"outside_by_degree", r.outside_by_degree},
         {"outside_count", r.outside_count},
         {"psi_k", rat(r.psi_k)},
         {"psi_K", rat(r.psi_K)},
         {"psi_K_expected", rat(r.psi_K_expected)},
         {"psi_K_upper", rat(r.psi_K_upper)}};
  if (!r.error_set.empty()) {
    Json es = Json::array();
    for (auto e : r.error_set) es.push_back(to_hex(e));
    j["error_set"] = es;
  }
  if (!r.strategy.empty()) {
    j["strategy"] = r.strategy;
    j["seed"] = r.seed;
  }
  if (!r.per_budget.empty()) j["per_budget"] = r.per_budget;
  if (r.witness) j["witness"] = poly_to_json(*r.witness);
  return j;
}

// ---- mindeg / closure / niewang / ball-fact / claimA1 ----

void exp_mindeg(const Params& ps, std::uint64_t, RunReport& rep) {
  const int n = ps.integer("n"), k = ps.integer("k"), K = ps.integer("K");
  const auto p = static_cast<std::uint32_t>(ps.integer("p"));
  auto r = exact_min_degree(n, p, k, K);
  rep.results = report_json(r);
  const int q = std::abs(K - k);
  const bool applicable = K > k ? k >= q : n - k >= q;
  const auto expected = power_gap_expected(k, K, p);
  if (applicable)
    rep.check("degree equals the largest p-power dividing |K - k|", r.degree == static_cast<int>(expected),
              "degree " + std::to_string(r.degree) + ", expected " + std::to_string(expected));
  rep.check("witness vanishes on slice k", r.psi_k == 0, rat(r.psi_k));
  rep.check("witness is nonzero somewhere on slice K", r.psi_K > 0, rat(r.psi_K));
}

std::vector<std::uint64_t> parse_point_set(const std::string& spec, int n, std::uint64_t seed) {
  if (spec.rfind("slice:", 0) == 0) {
    std::vector<std::uint64_t> out;
    for (int w : parse_int_list(spec.substr(6))) {
      auto s = slice_masks(n, w);
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  }
  if (spec.rfind("random:", 0) == 0) {
    const int size = std::stoi(spec.substr(7));
    if (n > 30) throw std::invalid_argument("random point sets need n <= 30");
    Rng rng(seed);
    std::vector<std::uint64_t> out;
    for (auto v : rng.sample_distinct(1u << n, static_cast<std::uint32_t>(size))) out.push_back(v);
    return out;
  }
  if (spec.rfind("ball:", 0) == 0) return hamming_ball(n, 0, std::stoi(spec.substr(5)));
  std::vector<std::uint64_t> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(from_hex(item));
  return out;
}

void exp_closure(const Params& ps, std::uint64_t seed, RunReport& rep) {
  const int n = ps.integer("n"), D = ps.integer("D");
  PrimeField F(static_cast<std::uint32_t>(ps.integer("p")));
  auto E = parse_point_set(ps.str("E"), n, seed);
  const std::string cand = ps.str("candidates");
  CandidateSet cs = cand == "cube" ? CandidateSet::cube()
                                   : CandidateSet::of_slices(parse_int_list(cand.substr(cand.find(':') + 1)));
  auto res = closure(n, E, D, F, cs);
  Json per = Json::object();
  for (auto& [w, pr] : res.per_slice) per[std::to_string(w)] = {{"members", pr.first}, {"size", pr.second}};
  rep.results = {{"n", res.n},         {"D", res.D},       {"e_size", res.e_size}, {"rank", res.rank},
                 {"n_d", res.n_d},     {"closure_count", res.closure_count},      {"per_slice", per}};
  std::set<std::uint64_t> inE(E.begin(), E.end());
  bool contains_E = true;
  for (std::size_t i = 0; i < res.points.size(); ++i)
    if (inE.count(res.points[i]) && !res.member[i]) contains_E = false;
  rep.check("closure contains E", contains_E);
  if (cs.full_cube) {
    Rational lhs(BigInt(static_cast<unsigned long>(res.closure_count)), BigInt(1) << n);
    Rational rhs(BigInt(static_cast<unsigned long>(res.e_size)), BigInt(static_cast<unsigned long>(res.n_d)));
    lhs.canonicalize();
    rhs.canonicalize();
    rep.check("|cl_D(E)| / 2^n <= |E| / N_D", lhs <= rhs, rat(lhs) + " <= " + rat(rhs));
  }
}

void exp_niewang(const Params& ps, std::uint64_t seed, RunReport& rep) {
  int n_lo = ps.integer("n_lo"), n_hi = ps.integer("n_hi");
  if (ps.integer("n") > 0) n_lo = n_hi = ps.integer("n");
  const int D_max = ps.integer("D_max"), trials = ps.integer("trials");
  PrimeField F(static_cast<std::uint32_t>(ps.integer("p")));
  auto& tab = rep.table("niewang", {"n", "D", "trials", "violations", "max_lhs_over_rhs", "ball_lhs", "ball_rhs"});
  auto& per = rep.table("trials", {"n", "D", "trial", "e_size", "lhs", "rhs"});
  std::uint64_t violations = 0, ball_failures = 0;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int D = 0; D <= std::min(D_max, n); ++D) {
      Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(n) * 64 + D));
      const std::uint64_t nd = monomial_count(n, D).get_ui();
      const std::uint64_t cube = std::uint64_t{1} << n;
      std::uint64_t v = 0;
      double worst = 0;
      for (int t = 0; t < trials; ++t) {
        const auto size = 1 + rng.below(std::min(nd, cube));
        std::vector<std::uint64_t> E;
        for (auto x : rng.sample_distinct(static_cast<std::uint32_t>(cube), static_cast<std::uint32_t>(size)))
          E.push_back(x);
        auto r = nie_wang_check(n, E, D, F);
        v += !r.holds;
        worst = std::max(worst, approx(r.lhs / r.rhs));
        per.rows.push_back({n, D, t, E.size(), rat(r.lhs), rat(r.rhs)});
      }
      auto ball = hamming_ball(n, rng.below(cube), D);
      auto b = nie_wang_check(n, ball, D, F);
      ball_failures += b.lhs != b.rhs;
      violations += v;
      tab.rows.push_back({n, D, trials, v, worst, rat(b.lhs), rat(b.rhs)});
    }
  rep.check("no random E violates |cl_D(E)|/2^n <= |E|/N_D", violations == 0,
            std::to_string(violations) + " violations");
  rep.check("Hamming balls of radius D attain equality", ball_failures == 0,
            std::to_string(ball_failures) + " balls without equality");
}

void exp_ball_fact(const Params& ps, std::uint64_t seed, RunReport& rep) {
  const int n_max = ps.integer("n_max");
  PrimeField F(static_cast<std::uint32_t>(ps.integer("p")));
  Rng rng(seed);
  std::uint64_t fails = 0, cases = 0;
  auto& tab = rep.table("ball-fact", {"n", "d", "center", "ideal_dimension"});
  for (int n = 1; n <= n_max; ++n)
    for (int d = 0; d <= n; ++d) {
      const std::uint64_t center = rng.below(std::uint64_t{1} << n);
      ClosureOracle oracle(n, d, F, hamming_ball(n, center, d));
      fails += oracle.ideal_dimension() != 0;
      ++cases;
      tab.rows.push_back({n, d, to_hex(center), oracle.ideal_dimension()});
    }
  rep.check("no nonzero degree-<=d polynomial vanishes on a radius-d ball", fails == 0,
            std::to_string(cases) + " cases, " + std::to_string(fails) + " failures");
}

void exp_claimA1(const Params& ps, std::uint64_t seed, RunReport& rep) {
  const auto p = static_cast<std::uint32_t>(ps.integer("p"));
  PrimeField F(p);
  const Rational target(p - 1, p);

  // exhaustive: every ideal element at every outside point
  const int n_exh = ps.integer("exhaustive_n");
  std::uint64_t cases = 0, bad = 0;
  auto& ex = rep.table("exhaustive", {"n", "k", "D", "ideal_dimension", "outside_points", "all_exact"});
  for (int n = 1; n <= n_exh; ++n)
    for (int k = 0; k <= n; ++k)
      for (int D = 0; D <= n; ++D) {
        auto E = slice_masks(n, k);
        ClosureOracle oracle(n, D, F, E);
        const auto dim = oracle.ideal_dimension();
        if (dim == 0 || std::pow(static_cast<double>(p), static_cast<double>(dim)) > (1 << 20)) continue;
        auto basis = oracle.basis_polys();
        std::uint64_t outside = 0;
        bool exact = true;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
          if (oracle.contains(a)) continue;
          ++outside;
          std::vector<Residue> vals;
          for (auto& b : basis) vals.push_back(b.eval(a));
          // odometer over all coefficient vectors, tracking the value at a
          std::vector<Residue> c(dim, 0);
          Residue v = 0;
          std::uint64_t total = 0, nonzero = 0;
          while (true) {
            ++total;
            nonzero += v != 0;
            std::size_t i = 0;
            while (i < dim) {
              v = F.add(v, vals[i]);
              if (++c[i] < p) break;
              c[i] = 0;  // wrapped: v has gained p * vals[i] = 0
              ++i;
            }
            if (i == dim) break;
          }
          Rational frac(BigInt(static_cast<unsigned long>(nonzero)), BigInt(static_cast<unsigned long>(total)));
          frac.canonicalize();
          exact = exact && frac == target;
          ++cases;
          bad += frac != target;
        }
        if (outside) ex.rows.push_back({n, k, D, dim, outside, exact});
      }
  rep.check("exhaustive: nonzero fraction at outside points is exactly 1 - 1/p", bad == 0 && cases > 0,
            std::to_string(cases) + " (point, ideal) cases, " + std::to_string(bad) + " mismatches");

  // sampled
  const int n = ps.integer("n"), k = ps.integer("k");
  int K = ps.integer("K");
  if (K < 0) K = k + static_cast<int>(p);
  const int samples = ps.integer("samples");
  const double tol = approx(ps.rational("tol"));
  auto dist = exact_min_degree(n, p, k, K);
  auto Ek = slice_masks(n, k);
  ClosureOracle oracle(n, dist.degree, F, Ek);
  std::uint64_t point = 0;
  for (auto b : slice_masks(n, K))
    if (!oracle.contains(b)) {
      point = b;
      break;
    }
  Rng rng(seed);
  int nonzero = 0;
  for (int i = 0; i < samples; ++i) nonzero += oracle.sample(rng).eval(point) != 0;
  const double freq = static_cast<double>(nonzero) / samples;
  rep.results = {{"n", n},         {"k", k},         {"K", K},         {"D", dist.degree}, {"point", to_hex(point)},
                 {"samples", samples}, {"frequency", freq}, {"target", rat(target)}};
  rep.check("sampled frequency within tol of 1 - 1/p", std::abs(freq - approx(target)) <= tol,
            std::to_string(freq) + " vs " + rat(target));
}

// ---- sweeps ----

void sweep(const Params& ps, RunReport& rep, bool composite) {
  const auto p = static_cast<std::uint32_t>(ps.integer("p"));
  auto rows = hegedus_sweep(p, ps.integer("n_lo"), ps.integer("n_hi"), composite);
  auto& tab = rep.table("sweep", {"n", "k", "K", "degree", "expected", "ok"});
  std::uint64_t bad = 0;
  for (auto& r : rows) {
    tab.rows.push_back({r.n, r.k, r.K, r.degree, r.expected, r.ok});
    bad += !r.ok;
  }
  rep.results = {{"instances", rows.size()}, {"violations", bad}};
  rep.check(composite ? "degree equals q' for every composite gap" : "degree equals q for every p-power gap",
            bad == 0 && !rows.empty(), std::to_string(rows.size()) + " instances, " + std::to_string(bad) + " violations");
}

void exp_hegedus(const Params& ps, std::uint64_t, RunReport& rep) { sweep(ps, rep, false); }
void exp_extension(const Params& ps, std::uint64_t, RunReport& rep) { sweep(ps, rep, true); }

// ---- string lemma, binomial lemmas ----

void exp_stringlemma(const Params& ps, std::uint64_t, RunReport& rep) {
  const int maxlen = ps.integer("maxlen");
  if (maxlen > 30) throw std::invalid_argument("stringlemma: maxlen must be at most 30");
  auto bits = [](std::uint64_t x, int len) {
    std::string s(len, '0');
    for (int i = 0; i < len; ++i) s[i] = x >> (len - 1 - i) & 1 ? '1' : '0';
    return s;
  };
  std::uint64_t pairs = 0, commuting = 0, bad = 0;
  for (int L = 2; L <= maxlen; ++L)
    for (int lu = 1; lu < L; ++lu) {
      const int lv = L - lu;
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << lu); ++u)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << lv); ++v) {
          ++pairs;
          if (((u << lv) | v) != ((v << lu) | u)) continue;
          ++commuting;
          const std::string su = bits(u, lu), sv = bits(v, lv);
          auto root = primitive_root(su + sv);
          const int lz = static_cast<int>(root.z.size());
          bool ok = root.k >= 2 && lu % lz == 0 && lv % lz == 0;
          for (int i = 0; ok && i < lu; ++i) ok = su[i] == root.z[i % lz];
          for (int i = 0; ok && i < lv; ++i) ok = sv[i] == root.z[i % lz];
          bad += !ok;
        }
    }
  rep.results = {{"pairs", pairs}, {"commuting", commuting}, {"violations", bad}};
  rep.check("uv = vu implies uv is a proper power with u, v powers of its root", bad == 0,
            std::to_string(commuting) + " commuting pairs of " + std::to_string(pairs));
}

void exp_lemma33(const Params& ps, std::uint64_t, RunReport& rep) {
  const int n_max = ps.integer("n_max");
  std::uint64_t cases = 0, bad = 0, printed_fail = 0;
  auto& tab = rep.table("failures", {"n", "r", "s", "ratio", "lower", "upper", "convention"});
  for (int n = 1; n <= n_max; ++n)
    for (int s = 0; 4 * s <= n; ++s)
      for (int r = 0; r <= s; ++r) {
        auto b = binom_ratio(n, r, s);
        ++cases;
        if (!b.holds) {
          ++bad;
          tab.rows.push_back({n, r, s, rat(b.ratio), real_str(b.lower), real_str(b.upper), "s-r"});
        }
        if (!b.printed_holds) ++printed_fail;
      }
  rep.results = {{"cases", cases}, {"violations", bad}, {"printed_convention_failures", printed_fail}};
  rep.check("binomial ratio bounds hold with exponent factor (s - r)", bad == 0,
            std::to_string(cases) + " cases, " + std::to_string(bad) + " violations");
}

void exp_claimC(const Params& ps, std::uint64_t, RunReport& rep) {
  const int n_max = ps.integer("n_max");
  std::uint64_t steps = 0, bad_steps = 0, products = 0, bad_products = 0;
  for (int n = 2; n <= n_max; n += 2)
    for (int m = 0; 2 * m <= n; ++m) {
      for (int j = 0; j + 1 <= m / 2; ++j) {
        auto st = hyper_step(n, m, j);
        ++steps;
        bad_steps += !(st.linear_ok && st.exp_ok);
      }
      for (int k = 0; k <= m / 2; ++k)
        for (int l = 0; l <= k; ++l) {
          auto h = hyper_ratio(n, m, k, l);
          ++products;
          bad_products += !h.holds;
        }
    }
  rep.results = {{"steps", steps}, {"step_violations", bad_steps}, {"products", products},
                 {"product_violations", bad_products}};
  rep.check("every step ratio <= 1 - 2k/m <= exp(-2k/m)", bad_steps == 0 && steps > 0,
            std::to_string(steps) + " steps, " + std::to_string(bad_steps) + " violations");
  rep.check("assembled ratio <= exp(-(k(k-1) - l(l-1))/m)", bad_products == 0,
            std::to_string(products) + " pairs, " + std::to_string(bad_products) + " violations");
}

// ---- constructions ----

void exp_lucas(const Params& ps, std::uint64_t, RunReport& rep) {
  const int n = ps.integer("n"), i = ps.integer("i"), q = ps.integer("q");
  const auto p = static_cast<std::uint32_t>(ps.integer("p"));
  auto sym = lucas_symmetric(n, i, q, p);
  rep.results = {{"degree", sym.degree()}, {"values", sym.values()}};
  if (n <= kMaxVars && binomial(n, sym.degree()) <= 100000) rep.results["poly"] = poly_to_json(sym.to_multilinear());
  rep.check("vanishes on slice i", sym.value(i) == 0);
  rep.check("nonzero on slice i + q", sym.value(i + q) != 0);
  if (n <= 16) {
    auto poly = sym.to_multilinear();
    bool ok = true;
    for (auto a : slice_masks(n, i)) ok = ok && poly.eval(a) == 0;
    for (auto a : slice_masks(n, i + q)) ok = ok && poly.eval(a) != 0;
    rep.check("pointwise check over both slices", ok);
  }
}

// One window: integer identity, mod-p pointwise check, degree bound.
bool check_window(const WeightWindow& w, std::uint32_t p, Json* out) {
  auto in = interpolate_window(w);
  bool ok = in.integer_degree() <= w.length() - 1;
  for (int x = w.a; x <= w.last(); ++x) ok = ok && in.value(x) == w.targets[x - w.a];
  if (w.n <= 14) {
    auto poly = in.reduce(PrimeField(p)).to_multilinear();
    for (int x = w.a; x <= w.last(); ++x)
      for (auto a : slice_masks(w.n, x)) ok = ok && poly.eval(a) == static_cast<Residue>(w.targets[x - w.a]) % p;
  }
  if (out) {
    Json c = Json::array();
    for (auto& v : in.ecoeffs) c.push_back(v.get_str());
    *out = {{"n", w.n}, {"a", w.a}, {"targets", w.targets}, {"ecoeffs", c}, {"integer_degree", in.integer_degree()}};
  }
  return ok;
}

void exp_window(const Params& ps, std::uint64_t seed, RunReport& rep) {
  const auto p = static_cast<std::uint32_t>(ps.integer("p"));
  const int trials = ps.integer("random_trials");
  if (trials == 0) {
    WeightWindow w{ps.integer("n"), ps.integer("a"), {}};
    for (char c : ps.str("targets")) w.targets.push_back(c == '1');
    Json j;
    bool ok = check_window(w, p, &j);
    rep.results = j;
    rep.check("integer interpolant of degree <= |I|-1 exact on the window", ok);
    return;
  }
  const int n_max = ps.integer("n_max"), L_max = ps.integer("L_max");
  Rng rng(seed);
  int bad = 0;
  auto& tab = rep.table("windows", {"n", "a", "targets", "integer_degree", "ok"});
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + static_cast<int>(rng.below(n_max));
    const int L = 1 + static_cast<int>(rng.below(std::min(L_max, n + 1)));
    WeightWindow w{n, static_cast<int>(rng.below(n - L + 2)), {}};
    std::string tg;
    for (int i = 0; i < L; ++i) {
      w.targets.push_back(static_cast<int>(rng.below(2)));
      tg += w.targets.back() ? '1' : '0';
    }
    const bool ok = check_window(w, p, nullptr);
    bad += !ok;
    tab.rows.push_back({n, w.a, tg, interpolate_window(w).integer_degree(), ok});
  }
  rep.check("random windows: integer coefficients, degree <= |I|-1, exact on window weights", bad == 0,
            std::to_string(trials) + " windows, " + std::to_string(bad) + " violations");
}

void exp_sample(const Params& ps, std::uint64_t seed, RunReport& rep) {
  const int n = ps.integer("n"), k = ps.integer("k"), q = ps.integer("q"), C = ps.integer("C");
  const auto p = static_cast<std::uint32_t>(ps.integer("p"));
  const Real eps = ps.real("eps");
  SamplingChoice ch = C > 0 ? [&] {
    auto j = sampling_poly(n, k, q, p, eps, C, seed);
    auto ek = junta_exact_slice_error(j, k, Target::kZero);
    auto mK = junta_exact_slice_error(j, k + q, Target::kNonzero);
    bool ok = to_real(ek) <= eps && to_real(mK) <= eps;
    return SamplingChoice{std::move(j), ek, mK, ok, {{C, ok}}};
  }()
                            : sampling_choose(n, k, q, p, eps, seed);
  const auto& j = ch.junta;
  Json tried = Json::array();
  for (auto& [c, ok] : ch.tried) tried.push_back({{"C", c}, {"passed", ok}});
  rep.results = {{"C", j.C},
                 {"m", j.m},
                 {"degree", j.degree()},
                 {"integer_degree", j.interpolant.integer_degree()},
                 {"window", {j.window_lo, j.window_hi}},
                 {"free_weights", j.free_weights},
                 {"psi_k", rat(ch.err_k)},
                 {"psi_k_approx", approx(ch.err_k)},
                 {"miss_K", rat(ch.miss_K)},
                 {"miss_K_approx", approx(ch.miss_K)},
                 {"eps", real_str(eps)},
                 {"tried", tried}};
  rep.deviations.push_back(kWithoutReplacement);
  rep.check("psi_k <= eps (exact junta error)", to_real(ch.err_k) <= eps, brief(ch.err_k));
  rep.check("psi_K >= 1 - eps (exact junta error)", to_real(ch.miss_K) <= eps, "miss " + brief(ch.miss_K));
  rep.check("composed degree < q", j.degree() < q,
            "degree " + std::to_string(j.degree()) + ", q " + std::to_string(q));
}

CoinInstance coin_params(const Params& ps) {
  CoinInstance inst{static_cast<std::uint32_t>(ps.integer("p")), ps.rational("delta"), ps.rational("eps"),
                    std::nullopt};
  if (ps.integer("C") > 0) inst.C = ps.integer("C");
  inst.validate();
  return inst;
}

Json coin_json(const CoinPolynomial& c) {
  Json tried = Json::array();
  for (auto& [C, ok] : c.tried) tried.push_back({{"C", C}, {"passed", ok}});
  return {{"instance", coin_instance_to_json(c.inst)},
          {"C", c.C},
          {"n", c.n},
          {"edges", {rat(c.edge0), rat(c.edge1), rat(c.edge2)}},
          {"window", {c.window_lo, c.window_hi}},
          {"window_length", c.window_length()},
          {"free_weights", c.free_weights},
          {"degree", c.degree()},
          {"err_half", rat(c.err_half)},
          {"err_half_approx", approx(c.err_half)},
          {"err_biased", rat(c.err_biased)},
          {"err_biased_approx", approx(c.err_biased)},
          {"tried", tried}};
}

void coin_checks(const CoinPolynomial& c, RunReport& rep) {
  rep.check("Pr_{1/2}[P != 1] <= eps (exact)", c.err_half <= c.inst.eps, brief(c.err_half));
  rep.check("Pr_{1/2-delta}[P = 1] <= eps (exact)", c.err_biased <= c.inst.eps, brief(c.err_biased));
  rep.check("degree <= window length", c.degree() <= c.window_length(),
            std::to_string(c.degree()) + " <= " + std::to_string(c.window_length()));
  const Rational span = 2 * c.inst.delta * c.n;
  rep.check("window length <= 2 delta n + 1", Rational(c.window_length()) <= span + 1,
            std::to_string(c.window_length()) + " vs 2 delta n = " + rat(span));
}

void exp_coin(const Params& ps, std::uint64_t, RunReport& rep) {
  auto c = coin_build(coin_params(ps));
  rep.results = coin_json(c);
  coin_checks(c, rep);
}

void exp_galvin(const Params& ps, std::uint64_t, RunReport& rep) {
  const int n = ps.integer("n"), C = ps.integer("C");
  const Real eps = ps.real("eps");
  GalvinChoice ch = C > 0 ? [&] {
    auto f = galvin_tight_family(n, eps, C);
    auto cov = galvin_coverage(f);
    bool ok = to_real(cov.value) >= 1 - eps;
    return GalvinChoice{std::move(f), C, cov, ok, {{C, ok}}};
  }()
                          : galvin_choose(n, eps);
  rep.results = {{"family", galvin_to_json(ch.family)},
                 {"C", ch.C},
                 {"coverage", rat(ch.coverage.value)},
                 {"coverage_approx", approx(ch.coverage.value)},
                 {"degenerate", ch.family.degenerate},
                 {"shifted", ch.family.shifted}};
  rep.check("coverage >= 1 - eps (exact)", to_real(ch.coverage.value) >= 1 - eps);
  rep.check("family size = 2t + 1", ch.family.items.size() == static_cast<std::size_t>(2 * *ch.family.t + 1));
}

// ---- symmetric functions ----

Json decomposition_json(const Spectrum& s, const StandardDecomposition& d) {
  return {{"spectrum", s.str()},       {"g", d.g.str()},         {"h", d.h.str()},
          {"per_g", d.per_g},          {"B_h", d.B_h},           {"window", {d.window_lo, d.window_hi}},
          {"window_fallback", d.window_fallback}, {"period", period(s)}, {"bounded_index", bounded_index(s)}};
}

void symfun_suite(const Params& ps, RunReport& rep) {
  const int n_max = ps.integer("n_max");
  std::uint64_t total = 0, per_bad = 0, xor_bad = 0, B_bad = 0, B_bad_plus1 = 0;
  auto& tab = rep.table("decomposition", {"n", "spectra", "per_g_violations", "B_h_violations",
                                          "B_h_violations_at_plus_one", "max_B_h"});
  for (int n = 3; n <= n_max; ++n) {
    std::uint64_t pv = 0, bv = 0, bv1 = 0;
    int maxB = 0;
    const int third_floor = n / 3, third_ceil = (n + 2) / 3;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      std::vector<std::uint8_t> bits(n + 1);
      for (int i = 0; i <= n; ++i) bits[i] = code >> i & 1;
      Spectrum s(bits);
      auto d = standard_decomposition(s);
      ++total;
      for (int i = 0; i <= n; ++i) xor_bad += (d.g[i] ^ d.h[i]) != s[i];
      pv += d.per_g > third_floor;
      bv += d.B_h > third_ceil;
      bv1 += d.B_h > third_ceil + 1;
      maxB = std::max(maxB, d.B_h);
    }
    per_bad += pv;
    B_bad += bv;
    B_bad_plus1 += bv1;
    tab.rows.push_back({n, std::uint64_t{1} << (n + 1), pv, bv, bv1, maxB});
  }
  rep.check("f = g xor h for every spectrum", xor_bad == 0, std::to_string(total) + " spectra");
  rep.check("per(g) <= floor(n/3)", per_bad == 0, std::to_string(per_bad) + " violations");
  rep.check("B(h) <= ceil(n/3)", B_bad == 0, std::to_string(B_bad) + " violations");
  rep.results["B_h_violations_at_ceil_plus_one"] = B_bad_plus1;

  // branch assignments
  const double eps = approx(ps.rational("eps"));
  auto& br = rep.table("branches", {"family", "n", "p", "branch", "per_g", "B_h"});
  bool mod3 = true, mod2 = true, ethr = true;
  for (int n : parse_int_list(ps.str("classify_ns"))) {
    auto c3 = classify_pdeg(mod_family(n, 3, 0), 2, eps);
    auto c2 = classify_pdeg(mod_family(n, 2, 0), 2, eps);
    auto ce = classify_pdeg(exact_threshold(n, n / 2), 2, eps);
    mod3 = mod3 && c3.branch == PdegBranch::kAperiodicOrBadPeriod;
    mod2 = mod2 && c2.branch == PdegBranch::kPurePPowerPeriod;
    ethr = ethr && ce.branch == PdegBranch::kMixed;
    br.rows.push_back({"MOD3", n, 2, static_cast<int>(c3.branch), c3.per_g, c3.B_h});
    br.rows.push_back({"MOD2", n, 2, static_cast<int>(c2.branch), c2.per_g, c2.B_h});
    br.rows.push_back({"EThr_floor(n/2)", n, 2, static_cast<int>(ce.branch), ce.per_g, ce.B_h});
  }
  rep.check("MOD^3 at p = 2 is branch 1", mod3);
  rep.check("MOD^2 at p = 2 is branch 2", mod2);
  rep.check("EThr^{floor(n/2)} at p = 2 is branch 3", ethr);

  // periodic exact polynomials
  Rng rng(12345);
  std::uint64_t cases = 0, bad = 0;
  for (auto [p, qs] : std::vector<std::pair<std::uint32_t, std::vector<int>>>{{2, {2, 4, 8}}, {3, {3, 9}}}) {
    PrimeField F(p);
    for (int q : qs)
      for (int n = q; n <= n_max; ++n) {
        const std::uint64_t patterns = std::min<std::uint64_t>(16, static_cast<std::uint64_t>(std::pow(p, q)));
        for (std::uint64_t t = 0; t < patterns; ++t) {
          std::vector<Residue> vals(q);
          for (auto& v : vals) v = static_cast<Residue>(rng.below(p));
          auto pp = periodic_exact_poly(n, q, vals, F);
          bool ok = pp.poly.degree() < q;
          for (int w = 0; w <= n; ++w) {
            const std::uint64_t pt = w == 64 ? ~0ull : (std::uint64_t{1} << w) - 1;
            ok = ok && pp.poly.eval(pt) == vals[w % q];
            const std::uint64_t hi = pt << (n - w);  // the same weight at the top end
            ok = ok && pp.poly.eval(hi) == vals[w % q];
          }
          ++cases;
          bad += !ok;
        }
      }
  }
  rep.check("periodic_exact_poly matches its value table on all weights", bad == 0,
            std::to_string(cases) + " polynomials, " + std::to_string(bad) + " mismatches");
}

void exp_symfun(const Params& ps, std::uint64_t, RunReport& rep) {
  if (ps.flag("suite")) {
    symfun_suite(ps, rep);
    return;
  }
  const std::string text = ps.str("spectrum");
  Spectrum s = text.empty() ? make_family(ps.str("family"), ps.integer("n")) : Spectrum::parse(text);
  auto d = standard_decomposition(s);
  rep.results = decomposition_json(s, d);
  auto c = classify_pdeg(s, static_cast<std::uint32_t>(ps.integer("p")), approx(ps.rational("eps")));
  rep.results["branch"] = static_cast<int>(c.branch);
  rep.results["branch_name"] = to_string(c.branch);
  rep.results["bound_shape"] = c.value;
  bool xor_ok = true;
  for (int i = 0; i <= s.n(); ++i) xor_ok = xor_ok && (d.g[i] ^ d.h[i]) == s[i];
  rep.check("f = g xor h", xor_ok);
  rep.check("per(g) <= floor(n/3)", d.per_g <= s.n() / 3);
}

// ---- robust frontier ----

double junta_psi(const std::vector<std::uint64_t>& nonzero_by_weight, int s, int n, int m) {
  BigInt hit = 0;
  for (int w = 0; w <= s && w <= m; ++w)
    if (nonzero_by_weight[w]) hit += BigInt(static_cast<unsigned long>(nonzero_by_weight[w])) * binomial(n - s, m - w);
  return approx(Rational(hit, binomial(n, m)));
}

void exp_robust(const Params& ps, std::uint64_t seed, RunReport& rep) {
  const std::string parts = ps.str("parts");
  const auto p = static_cast<std::uint32_t>(ps.integer("p"));
  RobustOptions opts;
  opts.seed = seed;
  opts.restarts = ps.integer("restarts");

  if (parts.find('a') != std::string::npos) {
    std::uint64_t cases = 0, bad = 0;
    for (int n = ps.integer("a_n_lo"); n <= ps.integer("a_n_hi"); ++n)
      for (int q = 1; 2 * q <= n; q *= static_cast<int>(p))
        for (int k = q; k <= n - q; ++k) {
          auto inst = SliceDistinguishInstance::make(n, p, k, k + q);
          auto r = robust_search(inst, 0, opts);
          auto e = exact_min_degree(n, p, k, k + q);
          ++cases;
          bad += r.degree != e.degree;
        }
    rep.check("(a) robust_search at budget 0 equals exact_min_degree", bad == 0 && cases > 0,
              std::to_string(cases) + " instances, " + std::to_string(bad) + " mismatches");
  }

  if (parts.find('b') != std::string::npos) {
    const int max_r = ps.integer("b_max_removals");
    std::uint64_t cases = 0, non_monotone = 0, below = 0;
    auto& tab = rep.table("frontier", {"n", "k", "K", "per_budget", "random", "greedy"});
    for (int n = ps.integer("b_n_lo"); n <= ps.integer("b_n_hi"); ++n)
      for (int q = 1; 2 * q <= n; q *= static_cast<int>(p))
        for (int k = q; k <= n - q; ++k) {
          auto inst = SliceDistinguishInstance::make(n, p, k, k + q);
          auto ex = exhaustive_robust(inst, max_r);
          for (std::size_t j = 1; j < ex.per_budget.size(); ++j) non_monotone += ex.per_budget[j] > ex.per_budget[j - 1];
          Json rnd = Json::array(), gr = Json::array();
          for (int j = 0; j < static_cast<int>(ex.per_budget.size()); ++j) {
            RobustOptions o = opts;
            o.strategy = RobustStrategy::kRandom;
            auto r1 = robust_search_removals(inst, j, o);
            o.strategy = RobustStrategy::kGreedy;
            auto r2 = robust_search_removals(inst, j, o);
            below += r1.degree < ex.per_budget[j];
            below += r2.degree < ex.per_budget[j];
            rnd.push_back(r1.degree);
            gr.push_back(r2.degree);
          }
          ++cases;
          tab.rows.push_back({n, k, k + q, ex.per_budget, rnd, gr});
        }
    rep.check("(b) exhaustive frontier is nonincreasing in the budget", non_monotone == 0 && cases > 0,
              std::to_string(cases) + " instances");
    rep.check("(b) heuristic search never reports below the exhaustive frontier", below == 0,
              std::to_string(below) + " violations");
  }

  if (parts.find('c') != std::string::npos) {
    const int n = ps.integer("c_n"), t = ps.integer("c_t"), count = ps.integer("c_candidates");
    const int mid = n / 2;
    Rng rng(Rng::derive(seed, 77));
    std::uint64_t inconsistent = 0, hypotheses = 0, sampled_skips = 0;
    std::map<std::string, std::uint64_t> kinds;
    bool window_exists = false;
    PrimeField F(p);
    for (int c = 0; c < count; ++c) {
      int degree = 0;
      double psi_low = 0, psi_mid = 0;
      const int kind = c % 3;
      if (kind == 0) {
        // random junta of degree <= 3 on s coordinates
        const int s = 2 + static_cast<int>(rng.below(11));
        const int dmax = static_cast<int>(rng.below(4));
        std::vector<Term> terms;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask)
          if (std::popcount(mask) <= dmax && rng.below(3) == 0)
            terms.push_back({mask, static_cast<Residue>(rng.below(p))});
        auto Q = MultilinearPoly::from_terms(s, F, terms);
        std::vector<std::uint64_t> nz(s + 1, 0);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << s); ++x) nz[std::popcount(x)] += Q.eval(x) != 0;
        degree = Q.degree();
        psi_low = junta_psi(nz, s, n, mid - t);
        psi_mid = junta_psi(nz, s, n, mid);
        ++kinds["junta"];
      } else if (kind == 1) {
        int q = 1;
        for (int e = static_cast<int>(rng.below(5)); e > 0; --e) q *= static_cast<int>(p);
        const int i = static_cast<int>(rng.below(n - q + 1));
        auto L = lucas_symmetric(n, i, q, p);
        degree = L.degree();
        psi_low = L.value(mid - t) != 0;
        psi_mid = L.value(mid) != 0;
        ++kinds["lucas"];
      } else {
        const int k = mid - t;
        // m = C (alpha / delta^2) ln(1/eps) must fit in n, so keep C ln(1/eps) small
        const Real eps = exp(-Real(1 + rng.below(13)) / 10);
        const int C = 2;
        try {
          auto j = sampling_poly(n, k, t, p, eps, C, rng.next());
          degree = j.degree();
          psi_low = approx(junta_exact_slice_error(j, mid - t, Target::kZero));
          psi_mid = approx(junta_exact_slice_error(j, mid, Target::kZero));
          ++kinds["sampling"];
        } catch (const std::invalid_argument&) {
          ++sampled_skips;
          continue;
        }
      }
      auto r = dij_consistency(n, t, p, degree, Rational(psi_low), Rational(psi_mid));
      window_exists = r.window_exists;
      inconsistent += !r.consistent;
      hypotheses += r.hypotheses_hold;
    }
    rep.results["c"] = {{"n", n},
                        {"t", t},
                        {"ell", rat(Rational(t * t, n))},
                        {"candidates", count},
                        {"by_kind", kinds},
                        {"sampling_skipped_m_exceeds_n", sampled_skips},
                        {"hypotheses_satisfied", hypotheses},
                        {"parameter_window_exists", window_exists},
                        {"vacuous", !window_exists}};
    if (!window_exists)
      rep.results["c"]["note"] = "ell = t^2/n is below 100, so no epsilon satisfies the hypotheses";
    rep.check("(c) no candidate of degree < t/25 satisfies both error hypotheses", inconsistent == 0,
              std::to_string(inconsistent) + " inconsistent of " + std::to_string(count));
  }
}

// ---- verification suites ----

void exp_coin_verify(const Params& ps, std::uint64_t seed, RunReport& rep) {
  auto inst = coin_params(ps);
  auto c = coin_build(inst);
  rep.results = coin_json(c);
  coin_checks(c, rep);

  // Over a grid of n at fixed delta. The exact errors need not be monotone: weights
  // outside the constrained windows carry whatever the mod-p interpolant gives. The mass
  // outside the forced windows bounds each error and is the monotone quantity.
  const int step = ps.integer("grid_step"), points = ps.integer("grid_points");
  std::optional<Rational> prev_half, prev_biased, prev_env_half, prev_env_biased;
  bool mono = true, env_mono = true, env_bounds = true;
  Json first_rise;
  auto& g = rep.table("grid", {"n", "err_half", "err_biased", "envelope_half", "envelope_biased"});
  for (int i = 1; i <= points; ++i) {
    const int n = i * step;
    auto ci = coin_build_at(inst, n);
    std::vector<Residue> one_window(n + 1, 0), zero_window(n + 1, 1);
    for (int w = 0; w <= n; ++w) {
      const Rational rw(w);
      if (rw > ci.edge1 && rw < ci.edge2) one_window[w] = 1;
      if (rw > ci.edge0 && rw < ci.edge1) zero_window[w] = 0;
    }
    const Rational env_half = coin_error_exact(one_window, Rational(1, 2), Side::kReject);
    const Rational env_biased = coin_error_exact(zero_window, Rational(1, 2) - inst.delta, Side::kAccept);
    env_bounds = env_bounds && ci.err_half <= env_half && ci.err_biased <= env_biased;
    g.rows.push_back({n, approx(ci.err_half), approx(ci.err_biased), approx(env_half), approx(env_biased)});
    if (prev_half) {
      const bool ok = ci.err_half <= *prev_half && ci.err_biased <= *prev_biased;
      if (!ok && mono) first_rise = {{"n", n}, {"previous_n", n - step}};
      mono = mono && ok;
      env_mono = env_mono && env_half <= *prev_env_half && env_biased <= *prev_env_biased;
    }
    prev_half = ci.err_half;
    prev_biased = ci.err_biased;
    prev_env_half = env_half;
    prev_env_biased = env_biased;
  }
  rep.results["grid_exact_errors_monotone"] = mono;
  if (!mono) rep.results["grid_first_rise"] = first_rise;
  rep.check("exact errors are bounded by the mass outside the forced windows", env_bounds);
  rep.check("the forced-window envelope is nonincreasing in n over the grid", env_mono);

  // collapse: at a point of weight n'/2 the collapsed value is P under mu_{1/2}
  const int target = ps.integer("collapse_n"), samples = ps.integer("samples");
  Rng rng(seed);
  auto collapsed_error = [&](int weight, bool reject) {
    int hits = 0;
    for (int s = 0; s < samples; ++s) {
      int w = 0;
      for (int i = 0; i < c.n; ++i) w += rng.below(target) < static_cast<std::uint64_t>(weight);
      const bool accept = c.poly.value(w) == 1;
      hits += reject ? !accept : accept;
    }
    return static_cast<double>(hits) / samples;
  };
  auto within = [&](double emp, const Rational& exact) {
    const double pr = approx(exact);
    return std::abs(emp - pr) <= 5 * std::sqrt(pr * (1 - pr) / samples) + 1.0 / samples;
  };
  const double e_half = collapsed_error(target / 2, true);
  rep.check("collapsed polynomial at weight n'/2 matches the mu_{1/2} error", within(e_half, c.err_half),
            std::to_string(e_half) + " vs " + std::to_string(approx(c.err_half)));
  const Rational low_w = Rational(target) * (Rational(1, 2) - inst.delta);
  if (low_w.get_den() == 1) {
    const double e_low = collapsed_error(static_cast<int>(low_w.get_num().get_si()), false);
    rep.check("collapsed polynomial at weight n'(1/2 - delta) matches the mu_{1/2-delta} error",
              within(e_low, c.err_biased), std::to_string(e_low) + " vs " + std::to_string(approx(c.err_biased)));
  }

  // repetition lift: image of a fixed weight-w point is uniform on its slice
  RepetitionLift lift(ps.integer("lift_n_prime"), ps.integer("lift_s"), ps.integer("lift_r1"), ps.integer("lift_r2"));
  const int N = lift.n();
  const std::uint64_t x = 1;  // weight 1
  const int wimg = lift.image_weight(1);
  std::map<std::uint64_t, std::uint64_t> counts;
  const int lift_samples = ps.integer("lift_samples");
  bool weights_ok = true;
  for (int s = 0; s < lift_samples; ++s) {
    auto z = lift.image(x, rng.permutation(static_cast<std::uint32_t>(N)));
    std::uint64_t key = 0;
    int w = 0;
    for (int j = 0; j < N; ++j) {
      key |= static_cast<std::uint64_t>(z[j]) << j;
      w += z[j];
    }
    weights_ok = weights_ok && w == wimg;
    ++counts[key];
  }
  const double cells = binomial(N, wimg).get_d();
  const double expect = lift_samples / cells;
  double chi2 = 0;
  for (auto& [k, v] : counts) chi2 += (v - expect) * (v - expect) / expect;
  chi2 += (cells - static_cast<double>(counts.size())) * expect;  // empty cells
  boost::math::chi_squared dist(cells - 1);
  const double pvalue = boost::math::cdf(boost::math::complement(dist, chi2));
  rep.results["lift"] = {{"n", N}, {"image_weight", wimg}, {"cells", cells}, {"chi2", chi2}, {"p_value", pvalue}};
  rep.check("lifted weight is w s + r1", weights_ok);
  rep.check("lifted image is uniform on its slice (chi-squared p > 0.001)", pvalue > 0.001,
            "p = " + std::to_string(pvalue));
}

void exp_galvin_verify(const Params& ps, std::uint64_t seed, RunReport& rep) {
  const int n = ps.integer("n");
  const Real eps = ps.real("eps");
  auto ch = galvin_choose(n, eps);
  const auto& f = ch.family;
  rep.results = {{"C", ch.C},
                 {"t", *f.t},
                 {"size", f.items.size()},
                 {"coverage", rat(ch.coverage.value)},
                 {"degenerate", f.degenerate}};
  rep.check("coverage >= 1 - eps (exact hypergeometric)", to_real(ch.coverage.value) >= 1 - eps,
            std::to_string(approx(ch.coverage.value)));
  rep.check("family size = 2t + 1", f.items.size() == static_cast<std::size_t>(2 * *f.t + 1));
  bool same = true;
  for (auto& it : f.items) same = same && it.u == f.items[0].u && std::popcount(it.u) == n / 2;
  rep.check("all normal vectors equal 1^{n/2} 0^{n/2}", same);

  // five-factor example
  const int pn = ps.integer("poly_n");
  const auto pp = static_cast<std::uint32_t>(ps.integer("poly_p"));
  GalvinFamily five{pn, std::nullopt, {}};
  const std::uint64_t half = (std::uint64_t{1} << (pn / 2)) - 1;
  for (int b = 1; b <= 5; ++b) five.items.push_back({half, b});
  auto P = galvin_poly(five, pp, false);
  rep.results["five_factor_degree"] = P.degree();
  rep.check("degree equals the number of retained factors (5)", P.degree() == 5);

  // zero iff some hyperplane holds mod p, with random normals
  Rng rng(seed);
  GalvinFamily mixed{pn, std::nullopt, {}};
  for (int i = 0; i < 3; ++i) {
    std::uint64_t u = 0;
    for (auto j : rng.sample_distinct(pn, pn / 2)) u |= std::uint64_t{1} << j;
    mixed.items.push_back({u, static_cast<int>(rng.below(pn / 2 + 1))});
  }
  bool iff = true;
  for (auto* fam : {&five, &mixed}) {
    auto Q = galvin_poly(*fam, pp, false);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << pn); ++v) {
      bool on = false;
      for (auto& it : fam->items) on = on || (std::popcount(it.u & v) - it.b) % static_cast<int>(pp) == 0;
      iff = iff && (Q.eval(v) == 0) == on;
    }
  }
  rep.check("P(v) = 0 iff v lies on a retained hyperplane mod p", iff);
}

}  // namespace

std::vector<ExperimentInfo> builtin_experiments() {
  std::vector<ExperimentInfo> e;
  e.push_back({"mindeg", "exact minimum degree separating slice k from slice K",
               {P("n", "int", 8, "arity"), P("p", "int", 2, "prime"), P("k", "int", 2, "vanishing slice"),
                P("K", "int", 4, "target slice")},
               false, exp_mindeg});
  e.push_back({"closure", "degree-D closure of a point set",
               {P("n", "int", 6, "arity"), P("p", "int", 2, "prime"), P("D", "int", 2, "degree"),
                P("E", "string", "slice:2", "slice:w,..., random:size, ball:r, or hex masks"),
                P("candidates", "string", "cube", "cube or slices:w,...")},
               true, exp_closure});
  e.push_back({"niewang", "closure size bound on random sets and equality on Hamming balls",
               {P("n", "int", 0, "single n (overrides the range)"), P("n_lo", "int", 1, ""), P("n_hi", "int", 10, ""),
                P("D_max", "int", 4, ""), P("trials", "int", 200, "random sets per (n, D)"), P("p", "int", 2, "prime")},
               true, exp_niewang});
  e.push_back({"hegedus-sweep", "minimum degree equals q for every p-power gap",
               {P("p", "int", 2, "prime"), P("n_lo", "int", 6, ""), P("n_hi", "int", 12, "")}, false, exp_hegedus});
  e.push_back({"extension-sweep", "minimum degree equals q' for composite gaps q's",
               {P("p", "int", 2, "prime"), P("n_lo", "int", 6, ""), P("n_hi", "int", 12, "")}, false, exp_extension});
  e.push_back({"claimA1", "random ideal elements are nonzero at outside points with probability 1 - 1/p",
               {P("p", "int", 2, "prime"), P("exhaustive_n", "int", 4, "exhaustive cases up to this n"),
                P("n", "int", 10, "sampled arity"), P("k", "int", 3, "vanishing slice"),
                P("K", "int", -1, "target slice (-1: k + p)"), P("samples", "int", 5000, ""),
                P("tol", "rational", "1/50", "absolute tolerance")},
               true, exp_claimA1});
  e.push_back({"ball-fact", "no nonzero degree-d polynomial vanishes on a radius-d Hamming ball",
               {P("n_max", "int", 8, ""), P("p", "int", 2, "prime")}, true, exp_ball_fact});
  e.push_back({"stringlemma", "commuting words are powers of a common root",
               {P("maxlen", "int", 18, "maximum |uv|")}, false, exp_stringlemma});
  e.push_back({"lemma33", "central binomial ratio bounds", {P("n_max", "int", 60, "")}, false, exp_lemma33});
  e.push_back({"claimC", "hypergeometric telescoping step inequality", {P("n_max", "int", 40, "even n up to")},
               false, exp_claimC});
  e.push_back({"construct-lucas", "Lucas polynomial e_{p^l} - a_l",
               {P("n", "int", 6, ""), P("i", "int", 1, ""), P("q", "int", 3, ""), P("p", "int", 3, "prime")}, false,
               exp_lucas});
  e.push_back({"construct-window", "integer weight-window interpolation",
               {P("n", "int", 6, ""), P("a", "int", 0, "window start"), P("targets", "string", "010", "0/1 string"),
                P("p", "int", 2, "prime for the pointwise check"),
                P("random_trials", "int", 0, "random windows instead of the explicit one"),
                P("n_max", "int", 14, ""), P("L_max", "int", 8, "")},
               true, exp_window});
  e.push_back({"construct-sample", "sampling junta for the tightness regime",
               {P("n", "int", 4096, ""), P("k", "int", 2048, ""), P("q", "int", 256, ""), P("p", "int", 2, "prime"),
                P("eps", "real", "exp:-4", "rational or exp:x"), P("C", "int", 0, "0 walks the default ladder")},
               true, exp_sample});
  e.push_back({"construct-coin", "coin-problem window polynomial",
               {P("p", "int", 2, "prime"), P("delta", "rational", "1/8", ""), P("eps", "rational", "1/100", ""),
                P("C", "int", 0, "0 walks the default ladder")},
               false, exp_coin});
  e.push_back({"construct-galvin", "tight Galvin family and its coverage",
               {P("n", "int", 64, ""), P("eps", "real", "1/20", ""), P("C", "int", 0, "0 walks the default ladder")},
               false, exp_galvin});
  e.push_back({"symfun-analyze", "spectrum period, bounded index, decomposition and branch",
               {P("spectrum", "string", "", "0/1 string; empty uses family"), P("family", "string", "maj", ""),
                P("n", "int", 12, ""), P("p", "int", 2, "prime"), P("eps", "rational", "1/4", ""),
                P("suite", "bool", false, "run the exhaustive decomposition suite"), P("n_max", "int", 14, ""),
                P("classify_ns", "string", "12,13,14", "")},
               false, exp_symfun});
  e.push_back({"robust-frontier", "robust distinguisher frontier properties",
               {P("parts", "string", "abc", ""), P("p", "int", 2, "prime"), P("restarts", "int", 4, ""),
                P("a_n_lo", "int", 4, ""), P("a_n_hi", "int", 10, ""), P("b_n_lo", "int", 4, ""),
                P("b_n_hi", "int", 8, ""), P("b_max_removals", "int", 2, ""), P("c_n", "int", 64, ""),
                P("c_t", "int", 8, ""), P("c_candidates", "int", 10000, "")},
               true, exp_robust});
  e.push_back({"coin-verify", "coin polynomial exact errors, monotonicity, collapse and lift statistics",
               {P("p", "int", 2, "prime"), P("delta", "rational", "1/8", ""), P("eps", "rational", "1/100", ""),
                P("C", "int", 0, ""), P("grid_step", "int", 64, ""), P("grid_points", "int", 12, ""),
                P("collapse_n", "int", 64, ""), P("samples", "int", 20000, ""), P("lift_n_prime", "int", 4, ""),
                P("lift_s", "int", 2, ""), P("lift_r1", "int", 1, ""), P("lift_r2", "int", 1, ""),
                P("lift_samples", "int", 100000, "")},
               true, exp_coin_verify});
  e.push_back({"galvin-verify", "Galvin coverage, family shape and product polynomial",
               {P("n", "int", 64, ""), P("eps", "real", "1/20", ""), P("poly_n", "int", 12, ""),
                P("poly_p", "int", 7, "prime")},
               true, exp_galvin_verify});
  return e;
}

}  // namespace slicepoly
