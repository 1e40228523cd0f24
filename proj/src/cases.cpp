#include "specineq/cases.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "specineq/specfun.hpp"

namespace specineq {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

double param(const CaseParams& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) {
    throw DomainError("missing case parameter '" + name + "'");
  }
  return it->second;
}

bool positive_integer(double x) {
  return x >= 1.0 && x == std::floor(x) && std::isfinite(x);
}

bool odd_positive_integer(double x) {
  return positive_integer(x) && static_cast<long long>(x) % 2 == 1;
}

// Interval with an absolute-error pad, for scalar prefactors assembled from
// rounded constants (euler_gamma, ln k, ...).
Ival scalar_iv(double v, double magnitude_hint) {
  const double e = 8.0 * eps * (std::abs(v) + magnitude_hint + 1.0);
  return Ival{v - e, v + e};
}

template <class F>
Ival eval_iv(const char* what, F&& f) {
  try {
    return Ival::from(f());
  } catch (const EvaluationError& e) {
    throw EvaluationError(std::string(what) + ": " + e.what(), e.index());
  }
}

Ival iv_psi(double x, double tol, const char* what = "psi") {
  return eval_iv(what, [&] { return digamma(x, tol); });
}

Ival iv_psi_m(int m, double x, double tol, const char* what = "polygamma") {
  return eval_iv(what, [&] { return polygamma(m, x, tol); });
}

Ival iv_psi_k(double k, double x, double tol, const char* what = "k_digamma") {
  return eval_iv(what, [&] { return k_digamma(k, x, tol); });
}

Ival iv_lgamma(double x, double tol, const char* what = "log_gamma") {
  return eval_iv(what, [&] { return log_gamma(x, tol); });
}

Ival iv_lgamma_k(double k, double x, double tol,
                 const char* what = "log_k_gamma") {
  return eval_iv(what, [&] { return log_k_gamma(k, x, tol); });
}

Ival iv_lgamma_p(long p, double x, double tol,
                 const char* what = "log_p_gamma") {
  return eval_iv(what, [&] { return log_p_gamma(p, x, tol); });
}

Ival iv_lgamma_q(double q, double x, double tol,
                 const char* what = "log_q_gamma") {
  return eval_iv(what, [&] { return log_q_gamma(q, x, tol); });
}

Constituent make(Ival lhs, Ival rhs, bool identical, std::string label) {
  Constituent c;
  c.lhs = identical ? Ival::exact(0.0) : lhs;
  c.rhs = identical ? Ival::exact(0.0) : rhs;
  c.identical = identical;
  c.label = std::move(label);
  return c;
}

using MaybeConstituents = std::optional<std::vector<Constituent>>;

// ---- section 2 cases -------------------------------------------------------

MaybeConstituents eval_L2_1(const CaseParams& p, double tol) {
  const double s = param(p, "s"), t = param(p, "t");
  if (!(s > 0.0) || !(t > 0.0) || !(s <= t)) return std::nullopt;
  if (s == t) return {{make({}, {}, true, "psi(s) <= psi(t)")}};
  return {{make(iv_psi(s, tol, "psi(s)"), iv_psi(t, tol, "psi(t)"), false,
                "psi(s) <= psi(t)")}};
}

MaybeConstituents eval_L2_2(const CaseParams& p, double tol) {
  const double s = param(p, "s"), t = param(p, "t");
  if (!(s > 0.0) || !(t > 0.0) || !(s <= t)) return std::nullopt;
  if (s == t) return {{make({}, {}, true, "psi'(t) <= psi'(s)")}};
  return {{make(iv_psi_m(1, t, tol, "psi'(t)"), iv_psi_m(1, s, tol, "psi'(s)"),
                false, "psi'(t) <= psi'(s)")}};
}

// log of psi(a+b*tau)^alpha / psi(c+d*tau)^beta; nullopt when a base is not
// certainly positive (the theorem's positivity hypothesis, interval rule).
std::optional<Ival> log_psi_power_ratio(double a, double b, double c, double d,
                                        double alpha, double beta, double tau,
                                        double tol) {
  const Ival pa = iv_psi(a + b * tau, tol, "psi(a+b*t)");
  const Ival pc = iv_psi(c + d * tau, tol, "psi(c+d*t)");
  if (!pa.certainly_positive() || !pc.certainly_positive()) return std::nullopt;
  return scale(ival_log(pa), alpha) - scale(ival_log(pc), beta);
}

bool t2_3_scalar_hypotheses(double a, double b, double c, double d,
                            double alpha, double beta) {
  return a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0 && alpha > 0.0 &&
         beta > 0.0 && a <= c && b <= d && beta * d <= alpha * b;
}

MaybeConstituents eval_T2_3(const CaseParams& p, double tol) {
  const double a = param(p, "a"), b = param(p, "b"), c = param(p, "c"),
               d = param(p, "d"), alpha = param(p, "alpha"),
               beta = param(p, "beta"), t = param(p, "t");
  if (!t2_3_scalar_hypotheses(a, b, c, d, alpha, beta)) return std::nullopt;
  if (!(t >= 0.0 && t <= 1.0)) return std::nullopt;
  if (!(a + b * t <= c + d * t)) return std::nullopt;
  const auto u0 = log_psi_power_ratio(a, b, c, d, alpha, beta, 0.0, tol);
  const auto ut = log_psi_power_ratio(a, b, c, d, alpha, beta, t, tol);
  const auto u1 = log_psi_power_ratio(a, b, c, d, alpha, beta, 1.0, tol);
  if (!u0 || !ut || !u1) return std::nullopt;
  // a == c, b == d, alpha == beta makes U identically 1.
  const bool constant_ratio = (a == c && b == d && alpha == beta);
  return {{make(*u0, *ut, constant_ratio || t == 0.0, "U(0) <= U(t)"),
           make(*ut, *u1, constant_ratio || t == 1.0, "U(t) <= U(1)")}};
}

MaybeConstituents eval_R2_4(const CaseParams& p, double tol) {
  const double t = param(p, "t");
  if (!(t >= 0.0 && t <= 1.0)) return std::nullopt;
  const Ival p1 = iv_psi(1.0, tol, "psi(1)");
  const Ival pt = iv_psi(1.0 + t, tol, "psi(1+t)");
  const Ival p2 = iv_psi(2.0, tol, "psi(2)");
  return {{make(p1, pt, t == 0.0, "psi(1) <= psi(1+t)"),
           make(pt, p2, t == 1.0, "psi(1+t) <= psi(2)")}};
}

MaybeConstituents eval_R2_5(const CaseParams& p, double tol) {
  const double a = param(p, "a"), b = param(p, "b"), c = param(p, "c"),
               d = param(p, "d"), alpha = param(p, "alpha"),
               beta = param(p, "beta"), t = param(p, "t");
  if (!t2_3_scalar_hypotheses(a, b, c, d, alpha, beta)) return std::nullopt;
  if (!(t >= 1.0)) return std::nullopt;
  const auto u1 = log_psi_power_ratio(a, b, c, d, alpha, beta, 1.0, tol);
  const auto ut = log_psi_power_ratio(a, b, c, d, alpha, beta, t, tol);
  if (!u1 || !ut) return std::nullopt;
  const bool constant_ratio = (a == c && b == d && alpha == beta);
  return {{make(*u1, *ut, constant_ratio || t == 1.0, "U(1) <= U(t)")}};
}

MaybeConstituents eval_L2_7(const CaseParams& p, double tol) {
  const double m_raw = param(p, "m"), t = param(p, "t");
  if (!odd_positive_integer(m_raw) || !(t > 0.0)) return std::nullopt;
  const int m = static_cast<int>(m_raw);
  const Ival pm = iv_psi_m(m, t, tol, "psi^(m)(t)");
  const Ival pm1 = iv_psi_m(m + 1, t, tol, "psi^(m+1)(t)");
  const Ival pm2 = iv_psi_m(m + 2, t, tol, "psi^(m+2)(t)");
  const Ival turan = pm * pm2 - pm1 * pm1;
  return {{make(Ival::exact(0.0), turan, false,
                "psi^(m) psi^(m+2) - (psi^(m+1))^2 >= 0")}};
}

MaybeConstituents eval_L2_8(const CaseParams& p, double tol) {
  const double m_raw = param(p, "m"), s = param(p, "s"), t = param(p, "t");
  if (!odd_positive_integer(m_raw)) return std::nullopt;
  if (!(s > 0.0) || !(t > 0.0) || !(s <= t)) return std::nullopt;
  const int m = static_cast<int>(m_raw);
  if (s == t) return {{make({}, {}, true, "ratio(s) <= ratio(t)")}};
  // Ratio ordering cross-multiplied; valid since psi^(m) > 0 for odd m.
  const Ival num_s = iv_psi_m(m + 1, s, tol, "psi^(m+1)(s)");
  const Ival num_t = iv_psi_m(m + 1, t, tol, "psi^(m+1)(t)");
  const Ival den_s = iv_psi_m(m, s, tol, "psi^(m)(s)");
  const Ival den_t = iv_psi_m(m, t, tol, "psi^(m)(t)");
  return {{make(num_s * den_t, num_t * den_s, false,
                "psi^(m+1)(s) psi^(m)(t) <= psi^(m+1)(t) psi^(m)(s)")}};
}

// Cross-multiplied V(x) >= V(y) for x <= y, where
// V(tau) = psi^(m)(alpha+tau) / psi^(m)(beta+tau) with positive denominators.
Constituent polygamma_ratio_pair(int m, double alpha, double beta, double x,
                                 double y, double tol, bool identical) {
  if (identical) return make({}, {}, true, "V-pair");
  const Ival ax = iv_psi_m(m, alpha + x, tol, "psi^(m)(alpha+t1)");
  const Ival ay = iv_psi_m(m, alpha + y, tol, "psi^(m)(alpha+t2)");
  const Ival bx = iv_psi_m(m, beta + x, tol, "psi^(m)(beta+t1)");
  const Ival by = iv_psi_m(m, beta + y, tol, "psi^(m)(beta+t2)");
  return make(ay * bx, ax * by, false, "V-pair");
}

MaybeConstituents eval_T2_9(const CaseParams& p, double tol) {
  const double m_raw = param(p, "m"), alpha = param(p, "alpha"),
               beta = param(p, "beta"), t = param(p, "t");
  if (!odd_positive_integer(m_raw)) return std::nullopt;
  if (!(alpha > 0.0) || !(alpha <= beta)) return std::nullopt;
  if (!(t >= 0.0 && t <= 1.0)) return std::nullopt;
  const int m = static_cast<int>(m_raw);
  const bool equal_args = (alpha == beta);
  std::vector<Constituent> cs;
  cs.push_back(polygamma_ratio_pair(m, alpha, beta, 0.0, t, tol,
                                    equal_args || t == 0.0));
  cs.back().label = "V(0) >= V(t)";
  cs.push_back(polygamma_ratio_pair(m, alpha, beta, t, 1.0, tol,
                                    equal_args || t == 1.0));
  cs.back().label = "V(t) >= V(1)";
  return cs;
}

MaybeConstituents eval_R2_10(const CaseParams& p, double tol) {
  const double m_raw = param(p, "m"), alpha = param(p, "alpha"),
               beta = param(p, "beta"), t = param(p, "t");
  if (!odd_positive_integer(m_raw)) return std::nullopt;
  if (!(alpha > 0.0) || !(alpha <= beta) || !(t >= 1.0)) return std::nullopt;
  const int m = static_cast<int>(m_raw);
  // V(t) <= V(1), checked non-strictly under interval semantics.
  auto c = polygamma_ratio_pair(m, alpha, beta, 1.0, t, tol,
                                alpha == beta || t == 1.0);
  c.label = "V(t) <= V(1)";
  return {{c}};
}

// ---- section 3 cases -------------------------------------------------------

MaybeConstituents eval_KrasniqiP(const CaseParams& pr, double tol) {
  const double p_raw = param(pr, "p"), alpha = param(pr, "alpha"),
               t = param(pr, "t");
  if (!positive_integer(p_raw)) return std::nullopt;
  if (!(alpha > 0.0) || !(t > 0.0 && t < 1.0)) return std::nullopt;
  if (!(alpha + t > 1.0)) return std::nullopt;
  const long p = static_cast<long>(p_raw);
  const double g = constants::euler_gamma;
  const double lp = std::log(p_raw);
  const Ival adj_l = scalar_iv(-t * lp - g * t, t * std::abs(lp) + t * g);
  const Ival adj_r = scalar_iv((1.0 - t) * lp + g * (1.0 - t),
                               std::abs(lp) + g);
  const Ival left =
      adj_l + iv_lgamma(alpha, tol) - iv_lgamma_p(p, alpha, tol);
  const Ival mid =
      iv_lgamma(alpha + t, tol) - iv_lgamma_p(p, alpha + t, tol);
  const Ival right =
      adj_r + iv_lgamma(alpha + 1.0, tol) - iv_lgamma_p(p, alpha + 1.0, tol);
  return {{make(left, mid, false, "left <= mid"),
           make(mid, right, false, "mid <= right")}};
}

MaybeConstituents eval_KrasniqiQ(const CaseParams& pr, double tol) {
  const double q = param(pr, "q"), alpha = param(pr, "alpha"),
               t = param(pr, "t");
  if (!(q > 0.0 && q < 1.0)) return std::nullopt;
  if (!(alpha > 0.0) || !(t > 0.0 && t < 1.0)) return std::nullopt;
  if (!(alpha + t > 1.0)) return std::nullopt;
  const double g = constants::euler_gamma;
  const double l1q = std::log1p(-q);  // ln(1-q)
  const Ival adj_l = scalar_iv(t * l1q - g * t, t * std::abs(l1q) + t * g);
  const Ival adj_r =
      scalar_iv((t - 1.0) * l1q + g * (1.0 - t), std::abs(l1q) + g);
  const Ival left =
      adj_l + iv_lgamma(alpha, tol) - iv_lgamma_q(q, alpha, tol);
  const Ival mid =
      iv_lgamma(alpha + t, tol) - iv_lgamma_q(q, alpha + t, tol);
  const Ival right =
      adj_r + iv_lgamma(alpha + 1.0, tol) - iv_lgamma_q(q, alpha + 1.0, tol);
  return {{make(left, mid, false, "left <= mid"),
           make(mid, right, false, "mid <= right")}};
}

MaybeConstituents eval_L3_1(const CaseParams& p, double tol) {
  const double k = param(p, "k"), alpha = param(p, "alpha"),
               t = param(p, "t");
  if (!(k >= 1.0) || !(alpha > 0.0) || !(alpha + t > 0.0)) return std::nullopt;
  if (k == 1.0) {
    // gamma + (ln 1 - gamma)/1 + psi - psi_1 is identically zero.
    return {{make({}, {}, true, "k=1 reduction")}};
  }
  const double g = constants::euler_gamma;
  const double lk = std::log(k);
  const Ival head = scalar_iv(g + (lk - g) / k, g + std::abs(lk) / k);
  const Ival expr = head + iv_psi(alpha + t, tol, "psi(alpha+t)") -
                    iv_psi_k(k, alpha + t, tol, "psi_k(alpha+t)");
  return {{make(Ival::exact(0.0), expr, false,
                "gamma + (ln k - gamma)/k + psi - psi_k >= 0")}};
}

// log W(tau) = (tau/k) ln k + tau*gamma*(k-1)/k + lgamma(alpha+tau)
//              - lgamma_k(alpha+tau); exactly zero when k = 1.
Ival log_k_adjusted_gamma_ratio(double k, double alpha, double tau,
                                double tol) {
  const double g = constants::euler_gamma;
  const double lk = std::log(k);
  const double adj = tau / k * lk + tau * g * (k - 1.0) / k;
  const Ival adj_iv = scalar_iv(adj, std::abs(tau) * (std::abs(lk) + g));
  return adj_iv + iv_lgamma(alpha + tau, tol) -
         iv_lgamma_k(k, alpha + tau, tol);
}

MaybeConstituents eval_T3_2(const CaseParams& p, double tol) {
  const double k = param(p, "k"), alpha = param(p, "alpha"),
               t = param(p, "t");
  if (!(k >= 1.0) || !(alpha > 0.0) || !(t > 0.0 && t < 1.0)) {
    return std::nullopt;
  }
  if (k == 1.0) {
    // Every chain member is exactly Gamma(x)/Gamma_1(x) = 1.
    return {{make({}, {}, true, "left <= mid (k=1)"),
             make({}, {}, true, "mid <= right (k=1)")}};
  }
  const Ival w0 = log_k_adjusted_gamma_ratio(k, alpha, 0.0, tol);
  const Ival wt = log_k_adjusted_gamma_ratio(k, alpha, t, tol);
  const Ival w1 = log_k_adjusted_gamma_ratio(k, alpha, 1.0, tol);
  // W(0) <= W(t) <= W(1) is the chain in log form.
  return {{make(w0, wt, false, "left <= mid"),
           make(wt, w1, false, "mid <= right")}};
}

MaybeConstituents eval_R3_3(const CaseParams& p, double tol) {
  const double k = param(p, "k"), alpha = param(p, "alpha"),
               t = param(p, "t");
  if (!(k >= 1.0) || !(alpha > 0.0) || !(t >= 1.0)) return std::nullopt;
  if (k == 1.0 || t == 1.0) return {{make({}, {}, true, "W(1) <= W(t)")}};
  const Ival w1 = log_k_adjusted_gamma_ratio(k, alpha, 1.0, tol);
  const Ival wt = log_k_adjusted_gamma_ratio(k, alpha, t, tol);
  return {{make(w1, wt, false, "W(1) <= W(t)")}};
}

MaybeConstituents eval_L3_4(const CaseParams& p, double tol) {
  const double k = param(p, "k"), s = param(p, "s"), t = param(p, "t");
  if (!(k > 0.0) || !(s > 0.0) || !(t > 0.0) || !(s <= t)) return std::nullopt;
  if (s == t) return {{make({}, {}, true, "psi_k(s) <= psi_k(t)")}};
  return {{make(iv_psi_k(k, s, tol, "psi_k(s)"),
                iv_psi_k(k, t, tol, "psi_k(t)"), false,
                "psi_k(s) <= psi_k(t)")}};
}

MaybeConstituents eval_L3_6(const CaseParams& p, double tol) {
  const double k = param(p, "k"), a = param(p, "a"), b = param(p, "b"),
               alpha = param(p, "alpha"), beta = param(p, "beta"),
               t = param(p, "t");
  if (!(k > 0.0) || !(a > 0.0) || !(a <= b) || !(t >= 0.0)) {
    return std::nullopt;
  }
  const double x = a * t + alpha;
  const double y = b * t + beta;
  if (!(x > 0.0) || !(y > 0.0) || !(x <= y)) return std::nullopt;
  const Ival px = iv_psi_k(k, x, tol, "psi_k(a*t+alpha)");
  if (!px.certainly_positive()) return std::nullopt;
  if (a == b && x == y) {
    return {{make({}, {}, true, "a psi_k(x) <= b psi_k(y)")}};
  }
  const Ival py = iv_psi_k(k, y, tol, "psi_k(b*t+beta)");
  return {{make(scale(px, a), scale(py, b), false,
                "a psi_k(a*t+alpha) <= b psi_k(b*t+beta)")}};
}

struct KGammaProductParams {
  double k, a, b;
  std::array<double, 2> alphas, betas;
};

KGammaProductParams product_params(const CaseParams& p) {
  return KGammaProductParams{param(p, "k"),
                             param(p, "a"),
                             param(p, "b"),
                             {param(p, "alpha1"), param(p, "alpha2")},
                             {param(p, "beta1"), param(p, "beta2")}};
}

// Hypotheses of the product ratio at one tau: lower argument positive,
// ordered below the upper argument, and psi_k certainly positive at the
// lower argument (`lower` selects which side plays that role).
bool product_hypotheses_at(const KGammaProductParams& q, double tau,
                           bool lower_is_a, double tol) {
  for (int i = 0; i < 2; ++i) {
    const double xa = q.a * tau + q.alphas[static_cast<std::size_t>(i)];
    const double xb = q.b * tau + q.betas[static_cast<std::size_t>(i)];
    const double lo = lower_is_a ? xa : xb;
    const double hi = lower_is_a ? xb : xa;
    if (!(lo > 0.0) || !(hi > 0.0) || !(lo <= hi)) return false;
    if (!iv_psi_k(q.k, lo, tol, "psi_k(lower argument)")
             .certainly_positive()) {
      return false;
    }
  }
  return true;
}

// log X(tau) = sum_i [lgamma_k(a*tau+alpha_i) - lgamma_k(b*tau+beta_i)].
Ival log_k_gamma_product_ratio(const KGammaProductParams& q, double tau,
                               double tol) {
  Ival total = Ival::exact(0.0);
  for (int i = 0; i < 2; ++i) {
    const double xa = q.a * tau + q.alphas[static_cast<std::size_t>(i)];
    const double xb = q.b * tau + q.betas[static_cast<std::size_t>(i)];
    total = total + iv_lgamma_k(q.k, xa, tol) - iv_lgamma_k(q.k, xb, tol);
  }
  return total;
}

bool product_degenerate(const KGammaProductParams& q) {
  return q.a == q.b && q.alphas == q.betas;
}

MaybeConstituents eval_T3_7(const CaseParams& p, double tol) {
  const KGammaProductParams q = product_params(p);
  const double t = param(p, "t");
  if (!(q.k > 0.0) || !(q.a > 0.0) || !(q.a <= q.b)) return std::nullopt;
  if (!(q.alphas[0] > 0.0) || !(q.alphas[1] > 0.0) || !(q.betas[0] > 0.0) ||
      !(q.betas[1] > 0.0)) {
    return std::nullopt;
  }
  if (!(t >= 0.0 && t <= 1.0)) return std::nullopt;
  for (double tau : {0.0, t, 1.0}) {
    if (!product_hypotheses_at(q, tau, /*lower_is_a=*/true, tol)) {
      return std::nullopt;
    }
  }
  if (product_degenerate(q)) {
    return {{make({}, {}, true, "X(1) <= X(t)"),
             make({}, {}, true, "X(t) <= X(0)")}};
  }
  const Ival x0 = log_k_gamma_product_ratio(q, 0.0, tol);
  const Ival xt = log_k_gamma_product_ratio(q, t, tol);
  const Ival x1 = log_k_gamma_product_ratio(q, 1.0, tol);
  return {{make(x1, xt, t == 1.0, "X(1) <= X(t)"),
           make(xt, x0, t == 0.0, "X(t) <= X(0)")}};
}

MaybeConstituents eval_R3_8(const CaseParams& p, double tol) {
  const KGammaProductParams q = product_params(p);
  const double t = param(p, "t");
  if (!(q.k > 0.0) || !(q.a > 0.0) || !(q.a <= q.b)) return std::nullopt;
  if (!(q.alphas[0] > 0.0) || !(q.alphas[1] > 0.0) || !(q.betas[0] > 0.0) ||
      !(q.betas[1] > 0.0)) {
    return std::nullopt;
  }
  if (!(t >= 1.0)) return std::nullopt;
  for (double tau : {1.0, t}) {
    if (!product_hypotheses_at(q, tau, /*lower_is_a=*/true, tol)) {
      return std::nullopt;
    }
  }
  if (product_degenerate(q) || t == 1.0) {
    return {{make({}, {}, true, "X(t) <= X(1)")}};
  }
  const Ival xt = log_k_gamma_product_ratio(q, t, tol);
  const Ival x1 = log_k_gamma_product_ratio(q, 1.0, tol);
  return {{make(xt, x1, false, "X(t) <= X(1)")}};
}

MaybeConstituents eval_R3_9(const CaseParams& p, double tol) {
  const KGammaProductParams q = product_params(p);
  const double t = param(p, "t");
  if (!(q.k > 0.0) || !(q.b > 0.0) || !(q.b <= q.a)) return std::nullopt;
  if (!(q.alphas[0] > 0.0) || !(q.alphas[1] > 0.0) || !(q.betas[0] > 0.0) ||
      !(q.betas[1] > 0.0)) {
    return std::nullopt;
  }
  if (!(t >= 0.0 && t <= 1.0)) return std::nullopt;
  for (double tau : {0.0, t, 1.0}) {
    if (!product_hypotheses_at(q, tau, /*lower_is_a=*/false, tol)) {
      return std::nullopt;
    }
  }
  if (product_degenerate(q)) {
    return {{make({}, {}, true, "X(0) <= X(t)"),
             make({}, {}, true, "X(t) <= X(1)")}};
  }
  const Ival x0 = log_k_gamma_product_ratio(q, 0.0, tol);
  const Ival xt = log_k_gamma_product_ratio(q, t, tol);
  const Ival x1 = log_k_gamma_product_ratio(q, 1.0, tol);
  return {{make(x0, xt, t == 0.0, "X(0) <= X(t)"),
           make(xt, x1, t == 1.0, "X(t) <= X(1)")}};
}

MaybeConstituents eval_GJMA(const CaseParams& p, double tol) {
  const double m_raw = param(p, "m"), alpha = param(p, "alpha"),
               beta = param(p, "beta"), t = param(p, "t");
  if (!odd_positive_integer(m_raw)) return std::nullopt;
  if (!(alpha > 0.0) || !(alpha <= beta) || !(t >= 0.0)) return std::nullopt;
  const int m = static_cast<int>(m_raw);
  if (alpha == beta) return {{make({}, {}, true, "D <= 0")}};
  const Ival a1 = iv_psi_m(m + 1, alpha + t, tol, "psi^(m+1)(alpha+t)");
  const Ival b0 = iv_psi_m(m, beta + t, tol, "psi^(m)(beta+t)");
  const Ival b1 = iv_psi_m(m + 1, beta + t, tol, "psi^(m+1)(beta+t)");
  const Ival a0 = iv_psi_m(m, alpha + t, tol, "psi^(m)(alpha+t)");
  const Ival d = a1 * b0 - b1 * a0;
  // Corrected sign: the difference is <= 0 (the >= 0 claim is the erratum).
  return {{make(d, Ival::exact(0.0), false, "D <= 0")}};
}

// ---- catalog ---------------------------------------------------------------

GridSpec grid(std::vector<Axis> axes) {
  GridSpec g;
  g.axes = std::move(axes);
  return g;
}

std::vector<CaseInfo> build_catalog() {
  std::vector<CaseInfo> cat;
  cat.push_back({CaseId::L2_1, "L2_1", "Lemma 2.1",
                 "psi(s) <= psi(t) for 0 < s <= t",
                 {"s", "t"},
                 grid({Axis::uniform("s", 0.1, 20.0, 100),
                       Axis::uniform("t", 0.1, 20.0, 100)})});
  cat.push_back({CaseId::L2_2, "L2_2", "Lemma 2.2",
                 "psi'(s) >= psi'(t) for 0 < s <= t",
                 {"s", "t"},
                 grid({Axis::uniform("s", 0.1, 20.0, 100),
                       Axis::uniform("t", 0.1, 20.0, 100)})});
  cat.push_back(
      {CaseId::T2_3, "T2_3", "Theorem 2.3, Eq. (2.2)",
       "U(0) <= U(t) <= U(1) for U = psi(a+bt)^alpha / psi(c+dt)^beta, "
       "t in [0,1]",
       {"a", "b", "c", "d", "alpha", "beta", "t"},
       grid({Axis::uniform("a", 1.5, 6.0, 4), Axis::uniform("b", 0.5, 2.0, 3),
             Axis::uniform("c", 1.5, 6.0, 4), Axis::uniform("d", 0.5, 2.0, 3),
             Axis::uniform("alpha", 0.5, 3.0, 3),
             Axis::uniform("beta", 0.5, 3.0, 3),
             Axis::uniform("t", 0.0, 1.0, 5)})});
  cat.push_back({CaseId::R2_4, "R2_4",
                 "Remark 2.4 (checked in corrected form)",
                 "psi(1) <= psi(1+t) <= psi(2) for t in [0,1]",
                 {"t"},
                 grid({Axis::uniform("t", 0.0, 1.0, 101)})});
  cat.push_back(
      {CaseId::R2_5, "R2_5", "Remark 2.5",
       "U(t) >= U(1) for t >= 1 (hypotheses of Theorem 2.3)",
       {"a", "b", "c", "d", "alpha", "beta", "t"},
       grid({Axis::uniform("a", 1.5, 6.0, 3), Axis::uniform("b", 0.5, 2.0, 2),
             Axis::uniform("c", 1.5, 6.0, 3), Axis::uniform("d", 0.5, 2.0, 2),
             Axis::uniform("alpha", 0.5, 3.0, 3),
             Axis::uniform("beta", 0.5, 3.0, 3),
             Axis::uniform("t", 1.0, 5.0, 5)})});
  cat.push_back({CaseId::L2_7, "L2_7", "Lemma 2.7",
                 "psi^(m)(t) psi^(m+2)(t) - (psi^(m+1)(t))^2 >= 0, m odd",
                 {"m", "t"},
                 grid({Axis::explicit_values("m", {1, 3, 5, 7}),
                       Axis::uniform("t", 0.1, 10.0, 2500)})});
  cat.push_back({CaseId::L2_8, "L2_8", "Lemma 2.8",
                 "psi^(m+1)/psi^(m) non-decreasing: ratio(s) <= ratio(t) "
                 "for 0 < s <= t, m odd",
                 {"m", "s", "t"},
                 grid({Axis::explicit_values("m", {1, 3, 5}),
                       Axis::uniform("s", 0.2, 10.0, 60),
                       Axis::uniform("t", 0.2, 10.0, 60)})});
  cat.push_back({CaseId::T2_9, "T2_9", "Theorem 2.9, Eq. (2.4)",
                 "V(0) >= V(t) >= V(1) for V = psi^(m)(alpha+t)/"
                 "psi^(m)(beta+t), m odd, 0 < alpha <= beta, t in [0,1]",
                 {"m", "alpha", "beta", "t"},
                 grid({Axis::explicit_values("m", {1, 3}),
                       Axis::uniform("alpha", 0.25, 4.0, 8),
                       Axis::uniform("beta", 0.25, 4.0, 8),
                       Axis::uniform("t", 0.0, 1.0, 5)})});
  cat.push_back({CaseId::R2_10, "R2_10", "Remark 2.10",
                 "V(t) <= V(1) for t >= 1 (non-strict form)",
                 {"m", "alpha", "beta", "t"},
                 grid({Axis::explicit_values("m", {1, 3}),
                       Axis::uniform("alpha", 0.25, 4.0, 6),
                       Axis::uniform("beta", 0.25, 4.0, 6),
                       Axis::uniform("t", 1.0, 5.0, 9)})});
  cat.push_back({CaseId::KrasniqiP, "KrasniqiP",
                 "Krasniqi-Shabani p-Gamma chain",
                 "p^{-t} e^{-gt} G(a)/G_p(a) <= G(a+t)/G_p(a+t) <= "
                 "p^{1-t} e^{g(1-t)} G(a+1)/G_p(a+1), a+t > 1, t in (0,1)",
                 {"p", "alpha", "t"},
                 grid({Axis::explicit_values("p", {1, 5, 50}),
                       Axis::uniform("alpha", 0.5, 3.0, 6),
                       Axis::uniform("t", 0.1, 0.9, 5)})});
  cat.push_back({CaseId::KrasniqiQ, "KrasniqiQ",
                 "Krasniqi-Mansour-Shabani q-Gamma chain",
                 "(1-q)^t e^{-gt} G(a)/G_q(a) <= G(a+t)/G_q(a+t) <= "
                 "(1-q)^{t-1} e^{g(1-t)} G(a+1)/G_q(a+1), a+t > 1, t in (0,1)",
                 {"q", "alpha", "t"},
                 grid({Axis::explicit_values("q", {0.2, 0.5, 0.9}),
                       Axis::uniform("alpha", 0.5, 3.0, 6),
                       Axis::uniform("t", 0.1, 0.9, 5)})});
  cat.push_back({CaseId::L3_1, "L3_1", "Lemma 3.1",
                 "gamma + (ln k - gamma)/k + psi(alpha+t) - psi_k(alpha+t) "
                 ">= 0 for k >= 1",
                 {"k", "alpha", "t"},
                 grid({Axis::uniform("k", 1.0, 5.0, 9),
                       Axis::uniform("alpha", 0.5, 3.0, 6),
                       Axis::uniform("t", 0.0, 5.0, 200)})});
  cat.push_back({CaseId::T3_2, "T3_2", "Theorem 3.2, Eq. (3.3)",
                 "W(0) <= W(t) <= W(1) for W = k^{t/k} e^{t g (k-1)/k} "
                 "G(alpha+t)/G_k(alpha+t), k >= 1, t in (0,1)",
                 {"k", "alpha", "t"},
                 grid({Axis::uniform("k", 1.0, 4.0, 7),
                       Axis::uniform("alpha", 0.5, 3.0, 6),
                       Axis::uniform("t", 0.1, 0.9, 5)})});
  cat.push_back({CaseId::R3_3, "R3_3", "Remark 3.3",
                 "W(1) <= W(t) for t >= 1",
                 {"k", "alpha", "t"},
                 grid({Axis::uniform("k", 1.0, 4.0, 7),
                       Axis::uniform("alpha", 0.5, 3.0, 6),
                       Axis::uniform("t", 1.0, 5.0, 9)})});
  cat.push_back({CaseId::L3_4, "L3_4",
                 "Lemma 3.4, Eq. (3.2) (alias: Lemma 3.5)",
                 "psi_k(s) <= psi_k(t) for 0 < s <= t",
                 {"k", "s", "t"},
                 grid({Axis::explicit_values("k", {0.5, 1.0, 2.0, 5.0}),
                       Axis::uniform("s", 0.1, 15.0, 50),
                       Axis::uniform("t", 0.1, 15.0, 50)})});
  cat.push_back({CaseId::L3_6, "L3_6", "Lemma 3.6",
                 "a psi_k(a t + alpha) <= b psi_k(b t + beta) for 0 < a <= b "
                 "with ordered positive arguments and psi_k(a t + alpha) > 0",
                 {"k", "a", "b", "alpha", "beta", "t"},
                 grid({Axis::explicit_values("k", {0.5, 1.0, 2.0}),
                       Axis::uniform("a", 0.5, 2.0, 4),
                       Axis::uniform("b", 0.5, 2.0, 4),
                       Axis::uniform("alpha", 2.0, 5.0, 5),
                       Axis::uniform("beta", 2.0, 5.0, 5),
                       Axis::uniform("t", 0.0, 3.0, 9)})});
  cat.push_back({CaseId::T3_7, "T3_7", "Theorem 3.7, Eq. (3.4)",
                 "X(1) <= X(t) <= X(0) for X = prod_i G_k(a t + alpha_i)/"
                 "G_k(b t + beta_i), n = 2, t in [0,1]",
                 {"k", "a", "b", "alpha1", "alpha2", "beta1", "beta2", "t"},
                 grid({Axis::explicit_values("k", {1.0, 2.0}),
                       Axis::uniform("a", 0.5, 1.5, 2),
                       Axis::uniform("b", 0.5, 1.5, 2),
                       Axis::uniform("alpha1", 0.5, 3.0, 5),
                       Axis::uniform("alpha2", 0.5, 3.0, 5),
                       Axis::uniform("beta1", 0.5, 3.0, 5),
                       Axis::uniform("beta2", 0.5, 3.0, 5),
                       Axis::uniform("t", 0.0, 1.0, 3)})});
  cat.push_back({CaseId::R3_8, "R3_8", "Remark 3.8",
                 "X(t) <= X(1) for t >= 1",
                 {"k", "a", "b", "alpha1", "alpha2", "beta1", "beta2", "t"},
                 grid({Axis::explicit_values("k", {1.0, 2.0}),
                       Axis::uniform("a", 0.5, 1.5, 2),
                       Axis::uniform("b", 0.5, 1.5, 2),
                       Axis::uniform("alpha1", 1.5, 3.0, 3),
                       Axis::uniform("alpha2", 1.5, 3.0, 3),
                       Axis::uniform("beta1", 1.5, 3.0, 3),
                       Axis::uniform("beta2", 1.5, 3.0, 3),
                       Axis::uniform("t", 1.0, 5.0, 9)})});
  cat.push_back({CaseId::R3_9, "R3_9", "Remark 3.9",
                 "reversed chain X(0) <= X(t) <= X(1) when 0 < b <= a, "
                 "arguments reversed and psi_k(b t + beta_i) > 0",
                 {"k", "a", "b", "alpha1", "alpha2", "beta1", "beta2", "t"},
                 grid({Axis::explicit_values("k", {1.0, 2.0}),
                       Axis::uniform("a", 0.5, 1.5, 2),
                       Axis::uniform("b", 0.5, 1.5, 2),
                       Axis::uniform("alpha1", 0.5, 3.0, 5),
                       Axis::uniform("alpha2", 0.5, 3.0, 5),
                       Axis::uniform("beta1", 0.5, 3.0, 5),
                       Axis::uniform("beta2", 0.5, 3.0, 5),
                       // The reversal is stated for t in [0,1]; the grid
                       // extends further and the gate skips those points.
                       Axis::uniform("t", 0.0, 5.0, 11)})});
  cat.push_back({CaseId::GJMA_Erratum, "GJMA_Erratum",
                 "§4 erratum (corrected sign)",
                 "D = psi^(m+1)(alpha+t) psi^(m)(beta+t) - psi^(m+1)(beta+t) "
                 "psi^(m)(alpha+t) <= 0; the negated direction reproduces "
                 "the retracted >= 0 claim",
                 {"m", "alpha", "beta", "t"},
                 grid({Axis::explicit_values("m", {1, 3}),
                       Axis::uniform("alpha", 0.5, 3.0, 6),
                       Axis::uniform("beta", 0.5, 3.0, 6),
                       Axis::uniform("t", 0.0, 2.0, 5)})});
  return cat;
}

}  // namespace

const std::vector<CaseInfo>& list_cases() {
  static const std::vector<CaseInfo> catalog = build_catalog();
  return catalog;
}

const CaseInfo& case_info(CaseId id) {
  for (const CaseInfo& c : list_cases()) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown case id");
}

CaseId parse_case(const std::string& name) {
  for (const CaseInfo& c : list_cases()) {
    if (c.name == name) return c.id;
  }
  throw DomainError("unknown case name: " + name);
}

std::string case_name(CaseId id) { return case_info(id).name; }

std::optional<std::vector<Constituent>> case_constituents(
    CaseId id, const CaseParams& params, double tol) {
  switch (id) {
    case CaseId::L2_1: return eval_L2_1(params, tol);
    case CaseId::L2_2: return eval_L2_2(params, tol);
    case CaseId::T2_3: return eval_T2_3(params, tol);
    case CaseId::R2_4: return eval_R2_4(params, tol);
    case CaseId::R2_5: return eval_R2_5(params, tol);
    case CaseId::L2_7: return eval_L2_7(params, tol);
    case CaseId::L2_8: return eval_L2_8(params, tol);
    case CaseId::T2_9: return eval_T2_9(params, tol);
    case CaseId::R2_10: return eval_R2_10(params, tol);
    case CaseId::KrasniqiP: return eval_KrasniqiP(params, tol);
    case CaseId::KrasniqiQ: return eval_KrasniqiQ(params, tol);
    case CaseId::L3_1: return eval_L3_1(params, tol);
    case CaseId::T3_2: return eval_T3_2(params, tol);
    case CaseId::R3_3: return eval_R3_3(params, tol);
    case CaseId::L3_4: return eval_L3_4(params, tol);
    case CaseId::L3_6: return eval_L3_6(params, tol);
    case CaseId::T3_7: return eval_T3_7(params, tol);
    case CaseId::R3_8: return eval_R3_8(params, tol);
    case CaseId::R3_9: return eval_R3_9(params, tol);
    case CaseId::GJMA_Erratum: return eval_GJMA(params, tol);
  }
  throw DomainError("unhandled case id");
}

bool monotone_increasing(CaseId id) {
  switch (id) {
    case CaseId::T2_3: return true;   // U non-decreasing
    case CaseId::T2_9: return false;  // V non-increasing
    case CaseId::T3_2: return true;   // W non-decreasing
    case CaseId::T3_7: return false;  // X non-increasing
    default:
      throw DomainError("case has no monotone functional: " + case_name(id));
  }
}

std::optional<Ival> monotone_functional(CaseId id, const CaseParams& params,
                                        double t, double tol) {
  switch (id) {
    case CaseId::T2_3: {
      const double a = param(params, "a"), b = param(params, "b"),
                   c = param(params, "c"), d = param(params, "d"),
                   alpha = param(params, "alpha"), beta = param(params, "beta");
      if (!t2_3_scalar_hypotheses(a, b, c, d, alpha, beta) || !(t >= 0.0)) {
        return std::nullopt;
      }
      return log_psi_power_ratio(a, b, c, d, alpha, beta, t, tol);
    }
    case CaseId::T2_9: {
      const double m_raw = param(params, "m"), alpha = param(params, "alpha"),
                   beta = param(params, "beta");
      if (!odd_positive_integer(m_raw) || !(alpha > 0.0) ||
          !(alpha <= beta) || !(t >= 0.0)) {
        return std::nullopt;
      }
      const int m = static_cast<int>(m_raw);
      const Ival num = iv_psi_m(m, alpha + t, tol, "psi^(m)(alpha+t)");
      const Ival den = iv_psi_m(m, beta + t, tol, "psi^(m)(beta+t)");
      if (!num.certainly_positive() || !den.certainly_positive()) {
        return std::nullopt;
      }
      return ival_log(num) - ival_log(den);
    }
    case CaseId::T3_2: {
      const double k = param(params, "k"), alpha = param(params, "alpha");
      if (!(k >= 1.0) || !(alpha > 0.0) || !(t >= 0.0)) return std::nullopt;
      if (k == 1.0) return Ival::exact(0.0);
      return log_k_adjusted_gamma_ratio(k, alpha, t, tol);
    }
    case CaseId::T3_7: {
      const KGammaProductParams q = product_params(params);
      if (!(q.k > 0.0) || !(q.a > 0.0) || !(q.a <= q.b) || !(t >= 0.0)) {
        return std::nullopt;
      }
      if (!product_hypotheses_at(q, t, /*lower_is_a=*/true, tol)) {
        return std::nullopt;
      }
      if (product_degenerate(q)) return Ival::exact(0.0);
      return log_k_gamma_product_ratio(q, t, tol);
    }
    default:
      throw DomainError("case has no monotone functional: " + case_name(id));
  }
}

}  // namespace specineq
