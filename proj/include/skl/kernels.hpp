#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "skl/common.hpp"
#include "skl/quadrature.hpp"

namespace skl {

// kappa(x,y): either a constant in [1/L3, L3], or kappa0 + eps * g(x,y) with
// g(x,y) = sin(w * sum_i(x_i + y_i)) — symmetric, |g| <= 1, and Lipschitz in
// each argument with constant w*sqrt(d).
struct KappaModel {
    bool perturbed = false;
    double kappa0 = 1.0;
    double eps = 0.0;
};

struct KernelSpec {
    int d = 1;
    double alpha = 1.0;
    double beta = 0.0;  // kInf encodes the finite-range case
    double gamma1 = 1.0, gamma2 = 1.0;
    double L1 = std::exp(-1.0), L2 = 1.0;
    double L3 = 1.0, L4 = 1.0;
    double rho = 0.75;
    KappaModel kappa;
    std::optional<double> mass;

    bool beta_infinite() const { return std::isinf(beta); }
    // concrete profile: psi1(r) = exp(gamma (r^beta - 1)), gamma1 = gamma2
    double gamma() const { return gamma1; }
    double kappa_max() const { return kappa.kappa0 + kappa.eps; }
    double kappa_min() const { return kappa.kappa0 - kappa.eps; }
    // wavenumber of the perturbation bump; Lipschitz constant w*sqrt(d) = L4/2
    double kappa_wave() const { return L4 / (2.0 * std::sqrt(double(d))); }

    std::vector<std::string> validate() const {
        std::vector<std::string> iss;
        if (d < 1 || d > kMaxDim)
            iss.push_back("d must be in [1," + std::to_string(kMaxDim) + "]");
        if (!(alpha > 0.0 && alpha < 2.0)) iss.push_back("alpha must be in (0,2)");
        if (!(beta >= 0.0)) iss.push_back("beta must be >= 0 or inf");
        if (!(gamma1 > 0.0 && gamma2 > 0.0)) iss.push_back("gamma1, gamma2 must be > 0");
        if (gamma1 != gamma2)
            iss.push_back("concrete profile requires gamma1 == gamma2");
        if (!(L1 > 0.0 && L2 > 0.0)) iss.push_back("L1, L2 must be > 0");
        if (!(L3 >= 1.0)) iss.push_back("L3 must be >= 1");
        if (!(L4 > 0.0)) iss.push_back("L4 must be > 0");
        if (!(rho > 0.5 * alpha)) iss.push_back("rho must exceed alpha/2");
        if (!(kappa.kappa0 >= 1.0 / L3 && kappa.kappa0 <= L3))
            iss.push_back("kappa0 must lie in [1/L3, L3]");
        if (kappa.perturbed) {
            double cap = std::min({L3 - kappa.kappa0, kappa.kappa0 - 1.0 / L3, L4 / 2.0});
            if (!(kappa.eps >= 0.0 && kappa.eps <= cap))
                iss.push_back("perturbation eps must lie in [0, min(L3-kappa0, kappa0-1/L3, L4/2)]");
            if (rho > 1.0)
                iss.push_back("perturbed kappa certifies rho <= 1 only");
        }
        if (mass && !(*mass > 0.0)) iss.push_back("mass must be > 0 when present");
        return iss;
    }
};

// Tempering profile: 1 on (0,1], exp(gamma (r^beta - 1)) above 1
// (+inf above 1 when beta = inf). Increasing, continuous for finite beta.
inline double psi1(const KernelSpec& k, double r) {
    if (r < 0.0) throw std::domain_error("psi1: r must be >= 0");
    if (r <= 1.0) return 1.0;
    if (k.beta_infinite()) return kInf;
    if (k.beta == 0.0) return 1.0;
    return std::exp(k.gamma() * (std::pow(r, k.beta) - 1.0));
}

// 1/psi1 without forming infinities; this is the thinning acceptance factor.
inline double inv_psi1(const KernelSpec& k, double r) {
    if (r <= 1.0) return 1.0;
    if (k.beta_infinite()) return 0.0;
    if (k.beta == 0.0) return 1.0;
    return std::exp(-k.gamma() * (std::pow(r, k.beta) - 1.0));
}

// Isotropic part j(r) = r^{-d-alpha} / psi1(r); zero beyond range 1 when
// beta = inf.
inline double j_small(const KernelSpec& k, double r) {
    if (!(r > 0.0)) throw std::domain_error("j_small: r must be > 0");
    return std::pow(r, -double(k.d) - k.alpha) * inv_psi1(k, r);
}

inline double kappa_eval(const KernelSpec& k, const Vec& x, const Vec& y) {
    if (!k.kappa.perturbed) return k.kappa.kappa0;
    double s = 0;
    for (int i = 0; i < k.d; ++i) s += x[i] + y[i];
    return k.kappa.kappa0 + k.kappa.eps * std::sin(k.kappa_wave() * s);
}

// J(x,y) = kappa(x,y) j(|x-y|); symmetric, singular on the diagonal.
inline double jump_kernel(const KernelSpec& k, const Vec& x, const Vec& y) {
    double r = dist(x, y);
    if (!(r > 0.0)) throw std::domain_error("jump_kernel: x == y");
    double j = j_small(k, r);
    return j == 0.0 ? 0.0 : kappa_eval(k, x, y) * j;
}

// Profile of the relativistic kernel:
//   psi(r) = \int_0^inf s^{(d+alpha)/2 - 1} e^{-s/4 - r^2/s} ds.
// Integrated on the log axis (s = e^t), where the integrand is smooth and
// decays at least exponentially in both directions; evaluated relative to its
// peak so the result stays in range even when psi(r) ~ e^{-r} underflows the
// naive integrand.
inline double relativistic_psi(const KernelSpec& k, double r) {
    if (!k.mass) throw std::domain_error("relativistic_psi: spec.mass not set");
    if (r < 0.0) throw std::domain_error("relativistic_psi: r must be >= 0");
    double nu = 0.5 * (k.d + k.alpha);
    auto logf = [&](double t) {
        return nu * t - 0.25 * std::exp(t) - r * r * std::exp(-t);
    };
    double s_star = 2.0 * (nu + std::sqrt(nu * nu + r * r));
    double t_star = std::log(s_star);
    double g_star = logf(t_star);
    double t_lo = t_star, t_hi = t_star;
    while (logf(t_lo) > g_star - 60.0) t_lo -= 1.0;
    while (logf(t_hi) > g_star - 60.0) t_hi += 1.0;
    QuadResult q;
    try {
        q = integrate([&](double t) { return std::exp(logf(t) - g_star); },
                      t_lo, t_hi, 1e-14, 1e-11);
    } catch (const numeric_error& e) {
        throw numeric_error("relativistic_psi(r=" + std::to_string(r) +
                            "): " + e.what());
    }
    return q.value * std::exp(g_star);
}

namespace detail {

// \int_a^b r^{-1-alpha} dr, a <= b, closed form.
inline double power_tail(double alpha, double a, double b) {
    if (std::isinf(b)) return std::pow(a, -alpha) / alpha;
    return (std::pow(a, -alpha) - std::pow(b, -alpha)) / alpha;
}

// Mean of cos(u * <theta, (1,..,1)>) over the unit sphere S^{d-1}.
inline double sphere_cos_mean(int d, double u) {
    double kn = std::abs(u) * std::sqrt(double(d));
    switch (d) {
        case 1: return std::cos(kn);
        case 2: return std::cyl_bessel_j(0.0, kn);
        case 3: return kn < 1e-8 ? 1.0 - kn * kn / 6.0 : std::sin(kn) / kn;
        default:
            return kn < 1e-8 ? 1.0 : 2.0 * std::cyl_bessel_j(1.0, kn) / kn;
    }
}

}  // namespace detail

// \int_a^b r^{-1-alpha} / psi1(r) dr for 0 < a <= b <= inf; closed on (0,1],
// adaptive on the tempered tail.
inline double radial_profile_mass(const KernelSpec& k, double a, double b) {
    if (!(a > 0.0) || b < a) throw std::domain_error("radial_profile_mass: need 0 < a <= b");
    double lo_part = 0.0, hi_part = 0.0;
    double cut = std::min(b, 1.0);
    if (a < 1.0) lo_part = detail::power_tail(k.alpha, a, cut);
    double a2 = std::max(a, 1.0);
    if (b > 1.0 && !k.beta_infinite()) {
        if (k.beta == 0.0) {
            hi_part = detail::power_tail(k.alpha, a2, b);
        } else {
            auto f = [&](double r) {
                return std::pow(r, -1.0 - k.alpha) * inv_psi1(k, r);
            };
            hi_part = std::isinf(b)
                          ? integrate_to_inf(f, a2, 1e-14, 1e-11).value
                          : integrate(f, a2, b, 1e-14, 1e-11).value;
        }
    }
    return lo_part + hi_part;
}

// CDF of the accepted jump radius above eps (thinning oracle).
inline double jump_radius_cdf(const KernelSpec& k, double eps, double r) {
    if (r <= eps) return 0.0;
    double total = radial_profile_mass(k, eps, kInf);
    return radial_profile_mass(k, eps, r) / total;
}

// Meyer removal rate
//   J(x) = \int kappa(x,y) |x-y|^{-d-alpha} (1 - 1/psi1(|x-y|)) dy.
// The integrand vanishes on |x-y| <= 1. Constant kappa reduces to a radial
// integral with closed-form tail (abs+rel 1e-10). The perturbed part uses the
// closed angular average of the bump; its oscillatory algebraic tail is cut at
// R = 1e4 and the cut is charged to `err_out` rather than hidden.
inline double meyer_rate(const KernelSpec& k, const Vec& x,
                         double* err_out = nullptr) {
    if (!(k.beta > 0.0)) throw std::domain_error("meyer_rate: requires beta > 0");
    double omega = sphere_surface(k.d);
    double M;  // \int_1^inf r^{-1-alpha} (1 - 1/psi1) dr
    double err = 0.0;
    if (k.beta_infinite()) {
        M = 1.0 / k.alpha;
    } else {
        auto f = [&](double r) {
            return std::pow(r, -1.0 - k.alpha) * inv_psi1(k, r);
        };
        QuadResult q = integrate_to_inf(f, 1.0, 1e-14, 1e-11);
        M = 1.0 / k.alpha - q.value;
        err += q.error;
    }
    double value = k.kappa.kappa0 * omega * M;
    if (k.kappa.perturbed && k.kappa.eps > 0.0) {
        double w = k.kappa_wave();
        double s = 0;
        for (int i = 0; i < k.d; ++i) s += 2.0 * x[i];
        double amp = k.kappa.eps * std::sin(w * s);
        const double R = 1e4;
        auto f = [&](double r) {
            return std::pow(r, -1.0 - k.alpha) * (1.0 - inv_psi1(k, r)) *
                   detail::sphere_cos_mean(k.d, w * r);
        };
        QuadResult q = integrate(f, 1.0, R, 1e-12, 1e-9, 20000);
        value += amp * omega * q.value;
        err += std::abs(amp) * omega *
               (q.error + detail::power_tail(k.alpha, R, kInf));
    }
    if (err_out) *err_out = err;
    return value;
}

// Rigorous upper bound for ||J||_inf, used by the Meyer domination check.
inline double meyer_rate_sup(const KernelSpec& k) {
    double err = 0.0;
    KernelSpec kc = k;
    kc.kappa = KappaModel{false, k.kappa_max(), 0.0};
    double v = meyer_rate(kc, Vec(k.d), &err);
    return v + err;
}

}  // namespace skl
