#pragma once

#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "skl/common.hpp"

namespace skl {

struct QuadResult {
    double value = 0;
    double error = 0;  // estimated absolute error
    long evals = 0;
};

namespace detail {

// Gauss-Kronrod 15(7) nodes/weights on [-1,1].
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& err) {
    double hc = 0.5 * (b - a), mid = 0.5 * (a + b);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - hc * kXgk[i]);
        fv[14 - i] = f(mid + hc * kXgk[i]);
    }
    fv[7] = f(mid);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
    for (int i = 0; i < 3; ++i)
        resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    value = resk * hc;
    err = std::abs((resk - resg) * hc);
    // QUADPACK-style sharpening of the raw K-G difference.
    double scale = std::abs(value) + 1e-300;
    double r = err / scale;
    if (r < 1.0) err = scale * std::pow(200.0 * r, 1.5) / 200.0 + 1e-300;
}

struct Piece {
    double err, value, a, b;
    bool operator<(const Piece& o) const { return err < o.err; }
};

}  // namespace detail

// Adaptive Gauss-Kronrod on a finite interval with a global error budget:
// the worst interval is bisected until |error| <= max(abs_tol, rel_tol*|I|).
// Exhaustion of the subdivision budget throws numeric_error with the achieved
// error so a failure is never silent.
template <class F>
QuadResult integrate(const F& f, double a, double b, double abs_tol = 1e-12,
                     double rel_tol = 1e-10, int max_intervals = 4000) {
    QuadResult res;
    if (a == b) return res;
    std::priority_queue<detail::Piece> heap;
    double v, e;
    detail::gk15(f, a, b, v, e);
    res.evals = 15;
    heap.push({e, v, a, b});
    double total_v = v, total_e = e, retired_err = 0;
    int n = 1;
    while (total_e > std::max(abs_tol, rel_tol * std::abs(total_v))) {
        if (n >= max_intervals || heap.empty()) {
            throw numeric_error(
                "quadrature did not converge: intervals=" + std::to_string(n) +
                " value=" + std::to_string(total_v) +
                " err=" + std::to_string(total_e + retired_err));
        }
        detail::Piece p = heap.top();
        heap.pop();
        double m = 0.5 * (p.a + p.b);
        if (!(p.a < m && m < p.b)) {
            // interval at machine width; retire it with its estimate
            total_e -= p.err;
            retired_err += p.err;
            res.value += p.value;
            continue;
        }
        double v1, e1, v2, e2;
        detail::gk15(f, p.a, m, v1, e1);
        detail::gk15(f, m, p.b, v2, e2);
        res.evals += 30;
        total_v += v1 + v2 - p.value;
        total_e += e1 + e2 - p.err;
        heap.push({e1, v1, p.a, m});
        heap.push({e2, v2, m, p.b});
        ++n;
    }
    while (!heap.empty()) {
        res.value += heap.top().value;
        heap.pop();
    }
    res.error = total_e + retired_err;
    return res;
}

// \int_a^inf f, for integrands with (at worst) algebraic decay, via the
// rational map r = a + t/(1-t).
template <class F>
QuadResult integrate_to_inf(const F& f, double a, double abs_tol = 1e-12,
                            double rel_tol = 1e-10, int max_intervals = 4000) {
    auto g = [&](double t) {
        double om = 1.0 - t;
        double r = a + t / om;
        return f(r) / (om * om);
    };
    return integrate(g, 0.0, 1.0, abs_tol, rel_tol, max_intervals);
}

}  // namespace skl
