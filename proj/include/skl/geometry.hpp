#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skl/common.hpp"

namespace skl {

enum class Shape {
    full_space,
    half_space,      // {x_d > 0}
    ball,            // open B(center, radius)
    interval_union,  // d = 1, disjoint open intervals
    graph_domain,    // d = 2, {y > phi(x)} with phi a finite trig/affine sum
    exterior_ball,   // {|x - center| > radius}
};

struct TrigTerm {
    double amp = 0, freq = 0, phase = 0;
};

struct DomainSpec {
    Shape shape = Shape::full_space;
    int d = 1;

    Vec center;           // ball / exterior_ball
    double radius = 1.0;  // ball / exterior_ball
    std::vector<std::pair<double, double>> intervals;

    // graph_domain: phi(s) = g0 + g1 s + sum_i amp_i sin(freq_i s + phase_i)
    double g0 = 0, g1 = 0;
    std::vector<TrigTerm> trig;

    // C^{1,eta} characteristics (R, Lambda, eta), kappa-fat witness (R1,
    // kappa) and optional path-distance characteristic lambda1
    double R_char = 1.0;
    double Lambda = 1.0;
    double eta = 1.0;
    double fat_R1 = 1.0;
    double fat_kappa = 0.5;
    std::optional<double> lambda1;

    // optional cap: the effective domain is shape ∩ B(cap_center, cap_radius);
    // used for exit sets like D ∩ B(z_x, r)
    bool has_cap = false;
    Vec cap_center;
    double cap_radius = 0.0;

    static DomainSpec make_full_space(int dim) {
        DomainSpec s;
        s.shape = Shape::full_space;
        s.d = dim;
        s.R_char = kInf;
        s.fat_R1 = kInf;
        return s;
    }
    static DomainSpec make_half_space(int dim) {
        DomainSpec s;
        s.shape = Shape::half_space;
        s.d = dim;
        s.R_char = 8.0;
        s.Lambda = 1.0;
        s.fat_R1 = kInf;
        s.fat_kappa = 0.5;
        s.lambda1 = 1.0;
        return s;
    }
    static DomainSpec make_ball(const Vec& c, double r) {
        DomainSpec s;
        s.shape = Shape::ball;
        s.d = c.dim;
        s.center = c;
        s.radius = r;
        s.R_char = r;
        s.Lambda = 2.0;
        s.fat_R1 = r;
        s.fat_kappa = 0.5;
        s.lambda1 = M_PI / 2.0;
        return s;
    }
    static DomainSpec make_exterior_ball(const Vec& c, double r) {
        DomainSpec s = make_ball(c, r);
        s.shape = Shape::exterior_ball;
        s.lambda1 = M_PI;
        return s;
    }
    static DomainSpec make_interval_union(
        std::vector<std::pair<double, double>> iv) {
        DomainSpec s;
        s.shape = Shape::interval_union;
        s.d = 1;
        std::sort(iv.begin(), iv.end());
        s.intervals = std::move(iv);
        double lmin = kInf, gmin = kInf;
        for (size_t i = 0; i < s.intervals.size(); ++i) {
            lmin = std::min(lmin, s.intervals[i].second - s.intervals[i].first);
            if (i) gmin = std::min(gmin, s.intervals[i].first -
                                             s.intervals[i - 1].second);
        }
        // d=1 convention: R = min(l_min, g_min)/2, Lambda = 1
        s.R_char = 0.5 * std::min(lmin, gmin);
        s.Lambda = 1.0;
        s.fat_R1 = 0.5 * lmin;
        s.fat_kappa = 0.5;
        s.lambda1 = 1.0;
        return s;
    }
    static DomainSpec make_graph(double g0, double g1,
                                 std::vector<TrigTerm> terms, double R,
                                 double Lambda, double eta) {
        DomainSpec s;
        s.shape = Shape::graph_domain;
        s.d = 2;
        s.g0 = g0;
        s.g1 = g1;
        s.trig = std::move(terms);
        s.R_char = R;
        s.Lambda = Lambda;
        s.eta = eta;
        s.fat_R1 = std::min(R, 1.0) / 2.0;
        s.fat_kappa = 0.5 / (1.0 + Lambda);
        s.lambda1 = 1.0 + Lambda;
        return s;
    }
    DomainSpec with_cap(const Vec& c, double r) const {
        DomainSpec s = *this;
        s.has_cap = true;
        s.cap_center = c;
        s.cap_radius = r;
        return s;
    }

    bool bounded() const {
        if (has_cap) return true;
        return shape == Shape::ball || shape == Shape::interval_union;
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> iss;
        if (d < 1 || d > kMaxDim) iss.push_back("domain dimension out of range");
        switch (shape) {
            case Shape::ball:
            case Shape::exterior_ball:
                if (!(radius > 0)) iss.push_back("ball radius must be > 0");
                break;
            case Shape::interval_union: {
                if (d != 1) iss.push_back("interval_union requires d = 1");
                if (intervals.empty()) iss.push_back("interval_union is empty");
                for (size_t i = 0; i < intervals.size(); ++i) {
                    if (!(intervals[i].second > intervals[i].first))
                        iss.push_back("interval of nonpositive length");
                    if (i && !(intervals[i].first > intervals[i - 1].second))
                        iss.push_back("intervals must be disjoint with positive gaps");
                }
                break;
            }
            case Shape::graph_domain:
                if (d != 2) iss.push_back("graph_domain requires d = 2");
                if (!(Lambda > 0)) iss.push_back("graph_domain needs Lambda > 0");
                break;
            default:
                break;
        }
        if (!(fat_kappa > 0 && fat_kappa <= 0.5))
            iss.push_back("kappa-fat constant must lie in (0, 1/2]");
        if (has_cap && !(cap_radius > 0)) iss.push_back("cap radius must be > 0");
        return iss;
    }
};

inline double graph_phi(const DomainSpec& s, double t) {
    double v = s.g0 + s.g1 * t;
    for (const auto& tr : s.trig) v += tr.amp * std::sin(tr.freq * t + tr.phase);
    return v;
}

inline double graph_dphi(const DomainSpec& s, double t) {
    double v = s.g1;
    for (const auto& tr : s.trig)
        v += tr.amp * tr.freq * std::cos(tr.freq * t + tr.phase);
    return v;
}

namespace detail {

inline bool shape_contains(const DomainSpec& s, const Vec& x) {
    switch (s.shape) {
        case Shape::full_space: return true;
        case Shape::half_space: return x[s.d - 1] > 0.0;
        case Shape::ball: return dist(x, s.center) < s.radius;
        case Shape::exterior_ball: return dist(x, s.center) > s.radius;
        case Shape::interval_union:
            for (const auto& iv : s.intervals)
                if (x[0] > iv.first && x[0] < iv.second) return true;
            return false;
        case Shape::graph_domain: return x[1] > graph_phi(s, x[0]);
    }
    return false;
}

// golden-section refinement of a bracketed 1-d minimum
template <class F>
double golden_min(const F& f, double a, double b, double tol) {
    constexpr double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// parameter of the nearest point on the graph curve s -> (s, phi(s))
inline double graph_nearest_param(const DomainSpec& s, const Vec& x) {
    auto F = [&](double t) {
        double dx = t - x[0], dy = graph_phi(s, t) - x[1];
        return dx * dx + dy * dy;
    };
    double v = std::abs(x[1] - graph_phi(s, x[0]));
    if (v == 0.0) return x[0];
    double maxfreq = 0.0;
    for (const auto& tr : s.trig) maxfreq = std::max(maxfreq, std::abs(tr.freq));
    double half = v * std::sqrt(1.0 + s.Lambda * s.Lambda) + 1e-9;
    double h = maxfreq > 0 ? std::min(0.25 * M_PI / maxfreq, half / 16.0)
                           : half / 16.0;
    int n = static_cast<int>(std::ceil(2.0 * half / h));
    double best_t = x[0], best_f = F(x[0]);
    std::vector<double> ts(n + 1), fs(n + 1);
    for (int i = 0; i <= n; ++i) {
        ts[i] = x[0] - half + 2.0 * half * i / n;
        fs[i] = F(ts[i]);
    }
    for (int i = 0; i <= n; ++i) {
        bool loc_min = (i == 0 || fs[i] <= fs[i - 1]) &&
                       (i == n || fs[i] <= fs[i + 1]);
        if (!loc_min) continue;
        double a = ts[std::max(i - 1, 0)], b = ts[std::min(i + 1, n)];
        double t = golden_min(F, a, b, 1e-12 * std::max(1.0, std::abs(x[0])));
        if (F(t) < best_f) { best_f = F(t); best_t = t; }
    }
    return best_t;
}

inline double shape_dist_inside(const DomainSpec& s, const Vec& x) {
    switch (s.shape) {
        case Shape::full_space: return kInf;
        case Shape::half_space: return x[s.d - 1];
        case Shape::ball: return s.radius - dist(x, s.center);
        case Shape::exterior_ball: return dist(x, s.center) - s.radius;
        case Shape::interval_union:
            for (const auto& iv : s.intervals)
                if (x[0] > iv.first && x[0] < iv.second)
                    return std::min(x[0] - iv.first, iv.second - x[0]);
            return 0.0;
        case Shape::graph_domain: {
            double t = graph_nearest_param(s, x);
            double dx = t - x[0], dy = graph_phi(s, t) - x[1];
            return std::sqrt(dx * dx + dy * dy);
        }
    }
    return 0.0;
}

inline Vec shape_nearest_boundary(const DomainSpec& s, const Vec& x) {
    switch (s.shape) {
        case Shape::half_space: {
            Vec z = x;
            z[s.d - 1] = 0.0;
            return z;
        }
        case Shape::ball:
        case Shape::exterior_ball: {
            Vec u = x - s.center;
            double n = u.norm();
            if (n < 1e-300) {
                // center: ties broken toward the lexicographically smallest
                Vec z = s.center;
                z[0] -= s.radius;
                return z;
            }
            return s.center + (s.radius / n) * u;
        }
        case Shape::interval_union: {
            double best = kInf;
            Vec z(1);
            for (const auto& iv : s.intervals)
                for (double e : {iv.first, iv.second}) {
                    double dd = std::abs(x[0] - e);
                    if (dd < best - 1e-15 ||
                        (dd < best + 1e-15 && e < z[0])) {
                        best = dd;
                        z[0] = e;
                    }
                }
            return z;
        }
        case Shape::graph_domain: {
            double t = graph_nearest_param(s, x);
            Vec z(2);
            z[0] = t;
            z[1] = graph_phi(s, t);
            return z;
        }
        case Shape::full_space:
            throw std::domain_error("full_space has no boundary");
    }
    return Vec(s.d);
}

}  // namespace detail

inline bool contains(const DomainSpec& s, const Vec& x) {
    if (s.has_cap && !(dist(x, s.cap_center) < s.cap_radius)) return false;
    return detail::shape_contains(s, x);
}

// delta_D(x): exact for the closed-form shapes, 1-d minimization over the
// graph parameter (certified bracket around the vertical foot) for graphs.
inline double dist_to_boundary(const DomainSpec& s, const Vec& x) {
    if (!contains(s, x))
        throw std::domain_error("dist_to_boundary: point not in domain");
    double v = detail::shape_dist_inside(s, x);
    if (s.has_cap) v = std::min(v, s.cap_radius - dist(x, s.cap_center));
    return v;
}

inline Vec nearest_boundary_point(const DomainSpec& s, const Vec& x) {
    if (!contains(s, x))
        throw std::domain_error("nearest_boundary_point: point not in domain");
    if (!s.has_cap) return detail::shape_nearest_boundary(s, x);
    double ds = detail::shape_dist_inside(s, x);
    double dc = s.cap_radius - dist(x, s.cap_center);
    if (dc < ds) {
        Vec u = x - s.cap_center;
        double n = u.norm();
        if (n < 1e-300) {
            Vec z = s.cap_center;
            z[0] -= s.cap_radius;
            return z;
        }
        return s.cap_center + (s.cap_radius / n) * u;
    }
    return detail::shape_nearest_boundary(s, x);
}

// Unsigned distance to the boundary, defined on both sides.
inline double boundary_gap(const DomainSpec& s, const Vec& x) {
    switch (s.shape) {
        case Shape::full_space: return kInf;
        case Shape::half_space: return std::abs(x[s.d - 1]);
        case Shape::ball:
        case Shape::exterior_ball:
            return std::abs(dist(x, s.center) - s.radius);
        case Shape::interval_union: {
            double best = kInf;
            for (const auto& iv : s.intervals) {
                best = std::min(best, std::abs(x[0] - iv.first));
                best = std::min(best, std::abs(x[0] - iv.second));
            }
            return best;
        }
        case Shape::graph_domain: {
            double t = detail::graph_nearest_param(s, x);
            double dx = t - x[0], dy = graph_phi(s, t) - x[1];
            return std::sqrt(dx * dx + dy * dy);
        }
    }
    return 0.0;
}

// Inward unit normal at a boundary point z.
inline Vec inward_normal(const DomainSpec& s, const Vec& z) {
    Vec n(s.d);
    switch (s.shape) {
        case Shape::half_space:
            n[s.d - 1] = 1.0;
            return n;
        case Shape::ball: {
            Vec u = s.center - z;
            return (1.0 / u.norm()) * u;
        }
        case Shape::exterior_ball: {
            Vec u = z - s.center;
            return (1.0 / u.norm()) * u;
        }
        case Shape::interval_union: {
            // +1 at a left endpoint, -1 at a right endpoint
            for (const auto& iv : s.intervals) {
                if (std::abs(z[0] - iv.first) < std::abs(z[0] - iv.second))
                    n[0] = 1.0;
                else
                    n[0] = -1.0;
                if (z[0] >= iv.first - 1e-12 && z[0] <= iv.second + 1e-12)
                    break;
            }
            return n;
        }
        case Shape::graph_domain: {
            double dp = graph_dphi(s, z[0]);
            double inv = 1.0 / std::sqrt(1.0 + dp * dp);
            n[0] = -dp * inv;
            n[1] = inv;
            return n;
        }
        case Shape::full_space:
            throw std::domain_error("full_space has no boundary");
    }
    return n;
}

// A_r(x) of the kappa-fat definition: B(A_r(x), kappa r) ⊆ D ∩ B(x,r).
// The candidate walks inward from x; the containment is then verified on 10^3
// low-discrepancy samples of the small sphere, so a wrong (R1, kappa) witness
// surfaces as an error instead of a silent bad point.
inline Vec fat_point(const DomainSpec& s, const Vec& x, double r) {
    if (!(r > 0.0) || r > s.fat_R1 * (1 + 1e-12))
        throw std::domain_error("fat_point: need 0 < r <= R1");
    bool inside = contains(s, x);
    if (!inside && boundary_gap(s, x) > 1e-9)
        throw std::domain_error("fat_point: x not in closure(D)");
    if (s.shape == Shape::full_space) return x;

    double kap = s.fat_kappa;
    Vec A = x;
    double delta = inside ? dist_to_boundary(s, x) : 0.0;
    if (delta < kap * r) {
        Vec z = inside ? nearest_boundary_point(s, x) : x;
        Vec n = inward_normal(s, z);
        double step = (1.0 - kap) * r;
        if (s.shape == Shape::ball)
            step = std::min(step, dist(x, s.center));
        if (s.shape == Shape::interval_union) {
            for (const auto& iv : s.intervals)
                if (x[0] >= iv.first - 1e-12 && x[0] <= iv.second + 1e-12)
                    step = std::min(step, std::abs(0.5 * (iv.first + iv.second) - x[0]));
        }
        A = x + step * n;
    }

    // verify B(A, kappa r) ⊆ D ∩ B(x, r)
    const int n_samples = 1000;
    double rr = kap * r * (1.0 - 1e-9);
    auto check = [&](const Vec& p) {
        return contains(s, p) && dist(p, x) <= r * (1.0 + 1e-9);
    };
    bool ok = check(A);
    if (s.d == 1) {
        Vec p = A;
        p[0] = A[0] - rr;
        ok = ok && check(p);
        p[0] = A[0] + rr;
        ok = ok && check(p);
    } else {
        constexpr double ga = 2.399963229728653;  // golden angle
        for (int i = 0; ok && i < n_samples; ++i) {
            Vec p = A;
            if (s.d == 2) {
                double th = ga * i;
                p[0] += rr * std::cos(th);
                p[1] += rr * std::sin(th);
            } else {
                double ct = 1.0 - 2.0 * (i + 0.5) / n_samples;
                double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
                double th = ga * i;
                p[0] += rr * st * std::cos(th);
                p[1] += rr * st * std::sin(th);
                p[2] += rr * ct;
            }
            ok = check(p);
        }
    }
    if (!ok)
        throw contract_error("fat_point: witness (R1,kappa) failed sampled containment");
    return A;
}

// Truncated exit cone of Theorem-style boundary estimates, expressed in the
// coordinate system at z_x: axis = inward normal, lateral size measured as
// sqrt(|y-z|^2 - y_axis^2) so no explicit lateral basis is needed.
struct ConePredicate {
    Vec z;       // base boundary point z_x
    Vec axis;    // inward normal at z_x
    double Lambda, lam, r;

    bool operator()(const Vec& y) const {
        Vec u = y - z;
        double rho2 = u.norm2();
        double yd = dot(u, axis);
        if (yd <= 0.0) return false;
        double lat2 = std::max(0.0, rho2 - yd * yd);
        if (!(4.0 * Lambda * Lambda * lat2 < yd * yd)) return false;
        double rho = std::sqrt(rho2);
        return rho > r / lam && rho < r;
    }
};

inline ConePredicate boundary_cone_indicator(const DomainSpec& s, const Vec& x,
                                             double lam, double r) {
    if (!(lam >= 4.0))
        throw contract_error("boundary_cone_indicator: need lambda >= 4");
    if (!(r <= std::min(s.R_char, 1.0) / 4.0 * (1 + 1e-12)))
        throw contract_error("boundary_cone_indicator: need r <= (R ∧ 1)/4");
    double delta = dist_to_boundary(s, x);
    if (!(delta < r / lam / 2.0))
        throw contract_error("boundary_cone_indicator: need delta_D(x) < r/(2 lambda)");
    Vec z = nearest_boundary_point(s, x);
    return ConePredicate{z, inward_normal(s, z), s.Lambda, lam, r};
}

}  // namespace skl
