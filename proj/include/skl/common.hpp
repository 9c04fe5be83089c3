#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace skl {

inline constexpr int kMaxDim = 4;

// Point in R^d, d <= kMaxDim. Fixed storage keeps the simulation loop
// allocation-free; unused coordinates stay zero.
struct Vec {
    std::array<double, kMaxDim> c{};
    int dim = 1;

    Vec() = default;
    explicit Vec(int d) : dim(d) {}
    Vec(std::initializer_list<double> xs) {
        dim = static_cast<int>(xs.size());
        int i = 0;
        for (double v : xs) c[i++] = v;
    }

    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    double norm2() const {
        double s = 0;
        for (int i = 0; i < dim; ++i) s += c[i] * c[i];
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.dim);
    for (int i = 0; i < a.dim; ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.dim);
    for (int i = 0; i < a.dim; ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vec operator*(double s, const Vec& a) {
    Vec r(a.dim);
    for (int i = 0; i < a.dim; ++i) r[i] = s * a[i];
    return r;
}
inline double dot(const Vec& a, const Vec& b) {
    double s = 0;
    for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
    return s;
}
inline double dist(const Vec& a, const Vec& b) { return (a - b).norm(); }

inline bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.dim; ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Error taxonomy. Preconditions -> std::domain_error; estimates the theory
// does not claim -> contract_error; quadrature/fit breakdown -> numeric_error;
// config validation -> validation_error (aggregated, never first-error-only).
// ---------------------------------------------------------------------------

struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct validation_error : std::runtime_error {
    std::vector<std::string> issues;
    explicit validation_error(std::vector<std::string> iss)
        : std::runtime_error(join(iss)), issues(std::move(iss)) {}

  private:
    static std::string join(const std::vector<std::string>& iss) {
        std::string s = "config validation failed:";
        for (const auto& i : iss) s += "\n  - " + i;
        return s;
    }
};

inline double sq(double x) { return x * x; }

// Surface measure of the unit sphere S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
inline double sphere_surface(int d) {
    return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace skl
