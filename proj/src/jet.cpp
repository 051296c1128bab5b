#include "conformal/jet.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace conformal {

namespace {
double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}
}  // namespace

double Jet::derivative(int k) const {
    assert(k <= order());
    return coeff(k) * factorial(k);
}

Jet Jet::truncated(int order) const {
    assert(order <= this->order());
    Jet r(order);
    std::copy_n(c_.begin(), order + 1, r.c_.begin());
    return r;
}

Jet Jet::derivative_series() const {
    assert(order() >= 1);
    Jet r(order() - 1);
    for (int k = 0; k < order(); ++k) r.c_[k] = (k + 1) * c_[k + 1];
    return r;
}

Jet Jet::antiderivative(double c0) const {
    Jet r(order() + 1);
    r.c_[0] = c0;
    for (int k = 0; k <= order(); ++k) r.c_[k + 1] = c_[k] / (k + 1);
    return r;
}

double Jet::eval(double h) const {
    double acc = c_.back();
    for (int k = order() - 1; k >= 0; --k) acc = acc * h + c_[k];
    return acc;
}

Jet operator+(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    Jet r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    Jet r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    Jet r(n);
    for (int k = 0; k <= n; ++k) {
        double acc = 0.0;
        for (int i = 0; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
        r.c_[k] = acc;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    assert(b.c_[0] != 0.0);
    Jet r(n);
    for (int k = 0; k <= n; ++k) {
        double acc = a.c_[k];
        for (int i = 0; i < k; ++i) acc -= r.c_[i] * b.c_[k - i];
        r.c_[k] = acc / b.c_[0];
    }
    return r;
}

Jet operator-(const Jet& a) { return a * -1.0; }

Jet operator+(const Jet& a, double s) {
    Jet r = a;
    r.c_[0] += s;
    return r;
}
Jet operator+(double s, const Jet& a) { return a + s; }
Jet operator-(const Jet& a, double s) { return a + (-s); }
Jet operator-(double s, const Jet& a) { return (a * -1.0) + s; }

Jet operator*(const Jet& a, double s) {
    Jet r = a;
    for (double& c : r.c_) c *= s;
    return r;
}
Jet operator*(double s, const Jet& a) { return a * s; }
Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

Jet sqrt(const Jet& a) {
    assert(a.c_[0] > 0.0);
    const int n = a.order();
    Jet r(n);
    r.c_[0] = std::sqrt(a.c_[0]);
    for (int k = 1; k <= n; ++k) {
        double acc = a.c_[k];
        for (int i = 1; i < k; ++i) acc -= r.c_[i] * r.c_[k - i];
        r.c_[k] = acc / (2.0 * r.c_[0]);
    }
    return r;
}

Jet compose(const Jet& outer, const Jet& inner) {
    assert(inner.value() == 0.0);
    const int n = std::min(outer.order(), inner.order());
    const Jet g = inner.truncated(n);
    Jet r(n);
    r.c_[0] = outer.c_[n];
    for (int k = n - 1; k >= 0; --k) {
        r = r * g;
        r.c_[0] += outer.c_[k];
    }
    return r;
}

Jet revert(const Jet& a) {
    assert(a.value() == 0.0);
    const int n = a.order();
    assert(n >= 1 && std::abs(a.c_[1]) > 1e-300);
    Jet g(n);
    g.c_[1] = 1.0 / a.c_[1];
    if (n == 1) return g;
    // Solve [h^k] sum_j g_j a(h)^j = delta_{k1} triangularly, keeping
    // running powers of a.
    std::vector<Jet> pow(static_cast<std::size_t>(n) + 1, Jet(n));
    pow[1] = a;
    for (int j = 2; j <= n; ++j) pow[j] = pow[j - 1] * a;
    for (int k = 2; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 1; j < k; ++j) acc += g.c_[j] * pow[j].c_[k];
        g.c_[k] = -acc / pow[k].c_[k];
    }
    return g;
}

namespace {
// Taylor coefficients of trig/exp about t0.
Jet cyclic(double c0, double s0, int order) {
    // f with f(t0)=c0 and the derivative cycle (c,s) -> (-s,c) ... for cos;
    // callers pass the appropriate starting pair.
    Jet r(order);
    double fk = c0, gk = s0, fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= k;
        r.coeff(k) = fk / fact;
        const double nf = -gk, ng = fk;
        fk = nf;
        gk = ng;
    }
    return r;
}
}  // namespace

Jet jet_sin(double t0, int order) {
    return cyclic(std::sin(t0), -std::cos(t0), order);
}

Jet jet_cos(double t0, int order) {
    return cyclic(std::cos(t0), std::sin(t0), order);
}

Jet jet_exp(double t0, int order) {
    Jet r(order);
    const double e = std::exp(t0);
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= k;
        r.coeff(k) = e / fact;
    }
    return r;
}

}  // namespace conformal
