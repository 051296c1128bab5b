// Truncated Taylor series ("jets") and series-valued Minkowski algebra.
//
// A Jet stores coefficients c[k] = f^(k)(t0)/k! of a function expanded at
// some base parameter t0; the base itself is tracked by the owner, so jets
// compose like formal power series in the offset h = t - t0.  Composition
// and reversion require the inner series to be centered (value() == 0).
#pragma once

#include <array>
#include <vector>

#include "conformal/minkowski.hpp"

namespace conformal {

class Jet {
  public:
    Jet() = default;
    explicit Jet(int order) : c_(static_cast<std::size_t>(order) + 1, 0.0) {}
    Jet(double v, int order) : Jet(order) { c_[0] = v; }

    static Jet constant(double v, int order) { return Jet(v, order); }
    static Jet variable(double v, int order) {
        Jet j(v, order);
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double value() const { return c_[0]; }
    double coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    double& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }
    // k-th derivative value, k! * c_k
    double derivative(int k) const;

    Jet truncated(int order) const;

    // d/dt; order drops by one.
    Jet derivative_series() const;
    // antiderivative with constant term c0; order grows by one.
    Jet antiderivative(double c0 = 0.0) const;

    // evaluate the truncated polynomial at offset h
    double eval(double h) const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a);
    friend Jet operator+(const Jet& a, double s);
    friend Jet operator+(double s, const Jet& a);
    friend Jet operator-(const Jet& a, double s);
    friend Jet operator-(double s, const Jet& a);
    friend Jet operator*(const Jet& a, double s);
    friend Jet operator*(double s, const Jet& a);
    friend Jet operator/(const Jet& a, double s);

    friend Jet sqrt(const Jet& a);

    // outer(inner(h)); inner must be centered.
    friend Jet compose(const Jet& outer, const Jet& inner);
    // functional inverse of a centered series with c1 != 0.
    friend Jet revert(const Jet& a);

  private:
    std::vector<double> c_;
};

using Jet2 = std::array<Jet, 2>;
using Jet3 = std::array<Jet, 3>;
using Jet4 = std::array<Jet, 4>;
using Jet5 = std::array<Jet, 5>;
using JetBivector5 = BivectorT<Jet>;

template <std::size_t N>
std::array<Jet, N> jet_truncated(const std::array<Jet, N>& u, int order) {
    std::array<Jet, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = u[i].truncated(order);
    return r;
}

template <std::size_t N>
std::array<Jet, N> jet_derivative(const std::array<Jet, N>& u) {
    std::array<Jet, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = u[i].derivative_series();
    return r;
}

// componentwise composition with a centered inner series
template <std::size_t N>
std::array<Jet, N> jet_compose(const std::array<Jet, N>& u, const Jet& inner) {
    std::array<Jet, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = compose(u[i], inner);
    return r;
}

template <std::size_t N>
std::array<double, N> jet_values(const std::array<Jet, N>& u) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = u[i].value();
    return r;
}

template <std::size_t N>
std::array<double, N> jet_derivatives(const std::array<Jet, N>& u, int k) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = u[i].derivative(k);
    return r;
}

inline JetBivector5 jet_derivative(const JetBivector5& b) {
    JetBivector5 r;
    for (int k = 0; k < 10; ++k) r.p[k] = b.p[k].derivative_series();
    return r;
}

inline JetBivector5 jet_compose(const JetBivector5& b, const Jet& inner) {
    JetBivector5 r;
    for (int k = 0; k < 10; ++k) r.p[k] = compose(b.p[k], inner);
    return r;
}

inline Bivector5 jet_values(const JetBivector5& b) {
    Bivector5 r;
    for (int k = 0; k < 10; ++k) r.p[k] = b.p[k].value();
    return r;
}

inline JetBivector5 jet_truncated(const JetBivector5& b, int order) {
    JetBivector5 r;
    for (int k = 0; k < 10; ++k) r.p[k] = b.p[k].truncated(order);
    return r;
}

// Jets of elementary functions of (t0 + h), order K.
Jet jet_sin(double t0, int order);
Jet jet_cos(double t0, int order);
Jet jet_exp(double t0, int order);

}  // namespace conformal
