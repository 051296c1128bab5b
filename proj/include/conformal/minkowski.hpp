// Lorentzian linear algebra in R^5_1 and R^4_1.
//
// Conventions used throughout:
//   <x,y> = -x0*y0 + x1*y1 + ... + xn*yn          (index 0 is time-like)
//   cross(u1..u_{n-1}): w0 = -det(e0,u1,..), wi = +det(ei,u1,..), so that
//       <w, y> = det(y, u1, .., u_{n-1})  for every y.
//   Bivectors carry Plucker coordinates p_ij (0 <= i < j <= 4) and the
//   inner product  sum_{1<=i<j<=4} p_ij q_ij - sum_k p_0k q_0k, which is
//   the bilinear extension of det(<u_i,v_j>) on wedges and has signature
//   (6,4) on Lambda^2 R^5_1.
//
// Everything is templated on the scalar so the same formulas serve plain
// doubles and truncated Taylor series (see jet.hpp).
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace conformal {

template <class S, std::size_t N>
using VecT = std::array<S, N>;

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Vec5 = std::array<double, 5>;

template <class S, std::size_t N>
S lorentz_form(const VecT<S, N>& u, const VecT<S, N>& v) {
    S acc = u[1] * v[1] - u[0] * v[0];
    for (std::size_t i = 2; i < N; ++i) acc = acc + u[i] * v[i];
    return acc;
}

template <class S, std::size_t N>
S euclid_dot(const VecT<S, N>& u, const VecT<S, N>& v) {
    S acc = u[0] * v[0];
    for (std::size_t i = 1; i < N; ++i) acc = acc + u[i] * v[i];
    return acc;
}

template <class S, std::size_t N>
VecT<S, N> operator+(const VecT<S, N>& u, const VecT<S, N>& v) {
    VecT<S, N> w;
    for (std::size_t i = 0; i < N; ++i) w[i] = u[i] + v[i];
    return w;
}

template <class S, std::size_t N>
VecT<S, N> operator-(const VecT<S, N>& u, const VecT<S, N>& v) {
    VecT<S, N> w;
    for (std::size_t i = 0; i < N; ++i) w[i] = u[i] - v[i];
    return w;
}

template <class S, std::size_t N, class C>
VecT<S, N> operator*(const C& a, const VecT<S, N>& u) {
    VecT<S, N> w;
    for (std::size_t i = 0; i < N; ++i) w[i] = a * u[i];
    return w;
}

namespace detail {

template <class S>
S det2(const S& a, const S& b, const S& c, const S& d) {
    return a * d - b * c;
}

template <class S>
S det3(const std::array<std::array<S, 3>, 3>& m) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

template <class S>
S det4(const std::array<std::array<S, 4>, 4>& m) {
    S acc = m[0][0] * det3<S>({{{m[1][1], m[1][2], m[1][3]},
                                {m[2][1], m[2][2], m[2][3]},
                                {m[3][1], m[3][2], m[3][3]}}});
    acc = acc - m[0][1] * det3<S>({{{m[1][0], m[1][2], m[1][3]},
                                    {m[2][0], m[2][2], m[2][3]},
                                    {m[3][0], m[3][2], m[3][3]}}});
    acc = acc + m[0][2] * det3<S>({{{m[1][0], m[1][1], m[1][3]},
                                    {m[2][0], m[2][1], m[2][3]},
                                    {m[3][0], m[3][1], m[3][3]}}});
    acc = acc - m[0][3] * det3<S>({{{m[1][0], m[1][1], m[1][2]},
                                    {m[2][0], m[2][1], m[2][2]},
                                    {m[3][0], m[3][1], m[3][2]}}});
    return acc;
}

}  // namespace detail

// Lorentz vector product of four vectors in R^5_1.
template <class S>
VecT<S, 5> lorentz_cross(const VecT<S, 5>& u1, const VecT<S, 5>& u2,
                         const VecT<S, 5>& u3, const VecT<S, 5>& u4) {
    const VecT<S, 5>* rows[4] = {&u1, &u2, &u3, &u4};
    VecT<S, 5> w;
    for (std::size_t a = 0; a < 5; ++a) {
        std::array<std::array<S, 4>, 4> minor;
        for (std::size_t r = 0; r < 4; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < 5; ++c) {
                if (c == a) continue;
                minor[r][cc++] = (*rows[r])[c];
            }
        }
        S d = detail::det4(minor);
        // det(e_a, u1..u4) = (-1)^a * minor; time component flips once more.
        const bool negate = (a % 2 == 1) != (a == 0);
        w[a] = negate ? S(-1.0 * d) : d;
    }
    return w;
}

// Lorentz vector product of three vectors in R^4_1.
template <class S>
VecT<S, 4> lorentz_cross(const VecT<S, 4>& u1, const VecT<S, 4>& u2,
                         const VecT<S, 4>& u3) {
    const VecT<S, 4>* rows[3] = {&u1, &u2, &u3};
    VecT<S, 4> w;
    for (std::size_t a = 0; a < 4; ++a) {
        std::array<std::array<S, 3>, 3> minor;
        for (std::size_t r = 0; r < 3; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < 4; ++c) {
                if (c == a) continue;
                minor[r][cc++] = (*rows[r])[c];
            }
        }
        S d = detail::det3(minor);
        const bool negate = (a % 2 == 1) != (a == 0);
        w[a] = negate ? S(-1.0 * d) : d;
    }
    return w;
}

// 2-vector of R^5_1 in Plucker coordinates.  Component order:
// (0,1) (0,2) (0,3) (0,4) (1,2) (1,3) (1,4) (2,3) (2,4) (3,4).
template <class S>
struct BivectorT {
    std::array<S, 10> p;

    static constexpr int index(int i, int j) {
        // i < j assumed
        constexpr int base[5] = {0, 4, 7, 9, 10};
        return base[i] + (j - i - 1);
    }
    const S& at(int i, int j) const { return p[index(i, j)]; }
    S& at(int i, int j) { return p[index(i, j)]; }
};

using Bivector5 = BivectorT<double>;

template <class S>
BivectorT<S> wedge(const VecT<S, 5>& u, const VecT<S, 5>& v) {
    BivectorT<S> b;
    int k = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) b.p[k++] = u[i] * v[j] - u[j] * v[i];
    return b;
}

template <class S>
BivectorT<S> operator+(const BivectorT<S>& a, const BivectorT<S>& b) {
    BivectorT<S> r;
    for (int k = 0; k < 10; ++k) r.p[k] = a.p[k] + b.p[k];
    return r;
}

template <class S>
BivectorT<S> operator-(const BivectorT<S>& a, const BivectorT<S>& b) {
    BivectorT<S> r;
    for (int k = 0; k < 10; ++k) r.p[k] = a.p[k] - b.p[k];
    return r;
}

template <class S, class C>
BivectorT<S> operator*(const C& a, const BivectorT<S>& b) {
    BivectorT<S> r;
    for (int k = 0; k < 10; ++k) r.p[k] = a * b.p[k];
    return r;
}

// Signature-(6,4) inner product on Lambda^2 R^5_1: the p_0k block is
// negative.  On pure bivectors this equals det(<u_i, v_j>) for any causal
// type of the spanned planes.
template <class S>
S grassmann_inner(const BivectorT<S>& a, const BivectorT<S>& b) {
    S acc = a.p[4] * b.p[4];  // p_12
    for (int k = 5; k < 10; ++k) acc = acc + a.p[k] * b.p[k];
    for (int k = 0; k < 4; ++k) acc = acc - a.p[k] * b.p[k];
    return acc;
}

enum class SpanKind { SpaceLike, TimeLike };

// Convention of the Grassmannian pseudo-metric: time-like spans take the
// opposite sign (-det of the Gram matrix).  Only meaningful for pure
// bivectors whose causal type is known to the caller.
template <class S>
S grassmann_inner(const BivectorT<S>& a, const BivectorT<S>& b, SpanKind hint) {
    S v = grassmann_inner(a, b);
    return hint == SpanKind::TimeLike ? S(-1.0 * v) : v;
}

// Left-hand sides of the five Plucker relations.
template <class S>
std::array<S, 5> plucker_relations(const BivectorT<S>& b) {
    const auto& q = [&b](int i, int j) -> const S& { return b.at(i, j); };
    return {
        q(0, 1) * q(2, 3) - q(0, 2) * q(1, 3) + q(0, 3) * q(1, 2),
        q(0, 1) * q(2, 4) - q(0, 2) * q(1, 4) + q(0, 4) * q(1, 2),
        q(0, 1) * q(3, 4) - q(0, 3) * q(1, 4) + q(0, 4) * q(1, 3),
        q(0, 2) * q(3, 4) - q(0, 3) * q(2, 4) + q(0, 4) * q(2, 3),
        q(1, 2) * q(3, 4) - q(1, 3) * q(2, 4) + q(1, 4) * q(2, 3),
    };
}

inline double plucker_residual(const Bivector5& b) {
    const auto r = plucker_relations(b);
    double m = 0.0;
    for (double v : r) m = std::max(m, std::abs(v));
    return m;
}

inline double euclid_norm2(const Bivector5& b) {
    double s = 0.0;
    for (double v : b.p) s += v * v;
    return s;
}

template <std::size_t N>
double euclid_norm2(const VecT<double, N>& u) {
    double s = 0.0;
    for (double v : u) s += v * v;
    return s;
}

inline bool is_pure(const Bivector5& b, double tol = 1e-9) {
    const double scale = euclid_norm2(b);
    return plucker_residual(b) <= tol * (scale > 0.0 ? scale : 1.0);
}

enum class Causal { TimeLike, LightLike, SpaceLike };

// Scale-normalized causal classification: |<x,x>| <= tol * |x|^2_E is
// light-like.
template <std::size_t N>
Causal causal_type(const VecT<double, N>& x, double tol = 1e-9) {
    const double q = lorentz_form(x, x);
    const double scale = euclid_norm2(x);
    if (std::abs(q) <= tol * (scale > 0.0 ? scale : 1.0))
        return Causal::LightLike;
    return q < 0.0 ? Causal::TimeLike : Causal::SpaceLike;
}

inline Causal causal_type(const Bivector5& b, double tol = 1e-9) {
    const double q = grassmann_inner(b, b);
    const double scale = euclid_norm2(b);
    if (std::abs(q) <= tol * (scale > 0.0 ? scale : 1.0))
        return Causal::LightLike;
    return q < 0.0 ? Causal::TimeLike : Causal::SpaceLike;
}

}  // namespace conformal
