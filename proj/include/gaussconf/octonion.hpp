#pragma once

#include <array>
#include <cmath>

#include "gaussconf/numeric.hpp"

namespace gaussconf {

// x_0 + x_1 e_1 + ... + x_7 e_7 in the Cayley basis with e_4 = e_1 e_2,
// e_5 = e_1 e_3, e_6 = e_2 e_3 and e_7 = e_4 e_3. The product is driven by
// the 7x7 unit table (see octonion.cpp) extended with e_0 = 1 as neutral
// element, not by the doubling recursion in cayley_dickson.hpp.
struct Octonion {
    std::array<double, 8> c{};

    Octonion() = default;
    Octonion(double x0, double x1, double x2, double x3, double x4, double x5, double x6,
             double x7)
        : c{x0, x1, x2, x3, x4, x5, x6, x7} {}

    static Octonion from_real(double x) {
        Octonion o;
        o.c[0] = x;
        return o;
    }

    static Octonion unit(int i, double scale = 1.0);

    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    Octonion& operator+=(const Octonion& rhs) {
        for (int i = 0; i < 8; ++i) c[i] += rhs.c[i];
        return *this;
    }
    Octonion& operator-=(const Octonion& rhs) {
        for (int i = 0; i < 8; ++i) c[i] -= rhs.c[i];
        return *this;
    }
    Octonion& operator*=(double s) {
        for (double& x : c) x *= s;
        return *this;
    }
};

// e_i e_j = sign * e_index with i, j in 0..7.
struct BasisProduct {
    int sign;
    int index;
};

BasisProduct octonion_basis_product(int i, int j);

inline Octonion operator+(Octonion lhs, const Octonion& rhs) { return lhs += rhs; }
inline Octonion operator-(Octonion lhs, const Octonion& rhs) { return lhs -= rhs; }
inline Octonion operator-(const Octonion& a) {
    Octonion r = a;
    return r *= -1.0;
}
inline Octonion operator*(double s, Octonion a) { return a *= s; }
inline Octonion operator*(Octonion a, double s) { return a *= s; }

Octonion operator*(const Octonion& a, const Octonion& b);

inline Octonion conj(const Octonion& a) {
    Octonion r = a;
    for (int i = 1; i < 8; ++i) r.c[i] = -r.c[i];
    return r;
}

inline double real_part(const Octonion& a) { return a.c[0]; }

inline double norm_sq(const Octonion& a) {
    double s = 0.0;
    for (double x : a.c) s += x * x;
    return s;
}

inline double norm(const Octonion& a) { return std::sqrt(norm_sq(a)); }

// <a,b> = sum a_i b_i = Re(a conj(b)).
inline double inner(const Octonion& a, const Octonion& b) {
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
    return s;
}

// conj(a) / |a|^2; throws singular_error when |a| <= eps.
Octonion inverse(const Octonion& a, double eps = 1e-12);

inline bool is_finite(const Octonion& a) {
    for (double x : a.c)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace gaussconf
