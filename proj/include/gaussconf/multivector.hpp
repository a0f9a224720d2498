#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gaussconf/numeric.hpp"

namespace gaussconf {

inline constexpr int kMaxGenerators = 12;

// Dense element of the universal real Clifford algebra Cl_n with e_i^2 = -1.
// Blade e_A is stored at index bitmask(A) (bit i-1 set iff generator e_i is a
// factor), with generators in ascending order inside each blade.
class Multivector {
public:
    explicit Multivector(int n);

    static Multivector scalar(int n, double value);
    static Multivector blade(int n, unsigned mask, double coeff = 1.0);
    static Multivector from_coeffs(int n, std::vector<double> coeffs);

    int generators() const { return n_; }
    std::size_t size() const { return coeffs_.size(); }
    double operator[](unsigned mask) const { return coeffs_[mask]; }
    double& operator[](unsigned mask) { return coeffs_[mask]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    Multivector& operator+=(const Multivector& rhs);
    Multivector& operator-=(const Multivector& rhs);
    Multivector& operator*=(double s);

private:
    int n_;
    std::vector<double> coeffs_;
};

Multivector operator+(Multivector lhs, const Multivector& rhs);
Multivector operator-(Multivector lhs, const Multivector& rhs);
Multivector operator-(const Multivector& a);
Multivector operator*(double s, Multivector a);
Multivector operator*(Multivector a, double s);

// Geometric product; the e_i^2 = -1 contractions and the reordering sign are
// resolved per blade pair (see blade_product_sign).
Multivector operator*(const Multivector& a, const Multivector& b);

// Sign of e_A e_B relative to e_{A xor B}: transposition count to interleave
// the two ascending factor lists, times (-1) per common generator.
int blade_product_sign(unsigned a, unsigned b);

// Grade involution signs: conjugation maps a grade-k blade to
// (-1)^{k(k+1)/2} times itself, reversion to (-1)^{k(k-1)/2}.
Multivector conj(const Multivector& a);
Multivector reversion(const Multivector& a);

// Zeroes every blade whose grade differs from k; throws on k outside [0, n].
Multivector grade_project(const Multivector& a, int k);

double scalar_part(const Multivector& a);

// <a,b> = Sc(a conj(b)); on the blade basis this is the Euclidean coefficient
// inner product, which is how it is evaluated here.
double inner(const Multivector& a, const Multivector& b);

// Pseudo-norm sqrt(Sc(a conj(a))). Submultiplicative only up to 2^{n/2}.
double norm(const Multivector& a);

bool is_finite(const Multivector& a);

std::string blade_label(int n, unsigned mask);

// Necessary conditions for membership in Spin(n+1) as a product of two unit
// paravectors: grade content within {0,1,2} and a conj(a) = 1. scalar_free
// additionally reports Sc(a) = 0, the structural-frame case. This is not a
// full Spin decision procedure.
struct SpinStructureCheck {
    double grade_residual = 0.0;   // norm of grade > 2 content
    double unit_residual = 0.0;    // |a conj(a) - 1|
    double scalar_magnitude = 0.0; // |Sc(a)|
    bool grades_ok = false;
    bool unit_ok = false;
    bool scalar_free = false;

    bool passes() const { return grades_ok && unit_ok; }
};

SpinStructureCheck verify_spin_structure(const Multivector& a, double tol);

// Scalar plus vector part, identified with R^{n+1}; x[0] is the scalar.
struct Paravector {
    std::vector<double> x;

    Paravector() = default;
    explicit Paravector(int n) : x(static_cast<std::size_t>(n) + 1, 0.0) {}

    int n() const { return static_cast<int>(x.size()) - 1; }
    double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return x[static_cast<std::size_t>(i)]; }

    static Paravector unit(int n, int i, double scale = 1.0);

    Paravector& operator+=(const Paravector& rhs);
    Paravector& operator-=(const Paravector& rhs);
    Paravector& operator*=(double s);
};

Paravector operator+(Paravector lhs, const Paravector& rhs);
Paravector operator-(Paravector lhs, const Paravector& rhs);
Paravector operator-(const Paravector& a);
Paravector operator*(double s, Paravector a);
Paravector operator*(Paravector a, double s);

Paravector conj(const Paravector& a);
double norm_sq(const Paravector& a);
double norm(const Paravector& a);
double inner(const Paravector& a, const Paravector& b);
bool is_finite(const Paravector& a);

Multivector embed(const Paravector& a, int n);
inline Multivector embed(const Paravector& a) { return embed(a, a.n()); }

// Grade-0 and grade-1 content of a multivector as a paravector.
Paravector paravector_part(const Multivector& a);

// Norm of the grade >= 2 content, i.e. how far a is from being a paravector.
double paravector_residual(const Multivector& a);

// conj(a) / |a|^2; throws singular_error when |a| <= eps.
Paravector inverse(const Paravector& a, double eps = 1e-12);

}  // namespace gaussconf
