#include "gaussconf/multivector.hpp"

#include <bit>

namespace gaussconf {

namespace {

void check_generators(int n) {
    if (n < 0 || n > kMaxGenerators) {
        throw input_error("Cl_n generator count must be in [0, " +
                          std::to_string(kMaxGenerators) + "], got " + std::to_string(n));
    }
}

int grade_of(unsigned mask) { return std::popcount(mask); }

int involution_sign(int k, bool conjugation) {
    const int t = conjugation ? k * (k + 1) / 2 : k * (k - 1) / 2;
    return (t % 2 == 0) ? +1 : -1;
}

Multivector apply_grade_signs(const Multivector& a, bool conjugation) {
    Multivector r(a.generators());
    for (unsigned m = 0; m < a.size(); ++m) {
        r[m] = involution_sign(grade_of(m), conjugation) * a[m];
    }
    return r;
}

}  // namespace

Multivector::Multivector(int n) : n_(n) {
    check_generators(n);
    coeffs_.assign(std::size_t{1} << n, 0.0);
}

Multivector Multivector::scalar(int n, double value) {
    Multivector a(n);
    a.coeffs_[0] = value;
    return a;
}

Multivector Multivector::blade(int n, unsigned mask, double coeff) {
    Multivector a(n);
    if (mask >= a.size()) throw input_error("blade mask out of range for Cl_" + std::to_string(n));
    a.coeffs_[mask] = coeff;
    return a;
}

Multivector Multivector::from_coeffs(int n, std::vector<double> coeffs) {
    Multivector a(n);
    if (coeffs.size() != a.size()) {
        throw input_error("Cl_" + std::to_string(n) + " needs " + std::to_string(a.size()) +
                          " coefficients, got " + std::to_string(coeffs.size()));
    }
    a.coeffs_ = std::move(coeffs);
    return a;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
    if (n_ != rhs.n_) throw input_error("multivector dimension mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
    if (n_ != rhs.n_) throw input_error("multivector dimension mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }

Multivector operator-(const Multivector& a) {
    Multivector r = a;
    return r *= -1.0;
}

Multivector operator*(double s, Multivector a) { return a *= s; }
Multivector operator*(Multivector a, double s) { return a *= s; }

int blade_product_sign(unsigned a, unsigned b) {
    int swaps = 0;
    unsigned t = a >> 1;
    while (t != 0) {
        swaps += std::popcount(t & b);
        t >>= 1;
    }
    // Each shared generator contracts with e_i^2 = -1.
    swaps += std::popcount(a & b);
    return (swaps % 2 == 0) ? +1 : -1;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
    if (a.generators() != b.generators()) throw input_error("multivector dimension mismatch");
    Multivector r(a.generators());
    for (unsigned i = 0; i < a.size(); ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (unsigned j = 0; j < b.size(); ++j) {
            const double bj = b[j];
            if (bj == 0.0) continue;
            r[i ^ j] += blade_product_sign(i, j) * ai * bj;
        }
    }
    return r;
}

Multivector conj(const Multivector& a) { return apply_grade_signs(a, true); }

Multivector reversion(const Multivector& a) { return apply_grade_signs(a, false); }

Multivector grade_project(const Multivector& a, int k) {
    if (k < 0 || k > a.generators()) {
        throw input_error("grade " + std::to_string(k) + " out of range for Cl_" +
                          std::to_string(a.generators()));
    }
    Multivector r(a.generators());
    for (unsigned m = 0; m < a.size(); ++m) {
        if (grade_of(m) == k) r[m] = a[m];
    }
    return r;
}

double scalar_part(const Multivector& a) { return a[0]; }

double inner(const Multivector& a, const Multivector& b) {
    if (a.generators() != b.generators()) throw input_error("multivector dimension mismatch");
    double s = 0.0;
    for (unsigned m = 0; m < a.size(); ++m) s += a[m] * b[m];
    return s;
}

double norm(const Multivector& a) { return std::sqrt(inner(a, a)); }

bool is_finite(const Multivector& a) {
    for (double c : a.coeffs())
        if (!std::isfinite(c)) return false;
    return true;
}

std::string blade_label(int n, unsigned mask) {
    if (mask == 0) return "1";
    const bool wide = n > 9;
    std::string s = "e";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
        if (mask & (1u << (i - 1))) {
            if (!first && wide) s += "_";
            s += std::to_string(i);
            first = false;
        }
    }
    return s;
}

SpinStructureCheck verify_spin_structure(const Multivector& a, double tol) {
    SpinStructureCheck check;
    double high = 0.0;
    for (unsigned m = 0; m < a.size(); ++m) {
        if (grade_of(m) > 2) high += a[m] * a[m];
    }
    check.grade_residual = std::sqrt(high);
    check.unit_residual = norm(a * conj(a) - Multivector::scalar(a.generators(), 1.0));
    check.scalar_magnitude = std::abs(scalar_part(a));
    check.grades_ok = check.grade_residual <= tol;
    check.unit_ok = check.unit_residual <= tol;
    check.scalar_free = check.scalar_magnitude <= tol;
    return check;
}

Paravector Paravector::unit(int n, int i, double scale) {
    Paravector p(n);
    if (i < 0 || i > n) throw input_error("paravector coordinate out of range");
    p.x[static_cast<std::size_t>(i)] = scale;
    return p;
}

Paravector& Paravector::operator+=(const Paravector& rhs) {
    if (x.size() != rhs.x.size()) throw input_error("paravector dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += rhs.x[i];
    return *this;
}

Paravector& Paravector::operator-=(const Paravector& rhs) {
    if (x.size() != rhs.x.size()) throw input_error("paravector dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= rhs.x[i];
    return *this;
}

Paravector& Paravector::operator*=(double s) {
    for (double& v : x) v *= s;
    return *this;
}

Paravector operator+(Paravector lhs, const Paravector& rhs) { return lhs += rhs; }
Paravector operator-(Paravector lhs, const Paravector& rhs) { return lhs -= rhs; }

Paravector operator-(const Paravector& a) {
    Paravector r = a;
    return r *= -1.0;
}

Paravector operator*(double s, Paravector a) { return a *= s; }
Paravector operator*(Paravector a, double s) { return a *= s; }

Paravector conj(const Paravector& a) {
    Paravector r = a;
    for (std::size_t i = 1; i < r.x.size(); ++i) r.x[i] = -r.x[i];
    return r;
}

double norm_sq(const Paravector& a) {
    double s = 0.0;
    for (double v : a.x) s += v * v;
    return s;
}

double norm(const Paravector& a) { return std::sqrt(norm_sq(a)); }

double inner(const Paravector& a, const Paravector& b) {
    if (a.x.size() != b.x.size()) throw input_error("paravector dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.x.size(); ++i) s += a.x[i] * b.x[i];
    return s;
}

bool is_finite(const Paravector& a) {
    for (double v : a.x)
        if (!std::isfinite(v)) return false;
    return true;
}

Multivector embed(const Paravector& a, int n) {
    if (a.n() != n) throw input_error("paravector dimension mismatch in embed");
    Multivector r(n);
    r[0] = a[0];
    for (int i = 1; i <= n; ++i) r[1u << (i - 1)] = a[i];
    return r;
}

Paravector paravector_part(const Multivector& a) {
    Paravector p(a.generators());
    p[0] = a[0];
    for (int i = 1; i <= a.generators(); ++i) p[i] = a[1u << (i - 1)];
    return p;
}

double paravector_residual(const Multivector& a) {
    double s = 0.0;
    for (unsigned m = 0; m < a.size(); ++m) {
        if (grade_of(m) >= 2) s += a[m] * a[m];
    }
    return std::sqrt(s);
}

Paravector inverse(const Paravector& a, double eps) {
    const double n2 = norm_sq(a);
    if (std::sqrt(n2) <= eps) {
        throw singular_error("paravector inverse of (near-)zero element");
    }
    return conj(a) * (1.0 / n2);
}

}  // namespace gaussconf
