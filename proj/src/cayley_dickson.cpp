#include "gaussconf/cayley_dickson.hpp"

#include <cmath>
#include <utility>

namespace gaussconf {

namespace {

void check_level(int level) {
    if (level < 0 || level > kMaxCdLevel) {
        throw input_error("CDElement level must be in [0, " + std::to_string(kMaxCdLevel) +
                          "], got " + std::to_string(level));
    }
}

// Conjugation negates every coefficient except the real part at any level:
// conj((a,b)) = (conj(a), -b) bottoms out at the identity on reals.
std::vector<double> conj_impl(std::vector<double> v) {
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
    return v;
}

std::vector<double> add_impl(std::vector<double> x, const std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

std::vector<double> sub_impl(std::vector<double> x, const std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return x;
}

std::vector<double> half(const std::vector<double>& v, bool upper) {
    const std::size_t h = v.size() / 2;
    return upper ? std::vector<double>(v.begin() + h, v.end())
                 : std::vector<double>(v.begin(), v.begin() + h);
}

std::vector<double> join(std::vector<double> lo, const std::vector<double>& hi) {
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

std::vector<double> mul_impl(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() == 1) return {x[0] * y[0]};
    const auto a = half(x, false);
    const auto b = half(x, true);
    const auto c = half(y, false);
    const auto d = half(y, true);
    // (a,b)(c,d) = (ac - d conj(b), conj(a) d + cb)
    auto first = sub_impl(mul_impl(a, c), mul_impl(d, conj_impl(b)));
    auto second = add_impl(mul_impl(conj_impl(a), d), mul_impl(c, b));
    return join(std::move(first), second);
}

}  // namespace

CDElement::CDElement(int level) : level_(level) {
    check_level(level);
    coeffs_.assign(std::size_t{1} << level, 0.0);
}

CDElement CDElement::real(int level, double value) {
    CDElement e(level);
    e.coeffs_[0] = value;
    return e;
}

CDElement CDElement::unit(int level, std::size_t index, double scale) {
    CDElement e(level);
    if (index >= e.size()) {
        throw input_error("basis index " + std::to_string(index) + " out of range for level " +
                          std::to_string(level));
    }
    e.coeffs_[index] = scale;
    return e;
}

CDElement CDElement::from_coeffs(std::vector<double> coeffs) {
    int level = 0;
    while ((std::size_t{1} << level) < coeffs.size()) ++level;
    if ((std::size_t{1} << level) != coeffs.size()) {
        throw input_error("coefficient count must be a power of two, got " +
                          std::to_string(coeffs.size()));
    }
    CDElement e(level);
    e.coeffs_ = std::move(coeffs);
    return e;
}

CDElement& CDElement::operator+=(const CDElement& rhs) {
    if (level_ != rhs.level_) throw input_error("CDElement level mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CDElement& CDElement::operator-=(const CDElement& rhs) {
    if (level_ != rhs.level_) throw input_error("CDElement level mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CDElement& CDElement::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

CDElement operator+(CDElement lhs, const CDElement& rhs) { return lhs += rhs; }
CDElement operator-(CDElement lhs, const CDElement& rhs) { return lhs -= rhs; }

CDElement operator-(const CDElement& a) {
    CDElement r = a;
    return r *= -1.0;
}

CDElement operator*(double s, CDElement a) { return a *= s; }
CDElement operator*(CDElement a, double s) { return a *= s; }

CDElement cd_multiply(const CDElement& a, const CDElement& b) {
    if (a.level() != b.level()) {
        throw input_error("cd_multiply level mismatch: " + std::to_string(a.level()) + " vs " +
                          std::to_string(b.level()));
    }
    return CDElement::from_coeffs(mul_impl(a.coeffs(), b.coeffs()));
}

CDElement cd_conjugate(const CDElement& a) {
    return CDElement::from_coeffs(conj_impl(a.coeffs()));
}

double cd_real_part(const CDElement& a) { return a[0]; }

double cd_norm_sq(const CDElement& a) {
    double s = 0.0;
    for (double c : a.coeffs()) s += c * c;
    return s;
}

double cd_norm(const CDElement& a) { return std::sqrt(cd_norm_sq(a)); }

std::optional<ZeroDivisorPair> find_zero_divisor_pair(int level, double tol) {
    check_level(level);
    const std::size_t dim = std::size_t{1} << level;

    auto term = [&](std::size_t p, std::size_t q, int sign) {
        CDElement e = CDElement::unit(level, p);
        e[q] = static_cast<double>(sign);
        return e;
    };
    auto label = [](std::size_t p, std::size_t q, int sign) {
        return "(e" + std::to_string(p) + (sign > 0 ? " + e" : " - e") + std::to_string(q) + ")";
    };

    for (std::size_t p = 0; p + 1 < dim; ++p) {
        for (std::size_t q = p + 1; q < dim; ++q) {
            for (int sl : {+1, -1}) {
                const CDElement lhs = term(p, q, sl);
                for (std::size_t r = 0; r + 1 < dim; ++r) {
                    for (std::size_t s = r + 1; s < dim; ++s) {
                        for (int sr : {+1, -1}) {
                            const CDElement rhs = term(r, s, sr);
                            const double pn = cd_norm(cd_multiply(lhs, rhs));
                            if (pn <= tol) {
                                ZeroDivisorPair found{lhs, rhs, cd_norm(lhs), cd_norm(rhs), pn,
                                                      label(p, q, sl) + label(r, s, sr)};
                                return found;
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace gaussconf
