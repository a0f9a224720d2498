#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gaussconf/numeric.hpp"

namespace gaussconf {

// Element of the level-L doubling algebra: 2^L real coefficients, index 0 is
// the real part. Level 0 = R, 1 = C, 2 = H, 3 = O, 4 = sedenions.
//
// The product is the recursive pair formula
//     (a,b) (c,d) = (ac - d conj(b), conj(a) d + cb)
// with plain real multiplication at level 0. Basis labeling follows raw index
// order of the doubled pairs; it is not the labeling of the octonion table in
// octonion.hpp, so only basis-independent identities are comparable between
// the two (see tests).
class CDElement {
public:
    explicit CDElement(int level);

    static CDElement real(int level, double value);
    static CDElement unit(int level, std::size_t index, double scale = 1.0);
    static CDElement from_coeffs(std::vector<double> coeffs);

    int level() const { return level_; }
    std::size_t size() const { return coeffs_.size(); }
    double operator[](std::size_t i) const { return coeffs_[i]; }
    double& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    CDElement& operator+=(const CDElement& rhs);
    CDElement& operator-=(const CDElement& rhs);
    CDElement& operator*=(double s);

private:
    int level_;
    std::vector<double> coeffs_;
};

inline constexpr int kMaxCdLevel = 6;

CDElement operator+(CDElement lhs, const CDElement& rhs);
CDElement operator-(CDElement lhs, const CDElement& rhs);
CDElement operator-(const CDElement& a);
CDElement operator*(double s, CDElement a);
CDElement operator*(CDElement a, double s);

CDElement cd_multiply(const CDElement& a, const CDElement& b);
CDElement cd_conjugate(const CDElement& a);

double cd_real_part(const CDElement& a);
double cd_norm_sq(const CDElement& a);
double cd_norm(const CDElement& a);

// Two nonzero elements with a vanishing product, as found by exhaustive
// search over (e_p +/- e_q, e_r +/- e_s) with p < q and r < s.
struct ZeroDivisorPair {
    CDElement lhs;
    CDElement rhs;
    double lhs_norm = 0.0;
    double rhs_norm = 0.0;
    double product_norm = 0.0;
    std::string description;
};

// Returns the first pair (in deterministic search order) whose product norm is
// at or below tol, or nullopt when the algebra at this level has none in the
// searched family (levels <= 3).
std::optional<ZeroDivisorPair> find_zero_divisor_pair(int level, double tol = 1e-12);

}  // namespace gaussconf
