#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "gaussconf/multivector.hpp"
#include "gaussconf/numeric.hpp"
#include "gaussconf/octonion.hpp"

namespace gaussconf {

// The analysis pipeline is generic over the ambient algebra. An adapter
// provides the point space R^{n+1} (the map's domain and codomain) and the
// algebra the structural frames live in. For octonions the two coincide; for
// Cl_n the points are paravectors while frames are full multivectors.

struct OctonionAlgebra {
    using Point = Octonion;
    using Element = Octonion;
    static constexpr bool kClifford = false;

    std::string name() const { return "octonion"; }
    int coords() const { return 8; }      // x_0 .. x_7
    int frame_size() const { return 7; }  // Psi_1 .. Psi_7

    Point zero_point() const { return Octonion{}; }
    Point coord_unit(int i, double s = 1.0) const { return Octonion::unit(i, s); }
    double coord(const Point& p, int i) const { return p[i]; }

    Element embed(const Point& p) const { return p; }
    Element one() const { return Octonion::from_real(1.0); }
    Element basis(int k) const { return Octonion::unit(k); }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element conjugate(const Element& a) const { return conj(a); }
    double scalar(const Element& a) const { return real_part(a); }
    double dot(const Element& a, const Element& b) const { return inner(a, b); }
    double length(const Element& a) const { return norm(a); }
    Element invert_embedded(const Point& p, double eps) const { return inverse(p, eps); }
    bool valid_point(const Point& p) const { return is_finite(p); }
    std::vector<double> coefficients(const Element& a) const {
        return std::vector<double>(a.c.begin(), a.c.end());
    }
};

struct CliffordAlgebra {
    using Point = Paravector;
    using Element = Multivector;
    static constexpr bool kClifford = true;

    int n = 3;

    CliffordAlgebra() = default;
    explicit CliffordAlgebra(int generators) : n(generators) {
        if (n < 1 || n > kMaxGenerators) {
            throw input_error("CliffordAlgebra needs 1 <= n <= " +
                              std::to_string(kMaxGenerators));
        }
    }

    std::string name() const { return "clifford"; }
    int coords() const { return n + 1; }
    int frame_size() const { return n; }

    Point zero_point() const { return Paravector(n); }
    Point coord_unit(int i, double s = 1.0) const { return Paravector::unit(n, i, s); }
    double coord(const Point& p, int i) const { return p[i]; }

    Element embed(const Point& p) const { return gaussconf::embed(p, n); }
    Element one() const { return Multivector::scalar(n, 1.0); }
    Element basis(int k) const { return Multivector::blade(n, 1u << (k - 1)); }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element conjugate(const Element& a) const { return conj(a); }
    double scalar(const Element& a) const { return scalar_part(a); }
    double dot(const Element& a, const Element& b) const { return inner(a, b); }
    double length(const Element& a) const { return norm(a); }
    Element invert_embedded(const Point& p, double eps) const {
        return gaussconf::embed(inverse(p, eps), n);
    }
    bool valid_point(const Point& p) const { return p.n() == n && is_finite(p); }
    std::vector<double> coefficients(const Element& a) const { return a.coeffs(); }
};

// A map under test is a black box from points to points. Analytic partials
// are optional; when present they are preferred by numeric_jacobian and the
// finite differences serve as a cross-check.
template <class Algebra>
struct MapUnderTest {
    using Point = typename Algebra::Point;

    std::string label;
    std::function<Point(const Point&)> eval;
    std::function<std::vector<Point>(const Point&)> partials;  // optional
    bool concurrent_safe = false;
};

template <class Algebra>
struct JacobianSample {
    using Point = typename Algebra::Point;

    Point z;
    std::vector<Point> partials;  // d f / d x_i for i = 0 .. coords()-1
    double h = 0.0;
    int scheme = 2;                      // 2 or 4; 0 when analytic partials were used
    double cross_check_residual = 0.0;   // max_i |analytic_i - fd_i|, when both exist
};

namespace detail {

template <class A>
typename A::Point probe(const A& alg, const MapUnderTest<A>& f, const typename A::Point& p) {
    auto v = f.eval(p);
    if (!alg.valid_point(v)) {
        throw map_contract_error("map '" + f.label + "' left its declared codomain");
    }
    return v;
}

}  // namespace detail

// Central differences per coordinate direction. With analytic partials on the
// map, those are returned instead and cross_check_residual records the
// disagreement against the stencil.
template <class A>
JacobianSample<A> numeric_jacobian(const A& alg, const MapUnderTest<A>& f,
                                   const typename A::Point& z, const NumericPolicy& pol) {
    using Point = typename A::Point;
    const double h = pol.step_for([&] {
        double s = 0.0;
        for (int i = 0; i < alg.coords(); ++i) s += alg.coord(z, i) * alg.coord(z, i);
        return std::sqrt(s);
    }());
    if (!(h > 0.0)) throw input_error("finite-difference step must be positive");

    JacobianSample<A> sample;
    sample.z = z;
    sample.h = h;
    sample.scheme = pol.fd_order;
    sample.partials.reserve(static_cast<std::size_t>(alg.coords()));
    for (int i = 0; i < alg.coords(); ++i) {
        const Point ei = alg.coord_unit(i);
        if (pol.fd_order == 4) {
            const Point f2p = detail::probe(alg, f, z + ei * (2.0 * h));
            const Point f1p = detail::probe(alg, f, z + ei * h);
            const Point f1m = detail::probe(alg, f, z - ei * h);
            const Point f2m = detail::probe(alg, f, z - ei * (2.0 * h));
            sample.partials.push_back((f2m - f2p + (f1p - f1m) * 8.0) * (1.0 / (12.0 * h)));
        } else {
            const Point fp = detail::probe(alg, f, z + ei * h);
            const Point fm = detail::probe(alg, f, z - ei * h);
            sample.partials.push_back((fp - fm) * (1.0 / (2.0 * h)));
        }
    }

    if (f.partials) {
        auto analytic = f.partials(z);
        if (static_cast<int>(analytic.size()) != alg.coords()) {
            throw map_contract_error("map '" + f.label + "' returned " +
                                     std::to_string(analytic.size()) + " partials, expected " +
                                     std::to_string(alg.coords()));
        }
        double worst = 0.0;
        for (int i = 0; i < alg.coords(); ++i) {
            if (!alg.valid_point(analytic[static_cast<std::size_t>(i)])) {
                throw map_contract_error("analytic partials of '" + f.label +
                                         "' left the codomain");
            }
            worst = std::max(
                worst, norm(analytic[static_cast<std::size_t>(i)] -
                            sample.partials[static_cast<std::size_t>(i)]));
        }
        sample.cross_check_residual = worst;
        sample.partials = std::move(analytic);
        sample.scheme = 0;
    }
    return sample;
}

enum class Verdict { kConformal, kNotConformal, kDegenerate };

const char* to_string(Verdict v);

struct ConformalityCheck {
    Verdict verdict = Verdict::kDegenerate;
    double lambda = 0.0;            // mean of |df/dx_i|^2; meaningful iff conformal
    double scale = 0.0;             // max_i |df/dx_i|
    double residual_norm_eq = 0.0;  // max_i | |d0| - |di| | / scale
    double residual_orth = 0.0;     // max_{i<j} |<di, dj>| / scale^2
};

// Decision procedure for Gauss conformality at one point: all partials share
// one norm and are mutually orthogonal, i.e. <d_i, d_k> = delta_ik lambda(z).
// Degeneracy (|d_0| below tol * scale) is decided before anything else.
template <class A>
ConformalityCheck check_conformality_conditions(const A& alg, const JacobianSample<A>& s,
                                                double tol) {
    const int m = alg.coords();
    if (static_cast<int>(s.partials.size()) != m) {
        throw input_error("jacobian sample has wrong partial count");
    }
    ConformalityCheck out;
    std::vector<double> norms(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) norms[static_cast<std::size_t>(i)] = norm(s.partials[i]);
    out.scale = *std::max_element(norms.begin(), norms.end());

    if (norms[0] <= tol * out.scale || out.scale == 0.0) {
        out.verdict = Verdict::kDegenerate;
        return out;
    }

    double lambda = 0.0;
    for (int i = 0; i < m; ++i) {
        lambda += norms[static_cast<std::size_t>(i)] * norms[static_cast<std::size_t>(i)];
        out.residual_norm_eq =
            std::max(out.residual_norm_eq,
                     std::abs(norms[0] - norms[static_cast<std::size_t>(i)]) / out.scale);
    }
    out.lambda = lambda / m;

    const double scale2 = out.scale * out.scale;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            double dot = 0.0;
            for (int k = 0; k < m; ++k) {
                dot += alg.coord(s.partials[static_cast<std::size_t>(i)], k) *
                       alg.coord(s.partials[static_cast<std::size_t>(j)], k);
            }
            out.residual_orth = std::max(out.residual_orth, std::abs(dot) / scale2);
        }
    }

    out.verdict = (out.residual_norm_eq <= tol && out.residual_orth <= tol)
                      ? Verdict::kConformal
                      : Verdict::kNotConformal;
    return out;
}

// Psi_k(z) = (df/dx_k)(df/dx_0)^{-1} for k = 1..n, products taken in the
// ambient algebra. residual_scalar and residual_orth are filled by
// verify_frame_properties; in the Clifford case each Psi_k also carries its
// spin-structure verdict.
template <class A>
struct StructuralFrame {
    std::vector<typename A::Element> psis;
    double residual_scalar = 0.0;  // max_k |Re Psi_k| resp. |Sc Psi_k|
    double residual_orth = 0.0;    // max_{i<=j} |<Psi_i, Psi_j> - delta_ij|
    std::vector<SpinStructureCheck> spin;

    bool accepted(double tol) const {
        if (residual_scalar > tol || residual_orth > tol) return false;
        for (const auto& s : spin) {
            if (!(s.passes() && s.scalar_free)) return false;
        }
        return true;
    }
};

template <class A>
void verify_frame_properties(const A& alg, StructuralFrame<A>& frame, double tol) {
    frame.residual_scalar = 0.0;
    frame.residual_orth = 0.0;
    frame.spin.clear();
    const int n = static_cast<int>(frame.psis.size());
    for (int i = 0; i < n; ++i) {
        frame.residual_scalar =
            std::max(frame.residual_scalar,
                     std::abs(alg.scalar(frame.psis[static_cast<std::size_t>(i)])));
        for (int j = i; j < n; ++j) {
            const double expected = (i == j) ? 1.0 : 0.0;
            const double got = alg.dot(frame.psis[static_cast<std::size_t>(i)],
                                       frame.psis[static_cast<std::size_t>(j)]);
            frame.residual_orth = std::max(frame.residual_orth, std::abs(got - expected));
        }
    }
    if constexpr (A::kClifford) {
        for (const auto& psi : frame.psis) frame.spin.push_back(verify_spin_structure(psi, tol));
    }
}

template <class A>
StructuralFrame<A> extract_structural_frame(const A& alg, const JacobianSample<A>& s,
                                            const NumericPolicy& pol) {
    if (s.partials.empty()) throw input_error("empty jacobian sample");
    double scale = 0.0;
    for (const auto& p : s.partials) scale = std::max(scale, norm(p));
    const double d0 = norm(s.partials[0]);
    if (d0 <= pol.singular_eps * std::max(1.0, scale)) {
        throw degenerate_error("df/dx_0 vanishes; structural frame undefined here");
    }
    StructuralFrame<A> frame;
    const auto inv0 = alg.invert_embedded(s.partials[0], pol.singular_eps);
    frame.psis.reserve(static_cast<std::size_t>(alg.frame_size()));
    for (int k = 1; k <= alg.frame_size(); ++k) {
        frame.psis.push_back(alg.mul(alg.embed(s.partials[static_cast<std::size_t>(k)]), inv0));
    }
    verify_frame_properties(alg, frame, pol.derivative_tol);
    return frame;
}

// Max-norm residual of df = (dx_0 + Psi_1 dx_1 + ... + Psi_n dx_n) df/dx_0
// over the given displacement directions, parenthesized exactly as written.
template <class A>
double check_differential_identity(const A& alg, const JacobianSample<A>& s,
                                   const StructuralFrame<A>& frame,
                                   const std::vector<typename A::Point>& directions) {
    using Element = typename A::Element;
    double worst = 0.0;
    for (const auto& d : directions) {
        Element lhs = alg.embed(s.partials[0]) * alg.coord(d, 0);
        for (int i = 1; i < alg.coords(); ++i) {
            lhs += alg.embed(s.partials[static_cast<std::size_t>(i)]) * alg.coord(d, i);
        }
        Element basis_sum = alg.one() * alg.coord(d, 0);
        for (int k = 1; k <= alg.frame_size(); ++k) {
            basis_sum += frame.psis[static_cast<std::size_t>(k - 1)] * alg.coord(d, k);
        }
        const Element rhs = alg.mul(basis_sum, alg.embed(s.partials[0]));
        worst = std::max(worst, alg.length(lhs - rhs));
    }
    return worst;
}

enum class FrameContent {
    kImaginaryOctonions,  // octonion frames: imaginary units, anticommutators vanish
    kVectors,             // pure grade-1 Clifford frame
    kBivectors,           // pure grade-2 Clifford frame
    kMixed,               // mixed grades: neither bracket is expected to vanish
};

const char* to_string(FrameContent c);

struct BracketReport {
    FrameContent content = FrameContent::kMixed;
    // Octonions: brackets of the Psi_k themselves. Clifford: anticommutators
    // restricted to the grade-1 parts, commutators to the grade-2 parts.
    double max_anticommutator = 0.0;
    double max_commutator = 0.0;
};

template <class A>
BracketReport bracket_check(const A& alg, const StructuralFrame<A>& frame, double tol) {
    BracketReport report;
    const int n = static_cast<int>(frame.psis.size());

    auto scan = [&](const std::vector<typename A::Element>& parts, bool anticommutator) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                auto ab = alg.mul(parts[static_cast<std::size_t>(i)],
                                  parts[static_cast<std::size_t>(j)]);
                auto ba = alg.mul(parts[static_cast<std::size_t>(j)],
                                  parts[static_cast<std::size_t>(i)]);
                worst = std::max(worst, alg.length(anticommutator ? ab + ba : ab - ba));
            }
        }
        return worst;
    };

    if constexpr (!A::kClifford) {
        report.content = FrameContent::kImaginaryOctonions;
        report.max_anticommutator = scan(frame.psis, true);
        report.max_commutator = scan(frame.psis, false);
        return report;
    } else {
        std::vector<typename A::Element> vec_parts;
        std::vector<typename A::Element> biv_parts;
        bool all_vectors = true;
        bool all_bivectors = true;
        for (const auto& psi : frame.psis) {
            auto v = grade_project(psi, 1);
            auto b = grade_project(psi, 2);
            const double scale = std::max(1.0, alg.length(psi));
            if (alg.length(b) > tol * scale) all_vectors = false;
            if (alg.length(v) > tol * scale) all_bivectors = false;
            vec_parts.push_back(std::move(v));
            biv_parts.push_back(std::move(b));
        }
        report.content = all_vectors    ? FrameContent::kVectors
                         : all_bivectors ? FrameContent::kBivectors
                                         : FrameContent::kMixed;
        report.max_anticommutator = scan(vec_parts, true);
        report.max_commutator = scan(biv_parts, false);
        return report;
    }
}

struct FrameConstancySummary {
    enum class Class { kNonConstant, kConstant, kStandardConstant };

    int points_used = 0;
    int degenerate_excluded = 0;
    double variation = 0.0;               // max over point pairs and k of sup-norm diff
    double deviation_from_standard = 0.0; // max over points and k of |Psi_k - e_k|_inf
    Class classification = Class::kNonConstant;
    std::vector<std::string> warnings;
};

const char* to_string(FrameConstancySummary::Class c);

// Extracts frames at every non-degenerate sample point and classifies the map
// by the coefficient sup-norm spread of the frames: constant when the spread
// stays within pol.frame_tol, standard-constant when the frames additionally
// coincide with [e_1, ..., e_n].
template <class A>
FrameConstancySummary frame_constancy_analysis(const A& alg, const MapUnderTest<A>& f,
                                               const std::vector<typename A::Point>& points,
                                               const NumericPolicy& pol) {
    if (points.size() < 2) {
        throw input_error("frame constancy analysis needs at least 2 points");
    }
    FrameConstancySummary summary;
    std::vector<std::vector<std::vector<double>>> frames;  // point -> k -> coefficients
    for (std::size_t p = 0; p < points.size(); ++p) {
        try {
            const auto sample = numeric_jacobian(alg, f, points[p], pol);
            const auto check = check_conformality_conditions(alg, sample, pol.derivative_tol);
            if (check.verdict == Verdict::kDegenerate) {
                throw degenerate_error("df/dx_0 vanishes");
            }
            const auto frame = extract_structural_frame(alg, sample, pol);
            std::vector<std::vector<double>> coeffs;
            for (const auto& psi : frame.psis) coeffs.push_back(alg.coefficients(psi));
            frames.push_back(std::move(coeffs));
        } catch (const degenerate_error& e) {
            summary.warnings.push_back("point " + std::to_string(p) +
                                       " excluded as degenerate: " + e.what());
            ++summary.degenerate_excluded;
        }
    }
    summary.points_used = static_cast<int>(frames.size());
    if (frames.size() < 2) {
        throw degenerate_error("fewer than 2 non-degenerate points in constancy analysis");
    }

    auto sup_diff = [](const std::vector<double>& a, const std::vector<double>& b) {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst, std::abs(a[i] - b[i]));
        }
        return worst;
    };

    for (std::size_t p = 0; p < frames.size(); ++p) {
        for (std::size_t q = p + 1; q < frames.size(); ++q) {
            for (std::size_t k = 0; k < frames[p].size(); ++k) {
                summary.variation = std::max(summary.variation, sup_diff(frames[p][k], frames[q][k]));
            }
        }
        for (int k = 1; k <= alg.frame_size(); ++k) {
            const auto ek = alg.coefficients(alg.basis(k));
            summary.deviation_from_standard =
                std::max(summary.deviation_from_standard,
                         sup_diff(frames[p][static_cast<std::size_t>(k - 1)], ek));
        }
    }

    if (summary.variation <= pol.frame_tol) {
        summary.classification = summary.deviation_from_standard <= pol.frame_tol
                                     ? FrameConstancySummary::Class::kStandardConstant
                                     : FrameConstancySummary::Class::kConstant;
    } else {
        summary.classification = FrameConstancySummary::Class::kNonConstant;
    }
    return summary;
}

}  // namespace gaussconf
