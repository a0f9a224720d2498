#include "gaussconf/moebius.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace gaussconf {

const char* to_string(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::kTranslation: return "translation";
        case GeneratorKind::kDilation: return "dilation";
        case GeneratorKind::kRotation: return "rotation";
        case GeneratorKind::kInversion: return "inversion";
    }
    return "unknown";
}

// ---------------------------------------------------------------- octonions

OctGenerator OctGenerator::translation(const Octonion& offset) {
    if (!is_finite(offset)) throw input_error("translation offset must be finite");
    OctGenerator g;
    g.kind = GeneratorKind::kTranslation;
    g.w = offset;
    return g;
}

OctGenerator OctGenerator::dilation(double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw input_error("dilation factor must be positive and finite");
    }
    OctGenerator g;
    g.kind = GeneratorKind::kDilation;
    g.t = factor;
    return g;
}

OctGenerator OctGenerator::rotation(const Octonion& unit) {
    const double n = norm(unit);
    if (!(n > 1e-12) || !is_finite(unit)) {
        throw input_error("rotation element must be invertible");
    }
    OctGenerator g;
    g.kind = GeneratorKind::kRotation;
    g.u = unit * (1.0 / n);
    return g;
}

OctGenerator OctGenerator::inversion() {
    OctGenerator g;
    g.kind = GeneratorKind::kInversion;
    return g;
}

Octonion apply_generator(const OctGenerator& g, const Octonion& z, const NumericPolicy& pol) {
    switch (g.kind) {
        case GeneratorKind::kTranslation:
            return z + g.w;
        case GeneratorKind::kDilation:
            return z * g.t;
        case GeneratorKind::kRotation:
            return (g.u * z) * inverse(g.u, pol.singular_eps);
        case GeneratorKind::kInversion: {
            const double n = norm(z);
            if (n <= pol.pole_eps * (1.0 + n)) {
                throw pole_error("inversion pole at |z| = " + std::to_string(n));
            }
            return conj(z) * (1.0 / (n * n));
        }
    }
    throw input_error("unknown generator kind");
}

namespace {

OctMoebiusCoeffs generator_coeffs(const OctGenerator& g) {
    const Octonion one = Octonion::from_real(1.0);
    const Octonion zero{};
    switch (g.kind) {
        case GeneratorKind::kTranslation: return {one, g.w, zero, one};
        case GeneratorKind::kDilation: return {Octonion::from_real(g.t), zero, zero, one};
        case GeneratorKind::kRotation: return {g.u, zero, zero, g.u};
        case GeneratorKind::kInversion: return {zero, one, one, zero};
    }
    throw input_error("unknown generator kind");
}

}  // namespace

OctonionMoebius OctonionMoebius::identity() {
    OctonionMoebius m;
    m.coeffs_ = OctMoebiusCoeffs{Octonion::from_real(1.0), Octonion{}, Octonion{},
                                 Octonion::from_real(1.0)};
    m.validated_ = true;
    return m;
}

OctonionMoebius OctonionMoebius::from_generator(const OctGenerator& g) {
    OctonionMoebius m;
    m.word_ = {g};
    m.coeffs_ = generator_coeffs(g);
    m.validated_ = true;
    return m;
}

OctonionMoebius OctonionMoebius::from_word(std::vector<OctGenerator> word) {
    if (word.size() == 1) return from_generator(word[0]);
    OctonionMoebius m;
    m.word_ = std::move(word);
    m.validated_ = true;
    return m;
}

OctonionMoebius OctonionMoebius::raw(const Octonion& a, const Octonion& b, const Octonion& c,
                                     const Octonion& d) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(d)) {
        throw input_error("raw Moebius coefficients must be finite");
    }
    OctonionMoebius m;
    m.coeffs_ = OctMoebiusCoeffs{a, b, c, d};
    m.validated_ = false;
    return m;
}

const OctMoebiusCoeffs& OctonionMoebius::coefficients() const {
    if (!coeffs_) {
        throw input_error("composite generator word has no faithful coefficient quadruple");
    }
    return *coeffs_;
}

bool OctonionMoebius::involves_inversion() const {
    for (const auto& g : word_) {
        if (g.kind == GeneratorKind::kInversion) return true;
    }
    if (word_.empty() && coeffs_) return norm(coeffs_->c) > 0.0;
    return false;
}

Octonion OctonionMoebius::eval(const Octonion& z, const NumericPolicy& pol) const {
    if (!word_.empty()) {
        Octonion w = z;
        for (const auto& g : word_) w = apply_generator(g, w, pol);
        return w;
    }
    const auto& [a, b, c, d] = *coeffs_;
    const Octonion den = c * z + d;
    if (norm(den) <= pol.pole_eps * (1.0 + norm(z))) {
        throw pole_error("Moebius pole: |cz + d| = " + std::to_string(norm(den)));
    }
    return (a * z + b) * inverse(den, pol.singular_eps);
}

OctonionMoebius compose(const OctonionMoebius& outer, const OctonionMoebius& inner) {
    if (!outer.validated() || !inner.validated()) {
        throw input_error("octonionic composition is defined for generator-built maps only");
    }
    std::vector<OctGenerator> word = inner.word();
    word.insert(word.end(), outer.word().begin(), outer.word().end());
    if (word.empty()) return OctonionMoebius::identity();
    return OctonionMoebius::from_word(std::move(word));
}

// ----------------------------------------------------------------- clifford

CliffGenerator CliffGenerator::translation(const Paravector& offset) {
    if (!is_finite(offset)) throw input_error("translation offset must be finite");
    CliffGenerator g;
    g.kind = GeneratorKind::kTranslation;
    g.w = offset;
    return g;
}

CliffGenerator CliffGenerator::dilation(double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw input_error("dilation factor must be positive and finite");
    }
    CliffGenerator g;
    g.kind = GeneratorKind::kDilation;
    g.t = factor;
    return g;
}

CliffGenerator CliffGenerator::rotation(std::vector<Paravector> factors) {
    if (factors.empty()) throw input_error("rotation needs at least one paravector factor");
    for (const auto& p : factors) {
        if (!(norm(p) > 1e-12) || !is_finite(p)) {
            throw input_error("rotation factors must be invertible paravectors");
        }
    }
    CliffGenerator g;
    g.kind = GeneratorKind::kRotation;
    g.rotor_factors = std::move(factors);
    return g;
}

CliffGenerator CliffGenerator::inversion() {
    CliffGenerator g;
    g.kind = GeneratorKind::kInversion;
    return g;
}

VahlenEntry VahlenEntry::zero_entry(int n) {
    VahlenEntry e{Multivector(n), {}, true, true};
    return e;
}

VahlenEntry VahlenEntry::from_factors(int n, std::vector<Paravector> factors) {
    Multivector value = Multivector::scalar(n, 1.0);
    for (const auto& p : factors) value = value * embed(p, n);
    VahlenEntry e{std::move(value), std::move(factors), false, true};
    e.zero = norm(e.value) == 0.0;
    return e;
}

VahlenEntry VahlenEntry::raw(Multivector value) {
    const bool zero = norm(value) == 0.0;
    return VahlenEntry{std::move(value), {}, zero, false};
}

VahlenMatrix::VahlenMatrix(int n, VahlenEntry a, VahlenEntry b, VahlenEntry c, VahlenEntry d,
                           bool certified)
    : n_(n),
      alpha_(std::move(a)),
      beta_(std::move(b)),
      gamma_(std::move(c)),
      delta_(std::move(d)),
      certified_(certified) {}

VahlenMatrix VahlenMatrix::identity(int n) {
    const Paravector one = Paravector::unit(n, 0);
    return VahlenMatrix(n, VahlenEntry::from_factors(n, {one}), VahlenEntry::zero_entry(n),
                        VahlenEntry::zero_entry(n), VahlenEntry::from_factors(n, {one}), true);
}

VahlenMatrix VahlenMatrix::translation(const Paravector& w) {
    const int n = w.n();
    if (!is_finite(w)) throw input_error("translation offset must be finite");
    const Paravector one = Paravector::unit(n, 0);
    return VahlenMatrix(n, VahlenEntry::from_factors(n, {one}),
                        norm(w) == 0.0 ? VahlenEntry::zero_entry(n)
                                       : VahlenEntry::from_factors(n, {w}),
                        VahlenEntry::zero_entry(n), VahlenEntry::from_factors(n, {one}), true);
}

VahlenMatrix VahlenMatrix::dilation(int n, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw input_error("dilation factor must be positive and finite");
    }
    const Paravector one = Paravector::unit(n, 0);
    return VahlenMatrix(n, VahlenEntry::from_factors(n, {Paravector::unit(n, 0, t)}),
                        VahlenEntry::zero_entry(n), VahlenEntry::zero_entry(n),
                        VahlenEntry::from_factors(n, {one}), true);
}

VahlenMatrix VahlenMatrix::rotation(int n, std::vector<Paravector> factors) {
    if (factors.empty()) throw input_error("rotation needs at least one paravector factor");
    std::vector<Paravector> units;
    units.reserve(factors.size());
    for (const auto& p : factors) {
        if (p.n() != n) throw input_error("rotation factor dimension mismatch");
        const double len = norm(p);
        if (!(len > 1e-12) || !is_finite(p)) {
            throw input_error("rotation factors must be invertible paravectors");
        }
        units.push_back(p * (1.0 / len));
    }
    // delta = conj(alpha*); for alpha = p_1 ... p_k this is conj(p_1) ... conj(p_k).
    std::vector<Paravector> delta_factors;
    delta_factors.reserve(units.size());
    for (const auto& p : units) delta_factors.push_back(conj(p));
    return VahlenMatrix(n, VahlenEntry::from_factors(n, units), VahlenEntry::zero_entry(n),
                        VahlenEntry::zero_entry(n),
                        VahlenEntry::from_factors(n, std::move(delta_factors)), true);
}

VahlenMatrix VahlenMatrix::inversion(int n) {
    const Paravector one = Paravector::unit(n, 0);
    return VahlenMatrix(n, VahlenEntry::zero_entry(n), VahlenEntry::from_factors(n, {one}),
                        VahlenEntry::from_factors(n, {one}), VahlenEntry::zero_entry(n), true);
}

VahlenMatrix VahlenMatrix::from_generator(int n, const CliffGenerator& g) {
    switch (g.kind) {
        case GeneratorKind::kTranslation:
            if (g.w.n() != n) throw input_error("translation offset dimension mismatch");
            return translation(g.w);
        case GeneratorKind::kDilation: return dilation(n, g.t);
        case GeneratorKind::kRotation: return rotation(n, g.rotor_factors);
        case GeneratorKind::kInversion: return inversion(n);
    }
    throw input_error("unknown generator kind");
}

VahlenMatrix VahlenMatrix::from_word(int n, const std::vector<CliffGenerator>& word) {
    // The word is a pipeline: z -> g_1(z) -> g_2(g_1(z)) -> ...
    VahlenMatrix m = identity(n);
    for (const auto& g : word) m = compose(from_generator(n, g), m);
    return m;
}

VahlenMatrix VahlenMatrix::raw(Multivector a, Multivector b, Multivector c, Multivector d) {
    const int n = a.generators();
    if (b.generators() != n || c.generators() != n || d.generators() != n) {
        throw input_error("Vahlen entries must share one algebra");
    }
    return VahlenMatrix(n, VahlenEntry::raw(std::move(a)), VahlenEntry::raw(std::move(b)),
                        VahlenEntry::raw(std::move(c)), VahlenEntry::raw(std::move(d)), false);
}

namespace {

// Inverse of a Clifford-group element: conj(g) / Sc(g conj(g)). The scalar
// dominance of g conj(g) is the caller's responsibility to check.
Multivector group_inverse(const Multivector& g, double eps) {
    const Multivector gc = g * conj(g);
    const double s = scalar_part(gc);
    if (std::abs(s) <= eps) throw singular_error("group element has vanishing norm");
    return conj(g) * (1.0 / s);
}

double nonscalar_residual(const Multivector& a) {
    double s = 0.0;
    for (unsigned m = 1; m < a.size(); ++m) s += a[m] * a[m];
    return std::sqrt(s);
}

}  // namespace

Paravector VahlenMatrix::eval(const Paravector& z, const NumericPolicy& pol) const {
    if (z.n() != n_) throw input_error("Vahlen evaluation dimension mismatch");
    const Multivector zc = embed(z, n_);
    const Multivector num = alpha_.value * zc + beta_.value;
    const Multivector den = gamma_.value * zc + delta_.value;

    const Multivector dd = den * conj(den);
    const double s = scalar_part(dd);
    const double off = nonscalar_residual(dd);
    if (off > pol.vahlen_tol * std::max(1.0, std::abs(s))) {
        throw invalid_matrix_error("gamma z + delta is not a Clifford-group element");
    }
    const double zscale = 1.0 + norm(z);
    if (s <= 0.0 || std::sqrt(std::max(s, 0.0)) <= pol.pole_eps * zscale) {
        throw pole_error("Vahlen pole: |gamma z + delta| vanishes");
    }

    const Multivector result = num * (conj(den) * (1.0 / s));
    const double resid = paravector_residual(result);
    if (resid > pol.vahlen_tol * std::max(1.0, norm(result))) {
        throw invalid_matrix_error("Vahlen image is not a paravector; conditions violated");
    }
    return paravector_part(result);
}

VahlenMatrix compose(const VahlenMatrix& outer, const VahlenMatrix& inner) {
    if (outer.n_ != inner.n_) throw input_error("Vahlen composition dimension mismatch");
    const int n = outer.n_;
    auto entry = [&](const VahlenEntry& x1, const VahlenEntry& y1, const VahlenEntry& x2,
                     const VahlenEntry& y2) {
        // x1*x2 + y1*y2, keeping a factor list when only one term survives.
        if (x1.zero || x2.zero) {
            if (y1.zero || y2.zero) return VahlenEntry::zero_entry(n);
            if (y1.factored && y2.factored) {
                std::vector<Paravector> f = y1.factors;
                f.insert(f.end(), y2.factors.begin(), y2.factors.end());
                return VahlenEntry::from_factors(n, std::move(f));
            }
            return VahlenEntry::raw(y1.value * y2.value);
        }
        if (y1.zero || y2.zero) {
            if (x1.factored && x2.factored) {
                std::vector<Paravector> f = x1.factors;
                f.insert(f.end(), x2.factors.begin(), x2.factors.end());
                return VahlenEntry::from_factors(n, std::move(f));
            }
            return VahlenEntry::raw(x1.value * x2.value);
        }
        return VahlenEntry::raw(x1.value * x2.value + y1.value * y2.value);
    };
    VahlenEntry a = entry(outer.alpha_, outer.beta_, inner.alpha_, inner.gamma_);
    VahlenEntry b = entry(outer.alpha_, outer.beta_, inner.beta_, inner.delta_);
    VahlenEntry c = entry(outer.gamma_, outer.delta_, inner.alpha_, inner.gamma_);
    VahlenEntry d = entry(outer.gamma_, outer.delta_, inner.beta_, inner.delta_);
    return VahlenMatrix(n, std::move(a), std::move(b), std::move(c), std::move(d),
                        outer.certified_ && inner.certified_);
}

VahlenConditionCheck check_vahlen_conditions(const VahlenMatrix& m, const NumericPolicy& pol) {
    VahlenConditionCheck out;
    out.entries_certified = m.certified();

    auto group_residual = [&](const VahlenEntry& e) {
        if (e.zero) return 0.0;
        const Multivector gc = e.value * conj(e.value);
        const double s = std::abs(scalar_part(gc));
        return nonscalar_residual(gc) / std::max(1.0, s);
    };
    for (const auto* e : {&m.alpha(), &m.beta(), &m.gamma(), &m.delta()}) {
        out.entry_group_residual = std::max(out.entry_group_residual, group_residual(*e));
    }

    const Multivector pd = m.alpha().value * reversion(m.delta().value) -
                           m.beta().value * reversion(m.gamma().value);
    out.pseudo_det_value = scalar_part(pd);
    out.pseudo_det_residual = nonscalar_residual(pd) / std::max(1.0, std::abs(out.pseudo_det_value));
    out.pseudo_det_scalar = out.pseudo_det_residual <= pol.vahlen_tol;
    out.pseudo_det_nonzero = std::abs(out.pseudo_det_value) > pol.singular_eps;

    auto ratio_check = [&](const VahlenEntry& num, const VahlenEntry& den, bool& ok,
                           double& residual) {
        if (den.zero) return;  // condition applies only where the inverse exists
        try {
            const Multivector r = group_inverse(den.value, pol.singular_eps) * num.value;
            residual = paravector_residual(r) / std::max(1.0, norm(r));
            ok = residual <= pol.vahlen_tol;
        } catch (const singular_error&) {
            ok = false;
            residual = std::numeric_limits<double>::infinity();
        }
    };
    ratio_check(m.beta(), m.alpha(), out.alpha_beta_paravector, out.alpha_beta_residual);
    ratio_check(m.delta(), m.gamma(), out.gamma_delta_paravector, out.gamma_delta_residual);
    return out;
}

}  // namespace gaussconf
