#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaussconf/multivector.hpp"
#include "gaussconf/numeric.hpp"
#include "gaussconf/octonion.hpp"

namespace gaussconf {

enum class GeneratorKind { kTranslation, kDilation, kRotation, kInversion };

const char* to_string(GeneratorKind k);

// --------------------------------------------------------------------------
// Octonionic Moebius transformations T(z) = (az + b)(cz + d)^{-1}.
//
// Because the product is non-associative, composite maps are represented by
// their generator word and evaluated functionally; a coefficient quadruple is
// kept only where it is faithful (single generators and raw input). Raw
// quadruples are accepted for evaluation but flagged unvalidated: there is no
// admissibility check on arbitrary (a, b, c, d).
// --------------------------------------------------------------------------

struct OctGenerator {
    GeneratorKind kind = GeneratorKind::kInversion;
    Octonion w{};    // translation offset
    double t = 1.0;  // dilation factor
    Octonion u{};    // rotation unit, applied as z -> (u z) u^{-1}

    static OctGenerator translation(const Octonion& offset);
    static OctGenerator dilation(double factor);
    static OctGenerator rotation(const Octonion& unit);
    static OctGenerator inversion();
};

struct OctMoebiusCoeffs {
    Octonion a, b, c, d;
};

class OctonionMoebius {
public:
    static OctonionMoebius identity();
    static OctonionMoebius from_word(std::vector<OctGenerator> word);
    static OctonionMoebius from_generator(const OctGenerator& g);
    // Arbitrary quadruple; evaluated as written, no admissibility claim.
    static OctonionMoebius raw(const Octonion& a, const Octonion& b, const Octonion& c,
                               const Octonion& d);

    // (a z + b)((c z + d)^{-1}) with exactly this parenthesization for raw
    // maps; word-built maps apply their generators in sequence.
    Octonion eval(const Octonion& z, const NumericPolicy& pol = {}) const;

    bool validated() const { return validated_; }
    bool involves_inversion() const;
    const std::vector<OctGenerator>& word() const { return word_; }
    bool has_coefficients() const { return coeffs_.has_value(); }
    const OctMoebiusCoeffs& coefficients() const;

private:
    OctonionMoebius() = default;

    std::vector<OctGenerator> word_;
    std::optional<OctMoebiusCoeffs> coeffs_;
    bool validated_ = false;
};

// Functional composition outer . inner via word concatenation. Raw maps have
// no faithful quadruple composition and are rejected.
OctonionMoebius compose(const OctonionMoebius& outer, const OctonionMoebius& inner);

Octonion apply_generator(const OctGenerator& g, const Octonion& z, const NumericPolicy& pol);

// --------------------------------------------------------------------------
// Ahlfors-Vahlen matrices over Cl_n: T(z) = (alpha z + beta)(gamma z + delta)^{-1}
// with entries that are products of paravectors. Generator-built matrices and
// their compositions carry that certification; raw matrices do not.
// --------------------------------------------------------------------------

struct CliffGenerator {
    GeneratorKind kind = GeneratorKind::kInversion;
    Paravector w;                          // translation offset
    double t = 1.0;                        // dilation factor
    std::vector<Paravector> rotor_factors; // rotation: unit paravector factors of alpha

    static CliffGenerator translation(const Paravector& offset);
    static CliffGenerator dilation(double factor);
    static CliffGenerator rotation(std::vector<Paravector> factors);
    static CliffGenerator inversion();
};

struct VahlenEntry {
    Multivector value;
    std::vector<Paravector> factors;  // explicit factorization when known
    bool zero = false;
    bool factored = false;            // value equals the product of `factors`

    static VahlenEntry zero_entry(int n);
    static VahlenEntry from_factors(int n, std::vector<Paravector> factors);
    static VahlenEntry raw(Multivector value);
};

class VahlenMatrix {
public:
    static VahlenMatrix identity(int n);
    static VahlenMatrix translation(const Paravector& w);
    static VahlenMatrix dilation(int n, double t);
    // f(z) = (alpha/|alpha|) z (alpha*/|alpha|) with alpha the product of the
    // given factors, each normalized to a unit paravector.
    static VahlenMatrix rotation(int n, std::vector<Paravector> factors);
    static VahlenMatrix inversion(int n);
    static VahlenMatrix from_generator(int n, const CliffGenerator& g);
    static VahlenMatrix from_word(int n, const std::vector<CliffGenerator>& word);
    static VahlenMatrix raw(Multivector a, Multivector b, Multivector c, Multivector d);

    int generators() const { return n_; }
    const VahlenEntry& alpha() const { return alpha_; }
    const VahlenEntry& beta() const { return beta_; }
    const VahlenEntry& gamma() const { return gamma_; }
    const VahlenEntry& delta() const { return delta_; }
    bool certified() const { return certified_; }

    // (alpha z + beta)(gamma z + delta)^{-1}; the result must be a paravector
    // up to pol.vahlen_tol relative residual, then is projected.
    Paravector eval(const Paravector& z, const NumericPolicy& pol = {}) const;

private:
    VahlenMatrix(int n, VahlenEntry a, VahlenEntry b, VahlenEntry c, VahlenEntry d,
                 bool certified);

    int n_;
    VahlenEntry alpha_, beta_, gamma_, delta_;
    bool certified_;

    friend VahlenMatrix compose(const VahlenMatrix&, const VahlenMatrix&);
};

// 2x2 matrix product with geometric-product entries;
// eval(compose(M1, M2), z) = eval(M1, eval(M2, z)) wherever defined.
VahlenMatrix compose(const VahlenMatrix& outer, const VahlenMatrix& inner);

struct VahlenConditionCheck {
    bool entries_certified = false;      // every entry is 0 or a product of paravectors
    double entry_group_residual = 0.0;   // worst non-scalar residual of g conj(g)
    bool pseudo_det_scalar = false;      // alpha delta* - beta gamma* is a scalar
    double pseudo_det_residual = 0.0;
    double pseudo_det_value = 0.0;       // Sc(alpha delta* - beta gamma*)
    bool pseudo_det_nonzero = false;
    bool alpha_beta_paravector = true;   // alpha^{-1} beta in R^{n+1}, when alpha != 0
    double alpha_beta_residual = 0.0;
    bool gamma_delta_paravector = true;  // gamma^{-1} delta in R^{n+1}, when gamma != 0
    double gamma_delta_residual = 0.0;

    bool pass() const {
        return entries_certified && pseudo_det_scalar && pseudo_det_nonzero &&
               alpha_beta_paravector && gamma_delta_paravector;
    }
};

VahlenConditionCheck check_vahlen_conditions(const VahlenMatrix& m,
                                             const NumericPolicy& pol = {});

}  // namespace gaussconf
