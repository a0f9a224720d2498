#include "gaussconf/verify.hpp"

#include <cmath>
#include <sstream>

#include "gaussconf/cayley_dickson.hpp"
#include "gaussconf/multivector.hpp"
#include "gaussconf/octonion.hpp"
#include "gaussconf/report.hpp"
#include "gaussconf/rng.hpp"

namespace gaussconf {

namespace {

Octonion random_octonion(CounterRng& rng) {
    Octonion o;
    for (int i = 0; i < 8; ++i) o[i] = rng.uniform(-1.0, 1.0);
    return o;
}

CDElement random_cd(CounterRng& rng, int level) {
    CDElement e(level);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = rng.uniform(-1.0, 1.0);
    return e;
}

Multivector random_multivector(CounterRng& rng, int n) {
    Multivector a(n);
    for (unsigned m = 0; m < a.size(); ++m) a[m] = rng.uniform(-1.0, 1.0);
    return a;
}

Paravector random_paravector(CounterRng& rng, int n) {
    Paravector p(n);
    for (int i = 0; i <= n; ++i) p[i] = rng.uniform(-1.0, 1.0);
    return p;
}

SuiteCheck make_check(std::string name, long trials, double max_residual, double threshold,
                      std::string note = "") {
    SuiteCheck c;
    c.name = std::move(name);
    c.trials = trials;
    c.max_residual = max_residual;
    c.threshold = threshold;
    c.pass = max_residual <= threshold;
    c.note = std::move(note);
    return c;
}

void finalize(SuiteReport& r) {
    r.pass = true;
    for (const auto& c : r.checks) r.pass = r.pass && c.pass;
}

}  // namespace

SuiteReport run_moufang_suite(long trials, std::uint64_t seed) {
    SuiteReport report;
    report.suite = "moufang";
    CounterRng rng = CounterRng(seed).split(0x01);

    double moufang = 0.0, flex = 0.0, alternative = 0.0, repart = 0.0;
    double cd_moufang = 0.0, cd_repart = 0.0;
    for (long t = 0; t < trials; ++t) {
        const Octonion a = random_octonion(rng);
        const Octonion b = random_octonion(rng);
        const Octonion c = random_octonion(rng);
        const double scale = norm(a) * norm(b) * norm(c) * norm(a) + 1e-300;

        // (ab)(ca) = a((bc)a)
        moufang = std::max(moufang, norm((a * b) * (c * a) - a * ((b * c) * a)) / scale);
        // (ab)a = a(ba)
        flex = std::max(flex,
                        norm((a * b) * a - a * (b * a)) / (norm(a) * norm(b) * norm(a) + 1e-300));
        // (a conj(b)) b = conj(b)(ba) ... = a (b conj(b)); all equal |b|^2 a
        {
            const Octonion cb = conj(b);
            const Octonion target = a * norm_sq(b);
            const double s = norm(a) * norm_sq(b) + 1e-300;
            alternative = std::max(alternative, norm((a * cb) * b - target) / s);
            alternative = std::max(alternative, norm(cb * (b * a) - target) / s);
            alternative = std::max(alternative, norm(a * (cb * b) - target) / s);
            alternative = std::max(alternative, norm(a * (b * cb) - target) / s);
        }
        // Re{b (conj(a) a) c} = Re{(b conj(a))(a c)}
        repart = std::max(repart, std::abs(real_part(b * ((conj(a) * a) * c)) -
                                           real_part((b * conj(a)) * (a * c))) /
                                      scale);
    }
    report.checks.push_back(make_check("octonion_moufang", trials, moufang, 1e-12));
    report.checks.push_back(make_check("octonion_flexibility", trials, flex, 1e-12));
    report.checks.push_back(make_check("octonion_alternative_law", trials, alternative, 1e-12));
    report.checks.push_back(make_check("octonion_real_part_rule", trials, repart, 1e-12));

    // Same identities through the level-3 doubling product; these are
    // basis-independent, so the two constructions must agree on them.
    const long cd_trials = std::max(1L, trials / 10);
    for (long t = 0; t < cd_trials; ++t) {
        const CDElement a = random_cd(rng, 3);
        const CDElement b = random_cd(rng, 3);
        const CDElement c = random_cd(rng, 3);
        const double scale = cd_norm(a) * cd_norm(b) * cd_norm(c) * cd_norm(a) + 1e-300;
        cd_moufang = std::max(
            cd_moufang, cd_norm(cd_multiply(cd_multiply(a, b), cd_multiply(c, a)) -
                                cd_multiply(a, cd_multiply(cd_multiply(b, c), a))) /
                            scale);
        cd_repart = std::max(
            cd_repart,
            std::abs(cd_real_part(cd_multiply(b, cd_multiply(cd_multiply(cd_conjugate(a), a), c))) -
                     cd_real_part(cd_multiply(cd_multiply(b, cd_conjugate(a)),
                                              cd_multiply(a, c)))) /
                scale);
    }
    report.checks.push_back(make_check("doubling_level3_moufang", cd_trials, cd_moufang, 1e-12));
    report.checks.push_back(
        make_check("doubling_level3_real_part_rule", cd_trials, cd_repart, 1e-12));
    finalize(report);
    return report;
}

SuiteReport run_composition_suite(long trials, std::uint64_t seed) {
    SuiteReport report;
    report.suite = "composition";
    CounterRng rng = CounterRng(seed).split(0x02);

    double oct = 0.0;
    for (long t = 0; t < trials; ++t) {
        const Octonion a = random_octonion(rng);
        const Octonion b = random_octonion(rng);
        oct = std::max(oct,
                       std::abs(norm(a * b) - norm(a) * norm(b)) / (norm(a) * norm(b) + 1e-300));
    }
    report.checks.push_back(make_check("octonion_norm_composition", trials, oct, 1e-12));

    const long cd_trials = std::max(1L, trials / 10);
    double cd3 = 0.0;
    for (long t = 0; t < cd_trials; ++t) {
        const CDElement a = random_cd(rng, 3);
        const CDElement b = random_cd(rng, 3);
        cd3 = std::max(cd3, std::abs(cd_norm(cd_multiply(a, b)) - cd_norm(a) * cd_norm(b)) /
                                (cd_norm(a) * cd_norm(b) + 1e-300));
    }
    report.checks.push_back(make_check("doubling_level3_norm_composition", cd_trials, cd3, 1e-12));

    double para = 0.0;
    for (int n = 3; n <= 5; ++n) {
        for (long t = 0; t < cd_trials; ++t) {
            const Paravector p = random_paravector(rng, n);
            const Paravector q = random_paravector(rng, n);
            const Paravector u = random_paravector(rng, n);
            const Paravector v = random_paravector(rng, n);
            const Multivector a = embed(p, n) * embed(q, n);  // product of paravectors
            const Multivector b = embed(u, n) * embed(v, n);
            para = std::max(para, std::abs(norm(a) - norm(p) * norm(q)) /
                                      (norm(p) * norm(q) + 1e-300));
            para = std::max(para, std::abs(norm(a * b) - norm(a) * norm(b)) /
                                      (norm(a) * norm(b) + 1e-300));
        }
    }
    report.checks.push_back(
        make_check("paravector_norm_composition", 3 * cd_trials, para, 1e-12,
                   "pairs and products of paravectors, Cl_3..Cl_5"));

    // The sedenion counterexample: composition must break at level 4.
    const auto zd = find_zero_divisor_pair(4);
    if (zd) {
        const double breakage = zd->lhs_norm * zd->rhs_norm - zd->product_norm;
        SuiteCheck c;
        c.name = "sedenion_counterexample";
        c.trials = 1;
        c.max_residual = zd->product_norm;
        c.threshold = 1e-12;
        c.pass = zd->product_norm <= 1e-12 && breakage >= 1.0;
        c.note = "expected breakage: |ab| = " + format_double(zd->product_norm) +
                 " while |a||b| = " + format_double(zd->lhs_norm * zd->rhs_norm) + " for " +
                 zd->description;
        report.checks.push_back(c);
    } else {
        report.checks.push_back(make_check("sedenion_counterexample", 1, 1.0, 0.0,
                                           "no zero-divisor pair found at level 4"));
    }
    finalize(report);
    return report;
}

SuiteReport run_zero_divisor_suite() {
    SuiteReport report;
    report.suite = "zero-divisors";

    const auto zd = find_zero_divisor_pair(4);
    {
        SuiteCheck c;
        c.name = "sedenion_zero_divisors";
        c.trials = 1;
        if (zd) {
            c.max_residual = zd->product_norm;
            c.threshold = 1e-12;
            c.pass = zd->product_norm <= 1e-12 && zd->lhs_norm * zd->rhs_norm >= 1.0;
            c.note = zd->description + ", |a| = " + format_double(zd->lhs_norm) +
                     ", |b| = " + format_double(zd->rhs_norm);
        } else {
            c.max_residual = 1.0;
            c.threshold = 0.0;
            c.pass = false;
            c.note = "search found no pair";
        }
        report.checks.push_back(c);
    }

    // Levels <= 3 are division algebras: the same search must come up empty.
    {
        SuiteCheck c;
        c.name = "octonion_level_has_none";
        c.trials = 1;
        const auto none = find_zero_divisor_pair(3);
        c.max_residual = none ? 1.0 : 0.0;
        c.threshold = 0.0;
        c.pass = !none.has_value();
        report.checks.push_back(c);
    }

    {
        const Multivector e123 = Multivector::blade(3, 0b111u);
        const Multivector one = Multivector::scalar(3, 1.0);
        const Multivector product = (one + e123) * (one - e123);
        SuiteCheck c;
        c.name = "cl3_zero_divisors";
        c.trials = 1;
        c.max_residual = norm(product);
        c.threshold = 0.0;  // integer arithmetic, exact
        c.pass = norm(product) == 0.0 && norm(one + e123) > 0.0 && norm(one - e123) > 0.0;
        c.note = "(1 + e123)(1 - e123) = 0, both factors of norm sqrt(2)";
        report.checks.push_back(c);
    }
    finalize(report);
    return report;
}

SuiteReport run_pseudo_norm_suite(long trials, std::uint64_t seed) {
    SuiteReport report;
    report.suite = "pseudo-norm";
    CounterRng rng = CounterRng(seed).split(0x03);

    const long per_n = std::max(1L, trials / 4);
    double bound_excess = 0.0;
    double assoc = 0.0;
    for (int n = 3; n <= 6; ++n) {
        const double cap = std::pow(2.0, n / 2.0);
        for (long t = 0; t < per_n; ++t) {
            const Multivector a = random_multivector(rng, n);
            const Multivector b = random_multivector(rng, n);
            const Multivector c = random_multivector(rng, n);
            const double lhs = norm(a * b);
            const double rhs = cap * norm(a) * norm(b);
            bound_excess = std::max(bound_excess, (lhs - rhs) / (rhs + 1e-300));
            assoc = std::max(assoc, norm((a * b) * c - a * (b * c)) /
                                        (norm(a) * norm(b) * norm(c) + 1e-300));
        }
    }
    report.checks.push_back(make_check("clifford_pseudo_norm_bound", 4 * per_n,
                                       std::max(bound_excess, 0.0), 1e-12,
                                       "max relative excess over 2^{n/2}|a||b|, Cl_3..Cl_6"));
    report.checks.push_back(
        make_check("clifford_associativity", 4 * per_n, assoc, 1e-10, "Cl_3..Cl_6"));
    finalize(report);
    return report;
}

std::vector<SuiteReport> run_suites(const std::string& suite, long trials, std::uint64_t seed) {
    if (trials < 1) throw input_error("trials must be >= 1");
    std::vector<SuiteReport> out;
    if (suite == "moufang" || suite == "all") out.push_back(run_moufang_suite(trials, seed));
    if (suite == "composition" || suite == "all")
        out.push_back(run_composition_suite(trials, seed));
    if (suite == "zero-divisors" || suite == "all") out.push_back(run_zero_divisor_suite());
    if (suite == "pseudo-norm" || suite == "all") out.push_back(run_pseudo_norm_suite(trials, seed));
    if (out.empty()) throw input_error("unknown suite: " + suite);
    return out;
}

std::string suites_to_text(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "suite " << r.suite << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& c : r.checks) {
            os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  trials=" << c.trials
               << "  max_residual=" << format_double(c.max_residual)
               << "  threshold=" << format_double(c.threshold);
            if (!c.note.empty()) os << "  (" << c.note << ")";
            os << "\n";
        }
    }
    return os.str();
}

std::string suites_to_json(const std::vector<SuiteReport>& reports, std::uint64_t seed,
                           const std::string& timestamp) {
    std::ostringstream os;
    os << "{\n  \"schema\": 1,\n  \"timestamp\": \"" << timestamp << "\",\n  \"seed\": " << seed
       << ",\n  \"suites\": [\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        os << "    {\"suite\": \"" << r.suite << "\", \"pass\": " << (r.pass ? "true" : "false")
           << ", \"checks\": [\n";
        for (std::size_t j = 0; j < r.checks.size(); ++j) {
            const auto& c = r.checks[j];
            os << "      {\"name\": \"" << c.name << "\", \"trials\": " << c.trials
               << ", \"max_residual\": " << format_double(c.max_residual)
               << ", \"threshold\": " << format_double(c.threshold)
               << ", \"pass\": " << (c.pass ? "true" : "false") << ", \"note\": \"" << c.note
               << "\"}";
            os << (j + 1 < r.checks.size() ? ",\n" : "\n");
        }
        os << "    ]}" << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

}  // namespace gaussconf
