#pragma once

#include <future>
#include <thread>

#include "gaussconf/conformal.hpp"
#include "gaussconf/report.hpp"
#include "gaussconf/rng.hpp"

namespace gaussconf {

struct AnalysisJob {
    double box_lo = -1.0;
    double box_hi = 1.0;
    int samples = 100;
    std::uint64_t seed = 1;
    int diff_directions = 16;
    NumericPolicy policy;

    void validate() const {
        if (samples < 1) throw input_error("sample count must be >= 1");
        if (!(box_lo < box_hi) || !std::isfinite(box_lo) || !std::isfinite(box_hi)) {
            throw input_error("sampling box must be finite with lo < hi");
        }
    }
};

template <class A>
typename A::Point sample_point(const A& alg, CounterRng& rng, double lo, double hi) {
    auto p = alg.zero_point();
    for (int i = 0; i < alg.coords(); ++i) {
        p += alg.coord_unit(i, rng.uniform(lo, hi));
    }
    return p;
}

template <class A>
typename A::Point sample_unit_direction(const A& alg, CounterRng& rng) {
    auto d = alg.zero_point();
    double n2 = 0.0;
    do {
        d = alg.zero_point();
        n2 = 0.0;
        for (int i = 0; i < alg.coords(); ++i) {
            const double v = rng.uniform(-1.0, 1.0);
            d += alg.coord_unit(i, v);
            n2 += v * v;
        }
    } while (n2 < 1e-8);
    return d * (1.0 / std::sqrt(n2));
}

namespace detail {

template <class A>
PointRecord analyze_point(const A& alg, const MapUnderTest<A>& map, const AnalysisJob& job,
                          const typename A::Point& z, CounterRng rng) {
    PointRecord rec;
    for (int i = 0; i < alg.coords(); ++i) rec.z.push_back(alg.coord(z, i));
    try {
        const auto sample = numeric_jacobian(alg, map, z, job.policy);

        // Second jacobian at h/2 provides the finite-difference error budget.
        NumericPolicy half = job.policy;
        half.h = sample.h / 2.0;
        const auto sample_half = numeric_jacobian(alg, map, z, half);
        double budget = 0.0;
        for (std::size_t i = 0; i < sample.partials.size(); ++i) {
            budget += norm(sample.partials[i] - sample_half.partials[i]);
        }
        rec.diff_error_estimate = budget;

        const auto check = check_conformality_conditions(alg, sample, job.policy.derivative_tol);
        rec.verdict = to_string(check.verdict);
        rec.residual_norm_eq = check.residual_norm_eq;
        rec.residual_orth_partials = check.residual_orth;
        if (check.verdict == Verdict::kConformal) {
            rec.has_lambda = true;
            rec.lambda = check.lambda;
        }
        if (check.verdict != Verdict::kDegenerate) {
            const auto frame = extract_structural_frame(alg, sample, job.policy);
            for (const auto& psi : frame.psis) rec.psi.push_back(alg.coefficients(psi));
            rec.residual_scalar_psi = frame.residual_scalar;
            rec.residual_orth_psi = frame.residual_orth;
            for (const auto& s : frame.spin) {
                rec.spin.push_back({s.grades_ok, s.unit_ok, s.scalar_free});
            }
            std::vector<typename A::Point> directions;
            directions.reserve(static_cast<std::size_t>(job.diff_directions));
            for (int d = 0; d < job.diff_directions; ++d) {
                directions.push_back(sample_unit_direction(alg, rng));
            }
            rec.residual_diff_identity =
                check_differential_identity(alg, sample, frame, directions);
        }
    } catch (const pole_error& e) {
        rec.verdict = "error";
        rec.error_message = e.what();
    } catch (const map_contract_error& e) {
        rec.verdict = "error";
        rec.error_message = e.what();
    } catch (const singular_error& e) {
        rec.verdict = "error";
        rec.error_message = e.what();
    } catch (const degenerate_error&) {
        rec.verdict = to_string(Verdict::kDegenerate);
    } catch (const invalid_matrix_error& e) {
        rec.verdict = "error";
        rec.error_message = e.what();
    }
    return rec;
}

}  // namespace detail

// Samples the box, runs the per-point pipeline (concurrently when the map
// declares itself safe), and assembles the erased report in sample order.
template <class A>
ConformalityReport run_analysis(const A& alg, const MapUnderTest<A>& map,
                                const AnalysisJob& job) {
    job.validate();
    ConformalityReport report;
    report.map_label = map.label;
    report.algebra = alg.name();
    report.n = alg.frame_size();
    report.seed = job.seed;
    report.h = job.policy.h;
    report.tol = job.policy.derivative_tol;
    report.box_lo = job.box_lo;
    report.box_hi = job.box_hi;
    report.samples = job.samples;

    const CounterRng root(job.seed);
    std::vector<typename A::Point> points;
    points.reserve(static_cast<std::size_t>(job.samples));
    for (int i = 0; i < job.samples; ++i) {
        CounterRng rng = root.split(static_cast<std::uint64_t>(i));
        points.push_back(sample_point(alg, rng, job.box_lo, job.box_hi));
    }

    report.points.resize(static_cast<std::size_t>(job.samples));
    auto run_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            // Directions use a sub-stream so they stay independent of the
            // coordinate draws above.
            report.points[static_cast<std::size_t>(i)] = detail::analyze_point(
                alg, map, job, points[static_cast<std::size_t>(i)],
                root.split(static_cast<std::uint64_t>(i)).split(1));
        }
    };

    const unsigned hw = std::thread::hardware_concurrency();
    if (map.concurrent_safe && job.samples >= 64 && hw > 1) {
        const int chunks = static_cast<int>(std::min<unsigned>(hw, 8));
        std::vector<std::future<void>> futures;
        const int per = (job.samples + chunks - 1) / chunks;
        for (int c = 0; c < chunks; ++c) {
            const int begin = c * per;
            const int end = std::min(job.samples, begin + per);
            if (begin >= end) break;
            futures.push_back(std::async(std::launch::async, run_range, begin, end));
        }
        for (auto& f : futures) f.get();
    } else {
        run_range(0, job.samples);
    }

    AnalysisSummary& s = report.summary;
    for (const auto& rec : report.points) {
        if (rec.verdict == "conformal") ++s.conformal_points;
        else if (rec.verdict == "not_conformal") ++s.nonconformal_points;
        else if (rec.verdict == "degenerate") ++s.degenerate_points;
        else ++s.errored_points;
    }
    s.conformal_everywhere = s.nonconformal_points == 0 && s.conformal_points > 0;

    // Frame constancy across every point that produced a frame.
    double variation = 0.0;
    double dev_standard = 0.0;
    int with_frames = 0;
    for (std::size_t p = 0; p < report.points.size(); ++p) {
        const auto& fp = report.points[p].psi;
        if (fp.empty()) continue;
        ++with_frames;
        for (std::size_t q = p + 1; q < report.points.size(); ++q) {
            const auto& fq = report.points[q].psi;
            if (fq.empty()) continue;
            for (std::size_t k = 0; k < fp.size(); ++k) {
                for (std::size_t i = 0; i < fp[k].size(); ++i) {
                    variation = std::max(variation, std::abs(fp[k][i] - fq[k][i]));
                }
            }
        }
        for (int k = 1; k <= alg.frame_size(); ++k) {
            const auto ek = alg.coefficients(alg.basis(k));
            for (std::size_t i = 0; i < ek.size(); ++i) {
                dev_standard = std::max(
                    dev_standard, std::abs(fp[static_cast<std::size_t>(k - 1)][i] - ek[i]));
            }
        }
    }
    s.frame_variation = variation;
    s.frame_constant = with_frames >= 2 && variation <= job.policy.frame_tol;
    s.frame_standard = s.frame_constant && dev_standard <= job.policy.frame_tol;
    return report;
}

}  // namespace gaussconf
