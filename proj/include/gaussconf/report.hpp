#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussconf/numeric.hpp"

namespace gaussconf {

// Algebra-erased per-point record; this is what serializes.
struct PointRecord {
    std::vector<double> z;
    std::string verdict;  // conformal | not_conformal | degenerate | error
    bool has_lambda = false;
    double lambda = 0.0;
    std::vector<std::vector<double>> psi;  // frame coefficients, row per Psi_k
    double residual_norm_eq = 0.0;
    double residual_orth_partials = 0.0;
    double residual_scalar_psi = 0.0;
    double residual_orth_psi = 0.0;
    double residual_diff_identity = 0.0;
    double diff_error_estimate = 0.0;  // FD budget from an h vs h/2 comparison
    struct SpinFlags {
        bool grades_ok = false;
        bool unit_ok = false;
        bool scalar_free = false;
    };
    std::vector<SpinFlags> spin;  // Clifford frames only
    std::string error_message;
};

struct AnalysisSummary {
    bool conformal_everywhere = false;
    int conformal_points = 0;
    int nonconformal_points = 0;
    int degenerate_points = 0;
    int errored_points = 0;
    bool frame_constant = false;
    bool frame_standard = false;
    double frame_variation = 0.0;
};

struct ConformalityReport {
    int schema = 1;
    std::string map_label;
    std::string algebra;  // octonion | clifford
    int n = 0;            // frame size: 7 for octonions, n for Cl_n
    std::uint64_t seed = 0;
    double h = 0.0;
    double tol = 0.0;
    double box_lo = 0.0;
    double box_hi = 0.0;
    int samples = 0;
    std::vector<PointRecord> points;
    AnalysisSummary summary;
};

// Fixed-precision formatting: every numeric value is printed with 17
// significant digits so reports round-trip and are byte-reproducible.
std::string format_double(double v);

std::string report_to_json(const ConformalityReport& report, const std::string& timestamp);
std::string report_to_csv(const ConformalityReport& report);

std::string iso8601_utc_now();

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace gaussconf
