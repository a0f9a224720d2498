#include "gaussconf/report.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace gaussconf {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += "\"";
    return out;
}

std::string number_array(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_double(v[i]);
    }
    out += "]";
    return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string report_to_json(const ConformalityReport& r, const std::string& timestamp) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"schema\": " << r.schema << ",\n";
    os << "  \"timestamp\": " << quote(timestamp) << ",\n";
    os << "  \"map_label\": " << quote(r.map_label) << ",\n";
    os << "  \"algebra\": " << quote(r.algebra) << ",\n";
    os << "  \"n\": " << r.n << ",\n";
    os << "  \"seed\": " << r.seed << ",\n";
    os << "  \"h\": " << format_double(r.h) << ",\n";
    os << "  \"tol\": " << format_double(r.tol) << ",\n";
    os << "  \"box\": [" << format_double(r.box_lo) << "," << format_double(r.box_hi) << "],\n";
    os << "  \"samples\": " << r.samples << ",\n";
    os << "  \"points\": [\n";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const PointRecord& p = r.points[i];
        os << "    {\"z\": " << number_array(p.z) << ", \"verdict\": " << quote(p.verdict);
        if (p.has_lambda) {
            os << ", \"lambda\": " << format_double(p.lambda);
        } else {
            os << ", \"lambda\": null";
        }
        os << ", \"psi\": [";
        for (std::size_t k = 0; k < p.psi.size(); ++k) {
            if (k) os << ",";
            os << number_array(p.psi[k]);
        }
        os << "]";
        os << ", \"residuals\": {"
           << "\"norm_eq\": " << format_double(p.residual_norm_eq)
           << ", \"orth_partials\": " << format_double(p.residual_orth_partials)
           << ", \"scalar_psi\": " << format_double(p.residual_scalar_psi)
           << ", \"orth_psi\": " << format_double(p.residual_orth_psi)
           << ", \"diff_identity\": " << format_double(p.residual_diff_identity)
           << ", \"diff_error_estimate\": " << format_double(p.diff_error_estimate) << "}";
        if (!p.spin.empty()) {
            os << ", \"spin\": [";
            for (std::size_t k = 0; k < p.spin.size(); ++k) {
                if (k) os << ",";
                os << "{\"grades_ok\": " << bool_str(p.spin[k].grades_ok)
                   << ", \"unit\": " << bool_str(p.spin[k].unit_ok)
                   << ", \"scalar_free\": " << bool_str(p.spin[k].scalar_free) << "}";
            }
            os << "]";
        }
        if (!p.error_message.empty()) {
            os << ", \"error\": " << quote(p.error_message);
        }
        os << "}";
        if (i + 1 < r.points.size()) os << ",";
        os << "\n";
    }
    os << "  ],\n";
    const AnalysisSummary& s = r.summary;
    os << "  \"summary\": {"
       << "\"conformal_everywhere\": " << bool_str(s.conformal_everywhere)
       << ", \"conformal_points\": " << s.conformal_points
       << ", \"nonconformal_points\": " << s.nonconformal_points
       << ", \"degenerate_points\": " << s.degenerate_points
       << ", \"errored_points\": " << s.errored_points
       << ", \"frame_constant\": " << bool_str(s.frame_constant)
       << ", \"frame_standard\": " << bool_str(s.frame_standard)
       << ", \"frame_variation\": " << format_double(s.frame_variation) << "}\n";
    os << "}\n";
    return os.str();
}

std::string report_to_csv(const ConformalityReport& r) {
    std::ostringstream os;
    os << "index,verdict,lambda";
    const std::size_t dim = r.points.empty() ? 0 : r.points.front().z.size();
    for (std::size_t i = 0; i < dim; ++i) os << ",z" << i;
    os << ",res_norm_eq,res_orth_partials,res_scalar_psi,res_orth_psi,res_diff_identity,error\n";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const PointRecord& p = r.points[i];
        os << i << "," << p.verdict << ",";
        if (p.has_lambda) os << format_double(p.lambda);
        for (double z : p.z) os << "," << format_double(z);
        os << "," << format_double(p.residual_norm_eq) << ","
           << format_double(p.residual_orth_partials) << ","
           << format_double(p.residual_scalar_psi) << "," << format_double(p.residual_orth_psi)
           << "," << format_double(p.residual_diff_identity) << "," << p.error_message << "\n";
    }
    return os.str();
}

std::string iso8601_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot open for writing: " + path);
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace gaussconf
