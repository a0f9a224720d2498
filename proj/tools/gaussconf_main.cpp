// Command-line front end: multiplication tables, algebraic property suites,
// conformality analysis of catalog or user-supplied maps, and single-point
// frame extraction.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or config error, 3 numeric degeneracy abort.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaussconf/analysis.hpp"
#include "gaussconf/catalog.hpp"
#include "gaussconf/report.hpp"
#include "gaussconf/verify.hpp"

namespace {

using namespace gaussconf;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct CommonOpts {
    std::string algebra = "octonion";
    int n = 3;
    std::string map_name;
    std::string config_path;
    std::string box = "";
    int samples = 100;
    std::uint64_t seed = 1;
    double h = 0.0;
    double tol = 1e-6;
    std::string out;
    std::string format = "json";
    std::string table_format = "text";
    std::string verify_format = "text";
};

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_text_file(out_path, content);
    }
}

std::pair<double, double> parse_box(const std::string& box) {
    const auto colon = box.find(':');
    if (colon == std::string::npos) throw input_error("box must be \"lo:hi\"");
    try {
        const double lo = std::stod(box.substr(0, colon));
        const double hi = std::stod(box.substr(colon + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw input_error("box must be \"lo:hi\" with numeric bounds");
    }
}

std::string octonion_cell(int i, int j) {
    const BasisProduct p = octonion_basis_product(i, j);
    std::string s = p.sign < 0 ? "-" : "";
    return s + (p.index == 0 ? "1" : "e" + std::to_string(p.index));
}

int cmd_table(const CommonOpts& opt) {
    std::ostringstream os;
    const bool csv = opt.table_format == "csv";
    const bool jsonfmt = opt.table_format == "json";
    const char sep = csv ? ',' : '\t';

    if (opt.algebra == "octonion") {
        if (jsonfmt) {
            os << "{\"algebra\": \"octonion\", \"entries\": [\n";
            for (int i = 1; i <= 7; ++i) {
                for (int j = 1; j <= 7; ++j) {
                    const BasisProduct p = octonion_basis_product(i, j);
                    os << "  {\"i\": " << i << ", \"j\": " << j << ", \"sign\": " << p.sign
                       << ", \"index\": " << p.index << "}"
                       << ((i == 7 && j == 7) ? "\n" : ",\n");
                }
            }
            os << "]}\n";
        } else {
            os << ".";
            for (int j = 1; j <= 7; ++j) os << sep << "e" << j;
            os << "\n";
            for (int i = 1; i <= 7; ++i) {
                os << "e" << i;
                for (int j = 1; j <= 7; ++j) os << sep << octonion_cell(i, j);
                os << "\n";
            }
        }
    } else if (opt.algebra == "clifford") {
        const int n = opt.n;
        if (n < 0 || n > kMaxGenerators) {
            std::cerr << "error: clifford table needs 0 <= n <= " << kMaxGenerators << "\n";
            return kExitUsage;
        }
        const unsigned dim = 1u << n;
        auto cell = [&](unsigned a, unsigned b) {
            const int sign = blade_product_sign(a, b);
            const std::string label = blade_label(n, a ^ b);
            return (sign < 0 ? "-" : "") + label;
        };
        if (jsonfmt) {
            os << "{\"algebra\": \"clifford\", \"n\": " << n << ", \"entries\": [\n";
            for (unsigned a = 0; a < dim; ++a) {
                for (unsigned b = 0; b < dim; ++b) {
                    os << "  {\"i\": " << a << ", \"j\": " << b
                       << ", \"sign\": " << blade_product_sign(a, b) << ", \"index\": " << (a ^ b)
                       << "}" << ((a == dim - 1 && b == dim - 1) ? "\n" : ",\n");
                }
            }
            os << "]}\n";
        } else {
            os << ".";
            for (unsigned b = 0; b < dim; ++b) os << sep << blade_label(n, b);
            os << "\n";
            for (unsigned a = 0; a < dim; ++a) {
                os << blade_label(n, a);
                for (unsigned b = 0; b < dim; ++b) os << sep << cell(a, b);
                os << "\n";
            }
        }
    } else {
        std::cerr << "error: --algebra must be octonion or clifford\n";
        return kExitUsage;
    }
    emit(opt.out, os.str());
    return kExitOk;
}

int cmd_verify_algebra(const std::string& suite, long trials, const CommonOpts& opt) {
    const auto reports = run_suites(suite, trials, opt.seed);
    std::string content = opt.verify_format == "json"
                              ? suites_to_json(reports, opt.seed, iso8601_utc_now())
                              : suites_to_text(reports);
    emit(opt.out, content);
    for (const auto& r : reports) {
        if (!r.pass) return kExitVerificationFailure;
    }
    return kExitOk;
}

AnalysisJob build_job(const CommonOpts& opt, double default_lo, double default_hi) {
    AnalysisJob job;
    job.samples = opt.samples;
    job.seed = opt.seed;
    job.policy.h = opt.h;
    job.policy.derivative_tol = opt.tol;
    if (!opt.box.empty()) {
        auto [lo, hi] = parse_box(opt.box);
        job.box_lo = lo;
        job.box_hi = hi;
    } else {
        job.box_lo = default_lo;
        job.box_hi = default_hi;
    }
    return job;
}

int finish_analysis(const ConformalityReport& report, const CommonOpts& opt) {
    const std::string content = opt.format == "csv"
                                    ? report_to_csv(report)
                                    : report_to_json(report, iso8601_utc_now());
    emit(opt.out, content);
    if (report.summary.errored_points * 2 > report.samples) {
        std::cerr << "error: more than half of the sampled points failed to evaluate\n";
        return kExitDegenerate;
    }
    if (report.summary.nonconformal_points > 0) return kExitVerificationFailure;
    return kExitOk;
}

int cmd_analyze(const CommonOpts& opt) {
    NumericPolicy pol;
    pol.h = opt.h;
    pol.derivative_tol = opt.tol;

    if (!opt.config_path.empty()) {
        const MapConfig cfg = parse_map_config(read_text_file(opt.config_path));
        const double lo = cfg.has_box ? cfg.box_lo : -1.0;
        const double hi = cfg.has_box ? cfg.box_hi : 1.0;
        AnalysisJob job = build_job(opt, lo, hi);
        if (cfg.algebra == "octonion") {
            return finish_analysis(
                run_analysis(OctonionAlgebra{}, instantiate_octonion(cfg, job.policy), job), opt);
        }
        return finish_analysis(run_analysis(CliffordAlgebra(cfg.n),
                                            instantiate_clifford(cfg, job.policy), job),
                               opt);
    }

    const CatalogEntry& entry = find_catalog_entry(opt.map_name);
    AnalysisJob job = build_job(opt, entry.box_lo, entry.box_hi);
    if (entry.algebra == "octonion") {
        const auto map = make_octonion_catalog_map(entry.name, job.policy);
        return finish_analysis(run_analysis(OctonionAlgebra{}, map, job), opt);
    }
    const int n = opt.n > 0 ? opt.n : entry.default_n;
    const auto map = make_clifford_catalog_map(entry.name, n, job.policy);
    return finish_analysis(run_analysis(CliffordAlgebra(n), map, job), opt);
}

template <class A>
int frame_at_point(const A& alg, const MapUnderTest<A>& map, const typename A::Point& z,
                   const NumericPolicy& pol) {
    const auto sample = numeric_jacobian(alg, map, z, pol);
    const auto check = check_conformality_conditions(alg, sample, pol.derivative_tol);
    if (check.verdict == Verdict::kDegenerate) {
        std::cerr << "error: degenerate point, df/dx_0 vanishes within tolerance\n";
        return kExitDegenerate;
    }
    const auto frame = extract_structural_frame(alg, sample, pol);
    std::ostringstream os;
    os << "map: " << map.label << "\nverdict: " << to_string(check.verdict) << "\n";
    if (check.verdict == Verdict::kConformal) {
        os << "lambda: " << format_double(check.lambda) << "\n";
    }
    for (std::size_t k = 0; k < frame.psis.size(); ++k) {
        os << "psi_" << (k + 1) << ":";
        for (double c : alg.coefficients(frame.psis[k])) os << " " << format_double(c);
        os << "\n";
    }
    os << "residual_scalar_psi: " << format_double(frame.residual_scalar) << "\n";
    os << "residual_orth_psi: " << format_double(frame.residual_orth) << "\n";
    for (std::size_t k = 0; k < frame.spin.size(); ++k) {
        const auto& s = frame.spin[k];
        os << "spin_psi_" << (k + 1) << ": grades_ok=" << (s.grades_ok ? "yes" : "no")
           << " unit=" << (s.unit_ok ? "yes" : "no")
           << " scalar_free=" << (s.scalar_free ? "yes" : "no") << "\n";
    }
    const auto bracket = bracket_check(alg, frame, pol.derivative_tol);
    os << "frame_content: " << to_string(bracket.content) << "\n";
    os << "max_anticommutator: " << format_double(bracket.max_anticommutator) << "\n";
    os << "max_commutator: " << format_double(bracket.max_commutator) << "\n";
    std::cout << os.str();
    return kExitOk;
}

int cmd_frame(const CommonOpts& opt, const std::string& point_csv) {
    NumericPolicy pol;
    pol.h = opt.h;
    pol.derivative_tol = opt.tol;

    std::vector<double> coords;
    std::stringstream ss(point_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            coords.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw input_error("point coordinates must be numeric");
        }
    }

    std::string algebra;
    int n = opt.n;
    MapUnderTest<OctonionAlgebra> oct_map;
    MapUnderTest<CliffordAlgebra> cliff_map;
    if (!opt.config_path.empty()) {
        const MapConfig cfg = parse_map_config(read_text_file(opt.config_path));
        algebra = cfg.algebra;
        n = cfg.n;
        if (algebra == "octonion") oct_map = instantiate_octonion(cfg, pol);
        else cliff_map = instantiate_clifford(cfg, pol);
    } else {
        const CatalogEntry& entry = find_catalog_entry(opt.map_name);
        algebra = entry.algebra;
        if (algebra == "octonion") {
            oct_map = make_octonion_catalog_map(entry.name, pol);
        } else {
            n = opt.n > 0 ? opt.n : entry.default_n;
            cliff_map = make_clifford_catalog_map(entry.name, n, pol);
        }
    }

    if (algebra == "octonion") {
        if (coords.size() != 8) throw input_error("octonion points need 8 coordinates");
        Octonion z;
        for (int i = 0; i < 8; ++i) z[i] = coords[static_cast<std::size_t>(i)];
        return frame_at_point(OctonionAlgebra{}, oct_map, z, pol);
    }
    if (static_cast<int>(coords.size()) != n + 1) {
        throw input_error("clifford points need " + std::to_string(n + 1) + " coordinates");
    }
    Paravector z(n);
    for (int i = 0; i <= n; ++i) z[i] = coords[static_cast<std::size_t>(i)];
    return frame_at_point(CliffordAlgebra(n), cliff_map, z, pol);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical conformality analysis over octonion and Clifford algebras"};
    app.require_subcommand(1);
    // --h is a real flag (finite-difference step), so help is long-form only.
    app.set_help_flag("--help", "print help");

    CommonOpts opt;

    auto* table = app.add_subcommand("table", "print a basis multiplication table");
    table->set_help_flag("--help", "print help");
    table->add_option("--algebra", opt.algebra, "octonion or clifford")->required();
    table->add_option("--n", opt.n, "generator count for clifford tables");
    table->add_option("--format", opt.table_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--out", opt.out, "output file (stdout when omitted)");

    std::string suite = "all";
    long trials = 10000;
    auto* verify = app.add_subcommand("verify-algebra", "run algebraic property suites");
    verify->set_help_flag("--help", "print help");
    verify->add_option("--suite", suite,
                       "moufang, composition, zero-divisors, pseudo-norm or all")
        ->check(CLI::IsMember({"moufang", "composition", "zero-divisors", "pseudo-norm", "all"}));
    verify->add_option("--trials", trials, "random trials per check")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "RNG seed");
    verify->add_option("--format", opt.verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", opt.out, "output file (stdout when omitted)");

    auto* analyze = app.add_subcommand("analyze", "sample a map and analyze conformality");
    analyze->set_help_flag("--help", "print help");
    analyze->add_option("--map", opt.map_name, "catalog map name");
    analyze->add_option("--config", opt.config_path, "map config JSON file");
    analyze->add_option("--n", opt.n, "generator count override for clifford maps");
    analyze->add_option("--box", opt.box, "sampling box lo:hi (default: per-map)");
    analyze->add_option("--samples", opt.samples, "sample count")->check(CLI::PositiveNumber);
    analyze->add_option("--seed", opt.seed, "RNG seed, recorded in the report");
    analyze->add_option("--h", opt.h, "finite-difference step (0 = automatic)");
    analyze->add_option("--tol", opt.tol, "derivative tolerance");
    analyze->add_option("--out", opt.out, "report file (stdout when omitted)");
    analyze->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string point_csv;
    auto* frame = app.add_subcommand("frame", "extract the structural frame at one point");
    frame->set_help_flag("--help", "print help");
    frame->add_option("--map", opt.map_name, "catalog map name");
    frame->add_option("--config", opt.config_path, "map config JSON file");
    frame->add_option("--n", opt.n, "generator count override for clifford maps");
    frame->add_option("--point", point_csv, "comma-separated point coordinates")->required();
    frame->add_option("--h", opt.h, "finite-difference step (0 = automatic)");
    frame->add_option("--tol", opt.tol, "derivative tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(opt);
        if (verify->parsed()) return cmd_verify_algebra(suite, trials, opt);
        if (analyze->parsed()) {
            if (opt.map_name.empty() == opt.config_path.empty()) {
                std::cerr << "error: analyze needs exactly one of --map or --config\n";
                return kExitUsage;
            }
            return cmd_analyze(opt);
        }
        if (frame->parsed()) {
            if (opt.map_name.empty() == opt.config_path.empty()) {
                std::cerr << "error: frame needs exactly one of --map or --config\n";
                return kExitUsage;
            }
            return cmd_frame(opt, point_csv);
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const degenerate_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
