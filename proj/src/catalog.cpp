#include "gaussconf/catalog.hpp"

#include <cmath>
#include <utility>

#include <json.hpp>

namespace gaussconf {

namespace {

using nlohmann::json;

const double kSqrtHalf = std::sqrt(0.5);

Octonion oct_e(int i) { return Octonion::unit(i); }

// Inversion partials: for f(z) = conj(z)/|z|^2,
// df/dx_i = conj(e_i)/|z|^2 - 2 z_i conj(z)/|z|^4.
template <class Point, class ConjFn, class UnitFn, class CoordFn>
std::vector<Point> inversion_partials(const Point& z, int coords, ConjFn conj_of, UnitFn unit,
                                      CoordFn coord, double scale = 1.0) {
    const double n2 = [&] {
        double s = 0.0;
        for (int i = 0; i < coords; ++i) s += coord(z, i) * coord(z, i);
        return s;
    }();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(coords));
    const Point zc = conj_of(z);
    for (int i = 0; i < coords; ++i) {
        Point p = conj_of(unit(i)) * (1.0 / n2) - zc * (2.0 * coord(z, i) / (n2 * n2));
        out.push_back(p * scale);
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"oct-identity", "octonion", 3, -1.0, 1.0, true, "f(z) = z"},
        {"oct-linear", "octonion", 3, -1.0, 1.0, true, "f(z) = z a + b with a = 1 + e1, b = e2"},
        {"oct-moebius-word", "octonion", 3, -1.0, 1.0, true,
         "rotation by u = (1 + e1)/sqrt(2) followed by translation, i.e. (uz + e3 u) u^{-1}"},
        {"oct-inversion", "octonion", 3, 0.5, 1.5, true, "f(z) = conj(z)/|z|^2"},
        {"oct-stretch", "octonion", 3, -1.0, 1.0, false,
         "anisotropic stretch doubling the e1 coordinate (negative control)"},
        {"cl-linear-real", "clifford", 3, -1.0, 1.0, true, "f(z) = 2 z + e1"},
        {"cl-rotation", "clifford", 3, -1.0, 1.0, true,
         "f(z) = alpha z alpha* with alpha = (1 + e1)(1 - e2)/2"},
        {"cl-vahlen-word", "clifford", 3, 0.5, 1.5, true,
         "translate by 2 e1, invert, dilate by 2: f(z) = 2 (z + 2 e1)^{-1}"},
        {"cl-inversion", "clifford", 3, 0.5, 1.5, true, "f(z) = conj(z)/|z|^2"},
        {"cl-stretch", "clifford", 3, -1.0, 1.0, false,
         "anisotropic stretch doubling the e1 coordinate (negative control)"},
    };
    return entries;
}

const CatalogEntry& find_catalog_entry(const std::string& name) {
    for (const auto& e : catalog_entries()) {
        if (e.name == name) return e;
    }
    throw input_error("unknown catalog map: " + name);
}

MapUnderTest<OctonionAlgebra> wrap_map(const OctonionMoebius& t, std::string label,
                                       const NumericPolicy& pol) {
    MapUnderTest<OctonionAlgebra> map;
    map.label = std::move(label);
    map.concurrent_safe = true;
    map.eval = [t, pol](const Octonion& z) { return t.eval(z, pol); };
    return map;
}

MapUnderTest<CliffordAlgebra> wrap_map(const VahlenMatrix& m, std::string label,
                                       const NumericPolicy& pol) {
    MapUnderTest<CliffordAlgebra> map;
    map.label = std::move(label);
    map.concurrent_safe = true;
    map.eval = [m, pol](const Paravector& z) { return m.eval(z, pol); };
    return map;
}

MapUnderTest<OctonionAlgebra> make_octonion_catalog_map(const std::string& name,
                                                        const NumericPolicy& pol,
                                                        bool with_analytic_partials) {
    MapUnderTest<OctonionAlgebra> map;
    map.label = name;
    map.concurrent_safe = true;

    if (name == "oct-identity") {
        map.eval = [](const Octonion& z) { return z; };
        if (with_analytic_partials) {
            map.partials = [](const Octonion&) {
                std::vector<Octonion> p;
                for (int i = 0; i < 8; ++i) p.push_back(oct_e(i));
                return p;
            };
        }
    } else if (name == "oct-linear") {
        const Octonion a = Octonion::from_real(1.0) + oct_e(1);
        const Octonion b = oct_e(2);
        map.eval = [a, b](const Octonion& z) { return z * a + b; };
        if (with_analytic_partials) {
            map.partials = [a](const Octonion&) {
                std::vector<Octonion> p;
                for (int i = 0; i < 8; ++i) p.push_back(oct_e(i) * a);
                return p;
            };
        }
    } else if (name == "oct-moebius-word") {
        const Octonion u = (Octonion::from_real(1.0) + oct_e(1)) * kSqrtHalf;
        const auto word = std::vector<OctGenerator>{OctGenerator::rotation(u),
                                                    OctGenerator::translation(oct_e(3))};
        const OctonionMoebius t = OctonionMoebius::from_word(word);
        map.eval = [t, pol](const Octonion& z) { return t.eval(z, pol); };
        if (with_analytic_partials) {
            const Octonion uinv = inverse(u);
            map.partials = [u, uinv](const Octonion&) {
                std::vector<Octonion> p;
                for (int i = 0; i < 8; ++i) p.push_back((u * oct_e(i)) * uinv);
                return p;
            };
        }
    } else if (name == "oct-inversion") {
        const OctonionMoebius t = OctonionMoebius::from_word({OctGenerator::inversion()});
        map.eval = [t, pol](const Octonion& z) { return t.eval(z, pol); };
        if (with_analytic_partials) {
            map.partials = [](const Octonion& z) {
                return inversion_partials<Octonion>(
                    z, 8, [](const Octonion& a) { return conj(a); },
                    [](int i) { return oct_e(i); },
                    [](const Octonion& a, int i) { return a[i]; });
            };
        }
    } else if (name == "oct-stretch") {
        map.eval = [](const Octonion& z) {
            Octonion w = z;
            w[1] *= 2.0;
            return w;
        };
        if (with_analytic_partials) {
            map.partials = [](const Octonion&) {
                std::vector<Octonion> p;
                for (int i = 0; i < 8; ++i) p.push_back(oct_e(i) * (i == 1 ? 2.0 : 1.0));
                return p;
            };
        }
    } else {
        throw input_error("unknown octonion catalog map: " + name);
    }
    return map;
}

MapUnderTest<CliffordAlgebra> make_clifford_catalog_map(const std::string& name, int n,
                                                        const NumericPolicy& pol,
                                                        bool with_analytic_partials) {
    if (n < 2 || n > kMaxGenerators) {
        throw input_error("clifford catalog maps need 2 <= n <= " +
                          std::to_string(kMaxGenerators));
    }
    MapUnderTest<CliffordAlgebra> map;
    map.label = name;
    map.concurrent_safe = true;
    auto unit = [n](int i) { return Paravector::unit(n, i); };

    if (name == "cl-linear-real") {
        const VahlenMatrix m =
            compose(VahlenMatrix::translation(unit(1)), VahlenMatrix::dilation(n, 2.0));
        map.eval = [m, pol](const Paravector& z) { return m.eval(z, pol); };
        if (with_analytic_partials) {
            map.partials = [n, unit](const Paravector&) {
                std::vector<Paravector> p;
                for (int i = 0; i <= n; ++i) p.push_back(unit(i) * 2.0);
                return p;
            };
        }
    } else if (name == "cl-rotation") {
        std::vector<Paravector> factors = {
            (unit(0) + unit(1)) * kSqrtHalf,
            (unit(0) - unit(2)) * kSqrtHalf,
        };
        const VahlenMatrix m = VahlenMatrix::rotation(n, factors);
        map.eval = [m, pol](const Paravector& z) { return m.eval(z, pol); };
        if (with_analytic_partials) {
            // alpha e_i alpha* stays a paravector; take it directly.
            Multivector alpha = Multivector::scalar(n, 1.0);
            for (const auto& f : factors) alpha = alpha * embed(f, n);
            const Multivector alpha_rev = reversion(alpha);
            map.partials = [n, alpha, alpha_rev, unit](const Paravector&) {
                std::vector<Paravector> p;
                for (int i = 0; i <= n; ++i) {
                    p.push_back(paravector_part(alpha * embed(unit(i), n) * alpha_rev));
                }
                return p;
            };
        }
    } else if (name == "cl-vahlen-word") {
        const std::vector<CliffGenerator> word = {
            CliffGenerator::translation(unit(1) * 2.0),
            CliffGenerator::inversion(),
            CliffGenerator::dilation(2.0),
        };
        const VahlenMatrix m = VahlenMatrix::from_word(n, word);
        map.eval = [m, pol](const Paravector& z) { return m.eval(z, pol); };
        if (with_analytic_partials) {
            map.partials = [n, unit](const Paravector& z) {
                const Paravector g = z + unit(1) * 2.0;
                return inversion_partials<Paravector>(
                    g, n + 1, [](const Paravector& a) { return conj(a); },
                    [n](int i) { return Paravector::unit(n, i); },
                    [](const Paravector& a, int i) { return a[i]; }, 2.0);
            };
        }
    } else if (name == "cl-inversion") {
        const VahlenMatrix m = VahlenMatrix::inversion(n);
        map.eval = [m, pol](const Paravector& z) { return m.eval(z, pol); };
        if (with_analytic_partials) {
            map.partials = [n](const Paravector& z) {
                return inversion_partials<Paravector>(
                    z, n + 1, [](const Paravector& a) { return conj(a); },
                    [n](int i) { return Paravector::unit(n, i); },
                    [](const Paravector& a, int i) { return a[i]; });
            };
        }
    } else if (name == "cl-stretch") {
        map.eval = [](const Paravector& z) {
            Paravector w = z;
            w[1] *= 2.0;
            return w;
        };
        if (with_analytic_partials) {
            map.partials = [n, unit](const Paravector&) {
                std::vector<Paravector> p;
                for (int i = 0; i <= n; ++i) p.push_back(unit(i) * (i == 1 ? 2.0 : 1.0));
                return p;
            };
        }
    } else {
        throw input_error("unknown clifford catalog map: " + name);
    }
    return map;
}

namespace {

Octonion parse_octonion(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 8) {
        throw input_error(what + " must be an array of 8 numbers");
    }
    Octonion o;
    for (int i = 0; i < 8; ++i) o[i] = j[static_cast<std::size_t>(i)].get<double>();
    return o;
}

Paravector parse_paravector(const json& j, int n, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n + 1) {
        throw input_error(what + " must be an array of " + std::to_string(n + 1) + " numbers");
    }
    Paravector p(n);
    for (int i = 0; i <= n; ++i) p[i] = j[static_cast<std::size_t>(i)].get<double>();
    return p;
}

Multivector parse_clifford_entry(const json& j, int n, const std::string& what) {
    if (!j.is_array()) throw input_error(what + " must be an array");
    if (static_cast<int>(j.size()) == n + 1) {
        return embed(parse_paravector(j, n, what), n);
    }
    if (j.size() == (std::size_t{1} << n)) {
        std::vector<double> coeffs;
        for (const auto& v : j) coeffs.push_back(v.get<double>());
        return Multivector::from_coeffs(n, std::move(coeffs));
    }
    throw input_error(what + " must have " + std::to_string(n + 1) + " (paravector) or " +
                      std::to_string(std::size_t{1} << n) + " (multivector) entries");
}

std::string op_name(const json& tok) {
    if (!tok.contains("op")) throw input_error("word token missing \"op\"");
    std::string op = tok["op"].get<std::string>();
    if (op == "translate") op = "translation";
    if (op == "dilate") op = "dilation";
    if (op == "rotate") op = "rotation";
    if (op == "invert") op = "inversion";
    return op;
}

}  // namespace

MapConfig parse_map_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw input_error(std::string("map config parse failure: ") + e.what());
    }
    MapConfig cfg;
    try {
        cfg.name = j.value("name", std::string("custom-map"));
        if (!j.contains("algebra")) throw input_error("map config missing \"algebra\"");
        cfg.algebra = j["algebra"].get<std::string>();
        if (cfg.algebra != "octonion" && cfg.algebra != "clifford") {
            throw input_error("algebra must be \"octonion\" or \"clifford\"");
        }
        cfg.n = cfg.algebra == "octonion" ? 7 : j.value("n", 3);
        if (j.contains("box")) {
            if (!j["box"].is_array() || j["box"].size() != 2) {
                throw input_error("box must be [lo, hi]");
            }
            cfg.has_box = true;
            cfg.box_lo = j["box"][0].get<double>();
            cfg.box_hi = j["box"][1].get<double>();
        }

        if (j.contains("word")) {
            cfg.is_word = true;
            for (const auto& tok : j["word"]) {
                const std::string op = op_name(tok);
                if (cfg.algebra == "octonion") {
                    if (op == "translation") {
                        cfg.oct_word.push_back(
                            OctGenerator::translation(parse_octonion(tok.at("w"), "w")));
                    } else if (op == "dilation") {
                        cfg.oct_word.push_back(OctGenerator::dilation(tok.at("t").get<double>()));
                    } else if (op == "rotation") {
                        cfg.oct_word.push_back(
                            OctGenerator::rotation(parse_octonion(tok.at("u"), "u")));
                    } else if (op == "inversion") {
                        cfg.oct_word.push_back(OctGenerator::inversion());
                    } else {
                        throw input_error("unknown word op: " + op);
                    }
                } else {
                    if (op == "translation") {
                        cfg.cliff_word.push_back(
                            CliffGenerator::translation(parse_paravector(tok.at("w"), cfg.n, "w")));
                    } else if (op == "dilation") {
                        cfg.cliff_word.push_back(
                            CliffGenerator::dilation(tok.at("t").get<double>()));
                    } else if (op == "rotation") {
                        std::vector<Paravector> factors;
                        for (const auto& f : tok.at("factors")) {
                            factors.push_back(parse_paravector(f, cfg.n, "rotation factor"));
                        }
                        cfg.cliff_word.push_back(CliffGenerator::rotation(std::move(factors)));
                    } else if (op == "inversion") {
                        cfg.cliff_word.push_back(CliffGenerator::inversion());
                    } else {
                        throw input_error("unknown word op: " + op);
                    }
                }
            }
        } else if (j.contains("a") && j.contains("b") && j.contains("c") && j.contains("d")) {
            cfg.is_word = false;
            if (cfg.algebra == "octonion") {
                cfg.oct_raw = OctMoebiusCoeffs{
                    parse_octonion(j["a"], "a"), parse_octonion(j["b"], "b"),
                    parse_octonion(j["c"], "c"), parse_octonion(j["d"], "d")};
            } else {
                cfg.cliff_a = parse_clifford_entry(j["a"], cfg.n, "a");
                cfg.cliff_b = parse_clifford_entry(j["b"], cfg.n, "b");
                cfg.cliff_c = parse_clifford_entry(j["c"], cfg.n, "c");
                cfg.cliff_d = parse_clifford_entry(j["d"], cfg.n, "d");
            }
        } else {
            throw input_error("map config needs a \"word\" or a raw {a,b,c,d} quadruple");
        }
    } catch (const json::exception& e) {
        throw input_error(std::string("map config parse failure: ") + e.what());
    }
    return cfg;
}

MapUnderTest<OctonionAlgebra> instantiate_octonion(const MapConfig& cfg,
                                                   const NumericPolicy& pol) {
    if (cfg.algebra != "octonion") throw input_error("config is not an octonion map");
    const OctonionMoebius t = cfg.is_word
                                  ? OctonionMoebius::from_word(cfg.oct_word)
                                  : OctonionMoebius::raw(cfg.oct_raw.a, cfg.oct_raw.b,
                                                         cfg.oct_raw.c, cfg.oct_raw.d);
    return wrap_map(t, cfg.name, pol);
}

MapUnderTest<CliffordAlgebra> instantiate_clifford(const MapConfig& cfg,
                                                   const NumericPolicy& pol) {
    if (cfg.algebra != "clifford") throw input_error("config is not a clifford map");
    const VahlenMatrix m = cfg.is_word
                               ? VahlenMatrix::from_word(cfg.n, cfg.cliff_word)
                               : VahlenMatrix::raw(cfg.cliff_a, cfg.cliff_b, cfg.cliff_c,
                                                   cfg.cliff_d);
    return wrap_map(m, cfg.name, pol);
}

}  // namespace gaussconf
