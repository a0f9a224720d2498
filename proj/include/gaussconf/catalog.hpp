#pragma once

#include <string>
#include <vector>

#include "gaussconf/conformal.hpp"
#include "gaussconf/moebius.hpp"

namespace gaussconf {

struct CatalogEntry {
    std::string name;
    std::string algebra;  // octonion | clifford
    int default_n = 3;    // clifford only
    double box_lo = -1.0;
    double box_hi = 1.0;
    bool expect_conformal = true;
    std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& find_catalog_entry(const std::string& name);

// Builds the named catalog map. with_analytic_partials attaches closed-form
// partial derivatives so the finite differences act as a cross-check instead
// of the primary path.
MapUnderTest<OctonionAlgebra> make_octonion_catalog_map(const std::string& name,
                                                        const NumericPolicy& pol,
                                                        bool with_analytic_partials = false);
MapUnderTest<CliffordAlgebra> make_clifford_catalog_map(const std::string& name, int n,
                                                        const NumericPolicy& pol,
                                                        bool with_analytic_partials = false);

// Wrappers turning transformation objects into maps under test.
MapUnderTest<OctonionAlgebra> wrap_map(const OctonionMoebius& t, std::string label,
                                       const NumericPolicy& pol);
MapUnderTest<CliffordAlgebra> wrap_map(const VahlenMatrix& m, std::string label,
                                       const NumericPolicy& pol);

// Parsed map config file: either a generator word or a raw coefficient
// quadruple, in one of the two algebras.
struct MapConfig {
    std::string name;
    std::string algebra;
    int n = 3;
    bool has_box = false;
    double box_lo = -1.0;
    double box_hi = 1.0;
    bool is_word = false;
    std::vector<OctGenerator> oct_word;
    std::vector<CliffGenerator> cliff_word;
    OctMoebiusCoeffs oct_raw{};
    Multivector cliff_a, cliff_b, cliff_c, cliff_d;

    MapConfig() : cliff_a(1), cliff_b(1), cliff_c(1), cliff_d(1) {}
};

MapConfig parse_map_config(const std::string& json_text);

MapUnderTest<OctonionAlgebra> instantiate_octonion(const MapConfig& cfg, const NumericPolicy& pol);
MapUnderTest<CliffordAlgebra> instantiate_clifford(const MapConfig& cfg, const NumericPolicy& pol);

}  // namespace gaussconf
