#include "gaussconf/octonion.hpp"

#include <string>

namespace gaussconf {

namespace {

// Unit table for e_1..e_7, rows * columns. Entry {s, k} means e_i e_j = s e_k.
// Positively oriented triples: (1,2,4), (1,3,5), (2,3,6), (1,7,6), (2,5,7),
// (3,7,4), (4,6,5).
constexpr BasisProduct kUnitTable[7][7] = {
    // e1          e2          e3          e4          e5          e6          e7
    {{-1, 0}, {+1, 4}, {+1, 5}, {-1, 2}, {-1, 3}, {-1, 7}, {+1, 6}},  // e1
    {{-1, 4}, {-1, 0}, {+1, 6}, {+1, 1}, {+1, 7}, {-1, 3}, {-1, 5}},  // e2
    {{-1, 5}, {-1, 6}, {-1, 0}, {-1, 7}, {+1, 1}, {+1, 2}, {+1, 4}},  // e3
    {{+1, 2}, {-1, 1}, {+1, 7}, {-1, 0}, {-1, 6}, {+1, 5}, {-1, 3}},  // e4
    {{+1, 3}, {-1, 7}, {-1, 1}, {+1, 6}, {-1, 0}, {-1, 4}, {+1, 2}},  // e5
    {{+1, 7}, {+1, 3}, {-1, 2}, {-1, 5}, {+1, 4}, {-1, 0}, {-1, 1}},  // e6
    {{-1, 6}, {+1, 5}, {-1, 4}, {+1, 3}, {-1, 2}, {+1, 1}, {-1, 0}},  // e7
};

}  // namespace

BasisProduct octonion_basis_product(int i, int j) {
    if (i < 0 || i > 7 || j < 0 || j > 7) {
        throw input_error("octonion basis index out of range");
    }
    if (i == 0) return {+1, j};
    if (j == 0) return {+1, i};
    return kUnitTable[i - 1][j - 1];
}

Octonion Octonion::unit(int i, double scale) {
    if (i < 0 || i > 7) throw input_error("octonion unit index out of range");
    Octonion o;
    o.c[static_cast<std::size_t>(i)] = scale;
    return o;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        const double ai = a.c[i];
        if (ai == 0.0) continue;
        for (int j = 0; j < 8; ++j) {
            const double bj = b.c[j];
            if (bj == 0.0) continue;
            const BasisProduct p = octonion_basis_product(i, j);
            r.c[static_cast<std::size_t>(p.index)] += static_cast<double>(p.sign) * ai * bj;
        }
    }
    return r;
}

Octonion inverse(const Octonion& a, double eps) {
    const double n2 = norm_sq(a);
    if (std::sqrt(n2) <= eps) {
        throw singular_error("octonion inverse of (near-)zero element, |a| = " +
                             std::to_string(std::sqrt(n2)));
    }
    return conj(a) * (1.0 / n2);
}

}  // namespace gaussconf
