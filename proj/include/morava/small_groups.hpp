#pragma once

#include <array>
#include <optional>
#include <string>

#include "morava/matrix_groups.hpp"

namespace morava {

// Summands I_1..I_7 of an F_3[SL_2(F_3)]-module, recovered from seven ranks.
struct SL2F3Report {
    std::array<std::size_t, 7> ranks{};
    std::array<std::size_t, 7> multiplicities{};
    std::size_t dim = 0;

    static constexpr std::array<std::size_t, 7> kDims{1, 2, 3, 2, 4, 6, 3};
    // Summands among I_1, I_2, I_4, I_5 (the others are projective).
    std::size_t non_projective_count() const;
    std::string to_string() const;
};

// rho must be a representation over F_3 of a group of order 24 with a unique
// involution and six elements of order 4.
SL2F3Report sl2f3_decompose(const Representation& rho);

// Counts of the indecomposable F_2[GL_2(F_2)]-modules T (trivial), N (two
// dimensional, order-3 elements acting trivially) and V (the natural module).
struct GL2F2Report {
    std::size_t t = 0, n = 0, v = 0;

    std::size_t dim() const { return t + 2 * n + 2 * v; }
    bool operator==(const GL2F2Report&) const = default;
    GL2F2Report& operator+=(const GL2F2Report& o);
    std::string to_string() const;
};

GL2F2Report gl2f2_decompose(const Representation& rho);

// Closed form for L^k_{n,2} over F_2 (five cases by parity of n and k mod 3).
GL2F2Report l_formula_52(unsigned n, unsigned k);
// Coefficients of t^j in the Molien series P_T, P_N, P_V.
GL2F2Report molien_counts_51(unsigned j);
// L^k = L~^k + L~^{N+k} (N = 2^n - 1), with L~^j = S^j for j <= N and the dual
// of S^{2N-j} above.
GL2F2Report truncated_l_decomposition_via_51(unsigned n, unsigned k);

// Writes a module as a sum of the transitive permutation modules
// T = F_2[G/G], N = F_2[G/C_3], T+V = F_2[G/C_2], N+2V = F_2[G/1].
struct TransitiveCensus {
    std::size_t trivial = 0, cosets_c3 = 0, cosets_c2 = 0, regular = 0;
};
std::optional<TransitiveCensus> gl2f2_transitive_census(const GL2F2Report& r);

// Summand counts of F_2[Hom(V, F_2^n)] for d = 2 from its orbit structure.
GL2F2Report gl2f2_hom_module(unsigned n);

}  // namespace morava
