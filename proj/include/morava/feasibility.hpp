#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morava/brauer.hpp"
#include "morava/matrix_groups.hpp"

namespace morava {

// Invariants of the transitive permutation modules F_p[G/H] of G = GL_d(F_p):
// Brauer character (fixed points) on each p-regular class and the census of
// the restriction to U(V) by orbit type.
struct TransitiveTable {
    std::vector<std::string> gl_classes;       // subgroup classes of GL
    std::vector<std::size_t> gl_class_orders;
    std::vector<std::string> regular_classes;  // p-regular element classes
    std::vector<std::string> u_classes;        // subgroup classes of U(V)
    std::vector<std::vector<long long>> characters;  // [H][class]
    std::vector<std::vector<long long>> census;      // [H][U class]
};

TransitiveTable transitive_table(unsigned p, unsigned d, std::size_t max_order = 200);

// Non-negative integer combination of the transitive modules with the given
// characters and U(V)-census, or nullopt.
std::optional<std::vector<std::size_t>> solve_transitive_census(const TransitiveTable& table,
                                                                const std::vector<long long>& characters,
                                                                const std::vector<long long>& census);

struct FeasibilityResult {
    bool feasible = false;
    std::string reason;
    std::vector<std::size_t> certificate;  // multiplicities per GL subgroup class
    std::vector<Cyclotomic> characters;    // of the reduced piece, per p-regular class
    std::vector<std::size_t> census;       // U(V) multiplicities of the reduced piece
};

// Could the reduced piece K~^k_{n,d} be a GL_d(F_p)-permutation module?
FeasibilityResult gl_graded_perm_feasibility(unsigned p, unsigned n, unsigned d, unsigned k,
                                             std::size_t max_order = 200);

}  // namespace morava
