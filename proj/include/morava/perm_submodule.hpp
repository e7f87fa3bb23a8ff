#pragma once

#include <string>
#include <vector>

#include "morava/linalg.hpp"
#include "morava/matrix_groups.hpp"

namespace morava {

struct PermDecomposition {
    std::vector<std::string> class_labels;
    std::vector<std::size_t> class_indices;  // |G : G_i|
    std::vector<std::size_t> multiplicities;
    std::size_t dim_M_prime = 0;
    std::size_t dim_M = 0;
    bool complete = false;  // the class list covers every conjugacy class of subgroups
    // Fixed vectors x whose trace images extend M_{i-1} to M_i (when requested).
    std::vector<std::vector<FpVector>> generators;
    bool verified = false;  // the generators span a submodule of dimension dim_M_prime

    bool is_permutation_module() const { return complete && dim_M_prime == dim_M; }
};

struct PermOptions {
    bool with_generators = false;
    bool verify = false;  // implies with_generators
};

// Maximal permutation submodule of a module over a p-group by the chain
// M_i = M_{i-1} + Im(sum_{g in G/G_i} g : M^{G_i} -> M).
// `classes` must have non-decreasing orders.
PermDecomposition perm_submodule(const Representation& rho, const std::vector<SubgroupClass>& classes,
                                 bool complete, const PermOptions& options = {});

// Runs perm_submodule over all classes of subgroups (in `preset` order where given).
PermDecomposition is_permutation_module(const Representation& rho, const std::vector<PresetSubgroup>& preset = {},
                                        const PermOptions& options = {}, std::size_t max_order = 200);

// Generator matrices of F_p[S] for S the disjoint union of the coset spaces
// G/H_j, one matrix per generator of G.
std::vector<FpMatrix> permutation_module_generators(const GroupData& G, const std::vector<SubgroupSpec>& stabilizers,
                                                    unsigned p);

}  // namespace morava
