#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "morava/fp_matrix.hpp"

namespace morava {

using ElementIndex = std::uint32_t;

// A finite group of d x d matrices over F_p, enumerated by breadth-first closure.
class GroupData {
public:
    GroupData(unsigned p, unsigned d) : p_(p), d_(d) {}

    unsigned p() const { return p_; }
    unsigned d() const { return d_; }
    std::size_t order() const { return elements_.size(); }
    const FpMatrix& element(ElementIndex i) const { return elements_[i]; }
    const std::vector<FpMatrix>& elements() const { return elements_; }
    const std::vector<FpMatrix>& generators() const { return generators_; }

    // Index of a matrix in the group, or -1.
    long long find(const FpMatrix& m) const;
    ElementIndex index_of(const FpMatrix& m) const;
    ElementIndex multiply(ElementIndex a, ElementIndex b) const;
    ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
    unsigned element_order(ElementIndex a) const { return orders_[a]; }
    ElementIndex conjugate(ElementIndex h, ElementIndex g) const;  // g h g^-1

    // Element e (e != 0) equals generators()[bfs_step(e).first] * element(bfs_step(e).second).
    std::pair<unsigned, ElementIndex> bfs_step(ElementIndex e) const { return steps_[e]; }

    bool is_p_group() const;

    friend GroupData close(const std::vector<FpMatrix>& generators, unsigned p, unsigned d, std::size_t max_order);

private:
    std::string key(const FpMatrix& m) const;

    unsigned p_, d_;
    std::vector<FpMatrix> generators_;
    std::vector<FpMatrix> elements_;
    std::unordered_map<std::string, ElementIndex> lookup_;
    std::vector<std::pair<unsigned, ElementIndex>> steps_;
    std::vector<ElementIndex> table_;  // dense product table when small enough
    std::vector<ElementIndex> inverses_;
    std::vector<unsigned> orders_;
};

GroupData close(const std::vector<FpMatrix>& generators, unsigned p, unsigned d, std::size_t max_order = 20000);

struct SubgroupSpec {
    std::vector<ElementIndex> members;     // sorted
    std::vector<ElementIndex> generators;  // small generating set
    std::string label;

    std::size_t order() const { return members.size(); }
    bool contains(ElementIndex e) const;
};

// Closure of a set of elements inside G.
SubgroupSpec subgroup_generated(const GroupData& G, const std::vector<ElementIndex>& gens, std::string label = {});
bool is_subgroup(const GroupData& G, const std::vector<ElementIndex>& members);

std::vector<SubgroupSpec> subgroup_lattice(const GroupData& G, std::size_t max_order = 200);

struct SubgroupClass {
    std::string label;
    SubgroupSpec representative;
    std::size_t size = 0;  // number of conjugate subgroups
    std::size_t order() const { return representative.order(); }
    std::size_t index_in(const GroupData& G) const { return G.order() / order(); }
};

struct PresetSubgroup {
    std::string label;
    std::vector<FpMatrix> generators;
};

// Classes sorted by order, then by position in `preset` (the first preset
// subgroup inside a class names it and serves as representative), then by
// smallest member set.
std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const GroupData& G, const std::vector<SubgroupSpec>& lattice,
                                                          const std::vector<PresetSubgroup>& preset = {});

// One representative per left coset gH, greedy in element-index order.
std::vector<ElementIndex> transversal(const GroupData& G, const SubgroupSpec& H);

struct ElementClass {
    std::string label;
    ElementIndex representative = 0;
    unsigned order = 1;
    std::size_t size = 1;
};

std::vector<ElementClass> conjugacy_classes(const GroupData& G, std::size_t max_order = 10000);
std::vector<ElementClass> p_regular_classes(const GroupData& G, unsigned p, std::size_t max_order = 10000);

// Named generator sets; see preset_labels() for the recognised names.
struct Preset {
    std::vector<FpMatrix> generators;
    std::vector<std::string> labels;
};
Preset preset(unsigned p, unsigned d, const std::string& label);
std::vector<std::string> preset_labels();

// The ordered subgroup class list of U(V), d = 3, used by the tables.
std::vector<PresetSubgroup> uv_class_order(unsigned p);

// Matrices of a representation at every group element, from generator
// matrices by rho(s h) = rho(s) rho(h).
struct Representation {
    const GroupData* group = nullptr;
    std::vector<FpMatrix> matrices;

    const FpMatrix& operator()(ElementIndex e) const { return matrices[e]; }
    std::size_t dim() const { return matrices.empty() ? 0 : matrices[0].rows(); }
};

Representation extend_representation(const GroupData& G, const std::vector<FpMatrix>& generator_matrices);
bool satisfies_homomorphism_law(const Representation& rho);

}  // namespace morava
