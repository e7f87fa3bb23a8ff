#include "morava/perm_submodule.hpp"

#include <stdexcept>

namespace morava {

namespace {

// Common fixed vectors of several matrices, one generator at a time: the
// kernel of (g - I) restricted to the current fixed space stays small.
std::vector<FpVector> common_fixed_space(const std::vector<FpMatrix>& mats, std::size_t dim, unsigned p)
{
    std::vector<FpVector> basis;
    if (mats.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            FpVector e(dim, 0);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    basis = fixed_space(std::span<const FpMatrix>(&mats[0], 1));
    const FpMatrix id = FpMatrix::identity(dim, p);
    for (std::size_t g = 1; g < mats.size() && !basis.empty(); ++g) {
        const FpMatrix shifted = mats[g] - id;
        // Columns: (g - I) applied to the current basis vectors.
        FpMatrix w(dim, basis.size(), p);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const FpVector image = shifted * std::span<const Scalar>(basis[c]);
            for (std::size_t r = 0; r < dim; ++r)
                w(r, c) = image[r];
        }
        std::vector<FpVector> next;
        for (const FpVector& coeffs : kernel_basis(w)) {
            FpVector v(dim, 0);
            for (std::size_t c = 0; c < basis.size(); ++c)
                if (coeffs[c])
                    kernels::axpy(v.data(), basis[c].data(), coeffs[c], dim, p);
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }
    return basis;
}

}  // namespace

PermDecomposition perm_submodule(const Representation& rho, const std::vector<SubgroupClass>& classes, bool complete,
                                 const PermOptions& options)
{
    const GroupData& G = *rho.group;
    if (!G.is_p_group())
        throw std::invalid_argument("perm_submodule: group order is not a power of p");
    for (std::size_t i = 1; i < classes.size(); ++i)
        if (classes[i].order() < classes[i - 1].order())
            throw std::invalid_argument("perm_submodule: subgroup classes must have non-decreasing orders");
    const std::size_t dim = rho.dim();
    const unsigned p = rho.matrices.empty() ? G.p() : rho.matrices[0].p();
    const bool want_gens = options.with_generators || options.verify;

    PermDecomposition out;
    out.dim_M = dim;
    out.complete = complete;
    RowBasis chain(dim, p);
    for (const SubgroupClass& cls : classes) {
        const SubgroupSpec& H = cls.representative;
        std::vector<FpMatrix> hmats;
        for (ElementIndex h : H.generators)
            hmats.push_back(rho(h));
        const std::vector<FpVector> fixed = common_fixed_space(hmats, dim, p);

        FpMatrix trace(dim, dim, p);
        for (ElementIndex g : transversal(G, H))
            trace += rho(g);

        std::size_t m = 0;
        std::vector<FpVector> chosen;
        for (const FpVector& x : fixed) {
            if (chain.insert(trace * std::span<const Scalar>(x))) {
                ++m;
                if (want_gens)
                    chosen.push_back(x);
            }
        }
        out.class_labels.push_back(cls.label);
        out.class_indices.push_back(cls.index_in(G));
        out.multiplicities.push_back(m);
        out.dim_M_prime += m * cls.index_in(G);
        if (want_gens)
            out.generators.push_back(std::move(chosen));
    }

    if (options.verify) {
        // The G-submodule spanned by the chosen vectors must have the
        // dimension predicted by the multiplicities.
        RowBasis span(dim, p);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (const FpVector& x : out.generators[i]) {
                for (ElementIndex h : classes[i].representative.generators)
                    if (rho(h) * std::span<const Scalar>(x) != x)
                        throw std::logic_error("perm_submodule: chosen vector is not fixed");
                for (ElementIndex g = 0; g < G.order(); ++g)
                    span.insert(rho(g) * std::span<const Scalar>(x));
            }
        out.verified = span.dim() == out.dim_M_prime;
    }
    return out;
}

PermDecomposition is_permutation_module(const Representation& rho, const std::vector<PresetSubgroup>& preset,
                                        const PermOptions& options, std::size_t max_order)
{
    const GroupData& G = *rho.group;
    if (!G.is_p_group())
        throw std::invalid_argument("is_permutation_module: group order is not a power of p");
    const auto classes = conjugacy_classes_of_subgroups(G, subgroup_lattice(G, max_order), preset);
    return perm_submodule(rho, classes, true, options);
}

std::vector<FpMatrix> permutation_module_generators(const GroupData& G, const std::vector<SubgroupSpec>& stabilizers,
                                                    unsigned p)
{
    // Points are cosets gH; the coset of each element is looked up by table.
    struct Orbit {
        std::vector<ElementIndex> reps;
        std::vector<std::size_t> coset_of;  // element -> local coset number
    };
    std::vector<Orbit> orbits;
    std::size_t total = 0;
    for (const SubgroupSpec& H : stabilizers) {
        Orbit o;
        o.reps = transversal(G, H);
        o.coset_of.assign(G.order(), 0);
        for (std::size_t c = 0; c < o.reps.size(); ++c)
            for (ElementIndex h : H.members)
                o.coset_of[G.multiply(o.reps[c], h)] = c;
        total += o.reps.size();
        orbits.push_back(std::move(o));
    }
    std::vector<FpMatrix> mats;
    for (const FpMatrix& gen : G.generators()) {
        const ElementIndex s = G.index_of(gen);
        FpMatrix m(total, total, p);
        std::size_t offset = 0;
        for (const Orbit& o : orbits) {
            for (std::size_t c = 0; c < o.reps.size(); ++c)
                m.set(offset + o.coset_of[G.multiply(s, o.reps[c])], offset + c, 1);
            offset += o.reps.size();
        }
        mats.push_back(std::move(m));
    }
    return mats;
}

}  // namespace morava
