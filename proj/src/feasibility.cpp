#include "morava/feasibility.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "morava/graded_action.hpp"
#include "morava/perm_submodule.hpp"

namespace morava {

namespace {

std::vector<PresetSubgroup> u_order(unsigned p, unsigned d)
{
    return d == 3 ? uv_class_order(p) : std::vector<PresetSubgroup>{};
}

// Index of the U-class containing the subgroup with the given members.
std::size_t u_class_of(const GroupData& U, const std::vector<SubgroupClass>& classes, std::vector<ElementIndex> members)
{
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].order() != members.size())
            continue;
        for (ElementIndex g = 0; g < U.order(); ++g) {
            std::vector<ElementIndex> conj;
            for (ElementIndex h : classes[i].representative.members)
                conj.push_back(U.conjugate(h, g));
            std::sort(conj.begin(), conj.end());
            if (conj == members)
                return i;
        }
    }
    throw std::logic_error("u_class_of: subgroup not found among the classes of U(V)");
}

}  // namespace

TransitiveTable transitive_table(unsigned p, unsigned d, std::size_t max_order)
{
    const GroupData G = close(preset(p, d, "GL").generators, p, d, max_order);
    const auto gl_classes = conjugacy_classes_of_subgroups(G, subgroup_lattice(G, max_order));
    const auto regular = p_regular_classes(G, p, max_order);
    const GroupData U = close(preset(p, d, "UV").generators, p, d, max_order);
    const auto u_classes = conjugacy_classes_of_subgroups(U, subgroup_lattice(U, max_order), u_order(p, d));

    TransitiveTable t;
    for (const auto& c : regular)
        t.regular_classes.push_back(c.label);
    for (const auto& c : u_classes)
        t.u_classes.push_back(c.label);
    std::vector<ElementIndex> u_in_g;
    for (const FpMatrix& m : U.elements())
        u_in_g.push_back(G.index_of(m));

    for (const SubgroupClass& cls : gl_classes) {
        const SubgroupSpec& H = cls.representative;
        t.gl_classes.push_back(cls.label);
        t.gl_class_orders.push_back(cls.order());
        std::vector<long long> chars;
        for (const auto& c : regular)
            chars.push_back((long long)perm_character(G, H, c.representative));
        t.characters.push_back(std::move(chars));

        // U-orbits on G/H, classified by point stabilizers.
        const auto reps = transversal(G, H);
        std::vector<std::size_t> coset_of(G.order());
        for (std::size_t c = 0; c < reps.size(); ++c)
            for (ElementIndex h : H.members)
                coset_of[G.multiply(reps[c], h)] = c;
        std::vector<long long> census(u_classes.size(), 0);
        std::vector<char> seen(reps.size(), 0);
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if (seen[c])
                continue;
            std::vector<ElementIndex> stab;
            for (ElementIndex u = 0; u < U.order(); ++u) {
                const std::size_t image = coset_of[G.multiply(u_in_g[u], reps[c])];
                seen[image] = 1;
                if (image == c)
                    stab.push_back(u);
            }
            ++census[u_class_of(U, u_classes, stab)];
        }
        t.census.push_back(std::move(census));
    }
    return t;
}

std::optional<std::vector<std::size_t>> solve_transitive_census(const TransitiveTable& table,
                                                                const std::vector<long long>& characters,
                                                                const std::vector<long long>& census)
{
    const std::size_t H = table.gl_classes.size();
    // Joint target vector: census followed by characters.
    std::vector<std::vector<long long>> cols(H);
    for (std::size_t h = 0; h < H; ++h) {
        cols[h] = table.census[h];
        cols[h].insert(cols[h].end(), table.characters[h].begin(), table.characters[h].end());
    }
    std::vector<long long> target = census;
    target.insert(target.end(), characters.begin(), characters.end());
    for (long long v : target)
        if (v < 0)
            return std::nullopt;

    // All columns are non-negative: a positive residue needs a later column
    // supported at that coordinate.
    const std::size_t R = target.size();
    std::vector<std::vector<bool>> covers(H + 1, std::vector<bool>(R, false));
    for (std::size_t h = H; h-- > 0;)
        for (std::size_t j = 0; j < R; ++j)
            covers[h][j] = covers[h + 1][j] || cols[h][j] > 0;

    std::set<std::pair<std::size_t, std::vector<long long>>> dead;
    std::vector<std::size_t> choice(H, 0);
    std::function<bool(std::size_t, std::vector<long long>&)> dfs = [&](std::size_t h, std::vector<long long>& rest) {
        for (std::size_t j = 0; j < R; ++j)
            if (rest[j] < 0 || (rest[j] > 0 && !covers[h][j]))
                return false;
        if (h == H)
            return true;
        if (dead.count({h, rest}))
            return false;
        long long bound = -1;
        for (std::size_t j = 0; j < R; ++j)
            if (cols[h][j] > 0) {
                const long long b = rest[j] / cols[h][j];
                bound = bound < 0 ? b : std::min(bound, b);
            }
        if (bound < 0)
            bound = 0;
        for (long long a = bound; a >= 0; --a) {
            for (std::size_t j = 0; j < R; ++j)
                rest[j] -= a * cols[h][j];
            choice[h] = std::size_t(a);
            const bool ok = dfs(h + 1, rest);
            for (std::size_t j = 0; j < R; ++j)
                rest[j] += a * cols[h][j];
            if (ok)
                return true;
        }
        dead.insert({h, rest});
        return false;
    };
    if (dfs(0, target))
        return choice;
    return std::nullopt;
}

FeasibilityResult gl_graded_perm_feasibility(unsigned p, unsigned n, unsigned d, unsigned k, std::size_t max_order)
{
    FeasibilityResult res;
    const TransitiveTable table = transitive_table(p, d, max_order);
    const GroupData G = close(preset(p, d, "GL").generators, p, d, max_order);
    const auto regular = p_regular_classes(G, p, max_order);

    std::vector<long long> chars;
    for (const ElementClass& c : regular) {
        const Cyclotomic chi = character_via_eq31(p, n, k, lift_eigenvalues(G.element(c.representative)), true);
        res.characters.push_back(chi);
        if (!chi.is_rational()) {
            res.reason = "irrational Brauer character value at class " + c.label;
            return res;
        }
        if (!chi.is_nonnegative_integer()) {
            res.reason = "negative or fractional Brauer character value at class " + c.label;
            return res;
        }
        chars.push_back(chi.rational_value()->get_num().get_si());
    }

    const Preset up = preset(p, d, "UV");
    const GroupData U = close(up.generators, p, d, max_order);
    const AlgebraContext ctx(p, n, d);
    const GradedAction piece = build_graded_action(ctx, up.generators, k, Variant::K, true);
    const Representation rho = extend_representation(U, piece.matrices);
    const PermDecomposition dec = is_permutation_module(rho, u_order(p, d), {}, max_order);
    res.census = dec.multiplicities;
    if (!dec.is_permutation_module()) {
        res.reason = "restriction to U(V) is not a permutation module";
        return res;
    }
    std::vector<long long> census(dec.multiplicities.begin(), dec.multiplicities.end());
    if (auto sol = solve_transitive_census(table, chars, census)) {
        res.feasible = true;
        res.certificate = *sol;
        res.reason = "matching combination of transitive permutation modules found";
    } else {
        res.reason = "no combination of transitive permutation modules matches characters and U(V)-census";
    }
    return res;
}

}  // namespace morava
