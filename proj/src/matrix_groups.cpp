#include "morava/matrix_groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "morava/ext_field.hpp"
#include "morava/linalg.hpp"

namespace morava {

namespace {

constexpr std::size_t kTableLimit = 2048;

FpMatrix elementary(unsigned d, unsigned p, unsigned i, unsigned j, long long a = 1)
{
    FpMatrix m = FpMatrix::identity(d, p);
    m.set(i, j, a);
    return m;
}

Scalar primitive_root(unsigned p)
{
    const PrimeField& f = prime_field(p);
    for (unsigned g = 1; g < p; ++g) {
        unsigned ord = 1;
        Scalar x = Scalar(g);
        while (x != 1) {
            x = f.mul(x, Scalar(g));
            ++ord;
        }
        if (ord == p - 1)
            return Scalar(g);
    }
    return 1;
}

}  // namespace

std::string GroupData::key(const FpMatrix& m) const
{
    return std::string(m.data().begin(), m.data().end());
}

long long GroupData::find(const FpMatrix& m) const
{
    auto it = lookup_.find(key(m));
    return it == lookup_.end() ? -1 : static_cast<long long>(it->second);
}

ElementIndex GroupData::index_of(const FpMatrix& m) const
{
    const long long i = find(m);
    if (i < 0)
        throw std::invalid_argument("GroupData: matrix is not a group element");
    return ElementIndex(i);
}

ElementIndex GroupData::multiply(ElementIndex a, ElementIndex b) const
{
    if (!table_.empty())
        return table_[std::size_t(a) * order() + b];
    return index_of(elements_[a] * elements_[b]);
}

ElementIndex GroupData::conjugate(ElementIndex h, ElementIndex g) const
{
    return multiply(multiply(g, h), inverse(g));
}

bool GroupData::is_p_group() const
{
    std::size_t n = order();
    while (n % p_ == 0)
        n /= p_;
    return n == 1;
}

GroupData close(const std::vector<FpMatrix>& generators, unsigned p, unsigned d, std::size_t max_order)
{
    GroupData G(p, d);
    for (const FpMatrix& g : generators) {
        if (g.rows() != d || g.cols() != d || g.p() != p)
            throw std::invalid_argument("close: generator has the wrong shape or field");
        if (rank(g) != d)
            throw std::invalid_argument("close: generator is not invertible");
    }
    G.generators_ = generators;
    auto add = [&](FpMatrix m, std::pair<unsigned, ElementIndex> step) {
        const std::string k = G.key(m);
        if (G.lookup_.count(k))
            return;
        if (G.elements_.size() >= max_order)
            throw std::length_error("close: group order exceeds the configured bound");
        G.lookup_.emplace(k, ElementIndex(G.elements_.size()));
        G.elements_.push_back(std::move(m));
        G.steps_.push_back(step);
    };
    add(FpMatrix::identity(d, p), {0, 0});
    for (std::size_t cur = 0; cur < G.elements_.size(); ++cur)
        for (unsigned s = 0; s < generators.size(); ++s)
            add(generators[s] * G.elements_[cur], {s, ElementIndex(cur)});

    const std::size_t N = G.order();
    if (N <= kTableLimit) {
        G.table_.resize(N * N);
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b)
                G.table_[a * N + b] = G.index_of(G.elements_[a] * G.elements_[b]);
    }
    G.inverses_.resize(N);
    G.orders_.resize(N);
    for (std::size_t a = 0; a < N; ++a) {
        G.inverses_[a] = G.index_of(inverse(G.elements_[a]));
        unsigned ord = 1;
        ElementIndex x = ElementIndex(a);
        while (x != 0) {
            x = G.multiply(x, ElementIndex(a));
            ++ord;
        }
        G.orders_[a] = ord;
    }
    return G;
}

bool SubgroupSpec::contains(ElementIndex e) const
{
    return std::binary_search(members.begin(), members.end(), e);
}

SubgroupSpec subgroup_generated(const GroupData& G, const std::vector<ElementIndex>& gens, std::string label)
{
    std::vector<char> seen(G.order(), 0);
    std::vector<ElementIndex> members{0};
    seen[0] = 1;
    for (std::size_t cur = 0; cur < members.size(); ++cur)
        for (ElementIndex s : gens) {
            const ElementIndex x = G.multiply(members[cur], s);
            if (!seen[x]) {
                seen[x] = 1;
                members.push_back(x);
            }
        }
    std::sort(members.begin(), members.end());
    SubgroupSpec H;
    H.members = std::move(members);
    // Drop redundant generators greedily.
    std::vector<ElementIndex> kept;
    std::vector<char> reached(G.order(), 0);
    std::vector<ElementIndex> span{0};
    reached[0] = 1;
    for (ElementIndex s : gens) {
        if (reached[s])
            continue;
        kept.push_back(s);
        span.assign(1, 0);
        std::fill(reached.begin(), reached.end(), 0);
        reached[0] = 1;
        for (std::size_t cur = 0; cur < span.size(); ++cur)
            for (ElementIndex t : kept) {
                const ElementIndex x = G.multiply(span[cur], t);
                if (!reached[x]) {
                    reached[x] = 1;
                    span.push_back(x);
                }
            }
    }
    H.generators = std::move(kept);
    H.label = std::move(label);
    return H;
}

bool is_subgroup(const GroupData& G, const std::vector<ElementIndex>& members)
{
    if (members.empty() || !std::binary_search(members.begin(), members.end(), ElementIndex(0)))
        return false;
    for (ElementIndex a : members) {
        if (!std::binary_search(members.begin(), members.end(), G.inverse(a)))
            return false;
        for (ElementIndex b : members)
            if (!std::binary_search(members.begin(), members.end(), G.multiply(a, b)))
                return false;
    }
    return true;
}

std::vector<SubgroupSpec> subgroup_lattice(const GroupData& G, std::size_t max_order)
{
    if (G.order() > max_order)
        throw std::length_error("subgroup_lattice: group order exceeds the configured bound");
    std::vector<SubgroupSpec> found{subgroup_generated(G, {})};
    std::map<std::vector<ElementIndex>, std::size_t> index{{found[0].members, 0}};
    for (std::size_t cur = 0; cur < found.size(); ++cur)
        for (ElementIndex g = 1; g < G.order(); ++g) {
            if (found[cur].contains(g))
                continue;
            std::vector<ElementIndex> gens = found[cur].generators;
            gens.push_back(g);
            SubgroupSpec K = subgroup_generated(G, gens);
            if (index.emplace(K.members, found.size()).second)
                found.push_back(std::move(K));
        }
    std::sort(found.begin(), found.end(), [](const SubgroupSpec& a, const SubgroupSpec& b) {
        return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
    });
    return found;
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const GroupData& G, const std::vector<SubgroupSpec>& lattice,
                                                          const std::vector<PresetSubgroup>& preset)
{
    std::map<std::vector<ElementIndex>, std::size_t> index;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        index.emplace(lattice[i].members, i);
    std::vector<std::size_t> parent(lattice.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (ElementIndex g = 0; g < G.order(); ++g) {
            std::vector<ElementIndex> conj;
            conj.reserve(lattice[i].order());
            for (ElementIndex h : lattice[i].members)
                conj.push_back(G.conjugate(h, g));
            std::sort(conj.begin(), conj.end());
            auto it = index.find(conj);
            if (it == index.end())
                throw std::logic_error("conjugacy_classes_of_subgroups: lattice is not closed under conjugation");
            parent[root(it->second)] = root(i);
        }

    // Lattice is sorted by (order, members), so the first member seen per
    // class is its smallest member set.
    std::map<std::size_t, std::size_t> class_of_root;
    std::vector<SubgroupClass> classes;
    std::vector<std::size_t> rank_key;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        auto [it, fresh] = class_of_root.emplace(root(i), classes.size());
        if (fresh) {
            SubgroupClass c;
            c.representative = lattice[i];
            classes.push_back(std::move(c));
            rank_key.push_back(preset.size());
        }
        ++classes[it->second].size;
    }
    for (std::size_t j = 0; j < preset.size(); ++j) {
        std::vector<ElementIndex> gens;
        for (const FpMatrix& m : preset[j].generators)
            gens.push_back(G.index_of(m));
        SubgroupSpec H = subgroup_generated(G, gens, preset[j].label);
        auto it = index.find(H.members);
        if (it == index.end())
            throw std::logic_error("conjugacy_classes_of_subgroups: preset subgroup missing from lattice");
        const std::size_t c = class_of_root.at(root(it->second));
        if (rank_key[c] != preset.size())
            throw std::invalid_argument("conjugacy_classes_of_subgroups: two presets name the same class");
        rank_key[c] = j;
        classes[c].representative = std::move(H);
        classes[c].label = preset[j].label;
    }
    std::vector<std::size_t> order(classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (classes[a].order() != classes[b].order())
            return classes[a].order() < classes[b].order();
        return rank_key[a] < rank_key[b];
    });
    std::vector<SubgroupClass> out;
    for (std::size_t i : order) {
        SubgroupClass c = std::move(classes[i]);
        if (c.label.empty())
            c.label = "H" + std::to_string(out.size() + 1) + "[" + std::to_string(c.order()) + "]";
        if (c.representative.label.empty())
            c.representative.label = c.label;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ElementIndex> transversal(const GroupData& G, const SubgroupSpec& H)
{
    if (!is_subgroup(G, H.members))
        throw std::invalid_argument("transversal: not a subgroup");
    std::vector<char> covered(G.order(), 0);
    std::vector<ElementIndex> reps;
    for (ElementIndex g = 0; g < G.order(); ++g) {
        if (covered[g])
            continue;
        reps.push_back(g);
        for (ElementIndex h : H.members)
            covered[G.multiply(g, h)] = 1;
    }
    return reps;
}

std::vector<ElementClass> conjugacy_classes(const GroupData& G, std::size_t max_order)
{
    if (G.order() > max_order)
        throw std::length_error("conjugacy_classes: group order exceeds the configured bound");
    std::vector<ElementIndex> gens;
    for (const FpMatrix& m : G.generators())
        gens.push_back(G.index_of(m));
    std::vector<char> seen(G.order(), 0);
    std::vector<ElementClass> classes;
    for (ElementIndex e = 0; e < G.order(); ++e) {
        if (seen[e])
            continue;
        ElementClass c;
        c.representative = e;
        c.order = G.element_order(e);
        std::vector<ElementIndex> orbit{e};
        seen[e] = 1;
        for (std::size_t cur = 0; cur < orbit.size(); ++cur)
            for (ElementIndex s : gens) {
                const ElementIndex x = G.conjugate(orbit[cur], s);
                if (!seen[x]) {
                    seen[x] = 1;
                    orbit.push_back(x);
                }
            }
        c.size = orbit.size();
        classes.push_back(c);
    }
    std::stable_sort(classes.begin(), classes.end(),
                     [](const ElementClass& a, const ElementClass& b) { return a.order < b.order; });
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::size_t letter = 0;
        for (std::size_t j = 0; j < i; ++j)
            letter += classes[j].order == classes[i].order;
        classes[i].label = std::to_string(classes[i].order) + char('A' + letter);
    }
    return classes;
}

std::vector<ElementClass> p_regular_classes(const GroupData& G, unsigned p, std::size_t max_order)
{
    std::vector<ElementClass> out;
    for (ElementClass& c : conjugacy_classes(G, max_order))
        if (c.order % p != 0)
            out.push_back(std::move(c));
    return out;
}

std::vector<std::string> preset_labels()
{
    return {"UV", "A", "B", "C", "AB", "D", "gq", "gprime", "SL2F3", "GL2F2", "AC", "ABC:<j>", "BC", "GL", "SL", "1"};
}

Preset preset(unsigned p, unsigned d, const std::string& label)
{
    prime_field(p);
    auto need = [&](bool ok, const char* what) {
        if (!ok)
            throw std::invalid_argument("preset " + label + ": " + what);
    };
    auto A = [&] { return elementary(d, p, 0, 1); };
    auto B = [&] { return elementary(d, p, 1, 2); };
    auto C = [&] { return A() * B() * inverse(A()) * inverse(B()); };
    auto ABj = [&](unsigned j) { return A() * power(B(), j); };

    Preset out;
    if (label == "1") {
        return out;
    }
    if (label == "UV") {
        if (d == 3) {
            out.generators = {A(), B()};
            out.labels = {"A", "B"};
        } else {
            for (unsigned i = 0; i + 1 < d; ++i) {
                out.generators.push_back(elementary(d, p, i, i + 1));
                out.labels.push_back("E" + std::to_string(i + 1) + std::to_string(i + 2));
            }
        }
        return out;
    }
    if (label == "A" || label == "B" || label == "C" || label == "AB" || label == "AC" || label == "BC" ||
        label.rfind("ABC:", 0) == 0) {
        need(d >= 3, "needs d >= 3");
        if (label == "A")
            out = {{A()}, {"A"}};
        else if (label == "B")
            out = {{B()}, {"B"}};
        else if (label == "C")
            out = {{C()}, {"C"}};
        else if (label == "AB")
            out = {{A() * B()}, {"AB"}};
        else if (label == "AC")
            out = {{A(), C()}, {"A", "C"}};
        else if (label == "BC")
            out = {{B(), C()}, {"B", "C"}};
        else {
            const unsigned j = unsigned(std::stoul(label.substr(4)));
            need(j >= 1 && j < p, "j must lie in [1, p)");
            out = {{ABj(j), C()}, {j == 1 ? "AB" : "AB^" + std::to_string(j), "C"}};
        }
        return out;
    }
    if (label == "D") {
        if (p == 2)
            return out;
        const Scalar g = primitive_root(p);
        for (unsigned i = 0; i < d; ++i) {
            out.generators.push_back(elementary(d, p, i, i, g));
            out.labels.push_back("D" + std::to_string(i + 1));
        }
        return out;
    }
    if (label == "gq") {
        // Companion matrix of the smallest primitive polynomial of degree d.
        const FpPoly f = smallest_primitive(p, d);
        FpMatrix m(d, d, p);
        for (unsigned i = 0; i + 1 < d; ++i)
            m.set(i, i + 1, 1);
        for (unsigned j = 0; j < d; ++j)
            m.set(d - 1, j, -static_cast<long long>(f[j]));
        out = {{m}, {"gq"}};
        return out;
    }
    if (label == "gprime") {
        need(p == 2 && d % 2 == 0, "needs p = 2 and even d");
        FpMatrix m(d, d, p);
        for (unsigned b = 0; b < d; b += 2) {
            m.set(b, b + 1, 1);
            m.set(b + 1, b, 1);
            m.set(b + 1, b + 1, 1);
        }
        out = {{m}, {"gprime"}};
        return out;
    }
    if (label == "SL2F3") {
        need(p == 3 && d == 2, "needs p = 3, d = 2");
        out = {{FpMatrix::from_rows(3, {{1, 1}, {0, 1}}), FpMatrix::from_rows(3, {{1, 0}, {1, 1}})}, {"u", "l"}};
        return out;
    }
    if (label == "GL2F2") {
        need(p == 2 && d == 2, "needs p = 2, d = 2");
        out = {{FpMatrix::from_rows(2, {{0, 1}, {1, 1}}), FpMatrix::from_rows(2, {{1, 1}, {0, 1}})}, {"r", "s"}};
        return out;
    }
    if (label == "GL" || label == "SL") {
        for (unsigned i = 0; i + 1 < d; ++i) {
            out.generators.push_back(elementary(d, p, i, i + 1));
            out.labels.push_back("E" + std::to_string(i + 1) + std::to_string(i + 2));
            out.generators.push_back(elementary(d, p, i + 1, i));
            out.labels.push_back("E" + std::to_string(i + 2) + std::to_string(i + 1));
        }
        if (d == 1 && label == "SL")
            return out;
        if (label == "GL" && p > 2) {
            out.generators.push_back(elementary(d, p, 0, 0, primitive_root(p)));
            out.labels.push_back("D1");
        }
        return out;
    }
    throw std::invalid_argument("unknown group preset '" + label + "'");
}

std::vector<PresetSubgroup> uv_class_order(unsigned p)
{
    const unsigned d = 3;
    const FpMatrix A = elementary(d, p, 0, 1), B = elementary(d, p, 1, 2);
    const FpMatrix C = A * B * inverse(A) * inverse(B);
    auto name = [](unsigned j) { return j == 1 ? std::string("AB") : "AB^" + std::to_string(j); };
    std::vector<PresetSubgroup> out{{"1", {}}, {"<A>", {A}}};
    if (p == 2) {
        out.push_back({"<B>", {B}});
        out.push_back({"<C>", {C}});
        out.push_back({"<AB>", {A * B}});
        out.push_back({"<A,C>", {A, C}});
        out.push_back({"<B,C>", {B, C}});
    } else {
        for (unsigned j = 1; j < p; ++j)
            out.push_back({"<" + name(j) + ">", {A * power(B, j)}});
        out.push_back({"<B>", {B}});
        out.push_back({"<C>", {C}});
        out.push_back({"<A,C>", {A, C}});
        for (unsigned j = 1; j < p; ++j)
            out.push_back({"<" + name(j) + ",C>", {A * power(B, j), C}});
        out.push_back({"<B,C>", {B, C}});
    }
    out.push_back({"U", {A, B}});
    return out;
}

Representation extend_representation(const GroupData& G, const std::vector<FpMatrix>& generator_matrices)
{
    if (generator_matrices.size() != G.generators().size())
        throw std::invalid_argument("extend_representation: one matrix per group generator required");
    std::size_t dim = 0;
    unsigned p = G.p();
    if (!generator_matrices.empty()) {
        dim = generator_matrices[0].rows();
        p = generator_matrices[0].p();
    }
    for (const FpMatrix& m : generator_matrices)
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("extend_representation: matrices must be square of equal size");
    Representation rho;
    rho.group = &G;
    rho.matrices.resize(G.order());
    rho.matrices[0] = FpMatrix::identity(dim, p);
    for (ElementIndex e = 1; e < G.order(); ++e) {
        auto [s, h] = G.bfs_step(e);
        rho.matrices[e] = generator_matrices[s] * rho.matrices[h];
    }
    return rho;
}

bool satisfies_homomorphism_law(const Representation& rho)
{
    const GroupData& G = *rho.group;
    for (ElementIndex a = 0; a < G.order(); ++a)
        for (ElementIndex b = 0; b < G.order(); ++b)
            if (rho(a) * rho(b) != rho(G.multiply(a, b)))
                return false;
    return true;
}

}  // namespace morava
