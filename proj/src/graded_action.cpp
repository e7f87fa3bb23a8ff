#include "morava/graded_action.hpp"

#include <algorithm>
#include <stdexcept>

#include "morava/linalg.hpp"

namespace morava {

const char* to_string(Variant v) { return v == Variant::K ? "K" : "L"; }

Variant parse_variant(const std::string& s)
{
    if (s == "K" || s == "k")
        return Variant::K;
    if (s == "L" || s == "l")
        return Variant::L;
    throw std::invalid_argument("unknown variant '" + s + "' (expected K or L)");
}

namespace {

std::vector<AlgebraElement> linear_images(const AlgebraContext& ctx, const FpMatrix& g)
{
    if (g.rows() != ctx.d() || g.cols() != ctx.d() || g.p() != ctx.p())
        throw std::invalid_argument("linear action: matrix must be d x d over F_p");
    if (rank(g) != ctx.d())
        throw std::invalid_argument("linear action: matrix is singular");
    std::vector<AlgebraElement> out;
    for (unsigned j = 0; j < ctx.d(); ++j) {
        std::vector<AlgebraElement::Term> terms;
        for (unsigned i = 0; i < ctx.d(); ++i)
            if (g(i, j))
                terms.emplace_back(ctx.variable(i), g(i, j));
        out.emplace_back(ctx, std::move(terms));
    }
    return out;
}

}  // namespace

AlgebraAutomorphism::AlgebraAutomorphism(const AlgebraContext& ctx, const FpMatrix& g, Variant variant)
{
    generator_images_ = variant == Variant::K ? act_on_generators(ctx, g) : linear_images(ctx, g);
    images_.assign(ctx.size(), AlgebraElement(ctx));
    images_[0] = AlgebraElement::monomial(ctx, 0);

    // Monomials grouped by total length; each level only reads the previous one.
    const unsigned max_len = ctx.d() * (ctx.q() - 1);
    std::vector<std::vector<MonomialIndex>> levels(max_len + 1);
    for (MonomialIndex m = 1; m < ctx.size(); ++m)
        levels[ctx.length(m)].push_back(m);

    for (unsigned len = 1; len <= max_len; ++len) {
        const auto& level = levels[len];
#pragma omp parallel for schedule(dynamic, 16)
        for (std::size_t t = 0; t < level.size(); ++t) {
            const MonomialIndex m = level[t];
            unsigned j = 0;
            while (ctx.exponent(m, j) == 0)
                ++j;
            images_[m] = multiply(images_[m - ctx.stride(j)], generator_images_[j]);
        }
    }
}

PieceBasis piece_basis(const AlgebraContext& ctx, unsigned k, bool reduced)
{
    if (k >= ctx.grade_modulus() && !(ctx.grade_modulus() == 1 && k == 0))
        throw std::out_of_range("piece_basis: grade class out of range");
    PieceBasis b;
    b.k = k;
    b.reduced = reduced;
    for (MonomialIndex m = 0; m < ctx.size(); ++m)
        if (ctx.grade(m) == k && !(reduced && m == 0))
            b.monomials.push_back(m);
    std::stable_sort(b.monomials.begin(), b.monomials.end(),
                     [&](MonomialIndex a, MonomialIndex c) { return ctx.length(a) < ctx.length(c); });
    b.position.assign(ctx.size(), -1);
    for (std::size_t i = 0; i < b.monomials.size(); ++i)
        b.position[b.monomials[i]] = int(i);
    return b;
}

FpMatrix piece_matrix(const AlgebraAutomorphism& phi, const PieceBasis& basis, unsigned p)
{
    const std::size_t dim = basis.monomials.size();
    FpMatrix out(dim, dim, p);
    for (std::size_t c = 0; c < dim; ++c)
        for (auto [m, coeff] : phi.image(basis.monomials[c]).terms()) {
            const int r = basis.position[m];
            if (r < 0)
                throw std::logic_error("piece_matrix: image leaves the graded piece");
            out.set(std::size_t(r), c, coeff);
        }
    return out;
}

namespace {

GradedAction make_shell(const AlgebraContext& ctx, const PieceBasis& b, Variant variant,
                        const std::vector<std::string>& labels)
{
    GradedAction a;
    a.p = ctx.p();
    a.n = ctx.n();
    a.d = ctx.d();
    a.k = b.k;
    a.variant = variant;
    a.reduced = b.reduced;
    a.labels = labels;
    a.basis = b.monomials;
    for (MonomialIndex m : b.monomials)
        a.basis_exponents.push_back(ctx.exponents(m));
    return a;
}

std::vector<std::string> default_labels(std::vector<std::string> labels, std::size_t count)
{
    for (std::size_t i = labels.size(); i < count; ++i)
        labels.push_back("g" + std::to_string(i + 1));
    return labels;
}

}  // namespace

GradedAction build_graded_action(const AlgebraContext& ctx, const std::vector<FpMatrix>& gens, unsigned k,
                                 Variant variant, bool reduced, std::vector<std::string> labels)
{
    labels = default_labels(std::move(labels), gens.size());
    const PieceBasis b = piece_basis(ctx, k, reduced);
    GradedAction a = make_shell(ctx, b, variant, labels);
    for (const FpMatrix& g : gens) {
        const AlgebraAutomorphism phi(ctx, g, variant);
        a.matrices.push_back(piece_matrix(phi, b, ctx.p()));
    }
    return a;
}

std::vector<GradedAction> build_all_pieces(const AlgebraContext& ctx, const std::vector<FpMatrix>& gens,
                                           Variant variant, bool reduced, std::vector<std::string> labels)
{
    labels = default_labels(std::move(labels), gens.size());
    std::vector<PieceBasis> bases;
    std::vector<GradedAction> out;
    const unsigned classes = std::max(1u, ctx.grade_modulus());
    for (unsigned k = 0; k < classes; ++k) {
        bases.push_back(piece_basis(ctx, k, reduced));
        out.push_back(make_shell(ctx, bases.back(), variant, labels));
    }
    for (const FpMatrix& g : gens) {
        const AlgebraAutomorphism phi(ctx, g, variant);
        for (unsigned k = 0; k < classes; ++k)
            out[k].matrices.push_back(piece_matrix(phi, bases[k], ctx.p()));
    }
    return out;
}

std::size_t count_divisible_monomials(const AlgebraContext& ctx, unsigned k, unsigned m, bool reduced)
{
    std::size_t count = 0;
    for (MonomialIndex idx = reduced ? 1 : 0; idx < ctx.size(); ++idx) {
        if (ctx.grade(idx) != k)
            continue;
        bool ok = true;
        for (unsigned j = 0; j < ctx.d() && ok; ++j)
            ok = ctx.exponent(idx, j) % m == 0;
        count += ok;
    }
    return count;
}

}  // namespace morava
