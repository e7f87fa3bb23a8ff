#include <doctest.h>

#include <map>
#include <random>

#include "morava/graded_action.hpp"
#include "morava/linalg.hpp"

using namespace morava;

namespace {

// Naive truncated polynomials keyed by exponent vectors.
using Naive = std::map<std::vector<unsigned>, unsigned>;

Naive naive_mul(const Naive& a, const Naive& b, unsigned p, unsigned q)
{
    Naive out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<unsigned> e(ea.size());
            bool alive = true;
            for (std::size_t j = 0; j < e.size(); ++j) {
                e[j] = ea[j] + eb[j];
                alive = alive && e[j] < q;
            }
            if (alive)
                out[e] = (out[e] + ca * cb) % p;
        }
    std::erase_if(out, [](auto& t) { return t.second == 0; });
    return out;
}

Naive naive_add(Naive a, const Naive& b, unsigned p, unsigned scale = 1)
{
    for (auto& [e, c] : b)
        a[e] = (a[e] + scale * c) % p;
    std::erase_if(a, [](auto& t) { return t.second == 0; });
    return a;
}

Naive naive_pow(const Naive& a, unsigned e, unsigned p, unsigned q, unsigned d)
{
    Naive r{{std::vector<unsigned>(d, 0), 1}};
    for (unsigned i = 0; i < e; ++i)
        r = naive_mul(r, a, p, q);
    return r;
}

// x + y - sum_i C(p,i)/p x^{i s} y^{(p-i) s}, computed with plain repeated products.
Naive naive_fgl(const Naive& x, const Naive& y, unsigned p, unsigned n, unsigned d)
{
    unsigned q = 1;
    for (unsigned i = 0; i < n; ++i)
        q *= p;
    const unsigned s = q / p;
    Naive out = naive_add(x, y, p);
    unsigned long long binom = 1;
    for (unsigned i = 1; i < p; ++i) {
        binom = binom * (p - i + 1) / i;
        const unsigned c = unsigned((binom / p) % p);
        Naive term = naive_mul(naive_pow(x, i * s, p, q, d), naive_pow(y, (p - i) * s, p, q, d), p, q);
        out = naive_add(out, term, p, p - c);
    }
    return out;
}

Naive to_naive(const AlgebraElement& u)
{
    Naive out;
    for (auto [m, c] : u.terms())
        out[u.context().exponents(m)] = c;
    return out;
}

AlgebraElement random_positive(const AlgebraContext& ctx, std::mt19937& rng, unsigned terms)
{
    std::uniform_int_distribution<MonomialIndex> mono(1, MonomialIndex(ctx.size() - 1));
    std::uniform_int_distribution<unsigned> coeff(1, ctx.p() - 1);
    std::vector<AlgebraElement::Term> t;
    for (unsigned i = 0; i < terms; ++i)
        t.emplace_back(mono(rng), Scalar(coeff(rng)));
    return AlgebraElement(ctx, t);
}

FpMatrix random_invertible(unsigned d, unsigned p, std::mt19937& rng)
{
    std::uniform_int_distribution<unsigned> dist(0, p - 1);
    for (;;) {
        FpMatrix g(d, d, p);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                g.set(i, j, Scalar(dist(rng)));
        if (rank(g) == d)
            return g;
    }
}

MonomialIndex mono(const AlgebraContext& ctx, std::vector<unsigned> e) { return ctx.index(e); }

}  // namespace

TEST_CASE("context bookkeeping")
{
    AlgebraContext ctx(3, 2, 2);
    CHECK(ctx.q() == 9);
    CHECK(ctx.grade_modulus() == 8);
    CHECK(ctx.size() == 81);
    CHECK(ctx.fgl_coeff(1) == 1);
    CHECK(ctx.fgl_coeff(2) == 1);
    AlgebraContext c5(5, 1, 1);
    // C(5,i)/5 = 1, 2, 2, 1
    CHECK(c5.fgl_coeff(1) == 1);
    CHECK(c5.fgl_coeff(2) == 2);
    CHECK(c5.fgl_coeff(3) == 2);
    CHECK(c5.fgl_coeff(4) == 1);
    for (MonomialIndex m = 0; m < ctx.size(); ++m)
        CHECK(ctx.index(ctx.exponents(m)) == m);
    CHECK_THROWS(AlgebraContext(4, 1, 1));
}

TEST_CASE("multiplication in the truncation")
{
    AlgebraContext c21(2, 1, 1);
    auto x = AlgebraElement::variable(c21, 0);
    CHECK(multiply(x, x).is_zero());

    AlgebraContext c22(2, 2, 2);
    auto x1 = AlgebraElement::variable(c22, 0), x2 = AlgebraElement::variable(c22, 1);
    auto sq = power(x1 + x2, 2);
    CHECK(sq == AlgebraElement(c22, {{mono(c22, {2, 0}), 1}, {mono(c22, {0, 2}), 1}}));

    AlgebraContext c31(3, 2, 1);
    auto y = AlgebraElement::variable(c31, 0);
    CHECK(multiply(power(y, 8), y).is_zero());
    CHECK(!power(y, 8).is_zero());
}

TEST_CASE("formal sum small cases")
{
    SUBCASE("p=2 n=1")
    {
        AlgebraContext ctx(2, 1, 2);
        auto x = AlgebraElement::variable(ctx, 0), y = AlgebraElement::variable(ctx, 1);
        CHECK(formal_sum(x, y) == AlgebraElement(ctx, {{mono(ctx, {1, 0}), 1}, {mono(ctx, {0, 1}), 1}, {mono(ctx, {1, 1}), 1}}));
    }
    SUBCASE("p=3 n=1")
    {
        AlgebraContext ctx(3, 1, 2);
        auto x = AlgebraElement::variable(ctx, 0), y = AlgebraElement::variable(ctx, 1);
        CHECK(formal_sum(x, y) == AlgebraElement(ctx, {{mono(ctx, {1, 0}), 1},
                                                       {mono(ctx, {0, 1}), 1},
                                                       {mono(ctx, {1, 2}), 2},
                                                       {mono(ctx, {2, 1}), 2}}));
    }
    SUBCASE("unit and constant-term rejection")
    {
        AlgebraContext ctx(3, 2, 2);
        std::mt19937 rng(5);
        auto u = random_positive(ctx, rng, 6);
        CHECK(formal_sum(u, AlgebraElement(ctx)) == u);
        CHECK_THROWS(formal_sum(u, AlgebraElement::monomial(ctx, 0)));
    }
}

TEST_CASE("formal sum agrees with the naive oracle")
{
    std::mt19937 rng(17);
    for (auto [p, n, d] : {std::tuple{2u, 2u, 2u}, {2u, 3u, 2u}, {3u, 1u, 3u}, {3u, 2u, 2u}, {5u, 1u, 2u}, {5u, 2u, 1u}}) {
        AlgebraContext ctx(p, n, d);
        for (int trial = 0; trial < 5; ++trial) {
            auto u = random_positive(ctx, rng, 4), v = random_positive(ctx, rng, 4);
            CHECK(to_naive(formal_sum(u, v)) == naive_fgl(to_naive(u), to_naive(v), p, n, d));
        }
    }
}

TEST_CASE("formal group law axioms")
{
    std::mt19937 rng(99);
    for (auto [p, n, d] : {std::tuple{2u, 2u, 2u}, {3u, 2u, 2u}, {5u, 1u, 3u}, {2u, 3u, 1u}}) {
        AlgebraContext ctx(p, n, d);
        for (int trial = 0; trial < 6; ++trial) {
            auto u = random_positive(ctx, rng, 5), v = random_positive(ctx, rng, 5), w = random_positive(ctx, rng, 5);
            CHECK(formal_sum(u, v) == formal_sum(v, u));
            CHECK(formal_sum(formal_sum(u, v), w) == formal_sum(u, formal_sum(v, w)));
            // p-series vanishes
            AlgebraElement acc(ctx);
            for (unsigned i = 0; i < p; ++i)
                acc = formal_sum(acc, u);
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("a-series")
{
    AlgebraContext ctx(3, 2, 2);
    std::mt19937 rng(3);
    auto u = random_positive(ctx, rng, 3);
    CHECK(a_series(1, u) == u);
    CHECK(a_series(0, u).is_zero());
    CHECK_THROWS(a_series(3, u));

    AlgebraContext c22(2, 2, 1);
    auto x = AlgebraElement::variable(c22, 0);
    CHECK(formal_sum(x, x).is_zero());
}

TEST_CASE("action on generators")
{
    SUBCASE("identity")
    {
        AlgebraContext ctx(3, 2, 3);
        auto ys = act_on_generators(ctx, FpMatrix::identity(3, 3));
        for (unsigned j = 0; j < 3; ++j)
            CHECK(ys[j] == AlgebraElement::variable(ctx, j));
    }
    SUBCASE("elementary matrix p=2")
    {
        const auto g = FpMatrix::from_rows(2, {{1, 1}, {0, 1}});
        AlgebraContext c1(2, 1, 2);
        auto ys = act_on_generators(c1, g);
        CHECK(ys[0] == AlgebraElement::variable(c1, 0));
        CHECK(ys[1] == AlgebraElement(c1, {{mono(c1, {1, 0}), 1}, {mono(c1, {0, 1}), 1}, {mono(c1, {1, 1}), 1}}));
        AlgebraContext c2(2, 2, 2);
        ys = act_on_generators(c2, g);
        CHECK(ys[1] == AlgebraElement(c2, {{mono(c2, {1, 0}), 1}, {mono(c2, {0, 1}), 1}, {mono(c2, {2, 2}), 1}}));
    }
    SUBCASE("images have grade one")
    {
        AlgebraContext ctx(3, 2, 3);
        std::mt19937 rng(8);
        for (auto& y : act_on_generators(ctx, random_invertible(3, 3, rng)))
            CHECK(y.is_homogeneous(1));
    }
    SUBCASE("singular rejected")
    {
        AlgebraContext ctx(2, 1, 2);
        CHECK_THROWS(act_on_generators(ctx, FpMatrix::from_rows(2, {{1, 1}, {1, 1}})));
    }
}

TEST_CASE("piece dimensions")
{
    for (auto [p, n, d] : {std::tuple{2u, 2u, 3u}, {3u, 2u, 2u}, {2u, 3u, 2u}, {5u, 1u, 3u}, {3u, 1u, 3u}}) {
        AlgebraContext ctx(p, n, d);
        const std::size_t expected = (ctx.size() - 1) / (ctx.q() - 1);
        for (unsigned k = 0; k < ctx.grade_modulus(); ++k) {
            CHECK(piece_basis(ctx, k, true).monomials.size() == expected);
            CHECK(piece_basis(ctx, k, false).monomials.size() == expected + (k == 0));
        }
    }
    AlgebraContext ctx(3, 2, 2);
    for (unsigned k = 0; k < 8; ++k)
        CHECK(piece_basis(ctx, k, true).monomials.size() == 10);
}

TEST_CASE("piece basis ordering")
{
    AlgebraContext ctx(2, 2, 2);
    auto b = piece_basis(ctx, 1, true);
    for (std::size_t i = 1; i < b.monomials.size(); ++i) {
        const auto a = b.monomials[i - 1], c = b.monomials[i];
        CHECK((ctx.length(a) < ctx.length(c) || (ctx.length(a) == ctx.length(c) && a < c)));
    }
}

TEST_CASE("identity acts trivially")
{
    AlgebraContext ctx(3, 2, 2);
    for (auto v : {Variant::K, Variant::L})
        for (auto& piece : build_all_pieces(ctx, {FpMatrix::identity(2, 3)}, v, true))
            CHECK(piece.matrices[0].is_identity());
}

TEST_CASE("homomorphism law")
{
    std::mt19937 rng(2024);
    for (auto [p, n, d] : {std::tuple{2u, 2u, 3u}, {3u, 2u, 2u}, {2u, 1u, 3u}, {5u, 1u, 2u}, {3u, 1u, 3u}}) {
        AlgebraContext ctx(p, n, d);
        for (int trial = 0; trial < 2; ++trial) {
            const FpMatrix g = random_invertible(d, p, rng), h = random_invertible(d, p, rng);
            for (auto v : {Variant::K, Variant::L}) {
                auto pieces = build_all_pieces(ctx, {g, h, g * h}, v, false);
                for (auto& piece : pieces)
                    CHECK(piece.matrices[0] * piece.matrices[1] == piece.matrices[2]);
            }
        }
    }
}

TEST_CASE("single piece matches the batch build")
{
    AlgebraContext ctx(3, 2, 2);
    std::mt19937 rng(1);
    const FpMatrix g = random_invertible(2, 3, rng);
    auto all = build_all_pieces(ctx, {g}, Variant::K, true);
    for (unsigned k = 0; k < 8; ++k)
        CHECK(build_graded_action(ctx, {g}, k, Variant::K, true).matrices[0] == all[k].matrices[0]);
}

TEST_CASE("K is block lower triangular over L")
{
    std::mt19937 rng(77);
    for (auto [p, n, d] : {std::tuple{2u, 2u, 3u}, {3u, 2u, 2u}, {2u, 3u, 2u}}) {
        AlgebraContext ctx(p, n, d);
        const FpMatrix g = random_invertible(d, p, rng);
        auto kp = build_all_pieces(ctx, {g}, Variant::K, true);
        auto lp = build_all_pieces(ctx, {g}, Variant::L, true);
        for (unsigned k = 0; k < ctx.grade_modulus(); ++k) {
            const FpMatrix& km = kp[k].matrices[0];
            const FpMatrix& lm = lp[k].matrices[0];
            const auto& basis = kp[k].basis;
            bool ok = true;
            for (std::size_t r = 0; r < basis.size(); ++r)
                for (std::size_t c = 0; c < basis.size(); ++c) {
                    const unsigned lr = ctx.length(basis[r]), lc = ctx.length(basis[c]);
                    if (lr < lc)
                        ok = ok && km(r, c) == 0;
                    else if (lr == lc)
                        ok = ok && km(r, c) == lm(r, c);
                    else
                        ok = ok && lm(r, c) == 0;
                }
            CHECK(ok);
        }
    }
}

TEST_CASE("diagonal fixed points")
{
    for (auto [p, n, d] : {std::tuple{3u, 2u, 2u}, {5u, 1u, 2u}, {3u, 1u, 3u}, {5u, 2u, 2u}}) {
        AlgebraContext ctx(p, n, d);
        const auto& f = prime_field(p);
        Scalar gen = 2;
        while (f.pow(gen, (p - 1) / 2) == 1)
            ++gen;
        std::vector<FpMatrix> diag;
        for (unsigned i = 0; i < d; ++i) {
            FpMatrix g = FpMatrix::identity(d, p);
            g.set(i, i, gen);
            diag.push_back(g);
        }
        auto pieces = build_all_pieces(ctx, diag, Variant::K, true);
        for (unsigned k = 0; k < ctx.grade_modulus(); ++k) {
            const auto fixed = fixed_space(pieces[k].matrices);
            CHECK(fixed.size() == count_divisible_monomials(ctx, k, p - 1, true));
            if (k % (p - 1) != 0)
                CHECK(fixed.empty());
        }
    }
}
