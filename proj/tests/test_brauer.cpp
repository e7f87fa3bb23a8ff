#include <doctest.h>

#include <cmath>
#include <random>

#include "morava/brauer.hpp"
#include "morava/graded_action.hpp"
#include "morava/linalg.hpp"

using namespace morava;

namespace {

FpMatrix random_invertible(unsigned p, unsigned d, std::mt19937& rng)
{
    std::uniform_int_distribution<int> dist(0, int(p) - 1);
    for (;;) {
        FpMatrix m(d, d, p);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                m.set(i, j, dist(rng));
        if (rank(m) == d)
            return m;
    }
}

// Strip the p-part of the order.
FpMatrix random_p_regular(unsigned p, unsigned d, std::mt19937& rng)
{
    FpMatrix g = random_invertible(p, d, rng);
    unsigned o = matrix_order(g);
    unsigned pp = 1;
    while (o % p == 0) {
        o /= p;
        pp *= p;
    }
    return power(g, pp);
}

Cyclotomic integer(long long v) { return Cyclotomic::rational(mpq_class(static_cast<long>(v))); }

}  // namespace

TEST_CASE("matrix order and eigenvalue lifting")
{
    CHECK(matrix_order(FpMatrix::identity(3, 5)) == 1);
    CHECK(matrix_order(preset(2, 3, "gq").generators[0]) == 7);
    CHECK(matrix_order(preset(3, 2, "gq").generators[0]) == 8);

    // 2 generates F_5^*, so diag(2) lifts to exp(2 pi i / 4).
    auto lam = lift_eigenvalues(FpMatrix::from_rows(5, {{2}}));
    REQUIRE(lam.size() == 1);
    CHECK(std::abs(lam[0].to_complex() - std::complex<double>(0, 1)) < 1e-12);

    // Lifted eigenvalues of g_q are one Frobenius orbit of primitive roots.
    auto l3 = lift_eigenvalues(preset(2, 3, "gq").generators[0]);
    REQUIRE(l3.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(l3[(i + 1) % 3] == l3[i] * l3[i]);
    CHECK(l3[0] != l3[1]);
}

TEST_CASE("eigenvalue multiplicities agree with eigenspaces over the splitting field")
{
    std::mt19937 rng(13);
    std::vector<FpMatrix> mats;
    for (auto [p, n, d] : {std::tuple{2u, 3u, 3u}, {3u, 1u, 3u}, {2u, 2u, 4u}}) {
        AlgebraContext ctx(p, n, d);
        for (int i = 0; i < 3; ++i) {
            auto g = i == 0 ? preset(p, d, "gq").generators[0] : random_p_regular(p, d, rng);
            mats.push_back(build_graded_action(ctx, {g}, 1, Variant::K, false).matrices[0]);
        }
    }
    for (const auto& m : mats) {
        const unsigned t = matrix_order(m);
        const auto mult = eigenvalue_multiplicities(m, t);
        const ExtensionField& F = extension_field(m.p(), splitting_degree(m.p(), t));
        const unsigned long long step = (F.size() - 1) / t;
        std::size_t total = 0;
        for (unsigned j = 0; j < t; ++j) {
            CHECK(mult[j] == eigen_multiplicity(m, ExtScalar{&F, F.zeta_power(j * step)}));
            total += mult[j];
        }
        CHECK(total == m.rows());
    }
}

TEST_CASE("eigenvalue multiplicities of a cyclic shift")
{
    // The regular representation of C_t (p not dividing t) has every t-th root once.
    for (auto [p, t] : {std::pair{2u, 3u}, {2u, 7u}, {3u, 4u}, {3u, 8u}, {5u, 6u}}) {
        FpMatrix m(t, t, p);
        for (unsigned i = 0; i < t; ++i)
            m.set((i + 1) % t, i, 1);
        auto mult = eigenvalue_multiplicities(m, t);
        REQUIRE(mult.size() == t);
        for (auto c : mult)
            CHECK(c == 1);
        CHECK(character_from_action(m, t) == integer(0));
        CHECK(character_from_action(FpMatrix::identity(t, p), 1) == integer(t));
    }
}

TEST_CASE("character from action equals the generating-function formula")
{
    std::mt19937 rng(7);
    for (unsigned p : {2u, 3u})
        for (unsigned d : {2u, 3u})
            for (unsigned n : {1u, 2u}) {
                AlgebraContext ctx(p, n, d);
                const unsigned N = ctx.grade_modulus();
                std::vector<FpMatrix> elems{preset(p, d, "gq").generators[0]};
                for (int i = 0; i < 3; ++i)
                    elems.push_back(random_p_regular(p, d, rng));
                for (const auto& g : elems) {
                    const unsigned t = matrix_order(g);
                    auto lam = lift_eigenvalues(g);
                    auto L = build_all_pieces(ctx, {g}, Variant::L, false);
                    auto K = build_all_pieces(ctx, {g}, Variant::K, false);
                    Cyclotomic total(1);
                    for (unsigned k = 0; k < N; ++k) {
                        CAPTURE(p);
                        CAPTURE(d);
                        CAPTURE(n);
                        CAPTURE(k);
                        const Cyclotomic expected = character_via_eq31(p, n, k, lam);
                        CHECK(character_from_action(L[k].matrices[0], t) == expected);
                        CHECK(character_from_action(K[k].matrices[0], t) == expected);
                        auto reduced = build_graded_action(ctx, {g}, k, Variant::K, true);
                        CHECK(character_from_action(reduced.matrices[0], t) == character_via_eq31(p, n, k, lam, true));
                        total += expected;
                    }
                    CHECK(total == generating_function_at_one(p, n, lam));
                }
            }
}

TEST_CASE("closed-form character values")
{
    // g_2 on L^1_{n,2}: the two primitive cube roots sum to -1 once 3 | 2^n - 1.
    auto g2 = preset(2, 2, "gq").generators[0];
    for (unsigned n : {2u, 4u})
        CHECK(character_via_eq31(2, n, 1, lift_eigenvalues(g2)) == integer(-1));

    // q + 1 at k = 0 when q | n.
    CHECK(character_via_eq31(2, 2, 0, lift_eigenvalues(g2)) == integer(3));
    CHECK(character_via_eq31(2, 4, 0, lift_eigenvalues(g2)) == integer(3));
    auto g3 = preset(2, 3, "gq").generators[0];
    auto l3 = lift_eigenvalues(g3);
    CHECK(character_via_eq31(2, 3, 0, l3) == integer(4));

    // k = 1, 3 | n: lambda + lambda^2 + lambda^4, not rational.
    auto c = character_via_eq31(2, 3, 1, l3);
    CHECK(c == l3[0] + l3[1] + l3[2]);
    CHECK_FALSE(c.is_rational());
    AlgebraContext ctx(2, 3, 3);
    CHECK(character_from_action(build_graded_action(ctx, {g3}, 1, Variant::L, false).matrices[0], 7) == c);

    // g' on L^k_{n,d}, k not divisible by 3.
    auto gp = preset(2, 4, "gprime").generators[0];
    for (unsigned n : {2u, 4u})
        for (unsigned k = 1; k < (1u << n) - 1; ++k)
            if (k % 3 != 0) {
                const long long expect = -(((1LL << (2 * n)) - 1) / ((1LL << n) - 1));
                CHECK(character_via_eq31(2, n, k, lift_eigenvalues(gp)) == integer(expect));
            }
    auto gp5 = direct_sum(gp, FpMatrix::identity(1, 2));
    for (unsigned k : {1u, 2u})
        CHECK(character_via_eq31(2, 2, k, lift_eigenvalues(gp5)) == integer(-5 + 1));
}

TEST_CASE("adding trivial coordinates shifts the character by a multiple of f_g(1)")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned p = trial % 2 ? 3 : 2;
        const unsigned d = 1 + trial % 3;
        const unsigned r = 1 + trial % 2;
        const unsigned n = 1 + (trial / 3) % 3;
        const unsigned N = unsigned(std::pow(p, n)) - 1;
        const unsigned k = std::uniform_int_distribution<unsigned>(0, N - 1)(rng);
        auto res = lemma32_check(random_p_regular(p, d, rng), r, n, k);
        CAPTURE(trial);
        CHECK(res.holds());
    }

    // Direct check of one instance against the action on the bigger algebra.
    FpMatrix g = preset(2, 2, "gq").generators[0];
    FpMatrix gI = direct_sum(g, FpMatrix::identity(1, 2));
    AlgebraContext big(2, 2, 3);
    auto res = lemma32_check(g, 1, 2, 1);
    CHECK(character_from_action(build_graded_action(big, {gI}, 1, Variant::L, false).matrices[0], 3) == res.lhs);
}

TEST_CASE("permutation characters")
{
    auto pr = preset(2, 3, "GL");
    GroupData G = close(pr.generators, 2, 3);
    auto lattice = subgroup_lattice(G);
    for (const auto& H : lattice) {
        if (H.order() > 24)
            continue;
        // Burnside: transitive action has one orbit.
        std::size_t total = 0;
        for (ElementIndex g = 0; g < G.order(); ++g)
            total += perm_character(G, H, g);
        CHECK(total == G.order());
        CHECK(perm_character(G, H, 0) == G.order() / H.order());
    }
}

TEST_CASE("Gaussian binomials and Hom orbit types")
{
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(5, 0, 5) == 1);
    CHECK(gaussian_binomial(2, 3, 2) == 0);

    for (auto [p, n, d] : {std::tuple{2u, 2u, 2u}, {2u, 3u, 3u}, {3u, 2u, 3u}, {5u, 2u, 2u}}) {
        std::size_t total = 0;
        for (const auto& t : hom_orbit_decomposition(p, n, d)) {
            CHECK(t.image_dim + t.kernel_dim == d);
            total += t.multiplicity * t.orbit_size;
        }
        std::size_t expect = 1;
        for (unsigned i = 0; i < n * d; ++i)
            expect *= p;
        CHECK(total == expect);
    }
    CHECK(hom_fixed_points(FpMatrix::identity(2, 3), 2) == 81);
    // g_2 fixes only the zero map.
    CHECK(hom_fixed_points(preset(2, 2, "gq").generators[0], 3) == 1);
}

TEST_CASE("character sums match fixed points on Hom(V, F_p^n)")
{
    for (auto [p, n, d] : {std::tuple{2u, 1u, 2u}, {2u, 2u, 2u}, {3u, 1u, 2u}, {2u, 1u, 3u}}) {
        auto rep = kuhn_character_check(p, n, d);
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(d);
        CHECK_FALSE(rep.skipped);
        CHECK(rep.pass());
        CHECK_FALSE(rep.rows.empty());
    }
}

TEST_CASE("obstruction verdicts")
{
    auto row = [](std::string label, Cyclotomic v) { return CharacterRow{label, 1, "M", v}; };
    CHECK(perm_obstruction({row("1A", integer(5)), row("3A", integer(2))}).kind == Obstruction::None);
    auto neg = perm_obstruction({row("1A", integer(5)), row("3A", integer(-1))});
    CHECK(neg.kind == Obstruction::NotNonNegativeInteger);
    CHECK(neg.class_label == "3A");
    CHECK(perm_obstruction({row("1A", integer(5)), row("3A", Cyclotomic::rational(mpq_class(1, 2)))}).kind ==
          Obstruction::NotNonNegativeInteger);
    CHECK(perm_obstruction({row("1A", integer(3)), row("3A", integer(4))}).kind == Obstruction::ExceedsDimension);
    auto z = Cyclotomic::root_of_unity(7, 1);
    auto irr = perm_obstruction({row("1A", integer(8)), row("7A", z + z * z + z * z * z * z)});
    CHECK(irr.kind == Obstruction::Irrational);
    CHECK_FALSE(irr.describe().empty());
}
