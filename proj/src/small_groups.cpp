#include "morava/small_groups.hpp"

#include <sstream>
#include <stdexcept>

#include "morava/linalg.hpp"

namespace morava {

std::size_t SL2F3Report::non_projective_count() const
{
    // I_3, I_6 and I_7 are projective (dimensions divisible by 3).
    return multiplicities[0] + multiplicities[1] + multiplicities[3] + multiplicities[4];
}

std::string SL2F3Report::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < 7; ++i)
        if (multiplicities[i]) {
            os << (first ? "" : " + ");
            if (multiplicities[i] > 1)
                os << multiplicities[i];
            os << "I" << i + 1;
            first = false;
        }
    return first ? "0" : os.str();
}

SL2F3Report sl2f3_decompose(const Representation& rho)
{
    const GroupData& G = *rho.group;
    if (G.order() != 24)
        throw std::invalid_argument("sl2f3_decompose: group must have order 24");
    const std::size_t dim = rho.dim();
    const unsigned p = 3;
    if (!rho.matrices.empty() && rho.matrices[0].p() != p)
        throw std::invalid_argument("sl2f3_decompose: module must be over F_3");

    FpMatrix sigma(dim, dim, p);
    std::optional<ElementIndex> tau, alpha;
    std::size_t involutions = 0, order4 = 0;
    for (ElementIndex e = 0; e < G.order(); ++e) {
        switch (G.element_order(e)) {
        case 2:
            tau = e;
            ++involutions;
            break;
        case 3:
            if (!alpha)
                alpha = e;
            break;
        case 4:
            sigma += rho(e);
            ++order4;
            break;
        }
    }
    if (involutions != 1 || order4 != 6 || !alpha)
        throw std::invalid_argument("sl2f3_decompose: group is not SL_2(F_3)");

    const FpMatrix id = FpMatrix::identity(dim, p);
    const FpMatrix bT = Scalar(2) * id + Scalar(2) * rho(*tau) + Scalar(2) * sigma;
    const FpMatrix bV = Scalar(2) * id + rho(*tau);
    const FpMatrix& bP = sigma;
    const FpMatrix one_minus_alpha = id - rho(*alpha);

    SL2F3Report r;
    r.dim = dim;
    const FpMatrix a1 = one_minus_alpha * bT, a2 = one_minus_alpha * a1;
    const FpMatrix v1 = one_minus_alpha * bV, v2 = one_minus_alpha * v1;
    const std::array<const FpMatrix*, 7> mats{&bT, &a1, &a2, &bV, &v1, &v2, &bP};
    for (std::size_t i = 0; i < 7; ++i)
        r.ranks[i] = rank(*mats[i]);

    const long long r1 = r.ranks[0], r2 = r.ranks[1], r3 = r.ranks[2], r4 = r.ranks[3], r5 = r.ranks[4],
                    r6 = r.ranks[5], r7 = r.ranks[6];
    const std::array<long long, 7> twice{2 * (r1 - 2 * r2 + r3), 2 * (r2 - 2 * r3), 2 * r3, 2 * (r5 - 2 * r6),
                                         2 * (r4 - 2 * r5 + r6), 2 * r5 - r4, 2 * r7};
    const std::array<long long, 7> denom{2, 2, 2, 2, 2, 2, 6};
    std::size_t total = 0;
    for (std::size_t i = 0; i < 7; ++i) {
        if (twice[i] < 0 || twice[i] % denom[i] != 0)
            throw std::runtime_error("sl2f3_decompose: ranks give a non-integral or negative multiplicity");
        r.multiplicities[i] = std::size_t(twice[i] / denom[i]);
        total += r.multiplicities[i] * SL2F3Report::kDims[i];
    }
    if (total != dim)
        throw std::runtime_error("sl2f3_decompose: multiplicities do not account for the dimension");
    return r;
}

GL2F2Report& GL2F2Report::operator+=(const GL2F2Report& o)
{
    t += o.t;
    n += o.n;
    v += o.v;
    return *this;
}

std::string GL2F2Report::to_string() const
{
    std::ostringstream os;
    os << t << "T + " << n << "N + " << v << "V";
    return os.str();
}

GL2F2Report gl2f2_decompose(const Representation& rho)
{
    const GroupData& G = *rho.group;
    if (G.order() != 6)
        throw std::invalid_argument("gl2f2_decompose: group must have order 6");
    const std::size_t dim = rho.dim();
    std::optional<ElementIndex> r, s;
    for (ElementIndex e = 0; e < G.order(); ++e) {
        if (G.element_order(e) == 3 && !r)
            r = e;
        if (G.element_order(e) == 2 && !s)
            s = e;
    }
    if (!r || !s)
        throw std::invalid_argument("gl2f2_decompose: group is not S_3");
    const unsigned p = 2;
    const FpMatrix id = FpMatrix::identity(dim, p);
    // c kills V and acts invertibly on T and N; (1 + s) c survives only on N.
    const FpMatrix c = id + rho(*r) + rho(G.multiply(*r, *r));
    const std::size_t rank_c = rank(c);
    const std::size_t n = rank((id + rho(*s)) * c);
    if (rank_c < 2 * n || (dim - rank_c) % 2 != 0)
        throw std::runtime_error("gl2f2_decompose: ranks give a non-integral count");
    return {rank_c - 2 * n, n, (dim - rank_c) / 2};
}

GL2F2Report l_formula_52(unsigned n, unsigned k)
{
    if (n == 0)
        throw std::invalid_argument("l_formula_52: n must be positive");
    const std::size_t q = std::size_t(1) << n;
    const std::size_t N = q - 1;
    k %= N == 1 ? 1 : N;
    const std::size_t t = k == 0 ? 2 : 1;
    if (n % 2 == 1)
        return {t, (q - 2) / 6, (q + 1) / 3};
    if (k % 3 == 0)
        return {t, (q + 2) / 6, (q - 1) / 3};
    return {1, (q - 4) / 6, (q + 2) / 3};
}

GL2F2Report molien_counts_51(unsigned j)
{
    GL2F2Report r;
    r.t = j % 2 == 0 ? 1 : 0;
    // P_N = t^3 / ((1 - t^2)(1 - t^3)): solutions of 2a + 3b = j - 3
    if (j >= 3)
        for (unsigned b = 0; 3 * b <= j - 3; ++b)
            r.n += (j - 3 - 3 * b) % 2 == 0;
    // P_V = t / ((1 - t)(1 - t^3)): solutions of a + 3b = j - 1
    if (j >= 1)
        r.v = (j - 1) / 3 + 1;
    return r;
}

GL2F2Report truncated_l_decomposition_via_51(unsigned n, unsigned k)
{
    const unsigned N = (1u << n) - 1;
    k %= N;
    if (k == 0) {
        GL2F2Report r = molien_counts_51(N);
        r.t += 2;  // degrees 0 and 2N
        return r;
    }
    GL2F2Report r = molien_counts_51(k);
    r += molien_counts_51(N - k);  // degree N + k, dual to S^{N-k}
    return r;
}

std::optional<TransitiveCensus> gl2f2_transitive_census(const GL2F2Report& r)
{
    // T.a + N.b + (T+V).c + (N+2V).e: c + 2e = v, a + c = t, b + e = n.
    for (std::size_t e = 0; 2 * e <= r.v && e <= r.n; ++e) {
        const std::size_t c = r.v - 2 * e;
        if (c <= r.t)
            return TransitiveCensus{r.t - c, r.n - e, c, e};
    }
    return std::nullopt;
}

GL2F2Report gl2f2_hom_module(unsigned n)
{
    const std::size_t q = std::size_t(1) << n;
    const std::size_t lines = q - 1;                 // stabilizer of order 2: T + V
    const std::size_t planes = (q - 1) * (q - 2) / 6;  // free orbits: N + 2V
    return {1 + lines, planes, lines + 2 * planes};
}

}  // namespace morava
