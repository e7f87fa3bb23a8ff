#include "morava/brauer.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "morava/ext_field.hpp"
#include "morava/graded_action.hpp"
#include "morava/linalg.hpp"

namespace morava {

namespace {

unsigned long long ipow(unsigned long long b, unsigned e)
{
    unsigned long long r = 1;
    while (e--)
        r *= b;
    return r;
}

// Exponent j with lambda = zeta_M^j; lambda must be an M-th root of unity.
unsigned root_exponent(const Cyclotomic& lambda, unsigned M)
{
    for (unsigned j = 0; j < M; ++j)
        if (Cyclotomic::root_of_unity(M, j) == lambda)
            return j;
    throw std::invalid_argument("eigenvalue is not a root of unity of the expected order");
}

// Group-ring evaluation of the generating-function formula for every k at once: returns the values
// chi_k * (q - 1) as coefficient vectors over zeta_M.
struct Eq31 {
    unsigned M = 1;
    std::vector<std::vector<long long>> sums;  // indexed by k
};

Eq31 eq31_all(unsigned p, unsigned n, const std::vector<Cyclotomic>& lambdas)
{
    const unsigned long long q = ipow(p, n);
    const unsigned N = unsigned(q - 1);
    unsigned M = N;
    for (const Cyclotomic& l : lambdas)
        M = std::lcm(M, l.order());
    std::vector<unsigned> exps;
    for (const Cyclotomic& l : lambdas)
        exps.push_back(root_exponent(l, M));

    Eq31 out;
    out.M = M;
    out.sums.assign(N, std::vector<long long>(M, 0));
    const unsigned step = M / N;  // tau = zeta_M^{b * step}
    for (unsigned b = 0; b < N; ++b) {
        const unsigned s = b * step;
        // prod_i sum_{e<q} (lambda_i tau)^e, accumulated as a dense array over Z/M.
        std::vector<long long> prod(M, 0);
        prod[0] = 1;
        for (unsigned c : exps) {
            std::vector<long long> factor(M, 0);
            const unsigned long long base = (c + s) % M;
            for (unsigned long long e = 0; e < q; ++e)
                factor[(base * e) % M] += 1;
            std::vector<long long> next(M, 0);
            for (unsigned x = 0; x < M; ++x)
                if (prod[x])
                    for (unsigned y = 0; y < M; ++y)
                        if (factor[y])
                            next[(x + y) % M] += prod[x] * factor[y];
            prod = std::move(next);
        }
        // times tau^{-k}
        for (unsigned k = 0; k < N; ++k) {
            const unsigned shift = (M - (unsigned long long)k * s % M) % M;
            for (unsigned x = 0; x < M; ++x)
                out.sums[k][(x + shift) % M] += prod[x];
        }
    }
    return out;
}

// Minimal polynomial over F_p of theta, from its Frobenius conjugates;
// coefficient i multiplies x^i.
std::vector<Scalar> minimal_polynomial(const ExtensionField& F, ExtensionField::Elem theta, unsigned degree)
{
    const unsigned p = F.p();
    std::vector<ExtensionField::Elem> poly{1};
    ExtensionField::Elem root = theta;
    for (unsigned i = 0; i < degree; ++i) {
        std::vector<ExtensionField::Elem> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = F.add(next[j + 1], poly[j]);
            next[j] = F.sub(next[j], F.mul(root, poly[j]));
        }
        poly = std::move(next);
        root = F.pow(root, p);
    }
    std::vector<Scalar> out;
    for (auto c : poly) {
        if (c >= p)
            throw std::logic_error("minimal_polynomial: coefficient outside F_p");
        out.push_back(Scalar(c));
    }
    return out;
}

}  // namespace

unsigned matrix_order(const FpMatrix& g)
{
    if (!g.is_square())
        throw std::invalid_argument("matrix_order: matrix not square");
    FpMatrix x = g;
    unsigned ord = 1;
    while (!x.is_identity()) {
        x = x * g;
        if (++ord > 1000000)
            throw std::invalid_argument("matrix_order: matrix is not invertible");
    }
    return ord;
}

std::vector<std::size_t> eigenvalue_multiplicities(const FpMatrix& m, unsigned order)
{
    const unsigned p = m.p();
    if (order == 0 || order % p == 0)
        throw std::invalid_argument("eigenvalue_multiplicities: element is not p-regular");
    const unsigned r = splitting_degree(p, order);
    const ExtensionField& F = extension_field(p, r);
    const unsigned long long step = (F.size() - 1) / order;
    std::vector<std::size_t> mult(order, 0);
    std::vector<char> done(order, 0);
    // m is semisimple (p does not divide its order), so for an orbit of size s
    // with minimal polynomial f, dim ker f(m) = s * multiplicity.
    std::vector<FpMatrix> powers{FpMatrix::identity(m.rows(), p), m};
    for (unsigned j = 0; j < order; ++j) {
        if (done[j])
            continue;
        // Galois conjugates omega^{j p^i} share a multiplicity.
        std::vector<unsigned> orbit;
        for (unsigned x = j; !done[x]; x = unsigned((unsigned long long)x * p % order)) {
            done[x] = 1;
            orbit.push_back(x);
        }
        const ExtensionField::Elem theta = F.zeta_power(j * step);
        std::size_t mu;
        if (orbit.size() == 1)
            mu = eigen_multiplicity(m, ExtScalar{&extension_field(p, 1), theta});
        else {
            const auto f = minimal_polynomial(F, theta, unsigned(orbit.size()));
            while (powers.size() < f.size())
                powers.push_back(powers.back() * m);
            FpMatrix fm(m.rows(), m.cols(), p);
            for (std::size_t i = 0; i < f.size(); ++i)
                if (f[i])
                    fm += f[i] * powers[i];
            mu = (m.rows() - rank(fm)) / orbit.size();
        }
        for (unsigned x : orbit)
            mult[x] = mu;
    }
    return mult;
}

std::vector<Cyclotomic> lift_eigenvalues(const FpMatrix& g)
{
    const unsigned t = matrix_order(g);
    const auto mult = eigenvalue_multiplicities(g, t);
    std::vector<Cyclotomic> out;
    for (unsigned j = 0; j < t; ++j)
        for (std::size_t c = 0; c < mult[j]; ++c)
            out.push_back(Cyclotomic::root_of_unity(t, j));
    if (out.size() != g.rows())
        throw std::logic_error("lift_eigenvalues: matrix is not diagonalisable over the splitting field");
    return out;
}

Cyclotomic character_from_action(const FpMatrix& action, unsigned order)
{
    const auto mult = eigenvalue_multiplicities(action, order);
    std::vector<mpq_class> coeffs(order);
    for (unsigned j = 0; j < order; ++j)
        coeffs[j] = long(mult[j]);
    return Cyclotomic::from_powers(order, coeffs);
}

Cyclotomic character_via_eq31(unsigned p, unsigned n, unsigned k, const std::vector<Cyclotomic>& lambdas, bool reduced)
{
    const unsigned N = unsigned(ipow(p, n) - 1);
    const Eq31 e = eq31_all(p, n, lambdas);
    const auto& sums = e.sums.at(k % N);
    std::vector<mpq_class> coeffs(e.M);
    for (unsigned x = 0; x < e.M; ++x) {
        coeffs[x] = mpq_class(long(sums[x]), long(N));
        coeffs[x].canonicalize();
    }
    Cyclotomic chi = Cyclotomic::from_powers(e.M, coeffs);
    if (reduced && k % N == 0)
        chi -= Cyclotomic::rational(1);
    return chi;
}

Cyclotomic generating_function_at_one(unsigned p, unsigned n, const std::vector<Cyclotomic>& lambdas)
{
    const unsigned long long q = ipow(p, n);
    Cyclotomic f = Cyclotomic::rational(1);
    for (const Cyclotomic& l : lambdas) {
        Cyclotomic s = Cyclotomic::rational(0), x = Cyclotomic::rational(1);
        for (unsigned long long e = 0; e < q; ++e) {
            s += x;
            x *= l;
        }
        f *= s;
    }
    return f;
}

Lemma32Result lemma32_check(const FpMatrix& g, unsigned r, unsigned n, unsigned k)
{
    const unsigned p = g.p();
    std::vector<Cyclotomic> lambdas = lift_eigenvalues(g);
    std::vector<Cyclotomic> extended = lambdas;
    for (unsigned i = 0; i < r; ++i)
        extended.push_back(Cyclotomic::rational(1));
    Lemma32Result res;
    res.lhs = character_via_eq31(p, n, k, extended);
    const unsigned long long q = ipow(p, n);
    const mpq_class scale((long)((ipow(q, r) - 1) / (q - 1)));
    res.rhs = character_via_eq31(p, n, k, lambdas) + scale * generating_function_at_one(p, n, lambdas);
    return res;
}

std::size_t perm_character(const GroupData& G, const SubgroupSpec& H, ElementIndex g)
{
    std::size_t fixed = 0;
    for (ElementIndex x : transversal(G, H))
        fixed += H.contains(G.multiply(G.multiply(G.inverse(x), g), x));
    return fixed;
}

std::size_t gaussian_binomial(unsigned n, unsigned i, unsigned p)
{
    if (i > n)
        return 0;
    mpz_class num = 1, den = 1;
    for (unsigned j = 0; j < i; ++j) {
        mpz_class a, b;
        mpz_ui_pow_ui(a.get_mpz_t(), p, n - j);
        mpz_ui_pow_ui(b.get_mpz_t(), p, j + 1);
        num *= a - 1;
        den *= b - 1;
    }
    mpz_class q = num / den;
    return q.get_ui();
}

namespace {

std::size_t gl_order(unsigned d, unsigned p)
{
    std::size_t o = 1;
    for (unsigned j = 0; j < d; ++j)
        o *= ipow(p, d) - ipow(p, j);
    return o;
}

}  // namespace

std::vector<HomOrbitType> hom_orbit_decomposition(unsigned p, unsigned n, unsigned d)
{
    std::vector<HomOrbitType> out;
    const std::size_t G = gl_order(d, p);
    for (unsigned i = 0; i <= std::min(n, d); ++i) {
        HomOrbitType t;
        t.image_dim = i;
        t.kernel_dim = d - i;
        t.multiplicity = gaussian_binomial(n, i, p);
        // surjections onto a fixed i-dimensional space: choose the kernel, then an isomorphism
        t.orbit_size = gaussian_binomial(d, i, p) * gl_order(i, p);
        t.stabilizer_order = G / t.orbit_size;
        out.push_back(t);
    }
    return out;
}

std::size_t hom_fixed_points(const FpMatrix& g, unsigned n)
{
    const unsigned p = g.p();
    const unsigned d = unsigned(g.rows());
    const unsigned long long total = ipow(p, n * d);
    if (total > (1ull << 22))
        throw std::length_error("hom_fixed_points: Hom(V, F_p^n) too large to enumerate");
    std::size_t fixed = 0;
    FpMatrix phi(d, n, p);
    for (unsigned long long code = 0; code < total; ++code) {
        unsigned long long c = code;
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < n; ++j) {
                phi(i, j) = Scalar(c % p);
                c /= p;
            }
        fixed += (g * phi) == phi;
    }
    return fixed;
}

bool KuhnRow::pass() const { return character_sum == Cyclotomic::rational(long(fixed_points)); }

bool KuhnReport::pass() const
{
    if (skipped)
        return false;
    for (const KuhnRow& r : rows)
        if (!r.pass())
            return false;
    return true;
}

KuhnReport kuhn_character_check(unsigned p, unsigned n, unsigned d, std::size_t max_group_order)
{
    KuhnReport rep;
    if (gl_order(d, p) > max_group_order) {
        rep.skipped = true;
        rep.note = "GL_" + std::to_string(d) + "(F_" + std::to_string(p) + ") exceeds the enumeration bound";
        return rep;
    }
    const GroupData G = close(preset(p, d, "GL").generators, p, d, max_group_order);
    const AlgebraContext ctx(p, n, d);
    for (const ElementClass& c : p_regular_classes(G, p, max_group_order)) {
        KuhnRow row;
        row.class_label = c.label;
        row.order = c.order;
        const FpMatrix& g = G.element(c.representative);
        row.character_sum = Cyclotomic::rational(0);
        for (const GradedAction& piece : build_all_pieces(ctx, {g}, Variant::K, false))
            row.character_sum += character_from_action(piece.matrices[0], c.order);
        row.fixed_points = hom_fixed_points(g, n);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string ObstructionVerdict::describe() const
{
    switch (kind) {
    case Obstruction::None:
        return "no obstruction";
    case Obstruction::Irrational:
        return "irrational value at " + class_label;
    case Obstruction::NotNonNegativeInteger:
        return "negative or fractional value at " + class_label;
    case Obstruction::ExceedsDimension:
        return "value exceeds the dimension at " + class_label;
    }
    return {};
}

ObstructionVerdict perm_obstruction(const std::vector<CharacterRow>& rows)
{
    if (rows.empty())
        return {};
    const auto dim = rows.front().value.rational_value();
    for (const CharacterRow& r : rows) {
        if (!r.value.is_rational())
            return {Obstruction::Irrational, r.class_label};
        if (!r.value.is_nonnegative_integer())
            return {Obstruction::NotNonNegativeInteger, r.class_label};
        if (dim && *r.value.rational_value() > *dim)
            return {Obstruction::ExceedsDimension, r.class_label};
    }
    return {};
}

}  // namespace morava
