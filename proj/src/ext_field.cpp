#include "morava/ext_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "morava/fp_matrix.hpp"

namespace morava {

namespace {

void trim(FpPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

// Remainder of a modulo the monic polynomial m.
FpPoly poly_mod(FpPoly a, const FpPoly& m, const PrimeField& f)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const Scalar lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(lead, m[i]));
        trim(a);
    }
    return a;
}

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// idx enumerates coefficient tuples (c_0, ..., c_{r-1}) with c_0 most
// significant, so increasing idx is the lexicographic candidate order.
FpPoly monic_from_index(std::uint64_t idx, unsigned p, unsigned degree)
{
    FpPoly f(degree + 1, 0);
    f[degree] = 1;
    for (unsigned i = degree; i-- > 0;) {
        f[i] = Scalar(idx % p);
        idx /= p;
    }
    return f;
}

}  // namespace

bool is_irreducible(const FpPoly& f, unsigned p)
{
    FpPoly g = f;
    trim(g);
    if (g.size() < 2)
        return false;
    const unsigned deg = unsigned(g.size() - 1);
    if (deg == 1)
        return true;
    const PrimeField& field = prime_field(p);
    // Brute force over monic divisors of degree <= deg/2.
    for (unsigned dd = 1; dd <= deg / 2; ++dd) {
        const std::uint64_t count = ipow(p, dd);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            FpPoly h = monic_from_index(idx, p, dd);
            if (poly_mod(g, h, field).empty())
                return false;
        }
    }
    return true;
}

FpPoly smallest_irreducible(unsigned p, unsigned degree)
{
    if (degree == 0)
        throw std::invalid_argument("smallest_irreducible: degree must be positive");
    const std::uint64_t count = ipow(p, degree);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FpPoly f = monic_from_index(idx, p, degree);
        if (is_irreducible(f, p))
            return f;
    }
    throw std::logic_error("smallest_irreducible: none found");
}

FpPoly smallest_primitive(unsigned p, unsigned degree)
{
    const std::uint64_t count = ipow(p, degree);
    const PrimeField& field = prime_field(p);
    const std::uint64_t order = count - 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FpPoly f = monic_from_index(idx, p, degree);
        if (!is_irreducible(f, p))
            continue;
        // Order of t modulo f.
        FpPoly x{0, 1};
        FpPoly cur = poly_mod(FpPoly{1}, f, field);
        std::uint64_t k = 0;
        do {
            FpPoly next(cur.size() + 1, 0);
            for (std::size_t i = 0; i < cur.size(); ++i)
                next[i + 1] = cur[i];
            cur = poly_mod(next, f, field);
            ++k;
        } while (!(cur.size() == 1 && cur[0] == 1) && k <= order);
        if (k == order)
            return f;
    }
    throw std::logic_error("smallest_primitive: none found");
}

unsigned splitting_degree(unsigned p, unsigned long long t)
{
    if (t == 0 || std::gcd<unsigned long long>(p, t) != 1)
        throw std::invalid_argument("splitting_degree: order must be coprime to p");
    if (t == 1)
        return 1;
    unsigned r = 1;
    unsigned long long v = p % t;
    while (v != 1) {
        v = (v * p) % t;
        ++r;
    }
    return r;
}

ExtensionField::ExtensionField(unsigned p, unsigned r) : p_(p), r_(r)
{
    prime_field(p);
    const std::uint64_t q = ipow(p, r);
    if (r == 0 || q > (1u << 20))
        throw std::invalid_argument("ExtensionField: unsupported size p^r = " + std::to_string(q));
    q_ = std::uint32_t(q);
    modulus_ = smallest_irreducible(p, r);

    if (q_ <= 1024) {
        add_table_.resize(std::size_t(q_) * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) {
                Elem s = 0, pw = 1, x = a, y = b;
                for (unsigned i = 0; i < r_; ++i) {
                    s += ((x % p_ + y % p_) % p_) * pw;
                    x /= p_;
                    y /= p_;
                    pw *= p_;
                }
                add_table_[std::size_t(a) * q_ + b] = s;
            }
    }

    // Smallest primitive element in the (c_0, c_1, ...) ordering.
    const std::uint64_t order = q_ - 1;
    std::vector<std::uint64_t> prime_factors;
    {
        std::uint64_t m = order;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0)
                    m /= d;
            }
        if (m > 1)
            prime_factors.push_back(m);
    }
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem res = 1, b = a;
        while (e) {
            if (e & 1)
                res = mul_poly(res, b);
            b = mul_poly(b, b);
            e >>= 1;
        }
        return res;
    };
    for (std::uint64_t idx = 1; idx < q_ && zeta_ == 0; ++idx) {
        // idx enumerates with c_0 most significant.
        Elem packed = 0;
        std::uint64_t t = idx, pw = ipow(p_, r_ - 1);
        for (unsigned i = 0; i < r_; ++i) {
            packed += Elem((t % p_) * pw);
            t /= p_;
            pw /= p_;
        }
        if (packed == 0)
            continue;
        bool primitive = true;
        for (std::uint64_t l : prime_factors)
            if (slow_pow(packed, order / l) == 1) {
                primitive = false;
                break;
            }
        if (primitive)
            zeta_ = packed;
    }
    if (order == 1)
        zeta_ = 1;
    exp_.resize(order);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        exp_[i] = cur;
        log_[cur] = std::uint32_t(i);
        cur = mul_poly(cur, zeta_);
    }
}

ExtensionField::Elem ExtensionField::mul_poly(Elem a, Elem b) const
{
    const PrimeField& f = prime_field(p_);
    FpPoly pa(r_), pb(r_);
    for (unsigned i = 0; i < r_; ++i) {
        pa[i] = Scalar(a % p_);
        pb[i] = Scalar(b % p_);
        a /= p_;
        b /= p_;
    }
    FpPoly prod(2 * r_, 0);
    for (unsigned i = 0; i < r_; ++i)
        for (unsigned j = 0; j < r_; ++j)
            prod[i + j] = f.add(prod[i + j], f.mul(pa[i], pb[j]));
    FpPoly rem = poly_mod(prod, modulus_, f);
    Elem out = 0, pw = 1;
    for (std::size_t i = 0; i < rem.size(); ++i) {
        out += rem[i] * pw;
        pw *= p_;
    }
    return out;
}

ExtensionField::Elem ExtensionField::add(Elem a, Elem b) const
{
    if (!add_table_.empty())
        return add_table_[std::size_t(a) * q_ + b];
    Elem s = 0, pw = 1;
    for (unsigned i = 0; i < r_; ++i) {
        s += ((a % p_ + b % p_) % p_) * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return s;
}

ExtensionField::Elem ExtensionField::neg(Elem a) const
{
    Elem s = 0, pw = 1;
    for (unsigned i = 0; i < r_; ++i) {
        s += ((p_ - a % p_) % p_) * pw;
        a /= p_;
        pw *= p_;
    }
    return s;
}

ExtensionField::Elem ExtensionField::inv(Elem a) const
{
    if (a == 0)
        throw std::domain_error("ExtensionField: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

ExtensionField::Elem ExtensionField::pow(Elem a, unsigned long long e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    return exp_[(static_cast<unsigned long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t ExtensionField::log(Elem a) const
{
    if (a == 0)
        throw std::domain_error("ExtensionField: log of zero");
    return log_[a];
}

std::uint64_t ExtensionField::element_order(Elem a) const
{
    const std::uint64_t n = q_ - 1;
    return n / std::gcd<std::uint64_t>(n, log(a));
}

const ExtensionField& extension_field(unsigned p, unsigned r)
{
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<ExtensionField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, r}];
    if (!slot)
        slot = std::make_unique<ExtensionField>(p, r);
    return *slot;
}

}  // namespace morava
