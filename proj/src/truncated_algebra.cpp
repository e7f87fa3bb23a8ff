#include "morava/truncated_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "morava/linalg.hpp"

namespace morava {

namespace {

unsigned long long binomial(unsigned n, unsigned k)
{
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Dense scratch accumulator over all monomials, one buffer per thread.
class Accumulator {
public:
    Accumulator(std::size_t size, unsigned p) : p_(p), coeffs_(buffer())
    {
        if (coeffs_.size() < size)
            coeffs_.assign(size, 0);
    }

    void add(MonomialIndex m, unsigned c)
    {
        if (coeffs_[m] == 0)
            touched_.push_back(m);
        coeffs_[m] = Scalar((coeffs_[m] + c) % p_);
    }

    // A coefficient that cancels to zero and reappears is listed twice;
    // duplicates are dropped here.
    std::vector<AlgebraElement::Term> take()
    {
        std::sort(touched_.begin(), touched_.end());
        touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
        std::vector<AlgebraElement::Term> out;
        out.reserve(touched_.size());
        for (MonomialIndex m : touched_) {
            if (coeffs_[m])
                out.emplace_back(m, coeffs_[m]);
            coeffs_[m] = 0;
        }
        touched_.clear();
        return out;
    }

private:
    static std::vector<Scalar>& buffer()
    {
        thread_local std::vector<Scalar> buf;
        return buf;
    }

    unsigned p_;
    std::vector<Scalar>& coeffs_;
    std::vector<MonomialIndex> touched_;
};

}  // namespace

AlgebraContext::AlgebraContext(unsigned p, unsigned n, unsigned d) : p_(p), n_(n), d_(d)
{
    prime_field(p);
    if (n == 0 || d == 0)
        throw std::invalid_argument("AlgebraContext: n and d must be positive");
    unsigned long long q = 1;
    for (unsigned i = 0; i < n; ++i)
        q *= p;
    unsigned long long size = 1;
    for (unsigned j = 0; j < d; ++j) {
        size *= q;
        if (size > (1ull << 24))
            throw std::invalid_argument("AlgebraContext: algebra dimension exceeds 2^24");
    }
    q_ = unsigned(q);
    size_ = std::size_t(size);
    fgl_coeffs_.assign(p, 0);
    for (unsigned i = 1; i < p; ++i)
        fgl_coeffs_[i] = Scalar((binomial(p, i) / p) % p);
    strides_.resize(d);
    MonomialIndex s = 1;
    for (unsigned j = 0; j < d; ++j) {
        strides_[j] = s;
        s *= q_;
    }
    digits_.resize(size_ * d_);
    lengths_.resize(size_);
    for (std::size_t m = 0; m < size_; ++m) {
        std::size_t t = m;
        unsigned len = 0;
        for (unsigned j = 0; j < d_; ++j) {
            digits_[m * d_ + j] = std::uint16_t(t % q_);
            len += unsigned(t % q_);
            t /= q_;
        }
        lengths_[m] = len;
    }
}

MonomialIndex AlgebraContext::index(std::span<const unsigned> exponents) const
{
    if (exponents.size() != d_)
        throw std::invalid_argument("AlgebraContext::index: wrong number of exponents");
    MonomialIndex m = 0;
    for (unsigned j = 0; j < d_; ++j) {
        if (exponents[j] >= q_)
            throw std::out_of_range("AlgebraContext::index: exponent out of range");
        m += exponents[j] * strides_[j];
    }
    return m;
}

std::vector<unsigned> AlgebraContext::exponents(MonomialIndex m) const
{
    std::vector<unsigned> e(d_);
    for (unsigned j = 0; j < d_; ++j)
        e[j] = exponent(m, j);
    return e;
}

bool AlgebraContext::multiply(MonomialIndex a, MonomialIndex b, MonomialIndex& out) const
{
    const std::uint16_t* da = &digits_[std::size_t(a) * d_];
    const std::uint16_t* db = &digits_[std::size_t(b) * d_];
    for (unsigned j = 0; j < d_; ++j)
        if (unsigned(da[j]) + db[j] >= q_)
            return false;
    out = a + b;
    return true;
}

AlgebraElement::AlgebraElement(const AlgebraContext& ctx, std::vector<Term> terms) : ctx_(&ctx)
{
    bool canonical = true;
    for (std::size_t i = 0; i < terms.size() && canonical; ++i)
        canonical = terms[i].second != 0 && terms[i].second < ctx.p() && terms[i].first < ctx.size() &&
                    (i == 0 || terms[i - 1].first < terms[i].first);
    if (canonical) {
        terms_ = std::move(terms);
        return;
    }
    Accumulator acc(ctx.size(), ctx.p());
    for (auto [m, c] : terms) {
        if (m >= ctx.size())
            throw std::out_of_range("AlgebraElement: monomial index out of range");
        acc.add(m, c % ctx.p());
    }
    terms_ = acc.take();
}

AlgebraElement AlgebraElement::monomial(const AlgebraContext& ctx, MonomialIndex m, long long coeff)
{
    return AlgebraElement(ctx, {{m, prime_field(ctx.p()).reduce(coeff)}});
}

AlgebraElement AlgebraElement::variable(const AlgebraContext& ctx, unsigned j)
{
    return monomial(ctx, ctx.variable(j));
}

Scalar AlgebraElement::coefficient(MonomialIndex m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0},
                               [](const Term& a, const Term& b) { return a.first < b.first; });
    return (it != terms_.end() && it->first == m) ? it->second : Scalar(0);
}

bool AlgebraElement::is_homogeneous(unsigned k) const
{
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return ctx_->grade(t.first) == k; });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
    if (!ctx_)
        ctx_ = o.ctx_;
    if (o.terms_.empty())
        return *this;
    const PrimeField& f = prime_field(ctx_->p());
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first))
            out.push_back(terms_[i++]);
        else if (i == terms_.size() || o.terms_[j].first < terms_[i].first)
            out.push_back(o.terms_[j++]);
        else {
            const Scalar c = f.add(terms_[i].second, o.terms_[j].second);
            if (c)
                out.emplace_back(terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
    if (!ctx_)
        ctx_ = o.ctx_;
    if (o.terms_.empty())
        return *this;
    return *this += Scalar(ctx_->p() - 1) * o;
}

AlgebraElement operator*(Scalar s, const AlgebraElement& a)
{
    AlgebraElement r = a;
    if (!a.ctx_)
        return r;
    const PrimeField& f = prime_field(a.ctx_->p());
    const Scalar ss = f.reduce(s);
    std::vector<AlgebraElement::Term> out;
    if (ss)
        for (auto [m, c] : a.terms_)
            out.emplace_back(m, f.mul(ss, c));
    r.terms_ = std::move(out);
    return r;
}

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v)
{
    const AlgebraContext& ctx = u.context();
    if (u.is_zero() || v.is_zero())
        return AlgebraElement(ctx);
    Accumulator acc(ctx.size(), ctx.p());
    MonomialIndex prod;
    for (auto [a, ca] : u.terms())
        for (auto [b, cb] : v.terms())
            if (ctx.multiply(a, b, prod))
                acc.add(prod, unsigned(ca) * cb);
    return AlgebraElement(ctx, acc.take());
}

AlgebraElement power(const AlgebraElement& u, unsigned long long e)
{
    const AlgebraContext& ctx = u.context();
    AlgebraElement result = AlgebraElement::monomial(ctx, 0);
    AlgebraElement base = u;
    while (e) {
        if (e & 1)
            result = multiply(result, base);
        e >>= 1;
        if (e)
            base = multiply(base, base);
    }
    return result;
}

AlgebraElement frobenius(const AlgebraElement& u, unsigned times)
{
    const AlgebraContext& ctx = u.context();
    unsigned long long factor = 1;
    for (unsigned i = 0; i < times; ++i)
        factor *= ctx.p();
    std::vector<AlgebraElement::Term> out;
    for (auto [m, c] : u.terms()) {
        bool alive = true;
        MonomialIndex image = 0;
        for (unsigned j = 0; j < ctx.d() && alive; ++j) {
            const unsigned long long e = ctx.exponent(m, j) * factor;
            if (e >= ctx.q())
                alive = false;
            else
                image += MonomialIndex(e) * ctx.stride(j);
        }
        if (alive)
            out.emplace_back(image, c);
    }
    return AlgebraElement(ctx, std::move(out));
}

AlgebraElement formal_sum(const AlgebraElement& u, const AlgebraElement& v)
{
    const AlgebraContext& ctx = u.context();
    if (u.has_constant_term() || v.has_constant_term())
        throw std::invalid_argument("formal_sum: arguments must have no constant term");
    AlgebraElement out = u + v;
    if (u.is_zero() || v.is_zero())
        return out;
    const unsigned p = ctx.p();
    const AlgebraElement us = frobenius(u, ctx.n() - 1);
    const AlgebraElement vs = frobenius(v, ctx.n() - 1);
    if (us.is_zero() || vs.is_zero())
        return out;
    std::vector<AlgebraElement> upow{AlgebraElement::monomial(ctx, 0)}, vpow{AlgebraElement::monomial(ctx, 0)};
    for (unsigned i = 1; i < p; ++i) {
        upow.push_back(multiply(upow.back(), us));
        vpow.push_back(multiply(vpow.back(), vs));
    }
    for (unsigned i = 1; i < p; ++i) {
        const Scalar c = ctx.fgl_coeff(i);
        if (c)
            out -= c * multiply(upow[i], vpow[p - i]);
    }
    return out;
}

AlgebraElement a_series(unsigned a, const AlgebraElement& u)
{
    const AlgebraContext& ctx = u.context();
    if (a >= ctx.p())
        throw std::out_of_range("a_series: multiplier must lie in [0, p)");
    AlgebraElement acc(ctx);
    for (unsigned i = 0; i < a; ++i)
        acc = formal_sum(acc, u);
    return acc;
}

std::vector<AlgebraElement> act_on_generators(const AlgebraContext& ctx, const FpMatrix& g)
{
    if (g.rows() != ctx.d() || g.cols() != ctx.d() || g.p() != ctx.p())
        throw std::invalid_argument("act_on_generators: matrix must be d x d over F_p");
    if (rank(g) != ctx.d())
        throw std::invalid_argument("act_on_generators: matrix is singular");
    std::vector<AlgebraElement> images;
    images.reserve(ctx.d());
    for (unsigned j = 0; j < ctx.d(); ++j) {
        AlgebraElement y(ctx);
        for (unsigned i = 0; i < ctx.d(); ++i)
            y = formal_sum(y, a_series(g(i, j), AlgebraElement::variable(ctx, i)));
        images.push_back(std::move(y));
    }
    return images;
}

}  // namespace morava
