#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "morava/fp_matrix.hpp"

namespace morava {

using MonomialIndex = std::uint32_t;

// F_p[x_1..x_d]/(x_i^q), q = p^n, graded by total degree modulo q - 1.
// Monomials are addressed by the mixed-radix index sum_j e_j q^j (x_1 least
// significant).
class AlgebraContext {
public:
    AlgebraContext(unsigned p, unsigned n, unsigned d);

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    unsigned d() const { return d_; }
    unsigned q() const { return q_; }
    unsigned grade_modulus() const { return q_ - 1; }
    // p^{n-1}: the Frobenius twist in the truncated formal sum.
    unsigned frobenius_step() const { return q_ / p_; }
    // C(p, i) / p mod p, for 1 <= i <= p - 1.
    Scalar fgl_coeff(unsigned i) const { return fgl_coeffs_.at(i); }
    std::size_t size() const { return size_; }

    MonomialIndex index(std::span<const unsigned> exponents) const;
    std::vector<unsigned> exponents(MonomialIndex m) const;
    unsigned exponent(MonomialIndex m, unsigned j) const { return digits_[std::size_t(m) * d_ + j]; }
    unsigned length(MonomialIndex m) const { return lengths_[m]; }
    unsigned grade(MonomialIndex m) const { return grade_modulus() == 0 ? 0 : lengths_[m] % grade_modulus(); }
    MonomialIndex variable(unsigned j) const { return strides_.at(j); }
    MonomialIndex stride(unsigned j) const { return strides_[j]; }
    // Product of two monomials; false when some exponent reaches q.
    bool multiply(MonomialIndex a, MonomialIndex b, MonomialIndex& out) const;

private:
    unsigned p_, n_, d_, q_;
    std::size_t size_;
    std::vector<Scalar> fgl_coeffs_;
    std::vector<MonomialIndex> strides_;
    std::vector<std::uint16_t> digits_;
    std::vector<std::uint32_t> lengths_;
};

// Sparse element of the truncated algebra; terms sorted by monomial index,
// zero coefficients never stored.
class AlgebraElement {
public:
    using Term = std::pair<MonomialIndex, Scalar>;

    AlgebraElement() = default;
    explicit AlgebraElement(const AlgebraContext& ctx) : ctx_(&ctx) {}
    AlgebraElement(const AlgebraContext& ctx, std::vector<Term> terms);

    static AlgebraElement monomial(const AlgebraContext& ctx, MonomialIndex m, long long coeff = 1);
    static AlgebraElement variable(const AlgebraContext& ctx, unsigned j);

    const AlgebraContext& context() const { return *ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_constant_term() const { return !terms_.empty() && terms_.front().first == 0; }
    Scalar coefficient(MonomialIndex m) const;
    // Every term has total degree congruent to k modulo q - 1.
    bool is_homogeneous(unsigned k) const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(Scalar s, const AlgebraElement& a);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

private:
    const AlgebraContext* ctx_ = nullptr;
    std::vector<Term> terms_;
};

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement power(const AlgebraElement& u, unsigned long long e);
// u^(p^times), computed termwise since coefficients lie in F_p.
AlgebraElement frobenius(const AlgebraElement& u, unsigned times);

// Truncated formal sum of the height-n Morava formal group law with v_n = 1:
// u + v - sum_{i=1}^{p-1} (C(p,i)/p) u^{i p^{n-1}} v^{(p-i) p^{n-1}}.
// Both arguments must lack a constant term.
AlgebraElement formal_sum(const AlgebraElement& u, const AlgebraElement& v);
// [a]u as an a-fold formal sum, 0 <= a < p.
AlgebraElement a_series(unsigned a, const AlgebraElement& u);
// Images y_j = [g_1j]x_1 +F ... +F [g_dj]x_d of the generators under g.
std::vector<AlgebraElement> act_on_generators(const AlgebraContext& ctx, const FpMatrix& g);

}  // namespace morava
