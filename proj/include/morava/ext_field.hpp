#pragma once

#include <cstdint>
#include <vector>

#include "morava/prime_field.hpp"

namespace morava {

// Polynomials over F_p, coefficient i multiplying t^i.
using FpPoly = std::vector<Scalar>;

bool is_irreducible(const FpPoly& f, unsigned p);
// Smallest monic irreducible (resp. primitive) polynomial of the given degree,
// ordering candidates by (c_0, c_1, ..., c_{r-1}) lexicographically.
FpPoly smallest_irreducible(unsigned p, unsigned degree);
FpPoly smallest_primitive(unsigned p, unsigned degree);

// The finite field F_{p^r} = F_p[t]/(f) for f = smallest_irreducible(p, r).
// An element is packed as sum c_i p^i, c_i being the coefficient of t^i.
class ExtensionField {
public:
    using Elem = std::uint32_t;

    ExtensionField(unsigned p, unsigned r);

    unsigned p() const { return p_; }
    unsigned degree() const { return r_; }
    std::uint32_t size() const { return q_; }
    const FpPoly& modulus() const { return modulus_; }
    // The fixed primitive element: smallest element of order q - 1.
    Elem zeta() const { return zeta_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1)
            s -= q_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const;
    Elem pow(Elem a, unsigned long long e) const;
    Elem from_prime(Scalar a) const { return a; }
    // zeta^s for any integer s >= 0.
    Elem zeta_power(unsigned long long s) const { return exp_[s % (q_ - 1)]; }
    // Discrete log base zeta of a nonzero element.
    std::uint32_t log(Elem a) const;
    std::uint64_t element_order(Elem a) const;

private:
    Elem mul_poly(Elem a, Elem b) const;

    unsigned p_;
    unsigned r_;
    std::uint32_t q_;
    FpPoly modulus_;
    Elem zeta_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> add_table_;
};

const ExtensionField& extension_field(unsigned p, unsigned r);

struct ExtScalar {
    const ExtensionField* field = nullptr;
    ExtensionField::Elem value = 0;
};

// Degree of the smallest extension of F_p containing the t-th roots of unity:
// the multiplicative order of p modulo t (p and t coprime).
unsigned splitting_degree(unsigned p, unsigned long long t);

}  // namespace morava
