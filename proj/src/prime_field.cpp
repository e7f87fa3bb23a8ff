#include "morava/prime_field.hpp"

#include <string>

namespace morava {

bool is_prime(unsigned v)
{
    if (v < 2)
        return false;
    for (unsigned d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(unsigned p) : p_(p)
{
    if (p >= 256 || !is_prime(p))
        throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 256");
    mul_.resize(std::size_t(p) * p);
    inv_.assign(p, 0);
    for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b) {
            mul_[a * p + b] = Scalar((a * b) % p);
            if ((a * b) % p == 1)
                inv_[a] = Scalar(b);
        }
}

Scalar PrimeField::pow(Scalar a, unsigned long long e) const
{
    Scalar r = 1 % p_;
    Scalar b = a;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

}  // namespace morava
