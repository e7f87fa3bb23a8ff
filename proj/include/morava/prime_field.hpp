#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace morava {

using Scalar = std::uint8_t;

bool is_prime(unsigned v);

// The prime field F_p, p < 256. Multiplication and inversion go through
// tables, which for the primes in use (2, 3, 5, 7) fit in a cache line or two.
class PrimeField {
public:
    PrimeField() : PrimeField(2) {}
    explicit PrimeField(unsigned p);

    unsigned p() const { return p_; }

    Scalar add(Scalar a, Scalar b) const
    {
        unsigned s = unsigned(a) + b;
        return Scalar(s >= p_ ? s - p_ : s);
    }
    Scalar sub(Scalar a, Scalar b) const { return Scalar(a >= b ? a - b : a + p_ - b); }
    Scalar neg(Scalar a) const { return Scalar(a == 0 ? 0 : p_ - a); }
    Scalar mul(Scalar a, Scalar b) const { return mul_[std::size_t(a) * p_ + b]; }
    Scalar inv(Scalar a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero in F_p");
        return inv_[a];
    }
    Scalar reduce(long long v) const
    {
        long long r = v % static_cast<long long>(p_);
        return Scalar(r < 0 ? r + p_ : r);
    }
    Scalar pow(Scalar a, unsigned long long e) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    unsigned p_;
    std::vector<Scalar> mul_;
    std::vector<Scalar> inv_;
};

}  // namespace morava
