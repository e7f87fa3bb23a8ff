#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace morava {

// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(unsigned m);
unsigned euler_phi(unsigned m);

// Exact element of Q(zeta_m), zeta_m = exp(2 pi i / m), stored as the unique
// remainder modulo Phi_m in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(unsigned order);

    static Cyclotomic rational(const mpq_class& v, unsigned order = 1);
    static Cyclotomic root_of_unity(unsigned order, long long exponent);
    // Value of sum_j coeffs[j] zeta_m^j, for coeffs of any length.
    static Cyclotomic from_powers(unsigned order, const std::vector<mpq_class>& coeffs);

    unsigned order() const { return order_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    // Image under Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M^{M/m}; m must divide M.
    Cyclotomic embed(unsigned order) const;

    bool is_zero() const;
    bool is_rational() const;
    std::optional<mpq_class> rational_value() const;
    bool is_nonnegative_integer() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const mpq_class& s);
    Cyclotomic& operator/=(const mpq_class& s);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(const mpq_class& s, Cyclotomic a) { return a *= s; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    std::complex<double> to_complex() const;
    // "-1", "3/2", or a polynomial in z such as "z+z^2+z^4 (z^7=1)".
    std::string to_string() const;
    // Fixed-precision "re" or "re+imi" rendering.
    std::string to_decimal(int digits = 6) const;

private:
    void reduce();

    unsigned order_;
    std::vector<mpq_class> coeffs_;
};

}  // namespace morava
