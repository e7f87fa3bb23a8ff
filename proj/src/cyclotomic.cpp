#include "morava/cyclotomic.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace morava {

namespace {

std::vector<long long> compute_cyclotomic(unsigned m)
{
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d)
            continue;
        const auto& div = cyclotomic_polynomial(d);
        const std::size_t dd = div.size() - 1;
        std::vector<long long> quot(num.size() - dd, 0);
        for (std::size_t i = num.size(); i-- > dd;) {
            const long long c = num[i];
            quot[i - dd] = c;
            if (c)
                for (std::size_t j = 0; j <= dd; ++j)
                    num[i - dd + j] -= c * div[j];
        }
        for (std::size_t i = 0; i < dd; ++i)
            if (num[i] != 0)
                throw std::logic_error("cyclotomic_polynomial: inexact division");
        num = std::move(quot);
    }
    return num;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(unsigned m)
{
    if (m == 0)
        throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    static std::recursive_mutex mu;
    static std::map<unsigned, std::vector<long long>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, compute_cyclotomic(m)).first;
    return it->second;
}

unsigned euler_phi(unsigned m) { return unsigned(cyclotomic_polynomial(m).size() - 1); }

Cyclotomic::Cyclotomic(unsigned order) : order_(order), coeffs_(euler_phi(order)) {}

Cyclotomic Cyclotomic::rational(const mpq_class& v, unsigned order)
{
    Cyclotomic c(order);
    c.coeffs_[0] = v;
    return c;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long long exponent)
{
    long long e = exponent % static_cast<long long>(order);
    if (e < 0)
        e += order;
    std::vector<mpq_class> pw(std::size_t(e) + 1);
    pw[std::size_t(e)] = 1;
    return from_powers(order, pw);
}

Cyclotomic Cyclotomic::from_powers(unsigned order, const std::vector<mpq_class>& coeffs)
{
    Cyclotomic c(order);
    // Fold exponents modulo the order first, then reduce modulo Phi_m.
    std::vector<mpq_class> folded(std::min<std::size_t>(coeffs.size(), order));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        folded[i % order] += coeffs[i];
    c.coeffs_ = std::move(folded);
    c.reduce();
    return c;
}

void Cyclotomic::reduce()
{
    const auto& phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = coeffs_.size(); i-- > deg;) {
        if (coeffs_[i] == 0)
            continue;
        const mpq_class c = coeffs_[i];
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j])
                coeffs_[i - deg + j] -= c * static_cast<long>(phi[j]);
    }
    coeffs_.resize(deg);
}

Cyclotomic Cyclotomic::embed(unsigned order) const
{
    if (order % order_ != 0)
        throw std::invalid_argument("Cyclotomic::embed: target order must be a multiple");
    if (order == order_)
        return *this;
    const unsigned step = order / order_;
    std::vector<mpq_class> pw(coeffs_.size() ? (coeffs_.size() - 1) * step + 1 : 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        pw[i * step] = coeffs_[i];
    return from_powers(order, pw);
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

std::optional<mpq_class> Cyclotomic::rational_value() const
{
    if (!is_rational())
        return std::nullopt;
    return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

bool Cyclotomic::is_nonnegative_integer() const
{
    auto v = rational_value();
    return v && v->get_den() == 1 && *v >= 0;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    const unsigned m = std::lcm(order_, o.order_);
    if (m != order_)
        *this = embed(m);
    if (o.order_ == m) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
    } else {
        const Cyclotomic e = o.embed(m);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += e.coeffs_[i];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    const unsigned m = std::lcm(order_, o.order_);
    const Cyclotomic a = embed(m);
    const Cyclotomic b = o.embed(m);
    std::vector<mpq_class> prod(a.coeffs_.size() + b.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    *this = from_powers(m, prod);
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const mpq_class& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const mpq_class& s)
{
    if (s == 0)
        throw std::domain_error("Cyclotomic: division by zero");
    for (auto& c : coeffs_)
        c /= s;
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    const unsigned m = std::lcm(a.order_, b.order_);
    const Cyclotomic ea = a.embed(m);
    const Cyclotomic eb = b.embed(m);
    return ea.coeffs_ == eb.coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const
{
    std::complex<double> z(0, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const double angle = 2.0 * std::numbers::pi * double(i) / double(order_);
        z += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

std::string Cyclotomic::to_string() const
{
    if (auto v = rational_value())
        return v->get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const mpq_class mag = neg ? mpq_class(-c) : c;
        if (neg)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "z";
        if (i > 1)
            os << "^" << i;
    }
    os << " (z^" << order_ << "=1)";
    return os.str();
}

std::string Cyclotomic::to_decimal(int digits) const
{
    const auto z = to_complex();
    auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << clean(z.real());
    const double im = clean(z.imag());
    if (im != 0.0)
        os << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    return os.str();
}

}  // namespace morava
