#include <stdexcept>

#include "morava/linalg.hpp"

namespace morava {

namespace {

// Rank of a dense matrix over an extension field.
std::size_t ext_rank(std::vector<ExtensionField::Elem> a, std::size_t rows, std::size_t cols,
                     const ExtensionField& f)
{
    auto at = [&](std::size_t i, std::size_t j) -> ExtensionField::Elem& { return a[i * cols + j]; };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && at(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(at(piv, j), at(r, j));
        const auto inv = f.inv(at(r, c));
        for (std::size_t j = c; j < cols; ++j)
            at(r, j) = f.mul(at(r, j), inv);
        const auto first = static_cast<long long>(r + 1);
        const auto last = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
        for (long long i = first; i < last; ++i) {
            const auto factor = at(std::size_t(i), c);
            if (factor == 0)
                continue;
            const auto nf = f.neg(factor);
            for (std::size_t j = c; j < cols; ++j)
                if (at(r, j))
                    at(std::size_t(i), j) = f.add(at(std::size_t(i), j), f.mul(nf, at(r, j)));
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t eigen_multiplicity(const FpMatrix& m, const ExtScalar& theta)
{
    if (!m.is_square())
        throw std::invalid_argument("eigen_multiplicity: matrix not square");
    if (theta.field == nullptr || theta.field->p() != m.p())
        throw std::invalid_argument("eigen_multiplicity: eigenvalue field does not extend F_p");
    const ExtensionField& f = *theta.field;
    const std::size_t n = m.rows();
    if (f.degree() == 1) {
        FpMatrix shifted = m;
        const Scalar t = Scalar(theta.value);
        const PrimeField& pf = prime_field(m.p());
        for (std::size_t i = 0; i < n; ++i)
            shifted(i, i) = pf.sub(shifted(i, i), t);
        return n - rank(shifted);
    }
    std::vector<ExtensionField::Elem> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = f.from_prime(m(i, j));
    for (std::size_t i = 0; i < n; ++i)
        a[i * n + i] = f.sub(a[i * n + i], theta.value);
    return n - ext_rank(std::move(a), n, n, f);
}

}  // namespace morava
