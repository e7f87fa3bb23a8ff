#include <stdexcept>

#include "morava/linalg.hpp"

namespace morava::reference {

EchelonForm row_reduce(FpMatrix m)
{
    const PrimeField& f = prime_field(m.p());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(piv, j), m(r, j));
        const Scalar inv = f.inv(m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Scalar factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return reference::row_reduce(m).pivots.size(); }

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b)
{
    if (a.cols() != b.rows() || a.p() != b.p())
        throw std::invalid_argument("reference::multiply: shape or field mismatch");
    const PrimeField& f = prime_field(a.p());
    FpMatrix c(a.rows(), b.cols(), a.p());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc = f.add(acc, f.mul(a(i, k), b(k, j)));
            c(i, j) = acc;
        }
    return c;
}

}  // namespace morava::reference
