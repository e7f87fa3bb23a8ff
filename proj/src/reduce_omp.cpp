#include <algorithm>
#include <stdexcept>

#include "morava/linalg.hpp"

namespace morava {

namespace {

// Shared driver: with `full` every other row is cleared in the pivot column,
// otherwise only the rows below.
EchelonForm eliminate(FpMatrix m, bool full)
{
    const PrimeField& f = prime_field(m.p());
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const unsigned p = m.p();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
        Scalar* prow = m.row(r).data();
        kernels::scale(prow + c, f.inv(prow[c]), cols - c, p);
        const long long first = full ? 0 : static_cast<long long>(r + 1);
        const auto last = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
        for (long long i = first; i < last; ++i) {
            if (std::size_t(i) == r)
                continue;
            Scalar* row = m.row(std::size_t(i)).data();
            if (row[c])
                kernels::axpy(row + c, prow + c, f.neg(row[c]), cols - c, p);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

EchelonForm row_reduce(FpMatrix m) { return eliminate(std::move(m), true); }

std::size_t rank(const FpMatrix& m) { return eliminate(m, false).pivots.size(); }

std::vector<FpVector> kernel_basis(const FpMatrix& m)
{
    EchelonForm e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : e.pivots)
        is_pivot[c] = 1;
    const PrimeField& f = prime_field(m.p());
    std::vector<FpVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        FpVector v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FpVector> fixed_space(std::span<const FpMatrix> gens)
{
    if (gens.empty())
        throw std::invalid_argument("fixed_space: no generators");
    const std::size_t n = gens[0].rows();
    const unsigned p = gens[0].p();
    std::vector<FpMatrix> blocks;
    blocks.reserve(gens.size());
    const FpMatrix id = FpMatrix::identity(n, p);
    for (const auto& g : gens) {
        if (!g.is_square() || g.rows() != n || g.p() != p)
            throw std::invalid_argument("fixed_space: generators must be square of equal size");
        blocks.push_back(g - id);
    }
    return kernel_basis(vstack(blocks));
}

bool RowBasis::reduce(FpVector& v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("RowBasis: vector length mismatch");
    const PrimeField& f = prime_field(p_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = v[pivots_[i]];
        if (c)
            kernels::axpy(v.data(), rows_[i].data(), f.neg(c), dim_, p_);
    }
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

bool RowBasis::insert(FpVector v)
{
    if (reduce(v))
        return false;
    std::size_t piv = 0;
    while (v[piv] == 0)
        ++piv;
    kernels::scale(v.data(), prime_field(p_).inv(v[piv]), dim_, p_);
    pivots_.push_back(piv);
    rows_.push_back(std::move(v));
    return true;
}

}  // namespace morava
