#include "morava/fp_matrix.hpp"

#include <array>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "morava/linalg.hpp"

namespace morava {

const PrimeField& prime_field(unsigned p)
{
    static const std::array<std::unique_ptr<PrimeField>, 256> fields = [] {
        std::array<std::unique_ptr<PrimeField>, 256> f;
        for (unsigned q = 2; q < 256; ++q)
            if (is_prime(q))
                f[q] = std::make_unique<PrimeField>(q);
        return f;
    }();
    if (p >= 256 || !fields[p])
        throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not a prime below 256");
    return *fields[p];
}

namespace kernels {

namespace {
template <unsigned P>
void axpy_fixed(Scalar* dst, const Scalar* src, Scalar f, std::size_t n)
{
    const unsigned ff = f;
    for (std::size_t j = 0; j < n; ++j)
        dst[j] = Scalar((unsigned(dst[j]) + ff * src[j]) % P);
}

template <unsigned P>
void scale_fixed(Scalar* row, Scalar f, std::size_t n)
{
    const unsigned ff = f;
    for (std::size_t j = 0; j < n; ++j)
        row[j] = Scalar((ff * row[j]) % P);
}
}  // namespace

void axpy(Scalar* dst, const Scalar* src, Scalar f, std::size_t n, unsigned p)
{
    if (f == 0)
        return;
    switch (p) {
    case 2:
        for (std::size_t j = 0; j < n; ++j)
            dst[j] ^= src[j];
        return;
    case 3: axpy_fixed<3>(dst, src, f, n); return;
    case 5: axpy_fixed<5>(dst, src, f, n); return;
    case 7: axpy_fixed<7>(dst, src, f, n); return;
    default:
        for (std::size_t j = 0; j < n; ++j)
            dst[j] = Scalar((unsigned(dst[j]) + unsigned(f) * src[j]) % p);
    }
}

void scale(Scalar* row, Scalar f, std::size_t n, unsigned p)
{
    switch (p) {
    case 2:
        if (f == 0)
            std::fill(row, row + n, Scalar(0));
        return;
    case 3: scale_fixed<3>(row, f, n); return;
    case 5: scale_fixed<5>(row, f, n); return;
    case 7: scale_fixed<7>(row, f, n); return;
    default:
        for (std::size_t j = 0; j < n; ++j)
            row[j] = Scalar((unsigned(f) * row[j]) % p);
    }
}

}  // namespace kernels

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, unsigned p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0)
{
    prime_field(p);
}

FpMatrix FpMatrix::identity(std::size_t n, unsigned p)
{
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(unsigned p, std::initializer_list<std::initializer_list<long long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    FpMatrix m(r, c, p);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (long long v : row)
            m.set(i, j++, v);
        ++i;
    }
    return m;
}

FpMatrix FpMatrix::from_row_vectors(unsigned p, std::size_t cols, std::span<const FpVector> rows)
{
    FpMatrix m(rows.size(), cols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("FpMatrix::from_row_vectors: length mismatch");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, long long v)
{
    data_[i * cols_ + j] = prime_field(p_).reduce(v);
}

bool FpMatrix::is_zero() const
{
    for (Scalar s : data_)
        if (s)
            return false;
    return true;
}

bool FpMatrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

FpVector FpMatrix::column(std::size_t j) const
{
    FpVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::out_of_range("FpMatrix::block");
    FpMatrix b(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

std::size_t FpMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (Scalar s : data_)
        n += s != 0;
    return n;
}

FpMatrix& FpMatrix::operator+=(const FpMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw std::invalid_argument("FpMatrix::operator+=: shape or field mismatch");
    kernels::axpy(data_.data(), o.data_.data(), 1, data_.size(), p_);
    return *this;
}

FpMatrix& FpMatrix::operator-=(const FpMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw std::invalid_argument("FpMatrix::operator-=: shape or field mismatch");
    kernels::axpy(data_.data(), o.data_.data(), Scalar(p_ - 1), data_.size(), p_);
    return *this;
}

std::string FpMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << unsigned((*this)(i, j));
        os << '\n';
    }
    return os.str();
}

FpMatrix operator+(FpMatrix a, const FpMatrix& b) { return a += b; }
FpMatrix operator-(FpMatrix a, const FpMatrix& b) { return a -= b; }

FpMatrix operator*(Scalar s, const FpMatrix& m)
{
    FpMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i)
        kernels::scale(r.row(i).data(), prime_field(m.p()).reduce(s), r.cols(), r.p());
    return r;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b)
{
    if (a.cols() != b.rows() || a.p() != b.p())
        throw std::invalid_argument("FpMatrix::operator*: shape or field mismatch");
    FpMatrix c(a.rows(), b.cols(), a.p());
    const auto n = static_cast<long long>(a.rows());
    const unsigned p = a.p();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) {
        Scalar* out = c.row(std::size_t(i)).data();
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar f = a(std::size_t(i), k);
            if (f)
                kernels::axpy(out, b.row(k).data(), f, b.cols(), p);
        }
    }
    return c;
}

FpVector operator*(const FpMatrix& m, std::span<const Scalar> v)
{
    if (m.cols() != v.size())
        throw std::invalid_argument("FpMatrix * vector: length mismatch");
    const PrimeField& f = prime_field(m.p());
    FpVector out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        unsigned acc = 0;
        auto r = m.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) {
            acc += unsigned(r[j]) * v[j];
            if (acc >= (1u << 30))
                acc %= m.p();
        }
        out[i] = f.reduce(acc);
    }
    return out;
}

FpMatrix vstack(std::span<const FpMatrix> parts)
{
    if (parts.empty())
        return {};
    std::size_t rows = 0;
    for (const auto& m : parts) {
        if (m.cols() != parts[0].cols() || m.p() != parts[0].p())
            throw std::invalid_argument("vstack: column or field mismatch");
        rows += m.rows();
    }
    FpMatrix out(rows, parts[0].cols(), parts[0].p());
    std::size_t r = 0;
    for (const auto& m : parts)
        for (std::size_t i = 0; i < m.rows(); ++i, ++r)
            std::copy(m.row(i).begin(), m.row(i).end(), out.row(r).begin());
    return out;
}

FpMatrix direct_sum(const FpMatrix& a, const FpMatrix& b)
{
    if (a.p() != b.p())
        throw std::invalid_argument("direct_sum: field mismatch");
    FpMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

FpMatrix inverse(const FpMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    FpMatrix aug(n, 2 * n, m.p());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    EchelonForm e = row_reduce(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw std::domain_error("inverse: matrix is singular");
    return e.reduced.block(0, n, n, n);
}

FpMatrix power(const FpMatrix& m, unsigned long long e)
{
    FpMatrix r = FpMatrix::identity(m.rows(), m.p());
    FpMatrix b = m;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

}  // namespace morava
