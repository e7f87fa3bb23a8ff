#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "morava/prime_field.hpp"

namespace morava {

using FpVector = std::vector<Scalar>;

// Shared per-prime field tables; built once, never mutated.
const PrimeField& prime_field(unsigned p);

namespace kernels {
// dst[j] = dst[j] + f * src[j] over F_p, for j < n.
void axpy(Scalar* dst, const Scalar* src, Scalar f, std::size_t n, unsigned p);
void scale(Scalar* row, Scalar f, std::size_t n, unsigned p);
}  // namespace kernels

// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, unsigned p);

    static FpMatrix identity(std::size_t n, unsigned p);
    static FpMatrix from_rows(unsigned p, std::initializer_list<std::initializer_list<long long>> rows);
    static FpMatrix from_row_vectors(unsigned p, std::size_t cols, std::span<const FpVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned p() const { return p_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;

    Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, long long v);

    std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    FpVector column(std::size_t j) const;
    const std::vector<Scalar>& data() const { return data_; }

    FpMatrix transpose() const;
    // Rows [r0, r0+nr) and columns [c0, c0+nc).
    FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    std::size_t nonzeros() const;

    FpMatrix& operator+=(const FpMatrix& o);
    FpMatrix& operator-=(const FpMatrix& o);

    bool operator==(const FpMatrix& o) const = default;
    auto operator<=>(const FpMatrix& o) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    unsigned p_ = 2;
    std::vector<Scalar> data_;
};

FpMatrix operator+(FpMatrix a, const FpMatrix& b);
FpMatrix operator-(FpMatrix a, const FpMatrix& b);
FpMatrix operator*(Scalar s, const FpMatrix& m);
// OpenMP-parallel over output rows; skips zero entries of the left factor.
FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpVector operator*(const FpMatrix& m, std::span<const Scalar> v);

// Stacks matrices with equal column counts on top of each other.
FpMatrix vstack(std::span<const FpMatrix> parts);
// Block-diagonal sum.
FpMatrix direct_sum(const FpMatrix& a, const FpMatrix& b);
// Matrix inverse via Gauss-Jordan; throws std::domain_error when singular.
FpMatrix inverse(const FpMatrix& m);
FpMatrix power(const FpMatrix& m, unsigned long long e);

}  // namespace morava
