#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "morava/ext_field.hpp"
#include "morava/fp_matrix.hpp"

namespace morava {

// Reduced row echelon form: `reduced` has the same shape as the input, its
// first pivots.size() rows are nonzero with a leading 1 at the listed
// columns, and all other entries of pivot columns vanish.
struct EchelonForm {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination, first nonzero entry as pivot. The elimination of
// each pivot column is distributed over rows with OpenMP.
EchelonForm row_reduce(FpMatrix m);
std::size_t rank(const FpMatrix& m);
// Basis of the right null space {x : m x = 0}.
std::vector<FpVector> kernel_basis(const FpMatrix& m);
// Basis of the common fixed vectors of the given square matrices.
std::vector<FpVector> fixed_space(std::span<const FpMatrix> gens);

// Geometric multiplicity of theta as an eigenvalue of m, computed over the
// field of theta.
std::size_t eigen_multiplicity(const FpMatrix& m, const ExtScalar& theta);

// Single-threaded scalar implementations kept as a reference for the
// parallel kernels above.
namespace reference {
EchelonForm row_reduce(FpMatrix m);
std::size_t rank(const FpMatrix& m);
FpMatrix multiply(const FpMatrix& a, const FpMatrix& b);
}  // namespace reference

// Incrementally grown subspace of F_p^n kept in semi-echelon form.
class RowBasis {
public:
    RowBasis(std::size_t dim, unsigned p) : dim_(dim), p_(p) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return dim_; }
    unsigned p() const { return p_; }

    // Reduces v against the basis in place; returns true when v becomes zero.
    bool reduce(FpVector& v) const;
    bool contains(FpVector v) const { return reduce(v); }
    // Adds v to the span; returns true when the dimension increased.
    bool insert(FpVector v);
    const std::vector<FpVector>& rows() const { return rows_; }

private:
    std::size_t dim_;
    unsigned p_;
    std::vector<FpVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace morava
