#ifndef FPHOM_MATRIX_HPP
#define FPHOM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fphom/fp.hpp"

namespace fphom {

/// Dense row-major matrix over F_p. Entries are residues in [0, p);
/// the modulus is validated prime at construction. Values are immutable
/// in spirit: operations are free functions returning fresh matrices.
class FpMatrix {
public:
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, FpVec entries);

    static FpMatrix identity(std::uint32_t p, std::size_t n);
    static FpMatrix from_rows(std::uint32_t p, const std::vector<FpVec>& rows);
    static FpMatrix row_vector(std::uint32_t p, const FpVec& v);
    static FpMatrix col_vector(std::uint32_t p, const FpVec& v);

    std::uint32_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    const FpVec& entries() const { return data_; }

    FpVec row(std::size_t r) const;
    FpVec col(std::size_t c) const;

    bool is_zero() const;
    bool operator==(const FpMatrix&) const = default;

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    FpVec data_;
};

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator*(std::uint32_t s, const FpMatrix& a);
FpMatrix transpose(const FpMatrix& a);
FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

/// Matrix times coordinate column.
FpVec operator*(const FpMatrix& a, const FpVec& x);

FpVec add_vec(const FpVec& a, const FpVec& b, std::uint32_t p);
FpVec sub_vec(const FpVec& a, const FpVec& b, std::uint32_t p);
FpVec scale_vec(std::uint32_t s, const FpVec& a, std::uint32_t p);
bool is_zero_vec(const FpVec& a);

struct RrefResult {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank;
};

/// Reduced row echelon form by Gauss-Jordan elimination; exact.
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Rows form a basis of the right null space {x : m x = 0}, one row per
/// free column in increasing column order.
FpMatrix kernel_basis(const FpMatrix& m);

/// One solution of a x = b, free variables set to zero; nullopt when the
/// system is inconsistent.
std::optional<FpVec> solve(const FpMatrix& a, const FpVec& b);

/// Solves a X = B columnwise (free variables zero); nullopt if any column
/// is inconsistent.
std::optional<FpMatrix> solve_matrix(const FpMatrix& a, const FpMatrix& b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

/// Kronecker product, a-major: entry((i*b.rows+r),(j*b.cols+s)) = a(i,j)*b(r,s).
FpMatrix kron(const FpMatrix& a, const FpMatrix& b);

/// Canonical basis of a row span: the nonzero rows of rref. Two subspaces
/// are equal iff their canonical bases are equal matrices.
FpMatrix row_space_basis(const FpMatrix& m);

/// Contiguous block copy: rows [r0, r0+nrows), cols [c0, c0+ncols).
FpMatrix submatrix(const FpMatrix& m, std::size_t r0, std::size_t nrows, std::size_t c0,
                   std::size_t ncols);

/// Membership of x in the row space of an rref basis.
bool in_row_space(const FpMatrix& rref_basis, const std::vector<std::size_t>& pivots, const FpVec& x);

} // namespace fphom

#endif
