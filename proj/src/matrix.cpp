#include "fphom/matrix.hpp"

#include <stdexcept>

namespace fphom {

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    require_prime(p);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, FpVec entries)
    : p_(p), rows_(rows), cols_(cols), data_(std::move(entries)) {
    require_prime(p);
    if (data_.size() != rows_ * cols_)
        throw std::invalid_argument("FpMatrix: entry count does not match shape");
    for (auto& e : data_)
        e %= p_;
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1 % p;
    return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<FpVec>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    FpMatrix m(p, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j] % p;
    }
    return m;
}

FpMatrix FpMatrix::row_vector(std::uint32_t p, const FpVec& v) {
    return from_rows(p, {v});
}

FpMatrix FpMatrix::col_vector(std::uint32_t p, const FpVec& v) {
    FpMatrix m(p, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i] % p;
    return m;
}

FpVec FpMatrix::row(std::size_t r) const {
    return FpVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

FpVec FpMatrix::col(std::size_t c) const {
    FpVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

bool FpMatrix::is_zero() const {
    for (auto e : data_)
        if (e != 0)
            return false;
    return true;
}

namespace {

void require_same_modulus(const FpMatrix& a, const FpMatrix& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("FpMatrix modulus mismatch");
}

void require_same_shape(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("FpMatrix shape mismatch");
}

} // namespace

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
    require_same_shape(a, b);
    FpMatrix r(a.modulus(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = add_mod(a(i, j), b(i, j), a.modulus());
    return r;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
    require_same_shape(a, b);
    FpMatrix r(a.modulus(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = sub_mod(a(i, j), b(i, j), a.modulus());
    return r;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b);
    if (a.cols() != b.rows())
        throw std::invalid_argument("FpMatrix product: inner dimensions differ");
    const std::uint32_t p = a.modulus();
    FpMatrix r(p, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) = static_cast<std::uint32_t>((r(i, j) + aik * b(k, j)) % p);
        }
    return r;
}

FpMatrix operator*(std::uint32_t s, const FpMatrix& a) {
    FpMatrix r(a.modulus(), a.rows(), a.cols());
    s %= a.modulus();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = mul_mod(s, a(i, j), a.modulus());
    return r;
}

FpMatrix transpose(const FpMatrix& a) {
    FpMatrix r(a.modulus(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(j, i) = a(i, j);
    return r;
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b);
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row counts differ");
    FpMatrix r(a.modulus(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b);
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: column counts differ");
    FpMatrix r(a.modulus(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(a.rows() + i, j) = b(i, j);
    return r;
}

FpVec operator*(const FpMatrix& a, const FpVec& x) {
    if (x.size() != a.cols())
        throw std::invalid_argument("matrix-vector product: length mismatch");
    const std::uint32_t p = a.modulus();
    FpVec y(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc += std::uint64_t(a(i, j)) * (x[j] % p);
        y[i] = static_cast<std::uint32_t>(acc % p);
    }
    return y;
}

FpVec add_vec(const FpVec& a, const FpVec& b, std::uint32_t p) {
    if (a.size() != b.size())
        throw std::invalid_argument("add_vec: length mismatch");
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = add_mod(a[i] % p, b[i] % p, p);
    return r;
}

FpVec sub_vec(const FpVec& a, const FpVec& b, std::uint32_t p) {
    if (a.size() != b.size())
        throw std::invalid_argument("sub_vec: length mismatch");
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = sub_mod(a[i] % p, b[i] % p, p);
    return r;
}

FpVec scale_vec(std::uint32_t s, const FpVec& a, std::uint32_t p) {
    FpVec r(a.size());
    s %= p;
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = mul_mod(s, a[i] % p, p);
    return r;
}

bool is_zero_vec(const FpVec& a) {
    for (auto e : a)
        if (e != 0)
            return false;
    return true;
}

RrefResult rref(const FpMatrix& m) {
    FpMatrix a = m;
    const std::uint32_t p = a.modulus();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0)
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(r, j), a(piv, j));
        const std::uint32_t inv = inv_mod(a(r, c), p);
        for (std::size_t j = c; j < a.cols(); ++j)
            a(r, j) = mul_mod(a(r, j), inv, p);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            const std::uint32_t f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) = sub_mod(a(i, j), mul_mod(f, a(r, j), p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), std::move(pivots), r};
}

std::size_t rank(const FpMatrix& m) {
    return rref(m).rank;
}

FpMatrix kernel_basis(const FpMatrix& m) {
    const auto rr = rref(m);
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivots)
        is_pivot[c] = true;
    FpMatrix basis(p, n - rr.rank, n);
    std::size_t out = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        basis(out, f) = 1;
        for (std::size_t r = 0; r < rr.rank; ++r)
            basis(out, rr.pivots[r]) = neg_mod(rr.reduced(r, f), p);
        ++out;
    }
    return basis;
}

std::optional<FpVec> solve(const FpMatrix& a, const FpVec& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    const auto rr = rref(hstack(a, FpMatrix::col_vector(a.modulus(), b)));
    // a pivot in the augmented column means no solution
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols())
        return std::nullopt;
    FpVec x(a.cols(), 0);
    for (std::size_t r = 0; r < rr.rank; ++r)
        x[rr.pivots[r]] = rr.reduced(r, a.cols());
    return x;
}

std::optional<FpMatrix> solve_matrix(const FpMatrix& a, const FpMatrix& b) {
    if (b.rows() != a.rows())
        throw std::invalid_argument("solve_matrix: row counts differ");
    const auto rr = rref(hstack(a, b));
    FpMatrix x(a.modulus(), a.cols(), b.cols());
    for (std::size_t r = 0; r < rr.rank; ++r) {
        if (rr.pivots[r] >= a.cols())
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(rr.pivots[r], j) = rr.reduced(r, a.cols() + j);
    }
    return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const auto rr = rref(hstack(m, FpMatrix::identity(m.modulus(), m.rows())));
    if (rr.rank < m.rows() || (!rr.pivots.empty() && rr.pivots.back() >= m.cols()))
        return std::nullopt;
    FpMatrix inv(m.modulus(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            inv(i, j) = rr.reduced(i, m.cols() + j);
    return inv;
}

FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b);
    FpMatrix r(a.modulus(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::uint32_t aij = a(i, j);
            if (aij == 0)
                continue;
            for (std::size_t r2 = 0; r2 < b.rows(); ++r2)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    r(i * b.rows() + r2, j * b.cols() + s) = mul_mod(aij, b(r2, s), a.modulus());
        }
    return r;
}

FpMatrix row_space_basis(const FpMatrix& m) {
    const auto rr = rref(m);
    FpMatrix basis(m.modulus(), rr.rank, m.cols());
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            basis(r, c) = rr.reduced(r, c);
    return basis;
}

FpMatrix submatrix(const FpMatrix& m, std::size_t r0, std::size_t nrows, std::size_t c0,
                   std::size_t ncols) {
    if (r0 + nrows > m.rows() || c0 + ncols > m.cols())
        throw std::invalid_argument("submatrix: block out of range");
    FpMatrix r(m.modulus(), nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            r(i, j) = m(r0 + i, c0 + j);
    return r;
}

bool in_row_space(const FpMatrix& rref_basis, const std::vector<std::size_t>& pivots, const FpVec& x) {
    const std::uint32_t p = rref_basis.modulus();
    FpVec v(x);
    for (auto& e : v)
        e %= p;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::uint32_t f = v[pivots[r]];
        if (f == 0)
            continue;
        for (std::size_t c = 0; c < rref_basis.cols(); ++c)
            v[c] = sub_mod(v[c], mul_mod(f, rref_basis(r, c), p), p);
    }
    return is_zero_vec(v);
}

} // namespace fphom
