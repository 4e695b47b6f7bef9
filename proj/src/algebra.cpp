#include "fphom/algebra.hpp"

#include <algorithm>
#include <string>

namespace fphom {

FpAlgebra::FpAlgebra(std::uint32_t p, std::vector<std::string> basis_names, FpVec one,
                     std::vector<FpMatrix> left_tables)
    : p_(p), dim_(basis_names.size()), names_(std::move(basis_names)), one_(std::move(one)),
      tables_(std::move(left_tables)) {
    require_prime(p_);
    if (dim_ == 0)
        throw std::invalid_argument("FpAlgebra: dimension must be at least 1");
    if (one_.size() != dim_)
        throw std::invalid_argument("FpAlgebra: unit coordinate length mismatch");
    if (tables_.size() != dim_)
        throw std::invalid_argument("FpAlgebra: need one multiplication table per basis element");
    for (const auto& t : tables_)
        if (t.rows() != dim_ || t.cols() != dim_ || t.modulus() != p_)
            throw std::invalid_argument("FpAlgebra: malformed multiplication table");
    for (auto& e : one_)
        e %= p_;
}

FpAlgebra FpAlgebra::from_tensor(std::uint32_t p, std::vector<std::string> basis_names, FpVec one,
                                 const std::vector<std::uint32_t>& tensor) {
    const std::size_t d = basis_names.size();
    if (tensor.size() != d * d * d)
        throw std::invalid_argument("FpAlgebra: tensor must have dim^3 entries");
    std::vector<FpMatrix> tables;
    tables.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        FpMatrix t(p, d, d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                t(k, j) = tensor[(i * d + j) * d + k] % p;
        tables.push_back(std::move(t));
    }
    return FpAlgebra(p, std::move(basis_names), std::move(one), std::move(tables));
}

FpVec FpAlgebra::multiply(const FpVec& x, const FpVec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("multiply: element length mismatch");
    FpVec z(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] % p_ == 0)
            continue;
        z = add_vec(z, scale_vec(x[i], tables_[i] * y, p_), p_);
    }
    return z;
}

FpVec FpAlgebra::power(const FpVec& x, std::uint64_t e) const {
    FpVec r = one_;
    FpVec base = x;
    while (e) {
        if (e & 1)
            r = multiply(r, base);
        e >>= 1;
        if (e)
            base = multiply(base, base);
    }
    return r;
}

FpMatrix FpAlgebra::mul_matrix(const FpVec& x) const {
    if (x.size() != dim_)
        throw std::invalid_argument("mul_matrix: element length mismatch");
    FpMatrix m(p_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        const std::uint32_t xi = x[i] % p_;
        if (xi == 0)
            continue;
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t j = 0; j < dim_; ++j)
                m(k, j) = add_mod(m(k, j), mul_mod(xi, tables_[i](k, j), p_), p_);
    }
    return m;
}

FpVec FpAlgebra::basis_element(std::size_t i) const {
    FpVec v(dim_, 0);
    v.at(i) = 1;
    return v;
}

std::vector<std::string> validate(const FpAlgebra& a) {
    std::vector<std::string> bad;
    const std::size_t d = a.dim();

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (a.c(i, j, k) != a.c(j, i, k)) {
                    bad.push_back("commutativity fails at e" + std::to_string(i) + "*e" +
                                  std::to_string(j));
                    k = d, j = d; // report each pair once
                }

    if (a.mul_matrix(a.one()) != FpMatrix::identity(a.p(), d))
        bad.push_back("unit law fails: one*x != x");

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const FpVec ij = a.left_table(i).col(j);    // e_i e_j
                const FpVec jk = a.left_table(j).col(k);    // e_j e_k
                const FpVec lhs = a.multiply(ij, a.basis_element(k));
                const FpVec rhs = a.multiply(a.basis_element(i), jk);
                if (lhs != rhs)
                    bad.push_back("associativity fails at (e" + std::to_string(i) + " e" +
                                  std::to_string(j) + ") e" + std::to_string(k));
            }
    return bad;
}

bool structurally_equal(const FpAlgebra& a, const FpAlgebra& b) {
    if (a.p() != b.p() || a.dim() != b.dim() || a.one() != b.one())
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.left_table(i) != b.left_table(i))
            return false;
    return true;
}

AlgebraPtr gf(std::uint32_t p) {
    require_prime(p);
    return std::make_shared<FpAlgebra>(
        p, std::vector<std::string>{"1"}, FpVec{1},
        std::vector<FpMatrix>{FpMatrix::identity(p, 1)});
}

AlgebraPtr poly_quotient(std::uint32_t p, const FpVec& f) {
    require_prime(p);
    if (!poly_is_monic(f) || f.size() < 2)
        throw std::invalid_argument("poly_quotient: modulus polynomial must be monic of degree >= 1");
    const std::size_t d = f.size() - 1;
    std::vector<std::string> names;
    names.reserve(d);
    for (std::size_t i = 0; i < d; ++i)
        names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    std::vector<FpMatrix> tables;
    for (std::size_t i = 0; i < d; ++i) {
        FpMatrix t(p, d, d);
        for (std::size_t j = 0; j < d; ++j) {
            FpVec m(i + j + 1, 0);
            m[i + j] = 1;
            const FpVec red = poly_mod(std::move(m), f, p);
            for (std::size_t k = 0; k < red.size(); ++k)
                t(k, j) = red[k];
        }
        tables.push_back(std::move(t));
    }
    FpVec one(d, 0);
    one[0] = 1;
    return std::make_shared<FpAlgebra>(p, std::move(names), std::move(one), std::move(tables));
}

AlgebraPtr product(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a->p() != b->p())
        throw std::invalid_argument("product: characteristic mismatch");
    const std::uint32_t p = a->p();
    const std::size_t da = a->dim(), db = b->dim(), d = da + db;
    std::vector<std::string> names;
    for (const auto& n : a->basis_names())
        names.push_back("l:" + n);
    for (const auto& n : b->basis_names())
        names.push_back("r:" + n);
    std::vector<FpMatrix> tables;
    for (std::size_t i = 0; i < d; ++i) {
        FpMatrix t(p, d, d);
        if (i < da) {
            for (std::size_t j = 0; j < da; ++j)
                for (std::size_t k = 0; k < da; ++k)
                    t(k, j) = a->c(i, j, k);
        } else {
            for (std::size_t j = 0; j < db; ++j)
                for (std::size_t k = 0; k < db; ++k)
                    t(da + k, da + j) = b->c(i - da, j, k);
        }
        tables.push_back(std::move(t));
    }
    FpVec one(d, 0);
    for (std::size_t i = 0; i < da; ++i)
        one[i] = a->one()[i];
    for (std::size_t i = 0; i < db; ++i)
        one[da + i] = b->one()[i];
    return std::make_shared<FpAlgebra>(p, std::move(names), std::move(one), std::move(tables));
}

bool is_unit(const FpAlgebra& a, const FpVec& x) {
    return rank(a.mul_matrix(x)) == a.dim();
}

void for_each_element(const FpAlgebra& a, const std::function<void(const FpVec&)>& fn,
                      std::uint64_t cap) {
    if (!element_count(a, cap))
        throw CapExceeded("element enumeration cap exceeded");
    FpVec x(a.dim(), 0);
    for (;;) {
        fn(x);
        std::size_t i = 0;
        while (i < x.size()) {
            if (++x[i] < a.p())
                break;
            x[i] = 0;
            ++i;
        }
        if (i == x.size())
            return;
    }
}

std::optional<std::uint64_t> element_count(const FpAlgebra& a, std::uint64_t cap) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        n *= a.p();
        if (n > cap)
            return std::nullopt;
    }
    return n;
}

bool IdealSubspace::contains(const FpVec& x) const {
    const auto rr = rref(basis); // basis is already reduced; pivots recomputed cheaply
    return in_row_space(rr.reduced, rr.pivots, x);
}

bool operator==(const IdealSubspace& a, const IdealSubspace& b) {
    return a.basis == b.basis;
}

namespace {

bool subspace_is_ideal(const FpAlgebra& a, const RrefResult& rr) {
    for (std::size_t r = 0; r < rr.rank; ++r) {
        const FpVec g = rr.reduced.row(r);
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!in_row_space(rr.reduced, rr.pivots, a.left_table(i) * g))
                return false;
    }
    return true;
}

} // namespace

IdealSubspace ideal_generated_by(const AlgebraPtr& a, const std::vector<FpVec>& gens) {
    std::vector<FpVec> rows;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < a->dim(); ++i)
            rows.push_back(a->left_table(i) * g);
    if (rows.empty())
        return IdealSubspace{a, FpMatrix(a->p(), 0, a->dim())};
    // multiples by basis elements span the ideal (1 lies in the basis span)
    return IdealSubspace{a, row_space_basis(FpMatrix::from_rows(a->p(), rows))};
}

IdealSubspace ideal_from_subspace(const AlgebraPtr& a, const FpMatrix& rows) {
    const auto rr = rref(rows);
    if (!subspace_is_ideal(*a, rr))
        throw std::invalid_argument("subspace is not closed under the ring action");
    FpMatrix basis(a->p(), rr.rank, a->dim());
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t c = 0; c < a->dim(); ++c)
            basis(r, c) = rr.reduced(r, c);
    return IdealSubspace{a, std::move(basis)};
}

IdealSubspace annihilator(const AlgebraPtr& a, const FpMatrix& subspace_rows) {
    if (subspace_rows.rows() == 0)
        return IdealSubspace{a, FpMatrix::identity(a->p(), a->dim())};
    FpMatrix stacked = a->mul_matrix(subspace_rows.row(0));
    for (std::size_t r = 1; r < subspace_rows.rows(); ++r)
        stacked = vstack(stacked, a->mul_matrix(subspace_rows.row(r)));
    return IdealSubspace{a, row_space_basis(kernel_basis(stacked))};
}

IdealSubspace annihilator(const IdealSubspace& s) {
    return annihilator(s.ambient, s.basis);
}

IdealSubspace nilradical(const AlgebraPtr& a) {
    const std::uint32_t p = a->p();
    // Frobenius is F_p-linear in characteristic p; column i is e_i^p.
    FpMatrix frob(p, a->dim(), a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) {
        const FpVec col = a->power(a->basis_element(i), p);
        for (std::size_t k = 0; k < a->dim(); ++k)
            frob(k, i) = col[k];
    }
    FpMatrix iterated = frob;
    std::uint64_t reach = p;
    while (reach < a->dim()) {
        iterated = frob * iterated;
        reach *= p;
    }
    return IdealSubspace{a, row_space_basis(kernel_basis(iterated))};
}

bool is_local(const AlgebraPtr& a, std::uint64_t element_cap) {
    if (element_count(*a, element_cap)) {
        bool local = true;
        for_each_element(
            *a,
            [&](const FpVec& x) {
                if (!local)
                    return;
                if (a->multiply(x, x) == x && !is_zero_vec(x) && x != a->one())
                    local = false;
            },
            element_cap);
        return local;
    }
    // Above the cap: count Frobenius fixed points of a/nilradical. That
    // quotient is a product of finite fields, one fixed line per factor, so
    // the ring is local iff the fixed space modulo the nilradical is a line.
    const IdealSubspace nil = nilradical(a);
    FpMatrix frob(a->p(), a->dim(), a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) {
        const FpVec col = a->power(a->basis_element(i), a->p());
        for (std::size_t k = 0; k < a->dim(); ++k)
            frob(k, i) = col[k];
    }
    const FpMatrix shifted = frob - FpMatrix::identity(a->p(), a->dim());
    const FpMatrix functionals = kernel_basis(nil.basis); // rows vanish exactly on the nilradical
    const FpMatrix composed = functionals * shifted;
    const std::size_t fixed_mod_nil = kernel_basis(composed).rows() - nil.dim();
    return fixed_mod_nil == 1;
}

std::vector<IdealSubspace> enumerate_ideals(const AlgebraPtr& a, std::uint64_t subspace_cap) {
    const std::uint32_t p = a->p();
    const std::size_t d = a->dim();

    // count subspaces first (sum of Gaussian binomials via pivot patterns)
    std::uint64_t total = 0;
    std::vector<std::vector<std::size_t>> pivot_sets;
    std::vector<bool> select(d, false);
    for (std::size_t k = 0; k <= d; ++k) {
        std::fill(select.begin(), select.end(), false);
        std::fill(select.begin(), select.begin() + k, true);
        // iterate k-subsets in lexicographic order via prev_permutation on the mask
        std::vector<std::size_t> cols;
        do {
            cols.clear();
            for (std::size_t i = 0; i < d; ++i)
                if (select[i])
                    cols.push_back(i);
            std::size_t free_count = 0;
            for (std::size_t r = 0; r < cols.size(); ++r)
                for (std::size_t c2 = cols[r] + 1; c2 < d; ++c2)
                    if (!std::binary_search(cols.begin(), cols.end(), c2))
                        ++free_count;
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < free_count; ++i) {
                count *= p;
                if (count > subspace_cap)
                    throw CapExceeded("subspace enumeration cap exceeded");
            }
            total += count;
            if (total > subspace_cap)
                throw CapExceeded("subspace enumeration cap exceeded");
            pivot_sets.push_back(cols);
        } while (std::prev_permutation(select.begin(), select.end()));
    }

    std::vector<IdealSubspace> ideals;
    for (const auto& cols : pivot_sets) {
        const std::size_t k = cols.size();
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c2 = cols[r] + 1; c2 < d; ++c2)
                if (!std::binary_search(cols.begin(), cols.end(), c2))
                    free_pos.emplace_back(r, c2);

        FpVec values(free_pos.size(), 0);
        for (;;) {
            FpMatrix m(p, k, d);
            for (std::size_t r = 0; r < k; ++r)
                m(r, cols[r]) = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                m(free_pos[t].first, free_pos[t].second) = values[t];
            RrefResult rr{m, std::vector<std::size_t>(cols.begin(), cols.end()), k};
            if (subspace_is_ideal(*a, rr))
                ideals.push_back(IdealSubspace{a, std::move(m)});

            std::size_t i = 0;
            while (i < values.size()) {
                if (++values[i] < p)
                    break;
                values[i] = 0;
                ++i;
            }
            if (i == values.size())
                break;
            if (values.empty())
                break;
        }
    }
    return ideals;
}

namespace {

/// F_p-dimension of the space of module homomorphisms I -> A for an ideal I
/// given by rref basis rows.
std::size_t hom_ideal_to_ring_dim(const FpAlgebra& a, const FpMatrix& basis) {
    const std::size_t k = basis.rows(), d = a.dim();
    if (k == 0)
        return 0;
    const FpMatrix bt = transpose(basis); // d x k, columns are the ideal basis
    // action of e_i on the ideal in its own basis: bt * Z_i = L_i * bt
    std::vector<FpMatrix> z;
    for (std::size_t i = 0; i < d; ++i) {
        auto zi = solve_matrix(bt, a.left_table(i) * bt);
        if (!zi)
            throw std::logic_error("ideal basis not action-closed");
        z.push_back(std::move(*zi));
    }
    // unknown F (d x k) with F Z_i = L_i F for all i
    FpMatrix system(a.p(), 0, d * k);
    for (std::size_t i = 0; i < d; ++i) {
        const FpMatrix lhs = kron(FpMatrix::identity(a.p(), d), transpose(z[i]));
        const FpMatrix rhs = kron(a.left_table(i), FpMatrix::identity(a.p(), k));
        system = system.rows() == 0 ? (lhs - rhs) : vstack(system, lhs - rhs);
    }
    return kernel_basis(system).rows();
}

} // namespace

bool is_self_injective(const AlgebraPtr& a, std::uint64_t subspace_cap) {
    for (const auto& ideal : enumerate_ideals(a, subspace_cap)) {
        const std::size_t homs = hom_ideal_to_ring_dim(*a, ideal.basis);
        const std::size_t inner = a->dim() - annihilator(ideal).dim();
        if (homs != inner)
            return false; // some hom I -> a is not multiplication by an element
    }
    return true;
}

QfResult is_qf(const AlgebraPtr& a, std::uint64_t subspace_cap) {
    for (const auto& ideal : enumerate_ideals(a, subspace_cap)) {
        if (!(annihilator(annihilator(ideal)) == ideal))
            return QfResult{false, ideal};
    }
    return QfResult{true, std::nullopt};
}

RingReport ring_report(const AlgebraPtr& a, std::uint64_t element_cap, std::uint64_t subspace_cap) {
    RingReport rep;
    rep.is_local = is_local(a, element_cap);
    rep.nilradical_dim = nilradical(a).dim();
    if (element_count(*a, element_cap)) {
        std::uint64_t units = 0;
        for_each_element(
            *a, [&](const FpVec& x) { units += is_unit(*a, x) ? 1 : 0; }, element_cap);
        rep.unit_count = units;
    }
    try {
        rep.ideal_count = enumerate_ideals(a, subspace_cap).size();
        rep.self_injective = is_self_injective(a, subspace_cap);
        auto qf = is_qf(a, subspace_cap);
        rep.qf = qf.qf;
        rep.qf_witness = std::move(qf.witness);
    } catch (const CapExceeded&) {
        // leave the capped fields unavailable
    }
    return rep;
}

} // namespace fphom
