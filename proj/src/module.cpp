#include "fphom/module.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fphom {

FinModule::FinModule(AlgebraPtr ring, std::vector<FpMatrix> action)
    : ring_(std::move(ring)), dim_(0), action_(std::move(action)) {
    if (!ring_)
        throw std::invalid_argument("FinModule: null ring");
    if (action_.size() != ring_->dim())
        throw std::invalid_argument("FinModule: need one action matrix per ring basis element");
    dim_ = action_.front().rows();
    for (const auto& a : action_)
        if (a.rows() != dim_ || a.cols() != dim_ || a.modulus() != ring_->p())
            throw std::invalid_argument("FinModule: malformed action matrix");
}

FinModule FinModule::trusted(AlgebraPtr ring, std::vector<FpMatrix> action) {
    return FinModule(std::move(ring), std::move(action));
}

FinModule FinModule::checked(AlgebraPtr ring, std::vector<FpMatrix> action) {
    FinModule m(std::move(ring), std::move(action));
    const auto bad = validate(m);
    if (!bad.empty())
        throw std::invalid_argument("FinModule: " + bad.front());
    return m;
}

FpMatrix FinModule::action_of(const FpVec& r) const {
    if (r.size() != ring_->dim())
        throw std::invalid_argument("action_of: ring element length mismatch");
    FpMatrix m(ring_->p(), dim_, dim_);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] % ring_->p() != 0)
            m = m + (r[i] * action_[i]);
    return m;
}

std::vector<std::string> validate(const FinModule& m) {
    std::vector<std::string> bad;
    const auto& ring = *m.ring();
    if (m.action_of(ring.one()) != FpMatrix::identity(ring.p(), m.dim()))
        bad.push_back("unit does not act as the identity");
    for (std::size_t i = 0; i < ring.dim(); ++i)
        for (std::size_t j = 0; j < ring.dim(); ++j) {
            const FpMatrix lhs = m.action(i) * m.action(j);
            FpMatrix rhs(ring.p(), m.dim(), m.dim());
            for (std::size_t k = 0; k < ring.dim(); ++k)
                if (ring.c(i, j, k) != 0)
                    rhs = rhs + (ring.c(i, j, k) * m.action(k));
            if (lhs != rhs) {
                bad.push_back("action is not multiplicative at basis pair (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
                return bad;
            }
        }
    return bad;
}

bool module_equal(const FinModule& a, const FinModule& b) {
    if (!structurally_equal(*a.ring(), *b.ring()) || a.dim() != b.dim())
        return false;
    for (std::size_t i = 0; i < a.ring()->dim(); ++i)
        if (a.action(i) != b.action(i))
            return false;
    return true;
}

FinModuleMap::FinModuleMap(FinModule source, FinModule target, FpMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (!structurally_equal(*source_.ring(), *target_.ring()))
        throw std::invalid_argument("FinModuleMap: source and target rings differ");
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
        throw std::invalid_argument("FinModuleMap: matrix shape mismatch");
}

FinModuleMap FinModuleMap::trusted(FinModule source, FinModule target, FpMatrix matrix) {
    return FinModuleMap(std::move(source), std::move(target), std::move(matrix));
}

FinModuleMap FinModuleMap::checked(FinModule source, FinModule target, FpMatrix matrix) {
    FinModuleMap f(std::move(source), std::move(target), std::move(matrix));
    const auto bad = validate(f);
    if (!bad.empty())
        throw std::invalid_argument("FinModuleMap: " + bad.front());
    return f;
}

std::vector<std::string> validate(const FinModuleMap& f) {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < f.source().ring()->dim(); ++i)
        if (f.matrix() * f.source().action(i) != f.target().action(i) * f.matrix()) {
            bad.push_back("map is not equivariant at ring basis element " + std::to_string(i));
            break;
        }
    return bad;
}

FinModuleMap identity_map(const FinModule& m) {
    return FinModuleMap::trusted(m, m, FpMatrix::identity(m.ring()->p(), m.dim()));
}

FinModuleMap zero_map(const FinModule& source, const FinModule& target) {
    return FinModuleMap::trusted(source, target,
                                 FpMatrix(source.ring()->p(), target.dim(), source.dim()));
}

FinModuleMap compose(const FinModuleMap& g, const FinModuleMap& f) {
    if (!module_equal(g.source(), f.target()))
        throw std::invalid_argument("compose: maps are not composable");
    return FinModuleMap::trusted(f.source(), g.target(), g.matrix() * f.matrix());
}

FinModuleMap operator+(const FinModuleMap& f, const FinModuleMap& g) {
    if (!module_equal(f.source(), g.source()) || !module_equal(f.target(), g.target()))
        throw std::invalid_argument("map sum: shapes differ");
    return FinModuleMap::trusted(f.source(), f.target(), f.matrix() + g.matrix());
}

FinModuleMap operator-(const FinModuleMap& f, const FinModuleMap& g) {
    if (!module_equal(f.source(), g.source()) || !module_equal(f.target(), g.target()))
        throw std::invalid_argument("map difference: shapes differ");
    return FinModuleMap::trusted(f.source(), f.target(), f.matrix() - g.matrix());
}

bool is_injective_map(const FinModuleMap& f) {
    return rank(f.matrix()) == f.source().dim();
}

bool is_surjective_map(const FinModuleMap& f) {
    return rank(f.matrix()) == f.target().dim();
}

FinModule zero_module(const AlgebraPtr& a) {
    return free_module(a, 0);
}

FinModule regular_module(const AlgebraPtr& a) {
    std::vector<FpMatrix> action;
    action.reserve(a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i)
        action.push_back(a->left_table(i));
    return FinModule::trusted(a, std::move(action));
}

FinModule free_module(const AlgebraPtr& a, std::size_t k) {
    std::vector<FpMatrix> action;
    action.reserve(a->dim());
    const FpMatrix copies = FpMatrix::identity(a->p(), k);
    for (std::size_t i = 0; i < a->dim(); ++i)
        action.push_back(kron(copies, a->left_table(i)));
    return FinModule::trusted(a, std::move(action));
}

FinModule direct_sum(const FinModule& m, const FinModule& n) {
    if (!structurally_equal(*m.ring(), *n.ring()))
        throw std::invalid_argument("direct_sum: rings differ");
    const std::uint32_t p = m.ring()->p();
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < m.ring()->dim(); ++i) {
        FpMatrix block(p, m.dim() + n.dim(), m.dim() + n.dim());
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c)
                block(r, c) = m.action(i)(r, c);
        for (std::size_t r = 0; r < n.dim(); ++r)
            for (std::size_t c = 0; c < n.dim(); ++c)
                block(m.dim() + r, m.dim() + c) = n.action(i)(r, c);
        action.push_back(std::move(block));
    }
    return FinModule::trusted(m.ring(), std::move(action));
}

SubmoduleData submodule(const FinModule& parent, const FpMatrix& rows) {
    const FpMatrix basis = row_space_basis(rows);
    const FpMatrix bt = transpose(basis);
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < parent.ring()->dim(); ++i) {
        auto z = solve_matrix(bt, parent.action(i) * bt);
        if (!z)
            throw std::invalid_argument("submodule: span is not closed under the action");
        action.push_back(std::move(*z));
    }
    FinModule sub = FinModule::trusted(parent.ring(), std::move(action));
    return SubmoduleData{sub, FinModuleMap::trusted(sub, parent, bt)};
}

QuotientData quotient_by_subspace(const FinModule& parent, const FpMatrix& rows) {
    const std::uint32_t p = parent.ring()->p();
    const std::size_t n = parent.dim();
    const auto rr = rref(rows);
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivots)
        is_pivot[c] = true;
    const std::size_t q = n - rr.rank;

    FpMatrix proj(p, q, n);
    FpMatrix lift(p, n, q);
    std::size_t t = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        proj(t, c) = 1;
        for (std::size_t r = 0; r < rr.rank; ++r)
            proj(t, rr.pivots[r]) = neg_mod(rr.reduced(r, c), p);
        lift(c, t) = 1;
        ++t;
    }

    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < parent.ring()->dim(); ++i)
        action.push_back(proj * (parent.action(i) * lift));
    FinModule quot = FinModule::trusted(parent.ring(), std::move(action));
    auto projection = FinModuleMap::trusted(parent, quot, std::move(proj));
    return QuotientData{quot, std::move(projection), std::move(lift)};
}

KernelData kernel(const FinModuleMap& f) {
    auto sub = submodule(f.source(), kernel_basis(f.matrix()));
    return KernelData{std::move(sub.module), std::move(sub.inclusion)};
}

CokernelData cokernel(const FinModuleMap& f) {
    auto q = quotient_by_subspace(f.target(), row_space_basis(transpose(f.matrix())));
    return CokernelData{std::move(q.module), std::move(q.projection), std::move(q.lift)};
}

ImageData image(const FinModuleMap& f) {
    auto sub = submodule(f.target(), row_space_basis(transpose(f.matrix())));
    auto core = solve_matrix(sub.inclusion.matrix(), f.matrix());
    if (!core)
        throw std::logic_error("image: factorization failed");
    auto corestriction = FinModuleMap::trusted(f.source(), sub.module, std::move(*core));
    return ImageData{std::move(sub.module), std::move(sub.inclusion), std::move(corestriction)};
}

SubmoduleData module_of_ideal(const IdealSubspace& ideal) {
    return submodule(regular_module(ideal.ambient), ideal.basis);
}

QuotientData cyclic_module(const IdealSubspace& ideal) {
    return quotient_by_subspace(regular_module(ideal.ambient), ideal.basis);
}

HomModule hom_module(const FinModule& m, const FinModule& n) {
    if (!structurally_equal(*m.ring(), *n.ring()))
        throw std::invalid_argument("hom_module: rings differ");
    const std::uint32_t p = m.ring()->p();
    const std::size_t d = m.ring()->dim();
    const std::size_t nm = m.dim(), nn = n.dim();

    // unknown F (nn x nm) with F X_i = Y_i F; vec is row-major
    FpMatrix system(p, 0, nn * nm);
    for (std::size_t i = 0; i < d; ++i) {
        const FpMatrix lhs = kron(FpMatrix::identity(p, nn), transpose(m.action(i)));
        const FpMatrix rhs = kron(n.action(i), FpMatrix::identity(p, nm));
        const FpMatrix block = lhs - rhs;
        system = system.rows() == 0 ? block : vstack(system, block);
    }
    const FpMatrix sol = kernel_basis(system);
    const std::size_t h = sol.rows();

    std::vector<FpMatrix> basis;
    basis.reserve(h);
    for (std::size_t j = 0; j < h; ++j)
        basis.emplace_back(p, nn, nm, sol.row(j));

    // ring action on a hom: a.f = (x -> a f(x)); solve back into coordinates
    const FpMatrix sol_t = transpose(sol); // columns are the basis homs, vectorized
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < d; ++i) {
        FpMatrix acted(p, nn * nm, h);
        for (std::size_t j = 0; j < h; ++j) {
            const FpMatrix g = n.action(i) * basis[j];
            for (std::size_t t = 0; t < nn * nm; ++t)
                acted(t, j) = g.entries()[t];
        }
        auto coords = solve_matrix(sol_t, acted);
        if (!coords)
            throw std::logic_error("hom_module: hom space is not action-closed");
        action.push_back(std::move(*coords));
    }
    return HomModule{FinModule::trusted(m.ring(), std::move(action)), std::move(basis), nm, nn};
}

FpMatrix HomModule::matrix_of(const FpVec& coords) const {
    if (coords.size() != basis.size())
        throw std::invalid_argument("matrix_of: coordinate length mismatch");
    const std::uint32_t p = module.ring()->p();
    FpMatrix f(p, target_dim, source_dim);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (coords[j] % p)
            f = f + (coords[j] * basis[j]);
    return f;
}

FpVec HomModule::apply_hom(const FpVec& coords, const FpVec& x) const {
    return matrix_of(coords) * x;
}

TensorModule tensor_module(const FinModule& m, const FinModule& n) {
    if (!structurally_equal(*m.ring(), *n.ring()))
        throw std::invalid_argument("tensor_module: rings differ");
    const std::uint32_t p = m.ring()->p();
    const std::size_t d = m.ring()->dim();
    const std::size_t nm = m.dim(), nn = n.dim();

    std::vector<FpVec> relations;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t a = 0; a < nm; ++a)
            for (std::size_t b = 0; b < nn; ++b) {
                FpVec rel(nm * nn, 0);
                for (std::size_t s = 0; s < nm; ++s)
                    rel[s * nn + b] = add_mod(rel[s * nn + b], m.action(i)(s, a), p);
                for (std::size_t t2 = 0; t2 < nn; ++t2)
                    rel[a * nn + t2] = sub_mod(rel[a * nn + t2], n.action(i)(t2, b), p);
                if (!is_zero_vec(rel))
                    relations.push_back(std::move(rel));
            }

    const FpMatrix rel_matrix = relations.empty() ? FpMatrix(p, 0, nm * nn)
                                                  : FpMatrix::from_rows(p, relations);

    // big-space action through the left factor
    FinModule big = FinModule::trusted(m.ring(), [&] {
        std::vector<FpMatrix> action;
        const FpMatrix idn = FpMatrix::identity(p, nn);
        for (std::size_t i = 0; i < d; ++i)
            action.push_back(kron(m.action(i), idn));
        return action;
    }());
    auto q = quotient_by_subspace(big, rel_matrix);
    return TensorModule{std::move(q.module), q.projection.matrix(), std::move(q.lift)};
}

FpVec TensorModule::pure(const FpVec& x, const FpVec& y) const {
    const std::uint32_t p = module.ring()->p();
    if (x.size() * y.size() != to_classes.cols())
        throw std::invalid_argument("pure: factor lengths do not match this tensor space");
    FpVec big(x.size() * y.size(), 0);
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < y.size(); ++b)
            big[a * y.size() + b] = mul_mod(x[a] % p, y[b] % p, p);
    return to_classes * big;
}

FinModule dual(const FinModule& m) {
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < m.ring()->dim(); ++i)
        action.push_back(transpose(m.action(i)));
    return FinModule::trusted(m.ring(), std::move(action));
}

FinModuleMap dual_map(const FinModuleMap& f) {
    return FinModuleMap::trusted(dual(f.target()), dual(f.source()), transpose(f.matrix()));
}

namespace {

const FpAlgebra::TrivExtOrigin& require_trivext(const AlgebraPtr& ext) {
    if (!ext->trivext_origin())
        throw std::invalid_argument("ring was not built as a trivial extension");
    return *ext->trivext_origin();
}

} // namespace

FinModule restrict_to_base(const FinModule& m_over_ext) {
    const auto& origin = require_trivext(m_over_ext.ring());
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < origin.base->dim(); ++i)
        action.push_back(m_over_ext.action(i));
    return FinModule::trusted(origin.base, std::move(action));
}

FinModule inflate(const FinModule& m_over_base, const AlgebraPtr& ext) {
    const auto& origin = require_trivext(ext);
    if (!structurally_equal(*origin.base, *m_over_base.ring()))
        throw std::invalid_argument("inflate: module does not live over the base ring");
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < ext->dim(); ++i) {
        if (i < origin.base->dim())
            action.push_back(m_over_base.action(i));
        else
            action.emplace_back(ext->p(), m_over_base.dim(), m_over_base.dim());
    }
    return FinModule::trusted(ext, std::move(action));
}

FinModule base_change(const FinModule& m_over_base, const AlgebraPtr& ext) {
    const auto& origin = require_trivext(ext);
    if (!structurally_equal(*origin.base, *m_over_base.ring()))
        throw std::invalid_argument("base_change: module does not live over the base ring");
    const std::uint32_t p = ext->p();
    const auto t = tensor_module(m_over_base, restrict_to_base(regular_module(ext)));
    const FpMatrix idm = FpMatrix::identity(p, m_over_base.dim());
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < ext->dim(); ++i) {
        const FpMatrix mul = ext->left_table(i);
        action.push_back(t.to_classes * (kron(idm, mul) * t.lift));
    }
    return FinModule::trusted(ext, std::move(action));
}

FinModule coinduced(const FinModule& m_over_base, const AlgebraPtr& ext) {
    const auto& origin = require_trivext(ext);
    if (!structurally_equal(*origin.base, *m_over_base.ring()))
        throw std::invalid_argument("coinduced: module does not live over the base ring");
    const std::uint32_t p = ext->p();
    const auto hom = hom_module(restrict_to_base(regular_module(ext)), m_over_base);
    const std::size_t h = hom.basis.size();
    const std::size_t cells = m_over_base.dim() * ext->dim();

    FpMatrix basis_cols(p, cells, h);
    for (std::size_t j = 0; j < h; ++j)
        for (std::size_t t2 = 0; t2 < cells; ++t2)
            basis_cols(t2, j) = hom.basis[j].entries()[t2];

    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < ext->dim(); ++i) {
        FpMatrix acted(p, cells, h);
        for (std::size_t j = 0; j < h; ++j) {
            const FpMatrix g = hom.basis[j] * ext->left_table(i); // precompose with mult by e_i
            for (std::size_t t2 = 0; t2 < cells; ++t2)
                acted(t2, j) = g.entries()[t2];
        }
        auto coords = solve_matrix(basis_cols, acted);
        if (!coords)
            throw std::logic_error("coinduced: hom space is not action-closed");
        action.push_back(std::move(*coords));
    }
    return FinModule::trusted(ext, std::move(action));
}

std::size_t min_generators(const FinModule& m) {
    if (m.dim() == 0)
        return 0;
    const IdealSubspace rad = nilradical(m.ring());
    std::vector<FpVec> rows;
    for (std::size_t r = 0; r < rad.basis.rows(); ++r) {
        const FpMatrix act = m.action_of(rad.basis.row(r));
        for (std::size_t c = 0; c < m.dim(); ++c)
            rows.push_back(act.col(c));
    }
    const std::size_t rad_dim = rows.empty()
                                    ? 0
                                    : rank(FpMatrix::from_rows(m.ring()->p(), rows));
    return m.dim() - rad_dim;
}

FinModuleMap free_cover(const FinModule& m) {
    const std::uint32_t p = m.ring()->p();
    const std::size_t d = m.ring()->dim();
    const IdealSubspace rad = nilradical(m.ring());

    // representatives of a basis of M/JM: standard vectors at non-pivot
    // coordinates of JM
    std::vector<FpVec> jm_rows;
    for (std::size_t r = 0; r < rad.basis.rows(); ++r) {
        const FpMatrix act = m.action_of(rad.basis.row(r));
        for (std::size_t c = 0; c < m.dim(); ++c)
            jm_rows.push_back(act.col(c));
    }
    const auto rr = jm_rows.empty() ? rref(FpMatrix(p, 0, m.dim()))
                                    : rref(FpMatrix::from_rows(p, jm_rows));
    std::vector<bool> is_pivot(m.dim(), false);
    for (auto c : rr.pivots)
        is_pivot[c] = true;

    std::vector<std::size_t> reps;
    for (std::size_t c = 0; c < m.dim(); ++c)
        if (!is_pivot[c])
            reps.push_back(c);
    const std::size_t g = reps.size();

    FpMatrix cov(p, m.dim(), g * d);
    for (std::size_t t2 = 0; t2 < g; ++t2) {
        FpVec rep(m.dim(), 0);
        rep[reps[t2]] = 1;
        for (std::size_t i = 0; i < d; ++i) {
            const FpVec img = m.action(i) * rep;
            for (std::size_t r = 0; r < m.dim(); ++r)
                cov(r, t2 * d + i) = img[r];
        }
    }
    return FinModuleMap::trusted(free_module(m.ring(), g), m, std::move(cov));
}

bool is_projective(const FinModule& m) {
    if (m.dim() == 0)
        return true;
    const std::uint32_t p = m.ring()->p();
    const std::size_t d = m.ring()->dim();
    const FinModuleMap cov = free_cover(m);
    const std::size_t fdim = cov.source().dim();
    const std::size_t n = m.dim();

    // unknown section S (fdim x n) with cov S = id and S equivariant
    FpMatrix system = kron(cov.matrix(), FpMatrix::identity(p, n));
    FpVec rhs_vec(FpMatrix::identity(p, n).entries());
    for (std::size_t i = 0; i < d; ++i) {
        const FpMatrix block = kron(FpMatrix::identity(p, fdim), transpose(m.action(i))) -
                               kron(cov.source().action(i), FpMatrix::identity(p, n));
        system = vstack(system, block);
        rhs_vec.resize(rhs_vec.size() + block.rows(), 0);
    }
    return solve(system, rhs_vec).has_value();
}

bool is_injective(const FinModule& m) {
    return is_projective(dual(m));
}

FpMatrix annihilated_by(const FinModule& m, const FpMatrix& ring_subspace_rows) {
    const std::uint32_t p = m.ring()->p();
    if (ring_subspace_rows.rows() == 0)
        return FpMatrix::identity(p, m.dim());
    FpMatrix stacked = m.action_of(ring_subspace_rows.row(0));
    for (std::size_t r = 1; r < ring_subspace_rows.rows(); ++r)
        stacked = vstack(stacked, m.action_of(ring_subspace_rows.row(r)));
    return row_space_basis(kernel_basis(stacked));
}

bool is_injective_baer(const FinModule& m, std::uint64_t subspace_cap) {
    for (const auto& ideal : enumerate_ideals(m.ring(), subspace_cap)) {
        if (ideal.dim() == 0)
            continue;
        const auto hom = hom_module(module_of_ideal(ideal).module, m);
        const std::size_t extendable = m.dim() - annihilated_by(m, ideal.basis).rows();
        if (hom.module.dim() != extendable)
            return false;
    }
    return true;
}

PushoutData pushout(const FinModuleMap& f, const FinModuleMap& g) {
    if (!module_equal(f.source(), g.source()))
        throw std::invalid_argument("pushout: maps must share their source");
    const std::uint32_t p = f.source().ring()->p();
    const FinModule sum = direct_sum(f.target(), g.target());
    FpMatrix graph(p, sum.dim(), f.source().dim());
    for (std::size_t r = 0; r < f.matrix().rows(); ++r)
        for (std::size_t c = 0; c < f.matrix().cols(); ++c)
            graph(r, c) = f.matrix()(r, c);
    for (std::size_t r = 0; r < g.matrix().rows(); ++r)
        for (std::size_t c = 0; c < g.matrix().cols(); ++c)
            graph(f.target().dim() + r, c) = neg_mod(g.matrix()(r, c), p);
    const auto h = FinModuleMap::trusted(f.source(), sum, std::move(graph));
    auto coker = cokernel(h);
    const FpMatrix& pm = coker.projection.matrix();
    auto from_y = FinModuleMap::trusted(f.target(), coker.module,
                                        submatrix(pm, 0, pm.rows(), 0, f.target().dim()));
    auto from_z = FinModuleMap::trusted(
        g.target(), coker.module,
        submatrix(pm, 0, pm.rows(), f.target().dim(), g.target().dim()));
    return PushoutData{std::move(coker.module), std::move(from_y), std::move(from_z)};
}

bool is_exact(const std::vector<FinModuleMap>& chain, bool zero_flanked) {
    if (chain.empty())
        throw std::invalid_argument("is_exact: empty chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!module_equal(chain[i].target(), chain[i + 1].source()))
            throw std::invalid_argument("is_exact: chain is not composable");
        const FpMatrix im = row_space_basis(transpose(chain[i].matrix()));
        const FpMatrix ker = row_space_basis(kernel_basis(chain[i + 1].matrix()));
        if (im != ker)
            return false;
    }
    if (zero_flanked) {
        if (!is_injective_map(chain.front()))
            return false;
        if (!is_surjective_map(chain.back()))
            return false;
    }
    return true;
}

std::vector<std::size_t> radical_series_dims(const FinModule& m) {
    const IdealSubspace rad = nilradical(m.ring());
    std::vector<std::size_t> dims{m.dim()};
    FpMatrix layer = FpMatrix::identity(m.ring()->p(), m.dim()); // rows span J^0 M = M
    for (;;) {
        std::vector<FpVec> rows;
        for (std::size_t r = 0; r < rad.basis.rows(); ++r) {
            const FpMatrix act = m.action_of(rad.basis.row(r));
            for (std::size_t s = 0; s < layer.rows(); ++s)
                rows.push_back(act * layer.row(s));
        }
        layer = rows.empty() ? FpMatrix(m.ring()->p(), 0, m.dim())
                             : row_space_basis(FpMatrix::from_rows(m.ring()->p(), rows));
        if (layer.rows() == 0) {
            dims.push_back(0);
            break;
        }
        if (layer.rows() == dims.back())
            break; // stabilized (radical acts invertibly on the layer; cannot happen here)
        dims.push_back(layer.rows());
    }
    return dims;
}

std::vector<std::size_t> socle_series_dims(const FinModule& m) {
    const IdealSubspace rad = nilradical(m.ring());
    std::vector<std::size_t> dims;
    FpMatrix power = rad.basis;
    for (;;) {
        const std::size_t d = annihilated_by(m, power).rows();
        dims.push_back(d);
        if (d == m.dim())
            break;
        // next radical power
        std::vector<FpVec> rows;
        for (std::size_t r = 0; r < power.rows(); ++r)
            for (std::size_t s = 0; s < rad.basis.rows(); ++s)
                rows.push_back(m.ring()->multiply(power.row(r), rad.basis.row(s)));
        const FpMatrix next = rows.empty() ? FpMatrix(m.ring()->p(), 0, m.ring()->dim())
                                           : row_space_basis(FpMatrix::from_rows(m.ring()->p(), rows));
        if (next == power || next.rows() == 0) {
            // J is nilpotent, so the powers hit 0; ann(0) = M closes the series
            if (next.rows() == 0 && dims.back() != m.dim())
                dims.push_back(m.dim());
            break;
        }
        power = next;
    }
    return dims;
}

// Defined here (rather than algebra.cpp) because it needs the full FinModule
// type for the fiber action.
AlgebraPtr trivial_extension(const AlgebraPtr& a, const FinModule& e) {
    if (!structurally_equal(*a, *e.ring()))
        throw std::invalid_argument("trivial_extension: module does not live over the given ring");
    const std::uint32_t p = a->p();
    const std::size_t da = a->dim(), de = e.dim(), d = da + de;

    std::vector<std::string> names = a->basis_names();
    for (std::size_t i = 0; i < de; ++i)
        names.push_back("e" + std::to_string(i));

    std::vector<FpMatrix> tables;
    for (std::size_t i = 0; i < d; ++i) {
        FpMatrix t(p, d, d);
        if (i < da) {
            for (std::size_t j = 0; j < da; ++j)
                for (std::size_t k = 0; k < da; ++k)
                    t(k, j) = a->c(i, j, k);
            for (std::size_t j = 0; j < de; ++j)
                for (std::size_t k = 0; k < de; ++k)
                    t(da + k, da + j) = e.action(i)(k, j);
        } else {
            // (0,e_i') * (a,0) lands in the fiber; fiber * fiber = 0
            for (std::size_t j = 0; j < da; ++j)
                for (std::size_t k = 0; k < de; ++k)
                    t(da + k, j) = e.action(j)(k, i - da);
        }
        tables.push_back(std::move(t));
    }

    FpVec one(d, 0);
    for (std::size_t i = 0; i < da; ++i)
        one[i] = a->one()[i];

    auto ext = std::make_shared<FpAlgebra>(p, std::move(names), std::move(one), std::move(tables));
    ext->set_trivext_origin(
        FpAlgebra::TrivExtOrigin{a, std::make_shared<const FinModule>(e)});
    return ext;
}

} // namespace fphom
