#include "fphom/homology.hpp"

namespace fphom {

Resolution resolution(const FinModule& m, std::size_t length) {
    Resolution res{m, {}, {}, {}};
    FinModule current = m;
    for (std::size_t k = 0; k <= length; ++k) {
        FinModuleMap cover = free_cover(current);
        res.betti.push_back(current.ring()->dim() == 0
                                ? 0
                                : cover.source().dim() / current.ring()->dim());
        auto ker = kernel(cover);
        res.covers.push_back(std::move(cover));
        const bool done = ker.module.dim() == 0;
        FinModule next = ker.module;
        res.syzygies.push_back(SubmoduleData{std::move(ker.module), std::move(ker.inclusion)});
        if (done)
            break;
        current = std::move(next);
    }
    return res;
}

FinModuleMap boundary(const Resolution& r, std::size_t k) {
    if (k == 0 || k >= r.covers.size())
        throw std::invalid_argument("boundary: index out of range");
    return compose(r.syzygies[k - 1].inclusion, r.covers[k]);
}

std::vector<std::size_t> betti_numbers(const FinModule& m, std::size_t depth) {
    return resolution(m, depth).betti;
}

namespace {

/// Ring entries of an equivariant map between free modules: the (t, s) block
/// of the matrix is multiplication by entries[t][s].
std::vector<std::vector<FpVec>> ring_entries(const FpMatrix& matrix, const AlgebraPtr& ring) {
    const std::size_t d = ring->dim();
    const std::size_t g_to = matrix.rows() / d;
    const std::size_t g_from = matrix.cols() / d;
    std::vector<std::vector<FpVec>> entries(g_to, std::vector<FpVec>(g_from));
    for (std::size_t t = 0; t < g_to; ++t)
        for (std::size_t s = 0; s < g_from; ++s)
            entries[t][s] = submatrix(matrix, t * d, d, s * d, d) * ring->one();
    return entries;
}

void place_block(FpMatrix& out, const FinModule& n, const FpVec& r, std::size_t br, std::size_t bc) {
    const FpMatrix act = n.action_of(r);
    const std::size_t nd = n.dim();
    for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t j = 0; j < nd; ++j)
            out(br * nd + i, bc * nd + j) = act(i, j);
}

/// Induced map Hom(F_{k-1}, N) -> Hom(F_k, N), i.e. N^{g_{k-1}} -> N^{g_k}.
FpMatrix hom_induced(const Resolution& res, std::size_t k, const FinModule& n) {
    const auto entries = ring_entries(boundary(res, k).matrix(), res.module.ring());
    const std::size_t g_prev = entries.size();                           // g_{k-1}
    const std::size_t g_k = entries.empty() ? 0 : entries[0].size();     // g_k
    FpMatrix out(n.ring()->p(), g_k * n.dim(), g_prev * n.dim());
    for (std::size_t t = 0; t < g_prev; ++t)
        for (std::size_t s = 0; s < g_k; ++s)
            place_block(out, n, entries[t][s], s, t);
    return out;
}

/// Induced map F_k (x) N -> F_{k-1} (x) N, i.e. N^{g_k} -> N^{g_{k-1}}.
FpMatrix tensor_induced(const Resolution& res, std::size_t k, const FinModule& n) {
    const auto entries = ring_entries(boundary(res, k).matrix(), res.module.ring());
    const std::size_t g_prev = entries.size();
    const std::size_t g_k = entries.empty() ? 0 : entries[0].size();
    FpMatrix out(n.ring()->p(), g_prev * n.dim(), g_k * n.dim());
    for (std::size_t t = 0; t < g_prev; ++t)
        for (std::size_t s = 0; s < g_k; ++s)
            place_block(out, n, entries[t][s], t, s);
    return out;
}

} // namespace

std::vector<std::size_t> ext_dims(const Resolution& res, const FinModule& n, std::size_t max_i) {
    if (!structurally_equal(*res.module.ring(), *n.ring()))
        throw std::invalid_argument("ext: modules live over different rings");
    const bool complete = !res.syzygies.empty() && res.syzygies.back().module.dim() == 0;
    if (!complete && res.betti.size() < max_i + 2)
        throw std::invalid_argument("ext: resolution too shallow for the requested degree");
    const std::size_t levels = res.betti.size();
    const std::size_t nd = n.dim();

    // induced-map ranks, reused between adjacent cohomology degrees
    std::vector<std::size_t> ranks(levels, 0); // ranks[k] = rank of delta_k, k >= 1
    for (std::size_t k = 1; k < levels && k <= max_i + 1; ++k)
        ranks[k] = rank(hom_induced(res, k, n));

    std::vector<std::size_t> out(max_i + 1, 0);
    for (std::size_t i = 0; i <= max_i; ++i) {
        if (i >= levels)
            continue;
        std::size_t cocycles = res.betti[i] * nd;
        if (i + 1 < levels)
            cocycles -= ranks[i + 1];
        out[i] = cocycles - (i > 0 ? ranks[i] : 0);
    }
    return out;
}

std::vector<std::size_t> ext_dims(const FinModule& m, const FinModule& n, std::size_t max_i) {
    return ext_dims(resolution(m, max_i + 1), n, max_i);
}

std::size_t ext_dim(const FinModule& m, const FinModule& n, std::size_t i) {
    return ext_dims(m, n, i)[i];
}

std::vector<std::size_t> tor_dims(const Resolution& res, const FinModule& n, std::size_t max_i) {
    if (!structurally_equal(*res.module.ring(), *n.ring()))
        throw std::invalid_argument("tor: modules live over different rings");
    const bool complete = !res.syzygies.empty() && res.syzygies.back().module.dim() == 0;
    if (!complete && res.betti.size() < max_i + 2)
        throw std::invalid_argument("tor: resolution too shallow for the requested degree");
    const std::size_t levels = res.betti.size();
    const std::size_t nd = n.dim();

    std::vector<std::size_t> ranks(levels, 0); // ranks[k] = rank of D_k, k >= 1
    for (std::size_t k = 1; k < levels && k <= max_i + 1; ++k)
        ranks[k] = rank(tensor_induced(res, k, n));

    std::vector<std::size_t> out(max_i + 1, 0);
    for (std::size_t i = 0; i <= max_i; ++i) {
        if (i >= levels)
            continue;
        std::size_t cycles = res.betti[i] * nd;
        if (i > 0)
            cycles -= ranks[i];
        out[i] = cycles - (i + 1 < levels ? ranks[i + 1] : 0);
    }
    return out;
}

std::vector<std::size_t> tor_dims(const FinModule& m, const FinModule& n, std::size_t max_i) {
    return tor_dims(resolution(m, max_i + 1), n, max_i);
}

std::size_t tor_dim(const FinModule& m, const FinModule& n, std::size_t i) {
    return tor_dims(m, n, i)[i];
}

DimBound pd_bounded(const FinModule& m, std::size_t bound) {
    if (is_projective(m))
        return finite_dim(0);
    const auto res = resolution(m, bound);
    for (std::size_t k = 1; k <= bound && k <= res.syzygies.size(); ++k) {
        if (is_projective(res.syzygies[k - 1].module))
            return finite_dim(k);
    }
    return exceeds_bound();
}

DimBound id_bounded(const FinModule& m, std::size_t bound) {
    return pd_bounded(dual(m), bound);
}

DimBound fd_bounded(const FinModule& m, std::size_t bound) {
    return pd_bounded(m, bound);
}

IsoResult is_isomorphic(const FinModule& m, const FinModule& n, std::uint64_t search_cap) {
    if (module_equal(m, n))
        return IsoResult{Ternary::Yes, identity_map(m)};
    if (!structurally_equal(*m.ring(), *n.ring()) || m.dim() != n.dim())
        return IsoResult{Ternary::No, std::nullopt};
    if (m.dim() == 0)
        return IsoResult{Ternary::Yes, zero_map(m, n)};

    // cheap isomorphism invariants first
    if (radical_series_dims(m) != radical_series_dims(n))
        return IsoResult{Ternary::No, std::nullopt};
    if (socle_series_dims(m) != socle_series_dims(n))
        return IsoResult{Ternary::No, std::nullopt};
    if (betti_numbers(m, 2) != betti_numbers(n, 2))
        return IsoResult{Ternary::No, std::nullopt};

    const auto hom = hom_module(m, n);
    const std::size_t h = hom.module.dim();
    if (h == 0)
        return IsoResult{Ternary::No, std::nullopt};

    const std::uint32_t p = m.ring()->p();
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < h; ++j) {
        total *= p;
        if (total > search_cap)
            return IsoResult{Ternary::Undecided, std::nullopt};
    }

    FpVec coords(h, 0);
    for (;;) {
        std::size_t j = 0;
        while (j < h && ++coords[j] == p)
            coords[j++] = 0;
        if (j == h)
            break;
        const FpMatrix f = hom.matrix_of(coords);
        if (rank(f) == m.dim())
            return IsoResult{Ternary::Yes, FinModuleMap::trusted(m, n, f)};
    }
    return IsoResult{Ternary::No, std::nullopt};
}

} // namespace fphom
