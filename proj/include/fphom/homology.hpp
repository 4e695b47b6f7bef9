#ifndef FPHOM_HOMOLOGY_HPP
#define FPHOM_HOMOLOGY_HPP

#include "fphom/module.hpp"

namespace fphom {

/// Chain of minimal free covers: covers[k] maps F_k onto the (k-1)-st syzygy
/// (onto the module itself for k = 0), syzygies[k] is its kernel inside F_k,
/// and betti[k] is the free rank of F_k. Stops early when a syzygy is zero.
struct Resolution {
    FinModule module;
    std::vector<FinModuleMap> covers;
    std::vector<SubmoduleData> syzygies;
    std::vector<std::size_t> betti;
};

Resolution resolution(const FinModule& m, std::size_t length);

/// The boundary F_k -> F_{k-1} (inclusion of the syzygy after the cover);
/// defined for 1 <= k < covers.size().
FinModuleMap boundary(const Resolution& r, std::size_t k);

std::vector<std::size_t> betti_numbers(const FinModule& m, std::size_t depth);

/// dim_F_p Ext^i(M, N), as the i-th cohomology of Hom(F_*, N).
std::size_t ext_dim(const FinModule& m, const FinModule& n, std::size_t i);

/// dim_F_p Tor_i(M, N), as the i-th homology of F_* (x) N.
std::size_t tor_dim(const FinModule& m, const FinModule& n, std::size_t i);

/// All Ext^i for 0 <= i <= max_i from one resolution of the first argument.
/// The resolution must have been built to depth at least max_i + 1.
std::vector<std::size_t> ext_dims(const Resolution& res, const FinModule& n, std::size_t max_i);
std::vector<std::size_t> ext_dims(const FinModule& m, const FinModule& n, std::size_t max_i);

std::vector<std::size_t> tor_dims(const Resolution& res, const FinModule& n, std::size_t max_i);
std::vector<std::size_t> tor_dims(const FinModule& m, const FinModule& n, std::size_t max_i);

struct DimBound {
    bool finite;
    std::size_t value; ///< meaningful only when finite

    bool operator==(const DimBound&) const = default;
};

inline DimBound finite_dim(std::size_t v) { return DimBound{true, v}; }
inline DimBound exceeds_bound() { return DimBound{false, 0}; }

/// First syzygy index at which the syzygy is projective, up to the bound.
DimBound pd_bounded(const FinModule& m, std::size_t bound);

/// Injective dimension through base-field duality.
DimBound id_bounded(const FinModule& m, std::size_t bound);

/// Flat dimension; equals projective dimension here (finite rings are
/// perfect, so flat modules are projective).
DimBound fd_bounded(const FinModule& m, std::size_t bound);

enum class Ternary { Yes, No, Undecided };

struct IsoResult {
    Ternary verdict;
    std::optional<FinModuleMap> witness; ///< present when verdict == Yes
};

/// Invariant screen (dimensions, radical/socle series, Betti prefix), then an
/// exhaustive scan of the hom space for an invertible element. Never wrong:
/// past the search cap the verdict is Undecided.
IsoResult is_isomorphic(const FinModule& m, const FinModule& n,
                        std::uint64_t search_cap = 1u << 16);

} // namespace fphom

#endif
