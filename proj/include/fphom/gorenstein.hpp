#ifndef FPHOM_GORENSTEIN_HPP
#define FPHOM_GORENSTEIN_HPP

#include "fphom/homology.hpp"

namespace fphom {

/// Enumeration and search budgets shared by the deciders.
struct Caps {
    std::uint64_t element_cap = kDefaultElementCap;
    std::uint64_t subspace_cap = kDefaultSubspaceCap;
    std::uint64_t search_cap = 1u << 16;
    std::size_t depth = 10;
};

/// Certificate that M sits in an exact sequence 0 -> M -> F -> M -> 0 with a
/// free middle and Ext^1(M, R) = 0. Everything here re-checks independently
/// of the search that produced it.
struct SgpWitness {
    FinModuleMap embedding;    ///< M -> F, F free of rank 2 dim(M)/dim(R)
    FinModuleMap cokernel_iso; ///< coker(embedding) -> M, invertible
    std::size_t ext1_dim;      ///< dim Ext^1(M, R); must be 0
};

bool revalidate(const SgpWitness& w);

struct SgpVerdict {
    Ternary verdict;
    std::optional<SgpWitness> witness; ///< present when verdict == Yes
    std::string reason;                ///< for No and Undecided
};

/// Strongly Gorenstein projective test over a local ring (projective = free
/// there, so the middle of a witness sequence is a free module of forced
/// rank). Throws Unsupported on non-local rings.
SgpVerdict is_sgp(const FinModule& m, const Caps& caps = {});

/// Strongly Gorenstein injective via base-field duality: the verdict of
/// is_sgp(dual(m)); a witness, when present, certifies the dual module.
SgpVerdict is_sgi(const FinModule& m, const Caps& caps = {});

/// Least 1 <= i <= bound with Ext^i(M, R) != 0. A returned index certifies
/// that M is not Gorenstein projective; nullopt ("none found") proves
/// nothing in the other direction.
std::optional<std::size_t> gp_obstruction(const FinModule& m, std::size_t bound);

struct GgldimVerdict {
    enum class Kind { Zero, Infinite, Unknown };

    Kind kind;
    bool local = false;
    std::optional<IdealSubspace> witness_ideal; ///< Infinite: Ann(Ann(I)) != I
    /// Unknown: per-ideal obstruction evidence for the cyclic modules R/I.
    std::vector<std::pair<IdealSubspace, std::optional<std::size_t>>> evidence;
};

/// Gorenstein global dimension classifier for finite commutative rings:
/// Zero iff quasi-Frobenius; Infinite for local non-quasi-Frobenius rings
/// (finite rings are perfect, so the local dichotomy applies); Unknown with
/// obstruction evidence otherwise.
GgldimVerdict classify_ggldim(const AlgebraPtr& r, const Caps& caps = {});

bool revalidate(const GgldimVerdict& v, const AlgebraPtr& r, const Caps& caps = {});

const char* to_string(GgldimVerdict::Kind k);
const char* to_string(Ternary t);

struct TransferReport {
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::string left_side;
    std::string right_side;
    /// Evaluated only when every hypothesis passed and both sides are
    /// decided; a false value would contradict the theorem being checked.
    std::optional<bool> implication_holds;
    std::string note;

    bool hypotheses_passed() const;
};

/// pd_A(E) finite, M strongly Gorenstein projective over A
///   => M (x)_A R strongly Gorenstein projective over R = A |x E.
TransferReport verify_sgp_transfer_forward(const AlgebraPtr& a, const FinModule& e,
                                           const FinModule& m, const Caps& caps = {});

/// E flat over A, M (x)_A R strongly Gorenstein projective over R
///   => M strongly Gorenstein projective over A.
TransferReport verify_sgp_transfer_backward(const AlgebraPtr& a, const FinModule& e,
                                            const FinModule& m, const Caps& caps = {});

/// Ext_A^p(R, M) = 0 for p >= 1 and fd_A(R) finite, M strongly Gorenstein
/// injective over A => Hom_A(R, M) strongly Gorenstein injective over R.
TransferReport verify_sgi_transfer(const AlgebraPtr& a, const FinModule& e, const FinModule& m,
                                   const Caps& caps = {});

/// Tor_A^k(M, R) = 0 for k >= 1 => Gpd_A(M) <= Gpd_R(M (x)_A R), verified
/// through decidable proxies (classifier on R, obstruction on A).
TransferReport verify_gpd_inequality(const AlgebraPtr& a, const FinModule& e, const FinModule& m,
                                     const Caps& caps = {});

/// G-gldim(A) <= G-gldim(R) + fd_A(E), checked in the decidable regimes.
TransferReport verify_ggldim_inequality(const AlgebraPtr& a, const FinModule& e,
                                        const Caps& caps = {});

} // namespace fphom

#endif
