#ifndef FPHOM_ALGEBRA_HPP
#define FPHOM_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fphom/matrix.hpp"

namespace fphom {

class FinModule; // defined in module.hpp

/// Thrown when an enumeration would exceed its configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown for inputs a decision procedure declines to handle (e.g. the
/// strongly-Gorenstein search on a non-local ring).
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSubspaceCap = 1'000'000;
inline constexpr std::uint64_t kDefaultElementCap = 1u << 20;

/// Finite commutative unital F_p-algebra presented by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k. Internally we keep the left-multiplication
/// tables L_i with L_i(k, j) = c[i][j][k], so mul_matrix(x) = sum_i x_i L_i.
///
/// Instances are immutable and shared through AlgebraPtr; the factory
/// functions below are the supported way to build them.
class FpAlgebra {
public:
    FpAlgebra(std::uint32_t p, std::vector<std::string> basis_names, FpVec one,
              std::vector<FpMatrix> left_tables);

    static FpAlgebra from_tensor(std::uint32_t p, std::vector<std::string> basis_names,
                                 FpVec one, const std::vector<std::uint32_t>& tensor);

    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const FpVec& one() const { return one_; }

    /// Structure constant c[i][j][k].
    std::uint32_t c(std::size_t i, std::size_t j, std::size_t k) const { return tables_[i](k, j); }
    const FpMatrix& left_table(std::size_t i) const { return tables_[i]; }

    FpVec multiply(const FpVec& x, const FpVec& y) const;
    FpVec power(const FpVec& x, std::uint64_t e) const;

    /// The d x d matrix of multiplication-by-x in the chosen basis.
    FpMatrix mul_matrix(const FpVec& x) const;

    FpVec zero() const { return FpVec(dim_, 0); }
    FpVec basis_element(std::size_t i) const;

    /// Present when this algebra was built by trivial_extension; carries the
    /// base ring and the module it was extended by.
    struct TrivExtOrigin {
        std::shared_ptr<const FpAlgebra> base;
        std::shared_ptr<const FinModule> fiber;
    };
    const std::optional<TrivExtOrigin>& trivext_origin() const { return origin_; }
    void set_trivext_origin(TrivExtOrigin origin) { origin_ = std::move(origin); }

private:
    std::uint32_t p_;
    std::size_t dim_;
    std::vector<std::string> names_;
    FpVec one_;
    std::vector<FpMatrix> tables_;
    std::optional<TrivExtOrigin> origin_;
};

using AlgebraPtr = std::shared_ptr<const FpAlgebra>;

/// Commutativity, associativity and unit law; returns human-readable
/// violations instead of throwing.
std::vector<std::string> validate(const FpAlgebra& a);

/// Same presentation: p, dimension, unit and structure constants.
bool structurally_equal(const FpAlgebra& a, const FpAlgebra& b);

// --- constructions ---

AlgebraPtr gf(std::uint32_t p);

/// F_p[x]/(f) for a monic f of degree >= 1 (coefficients low-to-high).
AlgebraPtr poly_quotient(std::uint32_t p, const FpVec& f);

/// The ring A x E with E a square-zero ideal: (a,e)(a',e') = (aa', ae'+a'e).
/// Basis order: the basis of a, then the basis of e.
AlgebraPtr trivial_extension(const AlgebraPtr& a, const FinModule& e);

/// Componentwise product; basis order: left factor, then right factor.
AlgebraPtr product(const AlgebraPtr& a, const AlgebraPtr& b);

// --- elements ---

bool is_unit(const FpAlgebra& a, const FpVec& x);

/// Visits every element of F_p^dim in lexicographic coordinate order.
/// Throws CapExceeded if p^dim > cap.
void for_each_element(const FpAlgebra& a, const std::function<void(const FpVec&)>& fn,
                      std::uint64_t cap = kDefaultElementCap);

/// p^dim if it fits the cap, nullopt otherwise.
std::optional<std::uint64_t> element_count(const FpAlgebra& a, std::uint64_t cap = kDefaultElementCap);

// --- subspaces and ideals ---

/// An F_p-subspace of the algebra closed under multiplication. The basis is
/// kept in reduced row echelon form, so two ideals are equal iff their basis
/// matrices are equal.
struct IdealSubspace {
    AlgebraPtr ambient;
    FpMatrix basis;

    std::size_t dim() const { return basis.rows(); }
    bool contains(const FpVec& x) const;
};

bool operator==(const IdealSubspace& a, const IdealSubspace& b);

/// The smallest ideal containing the given elements.
IdealSubspace ideal_generated_by(const AlgebraPtr& a, const std::vector<FpVec>& gens);

/// Ideal spanned (as a subspace) by the rows; throws if not action-closed.
IdealSubspace ideal_from_subspace(const AlgebraPtr& a, const FpMatrix& rows);

/// {x : x s = 0 for all s in the subspace}; always an ideal.
IdealSubspace annihilator(const AlgebraPtr& a, const FpMatrix& subspace_rows);
IdealSubspace annihilator(const IdealSubspace& s);

/// Nilpotent elements, computed as the kernel of the iterated Frobenius map
/// x -> x^(p^m) with p^m >= dim (an F_p-linear map in characteristic p).
IdealSubspace nilradical(const AlgebraPtr& a);

/// True iff the only idempotents are 0 and 1. Uses element enumeration under
/// the cap and the Frobenius fixed-space count on a/nilradical above it.
bool is_local(const AlgebraPtr& a, std::uint64_t element_cap = kDefaultElementCap);

/// All ideals, each exactly once, by filtering every subspace of F_p^dim for
/// closure under the action. Throws CapExceeded past the subspace cap.
std::vector<IdealSubspace> enumerate_ideals(const AlgebraPtr& a,
                                            std::uint64_t subspace_cap = kDefaultSubspaceCap);

/// Baer criterion for the ring over itself: every homomorphism I -> a from
/// every ideal I is multiplication by a ring element.
bool is_self_injective(const AlgebraPtr& a, std::uint64_t subspace_cap = kDefaultSubspaceCap);

struct QfResult {
    bool qf;
    std::optional<IdealSubspace> witness; ///< ideal with Ann(Ann(I)) != I
};

/// Double-annihilator test Ann(Ann(I)) = I over all ideals.
QfResult is_qf(const AlgebraPtr& a, std::uint64_t subspace_cap = kDefaultSubspaceCap);

struct RingReport {
    bool is_local = false;
    std::optional<std::uint64_t> unit_count;
    std::size_t nilradical_dim = 0;
    std::optional<std::size_t> ideal_count;
    std::optional<bool> self_injective;
    std::optional<bool> qf;
    std::optional<IdealSubspace> qf_witness;
};

RingReport ring_report(const AlgebraPtr& a,
                       std::uint64_t element_cap = kDefaultElementCap,
                       std::uint64_t subspace_cap = kDefaultSubspaceCap);

} // namespace fphom

#endif
