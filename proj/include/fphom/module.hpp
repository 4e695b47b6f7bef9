#ifndef FPHOM_MODULE_HPP
#define FPHOM_MODULE_HPP

#include <vector>

#include "fphom/algebra.hpp"

namespace fphom {

/// Finitely generated module over an FpAlgebra, given by one action matrix
/// per ring basis element. Use checked() for untrusted data; the library's
/// own constructions go through trusted() since they are valid by
/// construction (and the test suite re-validates them).
class FinModule {
public:
    static FinModule checked(AlgebraPtr ring, std::vector<FpMatrix> action);
    static FinModule trusted(AlgebraPtr ring, std::vector<FpMatrix> action);

    const AlgebraPtr& ring() const { return ring_; }
    std::size_t dim() const { return dim_; }
    const FpMatrix& action(std::size_t i) const { return action_[i]; }

    /// Matrix of the action of an arbitrary ring element.
    FpMatrix action_of(const FpVec& r) const;

private:
    FinModule(AlgebraPtr ring, std::vector<FpMatrix> action);

    AlgebraPtr ring_;
    std::size_t dim_;
    std::vector<FpMatrix> action_;
};

/// Unit and multiplicativity laws; empty result means valid.
std::vector<std::string> validate(const FinModule& m);

/// Same ring presentation, same dimension, same action matrices.
bool module_equal(const FinModule& a, const FinModule& b);

class FinModuleMap {
public:
    static FinModuleMap checked(FinModule source, FinModule target, FpMatrix matrix);
    static FinModuleMap trusted(FinModule source, FinModule target, FpMatrix matrix);

    const FinModule& source() const { return source_; }
    const FinModule& target() const { return target_; }
    const FpMatrix& matrix() const { return matrix_; }

private:
    FinModuleMap(FinModule source, FinModule target, FpMatrix matrix);

    FinModule source_, target_;
    FpMatrix matrix_;
};

std::vector<std::string> validate(const FinModuleMap& f);

FinModuleMap identity_map(const FinModule& m);
FinModuleMap zero_map(const FinModule& source, const FinModule& target);
FinModuleMap compose(const FinModuleMap& g, const FinModuleMap& f); ///< g after f
FinModuleMap operator+(const FinModuleMap& f, const FinModuleMap& g);
FinModuleMap operator-(const FinModuleMap& f, const FinModuleMap& g);

bool is_injective_map(const FinModuleMap& f);
bool is_surjective_map(const FinModuleMap& f);

// --- basic constructions ---

FinModule zero_module(const AlgebraPtr& a);
FinModule regular_module(const AlgebraPtr& a);

/// R^k with copy-major coordinates: index t*dim(R)+i is coordinate i of copy t.
FinModule free_module(const AlgebraPtr& a, std::size_t k);

FinModule direct_sum(const FinModule& m, const FinModule& n);

struct SubmoduleData {
    FinModule module;
    FinModuleMap inclusion;
};

/// The submodule spanned by the rows (throws if the span is not
/// action-closed); basis canonicalized by row reduction.
SubmoduleData submodule(const FinModule& parent, const FpMatrix& rows);

struct QuotientData {
    FinModule module;
    FinModuleMap projection;
    FpMatrix lift; ///< linear section of the projection (coset representatives)
};

QuotientData quotient_by_subspace(const FinModule& parent, const FpMatrix& rows);

struct KernelData {
    FinModule module;
    FinModuleMap inclusion;
};

KernelData kernel(const FinModuleMap& f);

struct CokernelData {
    FinModule module;
    FinModuleMap projection;
    FpMatrix lift;
};

CokernelData cokernel(const FinModuleMap& f);

struct ImageData {
    FinModule module;
    FinModuleMap inclusion;      ///< image -> target
    FinModuleMap corestriction;  ///< source -> image; inclusion o corestriction = f
};

ImageData image(const FinModuleMap& f);

/// An ideal viewed as a module, with its inclusion into the regular module.
SubmoduleData module_of_ideal(const IdealSubspace& ideal);

/// R/I with the canonical projection data.
QuotientData cyclic_module(const IdealSubspace& ideal);

// --- hom, tensor, dual ---

/// Hom_A(M, N): underlying space solves the equivariance equations. basis[j]
/// is the matrix of the j-th basis homomorphism, so elements are coordinate
/// columns which matrix_of/apply_hom turn back into concrete maps.
struct HomModule {
    FinModule module;
    std::vector<FpMatrix> basis;
    std::size_t source_dim;
    std::size_t target_dim;

    FpMatrix matrix_of(const FpVec& coords) const;
    FpVec apply_hom(const FpVec& coords, const FpVec& x) const;
};

HomModule hom_module(const FinModule& m, const FinModule& n);

/// M tensor N over the ring: the F_p tensor space modulo the balancing
/// relations (a m) x n - m x (a n). to_classes/lift convert between the big
/// space (a-major pure-tensor coordinates) and the quotient.
struct TensorModule {
    FinModule module;
    FpMatrix to_classes;
    FpMatrix lift;

    FpVec pure(const FpVec& x, const FpVec& y) const;
};

TensorModule tensor_module(const FinModule& m, const FinModule& n);

/// Base-field dual with action (a f)(x) = f(a x); contravariant on maps.
FinModule dual(const FinModule& m);
FinModuleMap dual_map(const FinModuleMap& f);

// --- change of rings along A -> R = A(+)E and back ---

/// View a module over a trivial extension R as an A-module along a -> (a,0).
FinModule restrict_to_base(const FinModule& m_over_ext);

/// View an A-module as an R-module along the projection (a,e) -> a.
FinModule inflate(const FinModule& m_over_base, const AlgebraPtr& ext);

/// M tensor_A R as an R-module.
FinModule base_change(const FinModule& m_over_base, const AlgebraPtr& ext);

/// Hom_A(R, M) as an R-module, (r f)(x) = f(r x).
FinModule coinduced(const FinModule& m_over_base, const AlgebraPtr& ext);

// --- structure queries ---

/// Minimal generator count dim(M / JM), J the nilradical (= Jacobson radical
/// for these rings).
std::size_t min_generators(const FinModule& m);

/// Surjection R^g -> M lifting a basis of M/JM.
FinModuleMap free_cover(const FinModule& m);

/// True iff the free cover splits by an equivariant section.
bool is_projective(const FinModule& m);

/// Primary route: projectivity of the base-field dual.
bool is_injective(const FinModule& m);

/// Cross-check route: every hom from every ideal extends to the ring.
bool is_injective_baer(const FinModule& m, std::uint64_t subspace_cap = kDefaultSubspaceCap);

struct PushoutData {
    FinModule module;
    FinModuleMap from_y;
    FinModuleMap from_z;
};

/// Pushout of f: X -> Y and g: X -> Z, the cokernel of (f, -g): X -> Y + Z.
PushoutData pushout(const FinModuleMap& f, const FinModuleMap& g);

/// Image-equals-kernel at every interior node of a composable chain; with
/// zero_flanked, additionally injective on the left and surjective on the
/// right.
bool is_exact(const std::vector<FinModuleMap>& chain, bool zero_flanked = false);

/// Dimensions of M >= JM >= J^2 M >= ... (stops at 0 or stabilization).
std::vector<std::size_t> radical_series_dims(const FinModule& m);

/// Dimensions of ann_M(J) <= ann_M(J^2) <= ...
std::vector<std::size_t> socle_series_dims(const FinModule& m);

/// {x in M : s x = 0 for all s in the subspace}, as a dimension-friendly
/// basis of rows.
FpMatrix annihilated_by(const FinModule& m, const FpMatrix& ring_subspace_rows);

} // namespace fphom

#endif
