#ifndef FPHOM_FP_HPP
#define FPHOM_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fphom {

/// Primality by trial division. Moduli here are small (desk scale), so this
/// is never a bottleneck.
bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument unless p is prime and fits the residue type.
void require_prime(std::uint64_t p);

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Inverse of a nonzero residue mod a prime. Throws std::domain_error on 0.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// A single residue tagged with its prime modulus. Handy at API boundaries;
/// the matrix kernels below work on raw residues for speed.
class FpScalar {
public:
    FpScalar(std::uint32_t value, std::uint32_t p);

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return p_; }

    FpScalar operator+(FpScalar rhs) const { return with(add_mod(value_, same(rhs), p_)); }
    FpScalar operator-(FpScalar rhs) const { return with(sub_mod(value_, same(rhs), p_)); }
    FpScalar operator*(FpScalar rhs) const { return with(mul_mod(value_, same(rhs), p_)); }
    FpScalar operator/(FpScalar rhs) const { return with(mul_mod(value_, inv_mod(same(rhs), p_), p_)); }
    FpScalar operator-() const { return with(neg_mod(value_, p_)); }
    FpScalar inverse() const { return with(inv_mod(value_, p_)); }

    bool operator==(const FpScalar&) const = default;

private:
    FpScalar with(std::uint32_t v) const { return FpScalar(v, p_); }
    std::uint32_t same(FpScalar rhs) const;

    std::uint32_t value_;
    std::uint32_t p_;
};

/// Coordinate column over F_p, stored as raw residues.
using FpVec = std::vector<std::uint32_t>;

// --- dense polynomials over F_p, low-degree-first coefficient lists ---

/// Drops trailing zeros so degree(poly) == poly.size()-1 (empty == zero).
FpVec poly_trim(FpVec f);

FpVec poly_mul(const FpVec& f, const FpVec& g, std::uint32_t p);

/// Remainder of f modulo a monic divisor.
FpVec poly_mod(FpVec f, const FpVec& monic, std::uint32_t p);

bool poly_is_monic(const FpVec& f);

/// Exhaustive factor search; intended for degree <= 8.
bool poly_is_irreducible(const FpVec& monic, std::uint32_t p);

} // namespace fphom

#endif
