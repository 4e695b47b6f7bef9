#include "fphom/fp.hpp"

#include <string>

namespace fphom {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

void require_prime(std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 16))
        throw std::invalid_argument("modulus too large: " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0)
        throw std::domain_error("division by zero in F_p");
    // p is prime, so a^(p-2) inverts a
    return pow_mod(a, p - 2, p);
}

FpScalar::FpScalar(std::uint32_t value, std::uint32_t p) : value_(value), p_(p) {
    require_prime(p);
    value_ %= p_;
}

std::uint32_t FpScalar::same(FpScalar rhs) const {
    if (rhs.p_ != p_)
        throw std::invalid_argument("FpScalar modulus mismatch");
    return rhs.value_;
}

FpVec poly_trim(FpVec f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
    return f;
}

FpVec poly_mul(const FpVec& f, const FpVec& g, std::uint32_t p) {
    if (f.empty() || g.empty())
        return {};
    FpVec r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = add_mod(r[i + j], mul_mod(f[i], g[j], p), p);
    }
    return poly_trim(std::move(r));
}

FpVec poly_mod(FpVec f, const FpVec& monic, std::uint32_t p) {
    if (!poly_is_monic(monic))
        throw std::invalid_argument("poly_mod: divisor must be monic");
    f = poly_trim(std::move(f));
    const std::size_t d = monic.size() - 1;
    while (f.size() > d) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - d;
        if (lead != 0)
            for (std::size_t i = 0; i < d; ++i)
                f[shift + i] = sub_mod(f[shift + i], mul_mod(lead, monic[i], p), p);
        f.pop_back();
        f = poly_trim(std::move(f));
    }
    return f;
}

bool poly_is_monic(const FpVec& f) {
    return !f.empty() && f.back() == 1;
}

namespace {

// Odometer over all monic polynomials of the given degree.
bool next_monic(FpVec& f, std::uint32_t p) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        if (++f[i] < p)
            return true;
        f[i] = 0;
    }
    return false;
}

} // namespace

bool poly_is_irreducible(const FpVec& monic, std::uint32_t p) {
    if (!poly_is_monic(monic))
        throw std::invalid_argument("irreducibility test expects a monic polynomial");
    const std::size_t deg = monic.size() - 1;
    if (deg == 0)
        return false;
    if (deg == 1)
        return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        FpVec g(d + 1, 0);
        g.back() = 1;
        do {
            if (poly_trim(poly_mod(monic, g, p)).empty())
                return false;
        } while (next_monic(g, p));
    }
    return true;
}

} // namespace fphom
