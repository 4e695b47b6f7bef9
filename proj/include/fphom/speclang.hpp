#ifndef FPHOM_SPECLANG_HPP
#define FPHOM_SPECLANG_HPP

#include <memory>
#include <string>

#include "fphom/module.hpp"

namespace fphom {

/// Syntax error with a byte offset into the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct ModuleExpr;
using ModuleExprPtr = std::shared_ptr<const ModuleExpr>;
struct RingExpr;
using RingExprPtr = std::shared_ptr<const RingExpr>;

/// module := free(INT) | regular | quotfree(INT, [row, ...]) | dual(module)
///         | sum(module, module)
/// A relation row is a tuple of residues, one block of ring coordinates per
/// free generator (nested per-generator tuples are accepted and flattened).
struct ModuleExpr {
    enum class Kind { Free, Regular, QuotFree, Dual, Sum };

    Kind kind;
    std::size_t count = 0;       ///< Free(n) / QuotFree(n, ...)
    std::vector<FpVec> rows;     ///< QuotFree relation rows, flattened
    ModuleExprPtr left, right;   ///< Dual(left) / Sum(left, right)

    static ModuleExprPtr free(std::size_t n);
    static ModuleExprPtr regular();
    static ModuleExprPtr quotfree(std::size_t n, std::vector<FpVec> rows);
    static ModuleExprPtr dual(ModuleExprPtr inner);
    static ModuleExprPtr sum(ModuleExprPtr l, ModuleExprPtr r);
};

/// ring := gf(INT) | gf(INT, POLY) | quot(INT, POLY) | trivext(ring, module)
///       | prod(ring, ring)
/// POLY is a coefficient list, low degree first: x^2 is [0,0,1].
struct RingExpr {
    enum class Kind { Gf, GfPoly, Quot, TrivExt, Prod };

    Kind kind;
    std::uint32_t p = 0;
    FpVec poly;
    RingExprPtr left, right;
    ModuleExprPtr fiber;

    static RingExprPtr gf(std::uint32_t p);
    static RingExprPtr gf_poly(std::uint32_t p, FpVec poly);
    static RingExprPtr quot(std::uint32_t p, FpVec poly);
    static RingExprPtr trivext(RingExprPtr base, ModuleExprPtr fiber);
    static RingExprPtr prod(RingExprPtr l, RingExprPtr r);
};

bool operator==(const ModuleExpr& a, const ModuleExpr& b);
bool operator==(const RingExpr& a, const RingExpr& b);

/// Whitespace-insensitive, case-insensitive keywords; throws ParseError.
RingExprPtr parse_ring(const std::string& text);
ModuleExprPtr parse_module(const std::string& text);

/// Canonical rendering; parse(print(e)) reproduces e exactly.
std::string print_expr(const RingExpr& e);
std::string print_expr(const ModuleExpr& e);

/// Builds the concrete algebra. gf(p, f) additionally requires f irreducible
/// (exhaustive factor search, degree at most 8).
AlgebraPtr elaborate_ring(const RingExpr& e);
FinModule elaborate_module(const ModuleExpr& e, const AlgebraPtr& ring);

// --- structure-constant interchange format ---
//
// ring:   {p:2, dim:1, names:["1"], one:[1], mul:[[[1]]]}
// module: {dim:1, action:[[[1]],[[0]]]}   (one dim x dim matrix per ring
//                                          basis element, rows listed)
// map:    {rows:2, cols:1, entries:[0,1]} (row-major)
//
// Writers emit exactly this field order; readers accept arbitrary whitespace
// and optionally quoted keys, and re-validate every invariant on load.

std::string serialize_ring(const FpAlgebra& a);
std::string serialize_module(const FinModule& m);
std::string serialize_map(const FinModuleMap& f);

AlgebraPtr deserialize_ring(const std::string& text);
FinModule deserialize_module(const std::string& text, const AlgebraPtr& ring);
FinModuleMap deserialize_map(const std::string& text, const FinModule& source,
                             const FinModule& target);

} // namespace fphom

#endif
