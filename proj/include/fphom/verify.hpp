#ifndef FPHOM_VERIFY_HPP
#define FPHOM_VERIFY_HPP

#include <functional>

#include "fphom/gorenstein.hpp"
#include "fphom/speclang.hpp"

namespace fphom {

/// Outcome of one verification case.
struct CaseResult {
    enum class Status { Pass, Fail, Skipped };

    std::string case_id;
    Status status = Status::Pass;
    std::string detail; ///< failure payloads (serialized objects) or skip reason
    std::string repro;  ///< command line that reruns the computation
    double seconds = 0.0;
};

struct VerifyCase {
    std::string id;
    std::string description;
    std::function<void(const Caps&, CaseResult&)> body;
};

/// The built-in catalogue of checked results: Gorenstein global dimension of
/// small trivial extensions, quasi-Frobenius characterizations, resolution
/// arithmetic, transfer statements, the homological property sweep, and the
/// interchange round trips.
const std::vector<VerifyCase>& verify_cases();

/// Runs one case with timing; exceptions become failures, CapExceeded
/// becomes a skip with its reason.
CaseResult run_case(const VerifyCase& c, const Caps& caps);

// --- corpus of small test rings and module sweeps (shared with the suite) ---

/// A corpus ring together with algebra generators and expressions of each
/// basis element as a polynomial in those generators; this is what lets the
/// module sweep enumerate every module structure of a given dimension.
struct CorpusRing {
    std::string expr; ///< speclang expression for the ring
    AlgebraPtr ring;
    std::size_t num_gens = 0;
    /// basis_exprs[i]: the i-th basis element as sum of coeff * monomial
    /// (a monomial is a list of generator indices; empty means 1).
    std::vector<std::vector<std::pair<std::uint32_t, std::vector<std::size_t>>>> basis_exprs;
};

const std::vector<CorpusRing>& corpus_rings();

/// Every module structure on F_p^dim over the presented ring, by enumerating
/// generator images and validating the module laws.
std::vector<FinModule> enumerate_modules(const CorpusRing& cr, std::size_t dim);

/// One representative per isomorphism class (invariant buckets, then
/// exhaustive isomorphism tests).
std::vector<FinModule> iso_class_representatives(const std::vector<FinModule>& mods,
                                                 std::uint64_t search_cap = 1u << 16);

} // namespace fphom

#endif
