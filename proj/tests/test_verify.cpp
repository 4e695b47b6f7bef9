#include <doctest.h>

#include <set>

#include "fphom/verify.hpp"

using namespace fphom;

TEST_CASE("corpus rings are valid and distinctly presented") {
    const auto& rings = corpus_rings();
    CHECK(rings.size() == 9);
    std::set<std::string> ids;
    for (const auto& cr : rings) {
        CHECK(validate(*cr.ring).empty());
        CHECK(cr.basis_exprs.size() == cr.ring->dim());
        CHECK(*parse_ring(cr.expr) == *parse_ring(print_expr(*parse_ring(cr.expr))));
        ids.insert(cr.expr);
    }
    CHECK(ids.size() == rings.size());
}

TEST_CASE("module sweep counts") {
    // counts of module structures on F_2^d, frozen from the enumeration and
    // cross-checked against classification facts below
    const auto& rings = corpus_rings();
    const auto counts = [&](const std::string& expr, std::size_t dim) {
        for (const auto& cr : rings)
            if (cr.expr == expr)
                return enumerate_modules(cr, dim).size();
        FAIL("ring not found");
        return std::size_t(0);
    };

    // a field: exactly one module structure per dimension
    for (std::size_t d = 0; d <= 3; ++d)
        CHECK(counts("gf(2)", d) == 1);

    // F_4-modules have even F_2-dimension
    CHECK(counts("gf(2, [1,1,1])", 1) == 0);
    CHECK(counts("gf(2, [1,1,1])", 2) == 2);
    CHECK(counts("gf(2, [1,1,1])", 3) == 0);

    // F_2[x]/(x^2) and F_2 |x F_2 are isomorphic rings: identical counts.
    // dim 2: the zero action plus the three rank-one square-zero matrices
    for (const std::string expr : {"quot(2, [0,0,1])", "trivext(gf(2), free(1))"}) {
        CHECK(counts(expr, 1) == 1);
        CHECK(counts(expr, 2) == 4);
        CHECK(counts(expr, 3) == 22);
    }

    // same phenomenon for F_2 |x F_2^2 and (F_2[x]/(x^2)) |x k
    for (const std::string expr :
         {"trivext(gf(2), free(2))", "trivext(quot(2, [0,0,1]), quotfree(1, [(0,1)]))"}) {
        CHECK(counts(expr, 2) == 10);
        CHECK(counts(expr, 3) == 148);
    }

    // product of two fields: one structure per splitting F_2^a x F_2^b
    CHECK(counts("prod(gf(2), gf(2))", 1) == 2);
    CHECK(counts("prod(gf(2), gf(2))", 2) == 8);
}

TEST_CASE("isomorphism class representatives") {
    const auto& rings = corpus_rings();
    const auto classes = [&](const std::string& expr) {
        for (const auto& cr : rings)
            if (cr.expr == expr) {
                std::vector<FinModule> all;
                for (std::size_t d = 0; d <= 3; ++d) {
                    auto mods = enumerate_modules(cr, d);
                    all.insert(all.end(), mods.begin(), mods.end());
                }
                return iso_class_representatives(all).size();
            }
        FAIL("ring not found");
        return std::size_t(0);
    };

    CHECK(classes("gf(2)") == 4); // one class per dimension 0..3
    CHECK(classes("gf(2, [1,1,1])") == 2);
    // 0, k, k^2, R, k^3, R + k over the 4-element local rings
    CHECK(classes("quot(2, [0,0,1])") == 6);
    CHECK(classes("trivext(gf(2), free(1))") == 6);
    // dimension splittings (a, b) with a + b <= 3 over F_2 x F_2
    CHECK(classes("prod(gf(2), gf(2))") == 10);
}

TEST_CASE("catalogue ids and fast smoke run") {
    const auto& cases = verify_cases();
    CHECK(cases.size() == 11);
    std::set<std::string> ids;
    for (const auto& c : cases)
        ids.insert(c.id);
    CHECK(ids.size() == cases.size());

    const Caps caps;
    for (const auto& c : cases) {
        if (c.id == "homological_properties")
            continue; // exercised by the acceptance binary; skip here for speed
        const auto r = run_case(c, caps);
        CHECK(r.status == CaseResult::Status::Pass);
        CHECK(r.repro.find(c.id) != std::string::npos);
    }

    // a capped run is reported as a skip with the cap reason, not a failure
    Caps tight;
    tight.subspace_cap = 1;
    const auto skipped = run_case(cases[0], tight);
    CHECK(skipped.status == CaseResult::Status::Skipped);
    CHECK(skipped.detail.find("cap") != std::string::npos);
}
