#include "fphom/speclang.hpp"

#include <cctype>

namespace fphom {

ModuleExprPtr ModuleExpr::free(std::size_t n) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::Free;
    e->count = n;
    return e;
}

ModuleExprPtr ModuleExpr::regular() {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::Regular;
    return e;
}

ModuleExprPtr ModuleExpr::quotfree(std::size_t n, std::vector<FpVec> rows) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::QuotFree;
    e->count = n;
    e->rows = std::move(rows);
    return e;
}

ModuleExprPtr ModuleExpr::dual(ModuleExprPtr inner) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::Dual;
    e->left = std::move(inner);
    return e;
}

ModuleExprPtr ModuleExpr::sum(ModuleExprPtr l, ModuleExprPtr r) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::Sum;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

RingExprPtr RingExpr::gf(std::uint32_t p) {
    auto e = std::make_shared<RingExpr>();
    e->kind = Kind::Gf;
    e->p = p;
    return e;
}

RingExprPtr RingExpr::gf_poly(std::uint32_t p, FpVec poly) {
    auto e = std::make_shared<RingExpr>();
    e->kind = Kind::GfPoly;
    e->p = p;
    e->poly = std::move(poly);
    return e;
}

RingExprPtr RingExpr::quot(std::uint32_t p, FpVec poly) {
    auto e = std::make_shared<RingExpr>();
    e->kind = Kind::Quot;
    e->p = p;
    e->poly = std::move(poly);
    return e;
}

RingExprPtr RingExpr::trivext(RingExprPtr base, ModuleExprPtr fiber) {
    auto e = std::make_shared<RingExpr>();
    e->kind = Kind::TrivExt;
    e->left = std::move(base);
    e->fiber = std::move(fiber);
    return e;
}

RingExprPtr RingExpr::prod(RingExprPtr l, RingExprPtr r) {
    auto e = std::make_shared<RingExpr>();
    e->kind = Kind::Prod;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

bool operator==(const ModuleExpr& a, const ModuleExpr& b) {
    if (a.kind != b.kind || a.count != b.count || a.rows != b.rows)
        return false;
    const auto eq = [](const ModuleExprPtr& x, const ModuleExprPtr& y) {
        return (x == nullptr) == (y == nullptr) && (!x || *x == *y);
    };
    return eq(a.left, b.left) && eq(a.right, b.right);
}

bool operator==(const RingExpr& a, const RingExpr& b) {
    if (a.kind != b.kind || a.p != b.p || a.poly != b.poly)
        return false;
    const auto eq_r = [](const RingExprPtr& x, const RingExprPtr& y) {
        return (x == nullptr) == (y == nullptr) && (!x || *x == *y);
    };
    const auto eq_m = [](const ModuleExprPtr& x, const ModuleExprPtr& y) {
        return (x == nullptr) == (y == nullptr) && (!x || *x == *y);
    };
    return eq_r(a.left, b.left) && eq_r(a.right, b.right) && eq_m(a.fiber, b.fiber);
}

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::size_t pos() const { return pos_; }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '^'))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected a name", pos_);
        std::string s = text_.substr(start, pos_ - start);
        for (auto& c : s)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
    }

    std::uint64_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (std::uint64_t(1) << 32))
                throw ParseError("integer literal too large", start);
            ++pos_;
        }
        if (start == pos_)
            throw ParseError("expected an integer", pos_);
        return v;
    }

    std::string quoted_string() {
        skip_ws();
        expect('"');
        std::string s;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size())
                ++pos_;
            s += text_[pos_++];
        }
        expect('"');
        return s;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

FpVec parse_int_list(Cursor& cur, char open, char close) {
    FpVec v;
    cur.expect(open);
    if (cur.accept(close))
        return v;
    do {
        v.push_back(static_cast<std::uint32_t>(cur.integer()));
    } while (cur.accept(','));
    cur.expect(close);
    return v;
}

// row := (INT, ...) | ((INT, ...), (INT, ...), ...) -- flattened either way
FpVec parse_relation_row(Cursor& cur) {
    cur.expect('(');
    FpVec row;
    if (cur.peek() == '(') {
        do {
            const FpVec block = parse_int_list(cur, '(', ')');
            row.insert(row.end(), block.begin(), block.end());
        } while (cur.accept(','));
    } else {
        do {
            row.push_back(static_cast<std::uint32_t>(cur.integer()));
        } while (cur.accept(','));
    }
    cur.expect(')');
    return row;
}

ModuleExprPtr parse_module_expr(Cursor& cur);

RingExprPtr parse_ring_expr(Cursor& cur) {
    const std::size_t at = cur.pos();
    const std::string head = cur.ident();
    if (head == "gf") {
        cur.expect('(');
        cur.skip_ws();
        const std::size_t p_at = cur.pos();
        const auto p = static_cast<std::uint32_t>(cur.integer());
        if (!is_prime(p))
            throw ParseError(std::to_string(p) + " is not prime", p_at);
        if (cur.accept(',')) {
            cur.skip_ws();
            const std::size_t poly_at = cur.pos();
            FpVec poly = parse_int_list(cur, '[', ']');
            FpVec reduced = poly;
            for (auto& c : reduced)
                c %= p;
            reduced = poly_trim(std::move(reduced));
            if (!poly_is_monic(reduced) || reduced.size() < 2)
                throw ParseError("gf(p, f): f must be monic of degree >= 1", poly_at);
            if (reduced.size() > 9)
                throw ParseError("gf(p, f): irreducibility check supports degree <= 8", poly_at);
            if (!poly_is_irreducible(reduced, p))
                throw ParseError("gf(p, f): f is reducible, use quot(p, f)", poly_at);
            cur.expect(')');
            return RingExpr::gf_poly(p, std::move(poly));
        }
        cur.expect(')');
        return RingExpr::gf(p);
    }
    if (head == "quot") {
        cur.expect('(');
        cur.skip_ws();
        const std::size_t p_at = cur.pos();
        const auto p = static_cast<std::uint32_t>(cur.integer());
        if (!is_prime(p))
            throw ParseError(std::to_string(p) + " is not prime", p_at);
        cur.expect(',');
        cur.skip_ws();
        const std::size_t poly_at = cur.pos();
        FpVec poly = parse_int_list(cur, '[', ']');
        FpVec reduced = poly;
        for (auto& c : reduced)
            c %= p;
        reduced = poly_trim(std::move(reduced));
        if (!poly_is_monic(reduced) || reduced.size() < 2)
            throw ParseError("quot(p, f): f must be monic of degree >= 1", poly_at);
        cur.expect(')');
        return RingExpr::quot(p, std::move(poly));
    }
    if (head == "trivext") {
        cur.expect('(');
        auto base = parse_ring_expr(cur);
        cur.expect(',');
        auto fiber = parse_module_expr(cur);
        cur.expect(')');
        return RingExpr::trivext(std::move(base), std::move(fiber));
    }
    if (head == "prod") {
        cur.expect('(');
        auto l = parse_ring_expr(cur);
        cur.expect(',');
        auto r = parse_ring_expr(cur);
        cur.expect(')');
        return RingExpr::prod(std::move(l), std::move(r));
    }
    throw ParseError("unknown ring constructor '" + head + "'", at);
}

ModuleExprPtr parse_module_expr(Cursor& cur) {
    const std::size_t at = cur.pos();
    const std::string head = cur.ident();
    if (head == "free") {
        cur.expect('(');
        const auto n = cur.integer();
        cur.expect(')');
        return ModuleExpr::free(static_cast<std::size_t>(n));
    }
    if (head == "regular")
        return ModuleExpr::regular();
    if (head == "quotfree") {
        cur.expect('(');
        const auto n = cur.integer();
        cur.expect(',');
        cur.expect('[');
        std::vector<FpVec> rows;
        if (!cur.accept(']')) {
            do {
                rows.push_back(parse_relation_row(cur));
            } while (cur.accept(','));
            cur.expect(']');
        }
        cur.expect(')');
        return ModuleExpr::quotfree(static_cast<std::size_t>(n), std::move(rows));
    }
    if (head == "dual") {
        cur.expect('(');
        auto inner = parse_module_expr(cur);
        cur.expect(')');
        return ModuleExpr::dual(std::move(inner));
    }
    if (head == "sum") {
        cur.expect('(');
        auto l = parse_module_expr(cur);
        cur.expect(',');
        auto r = parse_module_expr(cur);
        cur.expect(')');
        return ModuleExpr::sum(std::move(l), std::move(r));
    }
    throw ParseError("unknown module constructor '" + head + "'", at);
}

void expect_end(Cursor& cur) {
    if (!cur.at_end())
        throw ParseError("trailing input", cur.pos());
}

std::string int_list(const FpVec& v, char open, char close) {
    std::string s(1, open);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(v[i]);
    }
    s += close;
    return s;
}

} // namespace

RingExprPtr parse_ring(const std::string& text) {
    Cursor cur(text);
    auto e = parse_ring_expr(cur);
    expect_end(cur);
    return e;
}

ModuleExprPtr parse_module(const std::string& text) {
    Cursor cur(text);
    auto e = parse_module_expr(cur);
    expect_end(cur);
    return e;
}

std::string print_expr(const ModuleExpr& e) {
    switch (e.kind) {
    case ModuleExpr::Kind::Free:
        return "free(" + std::to_string(e.count) + ")";
    case ModuleExpr::Kind::Regular:
        return "regular";
    case ModuleExpr::Kind::QuotFree: {
        std::string s = "quotfree(" + std::to_string(e.count) + ", [";
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            if (i)
                s += ", ";
            s += int_list(e.rows[i], '(', ')');
        }
        return s + "])";
    }
    case ModuleExpr::Kind::Dual:
        return "dual(" + print_expr(*e.left) + ")";
    case ModuleExpr::Kind::Sum:
        return "sum(" + print_expr(*e.left) + ", " + print_expr(*e.right) + ")";
    }
    throw std::logic_error("print_expr: bad module expression");
}

std::string print_expr(const RingExpr& e) {
    switch (e.kind) {
    case RingExpr::Kind::Gf:
        return "gf(" + std::to_string(e.p) + ")";
    case RingExpr::Kind::GfPoly:
        return "gf(" + std::to_string(e.p) + ", " + int_list(e.poly, '[', ']') + ")";
    case RingExpr::Kind::Quot:
        return "quot(" + std::to_string(e.p) + ", " + int_list(e.poly, '[', ']') + ")";
    case RingExpr::Kind::TrivExt:
        return "trivext(" + print_expr(*e.left) + ", " + print_expr(*e.fiber) + ")";
    case RingExpr::Kind::Prod:
        return "prod(" + print_expr(*e.left) + ", " + print_expr(*e.right) + ")";
    }
    throw std::logic_error("print_expr: bad ring expression");
}

AlgebraPtr elaborate_ring(const RingExpr& e) {
    switch (e.kind) {
    case RingExpr::Kind::Gf:
        return gf(e.p);
    case RingExpr::Kind::GfPoly: {
        require_prime(e.p);
        FpVec poly = e.poly;
        for (auto& c : poly)
            c %= e.p;
        if (!poly_is_monic(poly_trim(poly)))
            throw std::invalid_argument("gf(p, f): f must be monic");
        if (poly.size() > 9)
            throw std::invalid_argument("gf(p, f): irreducibility check supports degree <= 8");
        if (!poly_is_irreducible(poly_trim(poly), e.p))
            throw std::invalid_argument("gf(p, f): f is reducible, use quot(p, f) instead");
        return poly_quotient(e.p, poly);
    }
    case RingExpr::Kind::Quot:
        return poly_quotient(e.p, e.poly);
    case RingExpr::Kind::TrivExt: {
        const AlgebraPtr base = elaborate_ring(*e.left);
        return trivial_extension(base, elaborate_module(*e.fiber, base));
    }
    case RingExpr::Kind::Prod:
        return product(elaborate_ring(*e.left), elaborate_ring(*e.right));
    }
    throw std::logic_error("elaborate_ring: bad expression");
}

FinModule elaborate_module(const ModuleExpr& e, const AlgebraPtr& ring) {
    switch (e.kind) {
    case ModuleExpr::Kind::Free:
        return free_module(ring, e.count);
    case ModuleExpr::Kind::Regular:
        return regular_module(ring);
    case ModuleExpr::Kind::QuotFree: {
        const FinModule f = free_module(ring, e.count);
        std::vector<FpVec> closure;
        for (const auto& row : e.rows) {
            if (row.size() != f.dim())
                throw std::invalid_argument(
                    "quotfree: relation row needs one ring-coordinate block per generator");
            for (std::size_t i = 0; i < ring->dim(); ++i)
                closure.push_back(f.action(i) * row);
        }
        const FpMatrix span = closure.empty() ? FpMatrix(ring->p(), 0, f.dim())
                                              : FpMatrix::from_rows(ring->p(), closure);
        return quotient_by_subspace(f, span).module;
    }
    case ModuleExpr::Kind::Dual:
        return dual(elaborate_module(*e.left, ring));
    case ModuleExpr::Kind::Sum:
        return direct_sum(elaborate_module(*e.left, ring), elaborate_module(*e.right, ring));
    }
    throw std::logic_error("elaborate_module: bad expression");
}

// --- interchange ---

namespace {

std::string render_matrix_rows(const FpMatrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            s += ',';
        s += int_list(m.row(r), '[', ']');
    }
    return s + "]";
}

/// Reads `{` key `:` ... in declared order, tolerating quoted keys.
class ObjectReader {
public:
    explicit ObjectReader(Cursor& cur) : cur_(cur) { cur_.expect('{'); }

    void key(const std::string& expected) {
        if (!first_)
            cur_.expect(',');
        first_ = false;
        const std::size_t at = cur_.pos();
        const std::string k = cur_.peek() == '"' ? cur_.quoted_string() : cur_.ident();
        if (k != expected)
            throw ParseError("expected field '" + expected + "', found '" + k + "'", at);
        cur_.expect(':');
    }

    void finish() { cur_.expect('}'); }

private:
    Cursor& cur_;
    bool first_ = true;
};

FpMatrix read_matrix_rows(Cursor& cur, std::uint32_t p, std::size_t rows, std::size_t cols,
                          const char* what) {
    const std::size_t at = cur.pos();
    cur.expect('[');
    std::vector<FpVec> out;
    if (!cur.accept(']')) {
        do {
            out.push_back(parse_int_list(cur, '[', ']'));
        } while (cur.accept(','));
        cur.expect(']');
    }
    if (out.size() != rows)
        throw ParseError(std::string(what) + ": wrong row count", at);
    for (const auto& r : out)
        if (r.size() != cols)
            throw ParseError(std::string(what) + ": wrong column count", at);
    return out.empty() ? FpMatrix(p, 0, cols) : FpMatrix::from_rows(p, out);
}

} // namespace

std::string serialize_ring(const FpAlgebra& a) {
    std::string s = "{p:" + std::to_string(a.p()) + ", dim:" + std::to_string(a.dim()) + ", names:[";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i)
            s += ',';
        s += '"';
        for (char c : a.basis_names()[i]) {
            if (c == '"' || c == '\\')
                s += '\\';
            s += c;
        }
        s += '"';
    }
    s += "], one:" + int_list(a.one(), '[', ']') + ", mul:[";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i)
            s += ',';
        s += '[';
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (j)
                s += ',';
            FpVec coeffs(a.dim());
            for (std::size_t k = 0; k < a.dim(); ++k)
                coeffs[k] = a.c(i, j, k);
            s += int_list(coeffs, '[', ']');
        }
        s += ']';
    }
    return s + "]}";
}

std::string serialize_module(const FinModule& m) {
    std::string s = "{dim:" + std::to_string(m.dim()) + ", action:[";
    for (std::size_t i = 0; i < m.ring()->dim(); ++i) {
        if (i)
            s += ',';
        s += render_matrix_rows(m.action(i));
    }
    return s + "]}";
}

std::string serialize_map(const FinModuleMap& f) {
    return "{rows:" + std::to_string(f.matrix().rows()) +
           ", cols:" + std::to_string(f.matrix().cols()) +
           ", entries:" + int_list(f.matrix().entries(), '[', ']') + "}";
}

AlgebraPtr deserialize_ring(const std::string& text) {
    Cursor cur(text);
    ObjectReader obj(cur);
    obj.key("p");
    const auto p = static_cast<std::uint32_t>(cur.integer());
    require_prime(p);
    obj.key("dim");
    const auto dim = static_cast<std::size_t>(cur.integer());
    obj.key("names");
    std::vector<std::string> names;
    cur.expect('[');
    if (!cur.accept(']')) {
        do {
            names.push_back(cur.quoted_string());
        } while (cur.accept(','));
        cur.expect(']');
    }
    if (names.size() != dim)
        throw ParseError("names: need one label per basis element", cur.pos());
    obj.key("one");
    FpVec one = parse_int_list(cur, '[', ']');
    if (one.size() != dim)
        throw ParseError("one: wrong coordinate count", cur.pos());
    obj.key("mul");
    const std::size_t at = cur.pos();
    std::vector<std::uint32_t> tensor(dim * dim * dim, 0);
    cur.expect('[');
    for (std::size_t i = 0; i < dim; ++i) {
        if (i)
            cur.expect(',');
        cur.expect('[');
        for (std::size_t j = 0; j < dim; ++j) {
            if (j)
                cur.expect(',');
            const FpVec coeffs = parse_int_list(cur, '[', ']');
            if (coeffs.size() != dim)
                throw ParseError("mul: coefficient list has wrong length", at);
            for (std::size_t k = 0; k < dim; ++k)
                tensor[(i * dim + j) * dim + k] = coeffs[k];
        }
        cur.expect(']');
    }
    cur.expect(']');
    obj.finish();
    expect_end(cur);

    auto a = std::make_shared<FpAlgebra>(
        FpAlgebra::from_tensor(p, std::move(names), std::move(one), tensor));
    const auto bad = validate(*a);
    if (!bad.empty())
        throw std::invalid_argument("deserialize_ring: " + bad.front());
    return a;
}

FinModule deserialize_module(const std::string& text, const AlgebraPtr& ring) {
    Cursor cur(text);
    ObjectReader obj(cur);
    obj.key("dim");
    const auto dim = static_cast<std::size_t>(cur.integer());
    obj.key("action");
    cur.expect('[');
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < ring->dim(); ++i) {
        if (i)
            cur.expect(',');
        action.push_back(read_matrix_rows(cur, ring->p(), dim, dim, "action"));
    }
    cur.expect(']');
    obj.finish();
    expect_end(cur);
    return FinModule::checked(ring, std::move(action));
}

FinModuleMap deserialize_map(const std::string& text, const FinModule& source,
                             const FinModule& target) {
    Cursor cur(text);
    ObjectReader obj(cur);
    obj.key("rows");
    const auto rows = static_cast<std::size_t>(cur.integer());
    obj.key("cols");
    const auto cols = static_cast<std::size_t>(cur.integer());
    obj.key("entries");
    const std::size_t at = cur.pos();
    FpVec entries = parse_int_list(cur, '[', ']');
    obj.finish();
    expect_end(cur);
    if (entries.size() != rows * cols)
        throw ParseError("entries: wrong length", at);
    return FinModuleMap::checked(source, target,
                                 FpMatrix(source.ring()->p(), rows, cols, std::move(entries)));
}

} // namespace fphom
