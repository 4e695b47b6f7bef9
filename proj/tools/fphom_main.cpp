// fphom: constructions and homological invariants of finite commutative
// F_p-algebras, with a focus on trivial ring extensions.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fphom/verify.hpp"

using namespace fphom;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonArgs {
    std::string format = "text";
    std::size_t depth = 10;
    std::uint64_t max_elements = kDefaultElementCap;
    bool timings = false;
};

Caps caps_from(const CommonArgs& args) {
    Caps caps;
    caps.depth = args.depth;
    caps.element_cap = args.max_elements;
    if (const char* env = std::getenv("FPHOM_SUBSPACE_CAP"))
        caps.subspace_cap = std::strtoull(env, nullptr, 10);
    return caps;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--depth", args.depth, "resolution/scan depth bound")->capture_default_str();
    cmd->add_option("--max-elements", args.max_elements, "element enumeration cap")
        ->capture_default_str();
    cmd->add_flag("--timings", args.timings, "append wall-clock timings");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// Ring argument: an expression, or @path to a serialized ring.
AlgebraPtr ring_from_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@')
        return deserialize_ring(read_file(arg.substr(1)));
    return elaborate_ring(*parse_ring(arg));
}

FinModule module_from_arg(const std::string& arg, const AlgebraPtr& ring) {
    if (!arg.empty() && arg.front() == '@')
        return deserialize_module(read_file(arg.substr(1)), ring);
    return elaborate_module(*parse_module(arg), ring);
}

ordered_json json_rows(const FpMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    return rows;
}

std::string text_rows(const FpMatrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            s += ',';
        s += '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                s += ',';
            s += std::to_string(m(r, c));
        }
        s += ']';
    }
    return s + "]";
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const CommonArgs& args, const ordered_json& doc, const std::string& text,
          const Timer& timer) {
    if (args.format == "json") {
        ordered_json out = doc;
        if (args.timings)
            out["timings"] = {{"seconds", timer.seconds()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
        if (args.timings)
            std::cout << "timings: " << timer.seconds() << "s\n";
    }
}

int run_check(const std::string& ring_arg, const CommonArgs& args) {
    Timer timer;
    const Caps caps = caps_from(args);
    const auto ring = ring_from_arg(ring_arg);
    const auto rep = ring_report(ring, caps.element_cap, caps.subspace_cap);

    ordered_json doc;
    doc["command"] = "check";
    doc["ring"] = ring_arg;
    doc["p"] = ring->p();
    doc["dim"] = ring->dim();
    doc["local"] = rep.is_local;
    doc["unit_count"] = rep.unit_count ? ordered_json(*rep.unit_count) : ordered_json(nullptr);
    doc["nilradical_dim"] = rep.nilradical_dim;
    doc["ideal_count"] = rep.ideal_count ? ordered_json(*rep.ideal_count) : ordered_json(nullptr);
    doc["self_injective"] =
        rep.self_injective ? ordered_json(*rep.self_injective) : ordered_json(nullptr);
    doc["quasi_frobenius"] = rep.qf ? ordered_json(*rep.qf) : ordered_json(nullptr);
    if (rep.qf_witness)
        doc["qf_witness_ideal"] = json_rows(rep.qf_witness->basis);

    std::string text;
    text += "ring: " + ring_arg + "\n";
    text += "p: " + std::to_string(ring->p()) + "  dim: " + std::to_string(ring->dim()) + "\n";
    text += std::string("local: ") + (rep.is_local ? "yes" : "no") + "\n";
    text += "units: " + (rep.unit_count ? std::to_string(*rep.unit_count) : "unavailable") + "\n";
    text += "nilradical dim: " + std::to_string(rep.nilradical_dim) + "\n";
    text += "ideals: " + (rep.ideal_count ? std::to_string(*rep.ideal_count) : "unavailable") + "\n";
    text += std::string("self-injective: ") +
            (rep.self_injective ? (*rep.self_injective ? "yes" : "no") : "unavailable") + "\n";
    text += std::string("quasi-Frobenius: ") + (rep.qf ? (*rep.qf ? "yes" : "no") : "unavailable") +
            "\n";
    if (rep.qf_witness)
        text += "witness ideal (Ann(Ann(I)) != I): " + text_rows(rep.qf_witness->basis) + "\n";

    emit(args, doc, text, timer);
    return 0;
}

int run_classify(const std::string& ring_arg, const CommonArgs& args) {
    Timer timer;
    const auto ring = ring_from_arg(ring_arg);
    const auto v = classify_ggldim(ring, caps_from(args));

    ordered_json doc;
    doc["command"] = "classify";
    doc["ring"] = ring_arg;
    doc["ggldim"] = to_string(v.kind);
    doc["local"] = v.local;
    std::string text = "ring: " + ring_arg + "\n";
    text += std::string("G-gldim: ") + to_string(v.kind) + "\n";
    text += std::string("local: ") + (v.local ? "yes" : "no") + "\n";
    if (v.witness_ideal) {
        doc["witness_ideal"] = json_rows(v.witness_ideal->basis);
        text += "witness ideal (Ann(Ann(I)) != I): " + text_rows(v.witness_ideal->basis) + "\n";
    }
    if (!v.evidence.empty()) {
        ordered_json ev = ordered_json::array();
        text += "cyclic-module evidence:\n";
        for (const auto& [ideal, obs] : v.evidence) {
            ordered_json item;
            item["ideal"] = json_rows(ideal.basis);
            item["first_nonvanishing_ext"] = obs ? ordered_json(*obs) : ordered_json(nullptr);
            ev.push_back(item);
            text += "  ideal " + text_rows(ideal.basis) + ": " +
                    (obs ? "Ext^" + std::to_string(*obs) + "(R/I, R) != 0" : "no obstruction") +
                    "\n";
        }
        doc["evidence"] = ev;
    }
    emit(args, doc, text, timer);
    return 0;
}

int run_resolve(const std::string& ring_arg, const std::string& module_arg, std::size_t length,
                const CommonArgs& args) {
    Timer timer;
    const auto ring = ring_from_arg(ring_arg);
    const auto m = module_from_arg(module_arg, ring);
    const auto res = resolution(m, length);

    ordered_json doc;
    doc["command"] = "resolve";
    doc["ring"] = ring_arg;
    doc["module"] = module_arg;
    doc["length"] = length;
    doc["betti"] = res.betti;
    ordered_json syz = ordered_json::array();
    for (const auto& s : res.syzygies)
        syz.push_back(s.module.dim());
    doc["syzygy_dims"] = syz;

    std::string text = "module: " + module_arg + " over " + ring_arg + "\n";
    text += "betti:";
    for (auto b : res.betti)
        text += " " + std::to_string(b);
    text += "\nsyzygy dims:";
    for (const auto& s : res.syzygies)
        text += " " + std::to_string(s.module.dim());
    text += "\n";
    emit(args, doc, text, timer);
    return 0;
}

int run_ext_tor(bool ext_side, const std::string& ring_arg, const std::string& module_arg,
                const std::string& target_arg, std::size_t i, const CommonArgs& args) {
    Timer timer;
    const auto ring = ring_from_arg(ring_arg);
    const auto m = module_from_arg(module_arg, ring);
    const FinModule n =
        target_arg.empty() ? regular_module(ring) : module_from_arg(target_arg, ring);
    const std::size_t value = ext_side ? ext_dim(m, n, i) : tor_dim(m, n, i);

    const char* name = ext_side ? "ext" : "tor";
    ordered_json doc;
    doc["command"] = name;
    doc["ring"] = ring_arg;
    doc["module"] = module_arg;
    doc["target"] = target_arg.empty() ? "regular" : target_arg;
    doc["i"] = i;
    doc["dim"] = value;
    std::string text = std::string(name) + "^" + std::to_string(i) + " dimension: " +
                       std::to_string(value) + "\n";
    emit(args, doc, text, timer);
    return 0;
}

int run_sgp(const std::string& ring_arg, const std::string& module_arg, const CommonArgs& args) {
    Timer timer;
    const auto ring = ring_from_arg(ring_arg);
    const auto m = module_from_arg(module_arg, ring);
    const auto v = is_sgp(m, caps_from(args));

    ordered_json doc;
    doc["command"] = "sgp";
    doc["ring"] = ring_arg;
    doc["module"] = module_arg;
    doc["verdict"] = to_string(v.verdict);
    std::string text = "strongly Gorenstein projective: " + std::string(to_string(v.verdict)) + "\n";
    if (!v.reason.empty()) {
        doc["reason"] = v.reason;
        text += "reason: " + v.reason + "\n";
    }
    if (v.witness) {
        doc["witness_embedding"] = serialize_map(v.witness->embedding);
        doc["witness_cokernel_iso"] = serialize_map(v.witness->cokernel_iso);
        doc["witness_ext1_dim"] = v.witness->ext1_dim;
        doc["witness_revalidates"] = revalidate(*v.witness);
        text += "witness embedding: " + serialize_map(v.witness->embedding) + "\n";
        text += "witness cokernel iso: " + serialize_map(v.witness->cokernel_iso) + "\n";
        text += std::string("witness revalidates: ") +
                (revalidate(*v.witness) ? "yes" : "no") + "\n";
    }
    emit(args, doc, text, timer);
    return 0;
}

ordered_json report_json(const TransferReport& rep) {
    ordered_json doc;
    ordered_json hyps = ordered_json::array();
    for (const auto& [name, ok] : rep.hypotheses)
        hyps.push_back({{"name", name}, {"passed", ok}});
    doc["hypotheses"] = hyps;
    doc["left_side"] = rep.left_side;
    doc["right_side"] = rep.right_side;
    doc["implication_holds"] =
        rep.implication_holds ? ordered_json(*rep.implication_holds) : ordered_json(nullptr);
    if (!rep.note.empty())
        doc["note"] = rep.note;
    return doc;
}

std::string report_text(const TransferReport& rep) {
    std::string text = "hypotheses:\n";
    for (const auto& [name, ok] : rep.hypotheses)
        text += "  " + name + ": " + (ok ? "pass" : "fail") + "\n";
    text += "left side:  " + rep.left_side + "\n";
    text += "right side: " + rep.right_side + "\n";
    text += "implication holds: " +
            (rep.implication_holds ? std::string(*rep.implication_holds ? "yes" : "NO")
                                   : std::string("not evaluated")) +
            "\n";
    if (!rep.note.empty())
        text += "note: " + rep.note + "\n";
    return text;
}

int run_transfer(const std::string& kind, const std::string& ring_arg,
                 const std::string& fiber_arg, const std::string& module_arg,
                 const CommonArgs& args) {
    Timer timer;
    const Caps caps = caps_from(args);
    const auto a = ring_from_arg(ring_arg);
    const auto e = module_from_arg(fiber_arg, a);

    TransferReport rep;
    if (kind == "ggldim") {
        rep = verify_ggldim_inequality(a, e, caps);
    } else {
        if (module_arg.empty())
            throw std::invalid_argument("transfer " + kind + " needs --module");
        const auto m = module_from_arg(module_arg, a);
        if (kind == "sgp-forward")
            rep = verify_sgp_transfer_forward(a, e, m, caps);
        else if (kind == "sgp-backward")
            rep = verify_sgp_transfer_backward(a, e, m, caps);
        else if (kind == "sgi")
            rep = verify_sgi_transfer(a, e, m, caps);
        else if (kind == "gpd")
            rep = verify_gpd_inequality(a, e, m, caps);
        else
            throw std::invalid_argument("unknown transfer kind: " + kind);
    }

    ordered_json doc = report_json(rep);
    doc["command"] = "transfer";
    doc["kind"] = kind;
    std::string text = "transfer " + kind + " over " + ring_arg + " with E = " + fiber_arg;
    if (!module_arg.empty())
        text += ", M = " + module_arg;
    text += "\n" + report_text(rep);
    emit(args, doc, text, timer);
    return 0;
}

int run_verify(const std::string& case_id, const CommonArgs& args) {
    Timer timer;
    const Caps caps = caps_from(args);
    const auto& cases = verify_cases();

    std::vector<const VerifyCase*> selected;
    for (const auto& c : cases)
        if (case_id.empty() || c.id == case_id)
            selected.push_back(&c);
    if (selected.empty())
        throw std::invalid_argument("unknown case id: " + case_id);

    std::size_t failures = 0;
    ordered_json case_docs = ordered_json::array();
    std::string text;
    std::string timing_text;
    for (const auto* c : selected) {
        const CaseResult r = run_case(*c, caps);
        const char* status = r.status == CaseResult::Status::Pass
                                 ? "PASS"
                                 : (r.status == CaseResult::Status::Skipped ? "SKIP" : "FAIL");
        failures += r.status == CaseResult::Status::Fail ? 1 : 0;
        ordered_json item;
        item["id"] = r.case_id;
        item["status"] = status;
        if (!r.detail.empty())
            item["detail"] = r.detail;
        item["repro"] = r.repro;
        case_docs.push_back(item);
        text += std::string(status) + " " + r.case_id + "\n";
        if (!r.detail.empty())
            text += "     " + r.detail + "\n";
        if (r.status == CaseResult::Status::Fail)
            text += "     repro: " + r.repro + "\n";
        timing_text += "  " + r.case_id + ": " + std::to_string(r.seconds) + "s\n";
    }
    ordered_json doc;
    doc["command"] = "verify-paper";
    doc["cases"] = case_docs;
    doc["failures"] = failures;
    text += failures == 0 ? "all cases passed\n"
                          : std::to_string(failures) + " case(s) failed\n";
    if (args.timings && args.format != "json")
        text += "case timings:\n" + timing_text;
    emit(args, doc, text, timer);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological invariants of finite commutative F_p-algebras"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string ring_arg, module_arg, target_arg, fiber_arg, kind, case_id;
    std::size_t length = 10, degree = 1;

    auto* check = app.add_subcommand("check", "ring construction and quasi-Frobenius report");
    check->add_option("ring", ring_arg, "ring expression or @file")->required();
    add_common(check, args);

    auto* classify = app.add_subcommand("classify", "Gorenstein global dimension verdict");
    classify->add_option("ring", ring_arg, "ring expression or @file")->required();
    add_common(classify, args);

    auto* resolve = app.add_subcommand("resolve", "minimal free resolution");
    resolve->add_option("ring", ring_arg, "ring expression or @file")->required();
    resolve->add_option("--module", module_arg, "module expression or @file")->required();
    resolve->add_option("--length", length, "resolution length")->capture_default_str();
    add_common(resolve, args);

    auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N)");
    ext->add_option("ring", ring_arg, "ring expression or @file")->required();
    ext->add_option("--module", module_arg, "M, module expression or @file")->required();
    ext->add_option("--target", target_arg, "N, defaults to the regular module");
    ext->add_option("--i", degree, "cohomological degree")->capture_default_str();
    add_common(ext, args);

    auto* tor = app.add_subcommand("tor", "dim Tor_i(M, N)");
    tor->add_option("ring", ring_arg, "ring expression or @file")->required();
    tor->add_option("--module", module_arg, "M, module expression or @file")->required();
    tor->add_option("--target", target_arg, "N, defaults to the regular module");
    tor->add_option("--i", degree, "homological degree")->capture_default_str();
    add_common(tor, args);

    auto* sgp = app.add_subcommand("sgp", "strongly Gorenstein projective decision");
    sgp->add_option("ring", ring_arg, "ring expression or @file")->required();
    sgp->add_option("--module", module_arg, "module expression or @file")->required();
    add_common(sgp, args);

    auto* transfer = app.add_subcommand("transfer", "transfer-statement verification");
    transfer->add_option("kind", kind, "sgp-forward | sgp-backward | sgi | gpd | ggldim")
        ->required()
        ->check(CLI::IsMember({"sgp-forward", "sgp-backward", "sgi", "gpd", "ggldim"}));
    transfer->add_option("ring", ring_arg, "base ring A, expression or @file")->required();
    transfer->add_option("--fiber", fiber_arg, "module E over A")->required();
    transfer->add_option("--module", module_arg, "module M over A");
    add_common(transfer, args);

    auto* verify = app.add_subcommand("verify-paper", "run the built-in verification catalogue");
    verify->add_option("--case", case_id, "run a single case by id");
    add_common(verify, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed())
            return run_check(ring_arg, args);
        if (classify->parsed())
            return run_classify(ring_arg, args);
        if (resolve->parsed())
            return run_resolve(ring_arg, module_arg, length, args);
        if (ext->parsed())
            return run_ext_tor(true, ring_arg, module_arg, target_arg, degree, args);
        if (tor->parsed())
            return run_ext_tor(false, ring_arg, module_arg, target_arg, degree, args);
        if (sgp->parsed())
            return run_sgp(ring_arg, module_arg, args);
        if (transfer->parsed())
            return run_transfer(kind, ring_arg, fiber_arg, module_arg, args);
        if (verify->parsed())
            return run_verify(case_id, args);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
