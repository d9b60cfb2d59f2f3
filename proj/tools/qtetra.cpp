// Command-line front end. Exit codes: 0 all checks pass, 1 input error,
// 2 structural or relation failure.

#include "qtetra/qtetra.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qtetra;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_failure = 2;

struct Options {
    std::optional<std::string> q;
    std::string out;
    std::string format = "json";
    unsigned d = 0;
    std::string t = "1";
    int n = 1;
    std::string file, file2;
};

/// Field of the run: --q wins, else the file's own mode, else symbolic.
FieldMode resolve_mode(const Options& o, const std::optional<Json>& file) {
    const FieldMode from_file = file ? field_mode_of(*file) : FieldMode::symbolic();
    if (!o.q) return from_file;
    FieldMode m;
    try {
        m = FieldMode::at(parse_rational(*o.q));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("--q: ") + e.what());
    }
    if (from_file.specialized && !(from_file == m))
        throw FormatError("file is specialized at q = " + to_string(from_file.q_value) + ", not " + *o.q);
    return m;
}

void emit(const Options& o, const Json& j) {
    const std::string text = serialize(j);
    if (o.out.empty())
        std::cout << text;
    else
        write_file_atomic(o.out, text);
}

template <FieldScalar F>
MatrixRep<F> load_module(const Json& j, const FieldContext<F>& ctx, std::optional<AlgebraId> expected = std::nullopt) {
    auto rep = module_from_json(j, ctx);
    if (expected && rep.algebra != *expected)
        throw FormatError("expected a " + to_string(*expected) + " module, got " + to_string(rep.algebra));
    return rep;
}

template <FieldScalar F>
int finish_module(const Options& o, const MatrixRep<F>& rep, const FieldContext<F>& ctx, const FieldMode& mode) {
    const auto report = check_representation(rep, ctx);
    emit(o, module_to_json(rep, mode));
    if (!report.passed()) {
        std::cerr << "relation check failed: " << report.failing.front() << "\n";
        return exit_failure;
    }
    return exit_ok;
}

template <FieldScalar F>
int cmd_build(const std::string& kind, const Options& o, const FieldContext<F>& ctx, const FieldMode& mode) {
    if (kind == "evaluation") {
        const F t = parse_scalar(o.t, ctx);
        return finish_module(o, evaluation_module(o.d, t, ctx), ctx, mode);
    }
    if (kind == "uqsl2") return finish_module(o, uqsl2_equitable_module(o.d, ctx), ctx, mode);
    auto factor = [&](const std::string& path) {
        const Json j = read_json_file(path);
        const FieldMode m = field_mode_of(j);
        if (m.specialized && !(m == mode)) throw FormatError(path + " uses a different field");
        return load_module(j, ctx, AlgebraId::LoopEquitable);
    };
    const auto a = factor(o.file);
    const auto b = factor(o.file2);
    return finish_module(o, tensor_modules(a, b, ctx), ctx, mode);
}

template <FieldScalar F>
int cmd_analyze(const Options& o, const Json& file, const FieldContext<F>& ctx) {
    auto mod = load_module(file, ctx, AlgebraId::BoxQ);
    Json report;
    bool ok = true;
    try {
        auto spectra = box_spectra(mod, ctx);
        report["epsilon"] = spectra.epsilon;
        report["d"] = spectra.d;
        if (spectra.epsilon < 0) {
            // The containment checks are stated for type 1.
            mod = negate(mod);
            spectra = box_spectra(mod, ctx);
            report["analyzed_after_sign_twist"] = true;
        }
        const auto shape = shape_of(spectra);
        const auto tables = check_action_tables(mod, spectra, ctx);
        const auto flags = check_flags(spectra);
        const auto lemmas = check_linear_algebra_lemmas(mod, spectra.d, ctx);
        Json chains = Json::array();
        for (const auto& theta : standard_spectrum(1, spectra.d, ctx)) {
            const auto c = check_dimension_chain(mod, theta);
            ok = ok && c.ok();
            auto cj = chain_report_to_json(c);
            cj["theta"] = to_string(theta);
            chains.push_back(std::move(cj));
        }
        report["shape"] = shape.shape;
        report["shape_check"] = shape_report_to_json(shape);
        report["table_check"] = table_report_to_json(tables);
        report["flag_oppositeness"] = flag_report_to_json(flags);
        report["dimension_chains"] = std::move(chains);
        report["lemmas"] = lemma_report_to_json(lemmas);
        ok = ok && shape.ok() && tables.ok() && flags.ok() && lemmas.ok();
    } catch (const StructuralError& e) {
        report["structural_failures"] = Json::array({e.what()});
        ok = false;
    }
    report["passed"] = ok;
    emit(o, report);
    return ok ? exit_ok : exit_failure;
}

template <FieldScalar F>
int cmd_reconstruct(const Options& o, const Json& file, const FieldContext<F>& ctx, const FieldMode& mode) {
    const auto pair_rep = module_from_json(file, ctx);
    AqPair<F> pair;
    try {
        pair = aq_pair_of_rep(pair_rep);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    try {
        auto out = reconstruct_boxq(pair, ctx);
        for (const auto& [k, v] : pair_rep.provenance) out.provenance[k] = v;
        out.provenance["source"] = "reconstruction";
        emit(o, module_to_json(out, mode));
        return exit_ok;
    } catch (const ReconstructionError& e) {
        std::cerr << "reconstruction failed at stage \"" << e.stage() << "\": " << e.what() << "\n";
        return exit_failure;
    }
}

template <FieldScalar F>
int cmd_verify(const Options& o, const Json& file, const FieldContext<F>& ctx) {
    const auto rep = module_from_json(file, ctx);
    const auto report = check_representation(rep, ctx);
    emit(o, check_report_to_json(report));
    return report.passed() ? exit_ok : exit_failure;
}

template <FieldScalar F>
int cmd_dualities(const std::string& op, const Options& o, const Json& file, const FieldContext<F>& ctx,
                  const FieldMode& mode) {
    const auto mod = load_module(file, ctx, AlgebraId::BoxQ);
    if (op == "twist") return finish_module(o, twist_rho(mod, o.n), ctx, mode);
    if (op == "dual") return finish_module(o, dual_module(mod), ctx, mode);
    if (op == "eightfold") {
        emit(o, eightfold_to_json(eightfold_comparison(mod)));
        return exit_ok;
    }
    emit(o, bilinear_form_to_json(omega_form(mod)));
    return exit_ok;
}

template <FieldScalar F>
int dispatch(const std::string& command, const std::string& sub, const Options& o, const std::optional<Json>& file,
             const FieldContext<F>& ctx, const FieldMode& mode) {
    if (command == "build") return cmd_build(sub, o, ctx, mode);
    if (command == "analyze") return cmd_analyze(o, *file, ctx);
    if (command == "reconstruct") return cmd_reconstruct(o, *file, ctx, mode);
    if (command == "verify-relations") return cmd_verify(o, *file, ctx);
    return cmd_dualities(sub, o, *file, ctx, mode);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with q-tetrahedron algebra modules"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--q", o.q, "specialize at this rational value of q (default: symbolic)");
        c->add_option("--out", o.out, "write output to this file instead of stdout");
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));
    };

    auto* build = app.add_subcommand("build", "construct a module");
    build->require_subcommand(1);
    auto* b_eval = build->add_subcommand("evaluation", "evaluation module Ev(d,t) of the loop algebra");
    b_eval->add_option("--d", o.d, "diameter")->required();
    b_eval->add_option("--t", o.t, "evaluation parameter, a nonzero scalar");
    auto* b_tensor = build->add_subcommand("tensor", "tensor product of two loop modules");
    b_tensor->add_option("a", o.file, "first factor")->required();
    b_tensor->add_option("b", o.file2, "second factor")->required();
    auto* b_uq = build->add_subcommand("uqsl2", "equitable U_q(sl2) module of diameter d");
    b_uq->add_option("--d", o.d, "diameter")->required();
    for (auto* c : {b_eval, b_tensor, b_uq}) add_common(c);

    auto* analyze = app.add_subcommand("analyze", "type, diameter, shape and structural checks of a BOXQ module");
    auto* reconstruct = app.add_subcommand("reconstruct", "BOXQ module from an A_q pair (AQ or LOOP_EQ file)");
    auto* verify = app.add_subcommand("verify-relations", "evaluate every defining relation");
    for (auto* c : {analyze, reconstruct, verify}) {
        c->add_option("file", o.file, "module file")->required();
        add_common(c);
    }

    auto* dual = app.add_subcommand("dualities", "twists, duals and related experiments");
    dual->require_subcommand(1);
    auto* d_twist = dual->add_subcommand("twist", "twist by rho^n");
    d_twist->add_option("--n", o.n, "power of rho");
    auto* d_dual = dual->add_subcommand("dual", "dual module through omega");
    auto* d_eight = dual->add_subcommand("eightfold", "isomorphism table of V rho^n and V* rho^n");
    auto* d_omega = dual->add_subcommand("omega-form", "solve for an omega-invariant bilinear form");
    for (auto* c : {d_twist, d_dual, d_eight, d_omega}) {
        c->add_option("file", o.file, "BOXQ module file")->required();
        add_common(c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    std::string command, sub;
    for (auto* c : app.get_subcommands()) {
        command = c->get_name();
        for (auto* s : c->get_subcommands()) sub = s->get_name();
    }

    try {
        std::optional<Json> file;
        if (command != "build") file = read_json_file(o.file);
        const FieldMode mode = resolve_mode(o, file);
        if (mode.specialized) return dispatch(command, sub, o, file, specialized_field(mode.q_value), mode);
        return dispatch(command, sub, o, file, symbolic_field(), mode);
    } catch (const StructuralError& e) {
        std::cerr << "structural failure: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
