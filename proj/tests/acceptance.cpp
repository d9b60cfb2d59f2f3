// Acceptance run: one PASS/FAIL line per criterion.
// The whole suite runs once at symbolic q and once specialized at q = 2.

#include "qtetra/qtetra.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace qtetra;

namespace {

constexpr std::size_t kCriteria = 9;  // the tenth compares the two runs

struct Outcome {
    std::array<bool, kCriteria> pass{};
    std::array<std::string, kCriteria> detail;
    double reconstruct_seconds = 0;
    double total_seconds = 0;
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <FieldScalar F>
struct TestModule {
    std::string name;
    MatrixRep<F> loop;
    MatrixRep<F> box;
    unsigned d;
    bool evaluation;
};

template <FieldScalar F>
Outcome run_suite(const FieldContext<F>& ctx) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    const F q = ctx.q;
    const std::vector<std::pair<std::string, F>> params{{"1", F(1)}, {"q", q}, {"q+1", F(q + F(1))}};

    // 1. Reconstruct every Ev(d,t) and evaluate the 20 relations.
    std::vector<TestModule<F>> mods;
    std::size_t relation_fail = 0, relations = 0;
    for (unsigned d = 0; d <= 5; ++d)
        for (const auto& [tn, t] : params) {
            const auto ev = evaluation_module(d, t, ctx);
            auto box = reconstruct_boxq(aq_pair_of(ev), ctx);
            const auto rep = check_representation(box, ctx);
            relations += rep.residuals.size();
            relation_fail += rep.failing.size();
            mods.push_back({"Ev(" + std::to_string(d) + "," + tn + ")", ev, std::move(box), d, true});
        }
    out.reconstruct_seconds = since(start);
    out.pass[0] = relation_fail == 0 && relations == 20 * mods.size() && out.reconstruct_seconds < 60;
    out.detail[0] = std::to_string(mods.size()) + " modules, " + std::to_string(relations - relation_fail) + "/" +
                    std::to_string(relations) + " relations vanish, " + std::to_string(out.reconstruct_seconds) + " s";

    const auto generic = tensor_modules(evaluation_module(1, q, ctx), evaluation_module(1, F(q + F(1)), ctx), ctx);
    mods.push_back({"Ev(1,q)(x)Ev(1,q+1)", generic, boxq_of_loop(generic, ctx), 2, false});

    // 2. Spectra of all eight generators.
    {
        std::size_t ok = 0, total = 0;
        for (const auto& m : mods) {
            if (!m.evaluation) continue;
            for (const auto& l : box_labels()) {
                ++total;
                try {
                    const auto td = detect_type_diameter(m.box.at(l), ctx);
                    if (td.epsilon == 1 && td.d == m.d) ++ok;
                } catch (const StructuralError&) {
                }
            }
        }
        out.pass[1] = ok == total;
        out.detail[1] = std::to_string(ok) + "/" + std::to_string(total) + " generators semisimple with spectrum {q^(d-2n)}";
    }

    std::vector<BoxSpectra<F>> spectra;
    for (const auto& m : mods) spectra.push_back(box_spectra(m.box, ctx));

    // 3. Uniform palindromic shapes; the generic tensor has shape (1,2,1).
    {
        bool ok = true;
        for (const auto& sp : spectra) ok = ok && shape_of(sp).ok();
        const auto ts = shape_of(spectra.back()).shape;
        const bool tensor_ok = ts == std::vector<std::size_t>{1, 2, 1};
        out.pass[2] = ok && tensor_ok;
        out.detail[2] = std::string(ok ? "all shapes uniform and palindromic" : "shape violation") + ", tensor shape (" +
                        std::to_string(ts.size() > 0 ? ts[0] : 0) + "," + std::to_string(ts.size() > 1 ? ts[1] : 0) +
                        "," + std::to_string(ts.size() > 2 ? ts[2] : 0) + ")";
    }

    // 4. Both action tables.
    {
        std::size_t checked = 0, violations = 0;
        bool counts = true;
        for (std::size_t k = 0; k < mods.size(); ++k) {
            const auto r = check_action_tables(mods[k].box, spectra[k], ctx);
            checked += r.containments_checked;
            violations += r.violations.size();
            counts = counts && r.containments_checked == 12u * 4u * (mods[k].d + 1);
        }
        out.pass[3] = violations == 0 && counts;
        out.detail[3] = std::to_string(checked) + " containments, " + std::to_string(violations) + " violations";
    }

    // 5. Four pairwise opposite flags recovering all eight decompositions.
    {
        std::size_t pairs = 0, recovered = 0, bad = 0;
        for (const auto& sp : spectra) {
            const auto r = check_flags(sp);
            pairs += r.pairs_checked;
            recovered += r.decompositions_recovered;
            if (!r.ok() || r.pairs_checked != 6 || r.decompositions_recovered != 8) ++bad;
        }
        out.pass[4] = bad == 0;
        out.detail[4] = std::to_string(pairs) + " opposite pairs, " + std::to_string(recovered) + " decompositions recovered";
    }

    // 6. Restriction then reconstruction returns the module exactly.
    {
        std::size_t ok = 0;
        for (const auto& m : mods) ok += roundtrip_verify(m.box, ctx).ok() ? 1 : 0;
        out.pass[5] = ok == mods.size();
        out.detail[5] = std::to_string(ok) + "/" + std::to_string(mods.size()) + " exact round trips";
    }

    // 7. Burnside certificates.
    {
        std::size_t full = 0, total = 0;
        for (const auto& m : mods) {
            if (!m.evaluation) continue;
            ++total;
            const auto p = aq_pair_of(m.loop);
            const auto c = irreducible_pair(p.X, p.Y);
            if (c.full && c.dim == (m.d + 1) * (m.d + 1)) ++full;
        }
        const F t = F(q + F(1));
        const auto resonant = tensor_modules(evaluation_module(1, t, ctx), evaluation_module(1, F(q * q * t), ctx), ctx);
        const auto rp = aq_pair_of(resonant);
        const auto rc = irreducible_pair(rp.X, rp.Y);
        out.pass[6] = full == total && !rc.full;
        out.detail[6] = std::to_string(full) + "/" + std::to_string(total) + " full matrix algebras, resonant tensor closure " +
                        std::to_string(rc.dim) + "/16";
    }

    // 8. Linear-algebra lemmas at theta = q^d.
    {
        std::size_t arrows = 0, eigen = 0, bad = 0;
        for (const auto& m : mods) {
            const auto r = check_linear_algebra_lemmas(m.box, m.d, ctx);
            arrows += r.arrows_checked;
            eigen += r.eigenvalues_checked;
            if (!r.ok()) ++bad;
        }
        out.pass[7] = bad == 0;
        out.detail[7] = std::to_string(arrows) + " arrows, " + std::to_string(eigen) + " eigenvalues, " +
                        std::to_string(bad) + " failing modules";
    }

    // 9. Twists, sign twist and duals; the omega-form is reported only.
    {
        std::size_t bad = 0, forms = 0, symmetric = 0, nondegenerate = 0;
        for (const auto& m : mods) {
            std::vector<MatrixRep<F>> variants{negate(m.box), dual_module(m.box)};
            for (int n = 1; n <= 3; ++n) variants.push_back(twist_rho(m.box, n));
            for (const auto& v : variants)
                if (!check_representation(v, ctx).passed()) ++bad;
            auto r4 = m.box;
            for (int n = 0; n < 4; ++n) r4 = twist_rho(r4, 1);
            if (!intertwiner_space(r4, m.box).isomorphic()) ++bad;
            if (!intertwiner_space(dual_module(dual_module(m.box)), m.box).isomorphic()) ++bad;
            const auto f = omega_form(m.box);
            ++forms;
            symmetric += f.symmetric ? 1 : 0;
            nondegenerate += f.nondegenerate ? 1 : 0;
        }
        out.pass[8] = bad == 0;
        out.detail[8] = std::to_string(bad) + " duality failures; omega-form (report only): " + std::to_string(forms) +
                        " modules, " + std::to_string(symmetric) + " symmetric, " + std::to_string(nondegenerate) +
                        " nondegenerate";
    }

    out.total_seconds = since(start);
    return out;
}

void line(std::size_t k, bool ok, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %2zu: %s -- %s\n", ok ? "PASS" : "FAIL", k, what.c_str(), detail.c_str());
}

}  // namespace

int main() {
    const std::array<std::string, kCriteria> names{
        "relation exactness",    "generator spectra",        "shape",
        "action tables",         "flags and recovery",       "round trip",
        "irreducibility",        "linear-algebra lemmas",    "dualities",
    };

    const auto sym = run_suite(symbolic_field());
    const auto spec = run_suite(specialized_field(Rational(2)));

    bool all = true;
    for (std::size_t k = 0; k < kCriteria; ++k) {
        line(k + 1, sym.pass[k], names[k], sym.detail[k]);
        all = all && sym.pass[k];
    }

    bool agree = true;
    for (std::size_t k = 0; k < kCriteria; ++k) agree = agree && sym.pass[k] == spec.pass[k];
    const bool perf = sym.total_seconds < 600 && spec.total_seconds < 30 && agree;
    line(10, perf, "performance",
         "symbolic " + std::to_string(sym.total_seconds) + " s, q=2 " + std::to_string(spec.total_seconds) + " s, " +
             (agree ? "outcomes agree" : "outcomes differ"));
    all = all && perf;

    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
