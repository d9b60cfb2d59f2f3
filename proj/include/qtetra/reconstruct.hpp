#pragma once

// From an A_q pair (X, Y) of type (1,1) to the unique BOXQ module with
// x01 = X and x23 = Y, built from the four flags the pair determines.

#include "qtetra/exactla/burnside.hpp"
#include "qtetra/modanalysis.hpp"
#include "qtetra/repbuilder.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtetra {

/// A failed precondition or postcondition of the reconstruction, tagged
/// with the stage that detected it.
class ReconstructionError : public std::runtime_error {
public:
    ReconstructionError(std::string stage, const std::string& detail)
        : std::runtime_error(stage + ": " + detail), stage_(std::move(stage)) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

namespace stage {
inline const std::string spectrum = "spectrum mismatch";
inline const std::string aq_relations = "AQ relations fail";
inline const std::string irreducibility = "not irreducible";
inline const std::string flags = "flags not mutually opposite";
inline const std::string relations = "relation check fails";
inline const std::string consistency = "consistency";
}  // namespace stage

template <FieldScalar F>
struct AqPairProfile {
    std::size_t d = 0;
    F alpha{1}, alpha_star{1};
    Decomposition<F> dec01, dec23;
};

struct IrreducibilityCertificate {
    bool full = false;
    std::size_t dim = 0;
    std::size_t full_dim = 0;
    bool stabilized = false;
};

template <FieldScalar F>
IrreducibilityCertificate irreducible_pair(const Matrix<F>& x, const Matrix<F>& y) {
    const auto c = algebra_closure_dim<F>({x, y});
    const std::size_t n = x.rows();
    return {c.dim == n * n, c.dim, n * n, c.stabilized};
}

/// Spectra of X and Y must both be {q^(d-2n)} for one d.
template <FieldScalar F>
AqPairProfile<F> aq_pair_profile(const Matrix<F>& x, const Matrix<F>& y, const FieldContext<F>& ctx) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw ReconstructionError(stage::spectrum, "X and Y must be square of equal size");
    TypeDiameter<F> tx, ty;
    try {
        tx = detect_type_diameter(x, ctx);
        ty = detect_type_diameter(y, ctx);
    } catch (const StructuralError& e) {
        throw ReconstructionError(stage::spectrum, e.what());
    }
    if (tx.epsilon != 1 || ty.epsilon != 1) throw ReconstructionError(stage::spectrum, "pair is not of type (1,1)");
    if (tx.d != ty.d)
        throw ReconstructionError(stage::spectrum, "X has diameter " + std::to_string(tx.d) + " but Y has diameter " +
                                                       std::to_string(ty.d));
    return {tx.d, F(1), F(1), std::move(tx.decomposition), std::move(ty.decomposition)};
}

/// The four flags [0]..[3] of a pair: [0] and [1] from X, [2] and [3] from Y.
template <FieldScalar F>
std::array<Flag<F>, 4> pair_flags(const AqPairProfile<F>& p) {
    return {Flag<F>::induced_by(p.dec01), Flag<F>::induced_by(p.dec01.inversion()), Flag<F>::induced_by(p.dec23),
            Flag<F>::induced_by(p.dec23.inversion())};
}

template <FieldScalar F>
MatrixRep<F> reconstruct_boxq(const Matrix<F>& x, const Matrix<F>& y, const FieldContext<F>& ctx) {
    const auto profile = aq_pair_profile(x, y, ctx);
    const std::size_t n = x.rows();

    const auto aq = check_representation(aq_rep(AqPair<F>{x, y}), ctx);
    if (!aq.passed()) throw ReconstructionError(stage::aq_relations, "failing " + aq.failing.front());

    const auto cert = irreducible_pair(x, y);
    if (!cert.full)
        throw ReconstructionError(stage::irreducibility, "words in X, Y span " + std::to_string(cert.dim) + " of " +
                                                             std::to_string(cert.full_dim) + " dimensions");

    const auto flags = pair_flags(profile);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (!check_opposite(flags[a], flags[b]))
                throw ReconstructionError(stage::flags,
                                          "[" + std::to_string(a) + "] and [" + std::to_string(b) + "] are not opposite");

    const auto spectrum = standard_spectrum(1, profile.d, ctx);
    MatrixRep<F> out{AlgebraId::BoxQ, n, {}, {}};
    for (const auto& label : box_labels()) {
        const auto [i, j] = box_indices(label);
        // Oppositeness was verified above, so the intersections exist.
        out.generators[label] = operator_from_decomposition(*check_opposite(flags[i], flags[j]), spectrum);
    }

    const auto report = check_representation(out, ctx);
    if (!report.passed()) throw ReconstructionError(stage::relations, "failing " + report.failing.front());
    if (!(out.at("x01") == x) || !(out.at("x23") == y))
        throw ReconstructionError(stage::consistency, "reconstructed x01, x23 differ from X, Y");
    out.provenance["kind"] = "reconstruction";
    out.provenance["d"] = std::to_string(profile.d);
    return out;
}

template <FieldScalar F>
MatrixRep<F> reconstruct_boxq(const AqPair<F>& p, const FieldContext<F>& ctx) {
    return reconstruct_boxq(p.X, p.Y, ctx);
}

/// The LOOP_EQ module obtained from a BOXQ module through
/// x0 = x02, x1 = x20, y0 = x23, y1 = x01, z0 = x30, z1 = x12.
template <FieldScalar F>
MatrixRep<F> loop_restriction(const MatrixRep<F>& box) {
    if (box.algebra != AlgebraId::BoxQ) throw std::invalid_argument("loop restriction needs a BOXQ module");
    MatrixRep<F> out{AlgebraId::LoopEquitable, box.dimension, {}, box.provenance};
    out.generators["x0"] = box.at("x02");
    out.generators["x1"] = box.at("x20");
    out.generators["y0"] = box.at("x23");
    out.generators["y1"] = box.at("x01");
    out.generators["z0"] = box.at("x30");
    out.generators["z1"] = box.at("x12");
    return out;
}

struct RoundtripReport {
    std::vector<std::string> differing;   // generators whose reconstruction differs
    std::string error;                    // set when reconstruction itself failed

    bool ok() const { return differing.empty() && error.empty(); }
};

/// Reconstructs from (x01, x23) and compares all eight generators entrywise.
template <FieldScalar F>
RoundtripReport roundtrip_verify(const MatrixRep<F>& mod, const FieldContext<F>& ctx) {
    if (mod.algebra != AlgebraId::BoxQ) throw std::invalid_argument("round trip needs a BOXQ module");
    mod.validate();
    RoundtripReport r;
    try {
        const auto rec = reconstruct_boxq(mod.at("x01"), mod.at("x23"), ctx);
        for (const auto& label : box_labels())
            if (!(rec.at(label) == mod.at(label))) r.differing.push_back(label);
    } catch (const ReconstructionError& e) {
        r.error = e.what();
    }
    return r;
}

/// The reconstructed BOXQ module of a loop module, via its A_q pair (y1, y0).
template <FieldScalar F>
MatrixRep<F> boxq_of_loop(const MatrixRep<F>& loop, const FieldContext<F>& ctx) {
    auto out = reconstruct_boxq(aq_pair_of(loop), ctx);
    for (const auto& [k, v] : loop.provenance) out.provenance[k] = v;
    out.provenance["source"] = "reconstruction";
    return out;
}

}  // namespace qtetra
