#pragma once

// Transforms of BOXQ modules: rho-twists, the sign twist, the dual through
// omega, rescaling of A_q pairs, the table of isomorphisms among the eight
// twisted and dual structures, and the omega-invariant bilinear form solver.

#include "qtetra/exactla/intertwiner.hpp"
#include "qtetra/repbuilder.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qtetra {

/// rho^n(x_ij) = x_(i+n, j+n)
inline std::string rho_label(const std::string& label, int n) {
    const auto [i, j] = box_indices(label);
    return box_label(i + n, j + n);
}

/// The antiautomorphism omega on generator labels.
inline const std::string& omega_label(const std::string& label) {
    static const std::map<std::string, std::string> table = {
        {"x01", "x01"}, {"x12", "x30"}, {"x23", "x23"}, {"x30", "x12"},
        {"x02", "x31"}, {"x13", "x20"}, {"x20", "x13"}, {"x31", "x02"},
    };
    auto it = table.find(label);
    if (it == table.end()) throw std::invalid_argument("not a generator label: " + label);
    return it->second;
}

namespace detail {

template <FieldScalar F>
void require_boxq(const MatrixRep<F>& mod) {
    if (mod.algebra != AlgebraId::BoxQ) throw std::invalid_argument("expected a BOXQ module");
    mod.validate();
}

}  // namespace detail

/// New x_ij acts as the old x_(i+n, j+n).
template <FieldScalar F>
MatrixRep<F> twist_rho(const MatrixRep<F>& mod, int n) {
    detail::require_boxq(mod);
    MatrixRep<F> out{AlgebraId::BoxQ, mod.dimension, {}, mod.provenance};
    for (const auto& label : box_labels()) out.generators[label] = mod.at(rho_label(label, n));
    out.provenance["twist"] = std::to_string(z4(n));
    return out;
}

/// Dual module in the dual basis: new x_ij = transpose of old omega(x_ij).
template <FieldScalar F>
MatrixRep<F> dual_module(const MatrixRep<F>& mod) {
    detail::require_boxq(mod);
    MatrixRep<F> out{AlgebraId::BoxQ, mod.dimension, {}, mod.provenance};
    for (const auto& label : box_labels()) out.generators[label] = mod.at(omega_label(label)).transpose();
    out.provenance["dual"] = mod.provenance.count("dual") && mod.provenance.at("dual") == "1" ? "0" : "1";
    return out;
}

/// Sign twist: every generator negated.
template <FieldScalar F>
MatrixRep<F> negate(const MatrixRep<F>& mod) {
    mod.validate();
    MatrixRep<F> out = mod;
    for (auto& [label, m] : out.generators) m = -m;
    return out;
}

/// (X / alpha, Y / alpha_star)
template <FieldScalar F>
AqPair<F> rescale(const Matrix<F>& x, const Matrix<F>& y, const F& alpha, const F& alpha_star) {
    if (is_zero(alpha) || is_zero(alpha_star)) throw std::invalid_argument("rescaling factors must be nonzero");
    return {(F(1) / alpha) * x, (F(1) / alpha_star) * y};
}

/// Structures V rho^n (rows/columns 0..3) and V* rho^n (4..7).
template <FieldScalar F>
struct EightfoldTable {
    std::array<std::string, 8> names;
    std::array<std::array<bool, 8>, 8> isomorphic{};
    std::array<MatrixRep<F>, 8> modules;
};

template <FieldScalar F>
EightfoldTable<F> eightfold_comparison(const MatrixRep<F>& mod) {
    detail::require_boxq(mod);
    EightfoldTable<F> t;
    const auto dual = dual_module(mod);
    for (int n = 0; n < 4; ++n) {
        t.modules[n] = twist_rho(mod, n);
        t.names[n] = "V.rho" + std::to_string(n);
        t.modules[4 + n] = twist_rho(dual, n);
        t.names[4 + n] = "V*.rho" + std::to_string(n);
    }
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            t.isomorphic[a][b] = a == b || intertwiner_space(t.modules[a], t.modules[b]).isomorphic();
    return t;
}

template <FieldScalar F>
struct BilinearFormCandidate {
    std::size_t solution_space_dim = 0;
    std::optional<Matrix<F>> gram;    // first canonical basis solution
    bool symmetric = false;
    bool nondegenerate = false;
    bool witness_identity = false;    // G^-1 M(g)^T G = M(omega(g)) for all g; only when nondegenerate
};

/// Solves M(g)^T G = G M(omega(g)) over all eight generators.
template <FieldScalar F>
BilinearFormCandidate<F> omega_form(const MatrixRep<F>& mod) {
    detail::require_boxq(mod);
    const std::size_t n = mod.dimension;
    std::vector<std::pair<Matrix<F>, Matrix<F>>> pairs;
    for (const auto& label : box_labels()) pairs.emplace_back(mod.at(label).transpose(), mod.at(omega_label(label)));
    IntertwinerSpace<F> space;
    space.dimension = n;
    space.basis = solve_commuting(pairs, n, n);
    BilinearFormCandidate<F> out;
    const auto canonical = space.as_subspace();
    out.solution_space_dim = canonical.dim();
    if (canonical.is_zero()) return out;
    const auto v = canonical.basis().front();
    Matrix<F> g(n, n);
    for (std::size_t k = 0; k < n * n; ++k) g(k / n, k % n) = v[k];
    out.symmetric = g == g.transpose();
    const auto g_inv = inverse(g);
    out.nondegenerate = g_inv.has_value();
    if (g_inv) {
        out.witness_identity = true;
        for (const auto& label : box_labels())
            if (!(*g_inv * mod.at(label).transpose() * g == mod.at(omega_label(label)))) out.witness_identity = false;
    }
    out.gram = std::move(g);
    return out;
}

}  // namespace qtetra
