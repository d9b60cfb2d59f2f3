#pragma once

// Concrete modules: the (d+1)-dimensional U_q(sl2) module in equitable form,
// evaluation modules for the loop algebra, their tensor products, and the
// A_q pair (y1, y0) read off a loop module.

#include "qtetra/exactla/matrix.hpp"
#include "qtetra/presentations.hpp"
#include "qtetra/rep.hpp"

#include <stdexcept>
#include <string>

namespace qtetra {

/// Chevalley form of the irreducible U_q(sl2) module of highest weight d on
/// basis v_0..v_d: K v_n = q^(d-2n) v_n, e+ v_n = [n] v_(n-1), e- v_n = [d-n] v_(n+1).
template <FieldScalar F>
struct StandardUqData {
    unsigned d = 0;
    Matrix<F> K, K_inv, e_plus, e_minus;
};

template <FieldScalar F>
StandardUqData<F> standard_uq_data(unsigned d, const FieldContext<F>& ctx) {
    const std::size_t n = d + 1;
    StandardUqData<F> s{d, Matrix<F>(n, n), Matrix<F>(n, n), Matrix<F>(n, n), Matrix<F>(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        const long w = static_cast<long>(d) - 2 * static_cast<long>(k);
        s.K(k, k) = ctx.q_power(w);
        s.K_inv(k, k) = ctx.q_power(-w);
        if (k >= 1) s.e_plus(k - 1, k) = ctx.q_int(static_cast<unsigned>(k));
        if (k + 1 < n) s.e_minus(k + 1, k) = ctx.q_int(d - static_cast<unsigned>(k));
    }
    return s;
}

/// Chevalley generators K_i, e_i^+, e_i^- (i = 0, 1) of a loop algebra module.
template <FieldScalar F>
struct LoopChevalley {
    Matrix<F> K[2], K_inv[2], e_plus[2], e_minus[2];

    std::size_t dimension() const { return K[1].rows(); }
};

namespace detail {

// y -> K^-1 + e-,  z -> K^-1 - K^-1 e+ q (q - q^-1)^2
template <FieldScalar F>
std::pair<Matrix<F>, Matrix<F>> equitable_yz(const Matrix<F>& k_inv, const Matrix<F>& e_plus,
                                             const Matrix<F>& e_minus, const FieldContext<F>& ctx) {
    const F qd = ctx.q_diff();
    const F c = ctx.q * qd * qd;
    return {k_inv + e_minus, k_inv - c * (k_inv * e_plus)};
}

}  // namespace detail

template <FieldScalar F>
MatrixRep<F> uqsl2_equitable_module(unsigned d, const FieldContext<F>& ctx) {
    const auto s = standard_uq_data(d, ctx);
    auto [y, z] = detail::equitable_yz(s.K_inv, s.e_plus, s.e_minus, ctx);
    MatrixRep<F> rep{AlgebraId::UqSl2Equitable, d + 1u, {}, {}};
    rep.generators["x"] = s.K;
    rep.generators["x_inv"] = s.K_inv;
    rep.generators["y"] = std::move(y);
    rep.generators["z"] = std::move(z);
    rep.provenance["kind"] = "uqsl2";
    rep.provenance["d"] = std::to_string(d);
    return rep;
}

/// Evaluation data: family 1 is the standard module, family 0 is obtained by
/// K_0 = K^-1, e_0^+ = t e^-, e_0^- = t^-1 e^+.
template <FieldScalar F>
LoopChevalley<F> evaluation_chevalley(unsigned d, const F& t, const FieldContext<F>& ctx) {
    if (is_zero(t)) throw std::invalid_argument("evaluation parameter t must be nonzero");
    const auto s = standard_uq_data(d, ctx);
    LoopChevalley<F> c;
    c.K[1] = s.K;
    c.K_inv[1] = s.K_inv;
    c.e_plus[1] = s.e_plus;
    c.e_minus[1] = s.e_minus;
    c.K[0] = s.K_inv;
    c.K_inv[0] = s.K;
    c.e_plus[0] = t * s.e_minus;
    c.e_minus[0] = (F(1) / t) * s.e_plus;
    return c;
}

/// x_i -> K_i, y_i -> K_i^-1 + e_i^-, z_i -> K_i^-1 - K_i^-1 e_i^+ q (q - q^-1)^2.
template <FieldScalar F>
MatrixRep<F> loop_equitable(const LoopChevalley<F>& c, const FieldContext<F>& ctx) {
    MatrixRep<F> rep{AlgebraId::LoopEquitable, c.dimension(), {}, {}};
    for (int i : {0, 1}) {
        const std::string s = std::to_string(i);
        auto [y, z] = detail::equitable_yz(c.K_inv[i], c.e_plus[i], c.e_minus[i], ctx);
        rep.generators["x" + s] = c.K[i];
        rep.generators["y" + s] = std::move(y);
        rep.generators["z" + s] = std::move(z);
    }
    return rep;
}

/// Recovers the Chevalley generators of a LOOP_EQ assignment through the
/// inverse isomorphism K_i = x_i, e_i^- = y_i - x_i^-1,
/// e_i^+ = (1 - x_i z_i) q^-1 (q - q^-1)^-2.
template <FieldScalar F>
LoopChevalley<F> chevalley_of(const MatrixRep<F>& rep, const FieldContext<F>& ctx) {
    if (rep.algebra != AlgebraId::LoopEquitable)
        throw std::invalid_argument("Chevalley data requires a LOOP_EQ module, got " + to_string(rep.algebra));
    rep.validate();
    const std::size_t n = rep.dimension;
    const auto id = Matrix<F>::identity(n);
    const F qd = ctx.q_diff();
    const F c = F(1) / (ctx.q * qd * qd);
    LoopChevalley<F> out;
    for (int i : {0, 1}) {
        const std::string s = std::to_string(i);
        const auto& x = rep.at("x" + s);
        const auto& x_inv = rep.at("x" + std::to_string(1 - i));
        if (!(x * x_inv == id)) throw std::invalid_argument("LOOP_EQ module lacks Chevalley data: x0 x1 != 1");
        out.K[i] = x;
        out.K_inv[i] = x_inv;
        out.e_minus[i] = rep.at("y" + s) - x_inv;
        out.e_plus[i] = c * (id - x * rep.at("z" + s));
    }
    return out;
}

template <FieldScalar F>
MatrixRep<F> evaluation_module(unsigned d, const F& t, const FieldContext<F>& ctx) {
    auto rep = loop_equitable(evaluation_chevalley(d, t, ctx), ctx);
    rep.provenance["kind"] = "evaluation";
    rep.provenance["d"] = std::to_string(d);
    rep.provenance["t"] = to_string(t);
    rep.provenance["label"] = "Ev(" + std::to_string(d) + "," + to_string(t) + ")";
    return rep;
}

/// Tensor product through Δ(K) = K⊗K, Δ(e+) = e+⊗1 + K⊗e+,
/// Δ(e-) = e-⊗K^-1 + 1⊗e-, basis ordered with the left factor major.
template <FieldScalar F>
MatrixRep<F> tensor_modules(const MatrixRep<F>& a, const MatrixRep<F>& b, const FieldContext<F>& ctx) {
    const auto ca = chevalley_of(a, ctx);
    const auto cb = chevalley_of(b, ctx);
    const auto ia = Matrix<F>::identity(a.dimension);
    const auto ib = Matrix<F>::identity(b.dimension);
    LoopChevalley<F> c;
    for (int i : {0, 1}) {
        c.K[i] = kron(ca.K[i], cb.K[i]);
        c.K_inv[i] = kron(ca.K_inv[i], cb.K_inv[i]);
        c.e_plus[i] = kron(ca.e_plus[i], ib) + kron(ca.K[i], cb.e_plus[i]);
        c.e_minus[i] = kron(ca.e_minus[i], cb.K_inv[i]) + kron(ia, cb.e_minus[i]);
    }
    auto rep = loop_equitable(c, ctx);
    auto label = [](const MatrixRep<F>& m) {
        auto it = m.provenance.find("label");
        return it == m.provenance.end() ? std::string("?") : it->second;
    };
    rep.provenance["kind"] = "tensor";
    rep.provenance["label"] = "(" + label(a) + " x " + label(b) + ")";
    return rep;
}

/// The standard generators of A_q acting on a loop module: x = y1, y = y0.
template <FieldScalar F>
struct AqPair {
    Matrix<F> X, Y;
};

template <FieldScalar F>
AqPair<F> aq_pair_of(const MatrixRep<F>& loop) {
    if (loop.algebra != AlgebraId::LoopEquitable) throw std::invalid_argument("A_q pair requires a LOOP_EQ module");
    return {loop.at("y1"), loop.at("y0")};
}

template <FieldScalar F>
MatrixRep<F> aq_rep(const AqPair<F>& p) {
    if (!p.X.is_square() || !(p.X.rows() == p.Y.rows() && p.Y.is_square()))
        throw std::invalid_argument("A_q pair needs square matrices of equal size");
    MatrixRep<F> rep{AlgebraId::Aq, p.X.rows(), {}, {}};
    rep.generators["x"] = p.X;
    rep.generators["y"] = p.Y;
    return rep;
}

template <FieldScalar F>
AqPair<F> aq_pair_of_rep(const MatrixRep<F>& rep) {
    if (rep.algebra == AlgebraId::LoopEquitable) return aq_pair_of(rep);
    if (rep.algebra == AlgebraId::Aq) return {rep.at("x"), rep.at("y")};
    throw std::invalid_argument("expected an AQ pair or a LOOP_EQ module");
}

}  // namespace qtetra
