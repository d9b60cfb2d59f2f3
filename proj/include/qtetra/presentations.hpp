#pragma once

// Defining relations of the q-tetrahedron algebra and of the three related
// presented algebras (equitable U_q(sl2), equitable U_q(L(sl2)), A_q), and an
// exact checker that evaluates them on matrix assignments.
//
// Relations are kept in their displayed normalization: the q-Weyl relation
// (q AB - q^-1 BA)/(q - q^-1) = 1 is stored as that expression minus 1.

#include "qtetra/rep.hpp"
#include "qtetra/scalars/text.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtetra {

template <FieldScalar F>
struct RelationTerm {
    F coeff;
    std::vector<std::string> word;
};

/// sum_k coeff_k * word_k + constant * 1, which must vanish.
template <FieldScalar F>
struct RelationWord {
    std::string id;
    std::vector<RelationTerm<F>> terms;
    F constant = F(0);
};

namespace detail {

template <FieldScalar F>
RelationWord<F> q_weyl(std::string id, const std::string& a, const std::string& b, const FieldContext<F>& ctx) {
    const F denom = ctx.q_diff();
    return {std::move(id),
            {{ctx.q / denom, {a, b}}, {-(ctx.q_power(-1) / denom), {b, a}}},
            F(-1)};
}

template <FieldScalar F>
RelationWord<F> inverse_pair(std::string id, const std::string& a, const std::string& b) {
    return {std::move(id), {{F(1), {a, b}}}, F(-1)};
}

/// a^3 b - [3] a^2 b a + [3] a b a^2 - b a^3
template <FieldScalar F>
RelationWord<F> q_serre(std::string id, const std::string& a, const std::string& b, const FieldContext<F>& ctx) {
    const F q3 = ctx.q_int(3);
    return {std::move(id),
            {{F(1), {a, a, a, b}}, {-q3, {a, a, b, a}}, {q3, {a, b, a, a}}, {F(-1), {b, a, a, a}}},
            F(0)};
}

}  // namespace detail

/// Relation set of the given algebra: 20 for BOXQ, 5 for UQSL2_EQ,
/// 14 for LOOP_EQ, 2 for AQ.
template <FieldScalar F>
std::vector<RelationWord<F>> relations(AlgebraId algebra, const FieldContext<F>& ctx) {
    using detail::inverse_pair;
    using detail::q_serre;
    using detail::q_weyl;
    std::vector<RelationWord<F>> out;
    switch (algebra) {
        case AlgebraId::BoxQ: {
            for (int i : {0, 1, 2, 3}) {
                const std::string a = box_label(i, i + 2), b = box_label(i + 2, i);
                out.push_back(inverse_pair<F>("boxq.inv." + a.substr(1), a, b));
            }
            static constexpr std::pair<int, int> patterns[] = {{1, 1}, {1, 2}, {2, 1}};
            for (int h : {0, 1, 2, 3})
                for (auto [di, dj] : patterns) {
                    const int i = h + di, j = i + dj;
                    out.push_back(q_weyl("boxq.weyl.h" + std::to_string(h) + ".p" + std::to_string(di) +
                                             std::to_string(dj),
                                         box_label(h, i), box_label(i, j), ctx));
                }
            for (int h : {0, 1, 2, 3})
                out.push_back(q_serre("boxq.serre.h" + std::to_string(h), box_label(h, h + 1),
                                      box_label(h + 2, h + 3), ctx));
            break;
        }
        case AlgebraId::UqSl2Equitable:
            out.push_back(inverse_pair<F>("uq.inv.left", "x", "x_inv"));
            out.push_back(inverse_pair<F>("uq.inv.right", "x_inv", "x"));
            out.push_back(q_weyl("uq.weyl.xy", "x", "y", ctx));
            out.push_back(q_weyl("uq.weyl.yz", "y", "z", ctx));
            out.push_back(q_weyl("uq.weyl.zx", "z", "x", ctx));
            break;
        case AlgebraId::LoopEquitable:
            out.push_back(inverse_pair<F>("loop.inv.01", "x0", "x1"));
            out.push_back(inverse_pair<F>("loop.inv.10", "x1", "x0"));
            for (std::string i : {"0", "1"}) {
                out.push_back(q_weyl("loop.weyl.xy." + i, "x" + i, "y" + i, ctx));
                out.push_back(q_weyl("loop.weyl.yz." + i, "y" + i, "z" + i, ctx));
                out.push_back(q_weyl("loop.weyl.zx." + i, "z" + i, "x" + i, ctx));
            }
            out.push_back(q_weyl("loop.weyl.zy.01", "z0", "y1", ctx));
            out.push_back(q_weyl("loop.weyl.zy.10", "z1", "y0", ctx));
            out.push_back(q_serre("loop.serre.y.01", "y0", "y1", ctx));
            out.push_back(q_serre("loop.serre.y.10", "y1", "y0", ctx));
            out.push_back(q_serre("loop.serre.z.01", "z0", "z1", ctx));
            out.push_back(q_serre("loop.serre.z.10", "z1", "z0", ctx));
            break;
        case AlgebraId::Aq:
            out.push_back(q_serre("aq.serre.xy", "x", "y", ctx));
            out.push_back(q_serre("aq.serre.yx", "y", "x", ctx));
            break;
    }
    return out;
}

/// Relation with every label replaced through `label_map`, words optionally
/// reversed (for antiautomorphisms) and each word multiplied by sign^length.
template <FieldScalar F>
RelationWord<F> transform_relation(const RelationWord<F>& rel, const std::map<std::string, std::string>& label_map,
                                   bool reverse_words = false, int generator_sign = 1) {
    RelationWord<F> out{rel.id, {}, rel.constant};
    for (const auto& t : rel.terms) {
        RelationTerm<F> nt{t.coeff, {}};
        for (const auto& l : t.word) nt.word.push_back(label_map.at(l));
        if (reverse_words) std::reverse(nt.word.begin(), nt.word.end());
        if (generator_sign < 0 && t.word.size() % 2 == 1) nt.coeff = -nt.coeff;
        out.terms.push_back(std::move(nt));
    }
    return out;
}

/// Equality of relations as formal linear combinations (ids and term order ignored).
template <FieldScalar F>
bool same_relation(const RelationWord<F>& a, const RelationWord<F>& b) {
    if (!(a.constant == b.constant) || a.terms.size() != b.terms.size()) return false;
    auto by_word = [](const RelationTerm<F>& x, const RelationTerm<F>& y) { return x.word < y.word; };
    auto ta = a.terms, tb = b.terms;
    std::sort(ta.begin(), ta.end(), by_word);
    std::sort(tb.begin(), tb.end(), by_word);
    for (std::size_t k = 0; k < ta.size(); ++k)
        if (ta[k].word != tb[k].word || !(ta[k].coeff == tb[k].coeff)) return false;
    return true;
}

template <FieldScalar F>
Matrix<F> evaluate_relation(const RelationWord<F>& rel, const MatrixRep<F>& rep) {
    const std::size_t n = rep.dimension;
    Matrix<F> acc(n, n);
    for (const auto& t : rel.terms) {
        if (is_zero(t.coeff)) continue;
        Matrix<F> prod = Matrix<F>::identity(n);
        for (const auto& l : t.word) prod = prod * rep.at(l);
        acc += t.coeff * prod;
    }
    if (!is_zero(rel.constant))
        for (std::size_t i = 0; i < n; ++i) acc(i, i) = acc(i, i) + rel.constant;
    return acc;
}

inline long scalar_degree(const RationalFunction& x) {
    return std::max(x.numerator().degree(), x.denominator().degree());
}
inline long scalar_degree(const Rational&) { return 0; }

template <FieldScalar F>
struct RelationResidual {
    std::string id;
    Matrix<F> residual;
    bool zero = true;
};

template <FieldScalar F>
struct CheckReport {
    AlgebraId algebra = AlgebraId::BoxQ;
    std::vector<RelationResidual<F>> residuals;
    std::vector<std::string> failing;
    long max_residual_degree = -1;  // over nonzero residual entries; -1 when all vanish

    bool passed() const { return failing.empty(); }
};

/// Evaluates every relation of the algebra on the assignment.
template <FieldScalar F>
CheckReport<F> check_representation(AlgebraId algebra, const MatrixRep<F>& rep, const FieldContext<F>& ctx) {
    if (rep.algebra != algebra) throw std::invalid_argument("assignment belongs to " + to_string(rep.algebra));
    rep.validate();
    CheckReport<F> report;
    report.algebra = algebra;
    for (const auto& rel : relations(algebra, ctx)) {
        RelationResidual<F> r{rel.id, evaluate_relation(rel, rep), true};
        for (const auto& x : r.residual.entries())
            if (!is_zero(x)) {
                r.zero = false;
                report.max_residual_degree = std::max(report.max_residual_degree, scalar_degree(x));
            }
        if (!r.zero) report.failing.push_back(rel.id);
        report.residuals.push_back(std::move(r));
    }
    return report;
}

template <FieldScalar F>
CheckReport<F> check_representation(const MatrixRep<F>& rep, const FieldContext<F>& ctx) {
    return check_representation(rep.algebra, rep, ctx);
}

}  // namespace qtetra
