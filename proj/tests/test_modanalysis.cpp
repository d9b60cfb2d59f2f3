#include "qtetra/dualities.hpp"
#include "qtetra/modanalysis.hpp"
#include "qtetra/reconstruct.hpp"

#include <gtest/gtest.h>

using namespace qtetra;
using RF = RationalFunction;
using M = Matrix<RF>;
using S = Subspace<RF>;

namespace {

const auto ctx = symbolic_field();
const RF q = RF::q();
const RF qi = RF::q_power(-1);

S span1(RF a, RF b) { return S::span({{a, b}}, 2); }

MatrixRep<RF> ev_box(unsigned d, const RF& t) { return boxq_of_loop(evaluation_module(d, t, ctx), ctx); }

MatrixRep<RF> trivial_box() {
    MatrixRep<RF> m{AlgebraId::BoxQ, 1, {}, {}};
    for (const auto& l : box_labels()) m.generators[l] = M::identity(1);
    return m;
}

MatrixRep<RF> tensor_box() {
    return boxq_of_loop(tensor_modules(evaluation_module(1, RF(1), ctx), evaluation_module(1, RF(3), ctx), ctx), ctx);
}

}  // namespace

TEST(TypeDiameter, Examples) {
    auto one = detect_type_diameter(M::identity(1), ctx);
    EXPECT_EQ(one.epsilon, 1);
    EXPECT_EQ(one.d, 0u);
    EXPECT_EQ(one.decomposition.components[0], S::full(1));

    auto x = detect_type_diameter(M{{qi, RF(0)}, {RF(1), q}}, ctx);
    EXPECT_EQ(x.epsilon, 1);
    EXPECT_EQ(x.d, 1u);
    EXPECT_EQ(x.decomposition.components[0], span1(RF(0), RF(1)));
    EXPECT_EQ(x.decomposition.components[1], span1(qi - q, RF(1)));

    EXPECT_THROW(detect_type_diameter(M{{RF(0), RF(1)}, {RF(0), RF(0)}}, ctx), StructuralError);
}

TEST(TypeDiameter, NegativeTypeAndGaps) {
    auto neg = detect_type_diameter(M::diagonal({-q, -qi}), ctx);
    EXPECT_EQ(neg.epsilon, -1);
    EXPECT_EQ(neg.d, 1u);
    // q^2 and q^-2 without the middle eigenvalue 1.
    EXPECT_THROW(detect_type_diameter(M::diagonal({q * q, qi * qi}), ctx), StructuralError);
    // Not semisimple: a Jordan block at q.
    EXPECT_THROW(detect_type_diameter(M{{q, RF(1)}, {RF(0), q}}, ctx), StructuralError);
}

TEST(TypeDiameter, SpecializedMode) {
    const auto at2 = specialized_field(Rational(2));
    auto r = detect_type_diameter(Matrix<Rational>::diagonal({Rational(4), Rational(1), Rational(1, 4)}), at2);
    EXPECT_EQ(r.d, 2u);
    EXPECT_EQ(r.epsilon, 1);
}

TEST(Decomposition, EvaluationModuleByHand) {
    const auto box = ev_box(1, q);
    const auto d01 = decomposition_ij(box, 0, 1, ctx);
    EXPECT_EQ(d01.components[0], span1(RF(0), RF(1)));
    EXPECT_EQ(d01.components[1], span1(qi - q, RF(1)));
    const auto d02 = decomposition_ij(box, 0, 2, ctx);
    EXPECT_EQ(d02.components[0], span1(RF(0), RF(1)));
    EXPECT_EQ(d02.components[1], span1(RF(1), RF(0)));
    EXPECT_EQ(box.at("x02"), M::diagonal({qi, q}));
}

TEST(Decomposition, TrivialModule) {
    const auto box = trivial_box();
    for (const auto& l : box_labels()) {
        const auto [i, j] = box_indices(l);
        EXPECT_EQ(decomposition_ij(box, i, j, ctx).components, std::vector<S>{S::full(1)});
    }
}

TEST(Decomposition, NegativeTypeAsksForSignTwist) {
    const auto neg = negate(ev_box(1, q));
    try {
        decomposition_ij(neg, 0, 1, ctx);
        FAIL() << "expected a structural error";
    } catch (const StructuralError& e) {
        EXPECT_NE(std::string(e.what()).find("negate"), std::string::npos);
    }
}

TEST(Decomposition, OppositeOffsetIsInversion) {
    for (const auto& box : {ev_box(2, q), tensor_box()}) {
        const auto sp = box_spectra(box, ctx);
        for (int i = 0; i < 4; ++i) EXPECT_EQ(sp.at(i, i + 2), sp.at(i + 2, i).inversion()) << i;
    }
}

TEST(Shape, Examples) {
    EXPECT_EQ(shape_of(ev_box(1, q), ctx).shape, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(shape_of(trivial_box(), ctx).shape, (std::vector<std::size_t>{1}));
    const auto t = shape_of(tensor_box(), ctx);
    EXPECT_EQ(t.shape, (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_TRUE(t.ok());
}

TEST(Shape, ProfileSumsToDimension) {
    for (unsigned d = 0; d <= 3; ++d) {
        const auto box = ev_box(d, q + RF(1));
        const auto p = profile_of(box_spectra(box, ctx));
        std::size_t total = 0;
        for (auto r : p.shape) total += r;
        EXPECT_EQ(total, box.dimension);
        EXPECT_EQ(p.d, d);
        EXPECT_EQ(p.epsilon, 1);
    }
}

TEST(Shape, MismatchedGeneratorsReported) {
    auto box = ev_box(1, q);
    box.generators["x13"] = M::diagonal({q * q, qi * qi * q * q});  // spectrum {q^2, 1}
    EXPECT_THROW(box_spectra(box, ctx), StructuralError);
}

TEST(Flags, EvaluationModuleByHand) {
    const auto sp = box_spectra(ev_box(1, q), ctx);
    const auto f0 = flag_of(sp, 0);
    EXPECT_EQ(f0.components[0], span1(RF(0), RF(1)));
    EXPECT_EQ(f0.components[1], S::full(2));
    const auto f2 = flag_of(sp, 2);
    EXPECT_EQ(f2.components[0], span1(RF(1), RF(0)));
    EXPECT_EQ(flag_of(box_spectra(trivial_box(), ctx), 0).components.size(), 1u);
}

TEST(Flags, InconsistentModuleFailsLoudly) {
    auto box = ev_box(1, q);
    box.generators["x02"] = box.at("x20");  // swaps the two eigenlines of [0,2]
    const auto sp = box_spectra(box, ctx);
    EXPECT_THROW(flag_of(sp, 0), StructuralError);
    EXPECT_FALSE(check_flags(sp).ok());
}

TEST(Opposite, Examples) {
    const auto sp = box_spectra(ev_box(1, q), ctx);
    const auto f0 = flag_of(sp, 0), f1 = flag_of(sp, 1), f3 = flag_of(sp, 3);
    const auto d = check_opposite(f0, f1);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->components[0], span1(RF(0), RF(1)));
    EXPECT_EQ(d->components[1], span1(qi - q, RF(1)));
    EXPECT_FALSE(check_opposite(f0, f0));
    EXPECT_TRUE(check_opposite(f1, f3));
    EXPECT_THROW(check_opposite(f0, flag_of(box_spectra(trivial_box(), ctx), 0)), std::invalid_argument);
}

TEST(Opposite, FourFlagsRecoverEveryDecomposition) {
    for (const auto& box : {ev_box(2, q), ev_box(3, RF(1)), tensor_box()}) {
        const auto r = check_flags(box_spectra(box, ctx));
        EXPECT_TRUE(r.ok());
        EXPECT_EQ(r.pairs_checked, 6u);
        EXPECT_EQ(r.decompositions_recovered, 8u);
    }
}

TEST(ActionTables, PassOnValidModules) {
    for (const auto& box : {trivial_box(), ev_box(1, q), ev_box(2, q + RF(1)), tensor_box()}) {
        const auto r = check_action_tables(box, ctx);
        EXPECT_TRUE(r.ok());
        EXPECT_EQ(r.containments_checked, 12u * 4u * (box_spectra(box, ctx).d + 1));
    }
}

TEST(ActionTables, CorruptedModuleReportsViolations) {
    auto box = ev_box(1, q);
    box.generators["x01"](1, 0) = RF(2);  // spectrum kept, eigenvectors moved
    const auto r = check_action_tables(box, ctx);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.violations.empty());
}

TEST(DimensionChain, Examples) {
    const auto box = ev_box(1, q);
    const auto c = check_dimension_chain(box, q);
    EXPECT_TRUE(c.ok());
    for (auto k : c.dims) EXPECT_EQ(k, 1u);
    const auto none = check_dimension_chain(box, RF::q_power(5));
    EXPECT_TRUE(none.ok());
    for (auto k : none.dims) EXPECT_EQ(k, 0u);
    const auto t = check_dimension_chain(tensor_box(), RF(1));
    EXPECT_TRUE(t.ok());
    for (auto k : t.dims) EXPECT_EQ(k, 2u);
}

TEST(Lemmas, HoldOnConstructedModules) {
    for (unsigned d = 0; d <= 3; ++d) {
        const auto r = check_linear_algebra_lemmas(ev_box(d, q), d, ctx);
        EXPECT_TRUE(r.ok()) << d;
        EXPECT_EQ(r.arrows_checked, 7u);
        EXPECT_EQ(r.eigenvalues_checked, d + 1);
    }
    EXPECT_TRUE(check_linear_algebra_lemmas(tensor_box(), 2, ctx).ok());
}

TEST(Lemmas, QWeylPairIdentitiesOnRandomConjugates) {
    // (x02, x23) is an arrow; the identities survive any change of basis.
    const auto box = ev_box(2, q);
    M p{{RF(1), RF(2), RF(0)}, {RF(0), RF(1), RF(-1)}, {RF(1), RF(0), RF(1)}};
    const M pinv = *inverse(p);
    const M a = p * box.at("x02") * pinv, b = p * box.at("x23") * pinv;
    for (long k : {-2, 0, 2}) {
        const RF theta = RF::q_power(k);
        EXPECT_TRUE(q_weyl_sum_identity(a, b, theta, ctx));
        EXPECT_TRUE(q_weyl_dimension_identity(a, b, theta));
    }
}
