#include <gtest/gtest.h>

#include "specpot/error.hpp"
#include "specpot/families.hpp"
#include "support.hpp"

using namespace specpot;
using namespace specpot::test;

namespace {

RatFun anharmonic_V() {
    RatFun f = q(2) * z * z + q(1);
    return -z * z - q(2) - q(8) / f + q(16) / (f * f);
}

RatFun fusion_V() {
    RatFun f = z * z + q(2) * z + q(2);
    return q(1) / z - q(4) / f + q(8) / (f * f);
}

PotentialResult fusion() {
    return eval_nu(gen_family2(std::vector<NodeSpec2>{{0, -1}, {1, 1}}, nu), make_rational(-1, 2));
}

} // namespace

TEST(Gauge, HOfExamples) {
    auto anh = gen_family1(std::vector<NodeSpec1>{{1, 1, 1}}, make_rational(-3, 4));
    EXPECT_EQ(H_of(GaugeCase::C1, *anh.M, q(-3, 4)), (E - q(3)) * z * z);
    auto fus = fusion();
    RatFun f = z * z + q(2) * z + q(2);
    EXPECT_EQ(*fus.H, f * f * pow(q(4) * E + q(1), 2) / (q(4) * z * z));
    RatFun M3 = (q(2) * E * z * z + E * b - q(2)) / (q(4) * z);
    EXPECT_EQ(H_of(GaugeCase::C3, M3, RatFun()), q(1, 4) * E * E * pow(q(2) * z * z + b, 2));
}

TEST(Gauge, StructureExamples) {
    auto anh = gen_family1(std::vector<NodeSpec1>{{1, 1, 1}}, make_rational(-3, 4));
    const HStructure& s = *anh.structure;
    EXPECT_EQ(RatFun(s.w), E - q(3));
    ASSERT_EQ(s.roots.size(), 1u);
    EXPECT_EQ(s.roots[0].value, q(3));

    auto fus = fusion();
    EXPECT_EQ(RatFun(fus.structure->w).num().primitive(), pow(q(4) * E + q(1), 2).num());
    ASSERT_EQ(fus.structure->roots.size(), 1u);
    EXPECT_EQ(fus.structure->roots[0].value, q(-1, 4));
    EXPECT_EQ(fus.structure->roots[0].multiplicity, 2u);
}

TEST(Gauge, MixedFactorIsRejected) {
    RatFun H = (z * z + E) * z;
    EXPECT_THROW(check_H_structure(H, z), MixedFactor);
}

TEST(Gauge, DegreeBoundViolated) {
    RatFun M = (E * z + q(1)) / z;
    EXPECT_THROW(check_H_structure(E * z * z, M), DegreeBoundViolated);
}

TEST(Gauge, SingularConventions) {
    EXPECT_EQ(V_of(GaugeCase::C3, std::nullopt, nu), (q(1, 4) - nu * nu) / (z * z));
    EXPECT_EQ(V_of(GaugeCase::C4, std::nullopt, q(1, 3)), z);
}

TEST(Gauge, ResidualNegativeControl) {
    auto anh = gen_family1(std::vector<NodeSpec1>{{1, 1, 1}}, make_rational(-3, 4));
    EXPECT_FALSE(ode_residual_generic(GaugeCase::C1, anh.M, anh.V, anh.nu));
    EXPECT_TRUE(ode_residual_generic(GaugeCase::C1, anh.M, anh.V + q(1) / z, anh.nu));
    PotentialResult broken = anh;
    broken.V = anh.V + q(1) / z;
    EXPECT_THROW(verify(broken), NonzeroResidual);
}

TEST(Families, Anharmonic) {
    auto sym = gen_family1(std::vector<NodeSpec1>{{1, 1, 1}}, nu);
    auto anh = eval_nu(sym, make_rational(-3, 4));
    EXPECT_EQ(anh.V, anharmonic_V());
    EXPECT_EQ(gen_family1(std::vector<NodeSpec1>{{1, 1, 1}}, make_rational(-3, 4)).V, anharmonic_V());
}

TEST(Families, EmptyNodeListsAreSingular) {
    EXPECT_EQ(gen_family1({}, nu).V, -z * z + (q(1, 4) - q(4) * nu * nu) / (z * z));
    EXPECT_EQ(gen_family2({}, nu).V, q(1) / z + (q(1, 4) - nu * nu) / (z * z));
}

TEST(Families, SingleNodes) {
    auto f1 = gen_family1(std::vector<NodeSpec1>{{0, 1, 1}}, nu);
    EXPECT_EQ(RatFun(f1.structure->w).num().primitive(), (E - q(4) * nu - q(2)).num().primitive());
    auto f2 = gen_family2(std::vector<NodeSpec2>{{0, 1}}, nu);
    ASSERT_EQ(f2.structure->roots.size(), 1u);
    EXPECT_EQ(f2.structure->roots[0].value, -q(1) / pow(q(2) * nu + q(1), 2));
}

TEST(Families, HalfIntegerNuInCaseOne) {
    for (Rational v : {make_rational(1, 2), make_rational(-1, 2), make_rational(3, 2), Rational(0)}) {
        auto r = gen_family1(std::vector<NodeSpec1>{{0, 1, 1}, {0, -1, 1}, {1, -1, -1}}, v);
        EXPECT_NO_THROW(verify(r));
    }
}

TEST(Families, Fusion) { EXPECT_EQ(fusion().V, fusion_V()); }

TEST(Families, ContinuousLog) {
    auto r = gen_family3_log({(a + t).num(), b.num()});
    EXPECT_EQ(*r.M, (q(2) * E * z * z + E * b - q(2)) / (q(4) * z));
    EXPECT_EQ(r.V, q(1) / (q(4) * z * z) - q(8) / (q(2) * z * z + b) + q(16) * b / pow(q(2) * z * z + b, 2));
}

TEST(Families, ContinuousLogDegreeConstraint) {
    EXPECT_THROW(gen_family3_log({(a + t).num(), (t * t).num()}), NonRationalCoefficient);
}

TEST(Families, DOperator) {
    LogPolyPair f{t.num(), Poly()};
    LogPolyPair g = apply_D(f);
    EXPECT_EQ(g.P1, Poly(-4));
    EXPECT_TRUE(g.P2.is_zero());
}

TEST(Families, ContinuousPoly) {
    auto r = gen_family3_poly((pow(z, 4) + a * pow(z, 3) + b * z * z + c * z + d).num());
    RatFun K = q(3) * a * a * z + q(12) * a * z * z + q(16) * pow(z, 3) + a * b - q(2) * c;
    EXPECT_EQ(*r.M, -q(3) * pow(q(4) * z + a, 2) * E / (K * E - q(12) * a - q(48) * z));
    EXPECT_EQ(RatFun(r.structure->w), pow(E, 3));
    RatFun V = (-q(96) * z - q(24) * a) / K -
               (q(18) * pow(a, 4) + q(72) * pow(a, 3) * z - q(72) * a * a * b - q(288) * a * b * z +
                q(144) * a * c + q(576) * c * z) /
                   (K * K);
    EXPECT_EQ(r.V, V);
}

TEST(Families, SmallPolynomialInputs) {
    auto r1 = gen_family3_poly(z.num());
    EXPECT_FALSE(r1.V.contains(Var::E));
    auto r2 = gen_family3_poly((pow(z, 3) + q(1)).num());
    EXPECT_EQ(RatFun(r2.structure->w), E * E);
}

TEST(Families, Airy) { EXPECT_EQ(gen_family4().V, z); }

TEST(Families, CoincidentNodes) {
    EXPECT_THROW(gen_family1(std::vector<NodeSpec1>{{0, 1, 1}, {0, 1, 1}}, nu), DuplicateNode);
}
