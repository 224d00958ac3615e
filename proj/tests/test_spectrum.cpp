#include <gtest/gtest.h>

#include "specpot/error.hpp"
#include "specpot/spectrum.hpp"
#include "support.hpp"

using namespace specpot;
using namespace specpot::test;

namespace {

PotentialResult anharmonic() {
    return gen_family1(std::vector<NodeSpec1>{{1, 1, 1}}, make_rational(-3, 4));
}

PotentialResult fusion() {
    return eval_nu(gen_family2(std::vector<NodeSpec2>{{0, -1}, {1, 1}}, nu), make_rational(-1, 2));
}

bool same_up_to_scalar(const RatFun& x, const RatFun& y) {
    RatFun r = x / y;
    return r.is_constant() && !r.is_zero();
}

} // namespace

TEST(Candidates, Anharmonic) {
    auto set = enumerate_candidates(anharmonic(), 3);
    auto e = set.energies();
    EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    for (const auto& x : e) EXPECT_TRUE(is_integer(x) && x.get_num() % 2 != 0);
    for (long want : {-5, -1, 1, 3, 5, 7, 9}) EXPECT_NE(std::find(e.begin(), e.end(), Rational(want)), e.end());
    EXPECT_EQ(set.degenerate(), std::vector<Rational>{3});
}

TEST(Candidates, FusionContainsTabulatedEnergies) {
    auto e = enumerate_candidates(fusion(), 4).energies();
    for (long k = 1; k <= 4; ++k)
        EXPECT_NE(std::find(e.begin(), e.end(), make_rational(-1, 4 * k * k)), e.end());
}

TEST(Candidates, DirectFormulaBeforeDedup) {
    auto r = gen_family1(std::vector<NodeSpec1>{{0, 1, 1}}, make_rational(1, 4));
    auto e = enumerate_candidates(r, 0).energies();
    EXPECT_EQ(e, (std::vector<Rational>{-3, -1, 1, 3}));
    EXPECT_EQ(enumerate_candidates(r, 0).candidates[0].provenance.size(), 1u);
}

TEST(Candidates, SymbolicNuIsRejected) {
    auto r = gen_family1(std::vector<NodeSpec1>{{1, 1, 1}}, nu);
    EXPECT_THROW(enumerate_candidates(r, 2), SymbolicNu);
}

TEST(Eigenfunctions, AnharmonicExamples) {
    auto r = anharmonic();
    RatFun f = q(2) * z * z + q(1);
    auto p = liouvillian_eigenfunction(r, -1);
    EXPECT_EQ(p.psi.q, -q(1, 2) * z * z);
    EXPECT_TRUE(same_up_to_scalar(p.psi.R, q(1) / f));
    auto p5 = liouvillian_eigenfunction(r, 5);
    EXPECT_TRUE(same_up_to_scalar(p5.psi.R, z * (q(2) * z * z + q(3)) / f));
    EXPECT_TRUE(p5.l2.at(Interval::R));
}

TEST(Eigenfunctions, AccidentHasNoBoundState) {
    EXPECT_THROW(liouvillian_eigenfunction(anharmonic(), 3), NoSolution);
}

TEST(Eigenfunctions, DegreeCap) {
    EXPECT_THROW(liouvillian_eigenfunction(anharmonic(), 13, 3), DegreeCapExceeded);
}

TEST(Eigenfunctions, Fusion) {
    auto p = liouvillian_eigenfunction(fusion(), make_rational(-1, 16));
    RatFun f = z * z + q(2) * z + q(2);
    EXPECT_EQ(p.psi.q, -z / q(4));
    EXPECT_TRUE(same_up_to_scalar(p.psi.R, z * (pow(z, 3) + q(6) * z * z + q(18) * z + q(24)) / f));
}

TEST(Eigenfunctions, ResidualIsExact) {
    auto r = anharmonic();
    for (long e : {-1, 5, 7})
        EXPECT_TRUE(eigen_residual(r.V, e, liouvillian_eigenfunction(r, e).psi).is_zero());
}

TEST(SquareIntegrable, Examples) {
    RatFun f = q(2) * z * z + q(1);
    ClosedForm gauss{-q(1, 2) * z * z, 0, q(1) / f};
    EXPECT_TRUE(square_integrable(gauss, Interval::R));
    ClosedForm k1{z / q(2), 0, z / (z * z + q(2) * z + q(2))};
    EXPECT_TRUE(square_integrable(k1, Interval::RMinus));
    EXPECT_FALSE(square_integrable(k1, Interval::RPlus));
    ClosedForm grow{q(1, 2) * z * z, 0, q(1)};
    EXPECT_FALSE(square_integrable(grow, Interval::R));
    ClosedForm pole{-q(1, 2) * z * z, 0, q(1) / (z - q(1))};
    EXPECT_FALSE(square_integrable(pole, Interval::RPlus));
    EXPECT_TRUE(square_integrable(pole, Interval::RMinus));
    ClosedForm origin{-z, make_rational(1, 2), q(1) / z};
    EXPECT_FALSE(square_integrable(origin, Interval::RPlus));
    ClosedForm mild{-z, make_rational(1, 2), q(1)};
    EXPECT_TRUE(square_integrable(mild, Interval::RPlus));
}

TEST(Spectrum, ContinuousFamiliesAreTrivial) {
    auto rep = compute_spectrum(gen_family4(), 3);
    EXPECT_FALSE(rep.discrete);
    EXPECT_TRUE(rep.eigenpairs.empty());
}

TEST(Spectrum, EveryEigenpairPassesTheExactCheck) {
    auto r = fusion();
    auto rep = compute_spectrum(r, 4);
    EXPECT_GE(rep.eigenpairs.size(), 4u);
    for (const auto& p : rep.eigenpairs) {
        EXPECT_TRUE(eigen_residual(r.V, p.E0, p.psi).is_zero());
        EXPECT_FALSE(p.l2.at(Interval::R));
    }
}
