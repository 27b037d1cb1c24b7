#pragma once

#include "awbench/algebra.hpp"
#include "awbench/bialgebra.hpp"

// Shared desk-scale instances used across the test suite.
namespace fixtures {

using namespace awbench;

// 2D AWB: e1.e1 = e1, e1.e2 = e2, zero otherwise; {e1,e2} = e2, {e2,e1} = -e2.
inline AlgebraData awb2d() {
    AlgebraData a = AlgebraData::zero(2, AlgebraKind::AwbLeft, true);
    a.product.at(0, 0, 0) = Rational(1);
    a.product.at(0, 1, 1) = Rational(1);
    a.bracket->at(0, 1, 1) = Rational(1);
    a.bracket->at(1, 0, 1) = Rational(-1);
    return a;
}

// Parametric 2D AWB family: e_i.e_j = eps(e_i) e_j with eps(e1) = alpha,
// eps(e2) = beta, and the four bracket rows built from gamma and nu.
inline AlgebraData awb2d_parametric(const Rational& alpha, const Rational& beta,
                                    const Rational& gamma, const Rational& nu) {
    AlgebraData a = AlgebraData::zero(2, AlgebraKind::AwbLeft, true);
    a.product.at(0, 0, 0) = alpha;
    a.product.at(0, 1, 1) = alpha;
    a.product.at(1, 0, 0) = beta;
    a.product.at(1, 1, 1) = beta;
    a.bracket->at(0, 0, 0) = gamma;
    a.bracket->at(0, 0, 1) = -alpha * gamma / beta;
    a.bracket->at(0, 1, 0) = nu;
    a.bracket->at(0, 1, 1) = -alpha * nu / beta;
    a.bracket->at(1, 0, 0) = beta * gamma / alpha;
    a.bracket->at(1, 0, 1) = -gamma;
    a.bracket->at(1, 1, 0) = beta * nu / alpha;
    a.bracket->at(1, 1, 1) = -nu;
    return a;
}

// 3D data with symmetrized product e1.e_i = e_i.e1 = e_i and skew bracket
// [e1,e2] = e2, [e1,e3] = -e3, [e2,e3] = e1. Fails the Leibniz rule at
// (e2, e1, e1); kept as a pinned regression instance.
inline AlgebraData avg3d_base() {
    AlgebraData a = AlgebraData::zero(3, AlgebraKind::AlmostPoisson, true);
    for (int i = 0; i < 3; ++i) {
        a.product.at(0, i, i) = Rational(1);
        a.product.at(i, 0, i) = Rational(1);
    }
    a.bracket->at(0, 1, 1) = Rational(1);
    a.bracket->at(1, 0, 1) = Rational(-1);
    a.bracket->at(0, 2, 2) = Rational(-1);
    a.bracket->at(2, 0, 2) = Rational(1);
    a.bracket->at(1, 2, 0) = Rational(1);
    a.bracket->at(2, 1, 0) = Rational(-1);
    return a;
}

// Dual numbers: e1 unital, e2 nilpotent, zero bracket. Almost Poisson.
inline AlgebraData dual_numbers2d() {
    AlgebraData a = AlgebraData::zero(2, AlgebraKind::AlmostPoisson, true);
    a.product.at(0, 0, 0) = Rational(1);
    a.product.at(0, 1, 1) = Rational(1);
    a.product.at(1, 0, 1) = Rational(1);
    return a;
}

// 3D almost Poisson with nonzero product and bracket: e1.e1 = e1 and
// [e2,e3] = e2.
inline AlgebraData ap3d() {
    AlgebraData a = AlgebraData::zero(3, AlgebraKind::AlmostPoisson, true);
    a.product.at(0, 0, 0) = Rational(1);
    a.bracket->at(1, 2, 1) = Rational(1);
    a.bracket->at(2, 1, 1) = Rational(-1);
    return a;
}

// Zero-bracket almost Poisson on the 2D zero product with bracket [e1,e2]=e2.
// Product must vanish for the Leibniz rule to hold with a nonzero 2D bracket.
inline AlgebraData zero_product_bracket2d() {
    AlgebraData a = AlgebraData::zero(2, AlgebraKind::AlmostPoisson, true);
    a.bracket->at(0, 1, 1) = Rational(1);
    a.bracket->at(1, 0, 1) = Rational(-1);
    return a;
}

// Unital 3D almost Poisson algebra: e1 is a unit, e2 and e3 multiply to zero,
// bracket [e2,e3] = e2. Product and bracket interact through the unit.
inline AlgebraData unital3d() {
    AlgebraData a = AlgebraData::zero(3, AlgebraKind::AlmostPoisson, true);
    for (int i = 0; i < 3; ++i) {
        a.product.at(0, i, i) = Rational(1);
        a.product.at(i, 0, i) = Rational(1);
    }
    a.bracket->at(1, 2, 1) = Rational(1);
    a.bracket->at(2, 1, 1) = Rational(-1);
    return a;
}

inline std::vector<AlgebraData> almost_poisson_corpus() {
    std::vector<AlgebraData> out;
    out.push_back(dual_numbers2d());
    out.push_back(ap3d());
    out.push_back(unital3d());
    out.push_back(zero_product_bracket2d());
    out.push_back(AlgebraData::zero(3, AlgebraKind::AlmostPoisson, true));
    return out;
}

// Bialgebra over dual numbers with coproduct Delta(e2) = e2 (x) e2 and zero
// cobracket; passes every bialgebra identity.
inline BialgebraData bialg_nontrivial2d() {
    BialgebraData b;
    b.algebra = dual_numbers2d();
    b.coalgebra = CoalgebraData::zero(2);
    b.coalgebra.Delta.at(1, 1, 1) = Rational(1);
    return b;
}

inline BialgebraData bialg_zero2d() {
    BialgebraData b;
    b.algebra = dual_numbers2d();
    b.coalgebra = CoalgebraData::zero(2);
    return b;
}

// Cobracket delta(e2) = e1 (x) e2 - e2 (x) e1, zero coproduct: passes the
// coalgebra check but fails the mixed compatibilities.
inline BialgebraData bialg_delta2d() {
    BialgebraData b;
    b.algebra = dual_numbers2d();
    b.coalgebra = CoalgebraData::zero(2);
    b.coalgebra.delta.at(1, 0, 1) = Rational(1);
    b.coalgebra.delta.at(1, 1, 0) = Rational(-1);
    return b;
}

}  // namespace fixtures
