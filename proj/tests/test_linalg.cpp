#include <doctest.h>

#include <random>

#include "awbench/linalg.hpp"

using namespace awbench;

namespace {

Rational rnd_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long long> num(-4, 4);
    std::uniform_int_distribution<long long> den(1, 3);
    return Rational(num(rng), den(rng));
}

Vec rnd_vec(std::mt19937& rng, int dim) {
    Vec v(static_cast<size_t>(dim));
    for (auto& x : v) x = rnd_rational(rng);
    return v;
}

Tensor3 rnd_tensor(std::mt19937& rng, int dim) {
    Tensor3 t(dim, dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) t.at(i, j, k) = rnd_rational(rng);
    return t;
}

}  // namespace

TEST_CASE("bilinear_apply basics") {
    // 2D product e1.e1 = e1, e1.e2 = e2.
    Tensor3 c(2, 2, 2);
    c.at(0, 0, 0) = Rational(1);
    c.at(0, 1, 1) = Rational(1);
    CHECK(bilinear_apply(c, unit_vec(2, 0), unit_vec(2, 1)) == unit_vec(2, 1));
    Vec w{Rational(3, 7), Rational(-2)};
    CHECK(bilinear_apply(c, zero_vec(2), w) == zero_vec(2));

    // 3D product e1.e_i = e_i; (e1 + e2).e3 expands bilinearly to e3.
    Tensor3 c3(3, 3, 3);
    for (int i = 0; i < 3; ++i) c3.at(0, i, i) = Rational(1);
    Vec u = add(unit_vec(3, 0), unit_vec(3, 1));
    CHECK(bilinear_apply(c3, u, unit_vec(3, 2)) == unit_vec(3, 2));
}

TEST_CASE("bilinear_apply is linear in each slot") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Tensor3 c = rnd_tensor(rng, 3);
        Vec u = rnd_vec(rng, 3), u2 = rnd_vec(rng, 3), v = rnd_vec(rng, 3);
        Rational alpha = rnd_rational(rng);
        Vec lhs = bilinear_apply(c, add(scale(alpha, u), u2), v);
        Vec rhs = add(scale(alpha, bilinear_apply(c, u, v)), bilinear_apply(c, u2, v));
        CHECK(lhs == rhs);
        Vec lhs2 = bilinear_apply(c, v, add(scale(alpha, u), u2));
        Vec rhs2 = add(scale(alpha, bilinear_apply(c, v, u)), bilinear_apply(c, v, u2));
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("bilinear_apply rejects dimension mismatch") {
    Tensor3 c(2, 2, 2);
    CHECK_THROWS_AS(bilinear_apply(c, zero_vec(3), zero_vec(2)), InputError);
}

TEST_CASE("flip_tau") {
    // e1 (x) e2 -> e2 (x) e1.
    Matrix t(2, 2);
    t.at(0, 1) = Rational(1);
    Matrix flipped = flip_tau(t);
    CHECK(flipped.at(1, 0) == Rational(1));
    CHECK(flipped.at(0, 1) == Rational(0));

    // Symmetric tensors are fixed points.
    Matrix s(2, 2);
    s.at(0, 1) = Rational(3);
    s.at(1, 0) = Rational(3);
    s.at(0, 0) = Rational(-2);
    CHECK(flip_tau(s) == s);

    // e1 (x) e2 - e2 (x) e1 flips to its negative.
    Matrix a(2, 2);
    a.at(0, 1) = Rational(1);
    a.at(1, 0) = Rational(-1);
    CHECK(flip_tau(a) == a.negated());

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m(3, 3);
        for (auto& x : m.flat()) x = rnd_rational(rng);
        CHECK(flip_tau(flip_tau(m)) == m);
    }
}

TEST_CASE("dualize_action") {
    std::vector<Matrix> id{Matrix::identity(2)};
    CHECK(dualize_action(id, 1)[0] == Matrix::identity(2).negated());

    Matrix theta(2, 2);
    theta.at(0, 1) = Rational(1);
    std::vector<Matrix> fam{theta};
    Matrix expect(2, 2);
    expect.at(1, 0) = Rational(-1);
    CHECK(dualize_action(fam, 1)[0] == expect);
    CHECK(dualize_action(fam, -1)[0] == expect.negated());

    Matrix rect(2, 3);
    CHECK_THROWS_AS(dualize_action({rect}, 1), InputError);

    // Double dual with matching signs recovers the family.
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m(3, 3);
        for (auto& x : m.flat()) x = rnd_rational(rng);
        for (int sign : {1, -1})
            CHECK(dualize_action(dualize_action({m}, sign), sign)[0] == m);
    }
}

TEST_CASE("exact rank and determinant") {
    Matrix m(3, 3);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(1);
    m.at(1, 1) = Rational(2, 3);
    m.at(2, 2) = Rational(5);
    // Row 2 = 2 * row 1, so rank 2 and determinant 0.
    CHECK(exact_rank(m) == 2);
    CHECK(exact_det(m) == Rational(0));

    Matrix inv(2, 2);
    inv.at(0, 0) = Rational(1, 2);
    inv.at(0, 1) = Rational(1, 3);
    inv.at(1, 0) = Rational(1, 5);
    inv.at(1, 1) = Rational(1, 7);
    CHECK(exact_det(inv) == Rational(1, 14) - Rational(1, 15));
    CHECK(exact_rank(inv) == 2);

    Matrix gram(4, 4);
    gram.at(0, 2) = gram.at(2, 0) = Rational(1);
    gram.at(1, 3) = gram.at(3, 1) = Rational(1);
    CHECK(exact_det(gram) == Rational(1));
}

TEST_CASE("determinant is multiplicative on random matrices") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a(3, 3), b(3, 3);
        for (auto& x : a.flat()) x = rnd_rational(rng);
        for (auto& x : b.flat()) x = rnd_rational(rng);
        CHECK(exact_det(a * b) == exact_det(a) * exact_det(b));
    }
}

TEST_CASE("column span membership") {
    Matrix basis(3, 2);
    basis.at(0, 0) = Rational(1);
    basis.at(1, 0) = Rational(1);
    basis.at(2, 1) = Rational(1, 2);
    Vec inside{Rational(2), Rational(2), Rational(-3)};
    Vec outside{Rational(1), Rational(0), Rational(0)};
    CHECK(in_column_span(basis, inside));
    CHECK_FALSE(in_column_span(basis, outside));
    CHECK(in_column_span(basis, zero_vec(3)));
}
