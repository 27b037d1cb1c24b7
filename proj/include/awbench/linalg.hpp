#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "awbench/rational.hpp"

namespace awbench {

/// Shape or content problem in caller-supplied data.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A stated precondition of an operation does not hold. Distinguished from a
/// plain failing check: the operation was never run.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<Rational>;

Vec zero_vec(int dim);
Vec unit_vec(int dim, int index);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
bool is_zero(const Vec& v);

/// Dense matrix of exact rationals; column j holds the image of basis vector j.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw InputError("Matrix: negative dimension");
    }

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    Matrix transpose() const;
    Matrix negated() const;
    Vec apply(const Vec& v) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    const std::vector<Rational>& flat() const { return entries_; }
    std::vector<Rational>& flat() { return entries_; }

private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

/// Rank-3 tensor of structure constants: entry (i, j, k) is the e_k coefficient
/// of e_i applied to e_j. Shared index convention for every bilinear operation.
class Tensor3 {
public:
    Tensor3() : d0_(0), d1_(0), d2_(0) {}
    Tensor3(int d0, int d1, int d2)
        : d0_(d0), d1_(d1), d2_(d2),
          entries_(static_cast<size_t>(d0) * d1 * d2) {
        if (d0 < 0 || d1 < 0 || d2 < 0) throw InputError("Tensor3: negative dimension");
    }

    int dim_left() const { return d0_; }
    int dim_right() const { return d1_; }
    int dim_out() const { return d2_; }

    Rational& at(int i, int j, int k) {
        return entries_[(static_cast<size_t>(i) * d1_ + j) * d2_ + k];
    }
    const Rational& at(int i, int j, int k) const {
        return entries_[(static_cast<size_t>(i) * d1_ + j) * d2_ + k];
    }

    bool is_zero() const;

    /// Constants of the flipped operation (u, v) -> op(v, u).
    Tensor3 flip_arguments() const;
    Tensor3 scaled(const Rational& c) const;

    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ &&
               a.entries_ == b.entries_;
    }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

private:
    int d0_, d1_, d2_;
    std::vector<Rational> entries_;
};

/// Evaluates the bilinear map encoded by c on coordinate vectors u, v.
Vec bilinear_apply(const Tensor3& c, const Vec& u, const Vec& v);

/// Left-multiplication operator of the bilinear map at coordinate vector x:
/// the matrix v -> op(x, v).
Matrix left_operator(const Tensor3& c, const Vec& x);
/// Right-multiplication operator: the matrix v -> op(v, x).
Matrix right_operator(const Tensor3& c, const Vec& x);

/// Switch isomorphism on a rank-2 tensor over V (x) V: entry (i, j) -> (j, i).
Matrix flip_tau(const Matrix& t);

/// Dual action family per the pairing convention <theta*(x) xi, v> = -<xi, theta(x) v>:
/// each matrix becomes sign * (-transpose).
std::vector<Matrix> dualize_action(const std::vector<Matrix>& family, int sign);

/// Combines an action family into the single matrix for acting element x.
Matrix action_at(const std::vector<Matrix>& family, const Vec& x);

/// Fraction-free (Bareiss) elimination over cleared integer rows; verdicts are
/// exact, never tolerance-based.
int exact_rank(const Matrix& m);
Rational exact_det(const Matrix& m);

/// True when target lies in the column span of basis_columns.
bool in_column_span(const Matrix& basis_columns, const Vec& target);

}  // namespace awbench
