#include "awbench/linalg.hpp"

namespace awbench {

Vec zero_vec(int dim) { return Vec(static_cast<size_t>(dim)); }

Vec unit_vec(int dim, int index) {
    Vec v(static_cast<size_t>(dim));
    v[static_cast<size_t>(index)] = Rational(1);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector add: size mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector sub: size mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec scale(const Rational& c, const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::negated() const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = -entries_[i];
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InputError("Matrix apply: size mismatch");
    Vec out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        Rational acc;
        for (int c = 0; c < cols_; ++c) acc += at(r, c) * v[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc;
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("Matrix add: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] = a.entries_[i] + b.entries_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("Matrix sub: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] = a.entries_[i] - b.entries_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("Matrix mul: shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& av = a.at(r, k);
            if (av.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) m.at(r, c) += av * b.at(k, c);
        }
    return m;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = c * m.entries_[i];
    return out;
}

bool Tensor3::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

Tensor3 Tensor3::flip_arguments() const {
    Tensor3 t(d1_, d0_, d2_);
    for (int i = 0; i < d0_; ++i)
        for (int j = 0; j < d1_; ++j)
            for (int k = 0; k < d2_; ++k) t.at(j, i, k) = at(i, j, k);
    return t;
}

Tensor3 Tensor3::scaled(const Rational& c) const {
    Tensor3 t(d0_, d1_, d2_);
    for (size_t i = 0; i < entries_.size(); ++i) t.entries_[i] = c * entries_[i];
    return t;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    if (a.d0_ != b.d0_ || a.d1_ != b.d1_ || a.d2_ != b.d2_)
        throw InputError("Tensor3 add: shape mismatch");
    Tensor3 t(a.d0_, a.d1_, a.d2_);
    for (size_t i = 0; i < t.entries_.size(); ++i) t.entries_[i] = a.entries_[i] + b.entries_[i];
    return t;
}

Vec bilinear_apply(const Tensor3& c, const Vec& u, const Vec& v) {
    if (static_cast<int>(u.size()) != c.dim_left() ||
        static_cast<int>(v.size()) != c.dim_right())
        throw InputError("bilinear_apply: operand dimension mismatch");
    Vec out(static_cast<size_t>(c.dim_out()));
    for (int i = 0; i < c.dim_left(); ++i) {
        if (u[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < c.dim_right(); ++j) {
            if (v[static_cast<size_t>(j)].is_zero()) continue;
            Rational uv = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
            for (int k = 0; k < c.dim_out(); ++k) out[static_cast<size_t>(k)] += uv * c.at(i, j, k);
        }
    }
    return out;
}

Matrix left_operator(const Tensor3& c, const Vec& x) {
    if (static_cast<int>(x.size()) != c.dim_left())
        throw InputError("left_operator: dimension mismatch");
    Matrix m(c.dim_out(), c.dim_right());
    for (int i = 0; i < c.dim_left(); ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < c.dim_right(); ++j)
            for (int k = 0; k < c.dim_out(); ++k)
                m.at(k, j) += x[static_cast<size_t>(i)] * c.at(i, j, k);
    }
    return m;
}

Matrix right_operator(const Tensor3& c, const Vec& x) {
    if (static_cast<int>(x.size()) != c.dim_right())
        throw InputError("right_operator: dimension mismatch");
    Matrix m(c.dim_out(), c.dim_left());
    for (int j = 0; j < c.dim_right(); ++j) {
        if (x[static_cast<size_t>(j)].is_zero()) continue;
        for (int i = 0; i < c.dim_left(); ++i)
            for (int k = 0; k < c.dim_out(); ++k)
                m.at(k, i) += x[static_cast<size_t>(j)] * c.at(i, j, k);
    }
    return m;
}

Matrix flip_tau(const Matrix& t) {
    if (t.rows() != t.cols()) throw InputError("flip_tau: legs must be square");
    return t.transpose();
}

std::vector<Matrix> dualize_action(const std::vector<Matrix>& family, int sign) {
    if (sign != 1 && sign != -1) throw InputError("dualize_action: sign must be +1 or -1");
    std::vector<Matrix> out;
    out.reserve(family.size());
    for (const auto& m : family) {
        if (m.rows() != m.cols()) throw InputError("dualize_action: non-square action matrix");
        Matrix d = m.transpose().negated();
        out.push_back(sign == 1 ? d : d.negated());
    }
    return out;
}

Matrix action_at(const std::vector<Matrix>& family, const Vec& x) {
    if (family.size() != x.size()) throw InputError("action_at: family size mismatch");
    if (family.empty()) return Matrix(0, 0);
    Matrix acc(family[0].rows(), family[0].cols());
    for (size_t i = 0; i < family.size(); ++i) {
        if (x[i].is_zero()) continue;
        acc = acc + x[i] * family[i];
    }
    return acc;
}

namespace {

// Rows are cleared to integers (multiply by the product of entry denominators),
// then reduced by Bareiss one-step fraction-free elimination. Row scaling
// preserves rank; determinant is divided back at the end.
struct Elimination {
    int rank = 0;
    int swap_sign = 1;
    Rational last_pivot = Rational(1);
    Rational row_scale_product = Rational(1);
};

Elimination bareiss(Matrix a) {
    Elimination res;
    const int rows = a.rows(), cols = a.cols();
    for (int r = 0; r < rows; ++r) {
        Rational s(1);
        for (int c = 0; c < cols; ++c) s *= a.at(r, c).denominator_part();
        res.row_scale_product *= s;
        for (int c = 0; c < cols; ++c) a.at(r, c) *= s;
    }
    Rational prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
            res.swap_sign = -res.swap_sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
            a.at(i, c) = Rational(0);
        }
        prev = a.at(r, c);
        ++r;
    }
    res.rank = r;
    res.last_pivot = prev;
    return res;
}

}  // namespace

int exact_rank(const Matrix& m) { return bareiss(m).rank; }

Rational exact_det(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("exact_det: matrix not square");
    if (m.rows() == 0) return Rational(1);
    Elimination e = bareiss(m);
    if (e.rank < m.rows()) return Rational(0);
    Rational det = e.last_pivot / e.row_scale_product;
    return e.swap_sign == 1 ? det : -det;
}

bool in_column_span(const Matrix& basis_columns, const Vec& target) {
    if (static_cast<int>(target.size()) != basis_columns.rows())
        throw InputError("in_column_span: dimension mismatch");
    Matrix augmented(basis_columns.rows(), basis_columns.cols() + 1);
    for (int r = 0; r < basis_columns.rows(); ++r) {
        for (int c = 0; c < basis_columns.cols(); ++c) augmented.at(r, c) = basis_columns.at(r, c);
        augmented.at(r, basis_columns.cols()) = target[static_cast<size_t>(r)];
    }
    return exact_rank(basis_columns) == exact_rank(augmented);
}

}  // namespace awbench
