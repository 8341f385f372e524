// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWALK_Q2_H
#define QWALK_Q2_H

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qwalk {

/// a + b sqrt(2) with arbitrary-precision rationals a, b.
class Q2Scalar {
   public:
    Q2Scalar() = default;
    Q2Scalar(long a) : a_(a) {}
    Q2Scalar(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }
    static Q2Scalar sqrt2() {
        return Q2Scalar(0, 1);
    }

    const mpq_class &rat_part() const {
        return a_;
    }
    const mpq_class &irr_part() const {
        return b_;
    }
    bool is_zero() const {
        return sgn(a_) == 0 && sgn(b_) == 0;
    }
    bool is_rational() const {
        return sgn(b_) == 0;
    }
    /// a - b sqrt(2), the field automorphism.
    Q2Scalar conjugate() const {
        return Q2Scalar(a_, -b_);
    }
    /// a^2 - 2 b^2; zero only for the zero element.
    mpq_class norm() const {
        return a_ * a_ - 2 * b_ * b_;
    }
    /// Throws std::domain_error for zero.
    Q2Scalar inverse() const;
    double to_double() const;
    /// Sign of the real number a + b sqrt(2), decided exactly.
    int sign() const;

    Q2Scalar operator-() const {
        return Q2Scalar(-a_, -b_);
    }
    Q2Scalar &operator+=(const Q2Scalar &o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Q2Scalar &operator-=(const Q2Scalar &o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Q2Scalar &operator*=(const Q2Scalar &o);
    Q2Scalar &operator/=(const Q2Scalar &o) {
        return *this *= o.inverse();
    }
    friend Q2Scalar operator+(Q2Scalar x, const Q2Scalar &y) {
        return x += y;
    }
    friend Q2Scalar operator-(Q2Scalar x, const Q2Scalar &y) {
        return x -= y;
    }
    friend Q2Scalar operator*(Q2Scalar x, const Q2Scalar &y) {
        return x *= y;
    }
    friend Q2Scalar operator/(Q2Scalar x, const Q2Scalar &y) {
        return x /= y;
    }
    friend bool operator==(const Q2Scalar &x, const Q2Scalar &y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// "a/b+c/d*sqrt2", e.g. "1/2-3*sqrt2", "0+1*sqrt2".
    std::string str() const;
    static Q2Scalar parse(std::string_view text);

   private:
    mpq_class a_ = 0;
    mpq_class b_ = 0;
};

/// x + i y with x, y in Q(sqrt 2).
class Q2Complex {
   public:
    Q2Complex() = default;
    Q2Complex(long re) : re_(re) {}
    Q2Complex(Q2Scalar re, Q2Scalar im = {}) : re_(std::move(re)), im_(std::move(im)) {}

    const Q2Scalar &re() const {
        return re_;
    }
    const Q2Scalar &im() const {
        return im_;
    }
    bool is_zero() const {
        return re_.is_zero() && im_.is_zero();
    }
    bool is_real() const {
        return im_.is_zero();
    }
    Q2Complex conj() const {
        return Q2Complex(re_, -im_);
    }
    /// x^2 + y^2.
    Q2Scalar abs2() const {
        return re_ * re_ + im_ * im_;
    }
    Q2Complex inverse() const;
    std::complex<double> to_complex() const {
        return {re_.to_double(), im_.to_double()};
    }

    Q2Complex operator-() const {
        return Q2Complex(-re_, -im_);
    }
    Q2Complex &operator+=(const Q2Complex &o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Q2Complex &operator-=(const Q2Complex &o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Q2Complex &operator*=(const Q2Complex &o) {
        Q2Scalar re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    Q2Complex &operator/=(const Q2Complex &o) {
        return *this *= o.inverse();
    }
    friend Q2Complex operator+(Q2Complex x, const Q2Complex &y) {
        return x += y;
    }
    friend Q2Complex operator-(Q2Complex x, const Q2Complex &y) {
        return x -= y;
    }
    friend Q2Complex operator*(Q2Complex x, const Q2Complex &y) {
        return x *= y;
    }
    friend Q2Complex operator/(Q2Complex x, const Q2Complex &y) {
        return x /= y;
    }
    friend bool operator==(const Q2Complex &x, const Q2Complex &y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }

   private:
    Q2Scalar re_;
    Q2Scalar im_;
};

inline bool field_is_zero(const mpq_class &x) {
    return sgn(x) == 0;
}
inline bool field_is_zero(const Q2Scalar &x) {
    return x.is_zero();
}
inline bool field_is_zero(const Q2Complex &x) {
    return x.is_zero();
}

template <class F>
using FieldVector = std::vector<F>;
template <class F>
using FieldMatrix = std::vector<std::vector<F>>;

using Q2Vector = FieldVector<Q2Scalar>;
using Q2Matrix = FieldMatrix<Q2Scalar>;
using RatVector = FieldVector<mpq_class>;

/// In-place Gauss-Jordan reduction to reduced row echelon form. Pivots are the
/// lowest-index column with an exactly nonzero entry, searched among the first
/// `cols` columns; wider rows (augmented blocks) are carried along. Returns
/// pivot columns.
template <class F>
std::vector<int> rref(FieldMatrix<F> &m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    const int rows = static_cast<int>(m.size());
    for (int col = 0; col < cols && row < rows; col++) {
        int pick = -1;
        for (int r = row; r < rows; r++) {
            if (!field_is_zero(m[r][col])) {
                pick = r;
                break;
            }
        }
        if (pick < 0) {
            continue;
        }
        std::swap(m[row], m[pick]);
        F inv = F(1) / m[row][col];
        const int width = static_cast<int>(m[row].size());
        for (int c = col; c < width; c++) {
            m[row][c] *= inv;
        }
        for (int r = 0; r < rows; r++) {
            if (r == row || field_is_zero(m[r][col])) {
                continue;
            }
            F f = m[r][col];
            for (int c = col; c < width; c++) {
                m[r][c] -= f * m[row][c];
            }
        }
        pivots.push_back(col);
        row++;
    }
    return pivots;
}

/// Row-reduces `rows` and drops zero rows: a canonical basis of their span.
template <class F>
FieldMatrix<F> span_basis(FieldMatrix<F> rows, int cols) {
    auto pivots = rref(rows, cols);
    rows.resize(pivots.size());
    return rows;
}

/// Nullspace basis of an r x cols matrix, itself brought to reduced row echelon form.
template <class F>
FieldMatrix<F> nullspace(FieldMatrix<F> m, int cols) {
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) {
        is_pivot[p] = true;
    }
    FieldMatrix<F> basis;
    for (int free = 0; free < cols; free++) {
        if (is_pivot[free]) {
            continue;
        }
        FieldVector<F> v(cols, F(0));
        v[free] = F(1);
        for (size_t i = 0; i < pivots.size(); i++) {
            v[pivots[i]] = -m[i][free];
        }
        basis.push_back(std::move(v));
    }
    return span_basis(std::move(basis), cols);
}

/// Inverse of a square matrix; throws std::domain_error if singular.
template <class F>
FieldMatrix<F> inverse(const FieldMatrix<F> &m) {
    const int n = static_cast<int>(m.size());
    FieldMatrix<F> aug(n, FieldVector<F>(2 * n, F(0)));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            aug[i][j] = m[i][j];
        }
        aug[i][n + i] = F(1);
    }
    auto pivots = rref(aug, n);
    if (static_cast<int>(pivots.size()) != n) {
        throw std::domain_error("matrix is singular");
    }
    FieldMatrix<F> out(n, FieldVector<F>(n));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            out[i][j] = aug[i][n + j];
        }
    }
    return out;
}

template <class F>
FieldVector<F> mat_vec(const FieldMatrix<F> &m, const FieldVector<F> &v) {
    FieldVector<F> out(m.size(), F(0));
    for (size_t i = 0; i < m.size(); i++) {
        for (size_t j = 0; j < v.size(); j++) {
            if (!field_is_zero(m[i][j]) && !field_is_zero(v[j])) {
                out[i] += m[i][j] * v[j];
            }
        }
    }
    return out;
}

template <class F>
FieldMatrix<F> mat_mul(const FieldMatrix<F> &a, const FieldMatrix<F> &b) {
    const size_t inner = b.size();
    const size_t cols = inner ? b[0].size() : 0;
    FieldMatrix<F> out(a.size(), FieldVector<F>(cols, F(0)));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t k = 0; k < inner; k++) {
            if (field_is_zero(a[i][k])) {
                continue;
            }
            for (size_t j = 0; j < cols; j++) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

/// M v for a Q(sqrt 2) matrix; convenience wrapper used by tests and the CLI.
Q2Vector q2_mat_vec(const Q2Matrix &m, const Q2Vector &v);

/// Exact nullspace basis in reduced echelon form.
Q2Matrix q2_nullspace(const Q2Matrix &m);

/// cos(pi m / 4) and sin(pi m / 4) as exact field elements.
Q2Scalar cos_quarter_pi(long m);
Q2Scalar sin_quarter_pi(long m);

}  // namespace qwalk

#endif
