#include "cones/linalg.hpp"

#include <algorithm>

#include "cones/errors.hpp"

namespace cones {

QVector zero_vector(std::size_t dim) { return QVector(dim, Rational(0)); }

QVector unit_vector(std::size_t dim, std::size_t index) {
    QVector v = zero_vector(dim);
    v.at(index) = 1;
    return v;
}

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

static void check_dims(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError("vector dimensions " + std::to_string(a.size()) +
                                     " and " + std::to_string(b.size()) + " differ");
    }
}

Rational dot(const QVector& a, const QVector& b) {
    check_dims(a, b);
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        r += a[i] * b[i];
    }
    return r;
}

QVector add(const QVector& a, const QVector& b) {
    check_dims(a, b);
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector sub(const QVector& a, const QVector& b) {
    check_dims(a, b);
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector scale(const Rational& t, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = t * v[i];
    return r;
}

QVector negate(const QVector& v) { return scale(Rational(-1), v); }

QVector normalize_row(const QVector& row) {
    Integer den_lcm = 1;
    for (const Rational& q : row) {
        den_lcm = lcm(den_lcm, denominator(q));
    }
    Integer num_gcd = 0;
    for (const Rational& q : row) {
        num_gcd = gcd(num_gcd, numerator(q) * (den_lcm / denominator(q)));
    }
    if (num_gcd == 0) {
        return row;  // zero row
    }
    Rational factor(den_lcm, num_gcd);
    return scale(factor, row);
}

std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational lead = m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<QVector> kernel_basis(const QMatrix& m, std::size_t dim) {
    QMatrix r = m;
    for (const QVector& row : r) {
        if (row.size() != dim) {
            throw DimensionMismatchError("matrix row dimension differs from ambient dimension");
        }
    }
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<QVector> basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        QVector v = zero_vector(dim);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -r[i][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<QVector>& s, const QVector& v) {
    QMatrix m = s;
    for (const QVector& row : m) check_dims(row, v);
    std::vector<std::size_t> pivots = rref(m);
    QVector r = v;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Rational f = r[pivots[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * m[i][j];
    }
    return is_zero(r);
}

Subspace Subspace::from_spanning(std::size_t ambient_dim, QMatrix spanning) {
    for (const QVector& row : spanning) {
        if (row.size() != ambient_dim) {
            throw DimensionMismatchError("spanning vector dimension differs from ambient");
        }
    }
    rref(spanning);
    return Subspace{ambient_dim, std::move(spanning)};
}

Subspace Subspace::full(std::size_t ambient_dim) {
    QMatrix id;
    for (std::size_t i = 0; i < ambient_dim; ++i) id.push_back(unit_vector(ambient_dim, i));
    return Subspace{ambient_dim, std::move(id)};
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace{ambient_dim, {}}; }

bool Subspace::contains(const QVector& v) const { return in_span(basis, v); }

bool Subspace::includes(const Subspace& other) const {
    return std::all_of(other.basis.begin(), other.basis.end(),
                       [this](const QVector& v) { return contains(v); });
}

}  // namespace cones
