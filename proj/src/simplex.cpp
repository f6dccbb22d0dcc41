#include "cones/simplex.hpp"

#include <numeric>
#include <stdexcept>

#include "cones/errors.hpp"

namespace cones {

namespace {

constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

// Dense tableau with an explicit basis; basic columns stay an identity.
class Tableau {
  public:
    Tableau(std::size_t rows, std::size_t cols)
        : cols_(cols), rhs_(rows, Rational(0)), basis_(rows, kNoIndex),
          body_(rows, QVector(cols, Rational(0))) {}

    std::size_t rows() const { return body_.size(); }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return body_[r][c]; }
    Rational& rhs(std::size_t r) { return rhs_[r]; }
    std::size_t basic(std::size_t r) const { return basis_[r]; }
    void set_basic(std::size_t r, std::size_t c) { basis_[r] = c; }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = body_[r][c];
        for (Rational& v : body_[r]) v /= p;
        rhs_[r] /= p;
        for (std::size_t i = 0; i < body_.size(); ++i) {
            if (i == r || body_[i][c] == 0) continue;
            const Rational f = body_[i][c];
            for (std::size_t j = 0; j < cols_; ++j) body_[i][j] -= f * body_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        basis_[r] = c;
    }

    // Maximize obj over columns with allowed[j]; true = optimal, false = unbounded.
    bool maximize(const QVector& obj, const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t enter = kNoIndex;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allowed[j]) continue;
                Rational reduced = obj[j];
                for (std::size_t i = 0; i < body_.size(); ++i) {
                    if (obj[basis_[i]] != 0) reduced -= obj[basis_[i]] * body_[i][j];
                }
                if (reduced > 0) {
                    enter = j;
                    break;  // Bland: lowest improving index
                }
            }
            if (enter == kNoIndex) return true;

            std::size_t leave = kNoIndex;
            Rational best_ratio = 0;
            for (std::size_t i = 0; i < body_.size(); ++i) {
                if (body_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / body_[i][enter];
                if (leave == kNoIndex || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == kNoIndex) return false;
            pivot(leave, enter);
        }
    }

    Rational objective_value(const QVector& obj) const {
        Rational v = 0;
        for (std::size_t i = 0; i < body_.size(); ++i) v += obj[basis_[i]] * rhs_[i];
        return v;
    }

    void drop_row(std::size_t r) {
        body_.erase(body_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

  private:
    std::size_t cols_;
    QVector rhs_;
    std::vector<std::size_t> basis_;
    QMatrix body_;
};

}  // namespace

std::optional<LpSolution> simplex_maximize(const QMatrix& m, const QVector& b,
                                           const QVector& c) {
    const std::size_t rows = m.size();
    const std::size_t n = c.size();
    if (b.size() != rows) throw DimensionMismatchError("rhs length differs from row count");

    std::vector<std::size_t> artificial_rows;
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != n) throw DimensionMismatchError("LP row has wrong dimension");
        if (b[i] < 0) artificial_rows.push_back(i);
    }
    const std::size_t n_art = artificial_rows.size();
    const std::size_t total = n + rows + n_art;

    Tableau t(rows, total);
    std::size_t art = n + rows;
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i] < 0;
        const Rational s = flip ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = s * m[i][j];
        t.at(i, n + i) = s;  // slack
        t.rhs(i) = s * b[i];
        if (flip) {
            t.at(i, art) = 1;
            t.set_basic(i, art);
            ++art;
        } else {
            t.set_basic(i, n + i);
        }
    }

    if (n_art > 0) {
        QVector phase1(total, Rational(0));
        for (std::size_t j = n + rows; j < total; ++j) phase1[j] = -1;
        std::vector<bool> allowed(total, true);
        if (!t.maximize(phase1, allowed)) {
            throw std::logic_error("phase-1 objective unbounded");
        }
        if (t.objective_value(phase1) < 0) {
            return std::nullopt;
        }
        // Drive leftover artificials out of the basis, dropping redundant rows.
        for (std::size_t i = t.rows(); i-- > 0;) {
            if (t.basic(i) < n + rows) continue;
            std::size_t col = kNoIndex;
            for (std::size_t j = 0; j < n + rows; ++j) {
                if (t.at(i, j) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == kNoIndex) {
                t.drop_row(i);
            } else {
                t.pivot(i, col);
            }
        }
    }

    QVector obj(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
    std::vector<bool> allowed(total, true);
    for (std::size_t j = n + rows; j < total; ++j) allowed[j] = false;
    if (!t.maximize(obj, allowed)) {
        throw std::logic_error("LP objective unbounded");
    }

    LpSolution sol;
    sol.point = zero_vector(n);
    for (std::size_t i = 0; i < t.rows(); ++i) {
        if (t.basic(i) < n) sol.point[t.basic(i)] = t.rhs(i);
    }
    sol.value = dot(c, sol.point);
    return sol;
}

std::optional<QVector> feasible_mixed(const HomSystem& system) {
    HomSystem s = system;
    s.normalize();
    if (s.has_marker_row()) return std::nullopt;
    if (s.strict.empty()) return zero_vector(s.dim);

    // Variables: u = x + 1 in [0,2] componentwise, then t in [0,1].
    const std::size_t n = s.dim;
    QMatrix m;
    QVector b;
    auto row_sum = [](const QVector& row) {
        return std::accumulate(row.begin(), row.end(), Rational(0));
    };
    for (const QVector& a : s.nonstrict) {
        QVector row(n + 1, Rational(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = -a[j];
        m.push_back(std::move(row));
        b.push_back(-row_sum(a));
    }
    for (const QVector& a : s.strict) {
        QVector row(n + 1, Rational(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = -a[j];
        row[n] = 1;
        m.push_back(std::move(row));
        b.push_back(-row_sum(a));
    }
    for (std::size_t j = 0; j <= n; ++j) {
        QVector row(n + 1, Rational(0));
        row[j] = 1;
        m.push_back(std::move(row));
        b.push_back(j < n ? Rational(2) : Rational(1));
    }
    QVector c(n + 1, Rational(0));
    c[n] = 1;

    std::optional<LpSolution> sol = simplex_maximize(m, b, c);
    if (!sol) throw std::logic_error("lifted LP must be feasible at x = 0");
    if (sol->value <= 0) return std::nullopt;

    QVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = sol->point[j] - 1;
    if (!s.satisfied_by(x) || !system.satisfied_by(x)) {
        throw std::logic_error("simplex witness failed exact re-verification");
    }
    return x;
}

RelintPoint relint_point(const QMatrix& a, std::size_t dim) {
    RelintPoint result;
    result.point = zero_vector(dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != dim) throw DimensionMismatchError("relint row has wrong dimension");
        if (is_zero(a[i])) {
            result.implicit_rows.push_back(i);
            continue;
        }
        HomSystem s{dim, a, {a[i]}};
        if (std::optional<QVector> w = feasible_mixed(s)) {
            result.point = add(result.point, *w);
        } else {
            result.implicit_rows.push_back(i);
        }
    }
    return result;
}

}  // namespace cones
