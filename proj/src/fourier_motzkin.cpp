#include "cones/fourier_motzkin.hpp"

#include "cones/errors.hpp"

namespace cones {

namespace {

QVector drop_coordinate(const QVector& row, std::size_t k) {
    QVector out;
    out.reserve(row.size() - 1);
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (j != k) out.push_back(row[j]);
    }
    return out;
}

struct TaggedRow {
    QVector row;
    bool strict;
};

}  // namespace

HomSystem project_eliminate(const HomSystem& system, std::size_t k) {
    if (k >= system.dim) {
        throw DimensionMismatchError("eliminated coordinate out of range");
    }
    HomSystem s = system;
    s.normalize();

    std::vector<TaggedRow> lower, upper;  // positive / negative coefficient on x_k
    HomSystem out;
    out.dim = s.dim - 1;

    auto classify = [&](const QVector& row, bool strict) {
        if (row[k] > 0) {
            lower.push_back({row, strict});
        } else if (row[k] < 0) {
            upper.push_back({row, strict});
        } else if (strict) {
            out.strict.push_back(drop_coordinate(row, k));
        } else {
            out.nonstrict.push_back(drop_coordinate(row, k));
        }
    };
    for (const QVector& row : s.nonstrict) classify(row, false);
    for (const QVector& row : s.strict) classify(row, true);

    for (const TaggedRow& lo : lower) {
        for (const TaggedRow& up : upper) {
            // Positive combination cancelling x_k.
            QVector combined = add(scale(-up.row[k], lo.row), scale(lo.row[k], up.row));
            combined = drop_coordinate(combined, k);
            if (lo.strict || up.strict) {
                out.strict.push_back(std::move(combined));
            } else {
                out.nonstrict.push_back(std::move(combined));
            }
        }
    }
    out.normalize();
    return out;
}

}  // namespace cones
