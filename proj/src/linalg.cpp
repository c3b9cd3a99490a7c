#include "svir/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace svir {

SparseRow sparse_add(const SparseRow& a, const SparseRow& b) {
    return sparse_axpy(a, Rational(1), b);
}

SparseRow sparse_axpy(const SparseRow& a, const Rational& scale, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            Rational v = scale * ib->second;
            if (v != 0) out.emplace_back(ib->first, std::move(v));
            ++ib;
        } else {
            Rational v = ia->second + scale * ib->second;
            if (v != 0) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

void sparse_scale(SparseRow& a, const Rational& scale) {
    for (auto& [col, v] : a) v *= scale;
}

SparseRow RowEchelon::reduce(SparseRow row) const {
    while (!row.empty()) {
        auto it = pivot_index_.find(row.front().first);
        if (it == pivot_index_.end()) {
            // Leading column has no pivot; later columns might, so keep
            // eliminating any pivot columns further right.
            SparseRow out;
            out.push_back(row.front());
            SparseRow tail(row.begin() + 1, row.end());
            while (!tail.empty()) {
                auto jt = pivot_index_.find(tail.front().first);
                if (jt == pivot_index_.end()) {
                    out.push_back(tail.front());
                    tail.erase(tail.begin());
                } else {
                    Rational coeff = -tail.front().second;
                    tail = sparse_axpy(tail, coeff, rows_[jt->second]);
                }
            }
            return out;
        }
        row = sparse_axpy(row, -row.front().second, rows_[it->second]);
    }
    return row;
}

SparseRow RowEchelon::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return row;
    SparseRow monic = row;
    Rational inv = 1 / monic.front().second;
    sparse_scale(monic, inv);
    pivot_index_[monic.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(monic));
    return row;
}

std::vector<SparseRow> RowEchelon::sorted_rows() const {
    std::vector<SparseRow> out;
    out.reserve(rows_.size());
    for (const auto& [col, idx] : pivot_index_) out.push_back(rows_[idx]);
    return out;
}

std::vector<SparseRow> reduced_row_echelon(const std::vector<SparseRow>& rows) {
    // Deterministic pivot preference: for each leading column take the
    // candidate whose leading coefficient has the lowest denominator (then
    // smallest |numerator|, then first appearance) — the cheap-pivot
    // heuristic that keeps intermediate rationals small.
    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        const SparseRow& a = rows[i];
        const SparseRow& b = rows[j];
        if (a.empty() || b.empty()) return b.empty() && !a.empty();
        if (a.front().first != b.front().first)
            return a.front().first < b.front().first;
        const Rational& x = a.front().second;
        const Rational& y = b.front().second;
        if (x.get_den() != y.get_den()) return x.get_den() < y.get_den();
        return abs(x.get_num()) < abs(y.get_num());
    });

    RowEchelon ech;
    for (int idx : order)
        if (!rows[idx].empty()) ech.insert(rows[idx]);

    std::vector<SparseRow> sorted = ech.sorted_rows();
    // Back-substitution: clear every pivot column from the rows above it.
    for (int j = static_cast<int>(sorted.size()) - 1; j >= 0; --j) {
        const int pivot_col = sorted[j].front().first;
        for (int i = 0; i < j; ++i) {
            auto it = std::lower_bound(
                sorted[i].begin(), sorted[i].end(), pivot_col,
                [](const auto& e, int col) { return e.first < col; });
            if (it != sorted[i].end() && it->first == pivot_col)
                sorted[i] = sparse_axpy(sorted[i], -it->second, sorted[j]);
        }
    }
    return sorted;
}

std::vector<SparseRow> left_nullspace(const std::vector<SparseRow>& rows) {
    int max_col = -1;
    for (const auto& r : rows)
        if (!r.empty()) max_col = std::max(max_col, r.back().first);
    const int id_offset = max_col + 1;

    RowEchelon ech;
    std::vector<SparseRow> null_rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseRow augmented = rows[i];
        augmented.emplace_back(id_offset + static_cast<int>(i), Rational(1));
        SparseRow residual = ech.insert(std::move(augmented));
        // Data part gone ⇒ the identity part is a vanishing combination.
        if (!residual.empty() && residual.front().first >= id_offset) {
            SparseRow combo;
            for (const auto& [col, v] : residual) combo.emplace_back(col - id_offset, v);
            null_rows.push_back(std::move(combo));
        }
    }
    return reduced_row_echelon(null_rows);
}

}  // namespace svir
