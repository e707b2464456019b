#include "dts/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dts {

CellGrid::CellGrid(int rows, int order) : rows_(rows), cols_(order + 1) {
    if (rows < 1 || order < 1) throw std::invalid_argument("CellGrid: need rows >= 1 and order >= 1");
    cells_.assign(static_cast<std::size_t>(rows_) * cols_, kEmpty);
    for (int i = 0; i < rows_; ++i) cell(i, 0) = 0;
    empty_count_ = rows_ * (cols_ - 1);
}

CellGrid CellGrid::from_triangle_set(const TriangleSet& t) {
    Verdict v = verify_triangle_set(t);
    if (!v.valid()) throw std::invalid_argument("CellGrid: " + v.describe());

    CellGrid g(t.n(), t.k());
    g.ledger_.ensure_capacity(std::max<Value>(1, v.scope));
    for (int i = 0; i < g.rows_; ++i) {
        const Block& b = t.blocks[static_cast<std::size_t>(i)];
        for (int j = 1; j < g.cols_; ++j) {
            g.cell(i, j) = b[static_cast<std::size_t>(j)];
            --g.empty_count_;
            for (int prev = 0; prev < j; ++prev) g.ledger_.insert(b[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(prev)]);
        }
    }
    return g;
}

Value CellGrid::scope() const {
    Value m = 0;
    for (Value v : cells_) m = std::max(m, v);
    return m;
}

void CellGrid::check_cell_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::invalid_argument("CellGrid: cell (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of bounds");
}

bool CellGrid::can_place(int i, int j, Value v) const {
    check_cell_index(i, j);
    if (j == 0 || filled(i, j) || v < 0) return false;

    // Strict monotonicity against the nearest filled neighbors.
    for (int l = j - 1; l >= 0; --l) {
        if (filled(i, l)) {
            if (cell(i, l) >= v) return false;
            break;
        }
    }
    for (int r = j + 1; r < cols_; ++r) {
        if (filled(i, r)) {
            if (cell(i, r) <= v) return false;
            break;
        }
    }

    // All new differences must be unused and mutually distinct.
    Value diffs[32];
    std::vector<Value> big;
    Value* buf = diffs;
    if (cols_ > static_cast<int>(std::size(diffs))) {
        big.resize(static_cast<std::size_t>(cols_));
        buf = big.data();
    }
    int cnt = 0;
    for (int l = 0; l < cols_; ++l) {
        if (l == j || !filled(i, l)) continue;
        const Value d = v > cell(i, l) ? v - cell(i, l) : cell(i, l) - v;
        if (d == 0 || diff_used(d)) return false;
        buf[cnt++] = d;
    }
    std::sort(buf, buf + cnt);
    for (int t = 1; t < cnt; ++t)
        if (buf[t] == buf[t - 1]) return false;
    return true;
}

void CellGrid::place(int i, int j, Value v) {
    if (!can_place(i, j, v))
        throw std::invalid_argument("CellGrid: cannot place " + std::to_string(v) + " at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    for (int l = 0; l < cols_; ++l) {
        if (l == j || !filled(i, l)) continue;
        const Value d = v > cell(i, l) ? v - cell(i, l) : cell(i, l) - v;
        ledger_.ensure_capacity(d);
        ledger_.insert(d);
    }
    cell(i, j) = v;
    --empty_count_;
}

Value CellGrid::clear_cell(int i, int j) {
    check_cell_index(i, j);
    if (j == 0) throw std::invalid_argument("CellGrid: column 0 holds fixed zeros");
    if (!filled(i, j)) throw std::invalid_argument("CellGrid: cell (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") is already empty");
    const Value v = cell(i, j);
    cell(i, j) = kEmpty;
    ++empty_count_;
    for (int l = 0; l < cols_; ++l) {
        if (l == j || !filled(i, l)) continue;
        const Value d = v > cell(i, l) ? v - cell(i, l) : cell(i, l) - v;
        ledger_.remove(d);
    }
    return v;
}

TriangleSet CellGrid::to_triangle_set() const {
    if (!complete()) throw std::logic_error("CellGrid: grid has empty cells");
    TriangleSet t;
    t.blocks.resize(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        t.blocks[static_cast<std::size_t>(i)].assign(cells_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                                                     cells_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
    }
    return t;
}

}  // namespace dts
