#pragma once

#include <vector>

#include "dts/core.hpp"

namespace dts {

// n x (k+1) array representation of a generalized partial difference
// triangle set. Column 0 holds fixed zeros; every other cell is empty or a
// nonnegative integer. Filled cells within a row are strictly increasing
// left to right across any gaps, and all in-row pairwise differences are
// globally distinct. A DiffLedger tracks the consumed differences.
class CellGrid {
public:
    static constexpr Value kEmpty = -1;

    // R(n, k): column 0 zeros, all other cells empty.
    CellGrid(int rows, int order);

    // Requires t valid; builds the complete grid.
    static CellGrid from_triangle_set(const TriangleSet& t);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return cols_ - 1; }

    bool filled(int i, int j) const { return cell(i, j) != kEmpty; }
    Value at(int i, int j) const { return cell(i, j); }
    bool complete() const { return empty_count_ == 0; }
    int empty_count() const { return empty_count_; }
    Value scope() const;

    // True if placing v at empty cell (i, j) keeps the grid a valid
    // generalized partial set: v sits strictly between the nearest filled
    // neighbors in its row and introduces only unused differences.
    bool can_place(int i, int j, Value v) const;

    // Places v; throws std::invalid_argument if can_place(i, j, v) is false.
    void place(int i, int j, Value v);

    // Empties cell (i, j) and releases its differences. Column-0 cells and
    // out-of-bounds cells are rejected. Returns the removed value.
    Value clear_cell(int i, int j);

    // Requires complete().
    TriangleSet to_triangle_set() const;

    const DiffLedger& ledger() const { return ledger_; }

private:
    Value& cell(int i, int j) { return cells_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Value& cell(int i, int j) const { return cells_[static_cast<std::size_t>(i) * cols_ + j]; }
    bool diff_used(Value d) const { return d <= ledger_.capacity() && ledger_.contains(d); }
    void check_cell_index(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Value> cells_;
    DiffLedger ledger_;
    int empty_count_ = 0;
};

}  // namespace dts
