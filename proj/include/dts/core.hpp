#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dts {

using Value = std::int64_t;

// One row of a difference triangle set, normalized: starts at 0, strictly
// increasing. Order k means k+1 elements.
using Block = std::vector<Value>;

struct TriangleSet {
    std::vector<Block> blocks;

    int n() const { return static_cast<int>(blocks.size()); }
    int k() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()) - 1; }
    Value scope() const;

    bool operator==(const TriangleSet&) const = default;
};

// Blocks of residues modulo `modulus` with all ordered in-block differences
// distinct and nonzero (an n-DP(v,k)).
struct Packing {
    Value modulus = 0;
    std::vector<std::vector<Value>> blocks;

    int n() const { return static_cast<int>(blocks.size()); }
    int k() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }

    bool operator==(const Packing&) const = default;
};

// Set of positive differences currently in use. Flat byte array, O(1)
// insert/remove/query. Single-owner mutable; not for concurrent sharing.
class DiffLedger {
public:
    DiffLedger() = default;
    explicit DiffLedger(Value capacity) : used_(static_cast<std::size_t>(capacity) + 1, 0) {}

    Value capacity() const { return static_cast<Value>(used_.size()) - 1; }

    void ensure_capacity(Value d) {
        if (d >= static_cast<Value>(used_.size())) used_.resize(static_cast<std::size_t>(d) + 1, 0);
    }

    bool contains(Value d) const {
        check_range(d);
        return used_[static_cast<std::size_t>(d)] != 0;
    }

    // False (and no change) if d is already present.
    bool insert(Value d) {
        check_range(d);
        auto& slot = used_[static_cast<std::size_t>(d)];
        if (slot) return false;
        slot = 1;
        ++count_;
        return true;
    }

    void remove(Value d) {
        check_range(d);
        auto& slot = used_[static_cast<std::size_t>(d)];
        if (!slot) throw std::logic_error("DiffLedger: removing absent difference " + std::to_string(d));
        slot = 0;
        --count_;
    }

    std::size_t size() const { return count_; }

private:
    void check_range(Value d) const {
        if (d < 1 || d >= static_cast<Value>(used_.size()))
            throw std::invalid_argument("DiffLedger: difference " + std::to_string(d) +
                                        " outside [1, " + std::to_string(capacity()) + "]");
    }

    std::vector<std::uint8_t> used_{0};
    std::size_t count_ = 0;
};

// Identifies one in-block difference: blocks[block][hi] - blocks[block][lo].
struct DiffCell {
    int block = -1;
    int hi = -1;
    int lo = -1;

    bool operator==(const DiffCell&) const = default;
};

struct Verdict {
    enum class Status { Valid, Collision, Malformed };

    Status status = Status::Malformed;
    Value scope = 0;         // populated when valid
    Value value = 0;         // the repeated difference, when status == Collision
    DiffCell first, second;  // the two occurrences (block-major, pair-lex scan order)
    std::string reason;      // populated when malformed

    bool valid() const { return status == Status::Valid; }
    std::string describe() const;
};

// All C(|b|,2) positive differences of a normalized block, in (lo, hi)
// lexicographic pair order. Duplicates are preserved so callers can report
// them. Throws if b is not normalized.
std::vector<Value> positive_differences(const Block& b);

// Universal oracle: accepts arbitrary candidate data. Malformed input
// (non-increasing row, nonzero start, unequal lengths) is reported
// distinctly from a difference collision. On collision, identifies the
// first offending pair of cell pairs in block-major, pair-lex order.
Verdict verify_triangle_set(const std::vector<Block>& blocks);
Verdict verify_triangle_set(const TriangleSet& t);

// Valid iff all n*k*(k-1) ordered in-block differences are distinct and
// nonzero mod v. Residues out of [0, v) are malformed.
Verdict verify_packing(const Packing& p);

// Lemma: an n-DP(v,k) is an (n, k-1)-DTS of scope at most v-1. Each block
// is rotated to the representative minimizing its translated maximum (cut
// at the largest cyclic gap, first such gap on ties), then shifted to start
// at 0 and sorted.
TriangleSet packing_to_triangle_set(const Packing& p);

// Drops the block containing the global maximum (lowest block index on
// ties). Requires n >= 2 and t valid.
TriangleSet reduce(const TriangleSet& t);

// Drops the largest element from every block. Requires k >= 1 and t valid.
TriangleSet shorten(const TriangleSet& t);

struct BoundsReport {
    Value trivial = 0;
    Value klove = 0;
    std::optional<Value> exact;
    Value best = 0;
};

// n * C(k+1, 2)
Value trivial_lower_bound(Value n, Value k);

// ceil(n * (k^2 - 2k*sqrt(k) + (k + sqrt(k))/4)), clamped below at 0.
// Evaluated in exact integer arithmetic so the ceiling is correct at
// boundary values.
Value klove_lower_bound(Value n, Value k);

// Combines the trivial and Klove bounds with the known exact values for
// k = 1 (n) and k = 2 (3n or 3n+1 by n mod 4).
BoundsReport best_lower_bound(Value n, Value k);

}  // namespace dts
