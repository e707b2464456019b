#include "dts/core.hpp"

#include <algorithm>
#include <unordered_map>

#include "dts/intmath.hpp"

namespace dts {

namespace {

// Above this scope the collision table switches from a flat array to a hash
// map; verdicts are identical either way.
constexpr Value kFlatTableLimit = Value{1} << 22;

std::string cell_str(const DiffCell& c) {
    return "block " + std::to_string(c.block) + " pair (" + std::to_string(c.hi) + "," +
           std::to_string(c.lo) + ")";
}

}  // namespace

Value TriangleSet::scope() const {
    Value m = 0;
    for (const auto& b : blocks)
        for (Value a : b) m = std::max(m, a);
    return m;
}

std::string Verdict::describe() const {
    switch (status) {
        case Status::Valid:
            return "valid, scope " + std::to_string(scope);
        case Status::Collision:
            return "collision: difference " + std::to_string(value) + " repeats at " +
                   cell_str(first) + " and " + cell_str(second);
        case Status::Malformed:
            return "malformed: " + reason;
    }
    return "unknown";
}

std::vector<Value> positive_differences(const Block& b) {
    if (b.empty() || b.front() != 0) throw std::invalid_argument("positive_differences: block not normalized");
    for (std::size_t i = 1; i < b.size(); ++i)
        if (b[i] <= b[i - 1]) throw std::invalid_argument("positive_differences: block not strictly increasing");

    std::vector<Value> out;
    out.reserve(b.size() * (b.size() - 1) / 2);
    for (std::size_t lo = 0; lo + 1 < b.size(); ++lo)
        for (std::size_t hi = lo + 1; hi < b.size(); ++hi) out.push_back(b[hi] - b[lo]);
    return out;
}

namespace {

Verdict malformed(std::string reason) {
    Verdict v;
    v.status = Verdict::Status::Malformed;
    v.reason = std::move(reason);
    return v;
}

Verdict collision(Value d, DiffCell first, DiffCell second) {
    Verdict v;
    v.status = Verdict::Status::Collision;
    v.value = d;
    v.first = first;
    v.second = second;
    return v;
}

// Shared duplicate scan over a (value, cell) stream. Returns true if the
// verdict was decided (collision found).
class CollisionTable {
public:
    explicit CollisionTable(Value max_value) {
        if (max_value <= kFlatTableLimit) flat_.assign(static_cast<std::size_t>(max_value) + 1, DiffCell{});
    }

    // Null if d unseen (and records it), else the first occurrence.
    const DiffCell* probe(Value d, const DiffCell& cell) {
        if (!flat_.empty()) {
            DiffCell& slot = flat_[static_cast<std::size_t>(d)];
            if (slot.block >= 0) return &slot;
            slot = cell;
            return nullptr;
        }
        auto [it, inserted] = map_.try_emplace(d, cell);
        return inserted ? nullptr : &it->second;
    }

private:
    std::vector<DiffCell> flat_;
    std::unordered_map<Value, DiffCell> map_;
};

}  // namespace

Verdict verify_triangle_set(const std::vector<Block>& blocks) {
    if (blocks.empty()) return malformed("no blocks");
    const std::size_t len = blocks.front().size();
    if (len == 0) return malformed("block 0 is empty");

    Value scope = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        if (b.size() != len)
            return malformed("block " + std::to_string(i) + " has length " + std::to_string(b.size()) +
                             ", expected " + std::to_string(len));
        if (b.front() != 0) return malformed("block " + std::to_string(i) + " does not start at 0");
        for (std::size_t j = 1; j < b.size(); ++j)
            if (b[j] <= b[j - 1])
                return malformed("block " + std::to_string(i) + " not strictly increasing at index " +
                                 std::to_string(j));
        scope = std::max(scope, b.back());
    }

    CollisionTable table(scope);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        for (int lo = 0; lo + 1 < static_cast<int>(len); ++lo) {
            for (int hi = lo + 1; hi < static_cast<int>(len); ++hi) {
                const Value d = b[hi] - b[lo];
                const DiffCell cell{static_cast<int>(i), hi, lo};
                if (const DiffCell* prev = table.probe(d, cell)) return collision(d, *prev, cell);
            }
        }
    }

    Verdict v;
    v.status = Verdict::Status::Valid;
    v.scope = scope;
    return v;
}

Verdict verify_triangle_set(const TriangleSet& t) { return verify_triangle_set(t.blocks); }

Verdict verify_packing(const Packing& p) {
    if (p.modulus < 1) return malformed("modulus must be positive");
    if (p.blocks.empty()) return malformed("no blocks");
    const std::size_t len = p.blocks.front().size();
    if (len == 0) return malformed("block 0 is empty");

    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const auto& b = p.blocks[i];
        if (b.size() != len)
            return malformed("block " + std::to_string(i) + " has length " + std::to_string(b.size()) +
                             ", expected " + std::to_string(len));
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] < 0 || b[j] >= p.modulus)
                return malformed("block " + std::to_string(i) + " residue " + std::to_string(b[j]) +
                                 " outside [0, " + std::to_string(p.modulus) + ")");
    }

    CollisionTable table(p.modulus - 1);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const auto& b = p.blocks[i];
        for (int j = 0; j < static_cast<int>(len); ++j) {
            for (int l = 0; l < static_cast<int>(len); ++l) {
                if (j == l) continue;
                const Value d = ((b[j] - b[l]) % p.modulus + p.modulus) % p.modulus;
                const DiffCell cell{static_cast<int>(i), j, l};
                if (d == 0) return collision(0, DiffCell{static_cast<int>(i), l, j}, cell);
                if (const DiffCell* prev = table.probe(d, cell)) return collision(d, *prev, cell);
            }
        }
    }

    Verdict v;
    v.status = Verdict::Status::Valid;
    v.scope = p.modulus - 1;
    return v;
}

TriangleSet packing_to_triangle_set(const Packing& p) {
    Verdict pv = verify_packing(p);
    if (!pv.valid()) throw std::invalid_argument("packing_to_triangle_set: " + pv.describe());

    TriangleSet out;
    out.blocks.reserve(p.blocks.size());
    for (const auto& residues : p.blocks) {
        std::vector<Value> r = residues;
        std::sort(r.begin(), r.end());
        const std::size_t len = r.size();

        // Cut at the largest cyclic gap (first on ties): the rotation whose
        // translated maximum, v - gap, is smallest.
        std::size_t cut = 0;
        Value best_gap = -1;
        for (std::size_t i = 0; i < len; ++i) {
            const Value gap = (i + 1 < len) ? r[i + 1] - r[i] : p.modulus - r[len - 1] + r[0];
            if (gap > best_gap) {
                best_gap = gap;
                cut = (i + 1) % len;
            }
        }

        Block b(len);
        const Value start = r[cut];
        for (std::size_t i = 0; i < len; ++i) b[i] = ((r[i] - start) % p.modulus + p.modulus) % p.modulus;
        std::sort(b.begin(), b.end());
        out.blocks.push_back(std::move(b));
    }

    Verdict tv = verify_triangle_set(out);
    if (!tv.valid() || tv.scope > p.modulus - 1)
        throw std::logic_error("packing_to_triangle_set: postcondition failed: " + tv.describe());
    return out;
}

TriangleSet reduce(const TriangleSet& t) {
    if (t.n() < 2) throw std::invalid_argument("reduce: need at least 2 blocks");
    Verdict v = verify_triangle_set(t);
    if (!v.valid()) throw std::invalid_argument("reduce: input not a valid set: " + v.describe());

    const Value m = t.scope();
    std::size_t drop = 0;
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        if (t.blocks[i].back() == m) {
            drop = i;
            break;
        }
    }
    TriangleSet out = t;
    out.blocks.erase(out.blocks.begin() + static_cast<std::ptrdiff_t>(drop));
    return out;
}

TriangleSet shorten(const TriangleSet& t) {
    if (t.k() < 1) throw std::invalid_argument("shorten: order is already 0");
    Verdict v = verify_triangle_set(t);
    if (!v.valid()) throw std::invalid_argument("shorten: input not a valid set: " + v.describe());

    TriangleSet out = t;
    for (auto& b : out.blocks) b.pop_back();
    return out;
}

Value trivial_lower_bound(Value n, Value k) {
    if (n < 1 || k < 1) throw std::invalid_argument("trivial_lower_bound: need n, k >= 1");
    return n * k * (k + 1) / 2;
}

Value klove_lower_bound(Value n, Value k) {
    if (n < 1 || k < 1) throw std::invalid_argument("klove_lower_bound: need n, k >= 1");

    // n(k^2 - 2k*sqrt(k) + (k + sqrt(k))/4) = (P - Q*sqrt(k)) / 4 with
    // P = n(4k^2 + k), Q = n(8k - 1). When k is a square this is rational;
    // otherwise it is irrational, so ceil = floor + 1, and the floor comes
    // from isqrt(Q^2 k) via floor(x/4) = floor(floor(x)/4).
    const i128 P = i128(n) * (i128(4) * k * k + k);
    const i128 Q = i128(n) * (8 * k - 1);
    const Value s = isqrt64(k);

    i128 result;
    if (s * s == k) {
        result = ceil_div(P - Q * s, 4);
    } else {
        const i128 f = static_cast<i128>(isqrt(u128(Q) * u128(Q) * u128(k)));
        result = floor_div(P - f - 1, 4) + 1;
    }
    if (result < 0) result = 0;
    return static_cast<Value>(result);
}

BoundsReport best_lower_bound(Value n, Value k) {
    BoundsReport r;
    r.trivial = trivial_lower_bound(n, k);
    r.klove = klove_lower_bound(n, k);
    if (k == 1) {
        r.exact = n;
    } else if (k == 2) {
        r.exact = (n % 4 == 0 || n % 4 == 1) ? 3 * n : 3 * n + 1;
    }
    r.best = std::max(r.trivial, r.klove);
    if (r.exact) r.best = std::max(r.best, *r.exact);
    return r;
}

}  // namespace dts
