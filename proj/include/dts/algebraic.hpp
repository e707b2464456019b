#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "dts/core.hpp"

namespace dts::algebraic {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t x);

// Smallest prime >= x. Requires x >= 1.
Value next_prime_at_least(Value x);

// Exact reduced fraction, den > 0.
struct Rational {
    Value num = 0;
    Value den = 1;

    double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// Singer difference set: a 1-DP(q^2+q+1, q+1) built from GF(q^3) over the
// lexicographically smallest monic irreducible cubic and its smallest
// primitive element. The block is the exponents (mod q^2+q+1) of the powers
// landing in the plane spanned by {1, x}, canonicalized to the
// lexicographically least translate containing 0. q must be prime and at
// most max_q.
Packing singer_difference_set(Value q, Value max_q = 101);

// Chen-Fan-Jin style composition: blows a single-block 1-DP(v, k) up to an
// n-DP(n*v, k) for prime n > k-1 via X_j = { d_i + v*((j*i) mod n) }. The
// output is verified as a hard postcondition; a failed verdict throws.
Packing cfj_composition(const Packing& base, Value n);

struct ConstructionRecipe {
    Value n = 0, k = 0;          // requested parameters
    std::optional<Value> p;      // composition prime (absent on the n = 1 path)
    Value q = 0;                 // Singer field prime
    Value packing_modulus = 0;   // v of the intermediate packing
    Value packing_block_size = 0;
    int reductions = 0;
    int shortenings = 0;
};

// Builds an (n, k) set with scope at most p(q^2+q+1) for the smallest
// primes q >= k and p >= n with p > q: Singer set, composition, packing
// conversion, then reductions followed by shortenings. Requires n > k or
// n = 1.
std::pair<TriangleSet, ConstructionRecipe> asymptotic_construct(Value n, Value k);

// scope(asymptotic_construct(n, k)) / (n k^2) as an exact fraction.
Rational asymptotic_ratio(Value n, Value k);

}  // namespace dts::algebraic
