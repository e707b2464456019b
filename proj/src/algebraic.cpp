#include "dts/algebraic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dts/intmath.hpp"

namespace dts::algebraic {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(u128(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (x % p == 0) return x == p;
    }
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is known to be exact below 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t y = powmod(a, d, x);
        if (y == 1 || y == x - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            y = mulmod(y, y, x);
            if (y == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Value next_prime_at_least(Value x) {
    if (x < 1) throw std::invalid_argument("next_prime_at_least: need x >= 1");
    Value p = std::max<Value>(x, 2);
    while (!is_prime(static_cast<std::uint64_t>(p))) ++p;
    return p;
}

namespace {

// GF(q^3) realized as polynomials c0 + c1 x + c2 x^2 modulo a monic
// irreducible cubic x^3 + a x^2 + b x + c over GF(q).
struct CubicField {
    Value q;
    Value a, b, c;
    // x^3 and x^4 reduced to quadratics, precomputed.
    Value x3_0, x3_1, x3_2;
    Value x4_0, x4_1, x4_2;
};

struct F3 {
    Value c0 = 0, c1 = 0, c2 = 0;

    bool operator==(const F3&) const = default;
};

bool cubic_has_root(Value q, Value a, Value b, Value c) {
    for (Value x = 0; x < q; ++x) {
        if ((((x + a) * x + b) % q * x + c) % q == 0) return true;
    }
    return false;
}

CubicField make_field(Value q) {
    // Lexicographically smallest (a, b, c) with x^3 + a x^2 + b x + c
    // irreducible; cubics are irreducible over GF(q) iff they have no root.
    for (Value a = 0; a < q; ++a)
        for (Value b = 0; b < q; ++b)
            for (Value c = 0; c < q; ++c) {
                if (cubic_has_root(q, a, b, c)) continue;
                CubicField f{q, a, b, c, 0, 0, 0, 0, 0, 0};
                f.x3_0 = (q - c) % q;
                f.x3_1 = (q - b) % q;
                f.x3_2 = (q - a) % q;
                // x^4 = x * x^3 = x3_2 * x^3 + x3_1 * x^2 + x3_0 * x
                f.x4_0 = f.x3_2 * f.x3_0 % q;
                f.x4_1 = (f.x3_2 * f.x3_1 + f.x3_0) % q;
                f.x4_2 = (f.x3_2 * f.x3_2 + f.x3_1) % q;
                return f;
            }
    throw std::logic_error("make_field: no irreducible cubic found (q not prime?)");
}

F3 mul(const CubicField& f, const F3& u, const F3& v) {
    const Value q = f.q;
    const Value t0 = u.c0 * v.c0 % q;
    const Value t1 = (u.c0 * v.c1 + u.c1 * v.c0) % q;
    const Value t2 = (u.c0 * v.c2 + u.c1 * v.c1 + u.c2 * v.c0) % q;
    const Value t3 = (u.c1 * v.c2 + u.c2 * v.c1) % q;
    const Value t4 = u.c2 * v.c2 % q;
    return {(t0 + t3 * f.x3_0 + t4 * f.x4_0) % q,
            (t1 + t3 * f.x3_1 + t4 * f.x4_1) % q,
            (t2 + t3 * f.x3_2 + t4 * f.x4_2) % q};
}

F3 pow(const CubicField& f, F3 base, std::uint64_t e) {
    F3 r{1, 0, 0};
    while (e) {
        if (e & 1) r = mul(f, r, base);
        base = mul(f, base, base);
        e >>= 1;
    }
    return r;
}

std::vector<Value> prime_factors(Value x) {
    std::vector<Value> ps;
    for (Value p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        ps.push_back(p);
        while (x % p == 0) x /= p;
    }
    if (x > 1) ps.push_back(x);
    return ps;
}

F3 element_from_index(Value q, Value e) {
    return {e % q, (e / q) % q, e / (q * q)};
}

F3 smallest_primitive_element(const CubicField& f) {
    const Value group_order = f.q * f.q * f.q - 1;
    const std::vector<Value> factors = prime_factors(group_order);
    const F3 one{1, 0, 0};
    for (Value e = 2; e < f.q * f.q * f.q; ++e) {
        const F3 cand = element_from_index(f.q, e);
        bool primitive = true;
        for (Value p : factors) {
            if (pow(f, cand, static_cast<std::uint64_t>(group_order / p)) == one) {
                primitive = false;
                break;
            }
        }
        if (primitive) return cand;
    }
    throw std::logic_error("smallest_primitive_element: none found (q not prime?)");
}

std::vector<Value> least_translate_with_zero(const std::vector<Value>& set, Value v) {
    std::vector<Value> best, cand;
    for (Value d : set) {
        cand.clear();
        for (Value s : set) cand.push_back(((s - d) % v + v) % v);
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = cand;
    }
    return best;
}

}  // namespace

Packing singer_difference_set(Value q, Value max_q) {
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("singer_difference_set: q must be prime");
    if (q > max_q)
        throw std::invalid_argument("singer_difference_set: q exceeds the configured maximum " +
                                    std::to_string(max_q));

    const CubicField f = make_field(q);
    const F3 alpha = smallest_primitive_element(f);
    const Value v = q * q + q + 1;

    // Powers of alpha landing in the plane {c2 = 0} hit q+1 classes of
    // exponents mod v; those classes are the difference set.
    std::vector<bool> hit(static_cast<std::size_t>(v), false);
    F3 cur{1, 0, 0};
    for (Value i = 0, order = q * q * q - 1; i < order; ++i) {
        if (cur.c2 == 0) hit[static_cast<std::size_t>(i % v)] = true;
        cur = mul(f, cur, alpha);
    }
    std::vector<Value> residues;
    for (Value i = 0; i < v; ++i)
        if (hit[static_cast<std::size_t>(i)]) residues.push_back(i);

    if (static_cast<Value>(residues.size()) != q + 1)
        throw std::logic_error("singer_difference_set: expected " + std::to_string(q + 1) +
                               " residues, got " + std::to_string(residues.size()));

    Packing out{v, {least_translate_with_zero(residues, v)}};
    const Verdict verdict = verify_packing(out);
    if (!verdict.valid())
        throw std::logic_error("singer_difference_set: postcondition failed: " + verdict.describe());
    return out;
}

Packing cfj_composition(const Packing& base, Value n) {
    if (base.blocks.size() != 1)
        throw std::invalid_argument("cfj_composition: base must have exactly one block");
    const Verdict base_verdict = verify_packing(base);
    if (!base_verdict.valid())
        throw std::invalid_argument("cfj_composition: base invalid: " + base_verdict.describe());
    const Value k = static_cast<Value>(base.blocks.front().size());
    if (!is_prime(static_cast<std::uint64_t>(n)))
        throw std::invalid_argument("cfj_composition: n must be prime");
    if (n <= k - 1)
        throw std::invalid_argument("cfj_composition: need n > k - 1 = " + std::to_string(k - 1));

    std::vector<Value> d = base.blocks.front();
    std::sort(d.begin(), d.end());
    const Value v = base.modulus;

    Packing out;
    out.modulus = n * v;
    out.blocks.reserve(static_cast<std::size_t>(n));
    for (Value j = 0; j < n; ++j) {
        std::vector<Value> block;
        block.reserve(d.size());
        for (Value i = 0; i < k; ++i) block.push_back((d[static_cast<std::size_t>(i)] + v * ((j * i) % n)) % (n * v));
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    }

    const Verdict verdict = verify_packing(out);
    if (!verdict.valid())
        throw std::logic_error("cfj_composition: postcondition failed: " + verdict.describe());
    return out;
}

std::pair<TriangleSet, ConstructionRecipe> asymptotic_construct(Value n, Value k) {
    if (n < 1 || k < 1) throw std::invalid_argument("asymptotic_construct: need n, k >= 1");
    if (n != 1 && n <= k)
        throw std::invalid_argument("asymptotic_construct: requires n > k or n = 1");

    ConstructionRecipe recipe;
    recipe.n = n;
    recipe.k = k;
    recipe.q = next_prime_at_least(k);

    Packing packing = singer_difference_set(recipe.q);
    if (n > 1) {
        Value p = next_prime_at_least(n);
        while (p <= recipe.q) p = next_prime_at_least(p + 1);
        recipe.p = p;
        packing = cfj_composition(packing, p);
    }
    recipe.packing_modulus = packing.modulus;
    recipe.packing_block_size = packing.k();

    TriangleSet t = packing_to_triangle_set(packing);
    while (t.n() > n) {
        t = reduce(t);
        ++recipe.reductions;
    }
    while (t.k() > k) {
        t = shorten(t);
        ++recipe.shortenings;
    }

    const Verdict verdict = verify_triangle_set(t);
    if (!verdict.valid() || t.n() != n || t.k() != k || verdict.scope > packing.modulus - 1)
        throw std::logic_error("asymptotic_construct: postcondition failed: " + verdict.describe());
    return {std::move(t), recipe};
}

Rational asymptotic_ratio(Value n, Value k) {
    const auto [t, recipe] = asymptotic_construct(n, k);
    Value num = t.scope();
    Value den = n * k * k;
    const Value g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

}  // namespace dts::algebraic
