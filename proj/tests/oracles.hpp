// Independent test oracles. These deliberately avoid the library code
// paths they are used to check.
#ifndef SAGBI_TESTS_ORACLES_HPP
#define SAGBI_TESTS_ORACLES_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "sagbi/basis.hpp"
#include "sagbi/cone.hpp"
#include "sagbi/perm.hpp"
#include "sagbi/poly.hpp"
#include "sagbi/rational.hpp"
#include "sagbi/termorder.hpp"

namespace oracles {

using namespace sagbi;

// Membership via direct orbit comparison: u is initial iff u >= g.u for
// every group element, compared with TermOrder::compare (not lex_sign of
// the difference).
inline bool member_oracle(const PermGroup& g, const TermOrder& o, const Expo& u) {
    for (const auto& e : g.elements) {
        if (o.compare(u, act_on_exponents(e, u)) == Ordering::Less) return false;
    }
    return true;
}

// Irreducibility by exhaustive decomposition search, v enumerated by
// degree ascending over the full box, no pruning.
inline bool irreducible_oracle(const PermGroup& g, const TermOrder& o, const Expo& u) {
    int n = static_cast<int>(u.size());
    std::vector<Expo> box;
    Expo v(n, 0);
    while (true) {
        box.push_back(v);
        int i = 0;
        while (i < n && v[i] == u[i]) v[i++] = 0;
        if (i == n) break;
        ++v[i];
    }
    std::stable_sort(box.begin(), box.end(), [](const Expo& a, const Expo& b) {
        return total_degree(a) < total_degree(b);
    });
    for (const auto& cand : box) {
        std::int64_t d = total_degree(cand);
        if (d == 0 || d == total_degree(u)) continue;
        Expo rest(n);
        for (int i = 0; i < n; ++i) rest[i] = u[i] - cand[i];
        if (member_oracle(g, o, cand) && member_oracle(g, o, rest)) return false;
    }
    return true;
}

// Definitional comparators for the built-in orders.
inline Ordering lex_oracle(const Expo& u, const Expo& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) return Ordering::Greater;
        if (u[i] < v[i]) return Ordering::Less;
    }
    return Ordering::Equal;
}

inline Ordering grlex_oracle(const Expo& u, const Expo& v) {
    auto du = total_degree(u), dv = total_degree(v);
    if (du != dv) return du > dv ? Ordering::Greater : Ordering::Less;
    return lex_oracle(u, v);
}

inline Ordering grevlex_oracle(const Expo& u, const Expo& v) {
    auto du = total_degree(u), dv = total_degree(v);
    if (du != dv) return du > dv ? Ordering::Greater : Ordering::Less;
    for (std::size_t i = u.size(); i-- > 0;) {
        if (u[i] != v[i])
            return u[i] < v[i] ? Ordering::Greater : Ordering::Less;
    }
    return Ordering::Equal;
}

// Half-plane monoid irreducibles by full double-loop scan, y bounded
// generously and the bound asserted afterwards by the caller.
inline std::vector<std::pair<std::int64_t, std::int64_t>>
sturm_oracle(const Rat& slope, std::int64_t x_max) {
    auto member = [&](std::int64_t x, std::int64_t y) {
        if (x < 0 || y < 0) return false;
        if (x == 0 && y == 0) return true;
        return Rat(y) > slope * x;
    };
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t x = 0; x <= x_max; ++x) {
        std::int64_t ymax = static_cast<std::int64_t>(rat_floor(slope * x)) + 3;
        for (std::int64_t y = 0; y <= ymax; ++y) {
            if (!member(x, y) || (x == 0 && y == 0)) continue;
            bool reducible = false;
            for (std::int64_t x1 = 0; x1 <= x && !reducible; ++x1)
                for (std::int64_t y1 = 0; y1 <= y && !reducible; ++y1) {
                    if ((x1 == 0 && y1 == 0) || (x1 == x && y1 == y)) continue;
                    if (member(x1, y1) && member(x - x1, y - y1)) reducible = true;
                }
            if (!reducible) out.emplace_back(x, y);
        }
    }
    return out;
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

inline PermGroup random_group(int max_n, int max_gens, std::mt19937& rng) {
    int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    int k = std::uniform_int_distribution<int>(0, max_gens)(rng);
    std::vector<Permutation> gens;
    for (int i = 0; i < k; ++i) gens.push_back(random_permutation(n, rng));
    return generate_group(n, gens, 100'000);
}

// Rejection-sampled admissible integer matrix order, entries in [-3,3].
inline TermOrder random_matrix_order(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    while (true) {
        std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
        for (auto& row : rows)
            for (auto& e : row) e = entry(rng);
        try {
            return TermOrder::custom(std::move(rows));
        } catch (const Error&) {
            continue;
        }
    }
}

inline Expo random_expo(int n, std::int64_t max_entry, std::mt19937& rng) {
    Expo u(n);
    std::uniform_int_distribution<std::int64_t> e(0, max_entry);
    for (auto& x : u) x = e(rng);
    return u;
}

}  // namespace oracles

#endif
