#ifndef SAGBI_CONE_HPP
#define SAGBI_CONE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sagbi/perm.hpp"
#include "sagbi/poly.hpp"
#include "sagbi/rational.hpp"
#include "sagbi/termorder.hpp"

namespace sagbi {

struct Interval {
    Rat lo, hi;
    bool lo_closed = true, hi_closed = true;
};

// Maximally merged disjoint intervals with exact rational endpoints.
struct IntervalSet {
    Rat domain_lo, domain_hi;
    std::vector<Interval> pieces;

    bool empty() const { return pieces.empty(); }
    bool contains(const Rat& t) const;
};

// A point outside the cone approachable from inside along a segment.
struct Witness {
    std::vector<Rat> point;
    std::vector<Rat> direction;
    Rat s_max;
    Rat t_star;
    std::pair<int, int> obstruction_pair;  // 1-based, a < b
    Permutation translate = Permutation(0);
};

// The initial convex cone of the pair (group, order): nonnegative
// vectors u with lex_sign(u - g.u) >= 0 for every group element g. Its
// integer points are exactly the initial monomials of the invariant
// ring.
class InitialCone {
public:
    InitialCone(PermGroup group, TermOrder order);

    const PermGroup& group() const { return group_; }
    const TermOrder& order() const { return order_; }
    int vars() const { return n_; }

    bool contains(const std::vector<Rat>& u) const;
    bool contains(const std::vector<std::int64_t>& u) const;
    bool is_initial_monomial(const Expo& u) const;

    // Exact set {t in [lo,hi] : translate.(base + t*dir) in C}. The
    // path must stay in the nonnegative orthant over the whole domain.
    IntervalSet segment_membership(const std::vector<Rat>& base,
                                   const std::vector<Rat>& dir,
                                   const Permutation& translate,
                                   const Rat& lo, const Rat& hi) const;

    // nullopt when the group is reflection-generated (cone closed,
    // finite basis). Otherwise a witness of non-closedness built from
    // the obstruction pair's segment; deterministic (smallest translate
    // in canonical element order).
    std::optional<Witness> nonclosedness_witness() const;

    // point outside C, and point + s_max*2^{-k}*direction inside C for
    // k = 0..samples-1.
    bool verify_witness(const Witness& w, int samples) const;

private:
    PermGroup group_;
    TermOrder order_;
    int n_;
};

// Irreducible elements (x,y), x <= x_max, of the planar monoid
// {(0,0)} u {(x,y) in N^2 : y > slope*x}.
std::vector<std::pair<std::int64_t, std::int64_t>>
halfplane_irreducibles(const Rat& slope, std::int64_t x_max);

}  // namespace sagbi

#endif
