#include "sagbi/cone.hpp"

#include <algorithm>
#include <set>

#include "sagbi/error.hpp"

namespace sagbi {

bool IntervalSet::contains(const Rat& t) const {
    for (const auto& p : pieces) {
        bool above = t > p.lo || (t == p.lo && p.lo_closed);
        bool below = t < p.hi || (t == p.hi && p.hi_closed);
        if (above && below) return true;
    }
    return false;
}

InitialCone::InitialCone(PermGroup group, TermOrder order)
    : group_(std::move(group)), order_(std::move(order)), n_(group_.n) {
    if (group_.n != order_.degree())
        fail(ErrorCode::Usage, "cone: group degree and order degree differ");
}

bool InitialCone::contains(const std::vector<std::int64_t>& u) const {
    if (static_cast<int>(u.size()) != n_)
        fail(ErrorCode::Usage, "cone membership: length mismatch");
    for (std::int64_t e : u)
        if (e < 0) fail(ErrorCode::Usage, "cone membership: negative entry");
    std::vector<std::int64_t> d(n_);
    for (const auto& g : group_.elements) {
        if (g.is_identity()) continue;
        for (int i = 0; i < n_; ++i) d[g.apply0(i)] = -u[i];
        for (int i = 0; i < n_; ++i) d[i] += u[i];
        if (order_.lex_sign(d) == Sign::Negative) return false;
        std::fill(d.begin(), d.end(), 0);
    }
    return true;
}

bool InitialCone::contains(const std::vector<Rat>& u) const {
    if (static_cast<int>(u.size()) != n_)
        fail(ErrorCode::Usage, "cone membership: length mismatch");
    for (const auto& e : u)
        if (e < 0) fail(ErrorCode::Usage, "cone membership: negative entry");
    std::vector<Rat> d(n_);
    for (const auto& g : group_.elements) {
        if (g.is_identity()) continue;
        auto gu = act_on_vector(g, u);
        for (int i = 0; i < n_; ++i) d[i] = u[i] - gu[i];
        if (order_.lex_sign(d) == Sign::Negative) return false;
    }
    return true;
}

bool InitialCone::is_initial_monomial(const Expo& u) const {
    return contains(u);
}

IntervalSet InitialCone::segment_membership(const std::vector<Rat>& base,
                                            const std::vector<Rat>& dir,
                                            const Permutation& translate,
                                            const Rat& lo, const Rat& hi) const {
    if (static_cast<int>(base.size()) != n_ || static_cast<int>(dir.size()) != n_ ||
        translate.degree() != n_)
        fail(ErrorCode::Usage, "segment_membership: degree mismatch");
    if (lo > hi) fail(ErrorCode::Usage, "segment_membership: empty domain");

    // Path p(t) = translate.(base + t*dir) = A + t*B.
    auto A = act_on_vector(translate, base);
    auto B = act_on_vector(translate, dir);

    // Each coordinate is affine in t: nonnegative at both domain
    // endpoints implies nonnegative throughout.
    for (int i = 0; i < n_; ++i) {
        if (A[i] + lo * B[i] < 0 || A[i] + hi * B[i] < 0)
            fail(ErrorCode::Usage, "segment leaves the nonnegative orthant");
    }

    // Breakpoints: roots of every affine image l_k(p(t) - g.p(t)).
    std::set<Rat> bps{lo, hi};
    for (const auto& g : group_.elements) {
        if (g.is_identity()) continue;
        auto gA = act_on_vector(g, A);
        auto gB = act_on_vector(g, B);
        for (const auto& row : order_.rows()) {
            Rat alpha = 0, beta = 0;
            for (int c = 0; c < n_; ++c) {
                alpha += row[c] * (A[c] - gA[c]);
                beta += row[c] * (B[c] - gB[c]);
            }
            if (beta != 0) {
                Rat root = -alpha / beta;
                if (root > lo && root < hi) bps.insert(root);
            }
        }
    }

    auto member_at = [&](const Rat& t) {
        std::vector<Rat> p(n_);
        for (int i = 0; i < n_; ++i) p[i] = A[i] + t * B[i];
        return contains(p);
    };

    std::vector<Rat> pts(bps.begin(), bps.end());
    // Cells alternate point / open interval; evaluate open cells at
    // their midpoint (no sign change inside a cell).
    struct Cell {
        bool is_point;
        Rat left, right;
        bool member;
    };
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        cells.push_back({true, pts[i], pts[i], member_at(pts[i])});
        if (i + 1 < pts.size()) {
            Rat mid = (pts[i] + pts[i + 1]) / 2;
            cells.push_back({false, pts[i], pts[i + 1], member_at(mid)});
        }
    }

    IntervalSet out;
    out.domain_lo = lo;
    out.domain_hi = hi;
    std::size_t i = 0;
    while (i < cells.size()) {
        if (!cells[i].member) {
            ++i;
            continue;
        }
        Interval piece;
        piece.lo = cells[i].left;
        piece.lo_closed = cells[i].is_point;
        std::size_t j = i;
        while (j + 1 < cells.size() && cells[j + 1].member) ++j;
        piece.hi = cells[j].right;
        piece.hi_closed = cells[j].is_point;
        out.pieces.push_back(std::move(piece));
        i = j + 1;
    }
    return out;
}

namespace {

// Rank-minimal pair (a,b): a,b in the same orbit, transposition (a b)
// absent, with x_b minimal under the order and then x_a minimal among
// the variables above it. For the built-in orders (x_1 > ... > x_n)
// this is exactly "b minimal, then a minimal".
struct SegmentPlan {
    int lo_var, hi_var;  // 0-based; x_{lo_var} > x_{hi_var}
    std::vector<Rat> base, dir;
};

std::optional<SegmentPlan> plan_segment(const PermGroup& group, const TermOrder& order) {
    int n = group.n;
    std::vector<int> ranking = order.variable_ranking();
    std::vector<int> rankpos(n);
    for (int k = 0; k < n; ++k) rankpos[ranking[k]] = k;

    std::vector<int> orbit_of(n, -1);
    for (std::size_t i = 0; i < group.orbits.size(); ++i)
        for (int p : group.orbits[i]) orbit_of[p] = static_cast<int>(i);

    int best_lo = -1, best_hi = -1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (orbit_of[i] != orbit_of[j]) continue;
            std::vector<int> img(n);
            for (int k = 0; k < n; ++k) img[k] = k;
            std::swap(img[i], img[j]);
            if (group.contains(Permutation(std::move(img)))) continue;
            int lo = rankpos[i] < rankpos[j] ? i : j;
            int hi = lo == i ? j : i;
            if (best_hi < 0 || rankpos[hi] < rankpos[best_hi] ||
                (rankpos[hi] == rankpos[best_hi] && rankpos[lo] < rankpos[best_lo])) {
                best_lo = lo;
                best_hi = hi;
            }
        }
    }
    if (best_hi < 0) return std::nullopt;

    // u_t in ranked coordinates: weight (n-k) * t at ranked position k,
    // except the constant n - rank(b) at b's own position.
    SegmentPlan plan;
    plan.lo_var = best_lo;
    plan.hi_var = best_hi;
    plan.base.assign(n, 0);
    plan.dir.assign(n, 0);
    int beta = rankpos[best_hi] + 1;  // 1-based rank of the obstructed variable
    for (int i = 0; i < n; ++i) {
        int pos = rankpos[i] + 1;
        if (i == best_hi)
            plan.base[i] = n - beta;
        else
            plan.dir[i] = n - pos;
    }
    return plan;
}

}  // namespace

std::optional<Witness> InitialCone::nonclosedness_witness() const {
    ReflectionCertificate cert = is_reflection_generated(group_);
    if (cert.verdict) return std::nullopt;

    auto plan = plan_segment(group_, order_);
    if (!plan)
        fail(ErrorCode::Internal, "no obstruction pair despite non-reflection verdict");

    const Rat zero = 0, one = 1;
    for (const auto& sigma : group_.elements) {
        IntervalSet set = segment_membership(plan->base, plan->dir, sigma, zero, one);
        for (const auto& piece : set.pieces) {
            if (piece.lo == piece.hi) continue;
            bool open_lo = !piece.lo_closed;
            bool open_hi = !piece.hi_closed;
            if (!open_lo && !open_hi) continue;

            Witness w;
            w.obstruction_pair = {std::min(plan->lo_var, plan->hi_var) + 1,
                                  std::max(plan->lo_var, plan->hi_var) + 1};
            w.translate = sigma;
            auto A = act_on_vector(sigma, plan->base);
            auto B = act_on_vector(sigma, plan->dir);
            // Approach the open end from inside the interval.
            if (open_lo) {
                w.t_star = piece.lo;
                w.direction = B;
                w.s_max = piece.hi_closed ? Rat(piece.hi - piece.lo)
                                          : Rat((piece.hi - piece.lo) / 2);
            } else {
                w.t_star = piece.hi;
                w.direction = B;
                for (auto& d : w.direction) d = -d;
                w.s_max = piece.lo_closed ? Rat(piece.hi - piece.lo)
                                          : Rat((piece.hi - piece.lo) / 2);
            }
            w.point.resize(n_);
            for (int i = 0; i < n_; ++i) w.point[i] = A[i] + w.t_star * B[i];
            if (contains(w.point))
                fail(ErrorCode::Internal, "witness point unexpectedly inside the cone");
            return w;
        }
    }
    fail(ErrorCode::Internal,
         "no non-closed translate interval found; this contradicts the finiteness theorem");
}

bool InitialCone::verify_witness(const Witness& w, int samples) const {
    if (static_cast<int>(w.point.size()) != n_ ||
        static_cast<int>(w.direction.size()) != n_ || w.s_max <= 0 || samples < 1)
        return false;
    try {
        if (contains(w.point)) return false;
        Rat s = w.s_max;
        for (int k = 0; k < samples; ++k) {
            std::vector<Rat> p(n_);
            for (int i = 0; i < n_; ++i) p[i] = w.point[i] + s * w.direction[i];
            if (!contains(p)) return false;
            s /= 2;
        }
    } catch (const Error&) {
        return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>>
halfplane_irreducibles(const Rat& slope, std::int64_t x_max) {
    if (slope <= 0) fail(ErrorCode::Usage, "slope must be positive");
    if (x_max < 0) fail(ErrorCode::Usage, "x_max must be nonnegative");

    auto member = [&](std::int64_t x, std::int64_t y) {
        if (x == 0 && y == 0) return true;
        return Rat(y) > slope * x;
    };

    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t x = 0; x <= x_max; ++x) {
        // Any member with y > slope*x + 1 splits off (0,1), so the only
        // candidate is the least y above the line.
        std::int64_t y;
        if (x == 0) {
            y = 1;
        } else {
            Int fl = rat_floor(slope * x);
            if (fl > (Int(1) << 60)) fail(ErrorCode::Usage, "slope*x too large");
            y = static_cast<std::int64_t>(fl) + 1;
        }
        bool reducible = false;
        for (std::int64_t x1 = 0; x1 <= x && !reducible; ++x1) {
            for (std::int64_t y1 = 0; y1 <= y && !reducible; ++y1) {
                if ((x1 == 0 && y1 == 0) || (x1 == x && y1 == y)) continue;
                if (member(x1, y1) && member(x - x1, y - y1)) reducible = true;
            }
        }
        if (!reducible) out.emplace_back(x, y);
    }
    return out;
}

}  // namespace sagbi
