#include "sagbi/basis.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "sagbi/error.hpp"

namespace sagbi {

namespace {

// All weak compositions of d into n parts.
void weak_compositions(int n, std::int64_t d, Expo& cur, int pos,
                       const std::function<void(const Expo&)>& emit) {
    if (pos == n - 1) {
        cur[pos] = d;
        emit(cur);
        cur[pos] = 0;
        return;
    }
    for (std::int64_t v = d; v >= 0; --v) {
        cur[pos] = v;
        weak_compositions(n, d - v, cur, pos + 1, emit);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Expo> enumerate_initial_monomials(const InitialCone& cone, int d) {
    if (d < 0) fail(ErrorCode::Usage, "negative degree");
    std::vector<Expo> out;
    Expo cur(cone.vars(), 0);
    weak_compositions(cone.vars(), d, cur, 0, [&](const Expo& u) {
        if (cone.is_initial_monomial(u)) out.push_back(u);
    });
    std::sort(out.begin(), out.end(), [&](const Expo& a, const Expo& b) {
        return cone.order().compare(a, b) == Ordering::Greater;
    });
    return out;
}

bool is_irreducible(const InitialCone& cone, const Expo& u) {
    std::int64_t du = total_degree(u);
    if (du == 0) fail(ErrorCode::Usage, "irreducibility of the zero vector is undefined");
    if (!cone.is_initial_monomial(u))
        fail(ErrorCode::Usage, "irreducibility: vector is not an initial monomial");

    int n = cone.vars();
    // One half of any decomposition has degree <= |u|/2; at equality,
    // only test the order-smaller half.
    Expo v(n, 0);
    while (true) {
        int i = 0;
        while (i < n && v[i] == u[i]) v[i++] = 0;
        if (i == n) break;
        ++v[i];

        std::int64_t dv = total_degree(v);
        if (dv == 0 || 2 * dv > du) continue;
        Expo w(n);
        for (int k = 0; k < n; ++k) w[k] = u[k] - v[k];
        if (total_degree(w) == 0) continue;
        if (2 * dv == du && cone.order().compare(v, w) == Ordering::Greater) continue;
        if (cone.is_initial_monomial(v) && cone.is_initial_monomial(w)) return false;
    }
    return true;
}

std::vector<SagbiElement> minimal_sagbi_up_to(const InitialCone& cone, int max_degree) {
    if (max_degree < 1) fail(ErrorCode::Usage, "max_degree must be at least 1");
    std::vector<SagbiElement> out;
    for (int d = 1; d <= max_degree; ++d) {
        for (const auto& u : enumerate_initial_monomials(cone, d)) {
            if (is_irreducible(cone, u))
                out.push_back({u, orbit_sum(cone.group(), u), d});
        }
    }
    return out;
}

FinitenessVerdict finiteness_verdict(const PermGroup& group, const TermOrder& order,
                                     int count_bound) {
    FinitenessVerdict v;
    v.certificate = is_reflection_generated(group);
    v.finite = v.certificate.verdict;
    if (v.finite) {
        v.basis = comprehensive_basis(group);
        return v;
    }
    InitialCone cone(group, order);
    v.witness = cone.nonclosedness_witness();
    if (!v.witness)
        fail(ErrorCode::Internal, "closed verdict for a non-reflection group");
    for (int d = 1; d <= count_bound; ++d) {
        std::int64_t count = 0;
        for (const auto& u : enumerate_initial_monomials(cone, d))
            if (is_irreducible(cone, u)) ++count;
        v.irreducible_counts.emplace_back(d, count);
    }
    return v;
}

std::optional<Expo> verify_generates(const InitialCone& cone,
                                     const std::vector<Expo>& generators,
                                     int max_degree) {
    for (const auto& g : generators) {
        if (total_degree(g) == 0) fail(ErrorCode::Usage, "zero generator");
        if (!cone.is_initial_monomial(g))
            fail(ErrorCode::Usage, "generator is not an initial monomial");
    }

    int n = cone.vars();
    std::set<Expo> reached;
    reached.insert(Expo(n, 0));
    std::vector<Expo> unreachable;
    for (int d = 1; d <= max_degree; ++d) {
        for (const auto& u : enumerate_initial_monomials(cone, d)) {
            bool ok = false;
            for (const auto& g : generators) {
                bool fits = true;
                Expo rest(n);
                for (int i = 0; i < n && fits; ++i) {
                    if (g[i] > u[i]) fits = false;
                    else rest[i] = u[i] - g[i];
                }
                if (fits && reached.count(rest)) {
                    ok = true;
                    break;
                }
            }
            if (ok)
                reached.insert(u);
            else
                unreachable.push_back(u);
        }
    }
    if (unreachable.empty()) return std::nullopt;
    return *std::min_element(unreachable.begin(), unreachable.end(),
                             [&](const Expo& a, const Expo& b) {
                                 return cone.order().compare(a, b) == Ordering::Less;
                             });
}

}  // namespace sagbi
