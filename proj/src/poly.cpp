#include "sagbi/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sagbi {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        fail(ErrorCode::Usage, "integer overflow in coefficient/exponent arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorCode::Usage, "integer overflow in coefficient/exponent arithmetic");
    return r;
}

}  // namespace

std::int64_t total_degree(const Expo& u) {
    std::int64_t d = 0;
    for (std::int64_t e : u) d = checked_add(d, e);
    return d;
}

Expo act_on_exponents(const Permutation& g, const Expo& u) {
    return act_on_vector(g, u);
}

Poly Poly::monomial(Expo u, std::int64_t c) {
    Poly p(static_cast<int>(u.size()));
    p.add_term(u, c);
    return p;
}

Poly Poly::constant(int n, std::int64_t c) {
    return monomial(Expo(n, 0), c);
}

std::int64_t Poly::coeff(const Expo& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Expo& u, std::int64_t c) {
    if (static_cast<int>(u.size()) != n_)
        fail(ErrorCode::Usage, "add_term: exponent length mismatch");
    for (std::int64_t e : u)
        if (e < 0) fail(ErrorCode::Usage, "negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(u, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.n_ != n_) fail(ErrorCode::Usage, "poly addition: ring mismatch");
    for (const auto& [u, c] : other.terms_) add_term(u, c);
    return *this;
}

Poly Poly::operator*(const Poly& other) const {
    if (other.n_ != n_) fail(ErrorCode::Usage, "poly multiplication: ring mismatch");
    Poly out(n_);
    for (const auto& [u, cu] : terms_) {
        for (const auto& [v, cv] : other.terms_) {
            Expo w(n_);
            for (int i = 0; i < n_; ++i) w[i] = checked_add(u[i], v[i]);
            out.add_term(w, checked_mul(cu, cv));
        }
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [u, c] : terms_) {
        std::int64_t a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (u[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (u[i] != 1) mono += "^" + std::to_string(u[i]);
        }
        if (mono.empty()) {
            out << a;
        } else if (a == 1) {
            out << mono;
        } else {
            out << a << "*" << mono;
        }
    }
    return out.str();
}

Poly orbit_sum(const PermGroup& group, const Expo& u) {
    if (static_cast<int>(u.size()) != group.n)
        fail(ErrorCode::Usage, "orbit_sum: length mismatch");
    std::set<Expo> orbit;
    for (const auto& g : group.elements) orbit.insert(act_on_exponents(g, u));
    Poly p(group.n);
    for (const auto& v : orbit) p.add_term(v, 1);
    return p;
}

Poly elementary_symmetric(const std::vector<int>& S, int d, int n) {
    if (S.empty()) fail(ErrorCode::Usage, "elementary_symmetric: empty variable set");
    if (d < 1 || d > static_cast<int>(S.size()))
        fail(ErrorCode::Usage, "elementary_symmetric: degree out of range");
    std::vector<int> vars = S;
    std::sort(vars.begin(), vars.end());
    for (int v : vars)
        if (v < 1 || v > n) fail(ErrorCode::Usage, "elementary_symmetric: variable out of range");

    Poly p(n);
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(pick.size()) == d) {
            Expo u(n, 0);
            for (int v : pick) u[v - 1] = 1;
            p.add_term(u, 1);
            return;
        }
        for (std::size_t i = start; i < vars.size(); ++i) {
            pick.push_back(vars[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return p;
}

Poly act(const Permutation& g, const Poly& p) {
    if (g.degree() != p.vars()) fail(ErrorCode::Usage, "act: degree mismatch");
    Poly out(p.vars());
    for (const auto& [u, c] : p.terms()) out.add_term(act_on_exponents(g, u), c);
    return out;
}

bool is_invariant(const PermGroup& group, const Poly& p) {
    if (group.n != p.vars()) fail(ErrorCode::Usage, "is_invariant: degree mismatch");
    for (const auto& g : group.generators)
        if (act(g, p) != p) return false;
    return true;
}

std::pair<Expo, std::int64_t> initial_monomial(const TermOrder& order, const Poly& p) {
    if (p.is_zero()) fail(ErrorCode::Usage, "initial_monomial of the zero polynomial");
    if (order.degree() != p.vars()) fail(ErrorCode::Usage, "initial_monomial: degree mismatch");
    const Expo* best = nullptr;
    for (const auto& [u, c] : p.terms()) {
        if (!best || order.compare(u, *best) == Ordering::Greater) best = &u;
    }
    return {*best, p.coeff(*best)};
}

ComprehensiveBasis comprehensive_basis(const PermGroup& group) {
    ComprehensiveBasis basis;
    for (std::size_t i = 0; i < group.orbits.size(); ++i) {
        std::vector<int> S;
        for (int v : group.orbits[i]) S.push_back(v + 1);
        for (int d = 1; d <= static_cast<int>(S.size()); ++d) {
            basis.polys.push_back(elementary_symmetric(S, d, group.n));
            basis.labels.emplace_back(static_cast<int>(i) + 1, d);
        }
    }
    return basis;
}

}  // namespace sagbi
