#include "sagbi/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace sagbi {

Permutation::Permutation(int n) : img_(n) {
    if (n < 0) fail(ErrorCode::Usage, "negative permutation degree");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images0) : img_(std::move(images0)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            fail(ErrorCode::Usage, "images do not form a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::parse(const std::string& cycles, int n) {
    if (n < 0) fail(ErrorCode::Parse, "negative degree");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(n, false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[i]))) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < cycles.size()) {
        if (cycles[i] != '(')
            fail(ErrorCode::Parse, "expected '(' in cycle notation: '" + cycles + "'");
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < cycles.size() && cycles[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(cycles[i])))
                fail(ErrorCode::Parse, "expected point in cycle notation: '" + cycles + "'");
            int p = 0;
            while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i]))) {
                p = p * 10 + (cycles[i] - '0');
                ++i;
            }
            if (p < 1 || p > n)
                fail(ErrorCode::Parse, "point " + std::to_string(p) +
                                           " out of range 1.." + std::to_string(n));
            if (used[p - 1])
                fail(ErrorCode::Parse, "point " + std::to_string(p) + " repeated");
            used[p - 1] = true;
            cyc.push_back(p - 1);
            skip_ws();
        }
        if (i >= cycles.size())
            fail(ErrorCode::Parse, "unterminated cycle: '" + cycles + "'");
        ++i;  // ')'
        for (std::size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        any = true;
        skip_ws();
    }
    if (!any) fail(ErrorCode::Parse, "empty permutation text");
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

std::string Permutation::cycle_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::string out;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = img_[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::vector<int> Permutation::images1() const {
    std::vector<int> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
}

Permutation compose(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree())
        fail(ErrorCode::Usage, "compose: degree mismatch");
    std::vector<int> img(g.degree());
    for (int i = 0; i < g.degree(); ++i) img[i] = g.apply0(h.apply0(i));
    return Permutation(std::move(img));
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != n) fail(ErrorCode::Usage, "contains: degree mismatch");
    return std::binary_search(elements.begin(), elements.end(), p);
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PermGroup generate_group(int n, const std::vector<Permutation>& gens, std::int64_t cap) {
    if (n < 0) fail(ErrorCode::Usage, "negative degree");
    for (const auto& g : gens)
        if (g.degree() != n)
            fail(ErrorCode::Usage, "generator degree does not match group degree");

    std::set<Permutation> closure;
    std::vector<Permutation> worklist;
    auto push = [&](const Permutation& p) {
        if (closure.insert(p).second) {
            if (static_cast<std::int64_t>(closure.size()) > cap)
                fail(ErrorCode::CapExceeded,
                     "group closure exceeds cap of " + std::to_string(cap) + " elements");
            worklist.push_back(p);
        }
    };
    push(Permutation(n));
    for (const auto& g : gens) push(g);
    // Right-multiplication by generators reaches every word; a finite
    // closure under products is automatically closed under inverses.
    for (std::size_t k = 0; k < worklist.size(); ++k) {
        Permutation e = worklist[k];
        for (const auto& g : gens) push(compose(e, g));
    }

    PermGroup group;
    group.n = n;
    group.generators = gens;
    group.elements.assign(closure.begin(), closure.end());

    Dsu dsu(n);
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) dsu.unite(i, g.apply0(i));
    std::vector<std::vector<int>> buckets(n);
    for (int i = 0; i < n; ++i) buckets[dsu.find(i)].push_back(i);
    for (auto& b : buckets)
        if (!b.empty()) group.orbits.push_back(std::move(b));
    std::sort(group.orbits.begin(), group.orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return group;
}

ReflectionCertificate is_reflection_generated(const PermGroup& g) {
    ReflectionCertificate cert;

    // Order criterion: |G| = prod |S_i|!.
    std::int64_t expected = 1;
    for (const auto& orbit : g.orbits) {
        for (std::size_t k = 2; k <= orbit.size(); ++k) {
            if (expected > static_cast<std::int64_t>(1) << 56)
                fail(ErrorCode::CapExceeded, "orbit factorial product too large");
            expected *= static_cast<std::int64_t>(k);
        }
    }
    bool order_verdict = expected == static_cast<std::int64_t>(g.elements.size());

    for (const auto& e : g.elements) {
        int moved = 0, a = -1, b = -1;
        for (int i = 0; i < g.n; ++i) {
            if (e.apply0(i) != i) {
                ++moved;
                if (a < 0) a = i;
                else b = i;
            }
        }
        if (moved == 2) cert.transpositions.emplace_back(a + 1, b + 1);
    }

    // Closure criterion: the subgroup generated by the contained
    // transpositions must be the whole group.
    std::vector<Permutation> tgens;
    for (const auto& [a, b] : cert.transpositions) {
        std::vector<int> img(g.n);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[a - 1], img[b - 1]);
        tgens.emplace_back(std::move(img));
    }
    PermGroup tclosure = generate_group(g.n, tgens,
                                        static_cast<std::int64_t>(g.elements.size()) + 1);
    bool closure_verdict = tclosure.elements.size() == g.elements.size();

    if (order_verdict != closure_verdict)
        fail(ErrorCode::Internal,
             "reflection criteria disagree: order formula says " +
                 std::string(order_verdict ? "yes" : "no") + ", transposition closure says " +
                 std::string(closure_verdict ? "yes" : "no"));
    cert.verdict = order_verdict;

    if (!cert.verdict) {
        std::vector<int> orbit_of(g.n, -1);
        for (std::size_t i = 0; i < g.orbits.size(); ++i)
            for (int p : g.orbits[i]) orbit_of[p] = static_cast<int>(i);
        for (int b = 1; b < g.n && !cert.obstruction; ++b) {
            for (int a = 0; a < b; ++a) {
                if (orbit_of[a] != orbit_of[b]) continue;
                std::vector<int> img(g.n);
                std::iota(img.begin(), img.end(), 0);
                std::swap(img[a], img[b]);
                if (!g.contains(Permutation(std::move(img)))) {
                    cert.obstruction = {a + 1, b + 1};
                    break;
                }
            }
        }
        if (!cert.obstruction)
            fail(ErrorCode::Internal,
                 "group is not reflection-generated yet every same-orbit transposition is present");
    }
    return cert;
}

PermGroup parse_group_text(const std::string& text, int n_override, std::int64_t cap) {
    std::vector<std::string> gen_texts;
    int n_from_text = 0;

    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // ';' separates generators on one line (CLI --gens form).
        std::stringstream parts(line);
        std::string part;
        while (std::getline(parts, part, ';')) {
            std::size_t b = part.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = part.find_last_not_of(" \t\r");
            part = part.substr(b, e - b + 1);
            if (part.compare(0, 1, "n") == 0 && part.find('=') != std::string::npos) {
                std::string rhs = part.substr(part.find('=') + 1);
                try {
                    n_from_text = std::stoi(rhs);
                } catch (const std::exception&) {
                    fail(ErrorCode::Parse, "bad degree line: '" + part + "'");
                }
                if (n_from_text < 1) fail(ErrorCode::Parse, "degree must be positive");
                continue;
            }
            gen_texts.push_back(part);
        }
    }

    int n = n_override > 0 ? n_override : n_from_text;
    if (n == 0) {
        // Fall back to the largest point mentioned in any cycle.
        for (const auto& t : gen_texts) {
            int cur = 0;
            for (char c : t) {
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    cur = cur * 10 + (c - '0');
                } else {
                    n = std::max(n, cur);
                    cur = 0;
                }
            }
            n = std::max(n, cur);
        }
    }
    if (n == 0)
        fail(ErrorCode::Parse, "cannot determine the degree: no 'n = ...' line and no points");

    std::vector<Permutation> gens;
    gens.reserve(gen_texts.size());
    for (const auto& t : gen_texts) gens.push_back(Permutation::parse(t, n));
    return generate_group(n, gens, cap);
}

}  // namespace sagbi
