#ifndef SAGBI_PERM_HPP
#define SAGBI_PERM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sagbi/error.hpp"

namespace sagbi {

// Bijection of {1..n}. Stored 0-based; every external surface (cycle
// strings, pairs in certificates) is 1-based.
class Permutation {
public:
    explicit Permutation(int n);               // identity
    explicit Permutation(std::vector<int> images0);

    // Cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the identity.
    static Permutation parse(const std::string& cycles, int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply0(int i) const { return img_[i]; }
    bool is_identity() const;
    Permutation inverse() const;
    std::string cycle_string() const;
    const std::vector<int>& images0() const { return img_; }
    std::vector<int> images1() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

// (g . h)(i) = g(h(i))
Permutation compose(const Permutation& g, const Permutation& h);

// Action on coordinate vectors: (g.u)_{g(i)} = u_i, so g.x^u = x^{g.u}.
template <class T>
std::vector<T> act_on_vector(const Permutation& g, const std::vector<T>& u) {
    if (static_cast<int>(u.size()) != g.degree())
        fail(ErrorCode::Usage, "act: vector length does not match permutation degree");
    std::vector<T> res(u.size());
    for (int i = 0; i < g.degree(); ++i) res[g.apply0(i)] = u[i];
    return res;
}

struct PermGroup {
    int n = 0;
    std::vector<Permutation> generators;
    // Full closure, sorted lexicographically by image arrays.
    std::vector<Permutation> elements;
    // Orbits of {1..n} (0-based internally), each sorted, ordered by minimum.
    std::vector<std::vector<int>> orbits;

    bool contains(const Permutation& p) const;
};

// Breadth-first closure. Throws ErrorCode::CapExceeded when the group
// grows past `cap` elements.
PermGroup generate_group(int n, const std::vector<Permutation>& gens,
                         std::int64_t cap = 1'000'000);

struct ReflectionCertificate {
    bool verdict = false;
    // All transpositions contained in the group (a < b, 1-based).
    std::vector<std::pair<int, int>> transpositions;
    // When verdict is false: pair (a,b), a<b, in the same orbit with
    // (a b) absent from the group; b minimal, then a minimal.
    std::optional<std::pair<int, int>> obstruction;
};

// Decides whether the group is the direct product of the symmetric
// groups on its orbits. Computes both the order criterion
// |G| = prod |S_i|! and the transposition-closure criterion and checks
// they agree.
ReflectionCertificate is_reflection_generated(const PermGroup& g);

// Group text: optional "n = <int>" line, '#' comments, one generator in
// cycle notation per line (';' also separates generators). n_override=0
// means take n from the text, falling back to the largest point seen.
PermGroup parse_group_text(const std::string& text, int n_override,
                           std::int64_t cap = 1'000'000);

}  // namespace sagbi

#endif
