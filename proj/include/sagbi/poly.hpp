#ifndef SAGBI_POLY_HPP
#define SAGBI_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sagbi/perm.hpp"
#include "sagbi/termorder.hpp"

namespace sagbi {

// Monomial exponent vector; entries are nonnegative machine integers
// with overflow-checked arithmetic.
using Expo = std::vector<std::int64_t>;

std::int64_t total_degree(const Expo& u);
Expo act_on_exponents(const Permutation& g, const Expo& u);

struct LexDescending {
    bool operator()(const Expo& a, const Expo& b) const { return a > b; }
};

// Sparse polynomial with integer coefficients; terms stored (and
// rendered) in lex-descending exponent order. Zero coefficients are
// never stored.
class Poly {
public:
    using TermMap = std::map<Expo, std::int64_t, LexDescending>;

    explicit Poly(int n) : n_(n) {}
    static Poly monomial(Expo u, std::int64_t c = 1);
    static Poly constant(int n, std::int64_t c);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    std::int64_t coeff(const Expo& u) const;

    void add_term(const Expo& u, std::int64_t c);

    Poly& operator+=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    Poly operator*(const Poly& other) const;
    bool operator==(const Poly&) const = default;

    // "c*x1^a1*x2^a2..." terms in descending order.
    std::string str() const;

private:
    int n_;
    TermMap terms_;
};

// Sum over the orbit {g.u : g in G} (as a set) of x^v, coefficient 1.
Poly orbit_sum(const PermGroup& g, const Expo& u);

// d-th elementary symmetric polynomial in the variables indexed by S
// (1-based indices), inside the ring with n variables.
Poly elementary_symmetric(const std::vector<int>& S, int d, int n);

Poly act(const Permutation& g, const Poly& p);
bool is_invariant(const PermGroup& g, const Poly& p);

// Order-maximal term of a nonzero polynomial.
std::pair<Expo, std::int64_t> initial_monomial(const TermOrder& order, const Poly& p);

// (e_1(S_1),...,e_{|S_1|}(S_1),...,e_1(S_r),...,e_{|S_r|}(S_r)) in
// orbit order (orbits sorted by minimal element).
struct ComprehensiveBasis {
    std::vector<Poly> polys;
    std::vector<std::pair<int, int>> labels;  // (orbit index, degree), 1-based
};

ComprehensiveBasis comprehensive_basis(const PermGroup& g);

}  // namespace sagbi

#endif
