#ifndef SAGBI_BASIS_HPP
#define SAGBI_BASIS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sagbi/cone.hpp"
#include "sagbi/poly.hpp"

namespace sagbi {

// Minimal SAGBI basis element: an irreducible initial monomial together
// with its orbit sum.
struct SagbiElement {
    Expo exponent;
    Poly polynomial;
    int degree;
};

// All initial monomials of total degree d, sorted descending under the
// cone's order.
std::vector<Expo> enumerate_initial_monomials(const InitialCone& cone, int d);

// True iff u admits no decomposition v + (u-v) with both parts nonzero
// initial monomials. u must be a nonzero initial monomial.
bool is_irreducible(const InitialCone& cone, const Expo& u);

std::vector<SagbiElement> minimal_sagbi_up_to(const InitialCone& cone, int max_degree);

struct FinitenessVerdict {
    bool finite = false;
    std::optional<ComprehensiveBasis> basis;       // finite case
    std::optional<Witness> witness;                // infinite case
    std::vector<std::pair<int, std::int64_t>> irreducible_counts;  // infinite case
    ReflectionCertificate certificate;
};

FinitenessVerdict finiteness_verdict(const PermGroup& group, const TermOrder& order,
                                     int count_bound);

// nullopt when every initial monomial of degree <= max_degree is an
// N-combination of the generators; otherwise the order-smallest
// unreachable one.
std::optional<Expo> verify_generates(const InitialCone& cone,
                                     const std::vector<Expo>& generators,
                                     int max_degree);

}  // namespace sagbi

#endif
