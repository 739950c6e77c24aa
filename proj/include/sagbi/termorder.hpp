#ifndef SAGBI_TERMORDER_HPP
#define SAGBI_TERMORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sagbi/rational.hpp"

namespace sagbi {

enum class Ordering { Less, Equal, Greater };
enum class Sign { Negative, Zero, Positive };

// Admissible term order given by n linearly independent linear forms
// (the rows); exponent vectors compare by lex comparison of their
// images. Admissibility: the first nonzero entry of every column,
// scanning rows top-down, is positive (each variable exceeds 1).
class TermOrder {
public:
    enum class Kind { Lex, Grlex, Grevlex, Custom };

    static TermOrder lex(int n);
    static TermOrder grlex(int n);
    static TermOrder grevlex(int n);
    static TermOrder custom(std::vector<std::vector<Rat>> rows);

    // spec is "lex" | "grlex" | "grevlex".
    static TermOrder from_spec(const std::string& spec, int n);
    // n lines of n whitespace-separated rationals.
    static TermOrder parse_matrix_text(const std::string& text);

    int degree() const { return n_; }
    Kind kind() const { return kind_; }
    std::string kind_name() const;
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

    Sign lex_sign(const std::vector<Rat>& d) const;
    Sign lex_sign(const std::vector<std::int64_t>& d) const;

    Ordering compare(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
    Ordering compare(const std::vector<std::int64_t>& u,
                     const std::vector<std::int64_t>& v) const;

    // Variable indices (0-based) sorted with the largest variable first.
    std::vector<int> variable_ranking() const;

private:
    TermOrder(int n, Kind kind, std::vector<std::vector<Rat>> rows);
    void validate_and_scale();

    int n_;
    Kind kind_;
    std::vector<std::vector<Rat>> rows_;
    // Rows cleared of denominators (row-wise positive scaling preserves
    // every lex sign); empty when entries are too large for the fast path.
    std::vector<std::vector<std::int64_t>> irows_;
};

}  // namespace sagbi

#endif
