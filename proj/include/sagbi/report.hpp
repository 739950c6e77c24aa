#ifndef SAGBI_REPORT_HPP
#define SAGBI_REPORT_HPP

#include <cstdint>
#include <string>

#include "sagbi/perm.hpp"
#include "sagbi/termorder.hpp"

namespace sagbi {

enum class Format { Text, Json };

struct Session {
    PermGroup group;
    TermOrder order;
};

// order_spec is "lex" | "grlex" | "grevlex" | "matrix" (the latter with
// the matrix text supplied separately).
Session make_session(const std::string& group_text, const std::string& order_spec,
                     const std::string& order_matrix_text, int n_override,
                     std::int64_t cap);

std::string report_analyze(const Session& s, int max_degree, Format f);
std::string report_basis(const Session& s, int max_degree, Format f);
std::string report_member(const Session& s, const std::string& vector_csv, Format f);
std::string report_witness(const Session& s, Format f);
std::string report_sturm(const std::string& slope, std::int64_t x_max, Format f);

}  // namespace sagbi

#endif
