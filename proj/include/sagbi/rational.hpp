#ifndef SAGBI_RATIONAL_HPP
#define SAGBI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace sagbi {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "p/q" or a plain integer, with optional leading sign.
Rat parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_string(const Rat& r);

// Comma-separated rationals, e.g. "1,0,1/2".
std::vector<Rat> parse_rational_vector(const std::string& csv);

std::string rat_vector_string(const std::vector<Rat>& v);

// Largest integer <= r.
Int rat_floor(const Rat& r);

}  // namespace sagbi

#endif
