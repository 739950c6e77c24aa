#include "sagbi/rational.hpp"

#include <cctype>
#include <sstream>

#include "sagbi/error.hpp"

namespace sagbi {

namespace {

Int parse_int(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size())
        fail(ErrorCode::Parse, "empty integer in rational: '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            fail(ErrorCode::Parse, "bad integer in rational: '" + s + "'");
    return Int(s);
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) fail(ErrorCode::Parse, "empty rational");
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(trim(s.substr(0, slash)));
    Int den = parse_int(trim(s.substr(slash + 1)));
    if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + s + "'");
    return Rat(num, den);
}

std::string rat_string(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::vector<Rat> parse_rational_vector(const std::string& csv) {
    std::vector<Rat> out;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) fail(ErrorCode::Parse, "empty rational vector");
    return out;
}

std::string rat_vector_string(const std::vector<Rat>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_string(v[i]);
    }
    return out + ")";
}

Int rat_floor(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    Int q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

}  // namespace sagbi
