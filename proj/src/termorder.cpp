#include "sagbi/termorder.hpp"

#include <algorithm>
#include <sstream>

#include "sagbi/error.hpp"

namespace sagbi {

namespace {

int matrix_rank(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TermOrder::TermOrder(int n, Kind kind, std::vector<std::vector<Rat>> rows)
    : n_(n), kind_(kind), rows_(std::move(rows)) {
    validate_and_scale();
}

void TermOrder::validate_and_scale() {
    if (n_ < 1) fail(ErrorCode::Usage, "term order needs at least one variable");
    if (static_cast<int>(rows_.size()) != n_)
        fail(ErrorCode::Usage, "order matrix must be square (n rows)");
    for (const auto& row : rows_)
        if (static_cast<int>(row.size()) != n_)
            fail(ErrorCode::Usage, "order matrix must be square (n columns)");

    if (matrix_rank(rows_) != n_)
        fail(ErrorCode::Usage, "order matrix is rank-deficient: the forms are dependent");

    for (int col = 0; col < n_; ++col) {
        for (int r = 0; r < n_; ++r) {
            if (rows_[r][col] == 0) continue;
            if (rows_[r][col] < 0)
                fail(ErrorCode::Usage,
                     "order not admissible: first nonzero entry of column " +
                         std::to_string(col + 1) + " is negative (x_" +
                         std::to_string(col + 1) + " < 1)");
            break;
        }
    }

    // Clear denominators row by row for the integer fast path.
    irows_.clear();
    for (const auto& row : rows_) {
        Int l = 1;
        for (const auto& e : row) l = lcm(l, denominator(e));
        std::vector<std::int64_t> irow(n_);
        for (int c = 0; c < n_; ++c) {
            Int v = numerator(row[c]) * (l / denominator(row[c]));
            if (v > (Int(1) << 31) || v < -(Int(1) << 31)) {
                irows_.clear();
                return;
            }
            irow[c] = static_cast<std::int64_t>(v);
        }
        irows_.push_back(std::move(irow));
    }
}

TermOrder TermOrder::lex(int n) {
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    return TermOrder(n, Kind::Lex, std::move(rows));
}

TermOrder TermOrder::grlex(int n) {
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n, 0));
    for (int c = 0; c < n; ++c) rows[0][c] = 1;
    for (int r = 1; r < n; ++r) rows[r][r - 1] = 1;
    return TermOrder(n, Kind::Grlex, std::move(rows));
}

TermOrder TermOrder::grevlex(int n) {
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n, 0));
    for (int c = 0; c < n; ++c) rows[0][c] = 1;
    for (int r = 1; r < n; ++r) rows[r][n - r] = -1;
    return TermOrder(n, Kind::Grevlex, std::move(rows));
}

TermOrder TermOrder::custom(std::vector<std::vector<Rat>> rows) {
    int n = static_cast<int>(rows.size());
    return TermOrder(n, Kind::Custom, std::move(rows));
}

TermOrder TermOrder::from_spec(const std::string& spec, int n) {
    if (spec == "lex") return lex(n);
    if (spec == "grlex") return grlex(n);
    if (spec == "grevlex") return grevlex(n);
    fail(ErrorCode::Parse, "unknown order spec '" + spec + "'");
}

TermOrder TermOrder::parse_matrix_text(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ls(line);
        std::string tok;
        std::vector<Rat> row;
        while (ls >> tok) row.push_back(parse_rational(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorCode::Parse, "empty order matrix");
    std::size_t n = rows.size();
    for (const auto& row : rows)
        if (row.size() != n)
            fail(ErrorCode::Parse, "order matrix must be square");
    return custom(std::move(rows));
}

std::string TermOrder::kind_name() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::Grlex: return "grlex";
        case Kind::Grevlex: return "grevlex";
        case Kind::Custom: return "matrix";
    }
    return "?";
}

Sign TermOrder::lex_sign(const std::vector<Rat>& d) const {
    if (static_cast<int>(d.size()) != n_)
        fail(ErrorCode::Usage, "lex_sign: length mismatch");
    for (const auto& row : rows_) {
        Rat s = 0;
        for (int c = 0; c < n_; ++c)
            if (d[c] != 0) s += row[c] * d[c];
        if (s > 0) return Sign::Positive;
        if (s < 0) return Sign::Negative;
    }
    return Sign::Zero;
}

Sign TermOrder::lex_sign(const std::vector<std::int64_t>& d) const {
    if (static_cast<int>(d.size()) != n_)
        fail(ErrorCode::Usage, "lex_sign: length mismatch");
    if (!irows_.empty()) {
        for (const auto& row : irows_) {
            __int128 s = 0;
            for (int c = 0; c < n_; ++c)
                s += static_cast<__int128>(row[c]) * d[c];
            if (s > 0) return Sign::Positive;
            if (s < 0) return Sign::Negative;
        }
        return Sign::Zero;
    }
    std::vector<Rat> rd(d.begin(), d.end());
    return lex_sign(rd);
}

Ordering TermOrder::compare(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
    if (u.size() != v.size() || static_cast<int>(u.size()) != n_)
        fail(ErrorCode::Usage, "compare: length mismatch");
    std::vector<Rat> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = u[i] - v[i];
    switch (lex_sign(d)) {
        case Sign::Positive: return Ordering::Greater;
        case Sign::Negative: return Ordering::Less;
        default: return Ordering::Equal;
    }
}

Ordering TermOrder::compare(const std::vector<std::int64_t>& u,
                            const std::vector<std::int64_t>& v) const {
    if (u.size() != v.size() || static_cast<int>(u.size()) != n_)
        fail(ErrorCode::Usage, "compare: length mismatch");
    std::vector<std::int64_t> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = u[i] - v[i];
    switch (lex_sign(d)) {
        case Sign::Positive: return Ordering::Greater;
        case Sign::Negative: return Ordering::Less;
        default: return Ordering::Equal;
    }
}

std::vector<int> TermOrder::variable_ranking() const {
    std::vector<int> idx(n_);
    for (int i = 0; i < n_; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        std::vector<std::int64_t> ea(n_, 0), eb(n_, 0);
        ea[a] = 1;
        eb[b] = 1;
        return compare(ea, eb) == Ordering::Greater;
    });
    return idx;
}

}  // namespace sagbi
