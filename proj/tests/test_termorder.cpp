#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "sagbi/termorder.hpp"

using namespace sagbi;

TEST_CASE("built-in matrices") {
    auto lex = TermOrder::lex(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(lex.rows()[i][j] == (i == j ? 1 : 0));

    auto custom = TermOrder::custom({{0, 1}, {1, 0}});  // x2 > x1
    Expo e1{1, 0}, e2{0, 1};
    CHECK(custom.compare(e2, e1) == Ordering::Greater);

    CHECK_THROWS_AS(TermOrder::custom({{1, -1}, {1, 1}}), Error);  // x2 < 1
    CHECK_THROWS_AS(TermOrder::custom({{1, 1}, {2, 2}}), Error);   // rank deficient
    CHECK_THROWS_AS(TermOrder::custom({{1, 1}, {1}}), Error);      // not square
}

TEST_CASE("compare examples") {
    auto lex = TermOrder::lex(3);
    CHECK(lex.compare(Expo{2, 0, 0}, Expo{1, 5, 0}) == Ordering::Greater);
    CHECK(lex.compare(Expo{1, 5, 0}, Expo{1, 5, 0}) == Ordering::Equal);

    auto grevlex = TermOrder::grevlex(3);
    CHECK(grevlex.compare(Expo{2, 0, 0}, Expo{1, 1, 0}) == Ordering::Greater);
}

TEST_CASE("lex_sign examples") {
    auto lex = TermOrder::lex(3);
    CHECK(lex.lex_sign(std::vector<Rat>{0, 1, -1}) == Sign::Positive);
    CHECK(lex.lex_sign(std::vector<Rat>{0, 0, 0}) == Sign::Zero);
    CHECK(lex.lex_sign(std::vector<Rat>{-1, 9, 9}) == Sign::Negative);
    CHECK_THROWS_AS(lex.lex_sign(std::vector<Rat>{1, 2}), Error);
}

TEST_CASE("matrix text parsing") {
    auto o = TermOrder::parse_matrix_text("1/2 1/2\n0 -1\n");
    CHECK(o.degree() == 2);
    CHECK(o.rows()[0][0] == Rat(1, 2));
    CHECK(o.compare(Expo{2, 0}, Expo{1, 1}) == Ordering::Greater);
    CHECK_THROWS_AS(TermOrder::parse_matrix_text(""), Error);
    CHECK_THROWS_AS(TermOrder::parse_matrix_text("1 2\n3\n"), Error);
    CHECK_THROWS_AS(TermOrder::parse_matrix_text("1 x\n0 1\n"), Error);
}

TEST_CASE("order specs") {
    CHECK(TermOrder::from_spec("lex", 2).kind() == TermOrder::Kind::Lex);
    CHECK(TermOrder::from_spec("grlex", 2).kind() == TermOrder::Kind::Grlex);
    CHECK(TermOrder::from_spec("grevlex", 2).kind() == TermOrder::Kind::Grevlex);
    CHECK_THROWS_AS(TermOrder::from_spec("revlex", 2), Error);
}

TEST_CASE("built-in kinds match definitional comparators") {
    // Exhaustive over small vectors.
    for (int n = 1; n <= 4; ++n) {
        auto lex = TermOrder::lex(n);
        auto grlex = TermOrder::grlex(n);
        auto grevlex = TermOrder::grevlex(n);
        std::vector<Expo> all;
        Expo cur(n, 0);
        std::function<void(int)> gen = [&](int pos) {
            if (pos == n) {
                all.push_back(cur);
                return;
            }
            for (int v = 0; v <= 3; ++v) {
                cur[pos] = v;
                gen(pos + 1);
            }
        };
        gen(0);
        for (const auto& u : all) {
            for (const auto& v : all) {
                CHECK(lex.compare(u, v) == oracles::lex_oracle(u, v));
                CHECK(grlex.compare(u, v) == oracles::grlex_oracle(u, v));
                CHECK(grevlex.compare(u, v) == oracles::grevlex_oracle(u, v));
            }
        }
    }
}

TEST_CASE("order axioms on random vectors and orders") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        TermOrder orders[] = {TermOrder::lex(n), TermOrder::grlex(n),
                              TermOrder::grevlex(n), oracles::random_matrix_order(n, rng)};
        for (const auto& o : orders) {
            // Admissibility: every variable exceeds 1.
            Expo zero(n, 0);
            for (int i = 0; i < n; ++i) {
                Expo ei(n, 0);
                ei[i] = 1;
                CHECK(o.compare(ei, zero) == Ordering::Greater);
            }
            for (int k = 0; k < 20; ++k) {
                auto u = oracles::random_expo(n, 6, rng);
                auto v = oracles::random_expo(n, 6, rng);
                auto w = oracles::random_expo(n, 6, rng);
                auto c = o.compare(u, v);
                // Antisymmetry and totality.
                auto r = o.compare(v, u);
                if (c == Ordering::Greater) CHECK(r == Ordering::Less);
                if (c == Ordering::Less) CHECK(r == Ordering::Greater);
                if (c == Ordering::Equal) {
                    CHECK(u == v);
                    CHECK(r == Ordering::Equal);
                }
                // Translation invariance.
                Expo uw(n), vw(n);
                for (int i = 0; i < n; ++i) {
                    uw[i] = u[i] + w[i];
                    vw[i] = v[i] + w[i];
                }
                CHECK(o.compare(uw, vw) == c);
            }
        }
    }
}

TEST_CASE("integer and rational comparison paths agree") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 4)(rng);
        auto o = oracles::random_matrix_order(n, rng);
        for (int k = 0; k < 50; ++k) {
            auto u = oracles::random_expo(n, 8, rng);
            auto v = oracles::random_expo(n, 8, rng);
            std::vector<Rat> ru(u.begin(), u.end()), rv(v.begin(), v.end());
            CHECK(o.compare(u, v) == o.compare(ru, rv));
        }
    }
}
