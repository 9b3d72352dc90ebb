#include <doctest.h>

#include <random>
#include <vector>

#include "cshuf/qpoly.hpp"

using cshuf::QPoly;
using cshuf::gauss_binomial;

namespace {

// Independent additive Pascal triangle, no factorials.
long long pascal_binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    std::vector<std::vector<long long>> row{{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[i - 1][j - 1] + row[i - 1][j];
        row.push_back(next);
    }
    return row[n][k];
}

QPoly from_pairs(std::initializer_list<std::pair<int, long long>> ps) {
    QPoly out;
    for (auto [e, c] : ps) out += QPoly::monomial(e, c);
    return out;
}

QPoly random_poly(std::mt19937& rng) {
    QPoly out;
    int terms = rng() % 5;
    for (int i = 0; i < terms; ++i)
        out += QPoly::monomial(rng() % 6, static_cast<int>(rng() % 9) - 4);
    return out;
}

}  // namespace

TEST_CASE("add") {
    const QPoly one_plus_q = from_pairs({{0, 1}, {1, 1}});
    CHECK(one_plus_q + QPoly{} == one_plus_q);
    CHECK(one_plus_q + from_pairs({{1, 1}, {2, 1}}) ==
          from_pairs({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(one_plus_q + from_pairs({{0, -1}, {1, -1}}) == QPoly{});
}

TEST_CASE("mul") {
    const QPoly one_plus_q = from_pairs({{0, 1}, {1, 1}});
    CHECK(one_plus_q * QPoly::constant(1) == one_plus_q);
    CHECK(one_plus_q * one_plus_q == from_pairs({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(one_plus_q * from_pairs({{0, 1}, {1, 1}, {2, 1}}) ==
          from_pairs({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
}

TEST_CASE("shift") {
    const QPoly one_plus_q = from_pairs({{0, 1}, {1, 1}});
    CHECK(one_plus_q.shifted(0) == one_plus_q);
    CHECK(QPoly::constant(1).shifted(4) == QPoly::monomial(4));
    CHECK(one_plus_q.shifted(3) == from_pairs({{3, 1}, {4, 1}}));
}

TEST_CASE("eval_at_one") {
    CHECK(QPoly{}.eval_at_one() == 0);
    CHECK(gauss_binomial(4, 2).eval_at_one() == 6);
    CHECK(from_pairs({{1, 1}, {2, 1}, {3, 1}}).eval_at_one() == 3);
}

TEST_CASE("gauss_binomial examples") {
    for (int n = 0; n <= 6; ++n) CHECK(gauss_binomial(n, 0) == QPoly::constant(1));
    CHECK(gauss_binomial(2, 1) == from_pairs({{0, 1}, {1, 1}}));
    CHECK(gauss_binomial(4, 2) ==
          from_pairs({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(gauss_binomial(1, -1) == QPoly{});
    CHECK(gauss_binomial(3, 5) == QPoly{});
    CHECK(gauss_binomial(-2, 0) == QPoly{});
}

TEST_CASE("gauss_binomial properties up to n=12") {
    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; m <= n; ++m) {
            const QPoly g = gauss_binomial(n, m);
            CHECK(g == gauss_binomial(n, n - m));
            CHECK(g.degree() == m * (n - m));
            for (const auto& [e, c] : g.terms()) CHECK(c > 0);
            CHECK(g.eval_at_one() == pascal_binomial(n, m));
            if (m >= 1 && m <= n - 1) {
                CHECK(g == gauss_binomial(n - 1, m) +
                               gauss_binomial(n - 1, m - 1).shifted(n - m));
                CHECK(g == gauss_binomial(n - 1, m).shifted(m) +
                               gauss_binomial(n - 1, m - 1));
            }
        }
    }
}

TEST_CASE("ring laws on randomized polynomials") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const QPoly a = random_poly(rng), b = random_poly(rng),
                    c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonical rendering") {
    CHECK(QPoly{}.to_string() == "0");
    CHECK(QPoly::constant(5).to_string() == "5");
    CHECK(QPoly::monomial(1).to_string() == "q");
    CHECK(from_pairs({{0, 1}, {1, 1}}).to_string() == "1 + q");
    CHECK(from_pairs({{3, 1}, {4, 1}}).to_string() == "q^3 + q^4");
    CHECK(from_pairs({{3, 2}, {4, 2}}).to_string() == "2*q^3 + 2*q^4");
    CHECK(gauss_binomial(4, 2).to_string() == "1 + q + 2*q^2 + q^3 + q^4");
}
