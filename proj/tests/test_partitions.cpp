#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bnharm/partition.hpp"

using namespace bnharm;

namespace {
Partition P(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
}
}  // namespace

TEST_CASE("construction and serialization") {
    CHECK(Partition().empty());
    CHECK(P({3, 1, 0, 0}) == P({3, 1}));
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}), std::invalid_argument);
    CHECK(Partition::parse("2,2,1,1").parts() == std::vector<int>{2, 2, 1, 1});
    CHECK(Partition::parse("0").empty());
    CHECK(Partition::parse("2,2,1,1").str() == "2,2,1,1");
    CHECK(Partition().str() == "0");
    CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
}

TEST_CASE("weight length part conjugate") {
    Partition p = P({3, 1});
    CHECK(p.weight() == 4);
    CHECK(p.length() == 2);
    CHECK(p.part(1) == 3);
    CHECK(p.part(2) == 1);
    CHECK(p.part(5) == 0);
    CHECK(p.conjugate() == P({2, 1, 1}));
    CHECK(P({2, 2}).conjugate() == P({2, 2}));
    CHECK(Partition().conjugate().empty());
    for (const auto& q : enumerate_partitions(7, 7, false))
        CHECK(q.conjugate().conjugate() == q);
}

TEST_CASE("conjugates of tilde partitions have no part 1 nor part > N") {
    for (int n = 2; n <= 8; ++n)
        for (int N = 2; N <= 4; ++N)
            for (const auto& lam : enumerate_partitions(n, N, true)) {
                Partition c = lam.conjugate();
                for (int i = 1; i <= c.length(); ++i) {
                    CHECK(c.part(i) != 1);
                    CHECK(c.part(i) <= N);
                }
            }
}

TEST_CASE("preceq") {
    CHECK(preceq(P({1, 1}), P({2})));
    CHECK(preceq(P({2, 1}), P({2, 1})));
    CHECK_FALSE(preceq(P({2}), P({1, 1})));
    CHECK_FALSE(preceq(P({2}), P({2, 1})));  // weight mismatch
    // mu preceq lambda forces mu1 <= lambda1 and l(lambda) <= l(mu)
    for (const auto& mu : enumerate_partitions(6, 6, false))
        for (const auto& lam : enumerate_partitions(6, 6, false))
            if (preceq(mu, lam)) {
                CHECK(mu.part(1) <= lam.part(1));
                CHECK(lam.length() <= mu.length());
            }
}

TEST_CASE("(n) is the preceq-maximum; tilde partitions are minimal") {
    for (int n = 1; n <= 7; ++n) {
        auto all = enumerate_partitions(n, n, false);
        for (const auto& mu : all) CHECK(preceq(mu, P({n})));
        for (const auto& lam : all)
            if (lam.part(1) == lam.part(2))
                for (const auto& mu : all)
                    if (preceq(mu, lam)) CHECK(mu == lam);
    }
}

TEST_CASE("contains") {
    CHECK(contains(P({1}), P({2, 1})));
    CHECK_FALSE(contains(P({2, 2}), P({2, 1})));
    CHECK(contains(Partition(), P({3, 2})));
    CHECK(contains(P({3, 2}), P({3, 2})));
    CHECK_FALSE(contains(P({1, 1, 1}), P({3, 2})));
}

TEST_CASE("canonical enumeration") {
    auto labels = enumerate_partitions(6, 4, false);
    std::vector<std::string> expect = {"2,2,1,1", "3,1,1,1", "2,2,2",
                                       "3,2,1",   "4,1,1",   "3,3",
                                       "4,2",     "5,1",     "6"};
    REQUIRE(labels.size() == expect.size());
    for (size_t i = 0; i < labels.size(); ++i)
        CHECK(labels[i].str() == expect[i]);

    auto zero = enumerate_partitions(0, 3, false);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    auto tilde63 = enumerate_partitions(6, 3, true);
    REQUIRE(tilde63.size() == 2);
    CHECK(tilde63[0] == P({2, 2, 2}));
    CHECK(tilde63[1] == P({3, 3}));
}

TEST_CASE("canonical order is consistent with preceq") {
    for (int n = 1; n <= 7; ++n) {
        auto all = enumerate_partitions(n, n, false);
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j)
                if (i != j && preceq(all[i], all[j]))
                    CHECK(i < j);
    }
}

TEST_CASE("m_at_ones") {
    CHECK(m_at_ones(P({1, 1}), 4) == 6);
    CHECK(m_at_ones(P({5}), 3) == 3);
    CHECK(m_at_ones(Partition(), 4) == 1);
    CHECK(m_at_ones(P({2, 2, 1}), 3) == 3);
    CHECK_THROWS_AS(m_at_ones(P({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("count_tilde matches enumeration") {
    CHECK(count_tilde(1, 4) == 0);
    CHECK(count_tilde(6, 3) == 2);
    CHECK(count_tilde(0, 4) == 1);
    for (int n = 0; n <= 12; ++n)
        for (int N = 1; N <= 6; ++N)
            CHECK(count_tilde(n, N) ==
                  Integer(enumerate_partitions(n, N, true).size()));
}

TEST_CASE("dimension identity #P_n - #P_{n-1} = #P~_n") {
    for (int n = 1; n <= 12; ++n)
        for (int N = 2; N <= 6; ++N)
            CHECK(enumerate_partitions(n, N, false).size() -
                      enumerate_partitions(n - 1, N, false).size() ==
                  enumerate_partitions(n, N, true).size());
}

TEST_CASE("partition factorial and pochhammer") {
    CHECK(partition_factorial(P({3, 2})) == 12);
    CHECK(partition_factorial(Partition()) == 1);
    CHECK(pochhammer(Rational(1, 2), Partition()) == 1);
    CHECK(pochhammer(Rational(1, 2), P({2, 1})) == Rational(3, 8));
    CHECK(pochhammer(Rational(1), P({1, 1})) == 1);
}
