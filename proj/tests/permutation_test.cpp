#include <doctest.h>

#include <numeric>
#include <set>

#include "oracle.hpp"
#include "stacksort/permutation.hpp"

using namespace stacksort;
namespace oracle = stacksort::testing;

TEST_CASE("stack_sort worked examples") {
    CHECK(stack_sort(Permutation::parse("35214")).str() == "31245");
    CHECK(stack_sort(Permutation::parse("231")).str() == "213");
    for (int n = 1; n <= 6; ++n) {
        Permutation id = Permutation::identity(n);
        CHECK(stack_sort(id) == id);
    }
}

TEST_CASE("stack_sort agrees with the max-splitting recursion") {
    for (int n = 1; n <= 8; ++n) {
        detail::for_each_permutation(n, [&](std::span<const int> sigma) {
            std::vector<int> vals(sigma.begin(), sigma.end());
            CHECK(stack_sort(Permutation(vals)).entries() ==
                  oracle::recursive_sort_oracle(vals));
        });
    }
}

TEST_CASE("iterated sorting") {
    Permutation p = Permutation::parse("35214");
    CHECK(stack_sort_iterated(p, 0) == p);
    CHECK(stack_sort_iterated(p, 2).str() == "12345");

    // n-1 passes always sort
    for (int n = 1; n <= 7; ++n) {
        detail::for_each_permutation(n, [&](std::span<const int> sigma) {
            Permutation q{std::vector<int>(sigma.begin(), sigma.end())};
            CHECK(stack_sort_iterated(q, n - 1).is_identity());
        });
    }
}

TEST_CASE("t-stack-sortability") {
    CHECK_FALSE(is_t_stack_sortable(Permutation::parse("35214"), 1));
    CHECK(is_t_stack_sortable(Permutation::identity(6), 1));
    CHECK_FALSE(is_t_stack_sortable(Permutation::parse("2341"), 2));
    CHECK(is_t_stack_sortable(Permutation::parse("2341"), 3));
    CHECK_THROWS_AS((void)is_t_stack_sortable(Permutation::parse("21"), 0),
                    std::invalid_argument);

    // every permutation of S_5 sorts in 4 passes
    detail::for_each_permutation(5, [&](std::span<const int> sigma) {
        CHECK(is_t_stack_sortable(Permutation{std::vector<int>(sigma.begin(), sigma.end())}, 4));
    });
}

TEST_CASE("descents, valleys, runs") {
    Permutation example2 = Permutation::parse("2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16");
    DescentData dd = descents(example2);
    CHECK(dd.descents == std::vector<int>{2, 7, 9});
    CHECK(dd.d(0) == 0);
    CHECK(dd.d(4) == 16);
    CHECK(dd.k() == 3);
    CHECK(dd.runs == std::vector<std::pair<int, int>>{{1, 2}, {3, 7}, {8, 9}, {10, 16}});

    CHECK(valleys(Permutation::identity(8)).empty());
    CHECK(valleys(Permutation::parse("3142")) == std::vector<int>{2});

    // runs partition [n] and are separated exactly by descents
    detail::for_each_permutation(6, [&](std::span<const int> sigma) {
        Permutation p{std::vector<int>(sigma.begin(), sigma.end())};
        auto runs = ascending_runs(p);
        int expect_start = 1;
        for (auto [lo, hi] : runs) {
            CHECK(lo == expect_start);
            CHECK(lo <= hi);
            expect_start = hi + 1;
        }
        CHECK(expect_start == 7);
        CHECK(static_cast<int>(runs.size()) == descents(p).k() + 1);
    });
}

TEST_CASE("brute-force preimages") {
    auto pre = brute_force_preimages(Permutation::parse("123"));
    REQUIRE(pre.size() == 5);
    CHECK(pre[0].str() == "123");
    CHECK(pre[1].str() == "132");
    CHECK(pre[2].str() == "213");
    CHECK(pre[3].str() == "312");
    CHECK(pre[4].str() == "321");

    CHECK(brute_force_preimages(Permutation::parse("21")).empty());

    auto pre213 = brute_force_preimages(Permutation::parse("213"));
    REQUIRE(pre213.size() == 1);
    CHECK(pre213[0].str() == "231");

    CHECK_THROWS_AS((void)brute_force_preimages(Permutation::identity(10), 9),
                    resource_limit_error);
}

TEST_CASE("preimage counts sum to n! and images end in n") {
    for (int n = 1; n <= 7; ++n) {
        auto census = oracle::preimage_census(n);
        long total = 0;
        for (const auto& [image, stats] : census.by_image) {
            total += stats.total;
            CHECK(image.back() == n); // sorted permutations end with the maximum
        }
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(total == fact);
    }
}

TEST_CASE("permutation stream") {
    PermutationStream s3(3);
    std::vector<std::string> seen;
    while (auto p = s3.next()) seen.push_back(p->str());
    CHECK(seen == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});

    PermutationStream s1(1);
    CHECK(s1.next()->str() == "1");
    CHECK_FALSE(s1.next().has_value());

    PermutationStream pre2(4, 2);
    int count = 0;
    while (auto p = pre2.next()) {
        CHECK(p->at(1) == 2);
        ++count;
    }
    CHECK(count == 6);

    // prefix streams partition S_5 disjointly and exhaustively
    std::set<std::vector<int>> all;
    for (int first = 1; first <= 5; ++first) {
        PermutationStream s(5, first);
        while (auto p = s.next()) CHECK(all.insert(p->entries()).second);
    }
    CHECK(all.size() == 120);
}

TEST_CASE("parsing and serialization") {
    CHECK(Permutation::parse("35214").entries() == std::vector<int>{3, 5, 2, 1, 4});
    Permutation big = Permutation::parse("2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16");
    CHECK(big.size() == 16);
    CHECK(big.str() == "2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16");
    CHECK(Permutation::parse(big.str()) == big);
    CHECK(Permutation::identity(9).str() == "123456789");

    CHECK_THROWS_AS((void)Permutation::parse(""), std::invalid_argument);
    CHECK_THROWS_AS((void)Permutation::parse("120"), std::invalid_argument);
    CHECK_THROWS_AS((void)Permutation::parse("332"), std::invalid_argument);
    CHECK_THROWS_AS((void)Permutation::parse("1.2.x"), std::invalid_argument);
    CHECK_THROWS_AS((void)Permutation::parse("1.3"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}
