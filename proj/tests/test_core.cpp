#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octacomb/signed_perm.hpp"

#include <map>
#include <set>

using namespace octacomb;

namespace {

GenSet mask(std::initializer_list<int> xs)
{
    GenSet s = 0;
    for (int x : xs) s |= GenSet{1} << x;
    return s;
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// |FC(B_n)| = (n+2)/(n+1) * C(2n,n) - 1
long long fc_b_closed_form(int n) { return (n + 2) * binomial(2 * n, n) / (n + 1) - 1; }

}  // namespace

TEST_CASE("window parse and print round-trip")
{
    auto w = SignedPerm::parse("[-3,1,2]");
    CHECK(w.window() == std::vector<int>{-3, 1, 2});
    CHECK(w.str() == "[-3,1,2]");
    CHECK(SignedPerm::parse(" [ -3 , 1 , 2 ] ").str() == "[-3,1,2]");
    CHECK(SignedPerm::identity(4).str() == "[1,2,3,4]");
    CHECK_THROWS_AS(SignedPerm::parse("[1,1]"), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm::parse("[0,1]"), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm::parse("[3,1]"), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm::parse("1,2"), std::invalid_argument);
}

TEST_CASE("compose and inverse")
{
    auto e = SignedPerm::identity(4);
    auto w = SignedPerm::parse("[1,-3,-2,4]");
    CHECK(compose(e, w) == w);
    CHECK(compose(w, e) == w);

    // standardization example: [1,-3,-2,4] = [-3,-2,1,4] . [3,1,2,4]
    CHECK(compose(SignedPerm::parse("[-3,-2,1,4]"), SignedPerm::parse("[3,1,2,4]")) == w);

    CHECK(inverse(SignedPerm::identity(3)) == SignedPerm::identity(3));
    CHECK(inverse(SignedPerm::parse("[1,5,2,3,4]")) == SignedPerm::parse("[1,3,4,5,2]"));
    CHECK(inverse(SignedPerm::parse("[-2,1]")) == SignedPerm::parse("[2,-1]"));

    CHECK_THROWS_AS(compose(e, SignedPerm::identity(3)), std::invalid_argument);

    // group laws over all of B_3
    int count = 0;
    for_each_in_b(3, [&](const SignedPerm& u) {
        ++count;
        CHECK(compose(u, inverse(u)) == SignedPerm::identity(3));
        CHECK(inverse(inverse(u)) == u);
    });
    CHECK(count == 48);
}

TEST_CASE("descent sets and negatives")
{
    CHECK(des_A(SignedPerm::parse("[1,2,3]")) == 0);
    CHECK(des_A(SignedPerm::parse("[1,5,2,3,4]")) == mask({2}));
    CHECK(des_A(SignedPerm::parse("[2,4,5,1,3]")) == mask({3}));

    CHECK(des_B(SignedPerm::parse("[1,2,3]")) == 0);
    CHECK(des_B(SignedPerm::parse("[-1,2,3]")) == mask({0}));
    CHECK(des_B(SignedPerm::parse("[2,-1,3]")) == mask({1}));
    CHECK(des_B(SignedPerm::parse("[-3,1,2]")) == mask({0}));

    CHECK(neg_set(SignedPerm::parse("[1,2,3]")) == 0);
    CHECK(neg_set(SignedPerm::parse("[1,-3,-2,4]")) == mask({2, 3}));
    CHECK(neg_set(SignedPerm::parse("[-3,1,2]")) == mask({1}));

    CHECK(ldes(SignedPerm::identity(5)) == 0);
    CHECK(ldes(SignedPerm::parse("[-1,2,3]")) == 0);
    CHECK(ldes(SignedPerm::parse("[2,-1,3]")) == 1);
}

TEST_CASE("r-descents use the r-order")
{
    CHECK(rdes(SignedPerm::parse("[1,2,3]")) == 0);
    CHECK(rdes(SignedPerm::parse("[-3,-1,2]")) == mask({1}));
    CHECK(rdes(SignedPerm::parse("[-1,-2,3]")) == 0);
}

TEST_CASE("block number")
{
    CHECK(block_number(SignedPerm::identity(5)) == 5);
    CHECK(block_number(SignedPerm::parse("[2,1,3,5,4]")) == 3);
    CHECK(block_number(SignedPerm::parse("[-1,-2]")) == 1);

    // bl(pi) = bl(pi^{-1}) on S_n, and the signed split-point definition
    // agrees with the count of prefixes permuted onto themselves
    for (int n = 1; n <= 5; ++n)
        for_each_in_s(n, [&](const SignedPerm& p) {
            CHECK(block_number(p) == block_number(inverse(p)));
            int self_mapped = 0, prefix_max = 0;
            for (int i = 1; i <= n; ++i) {
                prefix_max = std::max(prefix_max, p.entry(i));
                if (prefix_max <= i) ++self_mapped;
            }
            CHECK(block_number(p) == self_mapped);
        });
}

TEST_CASE("coxeter length agrees with descent definitions")
{
    CHECK(coxeter_length(SignedPerm::parse("[-1,2]")) == 1);
    CHECK(coxeter_length(SignedPerm::parse("[-2,-1]")) == 3);
    CHECK(coxeter_length(SignedPerm::parse("[-1,-2]")) == 4);

    // Des_B(w^{-1}) equals the left descents detected by a length drop.
    for (int n = 1; n <= 5; ++n) {
        std::vector<SignedPerm> gens;
        for (int i = 0; i < n; ++i) {
            auto s = SignedPerm::identity(n).window();
            if (i == 0)
                s[0] = -1;
            else
                std::swap(s[size_t(i - 1)], s[size_t(i)]);
            gens.emplace_back(s);
        }
        for_each_in_b(n, [&](const SignedPerm& w) {
            GenSet drop = 0;
            for (int i = 0; i < n; ++i)
                if (coxeter_length(compose(gens[size_t(i)], w)) < coxeter_length(w))
                    drop |= GenSet{1} << i;
            CHECK(drop == des_B(inverse(w)));
        });
    }
}

TEST_CASE("full commutativity pattern test")
{
    CHECK(is_fully_commutative(SignedPerm::identity(4)));
    CHECK_FALSE(is_fully_commutative(SignedPerm::parse("[-1,-2]")));
    CHECK(is_fully_commutative(SignedPerm::parse("[-2,-1]")));
    CHECK_FALSE(is_fully_commutative(SignedPerm::parse("[3,2,1]")));

    CHECK(fc_elements_b(3).size() == 24);
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<long long>(fc_elements_b(n).size()) == fc_b_closed_form(n));
    for (int n = 1; n <= 8; ++n)
        CHECK(static_cast<long long>(fc_elements_s(n).size()) == catalan(n));
}

TEST_CASE("first valley")
{
    CHECK(first_valley(SignedPerm::identity(5)) == 5);
    CHECK(first_valley(SignedPerm::parse("[1,5,2,3,4]")) == 4);
    CHECK(first_valley(SignedPerm::parse("[2,4,5,1,3]")) == 3);
    CHECK_THROWS_AS(first_valley(SignedPerm::parse("[3,2,1]")), std::invalid_argument);
    CHECK_THROWS_AS(first_valley(SignedPerm::parse("[-1,2]")), std::invalid_argument);

    // 1 in Des(pi^{-1})  <=>  pi(1) = 2, over FC(S_n)
    for (int n = 2; n <= 6; ++n)
        for (const auto& pi : fc_elements_s(n)) {
            const bool one_in = (des_A(inverse(pi)) & mask({1})) != 0;
            CHECK(one_in == (pi.entry(1) == 2));
        }
}

TEST_CASE("enumeration is lexicographic and complete")
{
    std::vector<SignedPerm> all;
    for_each_in_b(2, [&](const SignedPerm& w) { all.push_back(w); });
    REQUIRE(all.size() == 8);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front().str() == "[-2,-1]");
    CHECK(all.back().str() == "[2,1]");

    // sharded enumeration covers exactly the same set
    std::vector<SignedPerm> sharded;
    for (int first = -2; first <= 2; ++first) {
        if (first == 0) continue;
        for_each_in_b_with_first(2, first, [&](const SignedPerm& w) { sharded.push_back(w); });
    }
    CHECK(sharded == all);
}
