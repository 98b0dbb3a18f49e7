#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octacomb/fibers.hpp"
#include "octacomb/words.hpp"

#include <set>

using namespace octacomb;

TEST_CASE("delta elements")
{
    CHECK(delta_element(1, 4) == SignedPerm::parse("[-1,2,3,4]"));
    CHECK(delta_element(4, 5) == SignedPerm::parse("[-4,1,2,3,5]"));
    CHECK(delta_element(4, 5) == evaluate(make_word(CoxType::B, 5, {3, 2, 1, 0})));
    CHECK_THROWS_AS(delta_element(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(delta_element(5, 4), std::invalid_argument);

    // ascending products of deltas reproduce the quotient elements
    const int n = 4;
    for (GenSet neg = 0; neg < (1u << n); ++neg) {
        SignedPerm prod = SignedPerm::identity(n);
        for (int j : set_elements(neg << 1)) prod = compose(prod, delta_element(j, n));
        CHECK(prod == quotient_element(neg << 1, n));
        CHECK(des_A(prod) == 0);
        CHECK(is_fully_commutative(prod));
    }
}

TEST_CASE("parabolic decomposition")
{
    auto [mu_e, pi_e] = parabolic_decompose(SignedPerm::identity(3));
    CHECK(mu_e == SignedPerm::identity(3));
    CHECK(pi_e == SignedPerm::identity(3));

    auto [mu, pi] = parabolic_decompose(SignedPerm::parse("[1,-3,-2,4]"));
    CHECK(mu == SignedPerm::parse("[-3,-2,1,4]"));
    CHECK(pi == SignedPerm::parse("[3,1,2,4]"));

    for_each_in_b(4, [&](const SignedPerm& w) {
        const auto [m, p] = parabolic_decompose(w);
        CHECK(compose(m, p) == w);
        CHECK(p.is_unsigned());
        CHECK(std::is_sorted(m.window().begin(), m.window().end()));
        CHECK(coxeter_length(w) == coxeter_length(m) + coxeter_length(p));

        // mu^{-1} is a shuffle of [-k..-1] with [k+1..n]
        const auto inv_win = inverse(m).window();
        std::vector<int> negs, poss;
        for (int v : inv_win) (v < 0 ? negs : poss).push_back(v);
        const int k = static_cast<int>(negs.size());
        for (int i = 0; i < k; ++i) CHECK(negs[size_t(i)] == -k + i);
        for (size_t i = 0; i < poss.size(); ++i) CHECK(poss[i] == k + 1 + static_cast<int>(i));
    });
}

TEST_CASE("fiber bases")
{
    CHECK(fiber_base(SignedPerm::parse("[1,5,2,3,4]")).size() == 16);
    CHECK(fiber_base(SignedPerm::parse("[2,4,5,1,3]")).size() == 4);
    CHECK(fiber_base(SignedPerm::identity(4)).size() == 16);
    CHECK_THROWS_AS(fiber_base(SignedPerm::parse("[3,2,1]")), std::invalid_argument);

    for (const auto& mu : fiber_base(SignedPerm::identity(4))) {
        CHECK(des_A(mu) == 0);
        CHECK(is_fully_commutative(mu));
    }
}

TEST_CASE("fibers")
{
    auto f = fiber(SignedPerm::parse("[2,4,5,1,3]"));
    std::vector<SignedPerm> expected{
        SignedPerm::parse("[1,4,5,-3,2]"),
        SignedPerm::parse("[1,4,5,-2,3]"),
        SignedPerm::parse("[2,4,5,-1,3]"),
        SignedPerm::parse("[2,4,5,1,3]"),
    };
    CHECK(f == expected);

    // disjoint cover of FC(B_3)
    std::set<SignedPerm> seen;
    size_t total = 0;
    for (const auto& pi : fc_elements_s(3))
        for (const auto& w : fiber(pi)) {
            CHECK(is_fully_commutative(w));
            CHECK(seen.insert(w).second);
            ++total;
        }
    CHECK(total == 24);
    const auto fc = fc_elements_b(3);
    CHECK(seen == std::set<SignedPerm>(fc.begin(), fc.end()));

    for (const auto& w : fiber(SignedPerm::identity(3)))
        CHECK(des_A(w) == 0);
}

TEST_CASE("left multiplication by quotient elements preserves type A descents")
{
    for (int n = 1; n <= 5; ++n)
        for (GenSet neg = 0; neg < (1u << n); ++neg) {
            const auto mu = quotient_element(neg << 1, n);
            for_each_in_s(n, [&](const SignedPerm& pi) {
                CHECK(des_A(compose(mu, pi)) == des_A(pi));
            });
        }
}

TEST_CASE("left-peak fiber criterion")
{
    CHECK(is_left_peak_by_fiber(SignedPerm::parse("[1,4,5,-2,3]")));
    CHECK_FALSE(is_left_peak_by_fiber(
        compose(delta_element(1, 5), SignedPerm::parse("[2,4,5,1,3]"))));
    CHECK_THROWS_AS(is_left_peak_by_fiber(SignedPerm::parse("[-1,-2]")), std::invalid_argument);

    for (const auto& w : fc_elements_b(4)) {
        const bool lp = classify(w) == FcClass::LeftPeak;
        CHECK(lp == is_left_peak_by_fiber(w));

        // one-line criterion: w(1) = 1 with exactly one entry below -1
        int small = 0;
        for (int i = 2; i <= 4; ++i)
            if (w.entry(i) < -1) ++small;
        CHECK(lp == (w.entry(1) == 1 && small == 1));
    }
}
