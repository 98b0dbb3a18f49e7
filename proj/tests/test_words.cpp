#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octacomb/words.hpp"

#include <set>

using namespace octacomb;

namespace {

CoxWord bword(int rank, std::vector<int> letters)
{
    return make_word(CoxType::B, rank, std::move(letters));
}

}  // namespace

TEST_CASE("word parse/print and validation")
{
    auto w = parse_word(CoxType::B, 4, "3 2 1 0");
    CHECK(w.letters == std::vector<int>{3, 2, 1, 0});
    CHECK(word_str(w) == "3 2 1 0");
    CHECK_THROWS_AS(make_word(CoxType::A, 3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(make_word(CoxType::B, 3, {3}), std::invalid_argument);
}

TEST_CASE("evaluation of generator words")
{
    CHECK(evaluate(bword(4, {})) == SignedPerm::identity(4));
    CHECK(evaluate(bword(5, {3, 2, 1, 0})) == SignedPerm::parse("[-4,1,2,3,5]"));
    CHECK(evaluate(bword(5, {4, 3, 2})) == SignedPerm::parse("[1,5,2,3,4]"));
    CHECK(evaluate(make_word(CoxType::A, 5, {1, 3, 2, 4, 3})) == SignedPerm::parse("[2,4,5,1,3]"));
}

TEST_CASE("reducedness")
{
    CHECK(is_reduced(bword(3, {})));
    CHECK(is_reduced(bword(2, {0, 1, 0, 1})));
    CHECK_FALSE(is_reduced(bword(3, {1, 1})));
    CHECK_FALSE(is_reduced(bword(2, {0, 1, 0, 1, 0})));

    for (int n = 1; n <= 4; ++n)
        for_each_in_b(n, [&](const SignedPerm& w) {
            auto word = reduced_word_of(w, CoxType::B);
            CHECK(static_cast<long long>(word.letters.size()) == coxeter_length(w));
            CHECK(evaluate(word) == w);
        });
}

TEST_CASE("commutation classes")
{
    CHECK(commutation_class(bword(3, {1})).size() == 1);
    CHECK(commutation_class(bword(5, {1, 3})).size() == 2);
    CHECK_THROWS_AS(commutation_class(bword(3, {1, 1})), std::invalid_argument);

    auto diag = diagonal_reduced_expression(SignedPerm::parse("[4,1,5,2,3]"));
    CHECK(diag.letters == std::vector<int>{3, 2, 1, 4, 3});
    CHECK(commutation_class(diag).size() == 5);
}

TEST_CASE("word-level FC test")
{
    CHECK(is_fc_word(bword(4, {1, 2})));
    CHECK_FALSE(is_fc_word(bword(4, {1, 2, 1})));
    CHECK_FALSE(is_fc_word(bword(2, {0, 1, 0, 1})));
    CHECK(is_fc_word(bword(2, {0, 1, 0})));
    CHECK_THROWS_AS(is_fc_word(bword(3, {1, 1})), std::invalid_argument);

    // agreement with the pattern criterion over all words of length <= 6 in B_3
    std::vector<std::vector<int>> words{{}};
    for (int len = 1; len <= 6; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& p : words)
            if (static_cast<int>(p.size()) == len - 1)
                for (int l = 0; l <= 2; ++l) {
                    auto q = p;
                    q.push_back(l);
                    next.push_back(q);
                }
        for (auto& q : next) words.push_back(std::move(q));
    }
    int reduced_seen = 0;
    for (const auto& letters : words) {
        auto w = bword(3, letters);
        if (!is_reduced(w)) continue;
        ++reduced_seen;
        CHECK(is_fc_word(w) == is_fully_commutative(evaluate(w)));
    }
    CHECK(reduced_seen == 88);
}

TEST_CASE("heaps")
{
    CHECK(heap_of(bword(3, {})).size() == 0);

    auto h2 = heap_of(bword(5, {1, 3}));
    CHECK(h2.size() == 2);
    CHECK_FALSE(h2.less(0, 1));
    CHECK(h2.covers.empty());

    auto h = heap_of(make_word(CoxType::A, 5, {3, 2, 1, 4, 3}));
    CHECK(linear_extension_count(h) == 5);
    auto exts = linear_extension_words(h);
    auto cls = commutation_class(make_word(CoxType::A, 5, {3, 2, 1, 4, 3}));
    std::sort(cls.begin(), cls.end());
    CHECK(exts == cls);

    CHECK(heap_dot(h2).find("v0 -> v1") == std::string::npos);
    CHECK(heap_dot(h).find("->") != std::string::npos);
}

TEST_CASE("linear extension count equals commutation class size on FC elements")
{
    for (const auto& w : fc_elements_b(3)) {
        auto word = reduced_word_of(w, CoxType::B);
        CHECK(linear_extension_count(heap_of(word)) ==
              static_cast<long long>(commutation_class(word).size()));
    }
}

TEST_CASE("heap is independent of the chosen reduced expression")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : fc_elements_b(n)) {
            auto word = reduced_word_of(w, CoxType::B);
            const auto sig = heap_signature(word);
            for (const auto& other : commutation_class(word))
                CHECK(heap_signature(other) == sig);
        }
}

TEST_CASE("classification into alternating and left-peak")
{
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> letters;
        for (int i = k - 1; i >= 0; --i) letters.push_back(i);
        CHECK(classify(evaluate(bword(5, letters))) == FcClass::Alternating);
    }

    int alternating = 0, left_peaks = 0;
    for (const auto& w : fc_elements_b(3))
        (classify(w) == FcClass::Alternating ? alternating : left_peaks) += 1;
    CHECK(alternating == 20);
    CHECK(left_peaks == 4);

    CHECK_THROWS_AS(classify(SignedPerm::parse("[-1,-2]")), std::invalid_argument);
}

TEST_CASE("diagonal reduced expressions")
{
    CHECK(diagonal_factors(SignedPerm::identity(4)).empty());

    auto f1 = diagonal_factors(SignedPerm::parse("[1,5,2,3,4]"));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].letters == std::vector<int>{4, 3, 2});

    auto f2 = diagonal_factors(SignedPerm::parse("[2,4,5,1,3]"));
    REQUIRE(f2.size() == 3);
    CHECK(f2[0].letters == std::vector<int>{1});
    CHECK(f2[1].letters == std::vector<int>{3, 2});
    CHECK(f2[2].letters == std::vector<int>{4, 3});
    CHECK(word_factored_str(f2) == "(s_1)(s_3 s_2)(s_4 s_3)");

    // every word in the commutation class of a diagonal expression is a
    // reduced word for the same element
    for (const auto& w : fc_elements_b(3)) {
        auto diag = diagonal_reduced_expression(w);
        for (const auto& u : commutation_class(diag)) {
            CHECK(is_reduced(u));
            CHECK(evaluate(u) == w);
        }
    }
}

TEST_CASE("peaks and valleys match descents")
{
    CHECK(heap_peaks(SignedPerm::identity(4)) == 0);
    CHECK(heap_peaks(SignedPerm::parse("[4,1,5,2,3]")) == des_A(SignedPerm::parse("[4,1,5,2,3]")));

    for (int n = 1; n <= 5; ++n)
        for (const auto& w : fc_elements_b(n)) {
            CHECK(heap_peaks(w) == des_B(w));
            CHECK(heap_valleys(w) == des_B(inverse(w)));
            if (n <= 3) CHECK(heap_valleys(w) == heap_peaks(inverse(w)));
        }
}
