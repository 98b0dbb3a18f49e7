#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octacomb/fibers.hpp"
#include "octacomb/rsk.hpp"
#include "octacomb/words.hpp"

#include <map>
#include <set>

using namespace octacomb;

TEST_CASE("palindromic representation")
{
    CHECK(palindromic(SignedPerm::parse("[-3,1,2]")) == std::vector<int>{-2, -1, 3, -3, 1, 2});
    CHECK(palindromic(SignedPerm::identity(3)) == std::vector<int>{-3, -2, -1, 1, 2, 3});
    for_each_in_b(3, [&](const SignedPerm& w) {
        const auto p = palindromic(w);
        for (size_t j = 0; j < p.size(); ++j)
            CHECK(p[j] == -p[p.size() - 1 - j]);
    });
}

TEST_CASE("palindromic representation of the inverse")
{
    // w^0 is w as a permutation of [-n..n], so inverting w inverts w^0
    for_each_in_b(3, [&](const SignedPerm& w) {
        const auto p = palindromic(w);
        const auto pi = palindromic(inverse(w));
        const int n = w.rank();
        auto value_at = [n](const std::vector<int>& word, int i) {
            return word[static_cast<size_t>(i < 0 ? i + n : i + n - 1)];
        };
        for (int i = -n; i <= n; ++i) {
            if (i == 0) continue;
            CHECK(value_at(pi, value_at(p, i)) == i);
        }
    });
}

TEST_CASE("classical RSK")
{
    const auto [p, q] = rsk_classical({-2, -1, 3, -3, 1, 2});
    CHECK(p == TableauRows{{-3, -1, 1, 2}, {-2, 3}});
    CHECK(q == TableauRows{{-3, -2, -1, 3}, {1, 2}});

    const auto [pi, qi] = rsk_classical({1, 2, 5, 7});
    CHECK(pi == TableauRows{{1, 2, 5, 7}});
    CHECK(qi == pi);

    CHECK_THROWS_AS(rsk_classical({1, 1}), std::invalid_argument);

    // height bound for palindromic words of FC elements
    for (const auto& w : fc_elements_b(4)) {
        CHECK_FALSE(has_decreasing_subsequence(palindromic(w), 4));
        CHECK_FALSE(has_two_disjoint_decreasing_triples(palindromic(w)));
        CHECK(rows_shape(rsk_classical(palindromic(w)).first).rows() <= 3);
    }
}

TEST_CASE("jeu de taquin collapse follows the worked chain")
{
    const auto [p, q] = bv_rsk(SignedPerm::parse("[-3,1,2]"));
    CHECK(p.str() == "[1,1,2,2][3,3]");
    CHECK(q.str() == "[1,2,3,3][1,2]");
    CHECK(p.shape() == Partition({4, 2}));

    std::vector<std::string> trace;
    const auto [p0, q0] = rsk_classical(palindromic(SignedPerm::parse("[-3,1,2]")));
    jdt_vacate(p0, 3, &trace);
    CHECK(trace.front() == "[-3,-1,1,2][-2,3]");
    CHECK(trace.back() == "[1,1,2,2][3,3]");

    // identity collapses to a valid domino tableau of admissible shape
    for (int n = 1; n <= 4; ++n) {
        const auto [pe, qe] = bv_rsk(SignedPerm::identity(n));
        CHECK(pe == qe);
        CHECK(pe.shape() == Partition({2 * n}));
    }
}

TEST_CASE("Taskin properties over small ranks")
{
    for (int n = 1; n <= 3; ++n)
        for_each_in_b(n, [&](const SignedPerm& w) {
            const auto [pw, qw] = bv_rsk(w);
            const auto [pi, qi] = bv_rsk(inverse(w));
            CHECK(pi == qw);
            CHECK(qi == pw);
            CHECK(des_B(w) == domino_des_B(qw));
            CHECK(des_B(inverse(w)) == domino_des_B(pw));
        });

    // the collapse preserves the insertion shape as a partition of 2n
    for_each_in_b(3, [&](const SignedPerm& w) {
        const auto [p0, q0] = rsk_classical(palindromic(w));
        CHECK(bv_rsk(w).first.shape() == rows_shape(p0));
    });

    // injectivity on B_3
    std::set<std::string> images;
    for_each_in_b(3, [&](const SignedPerm& w) {
        const auto [p, q] = bv_rsk(w);
        CHECK(images.insert(p.str() + "|" + q.str()).second);
    });
    CHECK(images.size() == 48);
}

TEST_CASE("combinatorial cells")
{
    CHECK_THROWS_AS(cell_members(Partition({2, 1}), 1), std::invalid_argument);

    // cell of the single-row shape contains the identity
    const auto row_cell = cell_members(Partition({6}), 3);
    CHECK(std::find(row_cell.begin(), row_cell.end(), SignedPerm::identity(3)) != row_cell.end());

    // |cell(lambda)| = (f_2^lambda)^2 over P^0(3)
    for (const auto& lam : domino_shapes(3)) {
        const auto f2 = domino_hook_count(lam);
        CHECK(static_cast<long long>(cell_members(lam, 3).size()) == f2 * f2);
    }

    // FC membership matches admissible shapes; cells partition FC(B_n)
    for (int n = 1; n <= 4; ++n) {
        const auto adm = admissible_shapes(n);
        const std::set<Partition> adm_set(adm.begin(), adm.end());
        size_t fc_count = 0;
        for_each_in_b(n, [&](const SignedPerm& w) {
            const bool fc = is_fully_commutative(w);
            if (fc) ++fc_count;
            CHECK(fc == (adm_set.count(bv_shape(w)) != 0));
        });
        size_t cell_total = 0;
        for (const auto& lam : adm) cell_total += cell_members(lam, n).size();
        CHECK(cell_total == fc_count);
    }
}

TEST_CASE("cell shapes separate alternating and left-peak elements")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : fc_elements_b(n)) {
            const auto lam = bv_shape(w);
            const bool lp = classify(w) == FcClass::LeftPeak;
            CHECK(lp == (lam.rows() == 3));
            if (lp) {
                CHECK(lam.part(3) == 1);
                CHECK(lam.part(2) % 2 == 1);
            }
        }
}
