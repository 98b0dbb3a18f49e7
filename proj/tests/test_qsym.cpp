#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octacomb/qsym.hpp"

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

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

QPoly q(int j) { return QPoly::q_power(j); }

// cycle type of an unsigned permutation, for conjugacy classes of S_n
Partition cycle_type(const SignedPerm& pi)
{
    std::vector<bool> seen(static_cast<size_t>(pi.rank()) + 1, false);
    std::vector<int> lens;
    for (int i = 1; i <= pi.rank(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0, j = i;
        do {
            seen[static_cast<size_t>(j)] = true;
            j = pi.entry(j);
            ++len;
        } while (j != i);
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

}  // namespace

TEST_CASE("q-polynomials")
{
    CHECK(QPoly{1, 0, 2}.str() == "1 + 2*q^2");
    CHECK((q(1) + q(1)).coeff(1) == 2);
    CHECK((q(1) * q(2)) == q(3));
    CHECK((q(1) - q(1)).is_zero());
    CHECK(QPoly::constant(0).is_zero());
}

TEST_CASE("fundamental elements and linearity")
{
    CHECK_THROWS_AS(fundamental_A(mask({3}), 3), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_B(mask({3}), 3), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_P(mask({1}), mask({4}), 3), std::invalid_argument);

    auto f = fundamental_B(mask({0}), 3);
    f += fundamental_B(mask({0}), 3);
    CHECK(f.terms.at(mask({0})) == QPoly::constant(2));
    f -= fundamental_B(mask({0}), 3);
    f -= fundamental_B(mask({0}), 3);
    CHECK(f.terms.empty());
}

TEST_CASE("monomial expansions of fundamentals")
{
    // F^B_{1,2} at m=3: sum over 0 <= i < j < k <= 3
    TruncatedPoly expected{4, {}};
    for (int i = 0; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = j + 1; k <= 3; ++k) {
                std::vector<int> e(4, 0);
                e[size_t(i)]++; e[size_t(j)]++; e[size_t(k)]++;
                expected.add(e, QPoly::constant(1));
            }
    CHECK(expand(fundamental_B(mask({1, 2}), 3), 3) == expected);

    // F^B_{0,2} at m=3: sum over 1 <= i <= j < k <= 3
    TruncatedPoly expected02{4, {}};
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j)
            for (int k = j + 1; k <= 3; ++k) {
                std::vector<int> e(4, 0);
                e[size_t(i)]++; e[size_t(j)]++; e[size_t(k)]++;
                expected02.add(e, QPoly::constant(1));
            }
    CHECK(expand(fundamental_B(mask({0, 2}), 3), 3) == expected02);

    CHECK_THROWS_AS(expand(fundamental_B(0, 2), 1), std::invalid_argument);
    CHECK(expand(fundamental_B(0, 1), 1).monomials.size() == 2);   // x_0 + x_1

    // linearity
    auto f = fundamental_B(mask({1}), 3);
    f += fundamental_B(mask({0, 2}), 3);
    auto lhs = expand(f, 3);
    auto rhs = expand(fundamental_B(mask({1}), 3), 3);
    rhs += expand(fundamental_B(mask({0, 2}), 3), 3);
    CHECK(lhs == rhs);

    // Poirier example: w = [-3,-1,2], rDes = {1}, Neg = {1,2}:
    // sum over i1 < i2 <= i3 of y_{i1} y_{i2} x_{i3}
    TruncatedPoly expectedP{6, {}};
    for (int i1 = 1; i1 <= 3; ++i1)
        for (int i2 = i1 + 1; i2 <= 3; ++i2)
            for (int i3 = i2; i3 <= 3; ++i3) {
                std::vector<int> e(6, 0);
                e[size_t(3 + i1 - 1)]++; e[size_t(3 + i2 - 1)]++; e[size_t(i3 - 1)]++;
                expectedP.add(e, QPoly::constant(1));
            }
    CHECK(expand_P(fundamental_P(SignedPerm::parse("[-3,-1,2]")), 3) == expectedP);
}

TEST_CASE("expansion is injective for m >= n: unitriangular staircase monomials")
{
    for (int n = 1; n <= 4; ++n) {
        std::map<std::vector<int>, GenSet> staircase_owner;
        std::vector<TruncatedPoly> expansions;
        for (GenSet j = 0; j < (1u << n); ++j)
            expansions.push_back(expand(fundamental_B(j, n), n));
        for (GenSet j = 0; j < (1u << n); ++j) {
            // minimal admissible sequence: i_k = #(J through k-1)
            std::vector<int> e(static_cast<size_t>(n) + 1, 0);
            int v = 0;
            for (int k = 1; k <= n; ++k) {
                if (j & (GenSet{1} << (k - 1))) ++v;
                e[static_cast<size_t>(v)] += 1;
            }
            CHECK(expansions[j].monomials.count(e) == 1);
            CHECK(expansions[j].monomials.at(e) == QPoly::constant(1));
            // the staircase of J occurs in F^B_{J'} only when J' is a subset of J
            for (GenSet jp = 0; jp < (1u << n); ++jp)
                if (expansions[jp].monomials.count(e))
                    CHECK((jp & ~j) == 0);
        }
    }
}

TEST_CASE("Schur expansions in the fundamental bases")
{
    CHECK(schur_in_F(P({4})) == fundamental_A(0, 4));
    auto s21 = fundamental_A(mask({1}), 3);
    s21 += fundamental_A(mask({2}), 3);
    CHECK(schur_in_F(P({2, 1})) == s21);

    // empty lower component: plain Schur with no 0-descents
    const auto b = bischur_in_FB(Partition{}, P({2, 1}));
    const auto a = schur_in_F(P({2, 1}));
    CHECK(b.terms.size() == a.terms.size());
    for (const auto& [j, c] : a.terms) CHECK(b.terms.at(j) == c);

    // product expansion of a small bi-Schur function
    TruncatedPoly expected{3, {}};
    for (int i = 1; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            std::vector<int> e(3, 0);
            e[size_t(i)]++; e[size_t(j)]++;
            expected.add(e, QPoly::constant(1));
        }
    CHECK(expand(bischur_in_FB(P({1}), P({1})), 2) == expected);
}

TEST_CASE("domino functions")
{
    CHECK(domino_function_in_FB(P({2})) == fundamental_B(0, 1));
    CHECK(domino_function_in_FB(P({1, 1})) == fundamental_B(mask({0}), 1));

    // G_lambda = bi-Schur of the 2-quotient
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : domino_shapes(n)) {
            const auto [lo, up] = two_quotient(lam);
            CHECK(domino_function_in_FB(lam) == bischur_in_FB(lo, up));
        }

    // monomial expansion equals the semistandard generating function
    for (const auto& lam : domino_shapes(3)) {
        TruncatedPoly ssdt_sum{4, {}};
        for (const auto& t : enumerate_ssdt(lam, 3)) {
            auto mu = domino_content(t);
            mu.resize(4, 0);
            ssdt_sum.add(mu, QPoly::constant(1));
        }
        CHECK(expand(domino_function_in_FB(lam), 3) == ssdt_sum);
    }
}

TEST_CASE("weighted sums")
{
    const std::vector<SignedPerm> none;
    CHECK(weighted_sum_B(none, [](const SignedPerm&) { return QPoly::constant(1); })
              .terms.empty());

    const std::vector<SignedPerm> just_e{SignedPerm::identity(2)};
    CHECK(weighted_sum_B(just_e, [](const SignedPerm&) { return QPoly::constant(1); }) ==
          fundamental_B(0, 2));

    const std::vector<SignedPerm> mixed{SignedPerm::identity(2), SignedPerm::identity(3)};
    CHECK_THROWS_AS(weighted_sum_B(mixed, [](const SignedPerm&) { return QPoly::constant(1); }),
                    std::invalid_argument);
}

TEST_CASE("json round trip")
{
    auto f = bischur_in_FB(P({1}), P({2}));
    f += f;   // non-unit coefficients
    const auto text = qsym_json(f);
    QSymA a;
    QSymB b;
    bool is_b = false;
    REQUIRE(qsym_from_json(text, a, b, is_b));
    CHECK(is_b);
    CHECK(b == f);

    const auto fa = schur_in_F(P({2, 1}));
    REQUIRE(qsym_from_json(qsym_json(fa), a, b, is_b));
    CHECK_FALSE(is_b);
    CHECK(a == fa);
}

TEST_CASE("positivity solver")
{
    // unit vectors against an independent domino-function family: the shapes
    // whose 2-quotient has an empty lower component carry plain Schur
    // functions in x_0, x_1, ...
    const int n = 3;
    std::vector<QSymB> basis;
    for (const auto& mu : partitions_of(n))
        basis.push_back(domino_function_in_FB(two_quotient_inverse(Partition{}, mu)));
    for (size_t i = 0; i < basis.size(); ++i) {
        const auto sol = positivity_solve(basis[i], basis);
        REQUIRE(sol.has_value());
        CHECK(sol->flag == PositivityFlag::NonnegInteger);
        for (size_t j = 0; j < basis.size(); ++j)
            CHECK(sol->coeffs[j] == Rational(i == j ? 1 : 0));
    }

    // a lone fundamental is not a nonnegative combination of these
    bool some_negative_or_outside = false;
    for (GenSet j = 0; j < (1u << n); ++j) {
        const auto sol = positivity_solve(fundamental_B(j, n), basis);
        if (!sol || sol->flag == PositivityFlag::MixedSign) some_negative_or_outside = true;
    }
    CHECK(some_negative_or_outside);

    // the admissible family itself is dependent for n >= 2 and rejected:
    // G_(4,2) = G_(5,1) + G_(4,1,1)
    std::vector<QSymB> admissible;
    for (const auto& lam : admissible_shapes(n)) admissible.push_back(domino_function_in_FB(lam));
    CHECK_THROWS_AS(positivity_solve(fundamental_B(0, n), admissible), std::invalid_argument);
    auto split = domino_function_in_FB(P({5, 1}));
    split += domino_function_in_FB(P({4, 1, 1}));
    CHECK(domino_function_in_FB(P({4, 2})) == split);
}

TEST_CASE("symmetric sets expand in Schur coordinates consistently across A and B")
{
    // conjugacy classes of S_4 are Schur-positive; their Chow lift keeps
    // the same coefficients on s_lambda(x_0,x_1,...)
    std::map<Partition, std::vector<SignedPerm>> classes;
    for_each_in_s(4, [&](const SignedPerm& pi) { classes[cycle_type(pi)].push_back(pi); });
    CHECK(classes.size() == 5);
    for (const auto& [type, elems] : classes) {
        const auto qa = weighted_sum_A(elems, [](const SignedPerm&) { return QPoly::constant(1); });
        const auto coeffs = schur_coefficients(qa);
        REQUIRE(coeffs.has_value());
        const auto qb = weighted_sum_B(elems, [](const SignedPerm&) { return QPoly::constant(1); });
        QSymB rhs{4, {}};
        for (const auto& [lam, c] : *coeffs) {
            REQUIRE(c.is_integer());
            auto g = bischur_in_FB(Partition{}, lam);
            for (auto& [j, coeff] : g.terms) coeff = coeff * QPoly::constant(c.num);
            rhs += g;
        }
        CHECK(qb == rhs);
    }

    // a non-symmetric function has no Schur expansion
    CHECK_FALSE(schur_coefficients(fundamental_A(mask({1}), 3)).has_value());
}

TEST_CASE("Poirier positivity transfers to Chow positivity with transposed lower shape")
{
    // inverse signed descent classes of B_3
    const int n = 3;
    std::vector<std::pair<Partition, Partition>> bishapes;
    std::vector<QSymP> pbasis;
    for (int k = 0; k <= n; ++k)
        for (const auto& lo : partitions_of(k))
            for (const auto& up : partitions_of(n - k)) {
                bishapes.emplace_back(lo, up);
                pbasis.push_back(bsyt_signed_distribution(lo, up));
            }

    std::map<std::pair<GenSet, GenSet>, std::vector<SignedPerm>> classes;
    for_each_in_b(n, [&](const SignedPerm& w) {
        const auto wi = inverse(w);
        classes[{rdes(wi), neg_set(wi)}].push_back(w);
    });

    int positive_classes = 0;
    for (const auto& [key, elems] : classes) {
        const auto sol = positivity_solve_P(signed_distribution(elems), pbasis);
        REQUIRE(sol.has_value());
        REQUIRE(sol->flag == PositivityFlag::NonnegInteger);
        ++positive_classes;
        QSymB rhs{n, {}};
        for (size_t i = 0; i < bishapes.size(); ++i) {
            const auto c = sol->coeffs[i];
            if (c.num == 0) continue;
            auto g = bischur_in_FB(conjugate(bishapes[i].first), bishapes[i].second);
            for (auto& [j, coeff] : g.terms) coeff = coeff * QPoly::constant(c.num);
            rhs += g;
        }
        CHECK(weighted_sum_B(elems, [](const SignedPerm&) { return QPoly::constant(1); }) == rhs);
    }
    CHECK(positive_classes > 0);
}
