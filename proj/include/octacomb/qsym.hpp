#pragma once

#include "octacomb/partition.hpp"
#include "octacomb/qpoly.hpp"
#include "octacomb/signed_perm.hpp"
#include "octacomb/tableaux.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace octacomb {

// Exact coefficient vectors over the fundamental bases. Keys are descent-set
// bitmasks; zero coefficients are never stored.

struct QSymA {
    int degree = 0;
    std::map<GenSet, QPoly> terms;   // J subset of [1..n-1]

    QSymA& add(GenSet j, const QPoly& c);
    QSymA& operator+=(const QSymA& o);
    QSymA& operator-=(const QSymA& o);
    friend bool operator==(const QSymA&, const QSymA&) = default;
};

struct QSymB {
    int degree = 0;
    std::map<GenSet, QPoly> terms;   // J subset of {0..n-1}

    QSymB& add(GenSet j, const QPoly& c);
    QSymB& operator+=(const QSymB& o);
    QSymB& operator-=(const QSymB& o);
    friend bool operator==(const QSymB&, const QSymB&) = default;
};

// Poirier signed functions, indexed by the signed descent pair (rDes, Neg).
struct QSymP {
    int degree = 0;
    std::map<std::pair<GenSet, GenSet>, long long> terms;

    QSymP& add(GenSet rdes, GenSet neg, long long c);
    QSymP& operator+=(const QSymP& o);
    friend bool operator==(const QSymP&, const QSymP&) = default;
};

QSymA fundamental_A(GenSet j, int n);
QSymB fundamental_B(GenSet j, int n);
QSymP fundamental_P(GenSet rdes, GenSet neg, int n);
QSymP fundamental_P(const SignedPerm& w);

QSymA schur_in_F(const Partition& lam);                               // sum over SYT
QSymB bischur_in_FB(const Partition& minus, const Partition& plus);   // sum over BSYT
QSymB domino_function_in_FB(const Partition& lam);                    // sum over SDT

using Weight = std::function<QPoly(const SignedPerm&)>;
QSymA weighted_sum_A(std::span<const SignedPerm> elements, const Weight& weight);
QSymB weighted_sum_B(std::span<const SignedPerm> elements, const Weight& weight);
QSymP signed_distribution(std::span<const SignedPerm> elements);      // x^rDes y^Neg counts

// Signed descent distribution over standard bi-tableaux of one bi-shape.
QSymP bsyt_signed_distribution(const Partition& minus, const Partition& plus);

// Truncated monomial expansion: substitute x_{m+1} = x_{m+2} = ... = 0.
// Exponent keys run over x_0..x_m; Gessel expansions leave x_0 unused.
struct TruncatedPoly {
    int vars = 0;    // exponent vector length
    std::map<std::vector<int>, QPoly> monomials;

    TruncatedPoly& add(const std::vector<int>& exps, const QPoly& c);
    TruncatedPoly& operator+=(const TruncatedPoly& o);
    friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;
    std::string str() const;
};

TruncatedPoly expand(const QSymA& f, int m);      // refuses m < degree
TruncatedPoly expand(const QSymB& f, int m);
// Poirier expansion in x_1..x_m, y_1..y_m; exponents list the x block first.
TruncatedPoly expand_P(const QSymP& f, int m);

// JSON round-trip, {"degree":n,"basis":"ChowB","terms":[{"J":[0,2],"coeffs":[...]}]}.
std::string qsym_json(const QSymA& f);
std::string qsym_json(const QSymB& f);
bool qsym_from_json(const std::string& text, QSymA& a, QSymB& b, bool& is_b);

enum class PositivityFlag { NonnegInteger, NonnegRational, MixedSign };
std::string positivity_flag_str(PositivityFlag f);

struct PositivitySolution {
    std::vector<Rational> coeffs;
    PositivityFlag flag = PositivityFlag::MixedSign;
};

// Exact solve of f = sum c_i basis_i by fraction-free elimination. Returns
// nothing when f lies outside the span; throws when the basis is dependent.
// Requires q-free inputs.
std::optional<PositivitySolution> positivity_solve(const QSymB& f,
                                                   const std::vector<QSymB>& basis);
std::optional<PositivitySolution> positivity_solve_P(const QSymP& f,
                                                     const std::vector<QSymP>& basis);

// Schur coefficients of a q-free symmetric QSymA, or nothing when the
// function is not symmetric.
std::optional<std::map<Partition, Rational>> schur_coefficients(const QSymA& f);

}  // namespace octacomb
