#pragma once

#include "octacomb/signed_perm.hpp"

#include <vector>

namespace octacomb {

// Unique factorization w = mu . pi with mu in the quotient (B_n)^J for
// J = S \ {s_0} (ascending window) and pi the standardization of w.
struct ParabolicFactorization {
    SignedPerm mu;
    SignedPerm pi;
};

// delta_i = s_{i-1} ... s_1 s_0, window [-i, 1, ..., i-1, i+1, ..., n].
SignedPerm delta_element(int i, int n);

// The quotient element with prescribed negative set: the ascending
// reordering of {-j : j in neg} with the remaining positives.
SignedPerm quotient_element(GenSet neg, int n);

ParabolicFactorization parabolic_decompose(const SignedPerm& w);

// B_n(pi): products mu_1 ... mu_{v(pi)} with mu_i in {e, delta_i} when
// 1 is not a left descent of pi, and {e, delta_1, ..., delta_{v(pi)}}
// otherwise. Sorted lexicographically. Throws on non-FC input.
std::vector<SignedPerm> fiber_base(const SignedPerm& pi);

// The fiber B_n(pi) . pi, sorted lexicographically.
std::vector<SignedPerm> fiber(const SignedPerm& pi);

// Left-peak criterion through the fiber decomposition: the standardization
// starts with 2 and mu = delta_i for some 2 <= i <= v(pi).
bool is_left_peak_by_fiber(const SignedPerm& w);

}  // namespace octacomb
