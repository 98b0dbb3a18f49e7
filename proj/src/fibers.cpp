#include "octacomb/fibers.hpp"

#include <algorithm>
#include <stdexcept>

namespace octacomb {

SignedPerm delta_element(int i, int n)
{
    if (i < 1 || i > n)
        throw std::invalid_argument("delta index out of range");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    w.push_back(-i);
    for (int v = 1; v <= n; ++v)
        if (v != i) w.push_back(v);
    return SignedPerm(std::move(w));
}

SignedPerm quotient_element(GenSet neg, int n)
{
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int v : set_elements(neg)) w.push_back(-v);
    std::sort(w.begin(), w.end());
    for (int v = 1; v <= n; ++v)
        if (!(neg & (GenSet{1} << v))) w.push_back(v);
    return SignedPerm(std::move(w));
}

ParabolicFactorization parabolic_decompose(const SignedPerm& w)
{
    const int n = w.rank();
    std::vector<int> sorted = w.window();
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pi(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), w.entry(i + 1));
        pi[static_cast<size_t>(i)] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return ParabolicFactorization{SignedPerm(std::move(sorted)), SignedPerm(std::move(pi))};
}

std::vector<SignedPerm> fiber_base(const SignedPerm& pi)
{
    if (!pi.is_unsigned() || !is_fully_commutative(pi))
        throw std::invalid_argument("fiber_base requires a fully commutative unsigned permutation");
    const int n = pi.rank();
    const int v = first_valley(pi);
    std::vector<SignedPerm> out;
    if (des_A(inverse(pi)) & GenSet{2}) {
        out.push_back(SignedPerm::identity(n));
        for (int i = 1; i <= v; ++i) out.push_back(delta_element(i, n));
    } else {
        for (GenSet neg = 0; neg < (GenSet{1} << v); ++neg)
            out.push_back(quotient_element(neg << 1, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPerm> fiber(const SignedPerm& pi)
{
    std::vector<SignedPerm> out;
    for (const auto& mu : fiber_base(pi)) out.push_back(compose(mu, pi));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_left_peak_by_fiber(const SignedPerm& w)
{
    if (!is_fully_commutative(w))
        throw std::invalid_argument("is_left_peak_by_fiber requires a fully commutative element");
    const auto [mu, pi] = parabolic_decompose(w);
    if (pi.entry(1) != 2) return false;
    if (set_elements(neg_set(mu)).size() != 1) return false;
    const int i = -mu.entry(1);   // mu = delta_i
    return 2 <= i && i <= first_valley(pi);
}

}  // namespace octacomb
