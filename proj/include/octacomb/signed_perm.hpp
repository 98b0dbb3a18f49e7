#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace octacomb {

// Bitmask over small index sets (generator indices, window positions).
// Bit i stands for index i; callers document their index range.
using GenSet = std::uint32_t;

std::vector<int> set_elements(GenSet s);
int set_max_or_zero(GenSet s);               // max element, 0 when empty
std::string set_str(GenSet s);               // "{0,2}"

// A signed permutation of B_n in window notation [w_1,...,w_n].
// The window entries are nonzero and their absolute values are 1..n.
class SignedPerm {
public:
    explicit SignedPerm(std::vector<int> window);
    static SignedPerm identity(int n);
    static SignedPerm parse(std::string_view text);   // "[-3,1,2]"

    int rank() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    // Value of w at i, for i in [-n..-1] or [1..n]; w(-i) = -w(i).
    int operator()(int i) const;
    int entry(int i) const { return window_[static_cast<size_t>(i - 1)]; }  // w_i, 1-based

    bool is_unsigned() const;       // lies in the parabolic copy of S_n
    bool is_identity() const;

    std::string str() const;

    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
    // Canonical total order: lexicographic on window entries.
    friend std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b)
    {
        return a.window_ <=> b.window_;
    }

private:
    std::vector<int> window_;
};

SignedPerm compose(const SignedPerm& u, const SignedPerm& v);   // (uv)(i) = u(v(i))
SignedPerm inverse(const SignedPerm& w);

GenSet des_A(const SignedPerm& w);    // {1<=i<=n-1 : w_i > w_{i+1}}
GenSet des_B(const SignedPerm& w);    // {0<=i<=n-1 : w_i > w_{i+1}}, w_0 := 0
GenSet neg_set(const SignedPerm& w);  // {1<=i<=n : w_i < 0}
GenSet rdes(const SignedPerm& w);     // descents for -1 <r -2 <r ... <r -n <r 1 <r ... <r n

int block_number(const SignedPerm& w);
int ldes(const SignedPerm& w);        // max of des_B, 0 when empty

long long inversions(const SignedPerm& w);
long long coxeter_length(const SignedPerm& w);   // type B length; equals inversions on S_n

// Stembridge pattern criterion: w avoids [-1,-2] and all [a,b,c]
// with |a| > b > c or -b > |a| > c.
bool is_fully_commutative(const SignedPerm& w);

// First valley v(pi) of an unsigned fully commutative pi:
// min(Des(pi^{-1}) \ {1}), or n when that set is empty.
int first_valley(const SignedPerm& pi);

// Enumeration in canonical (lexicographic) window order.
void for_each_in_b(int n, const std::function<void(const SignedPerm&)>& fn);
void for_each_in_s(int n, const std::function<void(const SignedPerm&)>& fn);
// Shard of B_n with fixed first window entry, same relative order.
void for_each_in_b_with_first(int n, int first, const std::function<void(const SignedPerm&)>& fn);

std::vector<SignedPerm> fc_elements_b(int n);
std::vector<SignedPerm> fc_elements_s(int n);

}  // namespace octacomb
