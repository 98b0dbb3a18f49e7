#pragma once

#include "octacomb/signed_perm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace octacomb {

enum class CoxType { A, B };

// A word in the generators s_i. Type A of rank n uses indices 1..n-1,
// type B uses 0..n-1; m(s_0,s_1) = 4 in type B, all other adjacent pairs
// have m = 3 and distant pairs commute.
struct CoxWord {
    CoxType type = CoxType::B;
    int rank = 1;
    std::vector<int> letters;

    friend bool operator==(const CoxWord&, const CoxWord&) = default;
    friend auto operator<=>(const CoxWord&, const CoxWord&) = default;
};

CoxWord make_word(CoxType type, int rank, std::vector<int> letters);  // validates index ranges
CoxWord parse_word(CoxType type, int rank, std::string_view text);    // "3 2 1 0"
std::string word_str(const CoxWord& w);                               // "3 2 1 0"
std::string word_factored_str(const std::vector<CoxWord>& factors);   // "(s_3 s_2)(s_1)"

bool generators_commute(CoxType type, int s, int t);
int braid_order(CoxType type, int s, int t);    // m_st in {1,2,3,4}

SignedPerm generator(CoxType type, int rank, int i);
SignedPerm evaluate(const CoxWord& w);          // product applied left to right
bool is_reduced(const CoxWord& w);

// Any reduced word for w (letters chosen by repeated right-descent removal).
CoxWord reduced_word_of(const SignedPerm& w, CoxType type);

// All words reachable from a reduced word by swaps of adjacent commuting
// letters, in sorted order.
std::vector<CoxWord> commutation_class(const CoxWord& w);

// Stembridge criterion at word level: no word in the commutation class
// contains a braid factor sts (m=3) or stst (m=4).
bool is_fc_word(const CoxWord& w);

// Heap of a word: partial order on letter positions, i < j and
// noncommuting labels, closed transitively.
struct Heap {
    CoxType type = CoxType::B;
    int rank = 1;
    std::vector<int> labels;                  // labels[i] = generator index of element i
    std::vector<std::uint64_t> below;         // below[i] = bitmask of j strictly below i
    std::vector<std::pair<int, int>> covers;  // cover relations (lower, upper)

    int size() const { return static_cast<int>(labels.size()); }
    bool less(int i, int j) const { return (below[static_cast<size_t>(j)] >> i) & 1u; }
};

Heap heap_of(const CoxWord& w);
long long linear_extension_count(const Heap& h);               // heap size <= 24
std::vector<CoxWord> linear_extension_words(const Heap& h);    // small heaps only
std::string heap_dot(const Heap& h);                           // cover graph in DOT format

// Commutation-class invariant: for every noncommuting pair {s,t} the label
// sequence of the restricted chain. Equal signatures mean isomorphic heaps.
std::vector<std::vector<int>> heap_signature(const CoxWord& w);

enum class FcClass { Alternating, LeftPeak };
std::string fc_class_str(FcClass c);

FcClass classify(const SignedPerm& w);          // heap classification; throws on non-FC input
GenSet heap_peaks(const SignedPerm& w);         // labels of maximal heap elements
GenSet heap_valleys(const SignedPerm& w);       // labels of minimal heap elements

// Diagonal reduced expression: factors (s_i s_{i-1} ... s_j), each a maximal
// south-east to north-west diagonal of the heap, leftmost diagonal first.
std::vector<CoxWord> diagonal_factors(const SignedPerm& w);    // throws on non-FC input
CoxWord diagonal_reduced_expression(const SignedPerm& w);

}  // namespace octacomb
