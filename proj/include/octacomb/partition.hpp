#pragma once

#include <compare>
#include <string>
#include <vector>

namespace octacomb {

// Integer partition with weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const;                        // sum of parts
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                   // 1-based, 0 beyond the last row
    int col_length(int j) const;             // conjugate part, 1-based
    const std::vector<int>& parts() const { return parts_; }
    bool contains(const Partition& inner) const;
    bool empty() const { return parts_.empty(); }

    std::string str() const;                 // "(4,2,2)"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lam);

long long hook_length(const Partition& lam, int i, int j);
long long hook_count(const Partition& lam);          // f^lambda

// Littlewood 2-core / 2-quotient through beta numbers on two runners.
bool has_empty_two_core(const Partition& lam);
std::pair<Partition, Partition> two_quotient(const Partition& lam);      // (lambda^-, lambda^+)
Partition two_quotient_inverse(const Partition& minus, const Partition& plus);

long long domino_hook_count(const Partition& lam);   // f_2^lambda, requires empty 2-core

std::vector<Partition> partitions_of(int n);
std::vector<Partition> domino_shapes(int n);         // P^0(n): lambda |- 2n with empty 2-core
std::vector<Partition> admissible_shapes(int n);     // (2n-k,k) and (2n-2k,2k-1,1)

}  // namespace octacomb
