#include "octacomb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace octacomb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const
{
    return i >= 1 && i <= rows() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

int Partition::col_length(int j) const
{
    int count = 0;
    for (int p : parts_)
        if (p >= j) ++count;
    return count;
}

bool Partition::contains(const Partition& inner) const
{
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::str() const
{
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition conjugate(const Partition& lam)
{
    std::vector<int> cols;
    for (int j = 1; j <= lam.part(1); ++j) cols.push_back(lam.col_length(j));
    return Partition(std::move(cols));
}

long long hook_length(const Partition& lam, int i, int j)
{
    return (lam.part(i) - j) + (lam.col_length(j) - i) + 1;
}

long long hook_count(const Partition& lam)
{
    const int n = lam.size();
    long long num = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    for (int i = 1; i <= lam.rows(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            const long long h = hook_length(lam, i, j);
            if (num % h != 0)
                throw std::logic_error("hook formula division not exact");
            num /= h;
        }
    return num;
}

namespace {

// Beta numbers for an even number of beads, split by parity runner.
std::pair<std::vector<long long>, std::vector<long long>> runners(const Partition& lam)
{
    int beads = lam.rows();
    if (beads % 2) ++beads;
    std::pair<std::vector<long long>, std::vector<long long>> split;
    for (int i = 1; i <= beads; ++i) {
        const long long beta = lam.part(i) + (beads - i);
        (beta % 2 == 0 ? split.first : split.second).push_back(beta);
    }
    return split;
}

Partition runner_quotient(const std::vector<long long>& beads, int parity)
{
    // beads are descending; bead value 2k+parity at slot j gives part k-(m-j)
    const int m = static_cast<int>(beads.size());
    std::vector<int> parts;
    for (int j = 0; j < m; ++j) {
        const long long k = (beads[static_cast<size_t>(j)] - parity) / 2;
        parts.push_back(static_cast<int>(k - (m - 1 - j)));
    }
    return Partition(std::move(parts));
}

}  // namespace

bool has_empty_two_core(const Partition& lam)
{
    const auto [even, odd] = runners(lam);
    return even.size() == odd.size();
}

std::pair<Partition, Partition> two_quotient(const Partition& lam)
{
    const auto [even, odd] = runners(lam);
    if (even.size() != odd.size())
        throw std::invalid_argument("two_quotient requires an empty 2-core: " + lam.str());
    return {runner_quotient(even, 0), runner_quotient(odd, 1)};
}

Partition two_quotient_inverse(const Partition& minus, const Partition& plus)
{
    const int h = std::max(minus.rows(), plus.rows()) + 1;
    std::vector<long long> beta;
    for (int j = 1; j <= h; ++j) beta.push_back(2LL * (minus.part(j) + (h - j)));
    for (int j = 1; j <= h; ++j) beta.push_back(2LL * (plus.part(j) + (h - j)) + 1);
    std::sort(beta.rbegin(), beta.rend());
    std::vector<int> parts;
    for (int i = 1; i <= 2 * h; ++i)
        parts.push_back(static_cast<int>(beta[static_cast<size_t>(i - 1)] - (2 * h - i)));
    return Partition(std::move(parts));
}

long long domino_hook_count(const Partition& lam)
{
    if (!has_empty_two_core(lam))
        throw std::invalid_argument("domino hook count requires an empty 2-core");
    const int n = lam.size() / 2;
    long long num = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    for (int i = 1; i <= lam.rows(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            const long long h = hook_length(lam, i, j);
            if (h % 2 != 0) continue;
            if (num % (h / 2) != 0)
                throw std::logic_error("domino hook formula division not exact");
            num /= h / 2;
        }
    return num;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::vector<Partition> domino_shapes(int n)
{
    std::vector<Partition> out;
    for (auto& lam : partitions_of(2 * n))
        if (has_empty_two_core(lam)) out.push_back(std::move(lam));
    return out;
}

std::vector<Partition> admissible_shapes(int n)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> parts{2 * n - k};
        if (k > 0) parts.push_back(k);
        out.emplace_back(std::move(parts));
    }
    for (int k = 1; k <= n / 2; ++k)
        out.emplace_back(std::vector<int>{2 * n - 2 * k, 2 * k - 1, 1});
    return out;
}

}  // namespace octacomb
