#include "octacomb/signed_perm.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace octacomb {

std::vector<int> set_elements(GenSet s)
{
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

int set_max_or_zero(GenSet s)
{
    if (s == 0) return 0;
    return std::bit_width(s) - 1;
}

std::string set_str(GenSet s)
{
    std::string out = "{";
    bool first = true;
    for (int i : set_elements(s)) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

SignedPerm::SignedPerm(std::vector<int> window) : window_(std::move(window))
{
    const int n = rank();
    if (n < 1 || n > 16)
        throw std::invalid_argument("window rank out of supported range [1,16]");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : window_) {
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[static_cast<size_t>(a)])
            throw std::invalid_argument("window is not a signed permutation: " + str());
        seen[static_cast<size_t>(a)] = true;
    }
}

SignedPerm SignedPerm::identity(int n)
{
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::parse(std::string_view text)
{
    std::vector<int> w;
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos == text.size() || text[pos] != '[')
        throw std::invalid_argument("window must start with '['");
    ++pos;
    for (;;) {
        skip_ws();
        if (pos < text.size() && text[pos] == ']') { ++pos; break; }
        int value = 0;
        auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || next == text.data() + pos)
            throw std::invalid_argument("malformed window entry in: " + std::string(text));
        pos = static_cast<size_t>(next - text.data());
        w.push_back(value);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
        if (pos < text.size() && text[pos] == ']') { ++pos; break; }
        throw std::invalid_argument("expected ',' or ']' in window: " + std::string(text));
    }
    skip_ws();
    if (pos != text.size())
        throw std::invalid_argument("trailing characters after window: " + std::string(text));
    return SignedPerm(std::move(w));
}

int SignedPerm::operator()(int i) const
{
    const int n = rank();
    if (i == 0 || std::abs(i) > n)
        throw std::invalid_argument("argument out of [-n..n]\\{0}");
    return i > 0 ? window_[static_cast<size_t>(i - 1)] : -window_[static_cast<size_t>(-i - 1)];
}

bool SignedPerm::is_unsigned() const
{
    return std::all_of(window_.begin(), window_.end(), [](int v) { return v > 0; });
}

bool SignedPerm::is_identity() const
{
    for (int i = 1; i <= rank(); ++i)
        if (entry(i) != i) return false;
    return true;
}

std::string SignedPerm::str() const
{
    std::string out = "[";
    for (size_t i = 0; i < window_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(window_[i]);
    }
    return out + "]";
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& v)
{
    if (u.rank() != v.rank())
        throw std::invalid_argument("compose: rank mismatch");
    const int n = u.rank();
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = u(v(i));
    return SignedPerm(std::move(w));
}

SignedPerm inverse(const SignedPerm& w)
{
    const int n = w.rank();
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int v = w.entry(i);
        if (v > 0)
            inv[static_cast<size_t>(v - 1)] = i;
        else
            inv[static_cast<size_t>(-v - 1)] = -i;
    }
    return SignedPerm(std::move(inv));
}

GenSet des_A(const SignedPerm& w)
{
    GenSet s = 0;
    for (int i = 1; i < w.rank(); ++i)
        if (w.entry(i) > w.entry(i + 1)) s |= GenSet{1} << i;
    return s;
}

GenSet des_B(const SignedPerm& w)
{
    GenSet s = des_A(w);
    if (w.entry(1) < 0) s |= 1u;   // w_0 := 0
    return s;
}

GenSet neg_set(const SignedPerm& w)
{
    GenSet s = 0;
    for (int i = 1; i <= w.rank(); ++i)
        if (w.entry(i) < 0) s |= GenSet{1} << i;
    return s;
}

GenSet rdes(const SignedPerm& w)
{
    const int n = w.rank();
    auto r_rank = [n](int v) { return v < 0 ? -v : n + v; };
    GenSet s = 0;
    for (int i = 1; i < n; ++i)
        if (r_rank(w.entry(i)) > r_rank(w.entry(i + 1))) s |= GenSet{1} << i;
    return s;
}

int block_number(const SignedPerm& w)
{
    const int n = w.rank();
    int splits = 0;
    int prefix_max = w.entry(1);
    std::vector<int> suffix_min(static_cast<size_t>(n) + 1, 0);
    suffix_min[static_cast<size_t>(n)] = w.entry(n);
    for (int i = n - 1; i >= 1; --i)
        suffix_min[static_cast<size_t>(i)] = std::min(w.entry(i), suffix_min[static_cast<size_t>(i) + 1]);
    for (int i = 1; i <= n - 1; ++i) {
        prefix_max = std::max(prefix_max, w.entry(i));
        if (prefix_max < suffix_min[static_cast<size_t>(i) + 1]) ++splits;
    }
    return 1 + splits;
}

int ldes(const SignedPerm& w)
{
    return set_max_or_zero(des_B(w));
}

long long inversions(const SignedPerm& w)
{
    long long count = 0;
    const int n = w.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w.entry(i) > w.entry(j)) ++count;
    return count;
}

long long coxeter_length(const SignedPerm& w)
{
    long long len = inversions(w);
    for (int i = 1; i <= w.rank(); ++i)
        if (w.entry(i) < 0) len += -w.entry(i);
    return len;
}

bool is_fully_commutative(const SignedPerm& w)
{
    const int n = w.rank();
    const auto& v = w.window();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v[size_t(j)] < v[size_t(i)] && v[size_t(i)] < 0) return false;   // [-1,-2]
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const int a = std::abs(v[size_t(i)]), b = v[size_t(j)], c = v[size_t(k)];
                if (a > b && b > c) return false;
                if (-b > a && a > c) return false;
            }
    return true;
}

int first_valley(const SignedPerm& pi)
{
    if (!pi.is_unsigned() || !is_fully_commutative(pi))
        throw std::invalid_argument("first_valley requires a fully commutative unsigned permutation");
    const GenSet left = des_A(inverse(pi)) & ~GenSet{2};   // drop index 1
    if (left == 0) return pi.rank();
    return set_elements(left).front();
}

namespace {

void enumerate_rec(int n, std::vector<int>& prefix, std::vector<bool>& used, bool signs,
                   const std::function<void(const SignedPerm&)>& fn)
{
    if (static_cast<int>(prefix.size()) == n) {
        fn(SignedPerm(prefix));
        return;
    }
    const int lo = signs ? -n : 1;
    for (int v = lo; v <= n; ++v) {
        if (v == 0) continue;
        if (v < 0 && !signs) continue;
        const int a = std::abs(v);
        if (used[static_cast<size_t>(a)]) continue;
        used[static_cast<size_t>(a)] = true;
        prefix.push_back(v);
        enumerate_rec(n, prefix, used, signs, fn);
        prefix.pop_back();
        used[static_cast<size_t>(a)] = false;
    }
}

}  // namespace

void for_each_in_b(int n, const std::function<void(const SignedPerm&)>& fn)
{
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    prefix.reserve(static_cast<size_t>(n));
    enumerate_rec(n, prefix, used, true, fn);
}

void for_each_in_s(int n, const std::function<void(const SignedPerm&)>& fn)
{
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    prefix.reserve(static_cast<size_t>(n));
    enumerate_rec(n, prefix, used, false, fn);
}

void for_each_in_b_with_first(int n, int first, const std::function<void(const SignedPerm&)>& fn)
{
    if (first == 0 || std::abs(first) > n)
        throw std::invalid_argument("first entry out of range");
    std::vector<int> prefix{first};
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    used[static_cast<size_t>(std::abs(first))] = true;
    enumerate_rec(n, prefix, used, true, fn);
}

std::vector<SignedPerm> fc_elements_b(int n)
{
    std::vector<SignedPerm> out;
    for_each_in_b(n, [&](const SignedPerm& w) {
        if (is_fully_commutative(w)) out.push_back(w);
    });
    return out;
}

std::vector<SignedPerm> fc_elements_s(int n)
{
    std::vector<SignedPerm> out;
    for_each_in_s(n, [&](const SignedPerm& w) {
        if (is_fully_commutative(w)) out.push_back(w);
    });
    return out;
}

}  // namespace octacomb
