#include "octacomb/words.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace octacomb {

CoxWord make_word(CoxType type, int rank, std::vector<int> letters)
{
    const int lo = type == CoxType::A ? 1 : 0;
    for (int l : letters)
        if (l < lo || l > rank - 1)
            throw std::invalid_argument("generator index out of range for declared type");
    return CoxWord{type, rank, std::move(letters)};
}

CoxWord parse_word(CoxType type, int rank, std::string_view text)
{
    std::vector<int> letters;
    std::istringstream in{std::string(text)};
    int v;
    while (in >> v) letters.push_back(v);
    if (!in.eof())
        throw std::invalid_argument("malformed word: " + std::string(text));
    return make_word(type, rank, std::move(letters));
}

std::string word_str(const CoxWord& w)
{
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letters[i]);
    }
    return out;
}

std::string word_factored_str(const std::vector<CoxWord>& factors)
{
    if (factors.empty()) return "e";
    std::string out;
    for (const auto& f : factors) {
        out += '(';
        for (size_t i = 0; i < f.letters.size(); ++i) {
            if (i) out += ' ';
            out += "s_" + std::to_string(f.letters[i]);
        }
        out += ')';
    }
    return out;
}

bool generators_commute(CoxType, int s, int t)
{
    return std::abs(s - t) >= 2;
}

int braid_order(CoxType type, int s, int t)
{
    if (s == t) return 1;
    if (std::abs(s - t) >= 2) return 2;
    if (type == CoxType::B && std::min(s, t) == 0) return 4;
    return 3;
}

SignedPerm generator(CoxType type, int rank, int i)
{
    const int lo = type == CoxType::A ? 1 : 0;
    if (i < lo || i > rank - 1)
        throw std::invalid_argument("generator index out of range");
    auto w = SignedPerm::identity(rank).window();
    if (i == 0)
        w[0] = -1;
    else
        std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
    return SignedPerm(std::move(w));
}

SignedPerm evaluate(const CoxWord& w)
{
    SignedPerm result = SignedPerm::identity(w.rank);
    for (int l : w.letters) result = compose(result, generator(w.type, w.rank, l));
    return result;
}

bool is_reduced(const CoxWord& w)
{
    return coxeter_length(evaluate(w)) == static_cast<long long>(w.letters.size());
}

CoxWord reduced_word_of(const SignedPerm& w, CoxType type)
{
    if (type == CoxType::A && !w.is_unsigned())
        throw std::invalid_argument("type A word requested for a signed element");
    std::vector<int> rights;
    SignedPerm cur = w;
    while (!cur.is_identity()) {
        const GenSet des = type == CoxType::A ? des_A(cur) : des_B(cur);
        const int i = set_elements(des).front();
        rights.push_back(i);
        cur = compose(cur, generator(type, cur.rank(), i));
    }
    std::reverse(rights.begin(), rights.end());
    return CoxWord{type, w.rank(), std::move(rights)};
}

std::vector<CoxWord> commutation_class(const CoxWord& w)
{
    if (!is_reduced(w))
        throw std::invalid_argument("commutation_class requires a reduced word");
    std::set<std::vector<int>> seen{w.letters};
    std::deque<std::vector<int>> todo{w.letters};
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop_front();
        for (size_t p = 0; p + 1 < cur.size(); ++p) {
            if (!generators_commute(w.type, cur[p], cur[p + 1])) continue;
            std::swap(cur[p], cur[p + 1]);
            if (seen.insert(cur).second) todo.push_back(cur);
            std::swap(cur[p], cur[p + 1]);
        }
    }
    std::vector<CoxWord> out;
    out.reserve(seen.size());
    for (const auto& letters : seen) out.push_back(CoxWord{w.type, w.rank, letters});
    return out;
}

namespace {

bool has_braid_factor(CoxType type, const std::vector<int>& l)
{
    for (size_t p = 0; p + 2 < l.size(); ++p) {
        if (l[p] == l[p + 2] && braid_order(type, l[p], l[p + 1]) == 3) return true;
        if (p + 3 < l.size() && l[p] == l[p + 2] && l[p + 1] == l[p + 3] &&
            braid_order(type, l[p], l[p + 1]) == 4)
            return true;
    }
    return false;
}

}  // namespace

bool is_fc_word(const CoxWord& w)
{
    if (!is_reduced(w))
        throw std::invalid_argument("is_fc_word requires a reduced word");
    std::set<std::vector<int>> seen{w.letters};
    std::deque<std::vector<int>> todo{w.letters};
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop_front();
        if (has_braid_factor(w.type, cur)) return false;
        for (size_t p = 0; p + 1 < cur.size(); ++p) {
            if (!generators_commute(w.type, cur[p], cur[p + 1])) continue;
            std::swap(cur[p], cur[p + 1]);
            if (seen.insert(cur).second) todo.push_back(cur);
            std::swap(cur[p], cur[p + 1]);
        }
    }
    return true;
}

Heap heap_of(const CoxWord& w)
{
    const int m = static_cast<int>(w.letters.size());
    if (m > 63)
        throw std::invalid_argument("heap too large");
    Heap h;
    h.type = w.type;
    h.rank = w.rank;
    h.labels = w.letters;
    h.below.assign(static_cast<size_t>(m), 0);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < j; ++i)
            if (!generators_commute(w.type, w.letters[size_t(i)], w.letters[size_t(j)]))
                h.below[size_t(j)] |= h.below[size_t(i)] | (std::uint64_t{1} << i);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < j; ++i) {
            if (!h.less(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < m && cover; ++k)
                if (k != i && k != j && h.less(i, k) && h.less(k, j)) cover = false;
            if (cover) h.covers.emplace_back(i, j);
        }
    return h;
}

namespace {

long long extension_count_rec(const Heap& h, std::uint64_t placed, std::uint64_t all,
                              std::unordered_map<std::uint64_t, long long>& memo)
{
    if (placed == all) return 1;
    auto it = memo.find(placed);
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (int e = 0; e < h.size(); ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if ((placed & bit) || (h.below[size_t(e)] & ~placed)) continue;
        total += extension_count_rec(h, placed | bit, all, memo);
    }
    memo[placed] = total;
    return total;
}

void extension_words_rec(const Heap& h, std::uint64_t placed, std::uint64_t all,
                         std::vector<int>& prefix, std::vector<CoxWord>& out)
{
    if (placed == all) {
        out.push_back(CoxWord{h.type, h.rank, prefix});
        return;
    }
    for (int e = 0; e < h.size(); ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if ((placed & bit) || (h.below[size_t(e)] & ~placed)) continue;
        prefix.push_back(h.labels[size_t(e)]);
        extension_words_rec(h, placed | bit, all, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

long long linear_extension_count(const Heap& h)
{
    if (h.size() > 24)
        throw std::invalid_argument("linear extension count limited to heaps of size <= 24");
    const std::uint64_t all = h.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.size()) - 1;
    std::unordered_map<std::uint64_t, long long> memo;
    return extension_count_rec(h, 0, all, memo);
}

std::vector<CoxWord> linear_extension_words(const Heap& h)
{
    const std::uint64_t all = (std::uint64_t{1} << h.size()) - 1;
    std::vector<int> prefix;
    std::vector<CoxWord> out;
    extension_words_rec(h, 0, all, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string heap_dot(const Heap& h)
{
    std::ostringstream out;
    out << "digraph heap {\n";
    for (int i = 0; i < h.size(); ++i)
        out << "  v" << i << " [label=\"s" << h.labels[size_t(i)] << "\"];\n";
    for (const auto& [lo, hi] : h.covers)
        out << "  v" << lo << " -> v" << hi << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<std::vector<int>> heap_signature(const CoxWord& w)
{
    const int lo = w.type == CoxType::A ? 1 : 0;
    std::vector<std::vector<int>> sig;
    for (int s = lo; s <= w.rank - 1; ++s)
        for (int t = s; t <= w.rank - 1; ++t) {
            if (s != t && generators_commute(w.type, s, t)) continue;
            std::vector<int> restricted;
            for (int l : w.letters)
                if (l == s || l == t) restricted.push_back(l);
            sig.push_back(std::move(restricted));
        }
    return sig;
}

namespace {

// Restriction of the heap to a label set; elements in chain (position) order.
// Verifies the restriction is totally ordered by the heap order.
std::vector<int> restricted_chain(const Heap& h, GenSet labels)
{
    std::vector<int> elems;
    for (int i = 0; i < h.size(); ++i)
        if (labels & (GenSet{1} << h.labels[size_t(i)])) elems.push_back(i);
    for (size_t k = 0; k + 1 < elems.size(); ++k)
        if (!h.less(elems[k], elems[k + 1]))
            throw std::logic_error("restricted heap is not a chain");
    return elems;
}

GenSet label_range(int from, int to)
{
    GenSet s = 0;
    for (int i = from; i <= to; ++i) s |= GenSet{1} << i;
    return s;
}

// Every chain on a noncommuting label pair alternates. `skip` marks one
// element treated as deleted.
bool labels_alternate(const Heap& h, int lo_label, int hi_label, int skip = -1)
{
    for (int s = lo_label; s < hi_label; ++s) {
        int prev = -1;
        for (int i : restricted_chain(h, label_range(s, s + 1))) {
            if (i == skip) continue;
            const int l = h.labels[size_t(i)];
            if (l == prev) return false;
            prev = l;
        }
    }
    return true;
}

bool left_peak_at(const Heap& h, int j)
{
    const int n = h.rank;
    // (a) the sub-heap on labels 0..j is the chain j, j-1, ..., 1, 0, 1, ..., j
    std::vector<int> low;
    try {
        low = restricted_chain(h, label_range(0, j));
    } catch (const std::logic_error&) {
        return false;
    }
    if (static_cast<int>(low.size()) != 2 * j + 1) return false;
    for (int k = 0; k <= 2 * j; ++k)
        if (h.labels[size_t(low[size_t(k)])] != std::abs(j - k)) return false;
    // (b) the two occurrences of s_j sit consecutively in the chain on
    // labels {j, j+1}, flanked by at most one s_{j+1} on each side
    std::vector<int> seq;
    for (int i : restricted_chain(h, label_range(j, std::min(j + 1, n - 1))))
        seq.push_back(h.labels[size_t(i)]);
    std::vector<size_t> at_j;
    for (size_t k = 0; k < seq.size(); ++k)
        if (seq[k] == j) at_j.push_back(k);
    if (at_j.size() != 2 || at_j[1] != at_j[0] + 1) return false;
    if (at_j[0] > 1 || seq.size() - at_j[1] > 2) return false;
    // (c) deleting one occurrence of s_j leaves the labels j..n-1 alternating
    std::vector<int> js;
    for (int i = 0; i < h.size(); ++i)
        if (h.labels[size_t(i)] == j) js.push_back(i);
    for (int skip : js)
        if (labels_alternate(h, j, n - 1, skip)) return true;
    return false;
}

Heap heap_of_element(const SignedPerm& w)
{
    if (!is_fully_commutative(w))
        throw std::invalid_argument("heap classification requires a fully commutative element");
    return heap_of(reduced_word_of(w, CoxType::B));
}

}  // namespace

std::string fc_class_str(FcClass c)
{
    return c == FcClass::Alternating ? "alternating" : "left-peak";
}

FcClass classify(const SignedPerm& w)
{
    const Heap h = heap_of_element(w);
    const int n = w.rank();
    for (int j = 1; j <= n - 1; ++j)
        if (left_peak_at(h, j)) return FcClass::LeftPeak;
    if (n == 1 || labels_alternate(h, 0, n - 1)) return FcClass::Alternating;
    throw std::logic_error("FC heap is neither alternating nor a left-peak: " + w.str());
}

GenSet heap_peaks(const SignedPerm& w)
{
    const Heap h = heap_of_element(w);
    std::vector<std::uint64_t> above(static_cast<size_t>(h.size()), 0);
    for (int j = 0; j < h.size(); ++j)
        for (int i = 0; i < j; ++i)
            if (h.less(i, j)) above[size_t(i)] |= std::uint64_t{1} << j;
    GenSet s = 0;
    for (int i = 0; i < h.size(); ++i)
        if (above[size_t(i)] == 0) s |= GenSet{1} << h.labels[size_t(i)];
    return s;
}

GenSet heap_valleys(const SignedPerm& w)
{
    const Heap h = heap_of_element(w);
    GenSet s = 0;
    for (int i = 0; i < h.size(); ++i)
        if (h.below[size_t(i)] == 0) s |= GenSet{1} << h.labels[size_t(i)];
    return s;
}

std::vector<CoxWord> diagonal_factors(const SignedPerm& w)
{
    const Heap h = heap_of_element(w);
    const int m = h.size();
    std::uint64_t remaining = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
    auto minimal_with_label = [&](int label) -> int {
        for (int i = 0; i < m; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if ((remaining & bit) && h.labels[size_t(i)] == label &&
                (h.below[size_t(i)] & remaining) == 0)
                return i;
        }
        return -1;
    };
    std::vector<CoxWord> factors;
    while (remaining != 0) {
        int start = -1;
        for (int i = 0; i < m; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (!(remaining & bit) || (h.below[size_t(i)] & remaining)) continue;
            if (start < 0 || h.labels[size_t(i)] < h.labels[size_t(start)]) start = i;
        }
        std::vector<int> letters;
        int cur = start;
        while (cur >= 0) {
            letters.push_back(h.labels[size_t(cur)]);
            remaining &= ~(std::uint64_t{1} << cur);
            cur = minimal_with_label(h.labels[size_t(cur)] - 1);
        }
        factors.push_back(CoxWord{CoxType::B, w.rank(), std::move(letters)});
    }
    return factors;
}

CoxWord diagonal_reduced_expression(const SignedPerm& w)
{
    std::vector<int> letters;
    for (const auto& f : diagonal_factors(w))
        letters.insert(letters.end(), f.letters.begin(), f.letters.end());
    CoxWord word{CoxType::B, w.rank(), std::move(letters)};
    if (evaluate(word) != w || !is_reduced(word))
        throw std::logic_error("diagonal expression failed post-check for " + w.str());
    return word;
}

}  // namespace octacomb
