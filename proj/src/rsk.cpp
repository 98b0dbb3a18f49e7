#include "octacomb/rsk.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace octacomb {

std::vector<int> palindromic(const SignedPerm& w)
{
    const int n = w.rank();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(2 * n));
    for (int i = n; i >= 1; --i) out.push_back(-w.entry(i));
    for (int i = 1; i <= n; ++i) out.push_back(w.entry(i));
    return out;
}

std::pair<TableauRows, TableauRows> rsk_classical(const std::vector<int>& word)
{
    std::vector<int> alphabet = word;
    std::sort(alphabet.begin(), alphabet.end());
    if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end())
        throw std::invalid_argument("rsk_classical requires distinct entries");
    TableauRows p, q;
    for (size_t t = 0; t < word.size(); ++t) {
        int x = word[t];
        size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                q[r].push_back(alphabet[t]);
                break;
            }
            std::swap(*it, x);
        }
    }
    return {p, q};
}

Partition rows_shape(const TableauRows& t)
{
    std::vector<int> lens;
    for (const auto& row : t) lens.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lens));
}

namespace {

struct Grid {
    // values indexed by (row, col), 1-based; 0 marks the hole being slid
    std::map<std::pair<int, int>, int> v;
    std::map<int, std::pair<int, int>> where;   // value -> cell

    int at(int r, int c) const
    {
        auto it = v.find({r, c});
        return it == v.end() ? INT_NONE : it->second;
    }
    void put(int r, int c, int x)
    {
        v[{r, c}] = x;
        if (x != 0) where[x] = {r, c};
    }
    static constexpr int INT_NONE = INT32_MIN;
};

std::string render(const Grid& g, const std::vector<Domino>& dominoes)
{
    std::map<std::pair<int, int>, int> cells = g.v;
    for (const auto& d : dominoes) {
        cells[{d.row, d.col}] = d.label;
        cells[{d.row + (d.vertical ? 1 : 0), d.col + (d.vertical ? 0 : 1)}] = d.label;
    }
    std::ostringstream out;
    int row = 1;
    while (true) {
        if (cells.find({row, 1}) == cells.end()) break;
        out << '[';
        for (int c = 1; cells.find({row, c}) != cells.end(); ++c) {
            if (c > 1) out << ',';
            const int x = cells[{row, c}];
            if (x == 0)
                out << '.';
            else
                out << x;
        }
        out << ']';
        ++row;
    }
    return out.str();
}

}  // namespace

DominoTableau jdt_vacate(const TableauRows& t, int n, std::vector<std::string>* trace)
{
    Grid g;
    for (int r = 0; r < static_cast<int>(t.size()); ++r)
        for (int c = 0; c < static_cast<int>(t[static_cast<size_t>(r)].size()); ++c)
            g.put(r + 1, c + 1, t[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    std::vector<Domino> dominoes;
    auto is_single = [&](int r, int c) { return g.at(r, c) != Grid::INT_NONE; };
    if (trace) trace->push_back(render(g, dominoes));

    for (int i = n; i >= 1; --i) {
        auto [r, c] = g.where.at(-i);
        g.v[{r, c}] = 0;   // hole travelled by -i
        for (;;) {
            const auto [tr, tc] = g.where.at(i);
            if (tr == r && tc == c + 1) {
                g.v.erase({r, c});
                g.v.erase({tr, tc});
                g.where.erase(i);
                g.where.erase(-i);
                dominoes.push_back(Domino{r, c, false, i});
                break;
            }
            if (tr == r + 1 && tc == c) {
                g.v.erase({r, c});
                g.v.erase({tr, tc});
                g.where.erase(i);
                g.where.erase(-i);
                dominoes.push_back(Domino{r, c, true, i});
                break;
            }
            const bool right_ok = is_single(r, c + 1);
            const bool below_ok = is_single(r + 1, c);
            if (!right_ok && !below_ok)
                throw std::logic_error("jeu de taquin slide cannot reach the matching letter");
            int nr = r, nc = c;
            if (!right_ok)
                nr = r + 1;
            else if (!below_ok)
                nc = c + 1;
            else if (g.at(r + 1, c) < g.at(r, c + 1))
                nr = r + 1;
            else
                nc = c + 1;
            g.put(r, c, g.at(nr, nc));
            g.v[{nr, nc}] = 0;
            r = nr;
            c = nc;
            if (trace) trace->push_back(render(g, dominoes));
        }
        if (trace) trace->push_back(render(g, dominoes));
    }

    std::vector<int> lens;
    std::map<int, int> row_len;
    for (const auto& d : dominoes) {
        row_len[d.row] += d.vertical ? 1 : 2;
        if (d.vertical) row_len[d.row + 1] += 1;
    }
    for (int r = 1; r <= (row_len.empty() ? 0 : row_len.rbegin()->first); ++r)
        lens.push_back(row_len[r]);
    return DominoTableau(Partition(std::move(lens)), std::move(dominoes));
}

std::pair<DominoTableau, DominoTableau> bv_rsk(const SignedPerm& w)
{
    const auto [p0, q0] = rsk_classical(palindromic(w));
    return {jdt_vacate(p0, w.rank()), jdt_vacate(q0, w.rank())};
}

Partition bv_shape(const SignedPerm& w)
{
    return rows_shape(rsk_classical(palindromic(w)).first);
}

void for_each_cell_member(const Partition& lam, int n,
                          const std::function<void(const SignedPerm&)>& fn)
{
    if (lam.size() != 2 * n || !has_empty_two_core(lam))
        throw std::invalid_argument("cell shapes are partitions of 2n with empty 2-core");
    for_each_in_b(n, [&](const SignedPerm& w) {
        if (bv_shape(w) == lam) fn(w);
    });
}

std::vector<SignedPerm> cell_members(const Partition& lam, int n)
{
    if (n > 6)
        throw std::invalid_argument("cells are materialized only up to rank 6; stream instead");
    std::vector<SignedPerm> out;
    for_each_cell_member(lam, n, [&](const SignedPerm& w) { out.push_back(w); });
    return out;
}

bool has_decreasing_subsequence(const std::vector<int>& word, int len)
{
    // longest strictly decreasing subsequence via patience on negated values
    std::vector<int> best;   // best[k] = largest tail of a decreasing subsequence of length k+1
    int longest = 0;
    for (size_t i = 0; i < word.size(); ++i) {
        int lo = 0, hi = static_cast<int>(best.size());
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            if (best[static_cast<size_t>(mid)] > word[i])
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo == static_cast<int>(best.size()))
            best.push_back(word[i]);
        else
            best[static_cast<size_t>(lo)] = word[i];
        longest = std::max(longest, static_cast<int>(best.size()));
        if (longest >= len) return true;
    }
    return longest >= len;
}

bool has_two_disjoint_decreasing_triples(const std::vector<int>& word)
{
    const int m = static_cast<int>(word.size());
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                if (word[size_t(a)] > word[size_t(b)] && word[size_t(b)] > word[size_t(c)])
                    triples.push_back({a, b, c});
    for (size_t x = 0; x < triples.size(); ++x)
        for (size_t y = x + 1; y < triples.size(); ++y) {
            const auto &s = triples[x], &t = triples[y];
            bool disjoint = true;
            for (int u : s)
                for (int v : t)
                    if (u == v) disjoint = false;
            if (disjoint) return true;
        }
    return false;
}

}  // namespace octacomb
