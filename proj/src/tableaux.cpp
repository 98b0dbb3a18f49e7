#include "octacomb/tableaux.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace octacomb {

namespace {

int skew_row_cells(const SkewShape& s, int r)
{
    return s.outer.part(r) - s.inner.part(r);
}

Partition partition_from_rows(const std::vector<int>& lens)
{
    return Partition(std::vector<int>(lens.begin(), lens.end()));
}

}  // namespace

StandardTableau::StandardTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows))
{
    if (!shape_.outer.contains(shape_.inner))
        throw std::invalid_argument("inner shape not contained in outer shape");
    if (static_cast<int>(rows_.size()) != shape_.outer.rows() &&
        !(rows_.empty() && shape_.outer.rows() == 0))
        throw std::invalid_argument("row count does not match shape");
    std::vector<int> all;
    for (int r = 1; r <= shape_.outer.rows(); ++r) {
        const auto& row = rows_[static_cast<size_t>(r - 1)];
        if (static_cast<int>(row.size()) != skew_row_cells(shape_, r))
            throw std::invalid_argument("row length does not match shape");
        for (int x : row) {
            if (x < 1) throw std::invalid_argument("entries must be positive");
            all.push_back(x);
        }
        if (!std::is_sorted(row.begin(), row.end()))
            throw std::invalid_argument("rows must increase");
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("entries must be distinct");
    // column strictness where cells are vertically adjacent
    for (int r = 1; r < shape_.outer.rows(); ++r)
        for (int c = shape_.inner.part(r + 1) + 1; c <= shape_.outer.part(r + 1); ++c) {
            if (c <= shape_.inner.part(r) || c > shape_.outer.part(r)) continue;
            const int above = rows_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - shape_.inner.part(r) - 1)];
            const int below = rows_[static_cast<size_t>(r)][static_cast<size_t>(c - shape_.inner.part(r + 1) - 1)];
            if (above >= below)
                throw std::invalid_argument("columns must increase");
        }
}

int StandardTableau::row_of(int entry) const
{
    for (int r = 1; r <= static_cast<int>(rows_.size()); ++r)
        for (int x : rows_[static_cast<size_t>(r - 1)])
            if (x == entry) return r;
    throw std::invalid_argument("entry not present");
}

std::string StandardTableau::str() const
{
    std::string out;
    for (const auto& row : rows_) {
        out += '[';
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(row[i]);
        }
        out += ']';
    }
    return out.empty() ? "[]" : out;
}

namespace {

void syt_rec(const SkewShape& shape, int next, int n, std::vector<int>& filled,
             std::vector<std::vector<int>>& rows, std::vector<StandardTableau>& out)
{
    if (next > n) {
        out.emplace_back(shape, rows);
        return;
    }
    for (int r = 1; r <= shape.outer.rows(); ++r) {
        if (filled[static_cast<size_t>(r - 1)] >= skew_row_cells(shape, r)) continue;
        const int col = shape.inner.part(r) + filled[static_cast<size_t>(r - 1)] + 1;
        if (r > 1 && col > shape.inner.part(r - 1)) {
            // the cell above is part of the skew shape and must already be filled
            const int above_filled = shape.inner.part(r - 1) + filled[static_cast<size_t>(r - 2)];
            if (col > above_filled) continue;
        }
        filled[static_cast<size_t>(r - 1)] += 1;
        rows[static_cast<size_t>(r - 1)].push_back(next);
        syt_rec(shape, next + 1, n, filled, rows, out);
        rows[static_cast<size_t>(r - 1)].pop_back();
        filled[static_cast<size_t>(r - 1)] -= 1;
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape)
{
    if (!shape.outer.contains(shape.inner))
        throw std::invalid_argument("invalid skew shape");
    std::vector<int> filled(static_cast<size_t>(shape.outer.rows()), 0);
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.outer.rows()));
    std::vector<StandardTableau> out;
    syt_rec(shape, 1, shape.size(), filled, rows, out);
    return out;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape)
{
    return enumerate_syt(SkewShape{shape, Partition{}});
}

GenSet tableau_des(const StandardTableau& t)
{
    GenSet s = 0;
    for (int i = 1; i < t.size(); ++i)
        if (t.row_of(i + 1) > t.row_of(i)) s |= GenSet{1} << i;
    return s;
}

int tableau_ldes(const StandardTableau& t)
{
    return set_max_or_zero(tableau_des(t));
}

std::string BiTableau::str() const
{
    return "lower " + lower.str() + " upper " + upper.str();
}

namespace {

void bsyt_rec(const Partition& minus, const Partition& plus, int next, int n,
              std::vector<int>& fill_lo, std::vector<int>& fill_up,
              std::vector<std::vector<int>>& rows_lo, std::vector<std::vector<int>>& rows_up,
              std::vector<BiTableau>& out)
{
    if (next > n) {
        out.push_back(BiTableau{
            StandardTableau(SkewShape{minus, {}}, rows_lo),
            StandardTableau(SkewShape{plus, {}}, rows_up),
        });
        return;
    }
    auto try_component = [&](const Partition& shape, std::vector<int>& filled,
                             std::vector<std::vector<int>>& rows) {
        for (int r = 1; r <= shape.rows(); ++r) {
            if (filled[static_cast<size_t>(r - 1)] >= shape.part(r)) continue;
            const int col = filled[static_cast<size_t>(r - 1)] + 1;
            if (r > 1 && col > filled[static_cast<size_t>(r - 2)]) continue;
            filled[static_cast<size_t>(r - 1)] += 1;
            rows[static_cast<size_t>(r - 1)].push_back(next);
            bsyt_rec(minus, plus, next + 1, n, fill_lo, fill_up, rows_lo, rows_up, out);
            rows[static_cast<size_t>(r - 1)].pop_back();
            filled[static_cast<size_t>(r - 1)] -= 1;
        }
    };
    try_component(minus, fill_lo, rows_lo);
    try_component(plus, fill_up, rows_up);
}

}  // namespace

std::vector<BiTableau> enumerate_bsyt(const Partition& minus, const Partition& plus)
{
    std::vector<int> fill_lo(static_cast<size_t>(minus.rows()), 0);
    std::vector<int> fill_up(static_cast<size_t>(plus.rows()), 0);
    std::vector<std::vector<int>> rows_lo(static_cast<size_t>(minus.rows()));
    std::vector<std::vector<int>> rows_up(static_cast<size_t>(plus.rows()));
    std::vector<BiTableau> out;
    bsyt_rec(minus, plus, 1, minus.size() + plus.size(), fill_lo, fill_up, rows_lo, rows_up, out);
    return out;
}

namespace {

// Global row of an entry: every lower-component row lies below every upper row.
int bi_row_of(const BiTableau& t, int entry)
{
    const int upper_rows = t.upper.shape().outer.rows();
    for (int r = 1; r <= upper_rows; ++r)
        for (int x : t.upper.rows()[static_cast<size_t>(r - 1)])
            if (x == entry) return r;
    for (int r = 1; r <= t.lower.shape().outer.rows(); ++r)
        for (int x : t.lower.rows()[static_cast<size_t>(r - 1)])
            if (x == entry) return upper_rows + r;
    throw std::invalid_argument("entry not present in bi-tableau");
}

}  // namespace

GenSet bi_des(const BiTableau& t)
{
    GenSet s = 0;
    for (int i = 1; i < t.size(); ++i)
        if (bi_row_of(t, i + 1) > bi_row_of(t, i)) s |= GenSet{1} << i;
    return s;
}

GenSet bi_des_B(const BiTableau& t)
{
    GenSet s = bi_des(t);
    if ((bi_neg(t) & GenSet{2}) != 0) s |= 1u;   // 1 lies in the lower component
    return s;
}

int bi_ldes(const BiTableau& t)
{
    return set_max_or_zero(bi_des(t));
}

GenSet bi_neg(const BiTableau& t)
{
    GenSet s = 0;
    for (const auto& row : t.lower.rows())
        for (int x : row) s |= GenSet{1} << x;
    return s;
}

DominoTableau::DominoTableau(Partition shape, std::vector<Domino> dominoes)
    : shape_(std::move(shape)), dominoes_(std::move(dominoes))
{
    std::sort(dominoes_.begin(), dominoes_.end());
    std::vector<std::vector<bool>> covered(static_cast<size_t>(shape_.rows()));
    for (int r = 1; r <= shape_.rows(); ++r)
        covered[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(shape_.part(r)), false);
    auto mark = [&](int r, int c) {
        if (r < 1 || r > shape_.rows() || c < 1 || c > shape_.part(r))
            throw std::invalid_argument("domino outside shape");
        auto flag = covered[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
        if (flag) throw std::invalid_argument("overlapping dominoes");
        covered[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = true;
    };
    for (const auto& d : dominoes_) {
        mark(d.row, d.col);
        mark(d.row + (d.vertical ? 1 : 0), d.col + (d.vertical ? 0 : 1));
    }
    for (const auto& row : covered)
        for (bool f : row)
            if (!f) throw std::invalid_argument("dominoes do not tile the shape");
}

bool DominoTableau::in_shape(int r, int c) const
{
    return r >= 1 && r <= shape_.rows() && c >= 1 && c <= shape_.part(r);
}

int DominoTableau::cell(int r, int c) const
{
    if (!in_shape(r, c))
        throw std::invalid_argument("cell outside shape");
    for (const auto& d : dominoes_) {
        if (d.row == r && d.col == c) return d.label;
        if (d.vertical ? (d.row + 1 == r && d.col == c) : (d.row == r && d.col + 1 == c))
            return d.label;
    }
    throw std::logic_error("untiled cell");
}

std::string DominoTableau::str() const
{
    std::string out;
    for (int r = 1; r <= shape_.rows(); ++r) {
        out += '[';
        for (int c = 1; c <= shape_.part(r); ++c) {
            if (c > 1) out += ',';
            out += std::to_string(cell(r, c));
        }
        out += ']';
    }
    return out.empty() ? "[]" : out;
}

namespace {

struct Tile {
    int row, col;
    bool vertical;
};

void tilings_rec(const Partition& shape, std::vector<std::vector<bool>>& covered,
                 std::vector<Tile>& partial, std::vector<std::vector<Tile>>& out)
{
    int fr = 0, fc = 0;
    for (int r = 1; r <= shape.rows() && fr == 0; ++r)
        for (int c = 1; c <= shape.part(r); ++c)
            if (!covered[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]) {
                fr = r;
                fc = c;
                break;
            }
    if (fr == 0) {
        out.push_back(partial);
        return;
    }
    auto free_cell = [&](int r, int c) {
        return r >= 1 && r <= shape.rows() && c >= 1 && c <= shape.part(r) &&
               !covered[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
    };
    auto place = [&](bool vertical) {
        const int r2 = fr + (vertical ? 1 : 0), c2 = fc + (vertical ? 0 : 1);
        if (!free_cell(r2, c2)) return;
        covered[size_t(fr - 1)][size_t(fc - 1)] = covered[size_t(r2 - 1)][size_t(c2 - 1)] = true;
        partial.push_back(Tile{fr, fc, vertical});
        tilings_rec(shape, covered, partial, out);
        partial.pop_back();
        covered[size_t(fr - 1)][size_t(fc - 1)] = covered[size_t(r2 - 1)][size_t(c2 - 1)] = false;
    };
    place(false);
    place(true);
}

std::vector<std::vector<Tile>> enumerate_tilings(const Partition& shape)
{
    std::vector<std::vector<bool>> covered(static_cast<size_t>(shape.rows()));
    for (int r = 1; r <= shape.rows(); ++r)
        covered[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(shape.part(r)), false);
    std::vector<Tile> partial;
    std::vector<std::vector<Tile>> out;
    tilings_rec(shape, covered, partial, out);
    return out;
}

// Adjacency constraints between distinct dominoes of one tiling:
// (a,b,strict): label(a) < label(b) when strict, else label(a) <= label(b).
struct Constraint {
    int a, b;
    bool strict;
};

std::vector<Constraint> tiling_constraints(const std::vector<Tile>& tiles)
{
    std::map<std::pair<int, int>, int> owner;
    for (int i = 0; i < static_cast<int>(tiles.size()); ++i) {
        const auto& t = tiles[static_cast<size_t>(i)];
        owner[{t.row, t.col}] = i;
        owner[{t.row + (t.vertical ? 1 : 0), t.col + (t.vertical ? 0 : 1)}] = i;
    }
    std::vector<Constraint> out;
    for (const auto& [cell, i] : owner) {
        const auto [r, c] = cell;
        if (auto it = owner.find({r, c + 1}); it != owner.end() && it->second != i)
            out.push_back(Constraint{i, it->second, false});
        if (auto it = owner.find({r + 1, c}); it != owner.end() && it->second != i)
            out.push_back(Constraint{i, it->second, true});
    }
    return out;
}

void sdt_labels_rec(const std::vector<Tile>& tiles, const std::vector<std::vector<int>>& preds,
                    std::vector<int>& labels, int next, const Partition& shape,
                    std::vector<DominoTableau>& out)
{
    const int m = static_cast<int>(tiles.size());
    if (next > m) {
        std::vector<Domino> ds;
        for (int i = 0; i < m; ++i)
            ds.push_back(Domino{tiles[size_t(i)].row, tiles[size_t(i)].col,
                                tiles[size_t(i)].vertical, labels[size_t(i)]});
        out.emplace_back(shape, std::move(ds));
        return;
    }
    for (int i = 0; i < m; ++i) {
        if (labels[static_cast<size_t>(i)] != 0) continue;
        bool ready = true;
        for (int p : preds[static_cast<size_t>(i)])
            if (labels[static_cast<size_t>(p)] == 0) ready = false;
        if (!ready) continue;
        labels[static_cast<size_t>(i)] = next;
        sdt_labels_rec(tiles, preds, labels, next + 1, shape, out);
        labels[static_cast<size_t>(i)] = 0;
    }
}

}  // namespace

std::vector<DominoTableau> enumerate_sdt(const Partition& lam)
{
    if (!has_empty_two_core(lam))
        throw std::invalid_argument("standard domino tableaux need an empty 2-core");
    std::vector<DominoTableau> out;
    for (const auto& tiles : enumerate_tilings(lam)) {
        std::vector<std::vector<int>> preds(tiles.size());
        for (const auto& c : tiling_constraints(tiles))
            preds[static_cast<size_t>(c.b)].push_back(c.a);
        std::vector<int> labels(tiles.size(), 0);
        sdt_labels_rec(tiles, preds, labels, 1, lam, out);
    }
    std::sort(out.begin(), out.end(), [](const DominoTableau& a, const DominoTableau& b) {
        return a.dominoes() < b.dominoes();
    });
    return out;
}

std::vector<DominoTableau> enumerate_ssdt(const Partition& lam, int max_label)
{
    if (!has_empty_two_core(lam))
        throw std::invalid_argument("semistandard domino tableaux need an empty 2-core");
    if (max_label < 0)
        throw std::invalid_argument("max_label must be nonnegative");
    std::vector<DominoTableau> out;
    for (const auto& tiles : enumerate_tilings(lam)) {
        const auto constraints = tiling_constraints(tiles);
        const int m = static_cast<int>(tiles.size());
        int top_left = -1;
        for (int i = 0; i < m; ++i)
            if (tiles[static_cast<size_t>(i)].row == 1 && tiles[static_cast<size_t>(i)].col == 1)
                top_left = i;
        std::vector<int> labels(static_cast<size_t>(m), -1);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == m) {
                std::vector<Domino> ds;
                for (int k = 0; k < m; ++k)
                    ds.push_back(Domino{tiles[size_t(k)].row, tiles[size_t(k)].col,
                                        tiles[size_t(k)].vertical, labels[size_t(k)]});
                out.emplace_back(lam, std::move(ds));
                return;
            }
            const int lo = (i == top_left && tiles[static_cast<size_t>(i)].vertical) ? 1 : 0;
            for (int v = lo; v <= max_label; ++v) {
                labels[static_cast<size_t>(i)] = v;
                bool ok = true;
                for (const auto& c : constraints) {
                    if (std::max(c.a, c.b) > i) continue;
                    const int la = labels[static_cast<size_t>(c.a)];
                    const int lb = labels[static_cast<size_t>(c.b)];
                    if (c.strict ? la >= lb : la > lb) { ok = false; break; }
                }
                if (ok) self(self, i + 1);
            }
            labels[static_cast<size_t>(i)] = -1;
        };
        rec(rec, 0);
    }
    return out;
}

namespace {

std::pair<int, int> ne_cell(const Domino& d)
{
    return d.vertical ? std::make_pair(d.row, d.col) : std::make_pair(d.row, d.col + 1);
}

}  // namespace

GenSet domino_des(const DominoTableau& t)
{
    const int n = t.domino_count();
    std::vector<int> ne_row(static_cast<size_t>(n) + 1, 0);
    for (const auto& d : t.dominoes()) {
        if (d.label < 1 || d.label > n)
            throw std::invalid_argument("descents are defined for standard domino tableaux");
        ne_row[static_cast<size_t>(d.label)] = ne_cell(d).first;
    }
    GenSet s = 0;
    for (int i = 1; i < n; ++i)
        if (ne_row[static_cast<size_t>(i + 1)] > ne_row[static_cast<size_t>(i)]) s |= GenSet{1} << i;
    return s;
}

GenSet domino_des_B(const DominoTableau& t)
{
    GenSet s = domino_des(t);
    if (t.in_shape(2, 1) && t.cell(2, 1) == 1) s |= 1u;
    return s;
}

int domino_ldes(const DominoTableau& t)
{
    return set_max_or_zero(domino_des_B(t));
}

std::vector<int> domino_content(const DominoTableau& t)
{
    int top = 0;
    for (const auto& d : t.dominoes()) top = std::max(top, d.label);
    std::vector<int> mu(static_cast<size_t>(top) + 1, 0);
    for (const auto& d : t.dominoes()) mu[static_cast<size_t>(d.label)] += 1;
    return mu;
}

bool domino_is_minus(const Domino& d)
{
    const auto [r, c] = ne_cell(d);
    return (r + c) % 2 == 0;
}

namespace {

// Row lengths of the sub-diagram formed by all dominoes with label <= v.
std::vector<int> sub_rows(const DominoTableau& t, int v)
{
    std::vector<int> lens(static_cast<size_t>(t.shape().rows()), 0);
    for (const auto& d : t.dominoes()) {
        if (d.label > v) continue;
        lens[static_cast<size_t>(d.row - 1)] += 1;
        if (d.vertical)
            lens[static_cast<size_t>(d.row)] += 1;
        else
            lens[static_cast<size_t>(d.row - 1)] += 1;
    }
    return lens;
}

}  // namespace

BiTableau carre_leclerc(const DominoTableau& t)
{
    const int n = t.domino_count();
    std::vector<std::vector<int>> rows_lo, rows_up;
    Partition prev_lo, prev_up;
    for (int i = 1; i <= n; ++i) {
        const auto [lo, up] = two_quotient(partition_from_rows(sub_rows(t, i)));
        int grown = 0;
        for (int r = 1; r <= lo.rows(); ++r)
            if (lo.part(r) > prev_lo.part(r)) {
                if (r > static_cast<int>(rows_lo.size())) rows_lo.emplace_back();
                rows_lo[static_cast<size_t>(r - 1)].push_back(i);
                ++grown;
            }
        for (int r = 1; r <= up.rows(); ++r)
            if (up.part(r) > prev_up.part(r)) {
                if (r > static_cast<int>(rows_up.size())) rows_up.emplace_back();
                rows_up[static_cast<size_t>(r - 1)].push_back(i);
                ++grown;
            }
        if (grown != 1)
            throw std::logic_error("domino step must grow exactly one quotient box");
        prev_lo = lo;
        prev_up = up;
    }
    return BiTableau{
        StandardTableau(SkewShape{prev_lo, {}}, rows_lo),
        StandardTableau(SkewShape{prev_up, {}}, rows_up),
    };
}

SemistandardBiTableau carre_leclerc_ss(const DominoTableau& t)
{
    int top = 0;
    for (const auto& d : t.dominoes()) top = std::max(top, d.label);
    SemistandardBiTableau out;
    Partition prev_lo, prev_up;
    for (int v = 0; v <= top; ++v) {
        const auto [lo, up] = two_quotient(partition_from_rows(sub_rows(t, v)));
        for (int r = 1; r <= lo.rows(); ++r) {
            if (r > static_cast<int>(out.lower_rows.size())) out.lower_rows.emplace_back();
            for (int c = prev_lo.part(r); c < lo.part(r); ++c)
                out.lower_rows[static_cast<size_t>(r - 1)].push_back(v);
        }
        for (int r = 1; r <= up.rows(); ++r) {
            if (r > static_cast<int>(out.upper_rows.size())) out.upper_rows.emplace_back();
            for (int c = prev_up.part(r); c < up.part(r); ++c)
                out.upper_rows[static_cast<size_t>(r - 1)].push_back(v);
        }
        prev_lo = lo;
        prev_up = up;
    }
    out.lower_shape = prev_lo;
    out.upper_shape = prev_up;
    return out;
}

bool is_semistandard(const Partition& shape, const std::vector<std::vector<int>>& rows)
{
    if (static_cast<int>(rows.size()) != shape.rows()) return false;
    for (int r = 1; r <= shape.rows(); ++r) {
        const auto& row = rows[static_cast<size_t>(r - 1)];
        if (static_cast<int>(row.size()) != shape.part(r)) return false;
        if (!std::is_sorted(row.begin(), row.end())) return false;
        for (int x : row)
            if (x < 0) return false;
    }
    for (int r = 1; r < shape.rows(); ++r)
        for (int c = 1; c <= shape.part(r + 1); ++c)
            if (rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] >=
                rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)])
                return false;
    return true;
}

std::string json_rows(const DominoTableau& t)
{
    nlohmann::json j;
    j["shape"] = t.shape().parts();
    auto rows = nlohmann::json::array();
    for (int r = 1; r <= t.shape().rows(); ++r) {
        auto row = nlohmann::json::array();
        for (int c = 1; c <= t.shape().part(r); ++c) row.push_back(t.cell(r, c));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump();
}

}  // namespace octacomb
