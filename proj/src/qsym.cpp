#include "octacomb/qsym.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace octacomb {

namespace {

void check_range(GenSet j, int lo, int hi, const char* what)
{
    for (int x : set_elements(j))
        if (x < lo || x > hi)
            throw std::invalid_argument(std::string(what) + " index out of range");
}

template <class Terms>
void add_term(Terms& terms, typename Terms::key_type key, const QPoly& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

}  // namespace

QSymA& QSymA::add(GenSet j, const QPoly& c)
{
    add_term(terms, j, c);
    return *this;
}

QSymA& QSymA::operator+=(const QSymA& o)
{
    if (degree != o.degree) throw std::invalid_argument("degree mismatch");
    for (const auto& [j, c] : o.terms) add(j, c);
    return *this;
}

QSymA& QSymA::operator-=(const QSymA& o)
{
    if (degree != o.degree) throw std::invalid_argument("degree mismatch");
    for (const auto& [j, c] : o.terms) add(j, QPoly{} - c);
    return *this;
}

QSymB& QSymB::add(GenSet j, const QPoly& c)
{
    add_term(terms, j, c);
    return *this;
}

QSymB& QSymB::operator+=(const QSymB& o)
{
    if (degree != o.degree) throw std::invalid_argument("degree mismatch");
    for (const auto& [j, c] : o.terms) add(j, c);
    return *this;
}

QSymB& QSymB::operator-=(const QSymB& o)
{
    if (degree != o.degree) throw std::invalid_argument("degree mismatch");
    for (const auto& [j, c] : o.terms) add(j, QPoly{} - c);
    return *this;
}

QSymP& QSymP::add(GenSet rdes, GenSet neg, long long c)
{
    if (c == 0) return *this;
    auto key = std::make_pair(rdes, neg);
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

QSymP& QSymP::operator+=(const QSymP& o)
{
    if (degree != o.degree) throw std::invalid_argument("degree mismatch");
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
}

QSymA fundamental_A(GenSet j, int n)
{
    check_range(j, 1, n - 1, "Gessel fundamental");
    QSymA f{n, {}};
    f.add(j, QPoly::constant(1));
    return f;
}

QSymB fundamental_B(GenSet j, int n)
{
    check_range(j, 0, n - 1, "Chow fundamental");
    QSymB f{n, {}};
    f.add(j, QPoly::constant(1));
    return f;
}

QSymP fundamental_P(GenSet rdes, GenSet neg, int n)
{
    check_range(rdes, 1, n - 1, "Poirier r-descent");
    check_range(neg, 1, n, "Poirier negative");
    QSymP f{n, {}};
    f.add(rdes, neg, 1);
    return f;
}

QSymP fundamental_P(const SignedPerm& w)
{
    return fundamental_P(rdes(w), neg_set(w), w.rank());
}

QSymA schur_in_F(const Partition& lam)
{
    QSymA f{lam.size(), {}};
    for (const auto& t : enumerate_syt(lam)) f.add(tableau_des(t), QPoly::constant(1));
    return f;
}

QSymB bischur_in_FB(const Partition& minus, const Partition& plus)
{
    QSymB f{minus.size() + plus.size(), {}};
    for (const auto& t : enumerate_bsyt(minus, plus)) f.add(bi_des_B(t), QPoly::constant(1));
    return f;
}

QSymB domino_function_in_FB(const Partition& lam)
{
    QSymB f{lam.size() / 2, {}};
    for (const auto& t : enumerate_sdt(lam)) f.add(domino_des_B(t), QPoly::constant(1));
    return f;
}

namespace {

int uniform_rank(std::span<const SignedPerm> elements)
{
    int n = elements.empty() ? 0 : elements.front().rank();
    for (const auto& w : elements)
        if (w.rank() != n) throw std::invalid_argument("mixed ranks in weighted sum");
    return n;
}

}  // namespace

QSymA weighted_sum_A(std::span<const SignedPerm> elements, const Weight& weight)
{
    QSymA f{uniform_rank(elements), {}};
    for (const auto& w : elements) f.add(des_A(w), weight(w));
    return f;
}

QSymB weighted_sum_B(std::span<const SignedPerm> elements, const Weight& weight)
{
    QSymB f{uniform_rank(elements), {}};
    for (const auto& w : elements) f.add(des_B(w), weight(w));
    return f;
}

QSymP signed_distribution(std::span<const SignedPerm> elements)
{
    QSymP f{uniform_rank(elements), {}};
    for (const auto& w : elements) f.add(rdes(w), neg_set(w), 1);
    return f;
}

QSymP bsyt_signed_distribution(const Partition& minus, const Partition& plus)
{
    QSymP f{minus.size() + plus.size(), {}};
    for (const auto& t : enumerate_bsyt(minus, plus)) f.add(bi_des(t), bi_neg(t), 1);
    return f;
}

TruncatedPoly& TruncatedPoly::add(const std::vector<int>& exps, const QPoly& c)
{
    if (c.is_zero()) return *this;
    auto [it, fresh] = monomials.emplace(exps, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) monomials.erase(it);
    }
    return *this;
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& o)
{
    if (vars != o.vars) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.monomials) add(e, c);
    return *this;
}

std::string TruncatedPoly::str() const
{
    if (monomials.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : monomials) {
        if (!out.empty()) out += " + ";
        std::string coeff = c.str();
        if (coeff.find_first_of("+- ") != std::string::npos) coeff = "(" + coeff + ")";
        out += coeff;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            out += " x" + std::to_string(v);
            if (e[v] > 1) out += "^" + std::to_string(e[v]);
        }
    }
    return out;
}

namespace {

void expand_rec(int n, int m, int pos, int lo, GenSet strict, std::vector<int>& exps,
                const QPoly& coeff, TruncatedPoly& out)
{
    if (pos > n) {
        out.add(exps, coeff);
        return;
    }
    for (int v = lo; v <= m; ++v) {
        exps[static_cast<size_t>(v)] += 1;
        const int next_lo = (strict & (GenSet{1} << pos)) ? v + 1 : v;
        expand_rec(n, m, pos + 1, next_lo, strict, exps, coeff, out);
        exps[static_cast<size_t>(v)] -= 1;
    }
}

}  // namespace

TruncatedPoly expand(const QSymA& f, int m)
{
    if (m < f.degree)
        throw std::invalid_argument("truncation too small: need m >= degree");
    TruncatedPoly out{m + 1, {}};
    std::vector<int> exps(static_cast<size_t>(m) + 1, 0);
    for (const auto& [j, c] : f.terms)
        expand_rec(f.degree, m, 1, 1, j, exps, c, out);
    return out;
}

TruncatedPoly expand(const QSymB& f, int m)
{
    if (m < f.degree)
        throw std::invalid_argument("truncation too small: need m >= degree");
    TruncatedPoly out{m + 1, {}};
    std::vector<int> exps(static_cast<size_t>(m) + 1, 0);
    for (const auto& [j, c] : f.terms)
        expand_rec(f.degree, m, 1, (j & 1u) ? 1 : 0, j, exps, c, out);
    return out;
}

namespace {

void expand_p_rec(int n, int m, int pos, int lo, GenSet strict, GenSet neg,
                  std::vector<int>& exps, long long coeff, TruncatedPoly& out)
{
    if (pos > n) {
        out.add(exps, QPoly::constant(coeff));
        return;
    }
    for (int v = lo; v <= m; ++v) {
        const size_t slot = (neg & (GenSet{1} << pos)) ? static_cast<size_t>(m + v - 1)
                                                       : static_cast<size_t>(v - 1);
        exps[slot] += 1;
        const int next_lo = (strict & (GenSet{1} << pos)) ? v + 1 : v;
        expand_p_rec(n, m, pos + 1, next_lo, strict, neg, exps, coeff, out);
        exps[slot] -= 1;
    }
}

}  // namespace

TruncatedPoly expand_P(const QSymP& f, int m)
{
    if (m < f.degree)
        throw std::invalid_argument("truncation too small: need m >= degree");
    TruncatedPoly out{2 * m, {}};
    std::vector<int> exps(static_cast<size_t>(2 * m), 0);
    for (const auto& [key, c] : f.terms)
        expand_p_rec(f.degree, m, 1, 1, key.first, key.second, exps, c, out);
    return out;
}

std::string qsym_json(const QSymA& f)
{
    nlohmann::json j;
    j["degree"] = f.degree;
    j["basis"] = "GesselA";
    auto terms = nlohmann::json::array();
    for (const auto& [mask, c] : f.terms)
        terms.push_back({{"J", set_elements(mask)}, {"coeffs", c.coeffs()}});
    j["terms"] = terms;
    return j.dump();
}

std::string qsym_json(const QSymB& f)
{
    nlohmann::json j;
    j["degree"] = f.degree;
    j["basis"] = "ChowB";
    auto terms = nlohmann::json::array();
    for (const auto& [mask, c] : f.terms)
        terms.push_back({{"J", set_elements(mask)}, {"coeffs", c.coeffs()}});
    j["terms"] = terms;
    return j.dump();
}

bool qsym_from_json(const std::string& text, QSymA& a, QSymB& b, bool& is_b)
{
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("degree") || !j.contains("basis") || !j.contains("terms"))
        return false;
    const int degree = j["degree"].get<int>();
    const std::string basis = j["basis"].get<std::string>();
    is_b = basis == "ChowB";
    if (!is_b && basis != "GesselA") return false;
    a = QSymA{degree, {}};
    b = QSymB{degree, {}};
    for (const auto& term : j["terms"]) {
        GenSet mask = 0;
        for (int x : term["J"].get<std::vector<int>>()) mask |= GenSet{1} << x;
        QPoly c;
        int power = 0;
        for (long long v : term["coeffs"].get<std::vector<long long>>()) {
            if (v != 0) c += QPoly::q_power(power) * QPoly::constant(v);
            ++power;
        }
        if (is_b)
            b.add(mask, c);
        else
            a.add(mask, c);
    }
    return true;
}

namespace {

// Exact solve of cols * x = target by fraction-free elimination; nullopt on
// inconsistency, throws on rank-deficient columns.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<long long>> cols,
                                                 std::vector<long long> target)
{
    const int k = static_cast<int>(cols.size());
    const int r = static_cast<int>(target.size());
    std::vector<std::vector<long long>> mat(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        mat[static_cast<size_t>(i)].resize(static_cast<size_t>(k) + 1);
        for (int c = 0; c < k; ++c) mat[size_t(i)][size_t(c)] = cols[size_t(c)][size_t(i)];
        mat[size_t(i)][size_t(k)] = target[size_t(i)];
    }
    long long prev = 1;
    int done = 0;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int i = done; i < r; ++i)
            if (mat[size_t(i)][size_t(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            throw std::invalid_argument("dependent basis passed to exact solver");
        std::swap(mat[size_t(done)], mat[size_t(pivot)]);
        for (int i = done + 1; i < r; ++i) {
            for (int c = col + 1; c <= k; ++c)
                mat[size_t(i)][size_t(c)] =
                    (checked_mul(mat[size_t(i)][size_t(c)], mat[size_t(done)][size_t(col)]) -
                     checked_mul(mat[size_t(i)][size_t(col)], mat[size_t(done)][size_t(c)])) /
                    prev;
            mat[size_t(i)][size_t(col)] = 0;
        }
        prev = mat[size_t(done)][size_t(col)];
        ++done;
    }
    for (int i = done; i < r; ++i)
        if (mat[size_t(i)][size_t(k)] != 0) return std::nullopt;
    std::vector<Rational> x(static_cast<size_t>(k));
    for (int c = k - 1; c >= 0; --c) {
        Rational sum(mat[size_t(c)][size_t(k)]);
        for (int j = c + 1; j < k; ++j)
            sum = sum - Rational(mat[size_t(c)][size_t(j)]) * x[size_t(j)];
        x[size_t(c)] = sum / Rational(mat[size_t(c)][size_t(c)]);
    }
    return x;
}

PositivityFlag classify_solution(const std::vector<Rational>& x)
{
    bool all_int = true;
    for (const auto& v : x) {
        if (v.negative()) return PositivityFlag::MixedSign;
        if (!v.is_integer()) all_int = false;
    }
    return all_int ? PositivityFlag::NonnegInteger : PositivityFlag::NonnegRational;
}

long long constant_coeff(const QPoly& c)
{
    if (!c.is_constant())
        throw std::invalid_argument("exact solving requires q-free coefficients");
    return c.coeff(0);
}

}  // namespace

std::string positivity_flag_str(PositivityFlag f)
{
    switch (f) {
        case PositivityFlag::NonnegInteger: return "nonneg-integer";
        case PositivityFlag::NonnegRational: return "nonneg-rational";
        default: return "mixed-sign";
    }
}

std::optional<PositivitySolution> positivity_solve(const QSymB& f,
                                                   const std::vector<QSymB>& basis)
{
    std::set<GenSet> keys;
    for (const auto& [j, c] : f.terms) keys.insert(j);
    for (const auto& g : basis)
        for (const auto& [j, c] : g.terms) keys.insert(j);
    const std::vector<GenSet> rows(keys.begin(), keys.end());
    auto densify = [&](const QSymB& g) {
        std::vector<long long> v;
        for (GenSet j : rows) {
            auto it = g.terms.find(j);
            v.push_back(it == g.terms.end() ? 0 : constant_coeff(it->second));
        }
        return v;
    };
    std::vector<std::vector<long long>> cols;
    for (const auto& g : basis) cols.push_back(densify(g));
    const auto x = solve_exact(std::move(cols), densify(f));
    if (!x) return std::nullopt;
    return PositivitySolution{*x, classify_solution(*x)};
}

std::optional<PositivitySolution> positivity_solve_P(const QSymP& f,
                                                     const std::vector<QSymP>& basis)
{
    std::set<std::pair<GenSet, GenSet>> keys;
    for (const auto& [j, c] : f.terms) keys.insert(j);
    for (const auto& g : basis)
        for (const auto& [j, c] : g.terms) keys.insert(j);
    const std::vector<std::pair<GenSet, GenSet>> rows(keys.begin(), keys.end());
    auto densify = [&](const QSymP& g) {
        std::vector<long long> v;
        for (const auto& j : rows) {
            auto it = g.terms.find(j);
            v.push_back(it == g.terms.end() ? 0 : it->second);
        }
        return v;
    };
    std::vector<std::vector<long long>> cols;
    for (const auto& g : basis) cols.push_back(densify(g));
    const auto x = solve_exact(std::move(cols), densify(f));
    if (!x) return std::nullopt;
    return PositivitySolution{*x, classify_solution(*x)};
}

std::optional<std::map<Partition, Rational>> schur_coefficients(const QSymA& f)
{
    const auto lams = partitions_of(f.degree);
    std::set<GenSet> keys;
    for (const auto& [j, c] : f.terms) keys.insert(j);
    std::vector<QSymA> basis;
    for (const auto& lam : lams) {
        basis.push_back(schur_in_F(lam));
        for (const auto& [j, c] : basis.back().terms) keys.insert(j);
    }
    const std::vector<GenSet> rows(keys.begin(), keys.end());
    auto densify = [&](const QSymA& g) {
        std::vector<long long> v;
        for (GenSet j : rows) {
            auto it = g.terms.find(j);
            v.push_back(it == g.terms.end() ? 0 : constant_coeff(it->second));
        }
        return v;
    };
    std::vector<std::vector<long long>> cols;
    for (const auto& g : basis) cols.push_back(densify(g));
    const auto x = solve_exact(std::move(cols), densify(f));
    if (!x) return std::nullopt;
    std::map<Partition, Rational> out;
    for (size_t i = 0; i < lams.size(); ++i)
        if ((*x)[i].num != 0) out[lams[i]] = (*x)[i];
    return out;
}

}  // namespace octacomb
