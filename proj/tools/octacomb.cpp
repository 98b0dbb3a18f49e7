// Command-line frontend: enumeration, statistics, RSK traces, fiber tables,
// quasi-symmetric expansion, and the verification harness.

#include "octacomb/fibers.hpp"
#include "octacomb/qsym.hpp"
#include "octacomb/rsk.hpp"
#include "octacomb/tableaux.hpp"
#include "octacomb/verify.hpp"
#include "octacomb/words.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace octacomb;
using nlohmann::json;

constexpr int kUsageError = 2;

int max_rank_cap()
{
    const char* cap = std::getenv("OCTACOMB_MAX_N");
    if (!cap) return 16;
    return std::max(1, std::atoi(cap));
}

void require_rank(int n)
{
    if (n < 1) throw CLI::ValidationError("--n", "rank must be at least 1");
    if (n > max_rank_cap())
        throw CLI::ValidationError("--n", "rank exceeds OCTACOMB_MAX_N cap of " +
                                               std::to_string(max_rank_cap()));
}

json window_list(const std::vector<SignedPerm>& ws)
{
    auto arr = json::array();
    for (const auto& w : ws) arr.push_back(w.str());
    return arr;
}

json tableau_json(const DominoTableau& t)
{
    return json::parse(json_rows(t));
}

int run_enumerate(const std::string& what, int n, const std::string& format)
{
    require_rank(n);
    if (what != "fc") throw CLI::ValidationError("enumerate", "unknown set: " + what);
    const auto fc = fc_elements_b(n);
    if (format == "json") {
        json j{{"n", n}, {"count", fc.size()}, {"windows", window_list(fc)}};
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "window\n";
        for (const auto& w : fc) std::cout << "\"" << w.str() << "\"\n";
    } else {
        for (const auto& w : fc) std::cout << w.str() << "\n";
    }
    return 0;
}

int run_stats(const std::string& window, bool dot, const std::string& format)
{
    const auto w = SignedPerm::parse(window);
    require_rank(w.rank());
    if (dot) {
        std::cout << heap_dot(heap_of(reduced_word_of(w, CoxType::B)));
        return 0;
    }
    json j;
    j["window"] = w.str();
    j["n"] = w.rank();
    j["des_A"] = set_elements(des_A(w));
    j["des_B"] = set_elements(des_B(w));
    j["neg"] = set_elements(neg_set(w));
    j["rdes"] = set_elements(rdes(w));
    j["bl"] = block_number(w);
    j["bl_inverse"] = block_number(inverse(w));
    j["ldes"] = ldes(w);
    j["length"] = coxeter_length(w);
    const bool fc = is_fully_commutative(w);
    j["is_fc"] = fc;
    if (fc) {
        j["fc_class"] = fc_class_str(classify(w));
        j["diagonal"] = word_factored_str(diagonal_factors(w));
        j["shape"] = bv_shape(w).parts();
    }
    if (format == "csv") {
        std::cout << "key,value\n";
        for (const auto& [k, v] : j.items())
            std::cout << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (format == "text") {
        for (const auto& [k, v] : j.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int run_rsk(const std::string& window, bool trace, const std::string& format)
{
    const auto w = SignedPerm::parse(window);
    require_rank(w.rank());
    const auto [p0, q0] = rsk_classical(palindromic(w));
    std::vector<std::string> p_trace, q_trace;
    const auto p = jdt_vacate(p0, w.rank(), trace ? &p_trace : nullptr);
    const auto q = jdt_vacate(q0, w.rank(), trace ? &q_trace : nullptr);
    if (format == "json") {
        json j;
        j["window"] = w.str();
        j["shape"] = p.shape().parts();
        j["P"] = tableau_json(p);
        j["Q"] = tableau_json(q);
        if (trace) {
            j["P_trace"] = p_trace;
            j["Q_trace"] = q_trace;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "w = " << w.str() << "\n";
        std::cout << "P = " << p.str() << "\n";
        std::cout << "Q = " << q.str() << "\n";
        if (trace) {
            std::cout << "P chain:\n";
            for (const auto& s : p_trace) std::cout << "  " << s << "\n";
            std::cout << "Q chain:\n";
            for (const auto& s : q_trace) std::cout << "  " << s << "\n";
        }
    }
    return 0;
}

int run_fiber(const std::string& window, const std::string& format)
{
    const auto pi = SignedPerm::parse(window);
    require_rank(pi.rank());
    const auto elements = fiber(pi);
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& w : elements)
        rows.emplace_back(w.str(), word_factored_str(diagonal_factors(w)));
    if (format == "json") {
        auto arr = json::array();
        for (const auto& [win, word] : rows) arr.push_back({{"window", win}, {"word", word}});
        json j{{"pi", pi.str()}, {"size", rows.size()}, {"fiber", arr}};
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "window,word\n";
        for (const auto& [win, word] : rows)
            std::cout << "\"" << win << "\",\"" << word << "\"\n";
    } else {
        for (const auto& [win, word] : rows) std::cout << win << "\t" << word << "\n";
    }
    return 0;
}

int run_expand(const std::string& file, int m, const std::string& format)
{
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("--qsym-file", "cannot open " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    QSymA a;
    QSymB b;
    bool is_b = false;
    if (!qsym_from_json(buffer.str(), a, b, is_b))
        throw CLI::ValidationError("--qsym-file", "not a QSym JSON file");
    const int degree = is_b ? b.degree : a.degree;
    if (m < degree)
        throw CLI::ValidationError("--m", "truncation must satisfy m >= degree = " +
                                              std::to_string(degree));
    const auto poly = is_b ? expand(b, m) : expand(a, m);
    if (format == "json") {
        auto arr = json::array();
        for (const auto& [e, c] : poly.monomials)
            arr.push_back({{"exponents", e}, {"coeffs", c.coeffs()}});
        json j{{"m", m}, {"degree", degree}, {"monomials", arr}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << poly.str() << "\n";
    }
    return 0;
}

int run_verify(const std::string& check, int n, int workers, bool canonical,
               const std::string& format)
{
    VerifyOptions opts;
    opts.workers = workers;
    opts.canonical = canonical;
    std::vector<std::pair<std::string, int>> plan;
    auto add = [&](const CheckInfo& info) {
        if (n > 0) {
            require_rank(n);
            plan.emplace_back(info.name, n);
        } else {
            for (int r : info.default_ranks)
                if (r <= max_rank_cap()) plan.emplace_back(info.name, r);
        }
    };
    if (check == "all") {
        for (const auto& info : check_registry()) add(info);
    } else {
        const auto* info = find_check(check);
        if (!info) throw CLI::ValidationError("--check", "unknown check: " + check);
        add(*info);
    }
    bool all_pass = true;
    for (const auto& [name, rank] : plan) {
        const auto report = run_check(name, rank, opts);
        all_pass = all_pass && report.pass;
        if (format == "text") {
            std::cout << (report.pass ? "PASS" : "FAIL") << " " << name << " n=" << rank;
            if (!canonical) std::cout << " (" << report.elapsed_ms << " ms)";
            if (!report.pass && !report.counterexamples.empty())
                std::cout << " first counterexample: " << report.counterexamples.front();
            std::cout << "\n";
        } else {
            std::cout << report.json_line() << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact combinatorics of fully commutative elements in type B"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "list a set of signed permutations");
    enumerate->fallthrough();
    std::string what = "fc";
    int n = 0;
    enumerate->add_option("what", what, "which set (fc)")->required();
    enumerate->add_option("--n", n, "rank")->required();

    auto* stats = app.add_subcommand("stats", "statistics of one window");
    stats->fallthrough();
    std::string window;
    bool dot = false;
    stats->add_option("--w", window, "window, e.g. [-3,1,2]")->required();
    stats->add_flag("--dot", dot, "emit the heap cover graph in DOT format instead");

    auto* rsk = app.add_subcommand("rsk", "insertion and recording domino tableaux");
    rsk->fallthrough();
    std::string rsk_window;
    bool trace = false;
    rsk->add_option("--w", rsk_window, "window")->required();
    rsk->add_flag("--trace", trace, "print the slide chains");

    auto* fiber_cmd = app.add_subcommand("fiber", "fiber table of an unsigned FC permutation");
    fiber_cmd->fallthrough();
    std::string pi_window;
    fiber_cmd->add_option("--pi", pi_window, "unsigned window")->required();

    auto* expand_cmd = app.add_subcommand("expand", "truncated monomial expansion of a QSym file");
    expand_cmd->fallthrough();
    std::string qsym_file;
    int m = 0;
    expand_cmd->add_option("--qsym-file", qsym_file, "QSym JSON file")->required();
    expand_cmd->add_option("--m", m, "last surviving variable index")->required();

    auto* verify = app.add_subcommand("verify", "run theorem checks");
    verify->fallthrough();
    std::string check;
    int verify_n = 0;
    int workers = 0;
    bool canonical = false;
    verify->add_option("--check", check, "check name or 'all'")->required();
    verify->add_option("--n", verify_n, "rank (default: each check's standard range)");
    verify->add_option("--workers", workers, "worker threads, 1 forces sequential");
    verify->add_flag("--canonical", canonical, "byte-stable output without wall times");

    try {
        app.parse(argc, argv);
        if (*enumerate) return run_enumerate(what, n, format);
        if (*stats) return run_stats(window, dot, format);
        if (*rsk) return run_rsk(rsk_window, trace, format);
        if (*fiber_cmd) return run_fiber(pi_window, format);
        if (*expand_cmd) return run_expand(qsym_file, m, format);
        if (*verify) {
            if (format == "text") return run_verify(check, verify_n, workers, canonical, "text");
            return run_verify(check, verify_n, workers, canonical, "json");
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsageError;
}
