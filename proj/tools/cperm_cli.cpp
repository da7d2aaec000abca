// Command-line front end: polynomial tables, corollary counts and
// verification grids for the colored-permutation distributions.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cperm/formulas.hpp"
#include "cperm/oracle.hpp"
#include "cperm/output.hpp"
#include "cperm/verify.hpp"

namespace {

using namespace cperm;

struct PolyArgs {
    int r = 1, s = 1, m = 1, n = 0;
    int trunc = -1;
    long long cap = 5'000'000;
    std::string method = "theorem";
    std::string format = "text";
    std::string out_path;
};

int run_poly(const PolyArgs& a) {
    GroupSpec spec(a.r, a.s, a.n, a.m);
    const int trunc = a.trunc >= 0 ? std::max(a.trunc, a.n) : std::max(a.n, 8);
    MPoly poly;
    if (a.method == "oracle") {
        poly = brute_h(spec, a.cap);
    } else if (a.method == "theorem") {
        poly = h_poly(a.r, a.s, a.m, a.n, trunc);
    } else if (a.method == "recurrence") {
        poly = h_recurrence(a.r, a.m, a.n).filtered_w_mod(a.s);
    } else { // closed-m2
        if (a.m != 2)
            throw std::invalid_argument("method closed-m2 requires --m 2");
        poly = h2_closed(a.r, a.s, trunc).extract(a.n);
    }
    OutputRecord rec = OutputRecord::from_poly(spec, a.method, poly);
    std::string payload;
    if (a.format == "text") payload = rec.to_text();
    else if (a.format == "json") payload = rec.to_json();
    else payload = rec.to_csv();
    std::cout << payload;
    if (!a.out_path.empty()) {
        std::ofstream out(a.out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open " + a.out_path);
        out << payload;
    }
    return 0;
}

struct CountArgs {
    int r = 2, s = 2, n = 0;
    long long cap = 5'000'000;
    int excclr = -1;
    int fix = -1;
    int exca = -1;
    bool has_excclr = false, has_fix = false, has_exca = false;
};

int run_count(const CountArgs& a) {
    if (a.has_excclr == (a.has_fix || a.has_exca))
        throw std::invalid_argument("pick one counter: --excclr K, or --fix K --exca L");
    if (!a.has_excclr && !(a.has_fix && a.has_exca))
        throw std::invalid_argument("--fix and --exca go together");

    BigInt formula = a.has_excclr ? count_excclr(a.r, a.s, a.n, a.excclr)
                                  : count_fix_exca(a.r, a.s, a.n, a.fix, a.exca);
    std::cout << "formula " << formula.str();

    if (group_size(a.r, a.n) <= a.cap) {
        EnumerationPlan plan(GroupSpec(a.r, a.s, a.n, 2), a.cap);
        long long oracle =
            a.has_excclr
                ? brute_count(plan, [&](const StatTriple&, int clr) { return clr == a.excclr; })
                : brute_count(plan, [&](const StatTriple& st, int) {
                      return st.fix == a.fix && st.exc_a == a.exca;
                  });
        std::cout << ", oracle " << oracle << "\n";
        if (BigInt(oracle) != formula) {
            std::cerr << "mismatch between formula and oracle\n";
            return 1;
        }
    } else {
        std::cout << ", oracle skipped (|G_{r,n}| = " << group_size(a.r, a.n).str()
                  << " exceeds cap " << a.cap << ")\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    int rmax = -1, nmax = -1, dmax = -1;
    int basemax = -1, imax = -1, tmax = -1;
    long long cap = -1;
    std::vector<int> mset;
};

int run_verify(const VerifyArgs& a) {
    std::vector<CellResult> cells;
    auto add = [&cells](std::vector<CellResult> batch) {
        cells.insert(cells.end(), std::make_move_iterator(batch.begin()),
                     std::make_move_iterator(batch.end()));
    };
    const bool all = a.suite == "all";
    if (all || a.suite == "group")
        add(run_group_suite(a.rmax < 0 ? 4 : a.rmax, a.nmax < 0 ? 5 : a.nmax));
    if (all || a.suite == "euler") add(run_euler_suite(a.dmax < 0 ? 7 : a.dmax));
    if (all || a.suite == "ucoeff")
        add(run_ucoeff_suite(a.rmax < 0 ? 5 : a.rmax, a.basemax < 0 ? 5 : a.basemax,
                             a.imax < 0 ? 5 : a.imax, a.tmax < 0 ? 25 : a.tmax));
    if (all || a.suite == "theorem") {
        std::vector<int> mset = a.mset.empty() ? std::vector<int>{1, 2, 3, 4, 6} : a.mset;
        add(run_theorem_suite(a.rmax < 0 ? 4 : a.rmax, mset, a.nmax < 0 ? 6 : a.nmax,
                              a.cap < 0 ? 5'000'000 : a.cap));
        add(run_prime_suite());
        std::vector<int> rec_mset;
        for (int m : mset)
            if (m >= 2) rec_mset.push_back(m);
        if (!rec_mset.empty())
            add(run_recurrence_suite(std::min(a.rmax < 0 ? 4 : a.rmax, 4), rec_mset, 7));
    }
    if (all || a.suite == "m2")
        add(run_m2_suite(a.rmax < 0 ? 6 : a.rmax, a.nmax < 0 ? 6 : a.nmax));
    if (all || a.suite == "corollaries")
        add(run_corollaries_suite(a.rmax < 0 ? 6 : a.rmax, a.nmax < 0 ? 6 : a.nmax,
                                  a.cap < 0 ? 40'000'000 : a.cap));
    if (all) add(run_integrality_suite());

    int failures = 0;
    for (const auto& cell : cells) {
        if (cell.pass) {
            std::cout << "PASS " << cell.cell << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << cell.cell << ": " << cell.detail << "\n";
        }
    }
    std::cout << cells.size() - failures << "/" << cells.size() << " cells passed\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"colored permutation groups: statistics, generating functions, certification"};
    app.require_subcommand(1);

    PolyArgs pa;
    CLI::App* poly = app.add_subcommand(
        "poly", "print the distribution polynomial of (fix, exc_a, csum)");
    poly->add_option("--r", pa.r, "number of colors")->required()->check(CLI::PositiveNumber);
    poly->add_option("--s", pa.s, "subgroup index divisor, s | r")->check(CLI::PositiveNumber);
    poly->add_option("--m", pa.m, "order condition sigma^m = 1")->check(CLI::PositiveNumber);
    poly->add_option("--n", pa.n, "number of digits")->check(CLI::NonNegativeNumber);
    poly->add_option("--method", pa.method, "derivation route")
        ->check(CLI::IsMember({"oracle", "theorem", "recurrence", "closed-m2"}));
    poly->add_option("--format", pa.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    poly->add_option("--trunc", pa.trunc, "series truncation (default max(n, 8))");
    poly->add_option("--cap", pa.cap, "oracle enumeration cap");
    poly->add_option("--out", pa.out_path, "also write the output to a file");

    CountArgs ca;
    CLI::App* count = app.add_subcommand(
        "count", "involution counts from the explicit m = 2 formulas, with oracle");
    count->add_option("--r", ca.r)->required()->check(CLI::PositiveNumber);
    count->add_option("--s", ca.s)->required()->check(CLI::PositiveNumber);
    count->add_option("--n", ca.n)->check(CLI::NonNegativeNumber);
    count->add_option("--cap", ca.cap);
    CLI::Option* oexc = count->add_option("--excclr", ca.excclr, "count by colored excedance");
    CLI::Option* ofix = count->add_option("--fix", ca.fix, "count by absolute fixed points");
    CLI::Option* oexca = count->add_option("--exca", ca.exca, "... and by exc_a");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run a certification grid");
    verify->add_option("--suite", va.suite, "which grid")
        ->required()
        ->check(CLI::IsMember({"group", "euler", "ucoeff", "theorem", "m2",
                               "corollaries", "all"}));
    verify->add_option("--rmax", va.rmax);
    verify->add_option("--nmax", va.nmax);
    verify->add_option("--dmax", va.dmax);
    verify->add_option("--basemax", va.basemax);
    verify->add_option("--imax", va.imax);
    verify->add_option("--tmax", va.tmax);
    verify->add_option("--cap", va.cap);
    verify->add_option("--mset", va.mset, "m values for the theorem grid")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (poly->parsed()) return run_poly(pa);
        if (count->parsed()) {
            ca.has_excclr = oexc->count() > 0;
            ca.has_fix = ofix->count() > 0;
            ca.has_exca = oexca->count() > 0;
            return run_count(ca);
        }
        return run_verify(va);
    } catch (const EnumerationCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
