// Acceptance suite: one line per criterion, exact equality everywhere.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cperm/verify.hpp"

using namespace cperm;

namespace {

int failures_total = 0;

void report(int index, const std::string& name, const std::vector<CellResult>& cells) {
    int failed = 0;
    std::string first_failure;
    for (const auto& c : cells)
        if (!c.pass) {
            if (failed == 0) first_failure = c.cell + ": " + c.detail;
            ++failed;
        }
    if (failed == 0) {
        std::printf("criterion %d (%s): PASS [%zu cells]\n", index, name.c_str(),
                    cells.size());
    } else {
        std::printf("criterion %d (%s): FAIL [%d of %zu cells] first: %s\n", index,
                    name.c_str(), failed, cells.size(), first_failure.c_str());
        failures_total += failed;
    }
    std::fflush(stdout);
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();

    // 1. closed form vs exhaustive oracle over the full feasible grid
    report(1, "theorem equivalence grid r<=4, s|r, m in {1,2,3,4,6}, n<=6",
           run_theorem_suite(4, {1, 2, 3, 4, 6}, 6, 5'000'000));

    // 2. prime specialization reproduces the general EGF exactly
    report(2, "prime corollary h_egf_prime = h_egf, p in {2,3,5}, r<=6, trunc 8",
           run_prime_suite({2, 3, 5}, 6, 8));

    // 3. three-case m=2 closed form vs filtered extraction
    report(3, "m=2 closed form vs h_poly, s|r<=6, n<=6", run_m2_suite(6, 6));

    // 4. explicit m=2 corollaries vs closed form and oracle, cosh regime
    report(4, "m=2 corollaries vs closed form and oracle, r<=6, n<=6",
           run_corollaries_suite(6, 6, 40'000'000));

    // 5. d-cycles by excedance count vs Eulerian numbers
    report(5, "cyclic excedance counts = Eulerian numbers, d<=7", run_euler_suite(7));

    // 6. alternating-sum U equals direct product expansion
    report(6, "U coefficient two-route agreement r<=5, base<=5, i<=5, t<=25",
           run_ucoeff_suite(5, 5, 5, 25));

    // 7. exc = r*exc_a + csum for every element, exhaustive
    report(7, "statistic identity exc = r*exc_a + csum, r<=3, n<=4",
           run_statistic_identity_suite(3, 4));

    // 8. worked one-element anchors
    report(8, "worked example anchors", run_anchor_suite());

    // 9. exactness: all extracted polynomials have nonnegative integer
    //    coefficients across the formula grids of criteria 1-3
    report(9, "integrality of every extracted coefficient", run_integrality_suite());

    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (failures_total == 0) {
        std::printf("acceptance: all criteria passed (%.1fs)\n", secs);
        return 0;
    }
    std::printf("acceptance: %d failing cells (%.1fs)\n", failures_total, secs);
    return 1;
}
