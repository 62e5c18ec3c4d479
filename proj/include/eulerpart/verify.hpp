#ifndef EULERPART_VERIFY_HPP
#define EULERPART_VERIFY_HPP

#include <string>
#include <vector>

#include "eulerpart/bijections.hpp"
#include "eulerpart/identities.hpp"

namespace eulerpart {

struct CheckResult {
    std::string name;
    bool ok = true;
    long long checks = 0;       // number of elementary comparisons made
    std::string witness;        // first failure, empty when ok
};

/* Exhaustive verification of the bijections:
 * - delta: D(n) -> O(n) bijective, weight and statistic preserving,
 *   two-sided round trips, for n <= max_n;
 * - varphi, psi and their statistic laws;
 * - phi over every (N in {1,2,3}, nonempty A in {1..2N-1}) with
 *   n <= sweep_n, including the statistic preservation at N=2,
 *   A={1,2,3}. */
std::vector<CheckResult> verify_bijections(long long max_n, long long sweep_n = 20);

/* Cardinality equalities by enumeration: AO_1 vs AO_2 and B_1 vs B_2
 * for N in {2..5} over all residue sets and splits with n <= max_n;
 * C_1 vs C_2 for N in {1,2,3} with n <= sweep_n; and the C(N=2,
 * A={1,2,3}) = A_1/A_2 specialization. */
std::vector<CheckResult> verify_counting(long long max_n, long long sweep_n = 20);

/* Joint equidistributions by counting for each refinement theorem,
 * n <= max_n. */
std::vector<CheckResult> verify_refinements(long long max_n);

/* Every catalog identity to grade min(order, default). */
std::vector<CheckResult> verify_series(long long order);

std::vector<CheckResult> verify_suite(const std::string& suite,
                                      long long max_n, long long order);

} // namespace eulerpart

#endif
