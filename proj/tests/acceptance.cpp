// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "eulerpart/bijections.hpp"
#include "eulerpart/verify.hpp"

using namespace eulerpart;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, double seconds,
            const std::string& detail = "")
{
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                number, name.c_str(), seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok)
        ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& name, Fn&& fn)
{
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report(number, name, ok, seconds, detail);
}

bool run_checks(const std::vector<CheckResult>& results, std::string& detail)
{
    for (const CheckResult& r : results) {
        if (!r.ok) {
            detail = r.name + ": " + r.witness;
            return false;
        }
    }
    return true;
}

Partition P(std::initializer_list<long long> parts)
{
    return Partition::from_parts(parts);
}

} // namespace

int main()
{
    criterion(1, "table for n=7 matches the published statistics",
              [](std::string& detail) {
                  auto d7 = FamilySpec::distinct().enumerate(7);
                  const std::vector<std::pair<long long, long long>> expected = {
                      {1, 7}, {1, 5}, {1, 3}, {1, 1}, {1, 3}};
                  if (d7.size() != 5) {
                      detail = "expected 5 rows, got " + std::to_string(d7.size());
                      return false;
                  }
                  for (std::size_t i = 0; i < d7.size(); ++i) {
                      StatisticsBundle sl = statistics(d7[i]);
                      Partition mu = delta(d7[i]);
                      StatisticsBundle sm = statistics(mu);
                      if (sl.odd_parts != expected[i].first ||
                          sl.alt_sum != expected[i].second ||
                          sm.odd_mult_parts != expected[i].first ||
                          sm.length != expected[i].second) {
                          detail = "row " + std::to_string(i + 1) + " (" +
                                   format_partition(d7[i]) + ") mismatch";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(2, "worked example at weight 71 with intermediates",
              [](std::string& detail) {
                  DeltaTrace t = delta_trace(P({17, 16, 14, 10, 7, 4, 2, 1}));
                  StatisticsBundle sl =
                      statistics(P({17, 16, 14, 10, 7, 4, 2, 1}));
                  StatisticsBundle sm = statistics(t.mu);
                  bool ok = t.alpha == P({15, 12, 10, 9, 8, 6, 6, 4, 1}) &&
                            t.beta == P({19, 18, 13, 10, 6, 5}) &&
                            t.mu == P({19, 13, 9, 9, 5, 5, 5, 3, 3}) &&
                            sl.odd_parts == 3 && sl.alt_sum == 9 &&
                            sm.odd_mult_parts == 3 && sm.length == 9;
                  if (!ok)
                      detail = "got alpha=" + format_partition(t.alpha) +
                               " beta=" + format_partition(t.beta) +
                               " mu=" + format_partition(t.mu);
                  return ok;
              });

    criterion(3, "Glaisher-style map example and round trip",
              [](std::string& detail) {
                  Partition mu = P({15, 9, 7, 7, 3, 1});
                  Partition beta = psi(mu);
                  bool ok = beta == P({15, 14, 9, 3, 1}) && psi_inv(beta) == mu;
                  if (!ok)
                      detail = "psi image " + format_partition(beta);
                  return ok;
              });

    criterion(4, "delta is a statistic-preserving bijection D(n) -> O(n), n <= 26",
              [](std::string& detail) {
                  return run_checks({verify_bijections(26, 0)[0]}, detail);
              });

    criterion(5, "insertion bijection sweep (N <= 3, all residue sets, n <= 20)"
                 " with statistic preservation at N=2",
              [](std::string& detail) {
                  auto all = verify_bijections(26, 20);
                  // phi statistics at N=2 (index 3), parameter sweep (4),
                  // extraction invariant (5)
                  return run_checks({all[3], all[4], all[5]}, detail);
              });

    criterion(6, "cardinality equalities for the counting theorems, n <= 26",
              [](std::string& detail) {
                  return run_checks(verify_counting(26, 20), detail);
              });

    criterion(7, "series identities at their default truncations",
              [](std::string& detail) {
                  return run_checks(verify_series(30), detail);
              });

    criterion(8, "refinement equidistributions by counting, n <= 26",
              [](std::string& detail) {
                  return run_checks(verify_refinements(26), detail);
              });

    if (failures == 0)
        std::printf("all %d acceptance criteria passed\n", 8);
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
