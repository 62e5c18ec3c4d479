#ifndef EULERPART_TESTS_ORACLE_HPP
#define EULERPART_TESTS_ORACLE_HPP

#include <vector>

#include "eulerpart/partition.hpp"

/* Test-only brute-force partition generator, independent of the
 * library's family enumerators. */
namespace oracle {

inline void gen(long long rem, long long max_part, std::vector<long long>& acc,
                std::vector<eulerpart::Partition>& out)
{
    if (rem == 0) {
        out.push_back(eulerpart::Partition::from_parts(acc));
        return;
    }
    for (long long v = std::min(rem, max_part); v >= 1; --v) {
        acc.push_back(v);
        gen(rem - v, v, acc, out);
        acc.pop_back();
    }
}

inline std::vector<eulerpart::Partition> all_partitions(long long n)
{
    std::vector<eulerpart::Partition> out;
    std::vector<long long> acc;
    gen(n, n, acc, out);
    return out;
}

} // namespace oracle

#endif
