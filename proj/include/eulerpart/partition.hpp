#ifndef EULERPART_PARTITION_HPP
#define EULERPART_PARTITION_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace eulerpart {

/* An integer partition stored as its canonical nonincreasing part
 * sequence.  The empty sequence is the unique partition of 0.
 * Immutable after construction. */
class Partition {
public:
    Partition() = default;

    /* Canonicalizes (sorts nonincreasing) and validates.  Throws
     * std::invalid_argument on nonpositive entries or weight overflow. */
    static Partition from_parts(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    long long weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    long long largest() const { return parts_.empty() ? 0 : parts_.front(); }
    long long smallest() const { return parts_.empty() ? 0 : parts_.back(); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;
    /* Decreasing lexicographic order on part sequences. */
    bool operator<(const Partition& o) const { return parts_ > o.parts_; }

private:
    std::vector<long long> parts_;
    long long weight_ = 0;
};

/* Read-only multiplicity projection: part value -> multiplicity. */
using MultiplicityView = std::map<long long, long long>;

MultiplicityView multiplicity_view(const Partition& p);
Partition from_multiplicities(const MultiplicityView& m);

/* All per-partition statistics used by the theorems. */
struct StatisticsBundle {
    long long weight = 0;
    long long length = 0;          // l
    long long largest = 0;         // lambda_1
    long long alt_sum = 0;         // l_a = lambda_1 - lambda_2 + ...
    long long odd_parts = 0;       // l_o
    long long chains = 0;          // n_c
    long long distinct = 0;        // n_d
    long long odd_mult_parts = 0;  // n_o
    long long r2 = 0;              // parts == 2 (mod 4)
    std::array<long long, 4> boulet_exponents{0, 0, 0, 0};
};

/* lambda'_i = #{j : lambda_j >= i}. */
Partition conjugate(const Partition& p);

/* Conjugate of the 2-modular diagram: row i holds ceil(lambda_i/2)
 * cells valued 2, the last cell 1 when lambda_i is odd; the output is
 * the sequence of column sums. */
Partition two_modular_conjugate(const Partition& p);

StatisticsBundle statistics(const Partition& p);

/* (sum ceil(l_{2i-1}/2), sum floor(l_{2i-1}/2),
 *  sum ceil(l_{2i}/2),   sum floor(l_{2i}/2)) */
std::array<long long, 4> boulet_weight_exponents(const Partition& p);

/* Text format: comma-separated parts with optional caret multiplicities,
 * e.g. "17,16,14,10,7,4,2,1" or "3^2,5^3,9^2,13,19".  Whitespace is
 * ignored; the empty string parses to the empty partition. */
Partition parse_partition(std::string_view text);

/* Canonical display form: nonincreasing comma-separated parts, "" for
 * the empty partition. */
std::string format_partition(const Partition& p);

} // namespace eulerpart

#endif
