#ifndef EULERPART_FAMILIES_HPP
#define EULERPART_FAMILIES_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eulerpart/partition.hpp"

namespace eulerpart {

enum class FamilyKind { All, Distinct, Odd, A1, A2, AO1, AO2, C1, C2, B1, B2 };

/* Declarative description of a constrained partition family.  All the
 * named families reduce to four clauses, each optional:
 *   - residue: every part must be congruent (mod `modulus`) to an
 *     element of `admissible`;
 *   - repetition: equal adjacent parts allowed only when the part's
 *     residue lies in `repeatable`;
 *   - gap: adjacent parts differ by at most `gap_bound`, strictly less
 *     when either part's residue lies in `strict`;
 *   - smallest part strictly below `smallest_bound`.
 * A zero modulus/bound disables the clause. */
class FamilySpec {
public:
    static FamilySpec all();
    static FamilySpec distinct();
    static FamilySpec odd();
    static FamilySpec a1();
    static FamilySpec a2();
    /* Andrews-Olsson families: residues A with 1 <= a_1 < ... < a_r < N. */
    static FamilySpec ao1(long long N, std::set<long long> residues);
    static FamilySpec ao2(long long N, std::set<long long> residues);
    /* C families: half_modulus N, residues A with elements < 2N. */
    static FamilySpec c1(long long half_modulus, std::set<long long> residues);
    static FamilySpec c2(long long half_modulus, std::set<long long> residues);
    /* B families: disjoint repeatable/nonrepeatable residue split mod N. */
    static FamilySpec b1(long long N, std::set<long long> repeatable,
                         std::set<long long> nonrepeatable);
    static FamilySpec b2(long long N, std::set<long long> repeatable,
                         std::set<long long> nonrepeatable);

    /* Grammar: "All" | "P" | "D" | "O" | "A1" | "A2"
     *        | "AO1:N=4,A=1,3" | "AO2:..." | "C1:N=2,A=1,2,3" | "C2:..."
     *        | "B1:N=3,Arep=1,Anon=2" | "B2:..."
     * (for C kinds N is the half-modulus; residues live mod 2N).
     * Arep or Anon may be omitted for an empty side of the split. */
    static FamilySpec parse(std::string_view text);
    std::string to_string() const;

    FamilyKind kind() const { return kind_; }
    long long modulus() const { return modulus_; }
    const std::set<long long>& residues() const { return residues_; }
    const std::set<long long>& repeatable_residues() const { return rep_residues_; }

    bool contains(const Partition& p) const;
    /* Every partition of n in the family, decreasing lex order. */
    std::vector<Partition> enumerate(long long n) const;
    long long cardinality(long long n) const;

private:
    FamilyKind kind_ = FamilyKind::All;
    long long modulus_ = 0;       // congruence modulus (2N for C kinds)
    long long half_ = 0;          // N for C kinds
    std::set<long long> residues_;
    std::set<long long> rep_residues_;  // A' for B kinds

    // derived clause data
    std::set<long long> admissible_;
    std::set<long long> repeatable_;
    std::set<long long> strict_;
    long long gap_bound_ = 0;
    long long smallest_bound_ = 0;
    bool repeat_all_ = true;

    bool part_admissible(long long v) const;
    bool part_repeatable(long long v) const;
    bool gap_ok(long long hi, long long lo) const;
    void finalize();
    void enumerate_rec(long long rem, long long prev, std::vector<long long>& acc,
                       std::vector<Partition>& out) const;
};

/* Statistic selectors for joint distributions and CLI output. */
enum class Statistic {
    Weight, Length, Largest, AltSum, OddParts, Chains, Distinct,
    OddMultParts, R2,
    FineComposite  // (largest-1)/2 + length; odd-largest partitions only
};

Statistic parse_statistic(std::string_view name);
std::string statistic_name(Statistic s);
long long evaluate_statistic(Statistic s, const StatisticsBundle& b);

/* Sorted multiset of selected-statistic tuples over enumerate(spec, n).
 * Throws if FineComposite meets a nonempty partition with even largest
 * part (the empty partition contributes 0). */
std::vector<std::vector<long long>>
joint_distribution(const FamilySpec& spec, long long n,
                   const std::vector<Statistic>& stats);

} // namespace eulerpart

#endif
