#ifndef EULERPART_BIJECTIONS_HPP
#define EULERPART_BIJECTIONS_HPP

#include <set>

#include "eulerpart/families.hpp"
#include "eulerpart/partition.hpp"

namespace eulerpart {

/* Parameters of the insertion bijection between C_1 and C_2:
 * half-modulus N and residue set A (mod 2N). */
struct InsertionParams {
    long long half_modulus = 2;
    std::set<long long> residues{1, 2, 3};

    FamilySpec c1_family() const { return FamilySpec::c1(half_modulus, residues); }
    FamilySpec c2_family() const { return FamilySpec::c2(half_modulus, residues); }
};

/* Intermediate state of the insertion algorithm: alpha lies in
 * C_1 n C_2 and beta collects parts divisible by 2N, with
 * beta_1 <= 2N * l(alpha) whenever the source lay in C_1. */
struct ExtractionPair {
    Partition alpha;
    Partition beta;
};

/* 2-modular conjugation restricted to distinct parts; lands in A_1. */
Partition varphi(const Partition& p);
Partition varphi_inv(const Partition& a);

/* Glaisher-style map from odd-part partitions onto A_2: each odd
 * multiplicity m = 2h + s contributes h copies of the doubled part and
 * s copies of the part itself. */
Partition psi(const Partition& m);
Partition psi_inv(const Partition& b);

/* Step 1 of the insertion bijection: pull 2N-divisible material out of
 * p until what remains lies in C_1 n C_2. */
ExtractionPair bessenrodt_extract(const Partition& p, const InsertionParams& params);

/* Step 2: replay beta, largest part first, adding 2N to the first
 * beta_i/2N parts of alpha.  Lands in C_2. */
Partition bessenrodt_insert(const ExtractionPair& pair, const InsertionParams& params);

/* The full C_1 -> C_2 bijection and its inverse. */
Partition phi(const Partition& p, const InsertionParams& params);
Partition phi_inv(const Partition& g, const InsertionParams& params);

/* The composed D -> O bijection psi^-1 . phi . varphi at N=2,
 * A={1,2,3}, preserving (l_o, l_a) -> (n_o, l). */
Partition delta(const Partition& p);
Partition delta_inv(const Partition& m);

/* The intermediate images of delta, for display. */
struct DeltaTrace {
    Partition alpha;  // varphi image, in A_1
    Partition beta;   // phi image, in A_2
    Partition mu;     // final odd-part partition
};
DeltaTrace delta_trace(const Partition& p);

} // namespace eulerpart

#endif
