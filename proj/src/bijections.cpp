#include "eulerpart/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerpart {

namespace {

void require(bool ok, const char* msg)
{
    if (!ok)
        throw std::invalid_argument(msg);
}

bool all_distinct(const Partition& p)
{
    return std::adjacent_find(p.parts().begin(), p.parts().end()) == p.parts().end();
}

bool all_odd(const Partition& p)
{
    return std::all_of(p.parts().begin(), p.parts().end(),
                       [](long long v) { return v % 2 != 0; });
}

/* C_1 residue/repetition/difference clauses, without the smallest-part
 * bound.  Extraction is defined on this slightly larger domain (the
 * smallest-part clause is exactly what phase 1 repairs when the whole
 * partition consists of 2N-divisible parts). */
bool c1_inner_clauses(const Partition& p, const InsertionParams& params)
{
    long long N = params.half_modulus;
    long long M = 2 * N;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        long long r = parts[i] % M;
        if (r != 0 && !params.residues.count(r))
            return false;
        if (i + 1 < parts.size()) {
            long long d = parts[i] - parts[i + 1];
            if (parts[i] == parts[i + 1] && parts[i] % N != 0)
                return false;
            if (d > M)
                return false;
            if (d == M && (parts[i] % N == 0 || parts[i + 1] % N == 0))
                return false;
        }
    }
    return true;
}

} // namespace

Partition varphi(const Partition& p)
{
    require(all_distinct(p), "varphi requires distinct parts");
    return two_modular_conjugate(p);
}

Partition varphi_inv(const Partition& a)
{
    require(FamilySpec::a1().contains(a), "varphi_inv requires a member of A_1");
    return two_modular_conjugate(a);
}

Partition psi(const Partition& m)
{
    require(all_odd(m), "psi requires odd parts");
    MultiplicityView out;
    for (auto [v, mult] : multiplicity_view(m)) {
        long long h = mult / 2, s = mult % 2;
        if (s)
            out[v] += s;
        if (h)
            out[2 * v] += h;
    }
    return from_multiplicities(out);
}

Partition psi_inv(const Partition& b)
{
    require(FamilySpec::a2().contains(b), "psi_inv requires a member of A_2");
    MultiplicityView out;
    for (auto [v, mult] : multiplicity_view(b)) {
        if (v % 2 != 0)
            out[v] += mult;
        else
            out[v / 2] += 2 * mult;  // v == 2 (mod 4), so v/2 is odd
    }
    return from_multiplicities(out);
}

ExtractionPair bessenrodt_extract(const Partition& p, const InsertionParams& params)
{
    require(c1_inner_clauses(p, params), "extraction input violates C_1 clauses");
    long long M = 2 * params.half_modulus;
    std::vector<long long> alpha = p.parts();
    std::vector<long long> beta;

    // Phase 1: remove 2N-divisible parts whose removal keeps the
    // difference condition, largest value first, to a fixpoint.
    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (alpha[j] % M != 0)
                continue;
            // smallest part strictly bigger than alpha[j], skipping
            // equal copies to its left
            std::size_t k = j;
            while (k > 0 && alpha[k - 1] == alpha[j])
                --k;
            bool ok;
            if (k == 0) {
                ok = true;  // lambda_t does not exist
            } else if (j + 1 == alpha.size()) {
                ok = true;  // no successor; removal leaves a valid tail
            } else {
                long long t = alpha[k - 1];
                long long next = alpha[j + 1];
                long long d = t - next;
                ok = d <= M && !(d == M && (t % params.half_modulus == 0 ||
                                            next % params.half_modulus == 0));
            }
            if (ok) {
                beta.push_back(alpha[j]);
                alpha.erase(alpha.begin() + static_cast<std::ptrdiff_t>(j));
                removed = true;
                break;
            }
        }
    }

    // Phase 2: drain remaining 2N-divisible parts, largest first.
    for (;;) {
        std::size_t i = alpha.size();
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            if (alpha[k] % M == 0) {
                i = k;  // leftmost occurrence of the largest such value
                break;
            }
        }
        if (i == alpha.size())
            break;
        long long val = alpha[i];
        for (std::size_t k = 0; k < i; ++k)
            alpha[k] -= M;
        alpha.erase(alpha.begin() + static_cast<std::ptrdiff_t>(i));
        std::sort(alpha.begin(), alpha.end(), std::greater<>());
        beta.push_back(static_cast<long long>(i) * M + val);
    }

    return ExtractionPair{Partition::from_parts(std::move(alpha)),
                          Partition::from_parts(std::move(beta))};
}

Partition bessenrodt_insert(const ExtractionPair& pair, const InsertionParams& params)
{
    long long M = 2 * params.half_modulus;
    require(pair.alpha.empty() ||
                (params.c1_family().contains(pair.alpha) &&
                 params.c2_family().contains(pair.alpha)),
            "insertion alpha must lie in C_1 and C_2");
    for (long long v : pair.beta.parts())
        require(v % M == 0, "insertion beta parts must be divisible by 2N");
    require(pair.beta.largest() <= M * static_cast<long long>(pair.alpha.length()),
            "insertion requires beta_1 <= 2N * l(alpha)");

    std::vector<long long> alpha = pair.alpha.parts();
    for (long long b : pair.beta.parts()) {  // nonincreasing order
        long long k = b / M;
        for (long long i = 0; i < k; ++i)
            alpha[static_cast<std::size_t>(i)] += M;
    }
    return Partition::from_parts(std::move(alpha));
}

Partition phi(const Partition& p, const InsertionParams& params)
{
    require(params.c1_family().contains(p), "phi requires a member of C_1");
    return bessenrodt_insert(bessenrodt_extract(p, params), params);
}

Partition phi_inv(const Partition& g, const InsertionParams& params)
{
    require(params.c2_family().contains(g), "phi_inv requires a member of C_2");
    long long N = params.half_modulus;
    long long M = 2 * N;
    std::vector<long long> alpha = g.parts();
    std::vector<long long> beta;

    // Step 1: peel multiples of 2N off prefixes, bottom part upward.
    for (std::size_t t = alpha.size(); t >= 1; --t) {
        long long a_t = alpha[t - 1];
        long long a_next = t < alpha.size() ? alpha[t] : 0;
        long long diff = a_t - a_next;
        long long i;
        if (a_t % N == 0) {
            i = diff / M;  // remainder in [0, 2N)
        } else {
            require(diff > 0, "C_2 repetition clause violated");
            i = (diff - 1) / M;  // remainder in (0, 2N]
        }
        if (i > 0) {
            for (std::size_t k = 0; k < t; ++k)
                alpha[k] -= i * M;
            std::sort(alpha.begin(), alpha.end(), std::greater<>());
            for (long long k = 0; k < i; ++k)
                beta.push_back(static_cast<long long>(t) * M);
        }
    }
    std::sort(beta.begin(), beta.end(), std::greater<>());

    // Step 2: reinsert beta, largest part first.
    std::size_t pos = 0;
    while (pos < beta.size() &&
           beta[pos] > (alpha.empty() ? 0 : alpha[0]) + M - 1) {
        long long bt = beta[pos];
        long long best = 0;
        for (std::size_t i = 1; i <= alpha.size(); ++i)
            if (bt - static_cast<long long>(i) * M >= alpha[i - 1])
                best = static_cast<long long>(i);
        require(best >= 1, "insertion step found no valid prefix");
        for (long long k = 0; k < best; ++k)
            alpha[static_cast<std::size_t>(k)] += M;
        alpha.push_back(bt - best * M);
        std::sort(alpha.begin(), alpha.end(), std::greater<>());
        ++pos;
    }
    for (; pos < beta.size(); ++pos)
        alpha.push_back(beta[pos]);
    return Partition::from_parts(std::move(alpha));
}

DeltaTrace delta_trace(const Partition& p)
{
    InsertionParams params;  // N=2, A={1,2,3}
    DeltaTrace t;
    t.alpha = varphi(p);
    t.beta = phi(t.alpha, params);
    t.mu = psi_inv(t.beta);
    return t;
}

Partition delta(const Partition& p)
{
    return delta_trace(p).mu;
}

Partition delta_inv(const Partition& m)
{
    InsertionParams params;
    return varphi_inv(phi_inv(psi(m), params));
}

} // namespace eulerpart
