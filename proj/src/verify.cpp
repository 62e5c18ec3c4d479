#include "eulerpart/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eulerpart {

namespace {

void fail(CheckResult& r, const std::string& witness)
{
    if (r.ok) {
        r.ok = false;
        r.witness = witness;
    }
}

std::string pdesc(const Partition& p)
{
    return p.empty() ? "(empty)" : format_partition(p);
}

/* Checks that `map` carries `domain` bijectively onto `codomain`,
 * preserving weight, with `inv` as a two-sided inverse. */
template <typename Map, typename Inv>
void check_bijection(CheckResult& r, const std::vector<Partition>& domain,
                     const std::vector<Partition>& codomain,
                     const FamilySpec& target, Map&& map, Inv&& inv,
                     const std::string& context)
{
    std::set<Partition> images;
    for (const Partition& p : domain) {
        Partition q = map(p);
        ++r.checks;
        if (q.weight() != p.weight()) {
            fail(r, context + ": weight changed at " + pdesc(p));
            return;
        }
        if (!target.contains(q)) {
            fail(r, context + ": image " + pdesc(q) + " of " + pdesc(p) +
                        " outside target family");
            return;
        }
        if (!images.insert(q).second) {
            fail(r, context + ": not injective at " + pdesc(p));
            return;
        }
        Partition back = inv(q);
        if (back != p) {
            fail(r, context + ": round trip failed at " + pdesc(p) + " -> " +
                        pdesc(q) + " -> " + pdesc(back));
            return;
        }
    }
    if (images.size() != codomain.size())
        fail(r, context + ": image size " + std::to_string(images.size()) +
                    " != codomain size " + std::to_string(codomain.size()));
}

std::vector<std::set<long long>> nonempty_subsets(long long bound)
{
    std::vector<std::set<long long>> out;
    long long total = 1LL << (bound - 1);
    for (long long mask = 1; mask < total; ++mask) {
        std::set<long long> s;
        for (long long a = 1; a < bound; ++a)
            if (mask & (1LL << (a - 1)))
                s.insert(a);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::vector<CheckResult> verify_bijections(long long max_n, long long sweep_n)
{
    std::vector<CheckResult> out;
    const FamilySpec D = FamilySpec::distinct();
    const FamilySpec O = FamilySpec::odd();
    const FamilySpec A1 = FamilySpec::a1();
    const FamilySpec A2 = FamilySpec::a2();
    InsertionParams a_params;  // N=2, A={1,2,3}

    {
        CheckResult r{"delta: D(n) -> O(n) bijection with statistics, n <= " +
                      std::to_string(max_n)};
        for (long long n = 0; n <= max_n && r.ok; ++n) {
            auto dn = D.enumerate(n);
            auto on = O.enumerate(n);
            check_bijection(r, dn, on, O,
                            [](const Partition& p) { return delta(p); },
                            [](const Partition& q) { return delta_inv(q); },
                            "delta n=" + std::to_string(n));
            for (const Partition& p : dn) {
                StatisticsBundle sp = statistics(p);
                StatisticsBundle sq = statistics(delta(p));
                ++r.checks;
                if (sp.odd_parts != sq.odd_mult_parts || sp.alt_sum != sq.length) {
                    fail(r, "delta statistics mismatch at " + pdesc(p));
                    break;
                }
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"varphi: D(n) -> A_1(n) with statistic laws, n <= " +
                      std::to_string(max_n)};
        for (long long n = 0; n <= max_n && r.ok; ++n) {
            auto dn = D.enumerate(n);
            check_bijection(r, dn, A1.enumerate(n), A1,
                            [](const Partition& p) { return varphi(p); },
                            [](const Partition& q) { return varphi_inv(q); },
                            "varphi n=" + std::to_string(n));
            for (const Partition& p : dn) {
                StatisticsBundle sp = statistics(p);
                StatisticsBundle sa = statistics(varphi(p));
                ++r.checks;
                if (sp.odd_parts != sa.odd_parts ||
                    sp.alt_sum != 2 * sa.r2 + sa.odd_parts) {
                    fail(r, "varphi statistics mismatch at " + pdesc(p));
                    break;
                }
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"psi: O(n) -> A_2(n) with statistic laws, n <= " +
                      std::to_string(max_n)};
        for (long long n = 0; n <= max_n && r.ok; ++n) {
            auto on = O.enumerate(n);
            check_bijection(r, on, A2.enumerate(n), A2,
                            [](const Partition& p) { return psi(p); },
                            [](const Partition& q) { return psi_inv(q); },
                            "psi n=" + std::to_string(n));
            for (const Partition& m : on) {
                StatisticsBundle sm = statistics(m);
                StatisticsBundle sb = statistics(psi(m));
                ++r.checks;
                if (sm.odd_mult_parts != sb.odd_parts ||
                    sm.length != 2 * sb.r2 + sb.odd_parts) {
                    fail(r, "psi statistics mismatch at " + pdesc(m));
                    break;
                }
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"phi: A_1(n) -> A_2(n) preserving l_o and r_2, n <= " +
                      std::to_string(max_n)};
        for (long long n = 0; n <= max_n && r.ok; ++n) {
            auto a1n = A1.enumerate(n);
            check_bijection(r, a1n, A2.enumerate(n), A2,
                            [&](const Partition& p) { return phi(p, a_params); },
                            [&](const Partition& q) { return phi_inv(q, a_params); },
                            "phi n=" + std::to_string(n));
            for (const Partition& a : a1n) {
                StatisticsBundle sa = statistics(a);
                StatisticsBundle sb = statistics(phi(a, a_params));
                ++r.checks;
                if (sa.odd_parts != sb.odd_parts || sa.r2 != sb.r2) {
                    fail(r, "phi statistics mismatch at " + pdesc(a));
                    break;
                }
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"phi sweep: C_1 -> C_2 bijective for N in {1,2,3}, all A, n <= " +
                      std::to_string(sweep_n)};
        for (long long N = 1; N <= 3 && r.ok; ++N) {
            for (const auto& A : nonempty_subsets(2 * N)) {
                InsertionParams params{N, A};
                FamilySpec c1 = params.c1_family();
                FamilySpec c2 = params.c2_family();
                for (long long n = 0; n <= sweep_n && r.ok; ++n) {
                    check_bijection(
                        r, c1.enumerate(n), c2.enumerate(n), c2,
                        [&](const Partition& p) { return phi(p, params); },
                        [&](const Partition& q) { return phi_inv(q, params); },
                        "phi " + c1.to_string() + " n=" + std::to_string(n));
                }
                if (!r.ok)
                    break;
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"extraction invariant: alpha in C_1 n C_2, beta_1 <= 2N l(alpha)"};
        for (long long N = 1; N <= 3 && r.ok; ++N) {
            for (const auto& A : nonempty_subsets(2 * N)) {
                InsertionParams params{N, A};
                FamilySpec c1 = params.c1_family();
                FamilySpec c2 = params.c2_family();
                for (long long n = 0; n <= sweep_n && r.ok; ++n) {
                    for (const Partition& p : c1.enumerate(n)) {
                        auto pair = bessenrodt_extract(p, params);
                        ++r.checks;
                        if (!c1.contains(pair.alpha) || !c2.contains(pair.alpha) ||
                            pair.beta.largest() >
                                2 * N * static_cast<long long>(pair.alpha.length()) ||
                            pair.alpha.weight() + pair.beta.weight() != p.weight()) {
                            fail(r, "extraction invariant broken at " + pdesc(p) +
                                        " under " + c1.to_string());
                            break;
                        }
                    }
                }
                if (!r.ok)
                    break;
            }
        }
        out.push_back(std::move(r));
    }

    return out;
}

std::vector<CheckResult> verify_counting(long long max_n, long long sweep_n)
{
    std::vector<CheckResult> out;

    {
        CheckResult r{"Andrews-Olsson: |AO_1| = |AO_2| for N in {2..5}, n <= " +
                      std::to_string(max_n)};
        for (long long N = 2; N <= 5 && r.ok; ++N) {
            for (const auto& A : nonempty_subsets(N)) {
                FamilySpec f1 = FamilySpec::ao1(N, A);
                FamilySpec f2 = FamilySpec::ao2(N, A);
                for (long long n = 0; n <= max_n; ++n) {
                    ++r.checks;
                    if (f1.cardinality(n) != f2.cardinality(n)) {
                        fail(r, f1.to_string() + " vs AO2 at n=" + std::to_string(n));
                        break;
                    }
                }
                if (!r.ok)
                    break;
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"generalized insertion counting: |B_1| = |B_2| for N in {2..5}, n <= " +
                      std::to_string(max_n)};
        for (long long N = 2; N <= 5 && r.ok; ++N) {
            for (const auto& A : nonempty_subsets(N)) {
                // every disjoint split A = A' u A''
                std::vector<long long> elems(A.begin(), A.end());
                long long splits = 1LL << elems.size();
                for (long long mask = 0; mask < splits && r.ok; ++mask) {
                    std::set<long long> rep, non;
                    for (std::size_t i = 0; i < elems.size(); ++i)
                        (mask & (1LL << i) ? rep : non).insert(elems[i]);
                    FamilySpec f1 = FamilySpec::b1(N, rep, non);
                    FamilySpec f2 = FamilySpec::b2(N, rep, non);
                    for (long long n = 0; n <= max_n; ++n) {
                        ++r.checks;
                        if (f1.cardinality(n) != f2.cardinality(n)) {
                            fail(r, f1.to_string() + " vs B2 at n=" + std::to_string(n));
                            break;
                        }
                    }
                }
                if (!r.ok)
                    break;
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"|C_1| = |C_2| for N in {1,2,3}, all A, n <= " +
                      std::to_string(sweep_n)};
        for (long long N = 1; N <= 3 && r.ok; ++N) {
            for (const auto& A : nonempty_subsets(2 * N)) {
                FamilySpec f1 = FamilySpec::c1(N, A);
                FamilySpec f2 = FamilySpec::c2(N, A);
                for (long long n = 0; n <= sweep_n; ++n) {
                    ++r.checks;
                    if (f1.cardinality(n) != f2.cardinality(n)) {
                        fail(r, f1.to_string() + " vs C2 at n=" + std::to_string(n));
                        break;
                    }
                }
                if (!r.ok)
                    break;
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"specialization: C(N=2, A={1,2,3}) matches A_1/A_2, weights <= " +
                      std::to_string(max_n)};
        FamilySpec c1 = FamilySpec::c1(2, {1, 2, 3});
        FamilySpec c2 = FamilySpec::c2(2, {1, 2, 3});
        FamilySpec a1 = FamilySpec::a1();
        FamilySpec a2 = FamilySpec::a2();
        for (long long n = 0; n <= max_n && r.ok; ++n) {
            for (const Partition& p : FamilySpec::all().enumerate(n)) {
                ++r.checks;
                if (c1.contains(p) != a1.contains(p) ||
                    c2.contains(p) != a2.contains(p)) {
                    fail(r, "membership disagreement at " + pdesc(p));
                    break;
                }
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"Euler: |D(n)| = |O(n)|, n <= 40"};
        FamilySpec D = FamilySpec::distinct(), O = FamilySpec::odd();
        for (long long n = 0; n <= 40; ++n) {
            ++r.checks;
            if (D.cardinality(n) != O.cardinality(n)) {
                fail(r, "n=" + std::to_string(n));
                break;
            }
        }
        out.push_back(std::move(r));
    }

    return out;
}

std::vector<CheckResult> verify_refinements(long long max_n)
{
    struct Case {
        std::string name;
        std::vector<Statistic> dstats;
        std::vector<Statistic> ostats;
    };
    const std::vector<Case> cases = {
        {"chains over D = distinct over O",
         {Statistic::Chains}, {Statistic::Distinct}},
        {"largest over D = (largest-1)/2+length over O",
         {Statistic::Largest}, {Statistic::FineComposite}},
        {"alt sum over D = length over O",
         {Statistic::AltSum}, {Statistic::Length}},
        {"(largest, alt sum, chains) over D = (fine, length, distinct) over O",
         {Statistic::Largest, Statistic::AltSum, Statistic::Chains},
         {Statistic::FineComposite, Statistic::Length, Statistic::Distinct}},
        {"odd parts over D = odd-mult parts over O",
         {Statistic::OddParts}, {Statistic::OddMultParts}},
        {"(odd parts, alt sum) over D = (odd-mult parts, length) over O",
         {Statistic::OddParts, Statistic::AltSum},
         {Statistic::OddMultParts, Statistic::Length}},
    };

    FamilySpec D = FamilySpec::distinct(), O = FamilySpec::odd();
    std::vector<CheckResult> out;
    for (const Case& c : cases) {
        CheckResult r{c.name + ", n <= " + std::to_string(max_n)};
        for (long long n = 0; n <= max_n; ++n) {
            ++r.checks;
            if (joint_distribution(D, n, c.dstats) !=
                joint_distribution(O, n, c.ostats)) {
                fail(r, "multiset mismatch at n=" + std::to_string(n));
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> verify_series(long long order)
{
    std::vector<CheckResult> out;
    for (const Identity& ident : identity_catalog()) {
        long long Q = std::min(order, ident.default_order);
        CheckResult r{ident.id + " (" + ident.description + "), grade <= " +
                      std::to_string(Q)};
        SeriesDiff d = series_compare(ident.lhs(Q), ident.rhs(Q));
        r.checks = Q + 1;
        if (!d.equal)
            fail(r, d.describe());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> verify_suite(const std::string& suite,
                                      long long max_n, long long order)
{
    if (suite == "bijections")
        return verify_bijections(max_n, std::min<long long>(max_n, 20));
    if (suite == "counting")
        return verify_counting(max_n, std::min<long long>(max_n, 20));
    if (suite == "refinements")
        return verify_refinements(max_n);
    if (suite == "series")
        return verify_series(order);
    if (suite == "all") {
        std::vector<CheckResult> out = verify_bijections(max_n, std::min<long long>(max_n, 20));
        for (auto&& suite_fn : {verify_counting(max_n, std::min<long long>(max_n, 20)),
                                verify_refinements(max_n), verify_series(order)})
            out.insert(out.end(), suite_fn.begin(), suite_fn.end());
        return out;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

} // namespace eulerpart
