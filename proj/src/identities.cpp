#include "eulerpart/identities.hpp"

#include <stdexcept>

namespace eulerpart {

namespace {

Monomial mono(std::initializer_list<std::pair<char, long long>> exps)
{
    Monomial m;
    for (auto [v, e] : exps)
        m = m * Monomial::var(v, e);
    return m;
}

MonomialSelector sel(std::vector<std::pair<char, Statistic>> spec)
{
    return [spec = std::move(spec)](const StatisticsBundle& b) {
        Monomial m;
        for (auto [v, s] : spec)
            m = m * Monomial::var(v, evaluate_statistic(s, b));
        return m;
    };
}

MonomialSelector boulet_selector()
{
    return [](const StatisticsBundle& b) {
        return mono({{'a', b.boulet_exponents[0]},
                     {'b', b.boulet_exponents[1]},
                     {'c', b.boulet_exponents[2]},
                     {'d', b.boulet_exponents[3]}});
    };
}

/* prod_j (1+xyq^{2j-1})/(1-y^2 q^{4j-2}) -- the shared right side of
 * the distinct-part and odd-part two-parameter identities. */
TruncatedSeries xy_product(long long Q)
{
    std::vector<Factor> f;
    for (long long j = 1; 2 * j - 1 <= Q; ++j)
        f.push_back(Factor::plus(mono({{'x', 1}, {'y', 1}}), 2 * j - 1));
    for (long long j = 1; 4 * j - 2 <= Q; ++j)
        f.push_back(Factor::geometric(Monomial::var('y', 2), 4 * j - 2));
    return expand_product(f, Q, Grading::QDegree);
}

/* prod_j (1+xyq^{2j-1}) / ((1-q^{4j})(1-x^2 q^{4j-2})(1-y^2 q^{4j-2})) */
TruncatedSeries andrews_product(long long Q)
{
    std::vector<Factor> f;
    for (long long j = 1; 2 * j - 1 <= Q; ++j)
        f.push_back(Factor::plus(mono({{'x', 1}, {'y', 1}}), 2 * j - 1));
    for (long long j = 1; 4 * j <= Q; ++j)
        f.push_back(Factor::geometric(Monomial::one(), 4 * j));
    for (long long j = 1; 4 * j - 2 <= Q; ++j) {
        f.push_back(Factor::geometric(Monomial::var('x', 2), 4 * j - 2));
        f.push_back(Factor::geometric(Monomial::var('y', 2), 4 * j - 2));
    }
    return expand_product(f, Q, Grading::QDegree);
}

/* The five abcd factor shapes of the Boulet product, per j:
 * numerators (1+a^j b^{j-1} c^{j-1} d^{j-1}), (1+a^j b^j c^j d^{j-1});
 * denominators 1/(1-a^j b^j c^j d^j), 1/(1-a^j b^j c^{j-1} d^{j-1}),
 * 1/(1-a^j b^{j-1} c^j d^{j-1}). */
void boulet_numerators(std::vector<Factor>& f, long long j, long long Q)
{
    Monomial m1 = mono({{'a', j}, {'b', j - 1}, {'c', j - 1}, {'d', j - 1}});
    Monomial m2 = mono({{'a', j}, {'b', j}, {'c', j}, {'d', j - 1}});
    if (m1.total_degree() <= Q)
        f.push_back(Factor::plus(m1, m1.total_degree()));
    if (m2.total_degree() <= Q)
        f.push_back(Factor::plus(m2, m2.total_degree()));
}

TruncatedSeries boulet_all_product(long long Q)
{
    std::vector<Factor> f;
    for (long long j = 1; 4 * j - 3 <= Q; ++j) {
        boulet_numerators(f, j, Q);
        Monomial d1 = mono({{'a', j}, {'b', j}, {'c', j}, {'d', j}});
        Monomial d2 = mono({{'a', j}, {'b', j}, {'c', j - 1}, {'d', j - 1}});
        Monomial d3 = mono({{'a', j}, {'b', j - 1}, {'c', j}, {'d', j - 1}});
        for (const Monomial& m : {d1, d2, d3})
            if (m.total_degree() <= Q)
                f.push_back(Factor::geometric(m, m.total_degree()));
    }
    return expand_product(f, Q, Grading::AbcdDegree);
}

TruncatedSeries boulet_distinct_product(long long Q)
{
    std::vector<Factor> f;
    for (long long j = 1; 4 * j - 3 <= Q; ++j) {
        boulet_numerators(f, j, Q);
        Monomial d = mono({{'a', j}, {'b', j}, {'c', j - 1}, {'d', j - 1}});
        if (d.total_degree() <= Q)
            f.push_back(Factor::geometric(d, d.total_degree()));
    }
    return expand_product(f, Q, Grading::AbcdDegree);
}

std::vector<Identity> build_catalog()
{
    const FamilySpec D = FamilySpec::distinct();
    const FamilySpec O = FamilySpec::odd();
    const FamilySpec All = FamilySpec::all();

    auto fs = [](FamilySpec spec, MonomialSelector s, Grading g = Grading::QDegree) {
        return [spec = std::move(spec), s = std::move(s), g](long long Q) {
            return family_sum(spec, s, Q, g);
        };
    };

    std::vector<Identity> cat;
    cat.push_back({"E1.1", "chains over D vs distinct parts over O",
                   Grading::QDegree, 26,
                   fs(D, sel({{'z', Statistic::Chains}})),
                   fs(O, sel({{'z', Statistic::Distinct}}))});
    cat.push_back({"E1.2", "largest part over D vs (largest-1)/2+length over O",
                   Grading::QDegree, 26,
                   fs(D, sel({{'x', Statistic::Largest}})),
                   fs(O, sel({{'x', Statistic::FineComposite}}))});
    cat.push_back({"E1.3", "alternating sum over D vs length over O",
                   Grading::QDegree, 26,
                   fs(D, sel({{'y', Statistic::AltSum}})),
                   fs(O, sel({{'y', Statistic::Length}}))});
    cat.push_back({"E1.4", "(largest, alt sum, chains) over D vs (fine, length, distinct) over O",
                   Grading::QDegree, 26,
                   fs(D, sel({{'x', Statistic::Largest},
                              {'y', Statistic::AltSum},
                              {'z', Statistic::Chains}})),
                   fs(O, sel({{'x', Statistic::FineComposite},
                              {'y', Statistic::Length},
                              {'z', Statistic::Distinct}}))});
    cat.push_back({"E1.5", "odd parts over D vs odd-multiplicity parts over O",
                   Grading::QDegree, 26,
                   fs(D, sel({{'x', Statistic::OddParts}})),
                   fs(O, sel({{'x', Statistic::OddMultParts}}))});
    cat.push_back({"E2.1", "(odd parts, alt sum) over D vs (odd-mult parts, length) over O",
                   Grading::QDegree, 30,
                   fs(D, sel({{'x', Statistic::OddParts}, {'y', Statistic::AltSum}})),
                   fs(O, sel({{'x', Statistic::OddMultParts}, {'y', Statistic::Length}}))});
    cat.push_back({"E4.1", "four-parameter weight over all partitions vs product",
                   Grading::AbcdDegree, 20,
                   fs(All, boulet_selector(), Grading::AbcdDegree),
                   boulet_all_product});
    cat.push_back({"E4.2", "four-parameter weight over D vs product",
                   Grading::AbcdDegree, 20,
                   fs(D, boulet_selector(), Grading::AbcdDegree),
                   boulet_distinct_product});
    cat.push_back({"E4.3", "(odd parts, odd parts of conjugate) over all partitions vs product",
                   Grading::QDegree, 30,
                   fs(All, sel({{'x', Statistic::OddParts}, {'y', Statistic::AltSum}})),
                   andrews_product});
    cat.push_back({"E4.4", "(odd parts, odd parts of conjugate) over D vs product",
                   Grading::QDegree, 30,
                   fs(D, sel({{'x', Statistic::OddParts}, {'y', Statistic::AltSum}})),
                   xy_product});
    cat.push_back({"E4.5", "(odd-mult parts, length) over O vs product",
                   Grading::QDegree, 30,
                   fs(O, sel({{'x', Statistic::OddMultParts}, {'y', Statistic::Length}})),
                   xy_product});
    return cat;
}

} // namespace

const std::vector<Identity>& identity_catalog()
{
    static const std::vector<Identity> cat = build_catalog();
    return cat;
}

const Identity& find_identity(const std::string& id)
{
    for (const Identity& ident : identity_catalog())
        if (ident.id == id)
            return ident;
    throw std::invalid_argument("unknown identity id '" + id + "'");
}

} // namespace eulerpart
