#ifndef EULERPART_SERIES_HPP
#define EULERPART_SERIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eulerpart/families.hpp"

namespace eulerpart {

using Coeff = boost::multiprecision::cpp_int;

/* Sparse exponent map over the fixed variable set a,b,c,d,x,y,z.
 * Exponents may be negative internally (Laurent monomials show up in
 * the abcd -> xy,q substitution); zero exponents are never stored. */
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<const char, long long>> exps);

    static Monomial var(char v, long long e = 1);
    static Monomial one() { return {}; }

    long long exponent(char v) const;
    long long total_degree() const;
    bool is_one() const { return exps_.empty(); }
    bool nonnegative() const;

    Monomial operator*(const Monomial& o) const;
    Monomial pow(long long e) const;

    auto operator<=>(const Monomial&) const = default;

    std::string to_string() const;  // "1", "x*y^2", ...
    const std::map<char, long long>& exponents() const { return exps_; }

private:
    std::map<char, long long> exps_;
    void set(char v, long long e);
};

using Polynomial = std::map<Monomial, Coeff>;

enum class Grading { QDegree, AbcdDegree };

/* Formal power series truncated at total grade Q.  Under q-degree
 * grading q's exponent is the grade itself and is factored out of the
 * stored monomials; under abcd grading the grade is the monomial's
 * total degree. */
class TruncatedSeries {
public:
    TruncatedSeries(long long order, Grading grading);
    static TruncatedSeries one(long long order, Grading grading);

    long long order() const { return order_; }
    Grading grading() const { return grading_; }

    const Polynomial& term(long long grade) const;
    void add_term(long long grade, const Monomial& m, const Coeff& c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    long long order_;
    Grading grading_;
    std::vector<Polynomial> terms_;
};

struct SeriesDiff {
    bool equal = true;
    long long grade = -1;
    Monomial monomial;
    Coeff lhs;
    Coeff rhs;
    std::string describe() const;
};

/* Exact comparison with first-discrepancy report (smallest grade,
 * smallest monomial). */
SeriesDiff series_compare(const TruncatedSeries& s, const TruncatedSeries& t);
bool series_equal(const TruncatedSeries& s, const TruncatedSeries& t);

/* One factor of an infinite product: (1 + m q^k) or 1/(1 - m q^k)
 * with k >= 1.  Under abcd grading q is implicit and k must equal the
 * monomial's total degree. */
struct Factor {
    enum class Kind { Plus, Geometric } kind;
    Monomial monomial;
    long long grade;

    static Factor plus(Monomial m, long long k) { return {Kind::Plus, std::move(m), k}; }
    static Factor geometric(Monomial m, long long k) { return {Kind::Geometric, std::move(m), k}; }
};

TruncatedSeries expand_product(const std::vector<Factor>& factors,
                               long long order, Grading grading);

/* Maps a StatisticsBundle to the monomial it contributes. */
using MonomialSelector = std::function<Monomial(const StatisticsBundle&)>;

/* Sum of selector(p) q^|p| over all members of the family with weight
 * at most the truncation order. */
TruncatedSeries family_sum(const FamilySpec& spec, const MonomialSelector& selector,
                           long long order, Grading grading = Grading::QDegree);

/* a -> x y q, b -> x^-1 y q, c -> x y^-1 q, d -> x^-1 y^-1 q applied
 * grade-preservingly to an abcd-graded series; output is q-graded. */
TruncatedSeries substitute_abcd_to_xyq(const TruncatedSeries& s);

} // namespace eulerpart

#endif
