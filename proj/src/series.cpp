#include "eulerpart/series.hpp"

#include <stdexcept>

namespace eulerpart {

namespace {
constexpr const char* kVariables = "abcdxyz";

bool known_variable(char v)
{
    for (const char* p = kVariables; *p; ++p)
        if (*p == v)
            return true;
    return false;
}
} // namespace

Monomial::Monomial(std::initializer_list<std::pair<const char, long long>> exps)
{
    for (auto [v, e] : exps)
        set(v, e);
}

void Monomial::set(char v, long long e)
{
    if (!known_variable(v))
        throw std::invalid_argument(std::string("unknown variable '") + v + "'");
    if (e != 0)
        exps_[v] = e;
}

Monomial Monomial::var(char v, long long e)
{
    Monomial m;
    m.set(v, e);
    return m;
}

long long Monomial::exponent(char v) const
{
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

long long Monomial::total_degree() const
{
    long long d = 0;
    for (auto [v, e] : exps_)
        d += e;
    return d;
}

bool Monomial::nonnegative() const
{
    for (auto [v, e] : exps_)
        if (e < 0)
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial out = *this;
    for (auto [v, e] : o.exps_) {
        long long ne = out.exponent(v) + e;
        if (ne == 0)
            out.exps_.erase(v);
        else
            out.exps_[v] = ne;
    }
    return out;
}

Monomial Monomial::pow(long long e) const
{
    Monomial out;
    for (auto [v, x] : exps_)
        if (x * e != 0)
            out.exps_[v] = x * e;
    return out;
}

std::string Monomial::to_string() const
{
    if (exps_.empty())
        return "1";
    std::string out;
    for (auto [v, e] : exps_) {
        if (!out.empty())
            out += '*';
        out += v;
        if (e != 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

TruncatedSeries::TruncatedSeries(long long order, Grading grading)
    : order_(order), grading_(grading),
      terms_(static_cast<std::size_t>(order) + 1)
{
    if (order < 0)
        throw std::invalid_argument("truncation order must be nonnegative");
}

TruncatedSeries TruncatedSeries::one(long long order, Grading grading)
{
    TruncatedSeries s(order, grading);
    s.terms_[0][Monomial::one()] = 1;
    return s;
}

const Polynomial& TruncatedSeries::term(long long grade) const
{
    return terms_.at(static_cast<std::size_t>(grade));
}

void TruncatedSeries::add_term(long long grade, const Monomial& m, const Coeff& c)
{
    if (grade < 0 || grade > order_)
        throw std::out_of_range("grade out of range");
    auto& poly = terms_[static_cast<std::size_t>(grade)];
    Coeff& slot = poly[m];
    slot += c;
    if (slot == 0)
        poly.erase(m);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    if (order_ != o.order_ || grading_ != o.grading_)
        throw std::invalid_argument("series addition needs matching order and grading");
    TruncatedSeries out = *this;
    for (long long g = 0; g <= order_; ++g)
        for (const auto& [m, c] : o.term(g))
            out.add_term(g, m, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    if (order_ != o.order_ || grading_ != o.grading_)
        throw std::invalid_argument("series multiplication needs matching order and grading");
    TruncatedSeries out(order_, grading_);
    for (long long g1 = 0; g1 <= order_; ++g1) {
        if (term(g1).empty())
            continue;
        for (long long g2 = 0; g1 + g2 <= order_; ++g2) {
            if (o.term(g2).empty())
                continue;
            for (const auto& [m1, c1] : term(g1))
                for (const auto& [m2, c2] : o.term(g2))
                    out.add_term(g1 + g2, m1 * m2, c1 * c2);
        }
    }
    return out;
}

SeriesDiff series_compare(const TruncatedSeries& s, const TruncatedSeries& t)
{
    if (s.order() != t.order() || s.grading() != t.grading())
        throw std::invalid_argument("series comparison needs matching order and grading");
    for (long long g = 0; g <= s.order(); ++g) {
        const auto& ps = s.term(g);
        const auto& pt = t.term(g);
        if (ps == pt)
            continue;
        // find the smallest differing monomial
        auto is = ps.begin();
        auto it = pt.begin();
        SeriesDiff d;
        d.equal = false;
        d.grade = g;
        while (is != ps.end() || it != pt.end()) {
            if (it == pt.end() || (is != ps.end() && is->first < it->first)) {
                d.monomial = is->first;
                d.lhs = is->second;
                d.rhs = 0;
                return d;
            }
            if (is == ps.end() || it->first < is->first) {
                d.monomial = it->first;
                d.lhs = 0;
                d.rhs = it->second;
                return d;
            }
            if (is->second != it->second) {
                d.monomial = is->first;
                d.lhs = is->second;
                d.rhs = it->second;
                return d;
            }
            ++is;
            ++it;
        }
        return d;  // unreachable for ps != pt
    }
    return {};
}

bool series_equal(const TruncatedSeries& s, const TruncatedSeries& t)
{
    return series_compare(s, t).equal;
}

std::string SeriesDiff::describe() const
{
    if (equal)
        return "equal";
    return "first discrepancy at grade " + std::to_string(grade) + ", monomial " +
           monomial.to_string() + ": lhs=" + lhs.str() + " rhs=" + rhs.str();
}

TruncatedSeries expand_product(const std::vector<Factor>& factors,
                               long long order, Grading grading)
{
    TruncatedSeries out = TruncatedSeries::one(order, grading);
    for (const Factor& f : factors) {
        if (f.grade < 1)
            throw std::invalid_argument("product factor grade must be at least 1");
        if (grading == Grading::AbcdDegree && f.monomial.total_degree() != f.grade)
            throw std::invalid_argument("abcd factor grade must match monomial degree");
        if (f.grade > order)
            continue;
        TruncatedSeries fac(order, grading);
        fac.add_term(0, Monomial::one(), 1);
        if (f.kind == Factor::Kind::Plus) {
            fac.add_term(f.grade, f.monomial, 1);
        } else {
            for (long long t = 1; t * f.grade <= order; ++t)
                fac.add_term(t * f.grade, f.monomial.pow(t), 1);
        }
        out = out * fac;
    }
    return out;
}

TruncatedSeries family_sum(const FamilySpec& spec, const MonomialSelector& selector,
                           long long order, Grading grading)
{
    TruncatedSeries out(order, grading);
    for (long long n = 0; n <= order; ++n)
        for (const Partition& p : spec.enumerate(n))
            out.add_term(n, selector(statistics(p)), 1);
    return out;
}

TruncatedSeries substitute_abcd_to_xyq(const TruncatedSeries& s)
{
    if (s.grading() != Grading::AbcdDegree)
        throw std::invalid_argument("substitution expects an abcd-graded series");
    TruncatedSeries out(s.order(), Grading::QDegree);
    for (long long g = 0; g <= s.order(); ++g) {
        for (const auto& [m, c] : s.term(g)) {
            long long A = m.exponent('a'), B = m.exponent('b');
            long long C = m.exponent('c'), D = m.exponent('d');
            if (A + B + C + D != g)
                throw std::invalid_argument("non-abcd monomial in abcd-graded series");
            Monomial image = Monomial::var('x', A - B + C - D) *
                             Monomial::var('y', A + B - C - D);
            out.add_term(g, image, c);
        }
    }
    return out;
}

} // namespace eulerpart
