#include "eulerpart/families.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace eulerpart {

namespace {

void check_residues(long long modulus, const std::set<long long>& residues)
{
    for (long long a : residues)
        if (a < 1 || a >= modulus)
            throw std::invalid_argument("residues must satisfy 1 <= a < modulus");
}

} // namespace

void FamilySpec::finalize()
{
    switch (kind_) {
    case FamilyKind::All:
        break;
    case FamilyKind::Distinct:
        repeat_all_ = false;
        break;
    case FamilyKind::Odd:
        modulus_ = 2;
        admissible_ = {1};
        break;
    case FamilyKind::A1:
        modulus_ = 4;
        half_ = 2;
        admissible_ = {0, 1, 2, 3};
        repeat_all_ = false;
        repeatable_ = {0, 2};
        gap_bound_ = 4;
        strict_ = {0, 2};
        smallest_bound_ = 4;
        break;
    case FamilyKind::A2:
        modulus_ = 4;
        half_ = 2;
        admissible_ = {1, 2, 3};
        repeat_all_ = false;
        repeatable_ = {0, 2};
        break;
    case FamilyKind::AO1:
        admissible_ = residues_;
        admissible_.insert(0);
        repeat_all_ = false;
        repeatable_ = {0};
        gap_bound_ = modulus_;
        strict_ = {0};
        smallest_bound_ = modulus_;
        break;
    case FamilyKind::AO2:
        admissible_ = residues_;
        repeat_all_ = false;
        break;
    case FamilyKind::C1:
        admissible_ = residues_;
        admissible_.insert(0);
        repeat_all_ = false;
        repeatable_ = {0, half_};
        gap_bound_ = modulus_;
        strict_ = {0, half_};
        smallest_bound_ = modulus_;
        break;
    case FamilyKind::C2:
        admissible_ = residues_;
        repeat_all_ = false;
        repeatable_ = {0, half_};
        break;
    case FamilyKind::B1:
        admissible_ = residues_;
        admissible_.insert(0);
        repeat_all_ = false;
        repeatable_ = rep_residues_;
        repeatable_.insert(0);
        gap_bound_ = modulus_;
        strict_ = repeatable_;
        smallest_bound_ = modulus_;
        break;
    case FamilyKind::B2:
        admissible_ = residues_;
        repeat_all_ = false;
        repeatable_ = rep_residues_;
        break;
    }
}

FamilySpec FamilySpec::all()
{
    FamilySpec s;
    s.kind_ = FamilyKind::All;
    s.finalize();
    return s;
}

FamilySpec FamilySpec::distinct()
{
    FamilySpec s;
    s.kind_ = FamilyKind::Distinct;
    s.finalize();
    return s;
}

FamilySpec FamilySpec::odd()
{
    FamilySpec s;
    s.kind_ = FamilyKind::Odd;
    s.finalize();
    return s;
}

FamilySpec FamilySpec::a1()
{
    FamilySpec s;
    s.kind_ = FamilyKind::A1;
    s.finalize();
    return s;
}

FamilySpec FamilySpec::a2()
{
    FamilySpec s;
    s.kind_ = FamilyKind::A2;
    s.finalize();
    return s;
}

FamilySpec FamilySpec::ao1(long long N, std::set<long long> residues)
{
    if (N < 2)
        throw std::invalid_argument("AO modulus must be at least 2");
    check_residues(N, residues);
    if (residues.empty())
        throw std::invalid_argument("AO residue set must be nonempty");
    FamilySpec s;
    s.kind_ = FamilyKind::AO1;
    s.modulus_ = N;
    s.residues_ = std::move(residues);
    s.finalize();
    return s;
}

FamilySpec FamilySpec::ao2(long long N, std::set<long long> residues)
{
    FamilySpec s = ao1(N, std::move(residues));
    s.kind_ = FamilyKind::AO2;
    s.admissible_.clear();
    s.repeatable_.clear();
    s.strict_.clear();
    s.gap_bound_ = 0;
    s.smallest_bound_ = 0;
    s.finalize();
    return s;
}

FamilySpec FamilySpec::c1(long long half_modulus, std::set<long long> residues)
{
    if (half_modulus < 1)
        throw std::invalid_argument("C half-modulus must be positive");
    check_residues(2 * half_modulus, residues);
    if (residues.empty())
        throw std::invalid_argument("C residue set must be nonempty");
    FamilySpec s;
    s.kind_ = FamilyKind::C1;
    s.modulus_ = 2 * half_modulus;
    s.half_ = half_modulus;
    s.residues_ = std::move(residues);
    s.finalize();
    return s;
}

FamilySpec FamilySpec::c2(long long half_modulus, std::set<long long> residues)
{
    FamilySpec s = c1(half_modulus, std::move(residues));
    s.kind_ = FamilyKind::C2;
    s.admissible_.clear();
    s.repeatable_.clear();
    s.strict_.clear();
    s.gap_bound_ = 0;
    s.smallest_bound_ = 0;
    s.finalize();
    return s;
}

FamilySpec FamilySpec::b1(long long N, std::set<long long> repeatable,
                          std::set<long long> nonrepeatable)
{
    if (N < 2)
        throw std::invalid_argument("B modulus must be at least 2");
    check_residues(N, repeatable);
    check_residues(N, nonrepeatable);
    for (long long a : repeatable)
        if (nonrepeatable.count(a))
            throw std::invalid_argument("B residue split must be disjoint");
    FamilySpec s;
    s.kind_ = FamilyKind::B1;
    s.modulus_ = N;
    s.rep_residues_ = std::move(repeatable);
    s.residues_ = s.rep_residues_;
    s.residues_.insert(nonrepeatable.begin(), nonrepeatable.end());
    if (s.residues_.empty())
        throw std::invalid_argument("B residue set must be nonempty");
    s.finalize();
    return s;
}

FamilySpec FamilySpec::b2(long long N, std::set<long long> repeatable,
                          std::set<long long> nonrepeatable)
{
    FamilySpec s = b1(N, std::move(repeatable), std::move(nonrepeatable));
    s.kind_ = FamilyKind::B2;
    s.admissible_.clear();
    s.repeatable_.clear();
    s.strict_.clear();
    s.gap_bound_ = 0;
    s.smallest_bound_ = 0;
    s.finalize();
    return s;
}

bool FamilySpec::part_admissible(long long v) const
{
    if (modulus_ == 0)
        return true;
    return admissible_.count(v % modulus_) > 0;
}

bool FamilySpec::part_repeatable(long long v) const
{
    if (repeat_all_)
        return true;
    if (modulus_ == 0)
        return false;
    return repeatable_.count(v % modulus_) > 0;
}

bool FamilySpec::gap_ok(long long hi, long long lo) const
{
    if (gap_bound_ == 0)
        return true;
    long long d = hi - lo;
    if (d > gap_bound_)
        return false;
    if (d == gap_bound_ &&
        (strict_.count(hi % modulus_) || strict_.count(lo % modulus_)))
        return false;
    return true;
}

bool FamilySpec::contains(const Partition& p) const
{
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!part_admissible(parts[i]))
            return false;
        if (i + 1 < parts.size()) {
            if (parts[i] == parts[i + 1] && !part_repeatable(parts[i]))
                return false;
            if (!gap_ok(parts[i], parts[i + 1]))
                return false;
        }
    }
    if (smallest_bound_ > 0 && !parts.empty() && parts.back() >= smallest_bound_)
        return false;
    return true;
}

void FamilySpec::enumerate_rec(long long rem, long long prev,
                               std::vector<long long>& acc,
                               std::vector<Partition>& out) const
{
    if (rem == 0) {
        if (smallest_bound_ > 0 && !acc.empty() && acc.back() >= smallest_bound_)
            return;
        out.push_back(Partition::from_parts(acc));
        return;
    }
    long long hi = std::min(rem, prev);
    long long lo = 1;
    if (gap_bound_ > 0 && !acc.empty())
        lo = std::max<long long>(1, acc.back() - gap_bound_);
    for (long long v = hi; v >= lo; --v) {
        if (!part_admissible(v))
            continue;
        if (!acc.empty()) {
            if (v == acc.back() && !part_repeatable(v))
                continue;
            if (!gap_ok(acc.back(), v))
                continue;
        }
        acc.push_back(v);
        enumerate_rec(rem - v, v, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> FamilySpec::enumerate(long long n) const
{
    if (n < 0)
        throw std::invalid_argument("enumerate: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<long long> acc;
    enumerate_rec(n, n, acc, out);
    return out;
}

long long FamilySpec::cardinality(long long n) const
{
    return static_cast<long long>(enumerate(n).size());
}

namespace {

long long parse_ll(std::string_view s)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad number in family spec: '" + std::string(s) + "'");
    return value;
}

std::set<long long> parse_residue_list(std::string_view s)
{
    std::set<long long> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, (comma == std::string_view::npos ? s.size() : comma) - pos);
        out.insert(parse_ll(tok));
        pos = (comma == std::string_view::npos) ? s.size() : comma + 1;
    }
    return out;
}

std::string residue_list(const std::set<long long>& s)
{
    std::string out;
    for (long long v : s) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    }
    return out;
}

} // namespace

FamilySpec FamilySpec::parse(std::string_view text)
{
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            cleaned.push_back(c);
    std::string_view s = cleaned;

    std::size_t colon = s.find(':');
    std::string_view head = s.substr(0, colon);
    if (head == "All" || head == "P")
        return all();
    if (head == "D")
        return distinct();
    if (head == "O")
        return odd();
    if (head == "A1")
        return a1();
    if (head == "A2")
        return a2();

    bool parametric = head == "AO1" || head == "AO2" || head == "C1" ||
                      head == "C2" || head == "B1" || head == "B2";
    if (!parametric)
        throw std::invalid_argument("unknown family kind: '" + std::string(head) + "'");
    if (colon == std::string_view::npos)
        throw std::invalid_argument("family '" + std::string(head) + "' needs parameters");

    // split "N=...,A=...,Arep=...,Anon=..." on the keys
    std::string_view body = s.substr(colon + 1);
    long long N = 0;
    std::set<long long> A, Arep, Anon;
    bool haveA = false, haveRep = false, haveNon = false;

    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t eq = body.find('=', pos);
        if (eq == std::string_view::npos)
            throw std::invalid_argument("malformed family parameters");
        std::string_view key = body.substr(pos, eq - pos);
        // value runs until the next "key=" or end of string
        std::size_t vstart = eq + 1;
        std::size_t vend = body.size();
        for (std::size_t i = vstart; i < body.size(); ++i) {
            if (body[i] == ',' ) {
                std::size_t nexteq = body.find('=', i + 1);
                std::size_t nextcomma = body.find(',', i + 1);
                if (nexteq != std::string_view::npos &&
                    (nextcomma == std::string_view::npos || nexteq < nextcomma)) {
                    vend = i;
                    break;
                }
            }
        }
        std::string_view value = body.substr(vstart, vend - vstart);
        if (key == "N")
            N = parse_ll(value);
        else if (key == "A") {
            A = parse_residue_list(value);
            haveA = true;
        } else if (key == "Arep") {
            Arep = parse_residue_list(value);
            haveRep = true;
        } else if (key == "Anon") {
            Anon = parse_residue_list(value);
            haveNon = true;
        } else
            throw std::invalid_argument("unknown family parameter '" + std::string(key) + "'");
        pos = (vend == body.size()) ? vend : vend + 1;
    }

    if (N <= 0)
        throw std::invalid_argument("family parameter N missing or nonpositive");
    if (head == "AO1" || head == "AO2") {
        if (!haveA)
            throw std::invalid_argument("family parameter A missing");
        return head == "AO1" ? ao1(N, std::move(A)) : ao2(N, std::move(A));
    }
    if (head == "C1" || head == "C2") {
        if (!haveA)
            throw std::invalid_argument("family parameter A missing");
        return head == "C1" ? c1(N, std::move(A)) : c2(N, std::move(A));
    }
    if (!haveRep && !haveNon)
        throw std::invalid_argument("B family needs Arep and/or Anon");
    return head == "B1" ? b1(N, std::move(Arep), std::move(Anon))
                        : b2(N, std::move(Arep), std::move(Anon));
}

std::string FamilySpec::to_string() const
{
    switch (kind_) {
    case FamilyKind::All: return "All";
    case FamilyKind::Distinct: return "D";
    case FamilyKind::Odd: return "O";
    case FamilyKind::A1: return "A1";
    case FamilyKind::A2: return "A2";
    case FamilyKind::AO1:
        return "AO1:N=" + std::to_string(modulus_) + ",A=" + residue_list(residues_);
    case FamilyKind::AO2:
        return "AO2:N=" + std::to_string(modulus_) + ",A=" + residue_list(residues_);
    case FamilyKind::C1:
        return "C1:N=" + std::to_string(half_) + ",A=" + residue_list(residues_);
    case FamilyKind::C2:
        return "C2:N=" + std::to_string(half_) + ",A=" + residue_list(residues_);
    case FamilyKind::B1:
    case FamilyKind::B2: {
        std::set<long long> non;
        for (long long a : residues_)
            if (!rep_residues_.count(a))
                non.insert(a);
        std::string out = (kind_ == FamilyKind::B1 ? "B1:N=" : "B2:N=") + std::to_string(modulus_);
        if (!rep_residues_.empty())
            out += ",Arep=" + residue_list(rep_residues_);
        if (!non.empty())
            out += ",Anon=" + residue_list(non);
        return out;
    }
    }
    return "?";
}

Statistic parse_statistic(std::string_view name)
{
    if (name == "weight") return Statistic::Weight;
    if (name == "l" || name == "length") return Statistic::Length;
    if (name == "largest") return Statistic::Largest;
    if (name == "la" || name == "alt_sum") return Statistic::AltSum;
    if (name == "lo" || name == "odd_parts") return Statistic::OddParts;
    if (name == "nc" || name == "chains") return Statistic::Chains;
    if (name == "nd" || name == "distinct") return Statistic::Distinct;
    if (name == "no" || name == "odd_mult_parts") return Statistic::OddMultParts;
    if (name == "r2") return Statistic::R2;
    if (name == "fine") return Statistic::FineComposite;
    throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

std::string statistic_name(Statistic s)
{
    switch (s) {
    case Statistic::Weight: return "weight";
    case Statistic::Length: return "l";
    case Statistic::Largest: return "largest";
    case Statistic::AltSum: return "la";
    case Statistic::OddParts: return "lo";
    case Statistic::Chains: return "nc";
    case Statistic::Distinct: return "nd";
    case Statistic::OddMultParts: return "no";
    case Statistic::R2: return "r2";
    case Statistic::FineComposite: return "fine";
    }
    return "?";
}

long long evaluate_statistic(Statistic s, const StatisticsBundle& b)
{
    switch (s) {
    case Statistic::Weight: return b.weight;
    case Statistic::Length: return b.length;
    case Statistic::Largest: return b.largest;
    case Statistic::AltSum: return b.alt_sum;
    case Statistic::OddParts: return b.odd_parts;
    case Statistic::Chains: return b.chains;
    case Statistic::Distinct: return b.distinct;
    case Statistic::OddMultParts: return b.odd_mult_parts;
    case Statistic::R2: return b.r2;
    case Statistic::FineComposite:
        if (b.length == 0)
            return 0;
        if (b.largest % 2 == 0)
            throw std::invalid_argument(
                "fine composite requires an odd largest part");
        return (b.largest - 1) / 2 + b.length;
    }
    return 0;
}

std::vector<std::vector<long long>>
joint_distribution(const FamilySpec& spec, long long n,
                   const std::vector<Statistic>& stats)
{
    std::vector<std::vector<long long>> out;
    for (const Partition& p : spec.enumerate(n)) {
        StatisticsBundle b = statistics(p);
        std::vector<long long> row;
        row.reserve(stats.size());
        for (Statistic s : stats)
            row.push_back(evaluate_statistic(s, b));
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace eulerpart
