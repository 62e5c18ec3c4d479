#include "eulerpart/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <stdexcept>

namespace eulerpart {

Partition Partition::from_parts(std::vector<long long> parts)
{
    Partition p;
    long long w = 0;
    for (long long v : parts) {
        if (v < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (w > std::numeric_limits<long long>::max() - v)
            throw std::invalid_argument("partition weight overflow");
        w += v;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    p.parts_ = std::move(parts);
    p.weight_ = w;
    return p;
}

MultiplicityView multiplicity_view(const Partition& p)
{
    MultiplicityView m;
    for (long long v : p.parts())
        ++m[v];
    return m;
}

Partition from_multiplicities(const MultiplicityView& m)
{
    std::vector<long long> parts;
    for (auto [v, mult] : m) {
        if (mult < 0)
            throw std::invalid_argument("negative multiplicity");
        for (long long i = 0; i < mult; ++i)
            parts.push_back(v);
    }
    return Partition::from_parts(std::move(parts));
}

Partition conjugate(const Partition& p)
{
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(p.largest()));
    for (long long i = 1; i <= p.largest(); ++i) {
        long long count = 0;
        for (long long v : p.parts()) {
            if (v < i)
                break;
            ++count;
        }
        out.push_back(count);
    }
    return Partition::from_parts(std::move(out));
}

Partition two_modular_conjugate(const Partition& p)
{
    long long ncols = (p.largest() + 1) / 2;
    std::vector<long long> cols(static_cast<std::size_t>(ncols), 0);
    for (long long v : p.parts()) {
        long long cells = (v + 1) / 2;
        for (long long j = 0; j < cells; ++j) {
            long long cell = (j == cells - 1 && v % 2 != 0) ? 1 : 2;
            cols[static_cast<std::size_t>(j)] += cell;
        }
    }
    return Partition::from_parts(std::move(cols));
}

std::array<long long, 4> boulet_weight_exponents(const Partition& p)
{
    std::array<long long, 4> e{0, 0, 0, 0};
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        long long v = parts[i];
        if (i % 2 == 0) { // odd position (1-based)
            e[0] += (v + 1) / 2;
            e[1] += v / 2;
        } else {
            e[2] += (v + 1) / 2;
            e[3] += v / 2;
        }
    }
    return e;
}

StatisticsBundle statistics(const Partition& p)
{
    StatisticsBundle s;
    s.weight = p.weight();
    s.length = static_cast<long long>(p.length());
    s.largest = p.largest();
    s.boulet_exponents = boulet_weight_exponents(p);

    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        s.alt_sum += (i % 2 == 0) ? parts[i] : -parts[i];
        if (parts[i] % 2 != 0)
            ++s.odd_parts;
        if (parts[i] % 4 == 2)
            ++s.r2;
    }

    auto mult = multiplicity_view(p);
    s.distinct = static_cast<long long>(mult.size());
    long long prev = std::numeric_limits<long long>::min();
    for (auto [v, m] : mult) {
        if (m % 2 != 0)
            ++s.odd_mult_parts;
        if (v != prev + 1)
            ++s.chains;
        prev = v;
    }
    return s;
}

namespace {

long long parse_number(std::string_view s)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad number in partition text: '" + std::string(s) + "'");
    return value;
}

} // namespace

Partition parse_partition(std::string_view text)
{
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            cleaned.push_back(c);

    std::vector<long long> parts;
    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        std::size_t comma = cleaned.find(',', pos);
        std::string_view token(cleaned.data() + pos,
                               (comma == std::string::npos ? cleaned.size() : comma) - pos);
        if (token.empty())
            throw std::invalid_argument("empty token in partition text");
        std::size_t caret = token.find('^');
        long long value, mult = 1;
        if (caret == std::string_view::npos) {
            value = parse_number(token);
        } else {
            value = parse_number(token.substr(0, caret));
            mult = parse_number(token.substr(caret + 1));
            if (mult < 1)
                throw std::invalid_argument("multiplicity must be positive");
        }
        for (long long i = 0; i < mult; ++i)
            parts.push_back(value);
        pos = (comma == std::string::npos) ? cleaned.size() : comma + 1;
        if (comma != std::string::npos && pos == cleaned.size())
            throw std::invalid_argument("trailing comma in partition text");
    }
    return Partition::from_parts(std::move(parts));
}

std::string format_partition(const Partition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

} // namespace eulerpart
