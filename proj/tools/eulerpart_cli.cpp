#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerpart/bijections.hpp"
#include "eulerpart/families.hpp"
#include "eulerpart/identities.hpp"
#include "eulerpart/partition.hpp"
#include "eulerpart/verify.hpp"

using json = nlohmann::ordered_json;
using namespace eulerpart;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInvalidInput = 2;

json stats_json(const StatisticsBundle& s)
{
    return json{{"l", s.length},   {"la", s.alt_sum}, {"lo", s.odd_parts},
                {"nc", s.chains},  {"nd", s.distinct}, {"no", s.odd_mult_parts},
                {"r2", s.r2},      {"largest", s.largest}};
}

json partition_json(const Partition& p)
{
    return json{{"parts", p.parts()},
                {"weight", p.weight()},
                {"stats", stats_json(statistics(p))}};
}

std::string stats_text(const StatisticsBundle& s)
{
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "weight=%lld l=%lld largest=%lld la=%lld lo=%lld nc=%lld "
                  "nd=%lld no=%lld r2=%lld",
                  s.weight, s.length, s.largest, s.alt_sum, s.odd_parts,
                  s.chains, s.distinct, s.odd_mult_parts, s.r2);
    return buf;
}

InsertionParams parse_params(const std::string& text)
{
    // reuse the C-family grammar: "N=2,A=1,2,3"
    FamilySpec spec = FamilySpec::parse("C1:" + text);
    return InsertionParams{spec.modulus() / 2, spec.residues()};
}

int run_map(const std::string& name, const std::string& partition_text,
            const std::string& params_text, bool as_json)
{
    Partition input = parse_partition(partition_text);
    InsertionParams params = params_text.empty() ? InsertionParams{}
                                                 : parse_params(params_text);
    Partition output;
    bool trace = false;
    DeltaTrace tr;
    if (name == "varphi")
        output = varphi(input);
    else if (name == "varphi_inv")
        output = varphi_inv(input);
    else if (name == "psi")
        output = psi(input);
    else if (name == "psi_inv")
        output = psi_inv(input);
    else if (name == "phi")
        output = phi(input, params);
    else if (name == "phi_inv")
        output = phi_inv(input, params);
    else if (name == "delta") {
        tr = delta_trace(input);
        output = tr.mu;
        trace = true;
    } else if (name == "delta_inv")
        output = delta_inv(input);
    else
        throw std::invalid_argument("unknown map '" + name + "'");

    if (as_json) {
        json doc{{"status", "ok"},
                 {"map", name},
                 {"input", partition_json(input)},
                 {"output", partition_json(output)}};
        if (trace)
            doc["intermediates"] = json{{"alpha", partition_json(tr.alpha)},
                                        {"beta", partition_json(tr.beta)}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "input: " << format_partition(input) << '\n';
        std::cout << "input stats: " << stats_text(statistics(input)) << '\n';
        if (trace) {
            std::cout << "alpha: " << format_partition(tr.alpha) << '\n';
            std::cout << "beta: " << format_partition(tr.beta) << '\n';
        }
        std::cout << "output: " << format_partition(output) << '\n';
        std::cout << "output stats: " << stats_text(statistics(output)) << '\n';
    }
    return kOk;
}

int run_table(long long n, bool as_json)
{
    json rows = json::array();
    bool all_ok = true;
    for (const Partition& lam : FamilySpec::distinct().enumerate(n)) {
        Partition mu = delta(lam);
        StatisticsBundle sl = statistics(lam);
        StatisticsBundle sm = statistics(mu);
        bool ok = sl.odd_parts == sm.odd_mult_parts && sl.alt_sum == sm.length;
        all_ok = all_ok && ok;
        if (as_json) {
            rows.push_back(json{{"lambda", lam.parts()},
                                {"lo", sl.odd_parts},
                                {"la", sl.alt_sum},
                                {"mu", mu.parts()},
                                {"no", sm.odd_mult_parts},
                                {"l", sm.length},
                                {"ok", ok}});
        } else {
            std::cout << format_partition(lam) << " | lo=" << sl.odd_parts
                      << " la=" << sl.alt_sum << " | " << format_partition(mu)
                      << " | no=" << sm.odd_mult_parts << " l=" << sm.length
                      << " | " << (ok ? "ok" : "MISMATCH") << '\n';
        }
    }
    if (as_json)
        std::cout << json{{"status", all_ok ? "ok" : "mismatch"},
                          {"n", n},
                          {"rows", rows}}
                         .dump(2)
                  << '\n';
    return all_ok ? kOk : kMismatch;
}

int run_verify(const std::string& suite, long long max_n, long long order,
               bool as_json)
{
    std::vector<CheckResult> results = verify_suite(suite, max_n, order);
    bool all_ok = true;
    json checks = json::array();
    for (const CheckResult& r : results) {
        all_ok = all_ok && r.ok;
        if (as_json) {
            json c{{"name", r.name}, {"ok", r.ok}, {"checks", r.checks}};
            if (!r.ok)
                c["witness"] = r.witness;
            checks.push_back(std::move(c));
        } else if (r.ok) {
            std::cout << "ok " << r.name << " (" << r.checks << " checks)\n";
        } else {
            std::cout << "MISMATCH " << r.name << ": " << r.witness << '\n';
        }
    }
    if (as_json)
        std::cout << json{{"status", all_ok ? "ok" : "mismatch"},
                          {"suite", suite},
                          {"checks", checks}}
                         .dump(2)
                  << '\n';
    else
        std::cout << (all_ok ? "all checks passed" : "MISMATCH detected") << '\n';
    return all_ok ? kOk : kMismatch;
}

int run_enumerate(const std::string& spec_text, long long n,
                  const std::string& stats_csv, bool count_only, bool as_json)
{
    FamilySpec spec = FamilySpec::parse(spec_text);
    std::vector<Statistic> stats;
    if (!stats_csv.empty()) {
        std::size_t pos = 0;
        while (pos <= stats_csv.size()) {
            std::size_t comma = stats_csv.find(',', pos);
            std::string tok = stats_csv.substr(
                pos, (comma == std::string::npos ? stats_csv.size() : comma) - pos);
            stats.push_back(parse_statistic(tok));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
    }

    auto members = spec.enumerate(n);
    if (count_only) {
        if (as_json)
            std::cout << json{{"status", "ok"},
                              {"family", spec.to_string()},
                              {"n", n},
                              {"count", members.size()}}
                             .dump(2)
                      << '\n';
        else
            std::cout << members.size() << '\n';
        return kOk;
    }

    json rows = json::array();
    for (const Partition& p : members) {
        StatisticsBundle b = statistics(p);
        if (as_json) {
            json row{{"parts", p.parts()}};
            for (Statistic s : stats)
                row[statistic_name(s)] = evaluate_statistic(s, b);
            rows.push_back(std::move(row));
        } else {
            std::cout << format_partition(p);
            for (Statistic s : stats)
                std::cout << " " << statistic_name(s) << '='
                          << evaluate_statistic(s, b);
            std::cout << '\n';
        }
    }
    if (as_json)
        std::cout << json{{"status", "ok"},
                          {"family", spec.to_string()},
                          {"n", n},
                          {"count", members.size()},
                          {"members", rows}}
                         .dump(2)
                  << '\n';
    return kOk;
}

int run_series(const std::string& id, const std::string& side, long long order,
               bool as_json)
{
    const Identity& ident = find_identity(id);
    long long Q = order < 0 ? ident.default_order : order;
    TruncatedSeries s = (side == "lhs")   ? ident.lhs(Q)
                        : (side == "rhs") ? ident.rhs(Q)
                                          : throw std::invalid_argument(
                                                "side must be 'lhs' or 'rhs'");
    json grades = json::array();
    for (long long g = 0; g <= Q; ++g) {
        for (const auto& [m, c] : s.term(g)) {
            if (as_json)
                grades.push_back(json{{"grade", g},
                                      {"monomial", m.to_string()},
                                      {"coefficient", c.str()}});
            else
                std::cout << g << ' ' << m.to_string() << ' ' << c.str() << '\n';
        }
    }
    if (as_json)
        std::cout << json{{"status", "ok"},
                          {"identity", id},
                          {"side", side},
                          {"order", Q},
                          {"terms", grades}}
                         .dump(2)
                  << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"partition bijections and q-series identity verifier"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one structured JSON document");

    auto* cmd_map = app.add_subcommand("map", "apply a bijection to a partition");
    std::string map_name, partition_text, params_text;
    cmd_map->add_option("name", map_name,
                        "varphi|varphi_inv|psi|psi_inv|phi|phi_inv|delta|delta_inv")
        ->required();
    cmd_map->add_option("partition", partition_text, "partition text, e.g. 3^2,5,7")
        ->required();
    cmd_map->add_option("--params", params_text, "insertion parameters, e.g. N=2,A=1,2,3");

    auto* cmd_table = app.add_subcommand("table", "statistic table over D(n) under delta");
    long long table_n = 7;
    cmd_table->add_option("n", table_n, "weight")->required()
        ->check(CLI::NonNegativeNumber);

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    long long max_n = 26, order = 30;
    cmd_verify->add_option("suite", suite, "bijections|counting|series|refinements|all")
        ->required();
    cmd_verify->add_option("--max-n", max_n, "weight bound for enumeration sweeps");
    cmd_verify->add_option("--order", order, "truncation order for series checks");

    auto* cmd_enum = app.add_subcommand("enumerate", "list a partition family");
    std::string spec_text, stats_csv;
    long long enum_n = 0;
    bool count_only = false;
    cmd_enum->add_option("family", spec_text, "family spec, e.g. D, O, C1:N=2,A=1,2,3")
        ->required();
    cmd_enum->add_option("n", enum_n, "weight")->required()
        ->check(CLI::NonNegativeNumber);
    cmd_enum->add_option("--stats", stats_csv, "statistics to print, e.g. lo,la");
    cmd_enum->add_flag("--count-only", count_only, "print the cardinality only");

    auto* cmd_series = app.add_subcommand("series", "print coefficients of an identity side");
    std::string identity_id, side = "lhs";
    long long series_order = -1;
    cmd_series->add_option("identity", identity_id, "identity id, e.g. E2.1")->required();
    cmd_series->add_option("side", side, "lhs|rhs");
    cmd_series->add_option("--order", series_order, "truncation order");

    try {
        app.parse(argc, argv);
        if (*cmd_map)
            return run_map(map_name, partition_text, params_text, as_json);
        if (*cmd_table)
            return run_table(table_n, as_json);
        if (*cmd_verify)
            return run_verify(suite, max_n, order, as_json);
        if (*cmd_enum)
            return run_enumerate(spec_text, enum_n, stats_csv, count_only, as_json);
        if (*cmd_series)
            return run_series(identity_id, side, series_order, as_json);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}
