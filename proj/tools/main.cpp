// Command line front end: identity verification, coefficient tables,
// density scans, and component splits, with human, CSV, and JSON output.
//
// Exit codes: 0 all checks passed / output produced, 1 any check failed,
// 2 usage error (unknown subcommand, flag, id, or malformed input).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qident/bailey.hpp"
#include "qident/density.hpp"
#include "qident/genfun.hpp"
#include "qident/partitions.hpp"
#include "qident/report.hpp"
#include "qident/ternary.hpp"

using json = nlohmann::ordered_json;
using namespace qident;

namespace {

enum class Format { Human, Csv, Json };

Format parse_format(const std::string& name)
{
    if (name == "human") return Format::Human;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw CLI::ValidationError("--format", "unknown format: " + name);
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

// ---------------------------------------------------------------- verify --

SeriesZ series_from_values(const std::vector<Bigint>& values)
{
    std::vector<Bigint> copy = values;
    return SeriesZ(0, static_cast<long>(copy.size()), std::move(copy));
}

SeriesA oracle_profile_series(long k, long order)
{
    SeriesA s(0, order + 1);
    for (long n = 0; n <= order; ++n) {
        PolyA p;
        for (const auto& e : enumerate_profile(k, n))
            p += PolyA::monomial(Bigint(e.sign), static_cast<int>(e.m));
        s.ref(n) = p;
    }
    return s;
}

std::vector<VerificationReport> run_verify(const std::string& id, long order, long n_max)
{
    std::vector<VerificationReport> reports;
    if (id == "2.7") {
        reports.push_back(compare_series("2.7", order, lhs_27(order), rhs_27(order)));
    } else if (id == "2.8") {
        reports.push_back(compare_series("2.8", order, lhs_28(order), rhs_28(order)));
    } else if (id == "3.7-termwise") {
        reports.push_back(compare_series("3.7-termwise", order, middle_37(order), lhs_27(order)));
    } else if (id == "3.1-oracle") {
        for (long k = 0; k <= 6; ++k)
            reports.push_back(compare_series("3.1-oracle:k=" + std::to_string(k), order,
                                             oracle_profile_series(k, order), genfun_k(k, order)));
    } else if (id == "3.2-routes") {
        std::vector<Bigint> b_oracle_vals, bbar_oracle_vals;
        for (long n = 0; n <= order; ++n) {
            b_oracle_vals.emplace_back(b_oracle(n));
            bbar_oracle_vals.emplace_back(bbar_oracle(n));
        }
        reports.push_back(compare_series("3.2-routes:b:series-vs-grading", order, lhs_28(order),
                                         series_from_values(b_table_via_grading(order))));
        reports.push_back(compare_series("3.2-routes:b:series-vs-oracle", order, lhs_28(order),
                                         series_from_values(b_oracle_vals)));
        reports.push_back(compare_series("3.2-routes:bbar:series-vs-grading", order, lhs_27(order),
                                         series_from_values(bbar_table_via_grading(order))));
        reports.push_back(compare_series("3.2-routes:bbar:series-vs-oracle", order, lhs_27(order),
                                         series_from_values(bbar_oracle_vals)));
    } else if (id == "4.1") {
        reports.push_back(compare_series("4.1", order, rewrite_41(order), rhs_27(order)));
    } else if (id == "pair-def-A" || id == "pair-def-B") {
        const auto pair = (id == "pair-def-A") ? BaileyPairId::PairA : BaileyPairId::PairB;
        reports = verify_pair_definition(pair, n_max, order);
    } else if (id == "lemma-2.2-A" || id == "lemma-2.2-B") {
        const auto pair = (id == "lemma-2.2-A") ? BaileyPairId::PairA : BaileyPairId::PairB;
        const auto [lhs, rhs] = bailey_lemma_sides(pair, order);
        reports.push_back(compare_series(id + ":sides", order, lhs, rhs));
        // Laurent intermediates must leave no negative residue
        const auto negative_part = rhs.truncated(0);
        reports.push_back(compare_series(id + ":power-series", order, negative_part,
                                         SeriesZ(negative_part.min_exp(), 0)));
    } else if (id == "split-2.7" || id == "split-2.8") {
        const bool is27 = id == "split-2.7";
        const auto split = split_components(is27 ? LatticeFormId::Rhs27 : LatticeFormId::Rhs28, order);
        const auto whole = is27 ? rhs_27(order) : rhs_28(order);
        reports.push_back(
            compare_series(id, order, split.diagonal + split.off_diagonal, whole));
    } else if (id == "legendre-oracle") {
        const auto mask = representable_mask(TernaryForm{1, 1, 1, 0, 0, 0}, order);
        std::vector<Bigint> legendre, exhaustive;
        for (long n = 0; n <= order; ++n) {
            legendre.emplace_back(is_sum_three_squares(n) ? 1 : 0);
            exhaustive.emplace_back(mask[static_cast<size_t>(n)] ? 1 : 0);
        }
        reports.push_back(compare_series("legendre-oracle", order, series_from_values(legendre),
                                         series_from_values(exhaustive)));
    } else {
        throw CLI::ValidationError("--id", "unknown check id: " + id);
    }
    return reports;
}

std::string render_verify(const std::vector<VerificationReport>& reports, Format format)
{
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "check_id,order,status,first_mismatch\n";
        for (const auto& r : reports) {
            out << r.check_id << "," << r.order << "," << r.status() << ",";
            if (r.first_mismatch) out << *r.first_mismatch;
            out << "\n";
        }
    } else if (format == Format::Json) {
        json rows = json::array();
        for (const auto& r : reports) {
            json row;
            row["check_id"] = r.check_id;
            row["order"] = r.order;
            row["status"] = r.status();
            row["first_mismatch"] =
                r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
    } else {
        out << std::left << std::setw(36) << "check_id" << std::setw(8) << "order"
            << "status\n";
        for (const auto& r : reports) {
            out << std::left << std::setw(36) << r.check_id << std::setw(8) << r.order
                << r.status();
            if (r.first_mismatch)
                out << "  first mismatch at q^" << *r.first_mismatch << ": lhs="
                    << r.lhs_at_mismatch << " rhs=" << r.rhs_at_mismatch;
            out << "\n";
        }
    }
    return out.str();
}

// --------------------------------------------------------------- compute --

std::string render_table(const CoefficientTable& table, Format format)
{
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "n,coefficient\n";
        for (long n = 0; n <= table.max_n(); ++n)
            out << n << "," << to_decimal(table.values[static_cast<size_t>(n)]) << "\n";
    } else if (format == Format::Json) {
        json rows = json::array();
        for (long n = 0; n <= table.max_n(); ++n) {
            json row;
            row["n"] = n;
            row["coefficient"] = to_decimal(table.values[static_cast<size_t>(n)]);
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
    } else {
        out << std::left << std::setw(8) << "n" << "coefficient\n";
        Bigint max_abs = 0;
        long max_at = 0;
        for (long n = 0; n <= table.max_n(); ++n) {
            const Bigint& v = table.values[static_cast<size_t>(n)];
            out << std::left << std::setw(8) << n << to_decimal(v) << "\n";
            if (abs(v) > max_abs) {
                max_abs = abs(v);
                max_at = n;
            }
        }
        out << "# max |coefficient| observed: " << to_decimal(max_abs) << " at n=" << max_at
            << "\n";
    }
    return out.str();
}

std::string render_a_grid(long k, long order, Format format)
{
    const auto g = genfun_k(k, order);
    std::vector<std::pair<long, long>> cells;  // (n, m) with nonzero entries
    for (long n = 0; n <= order; ++n) {
        const PolyA p = g.known_coefficient(n);
        for (int m = 0; m <= p.degree(); ++m)
            if (!bigint_is_zero(p.coeff(m))) cells.emplace_back(n, m);
    }
    std::ostringstream out;
    const auto value = [&](long n, long m) {
        return to_decimal(g.known_coefficient(n).coeff(static_cast<int>(m)));
    };
    if (format == Format::Csv) {
        out << "n,m,coefficient\n";
        for (const auto& [n, m] : cells) out << n << "," << m << "," << value(n, m) << "\n";
    } else if (format == Format::Json) {
        json rows = json::array();
        for (const auto& [n, m] : cells) {
            json row;
            row["n"] = n;
            row["m"] = m;
            row["coefficient"] = value(n, m);
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
    } else {
        out << "profile k=" << k << ", nonzero signed counts by (n, m)\n";
        for (const auto& [n, m] : cells)
            out << "n=" << n << " m=" << m << " count=" << value(n, m) << "\n";
    }
    return out.str();
}

// --------------------------------------------------------------- density --

std::optional<TernaryForm> parse_form_subject(const std::string& subject)
{
    if (subject.rfind("form:", 0) != 0) return std::nullopt;
    TernaryForm f;
    long* slots[6] = {&f.a, &f.b, &f.c, &f.r, &f.s, &f.t};
    std::istringstream in(subject.substr(5));
    for (int i = 0; i < 6; ++i) {
        std::string piece;
        if (!std::getline(in, piece, ',')) throw CLI::ValidationError("--subject", "form needs six coefficients");
        try {
            *slots[i] = std::stol(piece);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--subject", "bad form coefficient: " + piece);
        }
    }
    return f;
}

DensityReport run_density(const std::string& subject, const std::vector<long long>& checkpoints)
{
    if (subject == "b" || subject == "bbar") {
        // lattice route: near-linear in admissible lattice points, the only
        // sensible path past order ~10^4
        const long top = static_cast<long>(checkpoints.back());
        const auto series = (subject == "b") ? rhs_28(top) : rhs_27(top);
        CoefficientTable table;
        table.name = (subject == "b") ? CoefficientTable::Name::B : CoefficientTable::Name::Bbar;
        for (long n = 0; n <= top; ++n) table.values.push_back(series.coefficient(n));
        return nonzero_density(table, checkpoints);
    }
    if (subject == "three-squares") return three_squares_density(checkpoints);
    if (subject == "loeschian") return loeschian_density(checkpoints);
    if (const auto form = parse_form_subject(subject)) {
        if (!form->positive_definite())
            throw CLI::ValidationError("--subject", "form is not positive definite");
        return form_density(*form, checkpoints);
    }
    throw CLI::ValidationError("--subject", "unknown subject: " + subject);
}

std::string render_density(const DensityReport& rep, Format format)
{
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "X,count,ratio\n";
        for (size_t i = 0; i < rep.checkpoints.size(); ++i)
            out << rep.checkpoints[i] << "," << rep.counts[i] << "," << rep.ratio_str(i) << "\n";
    } else if (format == Format::Json) {
        json rows = json::array();
        for (size_t i = 0; i < rep.checkpoints.size(); ++i) {
            json row;
            row["X"] = rep.checkpoints[i];
            row["count"] = rep.counts[i];
            row["ratio"] = rep.ratio_str(i);
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
    } else {
        out << "subject: " << rep.subject << "  (counts over 1 <= n <= X; n = 0 excluded)\n";
        out << std::left << std::setw(12) << "X" << std::setw(12) << "count" << "ratio\n";
        for (size_t i = 0; i < rep.checkpoints.size(); ++i)
            out << std::left << std::setw(12) << rep.checkpoints[i] << std::setw(12)
                << rep.counts[i] << rep.ratio_str(i) << "\n";
    }
    return out.str();
}

// ----------------------------------------------------------------- split --

std::string render_split(const std::string& id, long order, Format format)
{
    const bool is27 = id == "2.7";
    const auto split = split_components(is27 ? LatticeFormId::Rhs27 : LatticeFormId::Rhs28, order);
    std::ostringstream out;
    const auto row_values = [&](long n) {
        const Bigint d = split.diagonal.coefficient(n);
        const Bigint o = split.off_diagonal.coefficient(n);
        return std::array<std::string, 3>{to_decimal(d), to_decimal(o), to_decimal(d + o)};
    };
    if (format == Format::Csv) {
        out << "n,diagonal,off_diagonal,sum\n";
        for (long n = 0; n <= order; ++n) {
            const auto v = row_values(n);
            out << n << "," << v[0] << "," << v[1] << "," << v[2] << "\n";
        }
    } else if (format == Format::Json) {
        json rows = json::array();
        for (long n = 0; n <= order; ++n) {
            const auto v = row_values(n);
            json row;
            row["n"] = n;
            row["diagonal"] = v[0];
            row["off_diagonal"] = v[1];
            row["sum"] = v[2];
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
    } else {
        out << "component split of " << id << " through q^" << order << "\n";
        out << std::left << std::setw(8) << "n" << std::setw(14) << "diagonal" << std::setw(14)
            << "off_diagonal" << "sum\n";
        for (long n = 0; n <= order; ++n) {
            const auto v = row_values(n);
            out << std::left << std::setw(8) << n << std::setw(14) << v[0] << std::setw(14)
                << v[1] << v[2] << "\n";
        }
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact q-series identity checks, coefficient tables, and density scans"};
    app.require_subcommand(1);

    const std::vector<std::string> check_ids = {
        "2.7",        "2.8",         "3.7-termwise", "3.1-oracle",  "3.2-routes",
        "4.1",        "pair-def-A",  "pair-def-B",   "lemma-2.2-A", "lemma-2.2-B",
        "split-2.7",  "split-2.8",   "legendre-oracle"};

    // verify
    auto* verify = app.add_subcommand("verify", "run one identity / oracle check");
    std::string verify_id;
    long verify_order = 0;
    long verify_n_max = 8;
    std::string verify_format = "human";
    std::string verify_out;
    verify->add_option("--id", verify_id, "check id")
        ->required()
        ->check(CLI::IsMember(check_ids));
    verify->add_option("--order", verify_order, "verify coefficients through q^order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--n-max", verify_n_max, "largest pair index for pair-def checks")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"human", "csv", "json"}));
    verify->add_option("--out", verify_out, "write the report to a file");

    // compute
    auto* compute = app.add_subcommand("compute", "emit a coefficient table");
    std::string compute_table;
    long compute_k = -1;
    long compute_max_n = 0;
    std::string compute_format = "csv";
    std::string compute_out;
    compute->add_option("--table", compute_table)
        ->required()
        ->check(CLI::IsMember({"b", "bbar", "a-grid"}));
    compute->add_option("--k", compute_k, "profile index (a-grid only)");
    compute->add_option("--max-n", compute_max_n, "largest n computed")
        ->required()
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--format", compute_format)->check(CLI::IsMember({"human", "csv", "json"}));
    compute->add_option("--out", compute_out);

    // density
    auto* density = app.add_subcommand("density", "empirical density scan");
    std::string density_subject;
    std::vector<long long> density_checkpoints;
    std::string density_format = "human";
    std::string density_out;
    density->add_option("--subject", density_subject,
                        "b | bbar | three-squares | loeschian | form:a,b,c,r,s,t")
        ->required();
    density->add_option("--checkpoints", density_checkpoints, "increasing X values")
        ->delimiter(',');
    density->add_option("--format", density_format)->check(CLI::IsMember({"human", "csv", "json"}));
    density->add_option("--out", density_out);

    // split
    auto* split = app.add_subcommand("split", "diagonal / off-diagonal component split");
    std::string split_id;
    long split_order = 0;
    std::string split_format = "human";
    std::string split_out;
    split->add_option("--id", split_id)->required()->check(CLI::IsMember({"2.7", "2.8"}));
    split->add_option("--order", split_order)->required()->check(CLI::NonNegativeNumber);
    split->add_option("--format", split_format)->check(CLI::IsMember({"human", "csv", "json"}));
    split->add_option("--out", split_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            const auto reports = run_verify(verify_id, verify_order, verify_n_max);
            emit(render_verify(reports, parse_format(verify_format)), verify_out);
            return all_pass(reports) ? 0 : 1;
        }
        if (compute->parsed()) {
            const Format format = parse_format(compute_format);
            if (compute_table == "a-grid") {
                if (compute_k < 0)
                    throw CLI::ValidationError("--k", "a-grid needs a profile index --k");
                emit(render_a_grid(compute_k, compute_max_n, format), compute_out);
            } else {
                const auto table =
                    (compute_table == "b") ? b_table(compute_max_n) : bbar_table(compute_max_n);
                emit(render_table(table, format), compute_out);
            }
            return 0;
        }
        if (density->parsed()) {
            if (density_checkpoints.empty()) density_checkpoints = default_checkpoints();
            const auto rep = run_density(density_subject, density_checkpoints);
            const Format format = parse_format(density_format);
            std::string text = render_density(rep, format);
            if (format == Format::Human && (density_subject == "b" || density_subject == "bbar")) {
                // descriptive lim-sup estimate, per decade
                const long top = static_cast<long>(density_checkpoints.back());
                const auto series = (density_subject == "b") ? rhs_28(top) : rhs_27(top);
                CoefficientTable table;
                table.name = (density_subject == "b") ? CoefficientTable::Name::B
                                                      : CoefficientTable::Name::Bbar;
                for (long n = 0; n <= top; ++n) table.values.push_back(series.coefficient(n));
                std::ostringstream extra;
                extra << "running upper density (sup of count/X over decades so far):\n";
                for (const auto& p : running_upper_density(table))
                    extra << "  X=" << p.X << "  sup=" << render_ratio(p.sup_num, p.sup_den)
                          << "\n";
                text += extra.str();
            }
            emit(text, density_out);
            return 0;
        }
        if (split->parsed()) {
            emit(render_split(split_id, split_order, parse_format(split_format)), split_out);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
