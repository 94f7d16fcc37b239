// qpart: truncated q-series expansion, identity verification, constrained
// partition enumeration and difference tables.
//
// Exit codes: 0 success, 1 verified-false / table mismatch, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpart/builders.hpp"
#include "qpart/classes.hpp"
#include "qpart/partition.hpp"
#include "qpart/series.hpp"
#include "qpart/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qpart;

namespace {

int default_order() {
    if (const char* env = std::getenv("QPART_DEFAULT_ORDER")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid QPART_DEFAULT_ORDER='" << env << "'\n";
    }
    return 300;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string status_text(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "pass";
        case VerifyStatus::fail: return "fail";
        case VerifyStatus::pass_with_erratum: return "pass-with-erratum";
    }
    return "?";
}

int cmd_expand(const std::string& id, int order, const std::string& format) {
    const TruncatedSeries s = build_series(id, order);
    if (format == "csv") {
        for (int k = 0; k < order; ++k)
            std::cout << k << ',' << s.coeff(k).get_str() << '\n';
    } else if (format == "json") {
        json out;
        out["series"] = id;
        out["order"] = order;
        json coeffs = json::array();
        for (int k = 0; k < order; ++k) coeffs.push_back(s.coeff(k).get_str());
        out["coefficients"] = coeffs;
        std::cout << out.dump(2) << '\n';
    } else {
        for (int k = 0; k < order; ++k)
            std::cout << "q^" << k << ": " << s.coeff(k).get_str() << '\n';
    }
    return 0;
}

json mismatch_json(const MismatchInfo& m) {
    json out;
    if (const auto* cell = std::get_if<std::pair<int, int>>(&m.at))
        out["at"] = json::array({cell->first, cell->second});
    else
        out["at"] = std::get<int>(m.at);
    out["expected"] = m.expected;
    out["actual"] = m.actual;
    return out;
}

json report_json(const VerificationReport& r) {
    json out;
    out["id"] = to_string(r.id);
    out["status"] = status_text(r.status);
    out["series_order"] = r.series_order;
    out["enum_limit"] = r.enum_limit;
    out["first_mismatch"] = r.first_mismatch ? mismatch_json(*r.first_mismatch) : json(nullptr);
    out["notes"] = r.notes;
    out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

std::string mismatch_at_text(const MismatchInfo& m) {
    if (const auto* cell = std::get_if<std::pair<int, int>>(&m.at))
        return "(" + std::to_string(cell->first) + "," + std::to_string(cell->second) + ")";
    return std::to_string(std::get<int>(m.at));
}

void print_report_text(const VerificationReport& r) {
    std::cout << to_string(r.id) << ": " << status_text(r.status)
              << " (series_order=" << r.series_order << ", enum_limit=" << r.enum_limit << ", "
              << r.elapsed_ms << "ms)\n";
    if (r.first_mismatch)
        std::cout << "  mismatch at " << mismatch_at_text(*r.first_mismatch)
                  << ": expected " << r.first_mismatch->expected << ", got "
                  << r.first_mismatch->actual << '\n';
    if (!r.notes.empty()) std::cout << "  note: " << r.notes << '\n';
}

void print_report_csv_row(const VerificationReport& r) {
    std::cout << to_string(r.id) << ',' << status_text(r.status) << ',' << r.series_order << ','
              << r.enum_limit << ',';
    if (r.first_mismatch)
        std::cout << csv_quote(mismatch_at_text(*r.first_mismatch)) << ','
                  << r.first_mismatch->expected << ',' << r.first_mismatch->actual;
    else
        std::cout << ",,";
    std::cout << ',' << csv_quote(r.notes) << '\n';
}

int cmd_verify(const std::string& target, int series_order, int enum_limit,
               const std::string& format) {
    std::vector<VerificationReport> reports;
    if (target == "all") {
        reports = verify_all(series_order, enum_limit);
    } else {
        reports.push_back(verify(parse_theorem_id(target), series_order, enum_limit));
    }

    if (format == "json") {
        if (target == "all") {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            std::cout << arr.dump(2) << '\n';
        } else {
            std::cout << report_json(reports.front()).dump(2) << '\n';
        }
    } else if (format == "csv") {
        std::cout << "id,status,series_order,enum_limit,mismatch_at,expected,actual,notes\n";
        for (const auto& r : reports) print_report_csv_row(r);
    } else {
        for (const auto& r : reports) print_report_text(r);
    }

    for (const auto& r : reports)
        if (r.status == VerifyStatus::fail) return 1;
    return 0;
}

int cmd_enumerate(const std::string& class_text, int weight, bool with_signed) {
    const ClassId cls = ClassId::parse(class_text);
    auto members = generate_class(cls, weight);
    std::vector<std::pair<Partition, ClassDecomposition>> at_weight;
    for (auto& m : members)
        if (m.first.weight() == weight) at_weight.push_back(std::move(m));
    std::sort(at_weight.begin(), at_weight.end(), [](const auto& a, const auto& b) {
        return a.first.reverse_lex_before(b.first);
    });
    for (const auto& [p, d] : at_weight) {
        std::cout << p.to_string();
        if (with_signed)
            std::cout << " param=" << d.parameter << " statistic=" << d.signed_statistic;
        std::cout << '\n';
    }
    return 0;
}

struct TableRow {
    int n;
    long long even, odd;
    long long predicted;
    long long difference() const { return even - odd; }
    bool match() const { return difference() == predicted; }
};

std::vector<TableRow> build_table(ClassId cls, int max_weight) {
    const TruncatedSeries pred =
        indicator_series(predicted_indicator(cls.kind), max_weight + 1);
    std::vector<TableRow> rows;
    if (cls.kind == ClassKind::init_k) {
        // The prediction for initial-2-repetitions splits by the parity of the
        // largest repeated part rather than by a signed statistic.
        auto even_t = signed_count_table(ClassId{ClassKind::b_even}, max_weight);
        auto odd_t = signed_count_table(ClassId{ClassKind::b_odd}, max_weight);
        for (int n = 0; n <= max_weight; ++n)
            rows.push_back({n, even_t[n].even_count + even_t[n].odd_count,
                            odd_t[n].even_count + odd_t[n].odd_count,
                            pred.coeff(n).get_si()});
    } else {
        auto table = signed_count_table(cls, max_weight);
        for (int n = 0; n <= max_weight; ++n)
            rows.push_back({n, table[n].even_count, table[n].odd_count, pred.coeff(n).get_si()});
    }
    return rows;
}

int cmd_table(const std::string& class_text, int max_weight, const std::string& format) {
    const ClassId cls = ClassId::parse(class_text);
    if (cls.kind == ClassKind::b_even || cls.kind == ClassKind::b_odd ||
        (cls.kind == ClassKind::init_k && cls.k != 2))
        throw std::invalid_argument("no pointwise prediction for class '" + class_text + "'");
    const auto rows = build_table(cls, max_weight);

    bool any_mismatch = false;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"n", r.n},
                           {"even", r.even},
                           {"odd", r.odd},
                           {"difference", r.difference()},
                           {"predicted", r.predicted},
                           {"match", r.match()}});
            any_mismatch |= !r.match();
        }
        std::cout << arr.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "n,even,odd,difference,predicted,match\n";
        for (const auto& r : rows) {
            std::cout << r.n << ',' << r.even << ',' << r.odd << ',' << r.difference() << ','
                      << r.predicted << ',' << (r.match() ? "true" : "false") << '\n';
            any_mismatch |= !r.match();
        }
    } else {
        std::cout << "n\teven\todd\tdifference\tpredicted\n";
        for (const auto& r : rows) {
            std::cout << r.n << '\t' << r.even << '\t' << r.odd << '\t' << r.difference() << '\t'
                      << r.predicted << (r.match() ? "" : "\t<- MISMATCH") << '\n';
            any_mismatch |= !r.match();
        }
    }
    return any_mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact truncated q-series and constrained partition toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    const int env_order = default_order();

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };

    // expand
    auto* expand = app.add_subcommand("expand", "print coefficients of a named series");
    std::string series_id;
    int order = env_order;
    expand->add_option("--series", series_id, "series identifier")->required();
    expand->add_option("--order", order, "number of coefficients")->capture_default_str();
    add_format(expand);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check identities against the registry");
    std::string target;
    int series_order = env_order;
    int enum_limit = 40;
    verify_cmd->add_option("--target", target, "theorem id or 'all'")->required();
    verify_cmd->add_option("--series-order", series_order, "series truncation order")
        ->capture_default_str();
    verify_cmd->add_option("--enum-limit", enum_limit, "enumeration weight limit")
        ->capture_default_str();
    add_format(verify_cmd);

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "list class members of one weight");
    std::string class_text;
    int weight = 0;
    bool with_signed = false;
    enum_cmd->add_option("--class", class_text, "class identifier")->required();
    enum_cmd->add_option("--weight", weight, "partition weight")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enum_cmd->add_flag("--signed", with_signed, "append parameter and signed statistic");

    // table
    auto* table_cmd = app.add_subcommand("table", "even/odd/difference table with prediction");
    std::string table_class;
    int max_weight = 40;
    table_cmd->add_option("--class", table_class, "class identifier")->required();
    table_cmd->add_option("--max", max_weight, "largest weight")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    add_format(table_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit 2; --help is success
    }

    try {
        if (expand->parsed()) return cmd_expand(series_id, order, format);
        if (verify_cmd->parsed()) return cmd_verify(target, series_order, enum_limit, format);
        if (enum_cmd->parsed()) return cmd_enumerate(class_text, weight, with_signed);
        if (table_cmd->parsed()) return cmd_table(table_class, max_weight, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
