#include "qspin/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "qspin/acceptance.hpp"
#include "qspin/error.hpp"

namespace qspin {

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int require(const std::optional<int>& v, const char* flag, int minimum)
{
    if (!v)
        throw usage_error(std::string("missing required flag ") + flag);
    if (*v < minimum)
        throw usage_error(std::string(flag) + " must be >= " + std::to_string(minimum));
    return *v;
}

std::string dump(const json& j)
{
    return j.dump(2) + '\n';
}

int cmd_verify(const cli_config& c, std::string& text)
{
    if (!c.id)
        throw usage_error("verify needs --id");
    const auto record = registry::instance().find(*c.id);
    const int order = c.order ? require(c.order, "--order", 1) : record.default_order;
    const auto report = verify(record, order);
    switch (c.format) {
    case output_format::json: text = dump(report_to_json(report)); break;
    case output_format::csv:
        text = "id,order,outcome,first_mismatch_q\n" + report.id + ',' + std::to_string(report.order) +
               ',' + (report.result == outcome::pass ? "pass" : "fail") + ',' +
               (report.first_mismatch ? std::to_string(report.first_mismatch->q) : "") + '\n';
        break;
    case output_format::text: text = report_to_text(report) + '\n'; break;
    }
    return report.result == outcome::pass ? exit_ok : exit_failed;
}

int cmd_verify_all(const cli_config& c, std::string& text)
{
    std::map<std::string, int> overrides;
    if (c.order) {
        const int order = require(c.order, "--order", 1);
        for (const auto& r : registry::instance().records())
            overrides[r.id] = order;
    }
    const auto reports = verify_all(overrides);
    bool all_pass = true;
    json arr = json::array();
    std::ostringstream os;
    if (c.format == output_format::csv)
        os << "id,order,outcome,first_mismatch_q\n";
    for (const auto& r : reports) {
        all_pass = all_pass && r.result == outcome::pass;
        switch (c.format) {
        case output_format::json: arr.push_back(report_to_json(r)); break;
        case output_format::csv:
            os << r.id << ',' << r.order << ',' << (r.result == outcome::pass ? "pass" : "fail") << ','
               << (r.first_mismatch ? std::to_string(r.first_mismatch->q) : "") << '\n';
            break;
        case output_format::text: os << report_to_text(r) << '\n'; break;
        }
    }
    text = c.format == output_format::json ? dump(arr) : os.str();
    return all_pass ? exit_ok : exit_failed;
}

int cmd_coeffs(const cli_config& c, std::string& text)
{
    qseries s(0);
    if (c.id) {
        const auto record = registry::instance().find(*c.id);
        const int order = c.order ? require(c.order, "--order", 1) : record.default_order;
        s = build_side(*c.id, c.which, order);
    } else if (c.weight) {
        const int n_max = require(c.n_max, "--n-max", 0);
        const auto cls = c.cls == partition_class::all ? weight_domain(*c.weight) : c.cls;
        s = weighted_gf(n_max, cls, *c.weight);
    } else {
        throw usage_error("coeffs needs --id or --weight");
    }
    switch (c.format) {
    case output_format::json: text = dump(series_to_json(s)); break;
    case output_format::csv:
        if (!s.is_symbol_free())
            throw usage_error("CSV output needs a symbol-free series; use --format json");
        text = series_to_csv(s);
        break;
    case output_format::text: text = series_to_text(s); break;
    }
    return exit_ok;
}

int cmd_partitions(const cli_config& c, std::string& text)
{
    const int n = require(c.n, "--n", 0);
    text = render_partitions(enumerate(n, c.cls), c.format);
    return exit_ok;
}

int cmd_table(const cli_config& c, std::string& text)
{
    const int n = c.n ? require(c.n, "--n", 0) : 6;
    const auto t = make_table_report(n);
    switch (c.format) {
    case output_format::json: text = dump(table_to_json(t)); break;
    case output_format::csv: text = table_to_csv(t); break;
    case output_format::text: text = table_to_text(t); break;
    }
    return exit_ok;
}

int cmd_suite(const cli_config& c, std::string& text)
{
    const auto results = run_acceptance();
    bool all_pass = true;
    json arr = json::array();
    std::ostringstream os;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        if (c.format == output_format::json)
            arr.push_back({{"criterion", r.number},
                           {"title", r.title},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"elapsed_ms", r.elapsed_ms}});
        else
            os << format_criterion(r) << '\n';
    }
    text = c.format == output_format::json ? dump(arr) : os.str();
    return all_pass ? exit_ok : exit_failed;
}

} // namespace

int run(const cli_config& config, std::ostream& out, std::ostream& err)
{
    std::string text;
    int code = exit_ok;
    try {
        if (config.command == "verify")
            code = cmd_verify(config, text);
        else if (config.command == "verify-all")
            code = cmd_verify_all(config, text);
        else if (config.command == "coeffs")
            code = cmd_coeffs(config, text);
        else if (config.command == "partitions")
            code = cmd_partitions(config, text);
        else if (config.command == "table")
            code = cmd_table(config, text);
        else if (config.command == "suite")
            code = cmd_suite(config, text);
        else
            throw usage_error("unknown command '" + config.command + "'");
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (config.out_path) {
        std::ofstream file(*config.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << *config.out_path << " for writing\n";
            return exit_usage;
        }
        file << text;
    } else {
        out << text;
    }
    return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of q-series and weighted partition identities", "qspin"};
    app.require_subcommand(1);

    cli_config config;
    std::string format = "text", cls = "all", weight, which = "lhs";

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", config.out_path, "Write output to PATH instead of stdout");
    };

    auto* verify_cmd = app.add_subcommand("verify", "Verify one identity to a truncation order");
    verify_cmd->add_option("--id", config.id, "Identity id");
    verify_cmd->add_option("--order", config.order, "Truncation order (default: the identity's)");
    add_format(verify_cmd);

    auto* all_cmd = app.add_subcommand("verify-all", "Verify every registered identity");
    all_cmd->add_option("--order", config.order, "Truncation order for every identity");
    add_format(all_cmd);

    auto* coeffs_cmd = app.add_subcommand("coeffs", "Dump the coefficients of a series");
    coeffs_cmd->add_option("--id", config.id, "Identity id");
    coeffs_cmd->add_option("--side", which, "Side of the identity")
        ->check(CLI::IsMember({"lhs", "rhs"}));
    coeffs_cmd->add_option("--order", config.order, "Truncation order");
    coeffs_cmd->add_option("--weight", weight, "Weighted partition generating function")
        ->check(CLI::IsMember({"w1", "w2", "what1", "what2"}));
    coeffs_cmd->add_option("--class", cls, "Partition class")->check(CLI::IsMember({"all", "d", "a"}));
    coeffs_cmd->add_option("--n-max", config.n_max, "Largest partition size");
    add_format(coeffs_cmd);

    auto* parts_cmd = app.add_subcommand("partitions", "List partitions of n with statistics");
    parts_cmd->add_option("--n", config.n, "Partition size");
    parts_cmd->add_option("--class", cls, "Partition class")->check(CLI::IsMember({"all", "d", "a"}));
    add_format(parts_cmd);

    auto* table_cmd = app.add_subcommand("table", "Weighted table of the partitions of n");
    table_cmd->add_option("--n", config.n, "Partition size (default 6)");
    add_format(table_cmd);

    auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance suite");
    add_format(suite_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.format = *parse_output_format(format);
    config.which = which == "rhs" ? side::rhs : side::lhs;
    config.cls = cls == "d" ? partition_class::distinct
                 : cls == "a" ? partition_class::a_set
                              : partition_class::all;
    if (!weight.empty())
        config.weight = weight == "w1"      ? weight_kind::w1
                        : weight == "w2"    ? weight_kind::w2
                        : weight == "what1" ? weight_kind::what1
                                            : weight_kind::what2;
    return run(config, out, err);
}

} // namespace qspin
