// vandinv: command-line front end for the ESP, inversion and stability experiments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli_support.hpp"
#include "vandinv/error.hpp"
#include "vandinv/esp.hpp"
#include "vandinv/interpolation.hpp"
#include "vandinv/nodes.hpp"
#include "vandinv/serialize.hpp"
#include "vandinv/stability.hpp"
#include "vandinv/vandermonde.hpp"

using namespace vandinv;
using nlohmann::json;

namespace {

/// Node input shared by esp and invert: exactly one source must be given.
struct NodeArgs {
    std::string nodes;
    std::size_t roots = 0;
    std::string family;
    std::size_t count = 0;

    void attach(CLI::App* app) {
        app->add_option("--nodes", nodes, "comma-separated complex nodes, e.g. 1,2+0.5i,-i");
        app->add_option("--roots-of-unity", roots, "use the N-th roots of unity");
        app->add_option("--family", family, "node family (with --count)");
        app->add_option("--count", count, "node count for --family");
    }

    [[nodiscard]] NodeSet resolve() const {
        const int sources = !nodes.empty() + (roots > 0) + !family.empty();
        if (sources != 1) throw ArgumentError("give exactly one of --nodes, --roots-of-unity, --family");
        if (!nodes.empty()) return NodeSet(cli::parse_complex_list(nodes));
        if (roots > 0) return generate_nodes({NodeFamily::roots_of_unity, roots});
        if (count == 0) throw ArgumentError("--family needs --count");
        return generate_nodes({parse_node_family(family), count});
    }

    [[nodiscard]] json describe() const {
        if (!nodes.empty()) return {{"nodes", nodes}};
        if (roots > 0) return {{"roots_of_unity", roots}};
        return {{"family", family}, {"count", count}};
    }
};

template <class Writer>
void emit(const std::string& output, Writer&& write, const std::string& command, const json& params,
          const json& seed = nullptr) {
    if (output.empty()) {
        std::ostringstream buf;
        write(buf);
        std::cout << buf.str();
        return;
    }
    const auto path = cli::resolve_output(output);
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ArgumentError("cannot open " + path.string() + " for writing");
        write(out);
    }
    cli::write_manifest(command, params, {path}, seed);
    std::cerr << "wrote " << path.string() << '\n';
}

bool wants_json(const std::string& output, const std::string& format) {
    if (!format.empty()) {
        if (format != "csv" && format != "json") throw ArgumentError("--format must be csv or json");
        return format == "json";
    }
    return output.size() >= 5 && output.compare(output.size() - 5, 5, ".json") == 0;
}

std::string shift_model_name(ShiftModel m) { return m == ShiftModel::phase ? "phase" : "literal"; }

ShiftModel parse_shift_model(const std::string& name) {
    if (name == "phase") return ShiftModel::phase;
    if (name == "literal") return ShiftModel::literal;
    throw ArgumentError("unknown shift model '" + name + "' (expected phase or literal)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vandermonde inversion via elementary symmetric polynomials"};
    app.set_version_flag("--version", std::string(VANDINV_VERSION));
    app.require_subcommand(1);

    // esp
    auto* esp_cmd = app.add_subcommand("esp", "elementary symmetric polynomials of a node set");
    NodeArgs esp_nodes;
    esp_nodes.attach(esp_cmd);
    std::size_t esp_order = 0;
    bool esp_order_given = false;
    std::string esp_backend = "proposed";
    std::size_t esp_drop = 0;
    bool esp_all = false, esp_table = false, esp_scaled = false, esp_comp = false;
    std::string esp_output;
    esp_cmd->add_option("--order", esp_order, "ESP order n")->each([&](const std::string&) { esp_order_given = true; });
    esp_cmd->add_option("--backend", esp_backend, "proposed | traub | yang | mikkawy");
    esp_cmd->add_option("--drop", esp_drop, "drop this node first (1-based)");
    esp_cmd->add_flag("--all-orders", esp_all, "print every order 0..N");
    esp_cmd->add_flag("--table", esp_table, "print the full prefix table sigma_{n,j}");
    esp_cmd->add_flag("--scaled", esp_scaled, "scaled proposed recursion (no n! overflow)");
    esp_cmd->add_flag("--compensated", esp_comp, "compensated sums in the proposed recursion");
    esp_cmd->add_option("--output", esp_output, "write CSV to this file instead of stdout");

    // invert
    auto* inv_cmd = app.add_subcommand("invert", "inverse of the Vandermonde matrix");
    NodeArgs inv_nodes;
    inv_nodes.attach(inv_cmd);
    std::string inv_esp = "proposed", inv_backend = "closed-form", inv_output, inv_format;
    inv_cmd->add_option("--esp", inv_esp, "ESP backend for closed-form / wa-product");
    inv_cmd->add_option("--inverse", inv_backend, "closed-form | wa-product | baseline");
    inv_cmd->add_option("--output", inv_output, "output file (.csv or .json)");
    inv_cmd->add_option("--format", inv_format, "csv | json (default from extension, else csv)");

    // companion-table
    auto* ct_cmd = app.add_subcommand("companion-table", "companion-matrix NMSE on roots of unity");
    std::string ct_sizes = "5:50:5", ct_columns, ct_output;
    ct_cmd->add_option("--sizes", ct_sizes, "node counts, e.g. 5,10,20 or 5:50:5");
    ct_cmd->add_option("--columns", ct_columns,
                       "comma-separated inverse/esp combinations, e.g. closed-form/proposed,baseline");
    ct_cmd->add_option("--output", ct_output, "write CSV to this file instead of stdout");

    // noise-sweep
    auto* sw_cmd = app.add_subcommand("noise-sweep", "Monte Carlo sweep over perturbed roots of unity");
    SweepConfig sw;
    std::string sw_shift = "default", sw_mag = "default", sw_esp = "proposed", sw_inv = "closed-form",
                sw_model = "phase", sw_output = "sweep.csv";
    bool sw_serial = false, sw_json = false;
    sw_cmd->add_option("--n", sw.node_count, "node count");
    sw_cmd->add_option("--shift-axis", sw_shift, "sigma_S values (comma-separated, or 'default')");
    sw_cmd->add_option("--mag-axis", sw_mag, "sigma_M values (comma-separated, or 'default')");
    sw_cmd->add_option("--trials", sw.trials, "trials per cell");
    sw_cmd->add_option("--seed", sw.seed, "master seed");
    sw_cmd->add_option("--esp", sw_esp, "ESP backend");
    sw_cmd->add_option("--inverse", sw_inv, "inverse backend");
    sw_cmd->add_option("--shift-model", sw_model, "phase | literal");
    sw_cmd->add_flag("--serial", sw_serial, "run cells serially");
    sw_cmd->add_flag("--json", sw_json, "also write <output>.json");
    sw_cmd->add_option("--output", sw_output, "CSV output file");

    // interp
    auto* ip_cmd = app.add_subcommand("interp", "fit, super-resolve and score a test function");
    std::string ip_fn = "cos", ip_family = "chebyshev", ip_esp = "proposed", ip_inv = "closed-form",
                ip_output = "interp.csv";
    std::optional<double> ip_t;
    InterpConfig ip;
    ip_cmd->add_option("--fn", ip_fn, "cos | tanh | exp");
    ip_cmd->add_option("--family", ip_family, "node family");
    ip_cmd->add_option("--n", ip.count, "fit node count");
    ip_cmd->add_option("--t", ip_t, "function parameter (default 2 for cos, 1 otherwise)");
    ip_cmd->add_option("--esp", ip_esp, "ESP backend");
    ip_cmd->add_option("--inverse", ip_inv, "inverse backend");
    ip_cmd->add_option("--exclude", ip.exclude_per_side, "dense nodes excluded per side on intervals");
    ip_cmd->add_option("--output", ip_output, "per-node CSV output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    }

    try {
        if (*esp_cmd) {
            NodeSet nodes = esp_nodes.resolve();
            const EspMethod method = parse_esp_method(esp_backend);
            const ProposedOptions opts{esp_scaled, esp_comp};
            json params = esp_nodes.describe();
            params["backend"] = esp_backend;
            params["scaled"] = esp_scaled;
            params["compensated"] = esp_comp;
            std::optional<std::size_t> drop;
            if (esp_drop > 0) {
                if (esp_drop > nodes.size()) throw ArgumentError("--drop is out of range (nodes are 1-based)");
                drop = esp_drop - 1;
                params["drop"] = esp_drop;
            }

            if (esp_table) {
                if (method != EspMethod::traub && method != EspMethod::yang)
                    throw ArgumentError("--table is available for the traub and yang backends");
                const NodeSet set = drop ? nodes.without(*drop) : nodes;
                const EspTable table = method == EspMethod::traub ? esp_traub_table(set) : esp_yang_table(set);
                params["table"] = true;
                emit(esp_output, [&](std::ostream& o) { io::write_esp_table_csv(o, table); }, "esp", params);
                return cli::kExitOk;
            }

            std::vector<Complex> values =
                drop ? esp_dropped(nodes, *drop, method, opts) : esp_all_orders(nodes, method, opts);
            if (!esp_all) {
                if (!esp_order_given) throw ArgumentError("give --order or --all-orders");
                if (esp_order >= values.size())
                    throw ArgumentError("order " + std::to_string(esp_order) + " exceeds the node count " +
                                        std::to_string(values.size() - 1));
                if (method == EspMethod::proposed && !drop)
                    values = {esp_proposed(nodes, esp_order, opts)};
                else
                    values = {values[esp_order]};
                params["order"] = esp_order;
            } else {
                params["all_orders"] = true;
            }
            const std::size_t first = esp_all ? 0 : esp_order;
            emit(esp_output,
                 [&](std::ostream& o) {
                     o << "order,re,im,abs\r\n";
                     for (std::size_t k = 0; k < values.size(); ++k)
                         o << (first + k) << ',' << io::format_double(values[k].real()) << ','
                           << io::format_double(values[k].imag()) << ','
                           << io::format_double(std::abs(values[k])) << "\r\n";
                 },
                 "esp", params);
            return cli::kExitOk;
        }

        if (*inv_cmd) {
            const NodeSet nodes = inv_nodes.resolve();
            const InverseResult inv = invert(nodes, parse_inverse_backend(inv_backend), parse_esp_method(inv_esp));
            json params = inv_nodes.describe();
            params["esp"] = inv_esp;
            params["inverse"] = inv_backend;
            const bool as_json = wants_json(inv_output, inv_format);
            emit(inv_output,
                 [&](std::ostream& o) {
                     if (as_json)
                         o << io::inverse_to_json(inv).dump(2) << '\n';
                     else
                         io::write_inverse_csv(o, inv);
                 },
                 "invert", params);
            return cli::kExitOk;
        }

        if (*ct_cmd) {
            const auto sizes = cli::parse_size_list(ct_sizes);
            std::vector<CompanionColumn> columns;
            if (ct_columns.empty()) {
                columns = default_companion_columns();
            } else {
                std::stringstream ss(ct_columns);
                for (std::string item; std::getline(ss, item, ',');) columns.push_back(parse_companion_column(item));
            }
            const CompanionTable table = companion_table(sizes, columns);
            json labels = json::array();
            for (const auto& c : columns) labels.push_back(companion_column_label(c));
            const json params{{"sizes", sizes}, {"columns", labels}};
            emit(ct_output, [&](std::ostream& o) { io::write_companion_table_csv(o, table); }, "companion-table",
                 params);
            return cli::kExitOk;
        }

        if (*sw_cmd) {
            sw.shift_axis = cli::parse_axis(sw_shift);
            sw.mag_axis = cli::parse_axis(sw_mag);
            sw.esp = parse_esp_method(sw_esp);
            sw.inverse = parse_inverse_backend(sw_inv);
            sw.model = parse_shift_model(sw_model);
            sw.exec = sw_serial ? Execution::serial : Execution::parallel;
            const SweepGrid grid = noise_sweep(sw);
            const json params{{"n", sw.node_count},         {"shift_axis", sw.shift_axis},
                              {"mag_axis", sw.mag_axis},    {"trials", sw.trials},
                              {"esp", sw_esp},              {"inverse", sw_inv},
                              {"shift_model", shift_model_name(sw.model)}};
            const auto path = cli::resolve_output(sw_output);
            std::vector<std::filesystem::path> outputs{path};
            {
                std::ofstream out(path, std::ios::binary);
                if (!out) throw ArgumentError("cannot open " + path.string() + " for writing");
                io::write_sweep_csv(out, grid);
            }
            if (sw_json) {
                auto jpath = path;
                jpath += ".json";
                std::ofstream out(jpath, std::ios::binary);
                out << io::sweep_to_json(grid).dump(2) << '\n';
                outputs.push_back(jpath);
            }
            cli::write_manifest("noise-sweep", params, outputs, sw.seed);
            std::size_t failed = 0;
            for (const auto& c : grid.cells) failed += c.failed;
            std::cerr << "wrote " << path.string() << " (" << grid.cells.size() << " cells, " << failed
                      << " failed)\n";
            return cli::kExitOk;
        }

        if (*ip_cmd) {
            const FunctionKind kind = parse_function_kind(ip_fn);
            ip.function = {kind, ip_t.value_or(default_parameter(kind))};
            ip.family = parse_node_family(ip_family);
            ip.esp = parse_esp_method(ip_esp);
            ip.inverse = parse_inverse_backend(ip_inv);
            const InterpolationReport report = interp_experiment(ip);
            const json params{{"fn", ip_fn},         {"t", ip.function.t}, {"family", ip_family},
                              {"n", ip.count},       {"esp", ip_esp},      {"inverse", ip_inv},
                              {"exclude", ip.exclude_per_side}};
            const auto path = cli::resolve_output(ip_output);
            {
                std::ofstream out(path, std::ios::binary);
                if (!out) throw ArgumentError("cannot open " + path.string() + " for writing");
                io::write_interp_csv(out, report);
            }
            cli::write_manifest("interp", params, {path});
            std::cout << io::interp_summary_header() << "\r\n" << io::interp_summary_line(report) << "\r\n";
            return cli::kExitOk;
        }
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitUsage;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return cli::kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitNumerical;
    }
    return cli::kExitUsage;
}
