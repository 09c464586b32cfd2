// fanshift: verification runs and SVG figures for the shift on X_H and the
// fans F_a.
//
//   fanshift render <fig1|fig2|fig3|fig4|fig5|fig6|glue> --out PATH [--depth D] [--a LIST]
//   fanshift verify <name> [--key value ...] [--report PATH] [--config FILE] [--timings]
//   fanshift schema [--out PATH]
//
// Exit codes: 0 pass, 1 fail (report carries witnesses), 2 usage error.
// Parameter precedence: flags, then the key=value config file, then
// FANSHIFT_SEED for seeds, then defaults.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fanshift/fanshift.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fanshift::UsageError("cannot read config file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw fanshift::UsageError(path + ":" + std::to_string(number) + ": expected key=value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fanshift::UsageError("cannot write " + path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fanshift: shift maps on Mahavier products and smooth fan models"};
    app.require_subcommand(1);

    // render
    auto* render = app.add_subcommand("render", "Render a figure as SVG");
    std::string figure, render_out, glue_a = "1,4";
    int render_depth = 4;
    render->add_option("figure", figure, "fig1 | fig2 | fig3 | fig4 | fig5 | fig6 | glue")->required();
    render->add_option("--out", render_out, "Output SVG path")->required();
    render->add_option("--depth", render_depth, "Cantor depth")->check(CLI::Range(1, 12));
    render->add_option("--a", glue_a, "Gluing parameter for the glue figure, e.g. 1,4");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification and write a JSON report");
    std::string name, report_path, config_path;
    bool timings = false;
    verify->add_option("name", name, "decomposition | diam | cantor | impression | hlavna | quotient | juma | distinguish | orbit")
        ->required();
    verify->add_option("--report", report_path, "Report path (stdout when omitted)");
    verify->add_option("--config", config_path, "key=value parameter file");
    verify->add_flag("--timings", timings, "Record wall-clock timings in the report");
    std::set<std::string> keys;
    for (const auto& [n, entry] : fanshift::verify_registry()) {
        for (const auto& [key, spec] : entry.spec) keys.insert(key);
    }
    std::map<std::string, std::string> flag_values;
    for (const auto& key : keys) verify->add_option("--" + key, flag_values[key], "parameter " + key);

    // schema
    auto* schema = app.add_subcommand("schema", "Print the JSON schema of verification reports");
    std::string schema_out;
    schema->add_option("--out", schema_out, "Write the schema to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*render) {
            const fanshift::AParam a([&] {
                std::vector<int> v;
                std::stringstream ss(glue_a);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    try {
                        v.push_back(std::stoi(item));
                    } catch (const std::exception&) {
                        throw fanshift::UsageError("--a: not an integer list: " + glue_a);
                    }
                }
                return v;
            }());
            write_file(render_out, fanshift::render_figure(figure, render_depth, a));
            return exit_pass;
        }

        if (*schema) {
            const std::string text = fanshift::report_schema().dump(2) + "\n";
            if (schema_out.empty()) {
                std::cout << text;
            } else {
                write_file(schema_out, text);
            }
            return exit_pass;
        }

        const auto& registry = fanshift::verify_registry();
        const auto entry = registry.find(name);
        if (entry == registry.end()) throw fanshift::UsageError("unknown verification: " + name);

        std::map<std::string, std::string> given;
        if (const char* env = std::getenv("FANSHIFT_SEED"); env && entry->second.spec.count("seed")) {
            given["seed"] = env;
        }
        if (!config_path.empty()) {
            for (const auto& [key, value] : read_config(config_path)) {
                if (!keys.count(key)) throw fanshift::UsageError("config: unknown key " + key);
                if (entry->second.spec.count(key)) given[key] = value;
            }
        }
        for (const auto& key : keys) {
            if (verify->count("--" + key) == 0) continue;
            if (!entry->second.spec.count(key)) {
                throw fanshift::UsageError("--" + key + " is not a parameter of verify " + name);
            }
            given[key] = flag_values[key];
        }

        fanshift::Report report;
        try {
            report = fanshift::run_verify(name, given, timings);
        } catch (const fanshift::UsageError&) {
            throw;
        } catch (const fanshift::Error& e) {
            report.name = name;
            report.params = fanshift::Params(entry->second.spec, given).to_json();
            report.pass = false;
            report.witness({{"kind", "error"}, {"detail", e.what()}});
        }
        const std::string text = report.dump();
        if (report_path.empty()) {
            std::cout << text;
        } else {
            write_file(report_path, text);
        }
        return report.pass ? exit_pass : exit_fail;
    } catch (const fanshift::UsageError& e) {
        std::cerr << "fanshift: " << e.what() << "\n";
        return exit_usage;
    } catch (const fanshift::DomainError& e) {
        std::cerr << "fanshift: " << e.what() << "\n";
        return exit_usage;
    }
}
