#include "hyperfun/job.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

void report_input_error(const std::string& message) {
    nlohmann::json rec = {{"error", {{"type", "parse"}, {"message", message}}}};
    std::cerr << rec.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluator and verifier for confluent hypergeometric series "
                 "and singular Helmholtz fundamental solutions"};

    std::string command;
    std::string config_path = "-";
    std::string output_path;

    app.add_option("command", command,
                   "One of: eval-ha, eval-fa, eval-q, verify-pde, verify-system, "
                   "verify-decomposition, singularity-scan")
        ->required();
    app.add_option("--config", config_path,
                   "Path to a JSON job config ('-' reads stdin)");
    app.add_option("--output", output_path,
                   "Write results here instead of the config's 'output' path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!hyperfun::is_known_command(command)) {
        report_input_error("unknown command '" + command + "'");
        return 2;
    }

    std::string text;
    if (config_path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) {
            report_input_error("cannot open config file '" + config_path + "'");
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    nlohmann::json config;
    try {
        config = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        report_input_error(e.what());
        return 2;
    }

    return hyperfun::run_job(command, config, output_path, std::cout, std::cerr);
}
