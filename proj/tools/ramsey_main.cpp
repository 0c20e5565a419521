#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ramsey/commands.hpp"

namespace {

using ramsey::CommandResult;
using ramsey::Json;
using ramsey::RunConfig;

std::optional<Json> load_json(const std::string& path, std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open " + path;
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    Json j = Json::parse(buf.str(), nullptr, false);
    if (j.is_discarded()) {
        error = "not valid JSON: " + path;
        return std::nullopt;
    }
    return j;
}

int emit(const CommandResult& result, const std::string& out_path) {
    const std::string text = ramsey::canonical_dump(result.output);
    if (out_path.empty() || out_path == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
            return ramsey::kExitUsage;
        }
        out << text;
    }
    return result.exit_code;
}

void add_config_flags(CLI::App* cmd, RunConfig& cfg, std::string& mode) {
    cmd->add_option("--cap-hom", cfg.limits.hom_cap, "max morphisms per hom-set enumeration");
    cmd->add_option("--cap-positions", cfg.limits.arrow_positions,
                    "max coloring positions per arrow check");
    cmd->add_option("--cap-colorings", cfg.limits.coloring_cap,
                    "max colorings swept in exhaustive mode");
    cmd->add_option("--cap-nodes", cfg.limits.node_cap, "node budget for backtrack search");
    cmd->add_option("--jobs", cfg.limits.jobs, "worker count for the partitioned search");
    cmd->add_option("--mode", mode, "search mode: exhaustive or backtrack")
        ->check(CLI::IsMember({"exhaustive", "backtrack"}));
    cmd->add_option("--seed", cfg.seed, "seed for sampled verification");
    cmd->add_option("--samples", cfg.samples, "colorings per sampled verification");
    cmd->add_option("--ground-window", cfg.ground_window,
                    "ground sizes tried above the minimum in witness searches");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey arrow verification and witness transfer"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string mode = "backtrack";
    std::string out_path;

    auto* verify = app.add_subcommand(
        "verify", "decide C -> (B)^A_k for three same-kind objects");
    std::string va, vb, vc;
    int colors = 2;
    verify->add_option("A", va, "bottom object JSON file")->required();
    verify->add_option("B", vb, "middle object JSON file")->required();
    verify->add_option("C", vc, "target object JSON file")->required();
    verify->add_option("-k,--colors", colors, "number of colors");
    verify->add_option("-o,--out", out_path, "report path (default stdout)");
    add_config_flags(verify, cfg, mode);

    auto* transfer = app.add_subcommand(
        "transfer", "run one construction stage and emit a certificate");
    std::string stage, transfer_input;
    transfer->add_option("stage", stage,
                         "phi | lift | product | closure | dagger | star | "
                         "sigma-reduce | pipeline")
        ->required();
    transfer->add_option("input", transfer_input, "stage input JSON file")->required();
    transfer->add_option("-o,--out", out_path, "certificate path (default stdout)");
    add_config_flags(transfer, cfg, mode);

    auto* check = app.add_subcommand("check", "replay a certificate and compare bytes");
    std::string cert_path;
    check->add_option("certificate", cert_path, "certificate JSON file")->required();
    check->add_option("-o,--out", out_path, "replay report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // map every parse failure onto the usage exit code; --help stays 0
        const int code = app.exit(e);
        return code == 0 ? 0 : ramsey::kExitUsage;
    }
    cfg.mode = ramsey::mode_from_name(mode);

    std::string error;
    try {
        if (verify->parsed()) {
            const auto ja = load_json(va, error);
            const auto jb = ja ? load_json(vb, error) : std::nullopt;
            const auto jc = jb ? load_json(vc, error) : std::nullopt;
            if (!jc) {
                std::fprintf(stderr, "%s\n", error.c_str());
                return ramsey::kExitMalformed;
            }
            return emit(ramsey::cmd_verify(*ja, *jb, *jc, colors, cfg), out_path);
        }
        if (transfer->parsed()) {
            const auto values = load_json(transfer_input, error);
            if (!values) {
                std::fprintf(stderr, "%s\n", error.c_str());
                return ramsey::kExitMalformed;
            }
            return emit(ramsey::cmd_transfer(stage, *values, cfg), out_path);
        }
        const auto cert = load_json(cert_path, error);
        if (!cert) {
            std::fprintf(stderr, "%s\n", error.c_str());
            return ramsey::kExitMalformed;
        }
        return emit(ramsey::cmd_check(*cert), out_path);
    } catch (const ramsey::Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return ramsey::kExitStage;
    }
}
