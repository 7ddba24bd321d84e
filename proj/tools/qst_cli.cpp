#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qst/qst.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_code_for(qst_status status) {
    return status == QST_ERR_IO ? kExitFail : kExitUsage;
}

int report_error(qst_status status) {
    std::fprintf(stderr, "error (%s): %s\n", qst_status_name(status), qst_last_error());
    return exit_code_for(status);
}

struct RunArgs {
    int m = 2;
    int n = 2;
    int sender = 0;
    int receiver = 1;
    double eps1 = 0.01;
    double eps2 = 0.01;
    std::string backend = "subspace";
    std::string pairing = "theorem";
    int h1 = 0;
    int h2 = 0;
    double free_angle = 0.0;
    std::string out;
    std::string dump_state;
};

qst_backend parse_backend(const std::string& name) {
    if (name == "full") return QST_BACKEND_FULL;
    if (name == "both") return QST_BACKEND_BOTH;
    return QST_BACKEND_SUBSPACE;
}

qst_pairing parse_pairing(const std::string& name) {
    return name == "box" ? QST_PAIRING_BOX : QST_PAIRING_THEOREM;
}

std::string trimmed(const std::string& s) {
    const size_t lo = s.find_first_not_of(" \t\r");
    if (lo == std::string::npos) return "";
    const size_t hi = s.find_last_not_of(" \t\r");
    return s.substr(lo, hi - lo + 1);
}

// Flat key = value lines, # comments; keys mirror the long flag names. The
// values are loaded before CLI11 parses argv, so flags override them.
bool load_config_file(const std::string& path, std::map<std::string, std::string>& out,
                      std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open config file " + path;
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trimmed(line.substr(0, line.find('#')));
        if (text.empty()) continue;
        const size_t eq = text.find('=');
        if (eq == std::string::npos) {
            error = path + ":" + std::to_string(lineno) + ": expected key = value";
            return false;
        }
        const std::string key = trimmed(text.substr(0, eq));
        const std::string value = trimmed(text.substr(eq + 1));
        if (key.empty() || value.empty()) {
            error = path + ":" + std::to_string(lineno) + ": expected key = value";
            return false;
        }
        out[key] = value;
    }
    return true;
}

// Finds --config in raw argv so the file can seed defaults ahead of parsing.
bool find_config_flag(int argc, char** argv, std::string& path, std::string& error) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config") {
            if (i + 1 >= argc) {
                error = "--config needs a file path";
                return false;
            }
            path = argv[i + 1];
            return true;
        }
        if (arg.rfind("--config=", 0) == 0) {
            path = arg.substr(9);
            return true;
        }
    }
    return true;
}

struct ConfigBinding {
    std::map<std::string, int*> ints;
    std::map<std::string, double*> doubles;
    std::map<std::string, std::string*> strings;

    bool apply(const std::map<std::string, std::string>& kv, std::string& error) const {
        for (const auto& [key, value] : kv) {
            try {
                if (auto it = ints.find(key); it != ints.end()) {
                    *it->second = std::stoi(value);
                    continue;
                }
                if (auto it = doubles.find(key); it != doubles.end()) {
                    *it->second = std::stod(value);
                    continue;
                }
            } catch (const std::exception&) {
                error = "config key " + key + " has a non-numeric value: " + value;
                return false;
            }
            if (auto it = strings.find(key); it != strings.end()) {
                *it->second = value;
                continue;
            }
            error = "unknown config key: " + key;
            return false;
        }
        return true;
    }
};

int cmd_run(const RunArgs& args) {
    qst_config* cfg = qst_config_create();
    if (!cfg) {
        std::fprintf(stderr, "error: out of memory\n");
        return kExitUsage;
    }
    qst_status status = QST_OK;
    auto apply = [&](qst_status s) {
        if (status == QST_OK) status = s;
    };
    apply(qst_config_set_graph(cfg, args.m, args.n));
    apply(qst_config_set_endpoints(cfg, args.sender, args.receiver));
    apply(qst_config_set_epsilons(cfg, args.eps1, args.eps2));
    apply(qst_config_set_backend(cfg, parse_backend(args.backend)));
    apply(qst_config_set_pairing(cfg, parse_pairing(args.pairing)));
    apply(qst_config_set_free_angle(cfg, args.free_angle));
    apply(qst_config_set_steps(cfg, args.h1, args.h2));
    apply(qst_config_set_state_dump(cfg,
                                    args.dump_state.empty() ? nullptr : args.dump_state.c_str()));

    qst_report report{};
    if (status == QST_OK) status = qst_run(cfg, &report);
    qst_config_destroy(cfg);
    if (status != QST_OK) return report_error(status);

    char row[512];
    if (qst_report_to_csv(&report, row, sizeof(row)) != QST_OK) return report_error(QST_ERR_INTERNAL);
    std::printf("%s%s", qst_report_csv_header(), row);

    if (!args.out.empty()) {
        std::FILE* f = std::fopen(args.out.c_str(), "wb");
        if (!f) {
            std::fprintf(stderr, "error: cannot open %s\n", args.out.c_str());
            return kExitFail;
        }
        const bool ok = std::fputs(qst_report_csv_header(), f) >= 0 && std::fputs(row, f) >= 0;
        if (std::fclose(f) != 0 || !ok) {
            std::fprintf(stderr, "error: cannot write %s\n", args.out.c_str());
            return kExitFail;
        }
    }
    return report.bound_satisfied ? kExitPass : kExitFail;
}

int cmd_sweep(const RunArgs& args, const qst_sweep_spec& spec) {
    const qst_status status = qst_sweep(&spec, args.out.c_str());
    if (status != QST_OK) return report_error(status);
    return kExitPass;
}

int cmd_verify(const std::string& level_name) {
    const qst_verify_level level =
        level_name == "full" ? QST_VERIFY_FULL : QST_VERIFY_FAST;
    size_t count = 0;
    if (qst_verify(level, nullptr, 0, &count, nullptr) != QST_OK)
        return report_error(QST_ERR_INTERNAL);
    std::vector<qst_suite_result> results(count);
    int all_pass = 0;
    const qst_status status = qst_verify(level, results.data(), results.size(), &count, &all_pass);
    if (status != QST_OK) return report_error(status);

    std::printf("%-22s %-14s %-10s %-6s %s\n", "suite", "max residual", "tolerance", "pass",
                "detail");
    for (size_t i = 0; i < count; ++i)
        std::printf("%-22s %-14.3e %-10.0e %-6s %s\n", results[i].name, results[i].max_residual,
                    results[i].tolerance, results[i].pass ? "yes" : "NO", results[i].detail);
    std::printf("%s\n", all_pass ? "all suites passed" : "FAILED");
    return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    RunArgs args;
    qst_sweep_spec spec{3, 40, 1, 40, 0.01, 0.01, QST_SWEEP_SAME, QST_BACKEND_SUBSPACE,
                        QST_PAIRING_THEOREM, 0.0, 0};
    std::string sweep_case = "same";
    std::string level = "fast";
    std::string config_path;

    {
        std::string error;
        if (!find_config_flag(argc, argv, config_path, error)) {
            std::fprintf(stderr, "error: %s\n", error.c_str());
            return kExitUsage;
        }
        if (!config_path.empty()) {
            std::map<std::string, std::string> kv;
            if (!load_config_file(config_path, kv, error)) {
                std::fprintf(stderr, "error: %s\n", error.c_str());
                return kExitUsage;
            }
            ConfigBinding binding;
            binding.ints = {{"m", &args.m},           {"n", &args.n},
                            {"sender", &args.sender}, {"receiver", &args.receiver},
                            {"h1", &args.h1},         {"h2", &args.h2},
                            {"m-min", &spec.m_lo},    {"m-max", &spec.m_hi},
                            {"n-min", &spec.n_lo},    {"n-max", &spec.n_hi},
                            {"threads", &spec.threads}};
            binding.doubles = {{"eps1", &args.eps1},
                               {"eps2", &args.eps2},
                               {"free-angle", &args.free_angle}};
            binding.strings = {{"backend", &args.backend},
                               {"pairing", &args.pairing},
                               {"case", &sweep_case},
                               {"level", &level},
                               {"out", &args.out},
                               {"dump-state", &args.dump_state}};
            if (!binding.apply(kv, error)) {
                std::fprintf(stderr, "error: %s\n", error.c_str());
                return kExitUsage;
            }
        }
    }

    CLI::App app{"Quantum state transfer on complete bipartite graphs"};
    app.set_version_flag("--version", qst_version());
    app.require_subcommand(1);

    auto add_common_options = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path,
                        "Flat key = value file supplying defaults; flags override it");
        cmd->add_option("--eps1", args.eps1, "Stage 1 error budget in (0, 1]");
        cmd->add_option("--eps2", args.eps2, "Stage 2 error budget in (0, 1]");
        cmd->add_option("--backend", args.backend, "Evolution backend")
            ->check(CLI::IsMember({"full", "subspace", "both"}));
        cmd->add_option("--pairing", args.pairing,
                        "Oracle placement for the cross-partition stage 2")
            ->check(CLI::IsMember({"box", "theorem"}));
        cmd->add_option("--free-angle", args.free_angle,
                        "Value used for the unconstrained schedule angles");
    };

    CLI::App* run = app.add_subcommand("run", "Simulate one transfer and report fidelities");
    run->add_option("--m", args.m, "Left partition size")->check(CLI::PositiveNumber);
    run->add_option("--n", args.n, "Right partition size")->check(CLI::PositiveNumber);
    run->add_option("--sender", args.sender, "Sender vertex index");
    run->add_option("--receiver", args.receiver, "Receiver vertex index");
    run->add_option("--h1", args.h1, "Stage 1 step count override (0 = derive)");
    run->add_option("--h2", args.h2, "Stage 2 step count override (0 = derive)");
    run->add_option("--out", args.out, "Also write the report CSV to this file");
    run->add_option("--dump-state", args.dump_state, "Write the final state CSV to this file");
    add_common_options(run);

    CLI::App* sweep = app.add_subcommand("sweep", "Scan a grid of graph sizes");
    sweep->add_option("--m-min", spec.m_lo, "Smallest left partition size");
    sweep->add_option("--m-max", spec.m_hi, "Largest left partition size");
    sweep->add_option("--n-min", spec.n_lo, "Smallest right partition size");
    sweep->add_option("--n-max", spec.n_hi, "Largest right partition size");
    sweep->add_option("--case", sweep_case, "Which sender/receiver placement to sweep")
        ->check(CLI::IsMember({"same", "diff", "both"}));
    sweep->add_option("--threads", spec.threads, "Worker threads (0 = automatic)");
    CLI::Option* sweep_out = sweep->add_option("--out", args.out, "Output CSV path");
    add_common_options(sweep);

    CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--config", config_path,
                       "Flat key = value file supplying defaults; flags override it");
    verify->add_option("--level", level, "Suite size")->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (run->parsed()) return cmd_run(args);
    if (sweep->parsed()) {
        if (args.out.empty()) {
            std::fprintf(stderr, "error: sweep needs --out (or out= in the config file)\n");
            return kExitUsage;
        }
        (void)sweep_out;
        spec.eps1 = args.eps1;
        spec.eps2 = args.eps2;
        spec.backend = parse_backend(args.backend);
        spec.pairing = parse_pairing(args.pairing);
        spec.free_angle = args.free_angle;
        spec.cases = sweep_case == "diff"   ? QST_SWEEP_DIFF
                     : sweep_case == "both" ? QST_SWEEP_BOTH
                                            : QST_SWEEP_SAME;
        return cmd_sweep(args, spec);
    }
    return cmd_verify(level);
}
