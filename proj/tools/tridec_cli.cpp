#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tridec/tridec.h"

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int api_failure(const char* what) {
    std::cerr << "tridec: " << what << ": " << tridec_last_error() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangular decomposition of polynomial systems with bound reports"};
    std::string input, mode = "decompose", order, out, bypass;
    std::optional<unsigned> m;
    std::uint64_t seed = 1;
    bool verify = false;
    unsigned n = 0, d = 0, r = 0;
    app.add_option("--input", input, "Polynomial file, one polynomial per line");
    app.add_option("--mode", mode, "decompose, unmixed-only, bounds-only or verify")
        ->check(CLI::IsMember({"decompose", "unmixed-only", "bounds-only", "verify"}));
    app.add_option("--order", order, "Variable order, lowest first: x1,x2,...");
    app.add_option("--m", m, "Codimension used for the bound block");
    app.add_option("--seed", seed, "Seed for generic choices");
    app.add_option("--out", out, "Write the JSON report here instead of standard output");
    app.add_flag("--verify", verify, "Check the decomposition against the split-linear oracle");
    app.add_option("--bypass-chains", bypass, "Chain-family file replacing the computed candidate chains");
    app.add_option("--n", n, "bounds-only: number of variables");
    app.add_option("--d", d, "bounds-only: degree bound of the input");
    app.add_option("--r", r, "bounds-only: index of the last input polynomial");
    CLI11_PARSE(app, argc, argv);

    if (mode != "bounds-only" && input.empty()) {
        std::cerr << "tridec: --input is required for mode " << mode << "\n";
        return 1;
    }

    tridec_config* cfg = nullptr;
    if (tridec_config_new(&cfg) != TRIDEC_OK) return api_failure("config");
    struct Guard {
        tridec_config* c;
        ~Guard() { tridec_config_free(c); }
    } guard{cfg};

    if (tridec_config_set_mode(cfg, mode.c_str()) != TRIDEC_OK) return api_failure("mode");
    if (tridec_config_set_order(cfg, order.c_str()) != TRIDEC_OK) return api_failure("order");
    if (m && tridec_config_set_m(cfg, *m) != TRIDEC_OK) return api_failure("m");
    tridec_config_set_seed(cfg, seed);
    tridec_config_set_verify(cfg, verify ? 1 : 0);
    tridec_config_set_bound_params(cfg, n, d, r);
    if (!bypass.empty()) {
        auto text = read_file(bypass);
        if (!text) {
            std::cerr << "tridec: cannot read " << bypass << "\n";
            return 1;
        }
        tridec_config_set_bypass(cfg, text->c_str());
    }

    tridec_report* rep = nullptr;
    tridec_run_file(cfg, input.empty() ? nullptr : input.c_str(), &rep);
    if (!rep) return api_failure("run");
    int code = tridec_report_exit_code(rep);
    std::string json = tridec_report_json(rep);
    if (code != 0) {
        std::string msg = tridec_report_error(rep);
        std::size_t line = tridec_report_error_line(rep);
        std::cerr << "tridec: " << input << ": ";
        if (line > 0 && msg.rfind("line ", 0) != 0) std::cerr << "line " << line << ": ";
        std::cerr << msg << "\n";
    }
    tridec_report_free(rep);

    if (out.empty()) {
        std::cout << json;
    } else {
        std::ofstream os(out, std::ios::binary);
        if (!os || !(os << json)) {
            std::cerr << "tridec: cannot write " << out << "\n";
            return 1;
        }
    }
    return code;
}
