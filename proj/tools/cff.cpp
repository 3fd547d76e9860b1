
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cff/report.hpp"

int main(int argc, char** argv) {
    cff::RunConfig cfg;
    std::string out;
    CLI::App app{"Cyclotomic function fields with quadratic modulus: construction and verification"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("-q", cfg.q, "field size (prime power)")->required();
    app.add_option("-M", cfg.modulus, "monic irreducible quadratic, e.g. \"T^2+1\"")->required();
    app.add_option("--gamma", cfg.gamma, "nonzero element of GF(q)")->capture_default_str();
    app.add_option("-k", cfg.k, "extension degree for count")->capture_default_str()->check(CLI::Range(1u, 64u));
    app.add_option("--out", out, "write the JSON report here instead of stdout");
    app.add_option("--threads", cfg.threads, "worker threads for point counting")
        ->capture_default_str()
        ->check(CLI::Range(1u, 256u));

    for (const char* name : {"construct", "genus", "count", "zeta", "aut", "lspaces"})
        app.add_subcommand(name, std::string("run the ") + name + " pipeline");
    auto* verify = app.add_subcommand("verify", "run checks and report pass/fail per claim");
    verify->add_option("which", cfg.which, "genus|count|zeta|aut|lspaces|all")
        ->capture_default_str()
        ->check(CLI::IsMember({"genus", "count", "zeta", "aut", "lspaces", "all"}));

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();

    cff::Json rep;
    int code = 1;
    try {
        const cff::RunResult r = cff::run(cfg);
        rep = r.report;
        code = r.ok ? 0 : 1;
    } catch (const cff::Error& e) {
        rep = cff::error_report(cfg, e);
        std::cerr << "error " << cff::to_string(e.code()) << ": " << e.what() << "\n";
    }
    const std::string text = rep.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return 1;
        }
        f << text;
    }
    return code;
}
