// Command-line front end.  Verdicts go to stdout, diagnostics to stderr;
// exit codes: 0 accepted/valid, 1 rejected/invalid, 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "combiproof.h"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitError = 2;

// RAII for C API strings.
struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { cp_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct FormulaHandle {
    cp_formula* ptr = nullptr;
    ~FormulaHandle() { cp_formula_free(ptr); }
};

struct ProofHandle {
    cp_proof* ptr = nullptr;
    ~ProofHandle() { cp_proof_free(ptr); }
};

int parse_formula_arg(const std::string& text, FormulaHandle& f) {
    OwnedString error;
    if (cp_formula_parse(text.c_str(), &f.ptr, &error.ptr) != CP_OK) {
        std::cerr << "error: " << error.str() << "\n";
        return kExitError;
    }
    return kExitAccepted;
}

int load_proof_arg(const std::string& path, ProofHandle& p) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitError;
    }
    OwnedString error;
    if (cp_proof_load(text->c_str(), &p.ptr, &error.ptr) != CP_OK) {
        std::cerr << "error: " << path << ": " << error.str() << "\n";
        return kExitError;
    }
    return kExitAccepted;
}

int cmd_taut(const std::string& text) {
    FormulaHandle f;
    if (int rc = parse_formula_arg(text, f)) return rc;
    int verdict = 0;
    cp_status status = cp_formula_is_tautology(f.ptr, 0, &verdict);
    if (status == CP_LIMIT_EXCEEDED) {
        std::cerr << "error: too many variables for the truth table\n";
        return kExitError;
    }
    std::cout << (verdict ? "TAUTOLOGY" : "NOT TAUTOLOGY") << "\n";
    return verdict ? kExitAccepted : kExitRejected;
}

int cmd_prove(const std::string& text, const std::string& out_path) {
    FormulaHandle f;
    if (int rc = parse_formula_arg(text, f)) return rc;
    ProofHandle proof;
    if (cp_prove(f.ptr, &proof.ptr) != CP_OK) {
        std::cerr << "error: not a tautology, no proof exists\n";
        return kExitRejected;
    }
    OwnedString doc{cp_proof_save(proof.ptr)};
    if (out_path.empty()) {
        std::cout << doc.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitError;
        }
        out << doc.str();
        std::cerr << "proof written to " << out_path << "\n";
    }
    return kExitAccepted;
}

int cmd_check(const std::string& path, bool mix) {
    ProofHandle proof;
    if (int rc = load_proof_arg(path, proof)) return rc;
    OwnedString verdict;
    cp_status status =
        cp_proof_verify(proof.ptr, mix || cp_proof_mix(proof.ptr), &verdict.ptr);
    std::cout << verdict.str() << "\n";
    return status == CP_OK ? kExitAccepted : kExitRejected;
}

int cmd_net_check(const std::string& path, bool mix) {
    ProofHandle proof;
    if (int rc = load_proof_arg(path, proof)) return rc;
    OwnedString verdict;
    cp_status status =
        cp_proof_net_check(proof.ptr, mix || cp_proof_mix(proof.ptr), &verdict.ptr);
    std::cout << verdict.str() << "\n";
    return status == CP_OK ? kExitAccepted : kExitRejected;
}

int cmd_cliques(const std::string& text) {
    FormulaHandle f;
    if (int rc = parse_formula_arg(text, f)) return rc;
    OwnedString listing{cp_formula_cliques(f.ptr)};
    std::cout << listing.str();
    return kExitAccepted;
}

int cmd_dot(const std::string& path) {
    ProofHandle proof;
    if (int rc = load_proof_arg(path, proof)) return rc;
    OwnedString figure{cp_proof_figure(proof.ptr)};
    std::cout << figure.str();
    return kExitAccepted;
}

int cmd_fuzz(std::size_t n, std::uint64_t seed, std::size_t max_leaves, std::size_t max_vars) {
    OwnedString report;
    cp_status status = cp_run_differential(n, seed, max_leaves, max_vars, &report.ptr);
    std::cout << report.str();
    if (status == CP_OK) return kExitAccepted;
    if (status == CP_REJECTED) return kExitRejected;
    std::cerr << "error: invalid fuzz configuration\n";
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial proof toolkit"};
    app.set_version_flag("--version", cp_version());
    app.require_subcommand(1);

    std::string formula_text, file_path, out_path;
    bool mix = false;
    std::size_t fuzz_n = 1000, fuzz_max_leaves = 10, fuzz_max_vars = 4;
    std::uint64_t fuzz_seed = 1;

    CLI::App* taut = app.add_subcommand("taut", "truth-table tautology check");
    taut->add_option("formula", formula_text, "formula text")->required();

    CLI::App* prove = app.add_subcommand("prove", "prove and emit a proof document");
    prove->add_option("formula", formula_text, "formula text")->required();
    prove->add_option("--out", out_path, "write the document to FILE instead of stdout");

    CLI::App* check = app.add_subcommand("check", "verify a proof document");
    check->add_option("file", file_path, "proof document")->required();
    check->add_flag("--mix", mix, "allow disconnected proof nets");

    CLI::App* cliques = app.add_subcommand("cliques", "list the cliques of a formula");
    cliques->add_option("formula", formula_text, "formula text")->required();

    CLI::App* net = app.add_subcommand("net-check", "check only the proof net of a document");
    net->add_option("file", file_path, "proof document")->required();
    net->add_flag("--mix", mix, "allow disconnected proof nets");

    CLI::App* dot = app.add_subcommand("dot", "emit a DOT figure for a proof document");
    dot->add_option("file", file_path, "proof document")->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "run the random differential harness");
    fuzz->add_option("--n", fuzz_n, "number of iterations");
    fuzz->add_option("--seed", fuzz_seed, "random seed");
    fuzz->add_option("--max-leaves", fuzz_max_leaves, "leaf bound for random formulas");
    fuzz->add_option("--max-vars", fuzz_max_vars, "variable bound for random formulas");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    if (taut->parsed()) return cmd_taut(formula_text);
    if (prove->parsed()) return cmd_prove(formula_text, out_path);
    if (check->parsed()) return cmd_check(file_path, mix);
    if (cliques->parsed()) return cmd_cliques(formula_text);
    if (net->parsed()) return cmd_net_check(file_path, mix);
    if (dot->parsed()) return cmd_dot(file_path);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_n, fuzz_seed, fuzz_max_leaves, fuzz_max_vars);
    return kExitError;
}
