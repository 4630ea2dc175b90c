#include "combiproof.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "comb_proof.hpp"
#include "formula.hpp"
#include "proof_io.hpp"
#include "resolution.hpp"
#include "sequent.hpp"

struct cp_formula {
    combiproof::Formula value;
};

struct cp_proof {
    combiproof::CombinatorialProof value;
    bool mix = false;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** error, const std::string& message) {
    if (error) *error = dup_string(message);
}

}  // namespace

extern "C" {

const char* cp_version(void) { return "1.0.0"; }

void cp_string_free(char* s) { std::free(s); }

cp_status cp_formula_parse(const char* text, cp_formula** out, char** error) {
    if (!text || !out) {
        set_error(error, "null argument");
        return CP_BAD_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto f = combiproof::to_nnf(combiproof::parse_formula(text));
        *out = new cp_formula{std::move(f)};
        return CP_OK;
    } catch (const combiproof::ParseError& e) {
        set_error(error, e.what());
        return CP_PARSE_ERROR;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return CP_BAD_ARGUMENT;
    }
}

void cp_formula_free(cp_formula* f) { delete f; }

char* cp_formula_print(const cp_formula* f) {
    if (!f) return nullptr;
    try {
        return dup_string(combiproof::to_string(f->value));
    } catch (...) {
        return nullptr;
    }
}

size_t cp_formula_leaf_count(const cp_formula* f) { return f ? f->value.leaf_count() : 0; }

size_t cp_formula_variable_count(const cp_formula* f) {
    return f ? combiproof::variables(f->value).size() : 0;
}

cp_status cp_formula_is_tautology(const cp_formula* f, size_t max_vars, int* verdict) {
    if (!f || !verdict) return CP_BAD_ARGUMENT;
    try {
        const size_t cap = max_vars == 0 ? combiproof::kDefaultVariableCap : max_vars;
        if (combiproof::variables(f->value).size() > cap) return CP_LIMIT_EXCEEDED;
        *verdict = combiproof::is_tautology(f->value) ? 1 : 0;
        return CP_OK;
    } catch (const std::exception&) {
        return CP_BAD_ARGUMENT;
    }
}

char* cp_formula_cliques(const cp_formula* f) {
    if (!f) return nullptr;
    try {
        std::ostringstream out;
        for (const combiproof::Clique& c : combiproof::cliques(f->value)) {
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) out << ' ';
                out << c[i];
            }
            out << '\n';
        }
        return dup_string(out.str());
    } catch (...) {
        return nullptr;
    }
}

cp_status cp_prove(const cp_formula* f, cp_proof** out) {
    if (!f || !out) return CP_BAD_ARGUMENT;
    *out = nullptr;
    try {
        auto proof = combiproof::prove_combinatorial(f->value);
        if (!proof) return CP_REJECTED;
        *out = new cp_proof{std::move(*proof), false};
        return CP_OK;
    } catch (const std::exception&) {
        return CP_BAD_ARGUMENT;
    }
}

void cp_proof_free(cp_proof* p) { delete p; }

cp_status cp_proof_load(const char* json_text, cp_proof** out, char** error) {
    if (!json_text || !out) {
        set_error(error, "null argument");
        return CP_BAD_ARGUMENT;
    }
    *out = nullptr;
    try {
        combiproof::LoadedProof loaded = combiproof::load_proof(json_text);
        *out = new cp_proof{std::move(loaded.proof), loaded.mix};
        return CP_OK;
    } catch (const combiproof::SchemaError& e) {
        set_error(error, e.what());
        return CP_PARSE_ERROR;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return CP_BAD_ARGUMENT;
    }
}

char* cp_proof_save(const cp_proof* p) {
    if (!p) return nullptr;
    try {
        return dup_string(combiproof::save_proof(p->value, p->mix));
    } catch (...) {
        return nullptr;
    }
}

int cp_proof_mix(const cp_proof* p) { return p && p->mix ? 1 : 0; }

cp_status cp_proof_verify(const cp_proof* p, int mix, char** verdict_line) {
    if (!p) return CP_BAD_ARGUMENT;
    try {
        combiproof::Verdict v = combiproof::verify(p->value, mix != 0);
        if (verdict_line) *verdict_line = dup_string(v.to_line());
        return v.accepted ? CP_OK : CP_REJECTED;
    } catch (const std::exception&) {
        return CP_BAD_ARGUMENT;
    }
}

cp_status cp_proof_net_check(const cp_proof* p, int mix, char** verdict_line) {
    if (!p) return CP_BAD_ARGUMENT;
    try {
        combiproof::Verdict v =
            combiproof::verify_net(p->value.upper, p->value.linking, mix != 0);
        if (verdict_line) *verdict_line = dup_string(v.to_line());
        return v.accepted ? CP_OK : CP_REJECTED;
    } catch (const std::exception&) {
        return CP_BAD_ARGUMENT;
    }
}

char* cp_proof_figure(const cp_proof* p) {
    if (!p) return nullptr;
    try {
        return dup_string(combiproof::emit_figure(p->value));
    } catch (...) {
        return nullptr;
    }
}

cp_status cp_run_differential(size_t iterations, uint64_t seed, size_t max_leaves,
                              size_t max_vars, char** report) {
    try {
        combiproof::DifferentialConfig config;
        config.iterations = iterations;
        config.seed = seed;
        if (max_leaves) config.max_leaves = max_leaves;
        if (max_vars) config.max_vars = max_vars;
        combiproof::DifferentialReport result = combiproof::run_differential(config);
        if (report) *report = dup_string(result.to_string());
        return result.ok() ? CP_OK : CP_REJECTED;
    } catch (const std::exception& e) {
        if (report) *report = dup_string(std::string("error: ") + e.what() + "\n");
        return CP_BAD_ARGUMENT;
    }
}

}  // extern "C"
