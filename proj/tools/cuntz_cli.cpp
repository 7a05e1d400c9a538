// Command-line front end: validates block specs, builds and verifies the
// canonical block-permutation unitaries, factorizes normalizer candidates,
// and exposes the exact-arithmetic element calculator.
//
// Exit codes: 0 success, 1 a verification or property check failed,
// 2 malformed input (syntax, schema, or validation errors).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cuntz/io.hpp"
#include "cuntz/normalizer.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/slice.hpp"
#include "cuntz/subalg.hpp"

namespace {

using nlohmann::json;
using namespace cuntz;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

// Thrown for input problems discovered past argument parsing.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Element arguments accept either a file name or inline expression text.
std::string element_text(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
    return arg;
}

AlgebraSpec load_valid_spec(const std::string& path) {
    AlgebraSpec spec = spec_from_json(read_file(path));
    auto v = validate_spec(spec);
    if (!v.ok) {
        std::string msg = "invalid spec " + path + ":";
        for (const auto& violation : v.violations) msg += "\n  - " + violation;
        throw InputError(msg);
    }
    return spec;
}

Element parse_checked(const std::string& text, int n) {
    try {
        return parse_element(text, n).element;
    } catch (const ParseError& e) {
        throw InputError(std::string("element does not parse: ") + e.what());
    }
}

void emit(const json& doc, bool machine) {
    if (machine) {
        std::cout << doc.dump() << "\n";
        return;
    }
    // Human rendering: one "key: value" line per top-level field, arrays of
    // objects as indented blocks.
    for (const auto& [key, value] : doc.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            std::cout << key << ":\n";
            for (const auto& item : value) {
                std::cout << "  -";
                for (const auto& [k2, v2] : item.items())
                    std::cout << ' ' << k2 << '=' << (v2.is_string() ? v2.get<std::string>() : v2.dump());
                std::cout << "\n";
            }
        } else if (value.is_string()) {
            std::cout << key << ": " << value.get<std::string>() << "\n";
        } else {
            std::cout << key << ": " << value.dump() << "\n";
        }
    }
}

json word_list_json(std::span<const Word> words) {
    json out = json::array();
    for (const Word& w : words) out.push_back(w.letters());
    return out;
}

int cmd_validate(const std::string& spec_path, bool machine) {
    AlgebraSpec spec = spec_from_json(read_file(spec_path));
    auto v = validate_spec(spec);
    if (!v.ok) {
        json doc{{"ok", false}, {"violations", v.violations}};
        emit(doc, machine);
        return kExitBadInput;
    }
    json blocks = json::array();
    for (std::size_t j = 0; j < spec.block_count(); ++j) {
        blocks.push_back(json{{"block", j + 1},
                              {"words", word_list_json(spec.blocks[j])},
                              {"size", spec.blocks[j].size()},
                              {"trace", to_string(spec.block_trace(j))}});
    }
    emit(json{{"ok", true}, {"n", spec.alphabet.size()}, {"blocks", blocks}}, machine);
    return kExitOk;
}

int cmd_classes(const std::string& spec_path, bool machine) {
    AlgebraSpec spec = load_valid_spec(spec_path);
    auto classes = equivalence_classes(spec);
    json jclasses = json::array();
    for (const auto& cls : classes.classes) {
        json members = json::array();
        for (std::size_t j : cls) members.push_back(j + 1);
        jclasses.push_back(std::move(members));
    }
    emit(json{{"classes", jclasses}, {"group_order", s_sim_order(classes).get_str()}}, machine);
    return kExitOk;
}

int cmd_build(const std::string& spec_path, const std::string& perm, const std::string& out_path,
              bool machine) {
    AlgebraSpec spec = load_valid_spec(spec_path);
    PermSpec sigma = parse_perm(perm, spec.block_count());
    NormalizerUnitary u = build_U_sigma(spec, sigma);
    u.element = normal_form(u.element);
    std::string serialized = unitary_to_json(u);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write file: " + out_path);
        out << serialized << "\n";
    }
    if (machine) {
        std::cout << serialized << "\n";
    } else {
        std::cout << "sigma: " << format_perm(u.sigma) << "\n";
        std::cout << "element: " << render_element(u.element) << "\n";
        std::cout << "block_exponents:";
        for (int m : u.block_exponents) std::cout << ' ' << m;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& spec_path, const std::string& unitary_path, int level,
               bool machine) {
    AlgebraSpec spec = load_valid_spec(spec_path);
    NormalizerUnitary u = unitary_from_json(read_file(unitary_path), spec.alphabet);
    if (u.sigma.size() != spec.block_count())
        throw InputError("unitary permutation size does not match the spec");
    UniformSpec us = uniformize(spec);
    if (level < 0) level = us.level() + 2;

    json conditions = json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, const std::string& about, const CheckResult& r) {
        conditions.push_back(json{{"condition", name},
                                  {"about", about},
                                  {"pass", r.pass},
                                  {"witness", r.witness}});
        all_pass = all_pass && r.pass;
    };

    record("U1", "unitary and maps corner matrix units into the corners",
           verify_U1(u.element, spec, level));
    record("U2", "conjugation permutes the block projections as sigma",
           verify_U2(u.element, spec, u.sigma));
    record("U3", "each column is an ordered sum of unit monomials", verify_U3(u.element, spec));

    // Homogeneity degrees must match the recorded exponents and the trace
    // ratios of the permuted blocks.
    CheckResult l1;
    for (std::size_t j = 0; j < spec.block_count() && l1.pass; ++j) {
        Element col = normal_form(u.element * us.block_projection(j));
        auto h = is_homogeneous(col);
        if (h.kind != Homogeneity::Kind::Homogeneous) {
            l1 = {false, "column " + std::to_string(j + 1) + " is not homogeneous"};
            break;
        }
        if (j < u.block_exponents.size() && h.degree != u.block_exponents[j]) {
            l1 = {false, "column " + std::to_string(j + 1) + " has degree " +
                             std::to_string(h.degree) + ", recorded exponent " +
                             std::to_string(u.block_exponents[j])};
            break;
        }
        Rational expected = us.block_trace(u.sigma.apply(j)) / us.block_trace(j);
        if (expected != rational_pow(spec.alphabet.size(), -h.degree))
            l1 = {false, "trace ratio of blocks " + std::to_string(u.sigma.apply(j) + 1) + "/" +
                             std::to_string(j + 1) + " is " + to_string(expected) +
                             ", not n^-" + std::to_string(h.degree)};
    }
    record("trace", "column degrees match the block trace ratios", l1);

    emit(json{{"level", level}, {"pass", all_pass}, {"conditions", conditions}}, machine);
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_factorize(const std::string& spec_path, const std::string& element_arg, int level,
                  bool machine) {
    AlgebraSpec spec = load_valid_spec(spec_path);
    Element v = parse_checked(element_text(element_arg), spec.alphabet.size());
    FactorizeResult result = factorize(v, spec, level);
    if (const auto* ok = std::get_if<Factorization>(&result)) {
        emit(json{{"normalizer", true},
                  {"w", render_element(ok->w)},
                  {"sigma", format_perm(ok->sigma)}},
             machine);
        return kExitOk;
    }
    const auto& no = std::get<NotNormalizer>(result);
    json doc{{"normalizer", false}, {"reason", no.reason}};
    if (no.failing_block > 0) doc["block"] = no.failing_block;
    if (!no.witness.empty()) doc["witness"] = no.witness;
    emit(doc, machine);
    return kExitCheckFailed;
}

int cmd_conjugate(const std::string& a_path, const std::string& b_path, bool machine) {
    AlgebraSpec a = load_valid_spec(a_path);
    AlgebraSpec b = load_valid_spec(b_path);
    Element u = build_conjugator(a, b);
    emit(json{{"element", render_element(normal_form(u))}}, machine);
    return kExitOk;
}

int cmd_nf(const std::string& arg, int n, bool machine) {
    Element x = parse_checked(element_text(arg), n);
    emit(json{{"element", render_element(normal_form(x))}}, machine);
    return kExitOk;
}

int cmd_mul(const std::string& a_arg, const std::string& b_arg, int n, bool machine) {
    Element a = parse_checked(element_text(a_arg), n);
    Element b = parse_checked(element_text(b_arg), n);
    emit(json{{"element", render_element(normal_form(a * b))}}, machine);
    return kExitOk;
}

int cmd_trace(const std::string& arg, int n, bool machine) {
    Element x = parse_checked(element_text(arg), n);
    if (!is_in_core(x))
        throw InputError("trace requires a degree-0 element (it is undefined outside the core)");
    emit(json{{"trace", render_scalar(trace(x))}}, machine);
    return kExitOk;
}

int cmd_slice(const std::string& arg, int n, int level, bool machine) {
    Element x = parse_checked(element_text(arg), n);
    std::map<int, SliceMatrix> slices;
    try {
        slices = slice_matrix(x, level);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    json out = json::array();
    for (const auto& [degree, mat] : slices) {
        json entries = json::array();
        for (const auto& [rc, value] : mat.entries)
            entries.push_back(json{{"row", rc.first}, {"col", rc.second},
                                   {"value", render_scalar(value)}});
        out.push_back(json{{"degree", degree},
                           {"rows", mat.rows},
                           {"cols", mat.cols},
                           {"entries", std::move(entries)}});
    }
    emit(json{{"level", level}, {"slices", std::move(out)}}, machine);
    return kExitOk;
}

int cmd_cayley(const std::string& spec_path, std::size_t limit, bool machine) {
    AlgebraSpec spec = load_valid_spec(spec_path);
    std::vector<PermSpec> perms;
    try {
        perms = enumerate_S_sim(spec, limit);
    } catch (const std::length_error& e) {
        throw InputError(e.what());
    }
    std::vector<NormalizerUnitary> units;
    units.reserve(perms.size());
    for (const auto& sigma : perms) units.push_back(build_U_sigma(spec, sigma));

    auto index_of = [&](const PermSpec& p) {
        for (std::size_t t = 0; t < perms.size(); ++t)
            if (perms[t].images == p.images) return t;
        throw std::logic_error("composition left the enumerated group");
    };

    json table = json::array();
    bool ok = true;
    std::string witness;
    for (std::size_t ia = 0; ia < perms.size() && ok; ++ia) {
        json row = json::array();
        for (std::size_t ib = 0; ib < perms.size(); ++ib) {
            std::size_t ic = index_of(perms[ia] * perms[ib]);
            row.push_back(ic);
            if (!equals(units[ia].element * units[ib].element, units[ic].element)) {
                ok = false;
                witness = "product of " + format_perm(perms[ia]) + " and " +
                          format_perm(perms[ib]) + " does not match the composed unitary";
                break;
            }
        }
        table.push_back(std::move(row));
    }

    json jperms = json::array();
    for (const auto& p : perms) jperms.push_back(format_perm(p));
    json doc{{"order", perms.size()}, {"permutations", std::move(jperms)}, {"table_ok", ok}};
    if (ok)
        doc["table"] = std::move(table);
    else
        doc["witness"] = witness;
    emit(doc, machine);
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic calculator for corner-sum subalgebras of the Cuntz algebra"};
    app.require_subcommand(1);

    // Shared option storage; each subcommand binds the fields it uses.
    std::string spec_path, second_path, perm, out_path, expr_a, expr_b;
    int n = 2;
    int level = -1;
    std::size_t limit = 10000;
    bool machine = false;

    auto add_machine = [&](CLI::App* cmd) {
        cmd->add_flag("--json", machine, "machine-readable JSON output");
    };

    auto* validate = app.add_subcommand("validate", "check a block spec and print its profile");
    validate->add_option("spec", spec_path, "spec file")->required();
    add_machine(validate);

    auto* classes = app.add_subcommand("classes", "print trace-equivalence classes and |S~|");
    classes->add_option("spec", spec_path, "spec file")->required();
    add_machine(classes);

    auto* build = app.add_subcommand("build", "build the canonical unitary for a permutation");
    build->add_option("spec", spec_path, "spec file")->required();
    build->add_option("--perm", perm, "permutation as \"1:3,2:2,3:1\"")->required();
    build->add_option("-o,--out", out_path, "write the serialized unitary to this file");
    add_machine(build);

    auto* verify = app.add_subcommand("verify", "verify a serialized unitary against a spec");
    verify->add_option("spec", spec_path, "spec file")->required();
    verify->add_option("unitary", second_path, "unitary file")->required();
    verify->add_option("--level", level, "matrix-unit level for the normalization check");
    add_machine(verify);

    auto* factorize_cmd = app.add_subcommand("factorize", "split a unitary as W * U_sigma");
    factorize_cmd->add_option("spec", spec_path, "spec file")->required();
    factorize_cmd->add_option("element", expr_a, "element file or inline text")->required();
    factorize_cmd->add_option("--level", level,
                              "optional matrix-unit level for a normalization pre-screen");
    add_machine(factorize_cmd);

    auto* conjugate = app.add_subcommand("conjugate",
                                         "build the core unitary conjugating one spec to another");
    conjugate->add_option("specA", spec_path, "source spec file")->required();
    conjugate->add_option("specB", second_path, "target spec file")->required();
    add_machine(conjugate);

    auto* nf = app.add_subcommand("nf", "normal form of an element");
    nf->add_option("expr", expr_a, "element file or inline text")->required();
    nf->add_option("--n", n, "alphabet size")->required();
    add_machine(nf);

    auto* mul = app.add_subcommand("mul", "product of two elements, in normal form");
    mul->add_option("a", expr_a, "element file or inline text")->required();
    mul->add_option("b", expr_b, "element file or inline text")->required();
    mul->add_option("--n", n, "alphabet size")->required();
    add_machine(mul);

    auto* trace_cmd = app.add_subcommand("trace", "normalized trace of a degree-0 element");
    trace_cmd->add_option("expr", expr_a, "element file or inline text")->required();
    trace_cmd->add_option("--n", n, "alphabet size")->required();
    add_machine(trace_cmd);

    auto* slice = app.add_subcommand("slice", "finite-slice matrices of an element");
    slice->add_option("expr", expr_a, "element file or inline text")->required();
    slice->add_option("--n", n, "alphabet size")->required();
    slice->add_option("--level", level, "word length of the slice basis")->required();
    add_machine(slice);

    auto* cayley = app.add_subcommand("cayley", "enumerate S~ and verify its multiplication table");
    cayley->add_option("spec", spec_path, "spec file")->required();
    cayley->add_option("--limit", limit, "refuse to enumerate more permutations than this");
    add_machine(cayley);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*validate) return cmd_validate(spec_path, machine);
        if (*classes) return cmd_classes(spec_path, machine);
        if (*build) return cmd_build(spec_path, perm, out_path, machine);
        if (*verify) return cmd_verify(spec_path, second_path, level, machine);
        if (*factorize_cmd) return cmd_factorize(spec_path, expr_a, level, machine);
        if (*conjugate) return cmd_conjugate(spec_path, second_path, machine);
        if (*nf) return cmd_nf(expr_a, n, machine);
        if (*mul) return cmd_mul(expr_a, expr_b, n, machine);
        if (*trace_cmd) return cmd_trace(expr_a, n, machine);
        if (*slice) return cmd_slice(expr_a, n, level, machine);
        if (*cayley) return cmd_cayley(spec_path, limit, machine);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
