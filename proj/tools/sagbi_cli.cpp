// Command-line front end; talks to the core exclusively through the C
// API of the shared library.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sagbi.h"

namespace {

struct CommonOpts {
    std::string group_path;
    std::string gens;
    int n = 0;
    std::string order = "lex";
    std::int64_t cap = 1'000'000;
    int max_degree = 12;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_degree) {
    auto* group = cmd->add_option("--group", o.group_path, "Group file (n = <int> line, then one generator in cycle notation per line)");
    auto* gens = cmd->add_option("--gens", o.gens, "Inline generators, ';'-separated cycle notation, e.g. \"(1 2);(1 2 3)\"");
    group->excludes(gens);
    cmd->add_option("--n", o.n, "Degree (number of points); inferred from the input when omitted");
    cmd->add_option("--order", o.order, "Term order: lex | grlex | grevlex | matrix:<path>")->capture_default_str();
    cmd->add_option("--cap", o.cap, "Group enumeration cap")->capture_default_str();
    if (with_degree)
        cmd->add_option("--max-degree", o.max_degree, "Degree bound for enumeration")->capture_default_str();
    cmd->add_flag("--json", o.json, "Emit JSON instead of text");
}

int read_file(const std::string& path, std::string& out) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return SAGBI_ERR_PARSE;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return SAGBI_OK;
}

int open_session(const CommonOpts& o, sagbi_session** out) {
    std::string group_text;
    if (!o.group_path.empty()) {
        if (int rc = read_file(o.group_path, group_text)) return rc;
    } else if (!o.gens.empty()) {
        group_text = o.gens;
    } else {
        std::cerr << "error: provide a group via --group or --gens\n";
        return SAGBI_ERR_USAGE;
    }

    std::string spec = o.order;
    std::string matrix_text;
    if (spec.rfind("matrix:", 0) == 0) {
        if (int rc = read_file(spec.substr(7), matrix_text)) return rc;
        spec = "matrix";
    }
    int rc = sagbi_session_create(group_text.c_str(), spec.c_str(),
                                  matrix_text.empty() ? nullptr : matrix_text.c_str(),
                                  o.n, o.cap, out);
    if (rc != SAGBI_OK) std::cerr << "error: " << sagbi_last_error() << "\n";
    return rc;
}

int emit(int rc, char** text) {
    if (rc != SAGBI_OK) {
        std::cerr << "error: " << sagbi_last_error() << "\n";
        return rc;
    }
    std::cout << *text;
    sagbi_string_free(*text);
    *text = nullptr;
    return SAGBI_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SAGBI bases of permutation-group invariant rings: finiteness "
                 "analysis, degree-truncated minimal bases, initial-cone "
                 "membership, and non-closedness witnesses"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string member_vector;
    std::string slope = "1";
    std::int64_t x_max = 10;
    bool sturm_json = false;

    auto* analyze = app.add_subcommand("analyze", "Group data, reflection certificate, finiteness verdict");
    add_common(analyze, opts, true);
    auto* basis = app.add_subcommand("basis", "Minimal SAGBI basis elements up to --max-degree");
    add_common(basis, opts, true);
    auto* member = app.add_subcommand("member", "Initial-cone membership of a rational vector");
    add_common(member, opts, false);
    member->add_option("vector", member_vector, "Comma-separated rationals, e.g. 1,0,1/2")->required();
    auto* witness = app.add_subcommand("witness", "Non-closedness witness of the initial cone");
    add_common(witness, opts, false);
    auto* sturm = app.add_subcommand("sturm", "Irreducible lattice points of the half-plane y > a*x");
    sturm->add_option("--slope", slope, "Positive rational slope a")->capture_default_str();
    sturm->add_option("--x-max", x_max, "Largest x coordinate to report")->capture_default_str();
    sturm->add_flag("--json", sturm_json, "Emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : SAGBI_ERR_USAGE;
    }

    int format = opts.json ? SAGBI_FORMAT_JSON : SAGBI_FORMAT_TEXT;
    char* out = nullptr;

    if (sturm->parsed()) {
        format = sturm_json ? SAGBI_FORMAT_JSON : SAGBI_FORMAT_TEXT;
        return emit(sagbi_sturm(slope.c_str(), x_max, format, &out), &out);
    }

    sagbi_session* session = nullptr;
    if (int rc = open_session(opts, &session)) return rc;
    int rc = SAGBI_ERR_USAGE;
    if (analyze->parsed())
        rc = emit(sagbi_analyze(session, opts.max_degree, format, &out), &out);
    else if (basis->parsed())
        rc = emit(sagbi_basis(session, opts.max_degree, format, &out), &out);
    else if (member->parsed())
        rc = emit(sagbi_member(session, member_vector.c_str(), format, &out), &out);
    else if (witness->parsed())
        rc = emit(sagbi_witness(session, format, &out), &out);
    sagbi_session_destroy(session);
    return rc;
}
