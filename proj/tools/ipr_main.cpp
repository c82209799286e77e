// Command-line surface over the iprn library. All inputs and outputs are
// JSON; matrix/sequence arguments accept either a file path or inline JSON.
//
// Exit codes: 0 success (Forced where applicable), 1 Escaped/None/NotFound,
// 2 malformed input or internal error, 3 budget exhausted.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "iprn/json_io.hpp"

namespace {

constexpr const char* kVersion = "iprnear 0.1.0 (schema 1)";

using iprn::Json;

Json load_json(const std::string& arg) {
    std::string text = arg;
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw iprn::Error("empty input argument");
    if (arg[first] != '{' && arg[first] != '[') {
        std::ifstream in(arg);
        if (!in) throw iprn::Error("cannot open input file '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw iprn::Error("malformed JSON in '" + arg + "': " + e.what());
    }
}

struct Output {
    std::string path;  // empty = stdout

    void emit(const Json& j) const {
        std::string text = j.dump(2) + "\n";
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path);
            if (!out) throw iprn::Error("cannot write output file '" + path + "'");
            out << text;
        }
    }
};

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw iprn::Error("cannot write certificate file '" + path + "'");
    out << j.dump(2) << "\n";
}

std::vector<std::int64_t> int_seq(const Json& j) {
    if (!j.is_array()) throw iprn::Error("expected a JSON array of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (v.is_number_integer())
            out.push_back(v.get<std::int64_t>());
        else if (v.is_string())
            out.push_back(iprn::Rational::parse(v.get<std::string>()).num());
        else
            throw iprn::Error("sequence entries must be integers");
    }
    return out;
}

std::function<bool(const iprn::Rational&)> parse_predicate(const std::string& spec) {
    if (spec == "all") return [](const iprn::Rational&) { return true; };
    if (spec == "even")
        return [](const iprn::Rational& q) { return q.is_integer() && q.num() % 2 == 0; };
    if (spec == "odd")
        return [](const iprn::Rational& q) { return q.is_integer() && q.num() % 2 != 0; };
    if (spec.rfind("multiple-of:", 0) == 0) {
        std::int64_t k = std::stoll(spec.substr(12));
        if (k < 1) throw iprn::Error("multiple-of: modulus must be positive");
        return [k](const iprn::Rational& q) { return q.is_integer() && q.num() % k == 0; };
    }
    if (spec.rfind("hook:", 0) == 0) {
        auto oracle = iprn::hook_oracle(spec.substr(5));
        return [oracle](const iprn::Rational& q) { return oracle(q) != 0; };
    }
    throw iprn::Error("unknown predicate '" + spec +
                      "'; expected all, even, odd, multiple-of:k, or hook:<command>");
}

int run(int argc, char** argv) {
    CLI::App app{"Matrix families and finite-scale image partition regularity"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_option("--out", out.path, "write the result JSON here instead of stdout");

    int threads = 1;
    if (const char* env = std::getenv("IPRNEAR_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "solver worker threads");

    long long budget_ms = 0;
    app.add_option("--budget-ms", budget_ms, "abort searches after this many milliseconds");

    auto opts = [&]() {
        iprn::SolveOptions o;
        o.threads = threads;
        if (budget_ms > 0)
            o.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
        return o;
    };

    std::string matrix_arg, a_arg, b_arg, seq_arg, spec_arg, coloring_arg, boundaries_arg;
    std::string oracle_spec = "constant", predicate_spec, certificate_path;
    int r = 2, nbhd = 8;
    std::int64_t big_n = 0, n_max = 64, n_force = 0, n_pick = 0, width = 0, value_bound = 0;
    std::size_t generators = 0;
    bool allow_repeats = false;
    std::optional<std::int64_t> bound_opt;

    auto* fe = app.add_subcommand("check-first-entries", "first entries condition report");
    fe->add_option("--matrix", matrix_arg)->required();

    auto* comp = app.add_subcommand("compress", "compressed form of an integer sequence");
    comp->add_option("--seq", seq_arg)->required();

    auto* fs = app.add_subcommand("fs", "finite sums of a sequence");
    fs->add_option("--seq", seq_arg)->required();

    auto* mte = app.add_subcommand("mt-enum", "Milliken-Taylor system values");
    mte->add_option("--a", a_arg)->required();
    mte->add_option("--seq", seq_arg)->required();

    auto* mtm = app.add_subcommand("mt-matrix", "width-truncated Milliken-Taylor matrix");
    mtm->add_option("--a", a_arg)->required();
    mtm->add_option("--width", width)->required();

    auto* ins = app.add_subcommand("insertion", "build an insertion matrix");
    ins->add_option("--spec", spec_arg)->required();

    auto* ds = app.add_subcommand("diag-sum", "block-diagonal sum of two matrices");
    ds->add_option("--a", a_arg)->required();
    ds->add_option("--b", b_arg)->required();

    auto* seg = app.add_subcommand("segmented-check", "segmented classification of a matrix");
    seg->add_option("--matrix", matrix_arg)->required();
    seg->add_option("--boundaries", boundaries_arg)->required();
    seg->add_option("-r,--colors", r);
    seg->add_option("-N,--vertices", big_n)->required();

    auto* ver = app.add_subcommand("verify", "decide Forced/Escaped at (r, N)");
    ver->add_option("--matrix", matrix_arg)->required();
    ver->add_option("-r,--colors", r);
    ver->add_option("-N,--vertices", big_n)->required();
    ver->add_option("--certificate", certificate_path);

    auto* minn = app.add_subcommand("min-n", "smallest N with a Forced verdict");
    minn->add_option("--matrix", matrix_arg)->required();
    minn->add_option("-r,--colors", r);
    minn->add_option("--n-max", n_max);
    minn->add_option("--certificate", certificate_path);

    auto* wit = app.add_subcommand("witness", "monochromatic image under a given coloring");
    wit->add_option("--matrix", matrix_arg)->required();
    wit->add_option("--coloring", coloring_arg)->required();
    wit->add_option("--bound", bound_opt);

    auto* nt = app.add_subcommand("near-transfer", "witness transfer into (0, 2^-n)");
    nt->add_option("--matrix", matrix_arg)->required();
    nt->add_option("-r,--colors", r);
    nt->add_option("-n,--neighborhood", nbhd);
    nt->add_option("--n-force", n_force)->required();
    nt->add_option("--oracle", oracle_spec);

    auto* dw = app.add_subcommand("diag-witness", "diagonal-sum combined witness");
    dw->add_option("--a", a_arg)->required();
    dw->add_option("--b", b_arg)->required();
    dw->add_option("-r,--colors", r);
    dw->add_option("-n,--neighborhood", nbhd);
    dw->add_option("--n-pick", n_pick)->required();
    dw->add_option("--oracle", oracle_spec);

    auto* ips = app.add_subcommand("ipstar-falsify", "search for an FS set avoiding a predicate");
    ips->add_option("--predicate", predicate_spec)->required();
    ips->add_option("--generators", generators)->required();
    ips->add_option("--value-bound", value_bound)->required();
    ips->add_flag("--allow-repeats", allow_repeats);

    CLI11_PARSE(app, argc, argv);

    if (fe->parsed()) {
        auto rep = iprn::check_first_entries(iprn::matrix_from_json(load_json(matrix_arg)));
        out.emit(iprn::first_entries_to_json(rep));
        return rep.satisfies ? 0 : 1;
    }
    if (comp->parsed()) {
        auto c = iprn::compress(int_seq(load_json(seq_arg)));
        out.emit(Json{{"compressed", c.entries}});
        return 0;
    }
    if (fs->parsed()) {
        auto values = iprn::fs_enumerate(iprn::rationals_from_json(load_json(seq_arg)));
        out.emit(Json{{"values", iprn::rationals_to_json({values.begin(), values.end()})}});
        return 0;
    }
    if (mte->parsed()) {
        iprn::CompressedSeq a(int_seq(load_json(a_arg)));
        auto values = iprn::mt_enumerate(a, iprn::rationals_from_json(load_json(seq_arg)));
        out.emit(Json{{"values", iprn::rationals_to_json({values.begin(), values.end()})}});
        return 0;
    }
    if (mtm->parsed()) {
        iprn::CompressedSeq a(int_seq(load_json(a_arg)));
        out.emit(iprn::matrix_to_json(iprn::mt_matrix_rows(a, static_cast<std::size_t>(width))));
        return 0;
    }
    if (ins->parsed()) {
        auto spec = iprn::insertion_spec_from_json(load_json(spec_arg));
        out.emit(iprn::matrix_to_json(iprn::build_insertion(spec)));
        return 0;
    }
    if (ds->parsed()) {
        out.emit(iprn::matrix_to_json(iprn::diag_sum(iprn::matrix_from_json(load_json(a_arg)),
                                                     iprn::matrix_from_json(load_json(b_arg)))));
        return 0;
    }
    if (seg->parsed()) {
        auto rep = iprn::segmented_check(iprn::matrix_from_json(load_json(matrix_arg)),
                                         iprn::block_structure_from_json(load_json(boundaries_arg)),
                                         r, big_n, opts());
        out.emit(iprn::segmented_to_json(rep));
        return 0;
    }
    if (ver->parsed()) {
        auto cert = iprn::verify_ipr_at(iprn::matrix_from_json(load_json(matrix_arg)), r, big_n,
                                        opts());
        Json j = iprn::certificate_to_json(cert);
        out.emit(j);
        if (!certificate_path.empty()) write_file(certificate_path, j);
        return cert.verdict == iprn::Verdict::Forced ? 0 : 1;
    }
    if (minn->parsed()) {
        auto m = iprn::matrix_from_json(load_json(matrix_arg));
        auto found = iprn::min_forcing_n(m, r, n_max, opts());
        if (!found) {
            out.emit(Json{{"min_n", nullptr}, {"n_max", n_max}});
            return 1;
        }
        out.emit(Json{{"min_n", *found}, {"n_max", n_max}});
        if (!certificate_path.empty())
            write_file(certificate_path,
                       iprn::certificate_to_json(iprn::verify_ipr_at(m, r, *found, opts())));
        return 0;
    }
    if (wit->parsed()) {
        auto m = iprn::matrix_from_json(load_json(matrix_arg));
        auto chi = iprn::coloring_from_json(load_json(coloring_arg));
        auto w = iprn::witness_for_coloring(m, chi, bound_opt);
        if (!w) {
            out.emit(Json{{"witness", nullptr}});
            return 1;
        }
        out.emit(iprn::witness_to_json(*w));
        return 0;
    }
    if (nt->parsed()) {
        auto m = iprn::matrix_from_json(load_json(matrix_arg));
        iprn::NearZeroContext ctx{nbhd, r, iprn::parse_oracle_spec(oracle_spec, r)};
        out.emit(iprn::near_witness_to_json(iprn::near_zero_transfer(m, ctx, n_force, opts())));
        return 0;
    }
    if (dw->parsed()) {
        auto a = iprn::matrix_from_json(load_json(a_arg));
        auto b = iprn::matrix_from_json(load_json(b_arg));
        iprn::NearZeroContext ctx{nbhd, r, iprn::parse_oracle_spec(oracle_spec, r)};
        auto w = iprn::diag_sum_witness(a, b, ctx, n_pick, iprn::make_search_callback(b), opts());
        out.emit(iprn::combined_witness_to_json(w));
        return 0;
    }
    if (ips->parsed()) {
        auto found = iprn::ip_star_falsify(parse_predicate(predicate_spec), generators,
                                           iprn::Rational(value_bound), allow_repeats);
        if (!found) {
            out.emit(Json{{"result", "not-found"}});
            return 1;
        }
        out.emit(iprn::falsification_to_json(*found));
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const iprn::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        std::cout << Json{{"error", "budget-exceeded"}, {"nodes", e.nodes}}.dump(2) << "\n";
        return 3;
    } catch (const iprn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
