// starlab command-line front end. Everything substantive happens behind the
// C API of libstarlab; this file parses flags, routes calls, and shapes the
// exit status: 0 success, 1 usage or guard errors, 2 a falsified suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "starlab.h"

namespace {

struct Options {
    int n = -1, r = -1, k = -1, n_max = -1, trials = -1;
    std::uint64_t seed = 1;
    long long max_members = -1;
    std::string target, suite, format = "json", out_path, in_path;
    bool list = false;
};

int usage_error(const Options& opt, const std::string& message) {
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["error"] = {{"status", "usage"}, {"message", message}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
    return 1;
}

int api_error(const Options& opt, starlab_status status) {
    std::string name = starlab_status_name(status);
    std::string message = starlab_last_error();
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["error"] = {{"status", name}, {"message", message}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error (" << name << "): " << message << "\n";
    }
    return 1;
}

int emit(const Options& opt, const std::string& content) {
    if (opt.out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << opt.out_path << "\n";
        return 1;
    }
    out << content;
    return 0;
}

// Owns a heap string returned by the C API.
struct ApiString {
    char* p = nullptr;
    ~ApiString() { starlab_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

int run_enumerate(const Options& opt) {
    if (opt.target.empty()) return usage_error(opt, "enumerate requires --target");
    if (opt.n < 0) return usage_error(opt, "enumerate requires --n");
    if (opt.target != "powerset" && opt.r < 0)
        return usage_error(opt, "enumerate --target " + opt.target + " requires --r");
    if (opt.target == "lnk" && opt.k < 0) return usage_error(opt, "enumerate --target lnk requires --k");

    if (opt.max_members >= 0) {
        starlab_family* f = nullptr;
        starlab_status st = STARLAB_OK;
        if (opt.target == "powerset") st = starlab_power_set(opt.n, &f);
        else if (opt.target == "knr") st = starlab_k_subsets(opt.n, opt.r, &f);
        else if (opt.target == "lnk") st = starlab_lnk_enumerate(opt.n, opt.k, opt.r, &f);
        else if (opt.target == "itn") st = starlab_itn_enumerate(opt.n, opt.r, &f);
        else return usage_error(opt, "unknown --target " + opt.target);
        if (st != STARLAB_OK) return api_error(opt, st);
        size_t size = 0;
        starlab_family_size(f, &size);
        starlab_family_free(f);
        if (size > static_cast<size_t>(opt.max_members)) {
            return usage_error(opt, "family has " + std::to_string(size) +
                                        " members, over --max-members " +
                                        std::to_string(opt.max_members));
        }
    }

    ApiString text;
    starlab_status st = starlab_render_enumeration(opt.target.c_str(), opt.n, opt.r, opt.k,
                                                   opt.format.c_str(), &text.p);
    if (st != STARLAB_OK) return api_error(opt, st);
    return emit(opt, text.str());
}

int run_search(const Options& opt) {
    if (opt.target.empty()) return usage_error(opt, "this command requires --target");
    if (opt.n < 0) return usage_error(opt, "this command requires --n");

    starlab_family* f = nullptr;
    starlab_status st = STARLAB_OK;
    if (opt.target == "powerset") st = starlab_power_set(opt.n, &f);
    else if (opt.target == "knr") st = starlab_k_subsets(opt.n, opt.r, &f);
    else if (opt.target == "lnk") st = starlab_lnk_enumerate(opt.n, opt.k, opt.r, &f);
    else if (opt.target == "itn") st = starlab_itn_enumerate(opt.n, opt.r, &f);
    else return usage_error(opt, "unknown --target " + opt.target);
    if (st != STARLAB_OK) return api_error(opt, st);

    if (opt.max_members >= 0) {
        size_t size = 0;
        starlab_family_size(f, &size);
        if (size > static_cast<size_t>(opt.max_members)) {
            starlab_family_free(f);
            return usage_error(opt, "family has " + std::to_string(size) +
                                        " members, over --max-members " +
                                        std::to_string(opt.max_members));
        }
    }

    starlab_verdict* v = nullptr;
    st = starlab_max_intersecting(f, &v);
    starlab_family_free(f);
    if (st != STARLAB_OK) return api_error(opt, st);
    ApiString text;
    st = starlab_verdict_render(v, opt.format.c_str(), &text.p);
    starlab_verdict_free(v);
    if (st != STARLAB_OK) return api_error(opt, st);
    return emit(opt, text.str());
}

std::string read_input(const Options& opt, bool& ok) {
    ok = true;
    if (opt.in_path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(opt.in_path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_compress(const Options& opt) {
    if (opt.target != "lnk" && opt.target != "itn")
        return usage_error(opt, "compress requires --target lnk or --target itn");
    bool ok = false;
    std::string input = read_input(opt, ok);
    if (!ok) return usage_error(opt, "cannot open --in " + opt.in_path);

    if (opt.target == "lnk") {
        int n = 0, k = 0;
        starlab_family* f = nullptr;
        starlab_status st = starlab_labeled_from_text(input.c_str(), &n, &k, &f);
        if (st != STARLAB_OK) return api_error(opt, st);
        starlab_family* g = nullptr;
        st = starlab_lnk_full_compress(n, k, f, &g);
        starlab_family_free(f);
        if (st != STARLAB_OK) return api_error(opt, st);
        ApiString text;
        st = starlab_labeled_to_text(n, k, g, &text.p);
        starlab_family_free(g);
        if (st != STARLAB_OK) return api_error(opt, st);
        return emit(opt, text.str());
    }

    int n = 0;
    starlab_family* f = nullptr;
    starlab_status st = starlab_claw_family_from_text(input.c_str(), &n, &f);
    if (st != STARLAB_OK) return api_error(opt, st);
    starlab_family* g = nullptr;
    st = starlab_gamma_compress(n, f, &g);
    starlab_family_free(f);
    if (st != STARLAB_OK) return api_error(opt, st);
    ApiString text;
    st = starlab_claw_family_to_text(n, g, &text.p);
    starlab_family_free(g);
    if (st != STARLAB_OK) return api_error(opt, st);
    return emit(opt, text.str());
}

int run_verify(const Options& opt) {
    if (opt.list) {
        ApiString text;
        starlab_status st = starlab_suite_list(&text.p);
        if (st != STARLAB_OK) return api_error(opt, st);
        return emit(opt, text.str());
    }
    if (opt.suite.empty()) return usage_error(opt, "verify requires --suite (or --list)");
    starlab_report* report = nullptr;
    starlab_status st =
        starlab_suite_run(opt.suite.c_str(), opt.n_max, opt.seed, opt.trials, &report);
    if (st != STARLAB_OK) return api_error(opt, st);
    ApiString text;
    st = starlab_report_render(report, opt.format.c_str(), &text.p);
    int pass = 0;
    starlab_report_pass(report, &pass);
    starlab_report_free(report);
    if (st != STARLAB_OK) return api_error(opt, st);
    int rc = emit(opt, text.str());
    if (rc != 0) return rc;
    // A falsified suite assertion exits 2: it means an implementation bug,
    // and the rendered report carries the minimal witness.
    return pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"starlab: exact verification of intersecting-family extremal results"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_target) {
        cmd->add_option("--format", opt.format, "Output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", opt.out_path, "Write the report to this path");
        if (with_target)
            cmd->add_option("--target", opt.target, "Family: powerset, knr, lnk or itn");
        cmd->add_option("--n", opt.n, "Ground parameter n");
        cmd->add_option("--r", opt.r, "Set size r");
        cmd->add_option("--k", opt.k, "Label count k (lnk)");
        cmd->add_option("--max-members", opt.max_members, "Reject families larger than this");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "List a family in canonical order");
    add_common(enumerate, true);

    CLI::App* star = app.add_subcommand("star-property", "Exact star-property verdict for a family");
    add_common(star, true);

    CLI::App* maxint = app.add_subcommand("max-intersecting",
                                          "Largest intersecting subfamily by branch and bound");
    add_common(maxint, true);

    CLI::App* compress = app.add_subcommand(
        "compress", "Apply the full compression (lnk) or the Gamma compression (itn)");
    add_common(compress, true);
    compress->add_option("--in", opt.in_path, "Input family file (default: stdin)");

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    add_common(verify, false);
    verify->add_option("--suite", opt.suite, "ekr, fjt, eq1, lemma6, gamma or thm2")
        ->check(CLI::IsMember({"ekr", "fjt", "eq1", "lemma6", "gamma", "thm2"}));
    verify->add_option("--n-max", opt.n_max, "Upper n for range suites");
    verify->add_option("--seed", opt.seed, "64-bit seed for the sampled suites");
    verify->add_option("--trials", opt.trials, "Trial count for the sampled suites");
    verify->add_flag("--list", opt.list, "List suites and the invariant each one checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (enumerate->parsed()) return run_enumerate(opt);
    if (star->parsed()) return run_search(opt);
    if (maxint->parsed()) return run_search(opt);
    if (compress->parsed()) return run_compress(opt);
    if (verify->parsed()) return run_verify(opt);
    return 1;
}
