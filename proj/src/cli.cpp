#include "denstat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "denstat/checks.hpp"

namespace denstat {

namespace {

using nlohmann::json;

StatPair parse_pair(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) {
        throw invalid_input_error("pair '" + text +
                                  "' must be two statistics separated by '/'");
    }
    return {StatDescriptor::parse(text.substr(0, slash)),
            StatDescriptor::parse(text.substr(slash + 1))};
}

json trace_to_json(const BijectionTrace& trace) {
    json steps = json::array();
    for (const auto& step : trace.steps) {
        json seq = json::array();
        for (int v : step.sequence) {
            if (v == 0) {
                seq.push_back(nullptr);
            } else {
                seq.push_back(v);
            }
        }
        steps.push_back(
            {{"stepName", step.name}, {"sequence", seq}, {"highlights", step.highlights}});
    }
    json out = {{"case", to_string(trace.case_tag)},
                {"s", trace.s},
                {"d", trace.d},
                {"y", trace.y},
                {"p", trace.p},
                {"excLetters", trace.exc_letters},
                {"nexclPositions", trace.nonexc_positions},
                {"chainLetters", trace.chain_letters},
                {"steps", steps}};
    out["z"] = trace.z ? json(*trace.z) : json(nullptr);
    out["a"] = trace.a ? json(*trace.a) : json(nullptr);
    out["u"] = trace.u ? json(*trace.u) : json(nullptr);
    out["v"] = trace.v ? json(*trace.v) : json(nullptr);
    return out;
}

struct CommonOpts {
    std::string format = "text";
    int cap = kDefaultEnumerationCap;
    int workers = 1;
};

void add_format(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
}

void add_cap(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--cap", opts.cap, "Enumeration cap on n")
        ->envname("DENSTAT_ENUM_CAP")
        ->capture_default_str();
}

void add_workers(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--workers", opts.workers, "Worker threads for enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

CLI::App* make_cmd(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "Print help and exit");
    return cmd;
}

int emit_reports(const std::vector<Report>& reports, const CommonOpts& opts,
                 std::ostream& out) {
    bool all_pass = true;
    if (opts.format == "json") {
        json arr = json::array();
        for (const Report& r : reports) {
            arr.push_back(r.to_json());
            all_pass = all_pass && r.pass;
        }
        out << (reports.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << '\n';
    } else {
        for (const Report& r : reports) {
            out << r.to_text() << '\n';
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// stat
// ---------------------------------------------------------------------------

struct StatOpts {
    CommonOpts common;
    std::string stat;
    std::string perm;
    std::string perm_file;
};

int run_stat(const StatOpts& opts, std::ostream& out) {
    const StatDescriptor d = StatDescriptor::parse(opts.stat);
    std::vector<Permutation> perms;
    if (!opts.perm_file.empty()) {
        std::ifstream in(opts.perm_file);
        if (!in) throw invalid_input_error("cannot open file '" + opts.perm_file + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            perms.push_back(Permutation::parse(line));
        }
    } else {
        perms.push_back(Permutation::parse(opts.perm));
    }
    if (opts.common.format == "json") {
        json arr = json::array();
        for (const Permutation& p : perms) {
            arr.push_back({{"stat", d.str()}, {"perm", p.str()}, {"value", eval_stat(d, p)}});
        }
        out << (perms.size() == 1 && opts.perm_file.empty() ? arr[0].dump(2) : arr.dump(2))
            << '\n';
    } else {
        for (const Permutation& p : perms) out << eval_stat(d, p) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// apply / invert
// ---------------------------------------------------------------------------

struct MapOpts {
    CommonOpts common;
    std::string map = "phi-den";
    std::string perm;
    int c = 0;
    int g = 1;
    int h = 1;
    bool trace = false;
    bool g_set = false;
    bool h_set = false;
};

void add_map_options(CLI::App* cmd, MapOpts& opts, bool with_c) {
    cmd->add_option("--map", opts.map, "Which insertion map to use")
        ->check(CLI::IsMember({"phi-den", "phi-gh-den"}))
        ->capture_default_str();
    cmd->add_option("--perm", opts.perm, "Permutation in one-line notation")->required();
    if (with_c) cmd->add_option("--c", opts.c, "Insertion weight c")->required();
    cmd->add_option("--g", opts.g, "Gap parameter (phi-gh-den)")
        ->each([&opts](const std::string&) { opts.g_set = true; });
    cmd->add_option("--h", opts.h, "Level parameter (phi-gh-den)")
        ->each([&opts](const std::string&) { opts.h_set = true; });
    cmd->add_flag("--trace", opts.trace, "Print the step-by-step trace");
    add_format(cmd, opts.common);
}

void validate_map_params(const MapOpts& opts) {
    if (opts.map == "phi-den" && (opts.g_set || opts.h_set)) {
        throw invalid_input_error("--g/--h are only valid with --map phi-gh-den");
    }
}

int run_apply(const MapOpts& opts, std::ostream& out) {
    validate_map_params(opts);
    const Permutation sigma = Permutation::parse(opts.perm);
    const ApplyResult result = opts.map == "phi-den"
                                   ? phi_den(sigma, opts.c)
                                   : phi_gh_den(opts.g, opts.h, sigma, opts.c);
    if (opts.common.format == "json") {
        json obj = {{"image", result.image.str()}};
        if (opts.trace) obj["trace"] = trace_to_json(result.trace);
        out << obj.dump(2) << '\n';
    } else {
        out << result.image.str() << '\n';
        if (opts.trace) out << format_trace(result.trace);
    }
    return 0;
}

int run_invert(const MapOpts& opts, std::ostream& out) {
    validate_map_params(opts);
    const Permutation w = Permutation::parse(opts.perm);
    const InvertResult result = opts.map == "phi-den"
                                    ? phi_den_inverse(w)
                                    : phi_gh_den_inverse(opts.g, opts.h, w);
    if (opts.common.format == "json") {
        json obj = {{"sigma", result.preimage.str()}, {"c", result.c}};
        if (opts.trace) obj["trace"] = trace_to_json(result.trace);
        out << obj.dump(2) << '\n';
    } else {
        out << result.preimage.str() << '\n' << result.c << '\n';
        if (opts.trace) out << format_trace(result.trace);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// dist
// ---------------------------------------------------------------------------

struct DistOpts {
    CommonOpts common;
    std::string pair;
    int n = 0;
};

int run_dist(const DistOpts& opts, std::ostream& out) {
    const StatPair pair = parse_pair(opts.pair);
    const JointDistribution jd =
        joint_distribution(pair.first, pair.second, opts.n, opts.common.workers,
                           opts.common.cap);
    const std::string label = pair.first.str() + "/" + pair.second.str();
    if (opts.common.format == "json") {
        out << jd.to_json(label).dump(2) << '\n';
    } else {
        out << jd.to_csv();
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOpts {
    CommonOpts common;
    std::string theorem;
    int r = 0, g = 0, l = 0, h = 0;  // 0 = not given
    int max_n = 0;                   // 0 = per-theorem default
};

void reject_unused(const VerifyOpts& opts, bool r_ok, bool g_ok, bool l_ok, bool h_ok) {
    auto bad = [&](const char* name) {
        throw invalid_input_error("--" + std::string(name) +
                                  " is not accepted by theorem suite '" + opts.theorem +
                                  "'");
    };
    if (opts.r && !r_ok) bad("r");
    if (opts.g && !g_ok) bad("g");
    if (opts.l && !l_ok) bad("l");
    if (opts.h && !h_ok) bad("h");
}

std::vector<Report> run_verify(const VerifyOpts& opts) {
    const int workers = opts.common.workers;
    const int cap = opts.common.cap;
    std::vector<Report> reports;

    if (opts.theorem == "1.1" || opts.theorem == "1.3") {
        reject_unused(opts, true, false, false, false);
        const int max_n = opts.max_n ? opts.max_n : 8;
        std::vector<int> rs;
        if (opts.r) {
            rs.push_back(opts.r);
        } else {
            for (int r = 1; r <= max_n; ++r) rs.push_back(r);
        }
        for (int r : rs) {
            const StatPair pair =
                opts.theorem == "1.1"
                    ? StatPair{StatDescriptor::exc_level(r), StatDescriptor::den_level(r)}
                    : StatPair{StatDescriptor::exc_level(r), StatDescriptor::den()};
            reports.push_back(check_r_euler_mahonian(pair, r, max_n, workers, cap));
        }
    } else if (opts.theorem == "1.2") {
        reject_unused(opts, false, true, true, false);
        const int max_n = opts.max_n ? opts.max_n : 7;
        std::vector<std::pair<int, int>> combos;
        if (opts.g || opts.l) {
            combos.emplace_back(opts.g ? opts.g : 1, opts.l ? opts.l : 1);
        } else {
            for (int g = 1; g <= 5; ++g) {
                for (int l = 1; g + l <= 6; ++l) combos.emplace_back(g, l);
            }
        }
        for (auto [g, l] : combos) {
            for (int h : {l, g + l}) {
                reports.push_back(check_r_euler_mahonian(
                    {StatDescriptor::gap_exc(g, l), StatDescriptor::gap_den(g, h)},
                    g + l - 1, max_n, workers, cap));
            }
        }
    } else if (opts.theorem == "1.4") {
        reject_unused(opts, false, true, true, true);
        const int max_n = opts.max_n ? opts.max_n : 7;
        std::vector<std::array<int, 3>> combos;
        if (opts.g || opts.l || opts.h) {
            const int g = opts.g ? opts.g : 1;
            const int l = opts.l ? opts.l : 1;
            if (opts.h) {
                combos.push_back({g, l, opts.h});
            } else {
                for (int h = 1; h <= g + l; ++h) combos.push_back({g, l, h});
            }
        } else {
            for (int g = 1; g <= 4; ++g) {
                for (int l = 1; l <= 4; ++l) {
                    for (int h = 1; h <= g + l; ++h) combos.push_back({g, l, h});
                }
            }
        }
        for (auto [g, l, h] : combos) {
            reports.push_back(check_r_euler_mahonian(
                {StatDescriptor::gap_exc(g, l), StatDescriptor::gap_den(g, h)}, g + l - 1,
                max_n, workers, cap));
        }
    } else if (opts.theorem == "2.1") {
        reject_unused(opts, false, false, false, false);
        const int max_n = opts.max_n ? opts.max_n : 8;
        for (int n = 1; n <= max_n; ++n) {
            reports.push_back(check_bijection(BijectionMap::phi_den, {}, n, cap));
        }
    } else if (opts.theorem == "4.1") {
        reject_unused(opts, false, true, false, true);
        const int max_n = opts.max_n ? opts.max_n : 7;
        for (int n = 1; n <= max_n; ++n) {
            std::vector<int> gs;
            if (opts.g) {
                gs.push_back(opts.g);
            } else {
                for (int g = 1; g <= 4; ++g) gs.push_back(g);
            }
            for (int g : gs) {
                std::vector<int> hs;
                if (opts.h) {
                    if (opts.h <= n) hs.push_back(opts.h);
                } else {
                    for (int h = 1; h <= n; ++h) hs.push_back(h);
                }
                for (int h : hs) {
                    reports.push_back(
                        check_bijection(BijectionMap::phi_gh_den, {g, h}, n, cap));
                }
            }
        }
    } else if (opts.theorem == "mahonian") {
        reject_unused(opts, false, false, false, false);
        reports.push_back(check_mahonian(opts.max_n ? opts.max_n : 9, 4, workers, cap));
    } else if (opts.theorem == "denert") {
        reject_unused(opts, false, false, false, false);
        reports.push_back(check_pair_equidistribution(
            {StatDescriptor::exc(), StatDescriptor::den()},
            {StatDescriptor::des(), StatDescriptor::maj()}, opts.max_n ? opts.max_n : 8,
            workers, cap));
    } else {
        throw invalid_input_error("unknown theorem suite '" + opts.theorem + "'");
    }
    return reports;
}

// ---------------------------------------------------------------------------
// counterexample / table1
// ---------------------------------------------------------------------------

struct CounterexampleOpts {
    CommonOpts common;
    std::string pair_a;
    std::string pair_b;
    int max_n = 8;
};

int run_table1(const CommonOpts& opts, std::ostream& out) {
    const std::vector<Table1Row> rows = reproduce_table1();
    if (opts.format == "json") {
        json arr = json::array();
        for (const Table1Row& row : rows) {
            json pairs = json::array();
            for (const auto& [e, d] : row.exc_den) pairs.push_back({e, d});
            arr.push_back({{"c", row.c}, {"image", row.image.str()}, {"excDen", pairs}});
        }
        out << arr.dump(2) << '\n';
    } else if (opts.format == "csv") {
        for (const Table1Row& row : rows) {
            out << row.c << ',' << row.image.str();
            for (const auto& [e, d] : row.exc_den) out << ',' << e << ',' << d;
            out << '\n';
        }
    } else {
        out << "c | image   | (exc_r, den) for r = 1..6\n";
        for (const Table1Row& row : rows) {
            out << row.c << " | " << row.image.str() << " |";
            for (const auto& [e, d] : row.exc_den) {
                out << " (" << e << ',' << d << ')';
            }
            out << '\n';
        }
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation statistics around Denert's statistic: evaluation, "
                 "insertion bijections, joint distributions, exhaustive checks"};
    app.require_subcommand(1);
    // --h is a statistic parameter below, so help must not claim -h.
    app.set_help_flag("--help", "Print help and exit");

    StatOpts stat_opts;
    CLI::App* stat_cmd = make_cmd(app, "stat", "Evaluate a statistic");
    stat_cmd->add_option("--stat", stat_opts.stat, "Statistic descriptor")->required();
    auto* perm_opt = stat_cmd->add_option("--perm", stat_opts.perm, "Permutation");
    stat_cmd->add_option("--perm-file", stat_opts.perm_file,
                         "File with one permutation per line")
        ->excludes(perm_opt);
    add_format(stat_cmd, stat_opts.common);

    MapOpts apply_opts;
    CLI::App* apply_cmd = make_cmd(app, "apply", "Apply an insertion map");
    add_map_options(apply_cmd, apply_opts, /*with_c=*/true);

    MapOpts invert_opts;
    CLI::App* invert_cmd = make_cmd(app, "invert", "Invert an insertion map");
    add_map_options(invert_cmd, invert_opts, /*with_c=*/false);

    DistOpts dist_opts;
    CLI::App* dist_cmd = make_cmd(app, "dist", "Joint distribution over S_n");
    dist_cmd->add_option("--pair", dist_opts.pair, "Statistic pair, e.g. \"exc/den\"")
        ->required();
    dist_cmd->add_option("--n", dist_opts.n, "Symmetric group size")->required();
    add_format(dist_cmd, dist_opts.common);
    add_cap(dist_cmd, dist_opts.common);
    add_workers(dist_cmd, dist_opts.common);

    VerifyOpts verify_opts;
    CLI::App* verify_cmd = make_cmd(app, "verify", "Run a verification suite");
    verify_cmd
        ->add_option("--theorem", verify_opts.theorem,
                     "One of 1.1, 1.2, 1.3, 1.4, 2.1, 4.1, mahonian, denert")
        ->required()
        ->check(CLI::IsMember({"1.1", "1.2", "1.3", "1.4", "2.1", "4.1", "mahonian",
                               "denert"}));
    verify_cmd->add_option("--r", verify_opts.r, "Restrict to one r");
    verify_cmd->add_option("--g", verify_opts.g, "Restrict to one g");
    verify_cmd->add_option("--l", verify_opts.l, "Restrict to one l");
    verify_cmd->add_option("--h", verify_opts.h, "Restrict to one h");
    verify_cmd->add_option("--max-n", verify_opts.max_n, "Largest n to sweep");
    add_format(verify_cmd, verify_opts.common);
    add_cap(verify_cmd, verify_opts.common);
    add_workers(verify_cmd, verify_opts.common);

    CounterexampleOpts cx_opts;
    CLI::App* cx_cmd = make_cmd(
        app, "counterexample",
        "Search for the smallest n where two pairs' distributions differ");
    cx_cmd->add_option("--pair-a", cx_opts.pair_a, "First statistic pair")->required();
    cx_cmd->add_option("--pair-b", cx_opts.pair_b, "Second statistic pair")->required();
    cx_cmd->add_option("--max-n", cx_opts.max_n, "Largest n to search")
        ->capture_default_str();
    add_format(cx_cmd, cx_opts.common);
    add_cap(cx_cmd, cx_opts.common);
    add_workers(cx_cmd, cx_opts.common);

    CommonOpts table1_opts;
    CLI::App* table1_cmd =
        make_cmd(app, "table1", "Images of (621534, c) with their (exc_r, den)");
    add_format(table1_cmd, table1_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(stat_cmd)) {
            if (stat_opts.perm.empty() && stat_opts.perm_file.empty()) {
                throw invalid_input_error("one of --perm/--perm-file is required");
            }
            return run_stat(stat_opts, out);
        }
        if (app.got_subcommand(apply_cmd)) return run_apply(apply_opts, out);
        if (app.got_subcommand(invert_cmd)) return run_invert(invert_opts, out);
        if (app.got_subcommand(dist_cmd)) return run_dist(dist_opts, out);
        if (app.got_subcommand(verify_cmd)) {
            return emit_reports(run_verify(verify_opts), verify_opts.common, out);
        }
        if (app.got_subcommand(cx_cmd)) {
            const Report report =
                find_counterexample(parse_pair(cx_opts.pair_a), parse_pair(cx_opts.pair_b),
                                    cx_opts.max_n, cx_opts.common.workers,
                                    cx_opts.common.cap);
            return emit_reports({report}, cx_opts.common, out);
        }
        if (app.got_subcommand(table1_cmd)) return run_table1(table1_opts, out);
    } catch (const cap_exceeded_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const invalid_input_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const range_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace denstat
