// Command-line front end; links only the public C interface.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cycldpc.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;

int status_exit(cycldpc_status st) {
    switch (st) {
        case CYCLDPC_OK: return 0;
        case CYCLDPC_UNSUPPORTED:
        case CYCLDPC_INADMISSIBLE:
        case CYCLDPC_DEGENERATE:
        case CYCLDPC_NOT_IDEMPOTENT: return kExitMath;
        default: return kExitUsage;
    }
}

int report_error(cycldpc_status st) {
    std::cerr << "error: " << cycldpc_last_error_message() << "\n";
    return status_exit(st);
}

bool parse_int(const std::string& s, int& out) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) return false;
        out = v;
        return true;
    } catch (...) {
        return false;
    }
}

// "5:23,7:0,9" -> leaders {5,7,9}, seed exponents {23,0,0}
bool parse_leader_spec(const std::string& spec, std::vector<int>& leaders, std::vector<int>& seeds) {
    leaders.clear();
    seeds.clear();
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) return false;
        size_t colon = item.find(':');
        int leader = 0, seed = 0;
        if (colon == std::string::npos) {
            if (!parse_int(item, leader)) return false;
        } else {
            if (!parse_int(item.substr(0, colon), leader)) return false;
            if (!parse_int(item.substr(colon + 1), seed)) return false;
        }
        leaders.push_back(leader);
        seeds.push_back(seed);
    }
    return !leaders.empty();
}

struct BlueprintArgs {
    int n = 0;
    int m = 0;
    std::string leader_spec;
    std::string u_text;
};

void add_blueprint_options(CLI::App* cmd, BlueprintArgs& args) {
    cmd->add_option("-n,--length", args.n, "code length n (odd)")->required();
    cmd->add_option("-m,--degree", args.m, "field degree m of GF(2^m)")->required();
    auto* mo = cmd->add_option("-M,--leaders", args.leader_spec,
                               "coset leaders with seed exponents, e.g. 5:23,7,9 (bare leader = seed 1)");
    auto* uo = cmd->add_option("-u,--poly", args.u_text, "u(x) in text form, e.g. b23*x^5+1*x^7");
    mo->excludes(uo);
    uo->excludes(mo);
}

// Builds a code handle from -M or -u; on failure prints the error and
// stores the process exit code.
cycldpc_code* build_code(const BlueprintArgs& args, bool allow_degenerate, int& exit_code) {
    cycldpc_code* code = nullptr;
    cycldpc_status st;
    if (!args.u_text.empty()) {
        st = cycldpc_construct_from_text(args.n, args.m, args.u_text.c_str(),
                                         allow_degenerate ? 1 : 0, &code);
    } else if (!args.leader_spec.empty()) {
        std::vector<int> leaders, seeds;
        if (!parse_leader_spec(args.leader_spec, leaders, seeds)) {
            std::cerr << "error: malformed leader spec '" << args.leader_spec << "'\n";
            exit_code = kExitUsage;
            return nullptr;
        }
        st = cycldpc_construct(args.n, args.m, leaders.data(), seeds.data(), leaders.size(), &code);
    } else {
        std::cerr << "error: one of -M or -u is required\n";
        exit_code = kExitUsage;
        return nullptr;
    }
    if (st != CYCLDPC_OK) {
        exit_code = report_error(st);
        return nullptr;
    }
    return code;
}

int cmd_construct(const BlueprintArgs& args) {
    int rc = 0;
    cycldpc_code* code = build_code(args, false, rc);
    if (!code) return rc;
    int wt = cycldpc_code_row_weight(code);
    std::cout << "n: " << cycldpc_code_n(code) << "\n"
              << "m: " << cycldpc_code_m(code) << "\n"
              << "m_prime: " << cycldpc_code_m_prime(code) << "\n"
              << "r: " << cycldpc_code_r(code) << "\n"
              << "l: " << cycldpc_code_l(code) << "\n"
              << "p: " << cycldpc_code_p_text(code) << "\n"
              << "u: " << cycldpc_code_u_text(code) << "\n"
              << "wt_u: " << wt << "\n"
              << "k: " << cycldpc_code_k(code) << "\n"
              << "d_lower: " << cycldpc_code_bch_lower(code) << "\n"
              << "d_upper: " << cycldpc_code_dmin_upper(code) << "\n";
    int db = 0;
    if (cycldpc_code_binary_dmin(code, 0, &db) == CYCLDPC_OK)
        std::cout << "d_binary: " << db << "\n";
    else
        std::cout << "d_binary: not computed\n";
    std::cout << "girth: " << cycldpc_code_girth_name(code) << "\n";
    cycldpc_code_free(code);
    return 0;
}

struct CsvSink {
    std::ostream* out;
};

void csv_line_cb(const char* line, void* user) {
    auto* sink = static_cast<CsvSink*>(user);
    *sink->out << line << "\n";
}

int cmd_search(int n, int m, int w_max, int k_min, int d, bool allow4, bool canonical, int threads,
               const std::string& out_path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return kExitUsage;
        }
        out = &file;
    }
    *out << cycldpc_search_csv_header() << "\n";
    CsvSink sink{out};
    cycldpc_status st = cycldpc_search(n, m, w_max, k_min, d, allow4 ? 1 : 0, canonical ? 1 : 0,
                                       threads, csv_line_cb, &sink);
    if (st != CYCLDPC_OK) return report_error(st);
    return 0;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct FixtureRow {
    std::map<std::string, std::string> kv;
    int line = 0;
};

// "[code]" section headers; key = value lines; '#' starts a comment.
bool parse_fixture(const std::string& path, std::vector<FixtureRow>& rows, std::string& err) {
    std::ifstream f(path);
    if (!f) {
        err = "cannot open fixture file " + path;
        return false;
    }
    std::string line;
    int ln = 0;
    bool in_row = false;
    while (std::getline(f, line)) {
        ++ln;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line == "[code]") {
            rows.push_back({{}, ln});
            in_row = true;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos || !in_row) {
            err = path + ":" + std::to_string(ln) + ": expected 'key = value' inside a [code] section";
            return false;
        }
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) {
            err = path + ":" + std::to_string(ln) + ": empty key";
            return false;
        }
        rows.back().kv[key] = val;
    }
    if (rows.empty()) {
        err = path + ": no [code] sections found";
        return false;
    }
    return true;
}

int cmd_verify_table(const std::string& path) {
    std::vector<FixtureRow> rows;
    std::string err;
    if (!parse_fixture(path, rows, err)) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
    }

    int ok_count = 0;
    int notes = 0;
    for (const FixtureRow& row : rows) {
        auto get = [&](const std::string& key) -> const std::string* {
            auto it = row.kv.find(key);
            return it == row.kv.end() ? nullptr : &it->second;
        };
        const std::string* name_p = get("name");
        std::string name = name_p ? *name_p : ("row at line " + std::to_string(row.line));
        std::vector<std::string> bad;

        const std::string* u = get("u");
        int n = 0, m = 0;
        bool have_nm = get("n") && parse_int(*get("n"), n) && get("m") && parse_int(*get("m"), m);
        if (!u || !have_nm) {
            std::cerr << "error: " << path << ":" << row.line << ": rows need n, m and u keys\n";
            return kExitUsage;
        }

        cycldpc_code* code = nullptr;
        cycldpc_status st = cycldpc_construct_from_text(n, m, u->c_str(), 0, &code);
        if (st != CYCLDPC_OK) {
            std::cout << "MISMATCH " << name << ": construction failed: " << cycldpc_last_error_message()
                      << "\n";
            continue;
        }

        auto check_int = [&](const char* key, int got) {
            const std::string* want = get(key);
            int w = 0;
            if (want && parse_int(*want, w) && w != got)
                bad.push_back(std::string(key) + " expected " + *want + ", got " + std::to_string(got));
        };
        check_int("k", cycldpc_code_k(code));
        check_int("d_lower", cycldpc_code_bch_lower(code));
        check_int("m_prime", cycldpc_code_m_prime(code));
        check_int("r", cycldpc_code_r(code));
        check_int("l", cycldpc_code_l(code));
        if (const std::string* fcf = get("four_cycle_free")) {
            bool want = *fcf == "true" || *fcf == "1";
            bool got = cycldpc_code_four_cycle_free(code) != 0;
            if (want != got)
                bad.push_back(std::string("four_cycle_free expected ") + (want ? "true" : "false") +
                              ", got " + (got ? "true" : "false"));
        }
        if (*u != cycldpc_code_u_text(code))
            bad.push_back("u(x) did not round-trip through the text form");

        // the leader/seed list, when present, must regenerate the same u(x)
        if (const std::string* lspec = get("leaders")) {
            std::vector<int> leaders, seeds;
            if (!parse_leader_spec(*lspec, leaders, seeds)) {
                bad.push_back("malformed leaders key");
            } else {
                cycldpc_code* from_spec = nullptr;
                if (cycldpc_construct(n, m, leaders.data(), seeds.data(), leaders.size(), &from_spec) !=
                    CYCLDPC_OK) {
                    bad.push_back(std::string("leader reconstruction failed: ") +
                                  cycldpc_last_error_message());
                } else {
                    if (std::strcmp(cycldpc_code_u_text(from_spec), u->c_str()) != 0)
                        bad.push_back("leader reconstruction produced a different u(x)");
                    cycldpc_code_free(from_spec);
                }
            }
        }

        if (bad.empty()) {
            ++ok_count;
            std::cout << "ok " << name << ": k=" << cycldpc_code_k(code)
                      << " d_lower=" << cycldpc_code_bch_lower(code)
                      << " girth=" << cycldpc_code_girth_name(code);
            if (const std::string* db = get("d_binary")) std::cout << " d_binary=" << *db << " (reference)";
            if (const std::string* note = get("annotation")) {
                std::cout << " note: " << *note;
                ++notes;
            }
            std::cout << "\n";
        } else {
            std::cout << "MISMATCH " << name << ":";
            for (const std::string& b : bad) std::cout << " [" << b << "]";
            std::cout << "\n";
        }
        cycldpc_code_free(code);
    }

    std::cout << "verified " << ok_count << "/" << rows.size() << " rows, " << notes
              << " annotated expectations\n";
    return ok_count == static_cast<int>(rows.size()) ? 0 : kExitMath;
}

int cmd_simulate(const BlueprintArgs& args, const std::vector<double>& ebno, long long frames,
                 long long errors, uint64_t seed, int iters, int threads, const std::string& out_path,
                 const std::string& plot_path) {
    int rc = 0;
    cycldpc_code* code = build_code(args, false, rc);
    if (!code) return rc;

    std::vector<cycldpc_fer_point> pts(ebno.size());
    cycldpc_status st = cycldpc_simulate(code, ebno.data(), ebno.size(), frames, errors, seed, iters,
                                         threads, pts.data());
    cycldpc_code_free(code);
    if (st != CYCLDPC_OK) return report_error(st);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return kExitUsage;
        }
        out = &file;
    }
    *out << "ebno_db,frames,frame_errors,fer,ber,avg_iterations\n";
    char buf[192];
    for (const auto& p : pts) {
        std::snprintf(buf, sizeof buf, "%g,%lld,%lld,%.10g,%.10g,%.10g", p.ebno_db, p.frames,
                      p.frame_errors, p.fer, p.ber, p.avg_iterations);
        *out << buf << "\n";
    }

    if (!plot_path.empty()) {
        std::ofstream pf(plot_path);
        if (!pf) {
            std::cerr << "error: cannot open " << plot_path << "\n";
            return kExitUsage;
        }
        pf << "# ebno_db fer ber\n";
        for (const auto& p : pts) {
            std::snprintf(buf, sizeof buf, "%g %.10g %.10g", p.ebno_db, p.fer, p.ber);
            pf << buf << "\n";
        }
    }
    return 0;
}

int cmd_export(const BlueprintArgs& args, const std::string& format, const std::string& out_path) {
    int rc = 0;
    cycldpc_code* code = build_code(args, true, rc);
    if (!code) return rc;
    cycldpc_status st;
    if (format == "alist")
        st = cycldpc_write_alist(code, out_path.c_str());
    else
        st = cycldpc_write_matrix_csv(code, out_path.c_str());
    cycldpc_code_free(code);
    if (st != CYCLDPC_OK) return report_error(st);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic LDPC codes over GF(2^m) from sums of cyclotomic idempotents"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(cycldpc_version()); });
    app.set_config("--config", "",
                   "key=value file ('#' comments); keys are <subcommand>.<option>, e.g. construct.length=21");

    BlueprintArgs cons_args;
    auto* construct = app.add_subcommand("construct", "build one code and print its report");
    add_blueprint_options(construct, cons_args);
    construct->fallthrough();

    int s_n = 0, s_m = 0, s_wmax = 1, s_kmin = 0, s_d = 2, s_threads = 1;
    bool s_allow4 = false, s_canon = false;
    std::string s_out;
    auto* search = app.add_subcommand("search", "enumerate the design space as CSV");
    search->add_option("-n,--length", s_n, "code length n (odd)")->required();
    search->add_option("-m,--degree", s_m, "field degree m of GF(2^m)")->required();
    search->add_option("-W,--wmax", s_wmax, "maximum wt(u)")->required();
    search->add_option("-K,--kmin", s_kmin, "minimum dimension k");
    search->add_option("-d,--dmin", s_d, "minimum BCH lower bound on d_min");
    search->add_flag("--allow-4cycles", s_allow4, "keep codes whose Tanner graph has 4-cycles");
    search->add_flag("--leader-canonical", s_canon, "pin the first leader's coefficient to 1");
    search->add_option("-j,--threads", s_threads, "worker threads (default 1)");
    search->add_option("-o,--output", s_out, "write CSV here instead of stdout");
    search->fallthrough();

    std::string v_path = "data/code_table.txt";
    auto* verify = app.add_subcommand("verify-table", "re-derive every fixture row and compare");
    verify->add_option("fixture", v_path, "fixture file path");

    BlueprintArgs sim_args;
    std::vector<double> sim_ebno;
    long long sim_frames = 10000, sim_errors = 100;
    uint64_t sim_seed = 1;
    int sim_iters = 100, sim_threads = 0;
    std::string sim_out, sim_plot;
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo FER/BER sweep over AWGN");
    add_blueprint_options(simulate, sim_args);
    simulate->add_option("--ebno", sim_ebno, "Eb/N0 grid in dB")->required()->delimiter(',');
    simulate->add_option("--frames", sim_frames, "frame budget per point");
    simulate->add_option("--errors", sim_errors, "stop a point after this many frame errors");
    simulate->add_option("--seed", sim_seed, "simulation seed");
    simulate->add_option("--iters", sim_iters, "decoder iteration cap");
    simulate->add_option("-j,--threads", sim_threads, "worker threads (0 = hardware)");
    simulate->add_option("-o,--output", sim_out, "write CSV here instead of stdout");
    simulate->add_option("--plot", sim_plot, "also write a gnuplot-ready data file");
    simulate->fallthrough();

    BlueprintArgs exp_args;
    std::string exp_format, exp_out;
    auto* exp = app.add_subcommand("export", "write the parity-check matrix to a file");
    add_blueprint_options(exp, exp_args);
    exp->add_option("--format", exp_format, "alist or csv")
        ->required()
        ->check(CLI::IsMember({"alist", "csv"}));
    exp->add_option("-o,--output", exp_out, "output path")->required();
    exp->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (app.got_subcommand(construct)) return cmd_construct(cons_args);
    if (app.got_subcommand(search))
        return cmd_search(s_n, s_m, s_wmax, s_kmin, s_d, s_allow4, s_canon, s_threads, s_out);
    if (app.got_subcommand(verify)) return cmd_verify_table(v_path);
    if (app.got_subcommand(simulate))
        return cmd_simulate(sim_args, sim_ebno, sim_frames, sim_errors, sim_seed, sim_iters, sim_threads,
                            sim_out, sim_plot);
    if (app.got_subcommand(exp)) return cmd_export(exp_args, exp_format, exp_out);
    return kExitUsage;
}
