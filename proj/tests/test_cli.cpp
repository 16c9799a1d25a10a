#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

// CYCLDPC_CLI_PATH and CYCLDPC_FIXTURE_DIR come from the build system.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string("\"") + CYCLDPC_CLI_PATH + "\" " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

const char* kEx1Report =
    "n: 21\n"
    "m: 6\n"
    "m_prime: 6\n"
    "r: 3\n"
    "l: 1\n"
    "p: 1+x+x^6\n"
    "u: b23*x^5+1*x^7+1*x^9+b46*x^10+b43*x^13+1*x^14+1*x^15+b53*x^17+1*x^18+b58*x^19+b29*x^20\n"
    "wt_u: 11\n"
    "k: 15\n"
    "d_lower: 5\n"
    "d_upper: 5\n"
    "d_binary: not computed\n"
    "girth: 4-cycle-free\n";

const char* kSearch21CSV =
    "n,m,m_prime,r,l,leaders,coeff_exps,wt_u,k,bch_lower,dmin_upper,girth,u_text\n"
    "21,1,6,3,63,3;7,0;0,5,11,6,6,difference-set,1*x^3+1*x^6+1*x^7+1*x^12+1*x^14\n"
    "21,1,6,3,63,7;9,0;0,5,11,6,6,difference-set,1*x^7+1*x^9+1*x^14+1*x^15+1*x^18\n";

} // namespace

TEST_CASE("construct prints the worked-example report verbatim") {
    auto r = run_cli("construct -n 21 -m 6 -M 5:23,7,9");
    CHECK(r.exit_code == 0);
    CHECK(r.out == kEx1Report);
    auto colon_seeds = run_cli("construct -n 21 -m 6 -M 5:23,7:0,9:0");
    CHECK(colon_seeds.out == kEx1Report);
}

TEST_CASE("construct accepts the binary worked example and computes its binary distance") {
    auto r = run_cli("construct -n 7 -m 1 -M 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n: 7\n"
          "m: 1\n"
          "m_prime: 3\n"
          "r: 1\n"
          "l: 7\n"
          "p: 1+x\n"
          "u: 1*x^1+1*x^2+1*x^4\n"
          "wt_u: 3\n"
          "k: 3\n"
          "d_lower: 4\n"
          "d_upper: 4\n"
          "d_binary: 4\n"
          "girth: difference-set\n");
}

TEST_CASE("construct via -u reproduces the -M report byte for byte") {
    auto r = run_cli("construct -n 21 -m 6 -u "
                     "b23*x^5+1*x^7+1*x^9+b46*x^10+b43*x^13+1*x^14+1*x^15+b53*x^17+1*x^18+b58*x^19+"
                     "b29*x^20");
    CHECK(r.exit_code == 0);
    CHECK(r.out == kEx1Report);
}

TEST_CASE("mathematical rejections exit with code 2") {
    CHECK(run_cli("construct -n 21 -m 6 -M 3", true).exit_code == 2);
    CHECK(run_cli("construct -n 21 -m 6 -M 3:5", true).exit_code == 2);
    CHECK(run_cli("construct -n 7 -m 2 -M 1", true).exit_code == 2);
    CHECK(run_cli("construct -n 21 -m 6 -u b23*x^5", true).exit_code == 2);
    auto r = run_cli("construct -n 21 -m 6 -M 3", true);
    CHECK(r.out.find("error:") != std::string::npos);
    CHECK(r.out.find("share a factor") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("", true).exit_code == 1);
    CHECK(run_cli("nonsense", true).exit_code == 1);
    CHECK(run_cli("construct -n 21", true).exit_code == 1);
    CHECK(run_cli("construct -n 21 -m 6", true).exit_code == 1);
    CHECK(run_cli("construct -n 21 -m 6 -M 5:23 -u 1*x^0", true).exit_code == 1);
    CHECK(run_cli("construct -n 21 -m 6 -M 5:23,7,9 --bogus", true).exit_code == 1);
    CHECK(run_cli("construct -n 21 -m 6 -M 5:xx", true).exit_code == 1);
    CHECK(run_cli("construct -n 21 -m 6 -M 5:-9", true).exit_code == 1);
    CHECK(run_cli("search -n 21 -m 1", true).exit_code == 1);
    CHECK(run_cli("export -n 7 -m 1 -M 1 --format bogus -o /tmp/x", true).exit_code == 1);
}

TEST_CASE("version and help") {
    auto v = run_cli("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.out == "0.1.0\n");
    auto h = run_cli("--help");
    CHECK(h.exit_code == 0);
    for (const char* sub : {"construct", "search", "verify-table", "simulate", "export"})
        CHECK(h.out.find(sub) != std::string::npos);
}

TEST_CASE("search streams its CSV to stdout or a file") {
    auto r = run_cli("search -n 21 -m 1 -W 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == kSearch21CSV);

    auto out_path = std::filesystem::temp_directory_path() / "cycldpc_cli_search.csv";
    auto f = run_cli("search -n 21 -m 1 -W 5 -o " + out_path.string());
    CHECK(f.exit_code == 0);
    CHECK(f.out.empty());
    CHECK(slurp(out_path) == kSearch21CSV);
    std::filesystem::remove(out_path);

    auto empty = run_cli("search -n 21 -m 1 -W 5 -K 100");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out == "n,m,m_prime,r,l,leaders,coeff_exps,wt_u,k,bch_lower,dmin_upper,girth,u_text\n");
}

TEST_CASE("export writes the identity circulant for u = 1") {
    auto dir = std::filesystem::temp_directory_path();
    auto alist = dir / "cycldpc_cli_u1.alist";
    auto r = run_cli("export -n 21 -m 6 -u 1*x^0 --format alist -o " + alist.string());
    CHECK(r.exit_code == 0);
    std::string text = slurp(alist);
    std::string ones = "1";
    for (int i = 1; i < 21; ++i) ones += " 1";
    CHECK(text.rfind("21 21\n1 1\n" + ones + "\n" + ones + "\n", 0) == 0);
    // 4 header lines + 21 column lists + 21 row lists
    CHECK(std::count(text.begin(), text.end(), '\n') == 46);
    CHECK(text.find("\n1 0\n") != std::string::npos);
    std::filesystem::remove(alist);

    auto csv = dir / "cycldpc_cli_u1.csv";
    auto c = run_cli("export -n 21 -m 6 -u 1*x^0 --format csv -o " + csv.string());
    CHECK(c.exit_code == 0);
    std::string line1 = slurp(csv).substr(0, slurp(csv).find('\n'));
    CHECK(line1 == "0,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1,-1");
    std::filesystem::remove(csv);

    CHECK(run_cli("export -n 7 -m 1 -M 1 --format alist -o /nonexistent_dir_zzz/x", true).exit_code == 1);
}

TEST_CASE("simulate is byte-deterministic across runs and thread counts") {
    const char* want =
        "ebno_db,frames,frame_errors,fer,ber,avg_iterations\n"
        "2,64,15,0.234375,0.02318948413,23.953125\n";
    auto a = run_cli("simulate -n 21 -m 6 -M 5:23,7,9 --ebno 2 --frames 64 --errors 64 --seed 5 -j 2");
    CHECK(a.exit_code == 0);
    CHECK(a.out == want);
    auto b = run_cli("simulate -n 21 -m 6 -M 5:23,7,9 --ebno 2 --frames 64 --errors 64 --seed 5 -j 1");
    CHECK(b.out == want);
}

TEST_CASE("simulate writes CSV and gnuplot data files") {
    auto dir = std::filesystem::temp_directory_path();
    auto csv = dir / "cycldpc_cli_sweep.csv";
    auto dat = dir / "cycldpc_cli_sweep.dat";
    auto r = run_cli("simulate -n 21 -m 6 -M 5:23,7,9 --ebno 2,4 --frames 32 --errors 32 --seed 5 -o " +
                     csv.string() + " --plot " + dat.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(csv) ==
          "ebno_db,frames,frame_errors,fer,ber,avg_iterations\n"
          "2,32,4,0.125,0.009920634921,15.5625\n"
          "4,32,0,0,0,1.15625\n");
    CHECK(slurp(dat) ==
          "# ebno_db fer ber\n"
          "2 0.125 0.009920634921\n"
          "4 0 0\n");
    std::filesystem::remove(csv);
    std::filesystem::remove(dat);
}

TEST_CASE("verify-table accepts the shipped fixture and rejects a tampered one") {
    std::string fixture = std::string(CYCLDPC_FIXTURE_DIR) + "/code_table.txt";
    auto r = run_cli("verify-table " + fixture);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verified 9/9 rows, 2 annotated expectations") != std::string::npos);
    size_t first_note = r.out.find(" note: ");
    REQUIRE(first_note != std::string::npos);
    CHECK(r.out.find(" note: ", first_note + 1) != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);

    // flip one expectation and the row must be called out
    std::ifstream in(fixture);
    REQUIRE(in.good());
    std::string line, tampered;
    bool flipped = false;
    while (std::getline(in, line)) {
        if (!flipped && line == "k = 15") {
            line = "k = 14";
            flipped = true;
        }
        tampered += line + "\n";
    }
    REQUIRE(flipped);
    auto bad_path = std::filesystem::temp_directory_path() / "cycldpc_cli_tampered.txt";
    std::ofstream(bad_path) << tampered;
    auto bad = run_cli("verify-table " + bad_path.string());
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("MISMATCH") != std::string::npos);
    CHECK(bad.out.find("k expected 14, got 15") != std::string::npos);
    std::filesystem::remove(bad_path);

    CHECK(run_cli("verify-table /nonexistent_zzz.txt", true).exit_code == 1);
}

TEST_CASE("a key=value config file reproduces the flag-driven report") {
    auto cfg_path = std::filesystem::temp_directory_path() / "cycldpc_cli_cons.cfg";
    std::ofstream(cfg_path) << "# worked example\n"
                            << "construct.length=21\n"
                            << "construct.degree=6\n"
                            << "construct.leaders=\"5:23,7,9\"\n";
    auto before = run_cli("--config " + cfg_path.string() + " construct");
    CHECK(before.exit_code == 0);
    CHECK(before.out == kEx1Report);
    auto after = run_cli("construct --config " + cfg_path.string());
    CHECK(after.exit_code == 0);
    CHECK(after.out == kEx1Report);
    // explicit flags beat the file: -m 1 reduces every seed exponent mod 2^1 - 1
    auto override_run = run_cli("construct --config " + cfg_path.string() + " -m 1");
    CHECK(override_run.exit_code == 0);
    CHECK(override_run.out.rfind("n: 21\nm: 1\n", 0) == 0);
    std::filesystem::remove(cfg_path);
}
