#include "doctest.h"
#include "cycldpc.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

const char* kEx1 =
    "b23*x^5+1*x^7+1*x^9+b46*x^10+b43*x^13+1*x^14+1*x^15+b53*x^17+1*x^18+b58*x^19+b29*x^20";

struct Handle {
    cycldpc_code* c = nullptr;
    ~Handle() { cycldpc_code_free(c); }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("worked-example construction exposes the full report through getters") {
    const int leaders[] = {5, 7, 9};
    const int seeds[] = {23, 0, 0};
    Handle h;
    REQUIRE(cycldpc_construct(21, 6, leaders, seeds, 3, &h.c) == CYCLDPC_OK);
    REQUIRE(h.c != nullptr);
    CHECK(cycldpc_code_n(h.c) == 21);
    CHECK(cycldpc_code_m(h.c) == 6);
    CHECK(cycldpc_code_m_prime(h.c) == 6);
    CHECK(cycldpc_code_r(h.c) == 3);
    CHECK(cycldpc_code_l(h.c) == 1);
    CHECK(cycldpc_code_k(h.c) == 15);
    CHECK(cycldpc_code_bch_lower(h.c) == 5);
    CHECK(cycldpc_code_dmin_upper(h.c) == 5);
    CHECK(cycldpc_code_row_weight(h.c) == 11);
    CHECK(cycldpc_code_orthogonal(h.c) == 0);
    CHECK(cycldpc_code_difference_set(h.c) == 0);
    CHECK(cycldpc_code_four_cycle_free(h.c) == 1);
    CHECK(std::string(cycldpc_code_u_text(h.c)) == kEx1);
    CHECK(std::string(cycldpc_code_p_text(h.c)) == "1+x+x^6");
    CHECK(std::string(cycldpc_code_girth_name(h.c)) == "4-cycle-free");
}

TEST_CASE("text construction round-trips the handle state") {
    Handle a;
    const int leaders[] = {5, 7, 9};
    const int seeds[] = {23, 0, 0};
    REQUIRE(cycldpc_construct(21, 6, leaders, seeds, 3, &a.c) == CYCLDPC_OK);
    Handle b;
    REQUIRE(cycldpc_construct_from_text(21, 6, kEx1, 0, &b.c) == CYCLDPC_OK);
    CHECK(cycldpc_code_k(b.c) == cycldpc_code_k(a.c));
    CHECK(cycldpc_code_bch_lower(b.c) == cycldpc_code_bch_lower(a.c));
    CHECK(std::string(cycldpc_code_u_text(b.c)) == std::string(cycldpc_code_u_text(a.c)));
    CHECK(std::string(cycldpc_code_p_text(b.c)) == "1+x+x^6");
}

TEST_CASE("degenerate support is gated by allow_degenerate") {
    cycldpc_code* c = nullptr;
    CHECK(cycldpc_construct_from_text(21, 6, "1*x^0", 0, &c) == CYCLDPC_DEGENERATE);
    CHECK(c == nullptr);
    CHECK(std::string(cycldpc_last_error_message()).find("share a factor") != std::string::npos);
    Handle h;
    REQUIRE(cycldpc_construct_from_text(21, 6, "1*x^0", 1, &h.c) == CYCLDPC_OK);
    CHECK(cycldpc_code_k(h.c) == 0);
    CHECK(cycldpc_code_row_weight(h.c) == 1);
}

TEST_CASE("status codes distinguish the rejection reasons") {
    cycldpc_code* c = nullptr;
    int leader = 3;
    int seed = 5;
    CHECK(cycldpc_construct(21, 6, &leader, &seed, 1, &c) == CYCLDPC_INADMISSIBLE);
    CHECK(std::string(cycldpc_last_error_message()).find("GF(2^3)") != std::string::npos);
    seed = 0;
    CHECK(cycldpc_construct(21, 6, &leader, &seed, 1, &c) == CYCLDPC_DEGENERATE);
    leader = 1;
    CHECK(cycldpc_construct(7, 2, &leader, &seed, 1, &c) == CYCLDPC_UNSUPPORTED);
    CHECK(cycldpc_last_error_message()[0] != '\0');
    CHECK(cycldpc_construct_from_text(21, 6, "b23*x^5", 0, &c) == CYCLDPC_NOT_IDEMPOTENT);
    CHECK(cycldpc_construct(21, 6, nullptr, &seed, 1, &c) == CYCLDPC_EINVAL);
    CHECK(cycldpc_construct(21, 6, &leader, &seed, 0, &c) == CYCLDPC_EINVAL);
    CHECK(cycldpc_construct(21, 6, &leader, &seed, 1, nullptr) == CYCLDPC_EINVAL);
    CHECK(cycldpc_construct_from_text(21, 6, nullptr, 0, &c) == CYCLDPC_EINVAL);
}

TEST_CASE("encode, syndrome, and decode agree across the boundary") {
    const int leaders[] = {5, 7, 9};
    const int seeds[] = {23, 0, 0};
    Handle h;
    REQUIRE(cycldpc_construct(21, 6, leaders, seeds, 3, &h.c) == CYCLDPC_OK);
    std::vector<uint32_t> msg(15);
    for (size_t i = 0; i < msg.size(); ++i) msg[i] = static_cast<uint32_t>((7 * i + 3) % 64);
    std::vector<uint32_t> cw(21);
    REQUIRE(cycldpc_encode(h.c, msg.data(), cw.data()) == CYCLDPC_OK);
    for (size_t i = 0; i < msg.size(); ++i) CHECK(cw[6 + i] == msg[i]);
    int sw = -1;
    REQUIRE(cycldpc_syndrome_weight(h.c, cw.data(), &sw) == CYCLDPC_OK);
    CHECK(sw == 0);
    std::vector<uint32_t> bad = cw;
    bad[4] ^= 1u;
    REQUIRE(cycldpc_syndrome_weight(h.c, bad.data(), &sw) == CYCLDPC_OK);
    CHECK(sw > 0);

    std::vector<double> priors(21 * 64, 0.0);
    for (int j = 0; j < 21; ++j) priors[static_cast<size_t>(j) * 64 + cw[static_cast<size_t>(j)]] = 1.0;
    std::vector<uint32_t> decision(21, 99);
    int iters = -1, conv = -1;
    REQUIRE(cycldpc_decode(h.c, priors.data(), 0, decision.data(), &iters, &conv) == CYCLDPC_OK);
    CHECK(decision == cw);
    CHECK(iters == 0);
    CHECK(conv == 1);

    msg[0] = 64; // out of field range
    CHECK(cycldpc_encode(h.c, msg.data(), cw.data()) == CYCLDPC_EINVAL);
    cw[0] = 64;
    CHECK(cycldpc_syndrome_weight(h.c, cw.data(), &sw) == CYCLDPC_EINVAL);
    CHECK(cycldpc_decode(h.c, nullptr, 0, decision.data(), nullptr, nullptr) == CYCLDPC_EINVAL);
}

TEST_CASE("binary-image minimum distance honours its cap") {
    int leader = 1;
    int seed = 0;
    Handle h;
    REQUIRE(cycldpc_construct(7, 1, &leader, &seed, 1, &h.c) == CYCLDPC_OK);
    int d = 0;
    REQUIRE(cycldpc_code_binary_dmin(h.c, 0, &d) == CYCLDPC_OK);
    CHECK(d == 4);
    const int leaders[] = {5, 7, 9};
    const int seeds[] = {23, 0, 0};
    Handle big;
    REQUIRE(cycldpc_construct(21, 6, leaders, seeds, 3, &big.c) == CYCLDPC_OK);
    CHECK(cycldpc_code_binary_dmin(big.c, 0, &d) == CYCLDPC_UNSUPPORTED);
    CHECK(cycldpc_code_binary_dmin(h.c, 1, &d) == CYCLDPC_UNSUPPORTED);
    CHECK(cycldpc_code_binary_dmin(h.c, 0, nullptr) == CYCLDPC_EINVAL);
}

TEST_CASE("simulation is deterministic for a fixed seed") {
    const int leaders[] = {5, 7, 9};
    const int seeds[] = {23, 0, 0};
    Handle h;
    REQUIRE(cycldpc_construct(21, 6, leaders, seeds, 3, &h.c) == CYCLDPC_OK);
    double grid = 3.0;
    cycldpc_fer_point p1{}, p2{};
    REQUIRE(cycldpc_simulate(h.c, &grid, 1, 256, 1000, 7, 50, 2, &p1) == CYCLDPC_OK);
    REQUIRE(cycldpc_simulate(h.c, &grid, 1, 256, 1000, 7, 50, 1, &p2) == CYCLDPC_OK);
    CHECK(p1.ebno_db == 3.0);
    CHECK(p1.frames == 256);
    CHECK(p1.frames == p2.frames);
    CHECK(p1.frame_errors == p2.frame_errors);
    CHECK(p1.fer == p2.fer);
    CHECK(p1.ber == p2.ber);
    CHECK(p1.avg_iterations == p2.avg_iterations);
    CHECK(cycldpc_simulate(h.c, nullptr, 1, 256, 100, 7, 0, 0, &p1) == CYCLDPC_EINVAL);
    CHECK(cycldpc_simulate(h.c, &grid, 0, 256, 100, 7, 0, 0, &p1) == CYCLDPC_EINVAL);
    CHECK(cycldpc_simulate(h.c, &grid, 1, 0, 100, 7, 0, 0, &p1) != CYCLDPC_OK);
}

TEST_CASE("search streams the two binary n=21 records through the callback") {
    std::vector<std::string> rows;
    auto cb = [](const char* line, void* user) {
        static_cast<std::vector<std::string>*>(user)->push_back(line);
    };
    REQUIRE(cycldpc_search(21, 1, 5, 0, 2, 0, 0, 1, cb, &rows) == CYCLDPC_OK);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "21,1,6,3,63,3;7,0;0,5,11,6,6,difference-set,1*x^3+1*x^6+1*x^7+1*x^12+1*x^14");
    CHECK(rows[1] == "21,1,6,3,63,7;9,0;0,5,11,6,6,difference-set,1*x^7+1*x^9+1*x^14+1*x^15+1*x^18");
    CHECK(std::string(cycldpc_search_csv_header()) ==
          "n,m,m_prime,r,l,leaders,coeff_exps,wt_u,k,bch_lower,dmin_upper,girth,u_text");
    CHECK(cycldpc_search(21, 1, 5, 0, 2, 0, 0, 1, nullptr, nullptr) == CYCLDPC_EINVAL);
    CHECK(cycldpc_search(20, 1, 5, 0, 2, 0, 0, 1, cb, &rows) == CYCLDPC_EINVAL);
}

TEST_CASE("file exports write the documented formats") {
    int leader = 1;
    int seed = 0;
    Handle h;
    REQUIRE(cycldpc_construct(7, 1, &leader, &seed, 1, &h.c) == CYCLDPC_OK);
    auto dir = std::filesystem::temp_directory_path();
    auto alist_path = dir / "cycldpc_capi_alist.txt";
    auto csv_path = dir / "cycldpc_capi_matrix.csv";
    REQUIRE(cycldpc_write_alist(h.c, alist_path.string().c_str()) == CYCLDPC_OK);
    // u = x + x^2 + x^4, reciprocal mirrors around deg 4: support {0, 2, 3};
    // row i of H has ones at columns i, i+2, i+3 (mod 7)
    CHECK(slurp(alist_path) ==
          "7 7\n3 3\n"
          "3 3 3 3 3 3 3\n3 3 3 3 3 3 3\n"
          "1 0 5 0 6 0\n2 0 6 0 7 0\n1 0 3 0 7 0\n1 0 2 0 4 0\n"
          "2 0 3 0 5 0\n3 0 4 0 6 0\n4 0 5 0 7 0\n"
          "1 0 3 0 4 0\n2 0 4 0 5 0\n3 0 5 0 6 0\n4 0 6 0 7 0\n"
          "1 0 5 0 7 0\n1 0 2 0 6 0\n2 0 3 0 7 0\n");
    REQUIRE(cycldpc_write_matrix_csv(h.c, csv_path.string().c_str()) == CYCLDPC_OK);
    CHECK(slurp(csv_path) ==
          "0,-1,0,0,-1,-1,-1\n"
          "-1,0,-1,0,0,-1,-1\n"
          "-1,-1,0,-1,0,0,-1\n"
          "-1,-1,-1,0,-1,0,0\n"
          "0,-1,-1,-1,0,-1,0\n"
          "0,0,-1,-1,-1,0,-1\n"
          "-1,0,0,-1,-1,-1,0\n");
    std::filesystem::remove(alist_path);
    std::filesystem::remove(csv_path);
    CHECK(cycldpc_write_alist(h.c, "/nonexistent_dir_zzz/x.alist") == CYCLDPC_IO);
    CHECK(cycldpc_write_alist(h.c, nullptr) == CYCLDPC_EINVAL);
    CHECK(cycldpc_write_alist(nullptr, alist_path.string().c_str()) == CYCLDPC_EINVAL);
}

TEST_CASE("null handles degrade to neutral values") {
    CHECK(cycldpc_code_n(nullptr) == 0);
    CHECK(cycldpc_code_k(nullptr) == 0);
    CHECK(std::string(cycldpc_code_u_text(nullptr)) == "");
    CHECK(std::string(cycldpc_code_girth_name(nullptr)) == "");
    CHECK(std::string(cycldpc_version()) == "0.1.0");
    cycldpc_code_free(nullptr); // must be a no-op
}
