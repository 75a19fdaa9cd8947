#include <doctest.h>

#include <cstring>
#include <string>

#include "tridec/tridec.h"

namespace {

struct Config {
    tridec_config* c = nullptr;
    Config() { REQUIRE(tridec_config_new(&c) == TRIDEC_OK); }
    ~Config() { tridec_config_free(c); }
};

std::string run(const Config& cfg, const char* input, tridec_status expect, int exit_code) {
    tridec_report* rep = nullptr;
    CHECK(tridec_run(cfg.c, input, &rep) == expect);
    REQUIRE(rep != nullptr);
    CHECK(tridec_report_exit_code(rep) == exit_code);
    std::string json = tridec_report_json(rep);
    tridec_report_free(rep);
    return json;
}

}  // namespace

TEST_CASE("argument errors") {
    CHECK(tridec_config_new(nullptr) == TRIDEC_ERR_ARG);
    CHECK(std::strlen(tridec_last_error()) > 0);
    Config cfg;
    CHECK(tridec_config_set_mode(cfg.c, "sideways") == TRIDEC_ERR_ARG);
    CHECK(std::string(tridec_last_error()).find("sideways") != std::string::npos);
    CHECK(tridec_config_set_mode(cfg.c, "verify") == TRIDEC_OK);
    CHECK(std::string(tridec_last_error()).empty());
    CHECK(tridec_config_set_m(cfg.c, 0) == TRIDEC_ERR_ARG);
    CHECK(tridec_config_set_order(cfg.c, "a,,b") == TRIDEC_ERR_ARG);
    tridec_report* rep = nullptr;
    CHECK(tridec_run(nullptr, "x1", &rep) == TRIDEC_ERR_ARG);
    CHECK(tridec_run(cfg.c, "x1", nullptr) == TRIDEC_ERR_ARG);
    CHECK(tridec_run_file(cfg.c, "/nonexistent/input.txt", &rep) == TRIDEC_ERR_IO);
    CHECK(rep == nullptr);
    tridec_report_free(nullptr);
    tridec_config_free(nullptr);
}

TEST_CASE("run statuses") {
    Config cfg;
    std::string ok = run(cfg, "x1*(x2-1)\n", TRIDEC_OK, 0);
    CHECK(ok.find("\"schema\": 1") != std::string::npos);
    std::string parse = run(cfg, "x1\nx2 +* 3\n", TRIDEC_ERR_PARSE, 1);
    CHECK(parse.find("\"line\": 2") != std::string::npos);
    run(cfg, "0\n", TRIDEC_ERR_INVALID, 1);
    CHECK(tridec_config_set_mode(cfg.c, "unmixed-only") == TRIDEC_OK);
    // Second chain element does not have leader x2.
    run(cfg, "x1^2-2\nx1+3\n", TRIDEC_ERR_INVALID, 1);
}

TEST_CASE("bounds-only and custom order") {
    Config cfg;
    REQUIRE(tridec_config_set_mode(cfg.c, "bounds-only") == TRIDEC_OK);
    REQUIRE(tridec_config_set_bound_params(cfg.c, 2, 2, 1) == TRIDEC_OK);
    std::string j = run(cfg, nullptr, TRIDEC_OK, 0);
    CHECK(j.find("\"component_bound\": \"169\"") != std::string::npos);
    Config named;
    REQUIRE(tridec_config_set_order(named.c, "b,a") == TRIDEC_OK);
    std::string k = run(named, "(a-1)*(b-2)\n", TRIDEC_OK, 0);
    CHECK(k.find("\"b - 2\"") != std::string::npos);
    CHECK(k.find("\"a - 1\"") != std::string::npos);
}

TEST_CASE("identical configs give identical reports") {
    Config a, b;
    for (auto* c : {a.c, b.c}) {
        tridec_config_set_seed(c, 42);
        tridec_config_set_verify(c, 1);
    }
    const char* input = "(x1-1)*(x1-2)*(x2-1)\n(x2-1)*(x3-2)\n";
    CHECK(run(a, input, TRIDEC_OK, 0) == run(b, input, TRIDEC_OK, 0));
}
