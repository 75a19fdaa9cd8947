#include "tridec/tridec.h"

#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "tridec/report.hpp"

struct tridec_config {
    tridec::RunConfig config;
};

struct tridec_report {
    tridec::RunOutcome outcome;
};

namespace {

thread_local std::string last_error;

tridec_status fail(tridec_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
}

tridec_status ok() {
    last_error.clear();
    return TRIDEC_OK;
}

template <class F>
tridec_status guarded(F&& body) {
    try {
        return body();
    } catch (const std::bad_alloc&) {
        return fail(TRIDEC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TRIDEC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TRIDEC_ERR_INTERNAL, "unknown exception");
    }
}

tridec_status outcome_status(const tridec::RunOutcome& o) {
    if (o.status == 0) return ok();
    if (o.status == 2) return fail(TRIDEC_ERR_INTERNAL, o.message);
    if (o.line > 0) return fail(TRIDEC_ERR_PARSE, "line " + std::to_string(o.line) + ": " + o.message);
    return fail(TRIDEC_ERR_INVALID, o.message);
}

}  // namespace

extern "C" {

const char* tridec_last_error(void) { return last_error.c_str(); }

const char* tridec_version(void) { return "0.1.0"; }

tridec_status tridec_config_new(tridec_config** out) {
    if (!out) return fail(TRIDEC_ERR_ARG, "null output pointer");
    return guarded([&] {
        *out = new tridec_config();
        return ok();
    });
}

void tridec_config_free(tridec_config* config) { delete config; }

tridec_status tridec_config_set_mode(tridec_config* config, const char* mode) {
    if (!config || !mode) return fail(TRIDEC_ERR_ARG, "null argument");
    auto m = tridec::parse_run_mode(mode);
    if (!m) return fail(TRIDEC_ERR_ARG, std::string("unknown mode: ") + mode);
    config->config.mode = *m;
    return ok();
}

tridec_status tridec_config_set_order(tridec_config* config, const char* names) {
    if (!config) return fail(TRIDEC_ERR_ARG, "null config");
    return guarded([&] {
        config->config.order.clear();
        if (!names || !*names) return ok();
        std::string s(names);
        std::size_t start = 0;
        while (true) {
            auto comma = s.find(',', start);
            std::string name = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (name.empty()) return fail(TRIDEC_ERR_ARG, "empty variable name in order");
            config->config.order.push_back(name);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return ok();
    });
}

tridec_status tridec_config_set_m(tridec_config* config, unsigned m) {
    if (!config) return fail(TRIDEC_ERR_ARG, "null config");
    if (m == 0) return fail(TRIDEC_ERR_ARG, "m must be positive");
    config->config.m = m;
    return ok();
}

tridec_status tridec_config_set_seed(tridec_config* config, uint64_t seed) {
    if (!config) return fail(TRIDEC_ERR_ARG, "null config");
    config->config.seed = seed;
    return ok();
}

tridec_status tridec_config_set_verify(tridec_config* config, int enabled) {
    if (!config) return fail(TRIDEC_ERR_ARG, "null config");
    config->config.verify = enabled != 0;
    return ok();
}

tridec_status tridec_config_set_bypass(tridec_config* config, const char* text) {
    if (!config) return fail(TRIDEC_ERR_ARG, "null config");
    return guarded([&] {
        if (text)
            config->config.bypass_text = std::string(text);
        else
            config->config.bypass_text.reset();
        return ok();
    });
}

tridec_status tridec_config_set_bound_params(tridec_config* config, unsigned n, unsigned d, unsigned r) {
    if (!config) return fail(TRIDEC_ERR_ARG, "null config");
    config->config.n = n;
    config->config.d = d;
    config->config.r = r;
    return ok();
}

tridec_status tridec_run(const tridec_config* config, const char* input, tridec_report** out) {
    if (!config || !out) return fail(TRIDEC_ERR_ARG, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto* rep = new tridec_report();
        rep->outcome = tridec::run_report(config->config, input ? input : "");
        *out = rep;
        return outcome_status(rep->outcome);
    });
}

tridec_status tridec_run_file(const tridec_config* config, const char* path, tridec_report** out) {
    if (!config || !out) return fail(TRIDEC_ERR_ARG, "null argument");
    *out = nullptr;
    std::string text;
    if (path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) return fail(TRIDEC_ERR_IO, std::string("cannot read ") + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return tridec_run(config, text.c_str(), out);
}

void tridec_report_free(tridec_report* report) { delete report; }

const char* tridec_report_json(const tridec_report* report) { return report ? report->outcome.report.c_str() : ""; }

int tridec_report_exit_code(const tridec_report* report) { return report ? report->outcome.status : 2; }

size_t tridec_report_error_line(const tridec_report* report) { return report ? report->outcome.line : 0; }

const char* tridec_report_error(const tridec_report* report) { return report ? report->outcome.message.c_str() : ""; }

}  // extern "C"
