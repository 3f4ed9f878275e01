#include "pontra/pontra.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "commands.hpp"

struct pontra_session {
    std::string last_error;
};

namespace {

char* dup_cstr(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

}  // namespace

extern "C" {

pontra_session* pontra_open(void) { return new (std::nothrow) pontra_session{}; }

void pontra_close(pontra_session* s) { delete s; }

int pontra_run_job(pontra_session* s, const char* request_json, char** report_json) {
    if (!s) return PONTRA_ERR_INTERNAL;
    if (!request_json || !report_json) {
        s->last_error = "null argument";
        return PONTRA_ERR_INTERNAL;
    }
    *report_json = nullptr;
    auto outcome = pontra::commands::run_job(request_json);
    if (outcome.status != PONTRA_OK) {
        s->last_error = outcome.error;
        return outcome.status;
    }
    *report_json = dup_cstr(outcome.report);
    if (!*report_json) {
        s->last_error = "out of memory";
        return PONTRA_ERR_INTERNAL;
    }
    s->last_error.clear();
    return PONTRA_OK;
}

const char* pontra_last_error(const pontra_session* s) {
    return s ? s->last_error.c_str() : "";
}

const char* pontra_version(void) {
    static const std::string v = pontra::commands::version();
    return v.c_str();
}

void pontra_free(char* p) { std::free(p); }

}  // extern "C"
