#include "sagbi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sagbi/error.hpp"
#include "sagbi/report.hpp"

struct sagbi_session {
    sagbi::Session session;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
int guard(F&& f) {
    try {
        f();
        g_last_error.clear();
        return SAGBI_OK;
    } catch (const sagbi::Error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SAGBI_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SAGBI_ERR_INTERNAL;
    }
}

sagbi::Format to_format(int format) {
    return format == SAGBI_FORMAT_JSON ? sagbi::Format::Json : sagbi::Format::Text;
}

}  // namespace

extern "C" {

int sagbi_session_create(const char* group_text, const char* order_spec,
                         const char* order_matrix_text, int n_override,
                         int64_t cap, sagbi_session** out) {
    return guard([&] {
        if (!group_text || !order_spec || !out)
            sagbi::fail(sagbi::ErrorCode::Usage, "null argument");
        sagbi::Session s = sagbi::make_session(
            group_text, order_spec, order_matrix_text ? order_matrix_text : "",
            n_override, cap);
        *out = new sagbi_session{std::move(s)};
    });
}

void sagbi_session_destroy(sagbi_session* s) { delete s; }

int sagbi_group_order(const sagbi_session* s, int64_t* out) {
    return guard([&] {
        if (!s || !out) sagbi::fail(sagbi::ErrorCode::Usage, "null argument");
        *out = static_cast<int64_t>(s->session.group.elements.size());
    });
}

int sagbi_degree(const sagbi_session* s, int* out) {
    return guard([&] {
        if (!s || !out) sagbi::fail(sagbi::ErrorCode::Usage, "null argument");
        *out = s->session.group.n;
    });
}

int sagbi_analyze(sagbi_session* s, int max_degree, int format, char** out) {
    return guard([&] {
        if (!s || !out) sagbi::fail(sagbi::ErrorCode::Usage, "null argument");
        *out = dup_string(sagbi::report_analyze(s->session, max_degree, to_format(format)));
    });
}

int sagbi_basis(sagbi_session* s, int max_degree, int format, char** out) {
    return guard([&] {
        if (!s || !out) sagbi::fail(sagbi::ErrorCode::Usage, "null argument");
        *out = dup_string(sagbi::report_basis(s->session, max_degree, to_format(format)));
    });
}

int sagbi_member(sagbi_session* s, const char* vector_csv, int format, char** out) {
    return guard([&] {
        if (!s || !vector_csv || !out) sagbi::fail(sagbi::ErrorCode::Usage, "null argument");
        *out = dup_string(sagbi::report_member(s->session, vector_csv, to_format(format)));
    });
}

int sagbi_witness(sagbi_session* s, int format, char** out) {
    return guard([&] {
        if (!s || !out) sagbi::fail(sagbi::ErrorCode::Usage, "null argument");
        *out = dup_string(sagbi::report_witness(s->session, to_format(format)));
    });
}

int sagbi_sturm(const char* slope, int64_t x_max, int format, char** out) {
    return guard([&] {
        if (!slope || !out) sagbi::fail(sagbi::ErrorCode::Usage, "null argument");
        *out = dup_string(sagbi::report_sturm(slope, x_max, to_format(format)));
    });
}

const char* sagbi_last_error(void) { return g_last_error.c_str(); }

void sagbi_string_free(char* s) { std::free(s); }

const char* sagbi_version(void) { return "0.1.0"; }

}  // extern "C"
