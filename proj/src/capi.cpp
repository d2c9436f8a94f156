#include "froblab.h"

#include "froblab/commands.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace froblab;

struct fl_algebra {
    AlgebraBundle bundle;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

/// Runs a command, converts the report to text and maps exceptions.
int run_command(CommandResult (*f)(void*), void* arg, char** out_report) {
    if (!out_report) return fail(FL_EINVAL, "out_report is null");
    *out_report = nullptr;
    try {
        CommandResult res = f(arg);
        *out_report = dup_string(res.report.dump(2));
        if (!*out_report) return fail(FL_EINTERNAL, "out of memory");
        if (res.status != 0 && res.report.contains("error"))
            g_last_error = res.report["error"].get<std::string>();
        return res.status;
    } catch (const std::exception& e) {
        return fail(FL_EINTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* fl_last_error(void) { return g_last_error.c_str(); }

void fl_string_free(char* s) { delete[] s; }

int fl_algebra_from_json(const char* json_text, fl_algebra** out) {
    if (!json_text || !out) return fail(FL_EINVAL, "null argument");
    *out = nullptr;
    try {
        AlgebraBundle b = bundle_from_json(Json::parse(json_text));
        *out = new fl_algebra{std::move(b)};
        return FL_OK;
    } catch (const Json::exception& e) {
        return fail(FL_EINVAL, std::string("malformed bundle: ") + e.what());
    } catch (const Error& e) {
        return fail(FL_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(FL_EINTERNAL, e.what());
    }
}

int fl_algebra_to_json(const fl_algebra* a, char** out_json) {
    if (!a || !out_json) return fail(FL_EINVAL, "null argument");
    *out_json = nullptr;
    try {
        *out_json = dup_string(bundle_to_json(a->bundle).dump(2));
        return *out_json ? FL_OK : fail(FL_EINTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FL_EINTERNAL, e.what());
    }
}

int fl_algebra_builtin(const char* name, fl_algebra** out) {
    if (!name || !out) return fail(FL_EINVAL, "null argument");
    *out = nullptr;
    CommandResult res = cmd_export_builtin(name);
    if (res.status != 0)
        return fail(FL_EINVAL, res.report.contains("error")
                                   ? res.report["error"].get<std::string>()
                                   : "unknown builtin");
    try {
        AlgebraBundle b = bundle_from_json(res.report["bundle"]);
        *out = new fl_algebra{std::move(b)};
        return FL_OK;
    } catch (const std::exception& e) {
        return fail(FL_EINTERNAL, e.what());
    }
}

int fl_algebra_dim(const fl_algebra* a) { return a ? a->bundle.algebra->n : -1; }

void fl_algebra_free(fl_algebra* a) { delete a; }

int fl_taft_analyze(int p, uint64_t seed, char** out_report) {
    struct Args {
        int p;
        uint64_t seed;
    } args{p, seed};
    return run_command(
        [](void* a) {
            auto* x = static_cast<Args*>(a);
            return cmd_taft_analyze(x->p, x->seed);
        },
        &args, out_report);
}

int fl_frobcheck(const char* bundle_json, const char* projectives_json_or_null, uint64_t seed,
                 char** out_report) {
    if (!bundle_json) return fail(FL_EINVAL, "bundle_json is null");
    struct Args {
        const char* bundle;
        const char* proj;
        uint64_t seed;
    } args{bundle_json, projectives_json_or_null, seed};
    return run_command(
        [](void* a) {
            auto* x = static_cast<Args*>(a);
            std::optional<std::string> proj;
            if (x->proj) proj = std::string(x->proj);
            return cmd_frobcheck(x->bundle, proj, x->seed);
        },
        &args, out_report);
}

int fl_axioms_verify(const char* bundle_json, const char* law, char** out_report) {
    if (!bundle_json || !law) return fail(FL_EINVAL, "null argument");
    struct Args {
        const char* bundle;
        const char* law;
    } args{bundle_json, law};
    return run_command(
        [](void* a) {
            auto* x = static_cast<Args*>(a);
            return cmd_axioms_verify(x->bundle, x->law);
        },
        &args, out_report);
}

int fl_taftd(int p, const long long* d, int d_len, int reconstruct, uint64_t seed,
             char** out_report) {
    if (d_len > 0 && !d) return fail(FL_EINVAL, "d is null");
    struct Args {
        int p;
        std::vector<long long> d;
        bool reconstruct;
        uint64_t seed;
    } args{p, std::vector<long long>(d, d + (d_len > 0 ? d_len : 0)), reconstruct != 0, seed};
    return run_command(
        [](void* a) {
            auto* x = static_cast<Args*>(a);
            return cmd_taftd(x->p, x->d, x->reconstruct, x->seed);
        },
        &args, out_report);
}

int fl_export_builtin(const char* name, char** out_report) {
    if (!name) return fail(FL_EINVAL, "name is null");
    struct Args {
        const char* name;
    } args{name};
    return run_command(
        [](void* a) { return cmd_export_builtin(static_cast<Args*>(a)->name); }, &args,
        out_report);
}

}  // extern "C"
