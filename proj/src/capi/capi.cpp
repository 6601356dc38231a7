#include "nuplus.h"

#include "../core/cabling.hpp"
#include "../core/errors.hpp"
#include "../core/knot.hpp"
#include "../core/lens.hpp"
#include "../core/rational.hpp"
#include "../core/spinc.hpp"
#include "../core/verify.hpp"
#include "../core/vseq.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct nuplus_knot {
    nuplus::KnotPtr expr;
};

struct nuplus_eval {
    nuplus::KnotEval eval;
};

namespace {

thread_local std::string t_error;
thread_local size_t t_error_position = 0;

void clear_error() {
    t_error.clear();
    t_error_position = 0;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating exceptions to status codes and the thread-local
// error message.
template <typename Fn>
nuplus_status guarded(Fn&& fn) {
    clear_error();
    try {
        return fn();
    } catch (const nuplus::parse_error& e) {
        t_error = e.what();
        t_error_position = e.position();
        return NUPLUS_EPARSE;
    } catch (const nuplus::regime_error& e) {
        t_error = e.what();
        return NUPLUS_EREGIME;
    } catch (const nuplus::inconsistency_error& e) {
        t_error = e.what();
        return NUPLUS_EINTERNAL;
    } catch (const std::domain_error& e) {
        t_error = e.what();
        return NUPLUS_EDOMAIN;
    } catch (const std::exception& e) {
        t_error = e.what();
        return NUPLUS_EINTERNAL;
    }
}

nuplus_status invalid(const char* what) {
    t_error = what;
    return NUPLUS_EINVAL;
}

std::string join_values(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(values[k]);
    }
    return out;
}

} // namespace

extern "C" {

const char* nuplus_version(void) {
    return "0.1.0";
}

const char* nuplus_last_error(void) {
    return t_error.c_str();
}

size_t nuplus_last_error_position(void) {
    return t_error_position;
}

void nuplus_string_free(char* s) {
    std::free(s);
}

nuplus_status nuplus_lens_d(int64_t p, int64_t q, int64_t i, char** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = dup_string(nuplus::d_lens(p, q, i).str());
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_lens_conj_label(int64_t p, int64_t q, int64_t i, int64_t* out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = nuplus::conj_label(p, q, i);
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_phi1(int64_t p, int64_t q, int64_t i, int64_t* out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = nuplus::phi1(nuplus::CableParams::make(p, q), i);
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_phi2(int64_t p, int64_t q, int64_t i, int64_t* out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = nuplus::phi2(nuplus::CableParams::make(p, q), i);
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_knot_parse(const char* text, nuplus_knot** out) {
    if (!text || !out) return invalid("text and out must not be null");
    return guarded([&] {
        *out = new nuplus_knot{nuplus::parse_knot_expr(text)};
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_knot_unknot(nuplus_knot** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = new nuplus_knot{nuplus::KnotExpr::unknot()};
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_knot_torus(int64_t p, int64_t q, nuplus_knot** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = new nuplus_knot{nuplus::KnotExpr::torus(p, q)};
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_knot_cable(int64_t p, int64_t q, const nuplus_knot* companion,
                                nuplus_knot** out) {
    if (!companion || !out) return invalid("companion and out must not be null");
    return guarded([&] {
        *out = new nuplus_knot{
            nuplus::KnotExpr::cable(nuplus::CableParams::make(p, q), companion->expr)};
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_knot_explicit_v(const int64_t* values, size_t count, nuplus_knot** out) {
    if (!values || !out) return invalid("values and out must not be null");
    return guarded([&] {
        std::vector<std::int64_t> v(values, values + count);
        *out = new nuplus_knot{nuplus::KnotExpr::explicit_v(nuplus::VSequence(std::move(v)))};
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_knot_render(const nuplus_knot* knot, char** out) {
    if (!knot || !out) return invalid("knot and out must not be null");
    return guarded([&] {
        *out = dup_string(nuplus::render(*knot->expr));
        return NUPLUS_OK;
    });
}

void nuplus_knot_free(nuplus_knot* knot) {
    delete knot;
}

nuplus_status nuplus_knot_eval(const nuplus_knot* knot, nuplus_eval** out) {
    if (!knot || !out) return invalid("knot and out must not be null");
    return guarded([&] {
        *out = new nuplus_eval{nuplus::eval_knot(*knot->expr)};
        return NUPLUS_OK;
    });
}

void nuplus_eval_free(nuplus_eval* eval) {
    delete eval;
}

int nuplus_eval_complete(const nuplus_eval* eval) {
    return eval && eval->eval.complete ? 1 : 0;
}

nuplus_status nuplus_eval_nu(const nuplus_eval* eval, int64_t* out) {
    if (!eval || !out) return invalid("eval and out must not be null");
    *out = eval->eval.nu;
    clear_error();
    return NUPLUS_OK;
}

size_t nuplus_eval_v_len(const nuplus_eval* eval) {
    return eval ? eval->eval.v_prefix.size() : 0;
}

nuplus_status nuplus_eval_v_at(const nuplus_eval* eval, size_t index, int64_t* out) {
    if (!eval || !out) return invalid("eval and out must not be null");
    if (index >= eval->eval.v_prefix.size()) return invalid("index out of range");
    *out = eval->eval.v_prefix[index];
    clear_error();
    return NUPLUS_OK;
}

nuplus_status nuplus_eval_v_string(const nuplus_eval* eval, char** out) {
    if (!eval || !out) return invalid("eval and out must not be null");
    return guarded([&] {
        *out = dup_string(join_values(eval->eval.v_prefix));
        return NUPLUS_OK;
    });
}

size_t nuplus_eval_note_count(const nuplus_eval* eval) {
    return eval ? eval->eval.notes.size() : 0;
}

const char* nuplus_eval_note(const nuplus_eval* eval, size_t index) {
    if (!eval || index >= eval->eval.notes.size()) return "";
    return eval->eval.notes[index].c_str();
}

int nuplus_eval_unit_drops(const nuplus_eval* eval) {
    if (!eval) return 0;
    const auto& v = eval->eval.v_prefix;
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (v[k] - v[k + 1] > 1) return 0;
    return 1;
}

nuplus_status nuplus_torus_v(int64_t p, int64_t q, char** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = dup_string(nuplus::v_torus(p, q).str());
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_torus_v_oracle(int64_t p, int64_t q, char** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = dup_string(nuplus::v_torus_oracle(p, q).str());
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_surgery_d(int64_t p, int64_t q, int64_t i, const nuplus_eval* knot,
                               char** out) {
    if (!knot || !out) return invalid("knot and out must not be null");
    if (!knot->eval.complete) {
        t_error = "knot evaluation is incomplete: nu^+ >= " + std::to_string(knot->eval.nu) +
                  "; the surgery correction term needs the full V-sequence";
        return NUPLUS_EINCOMPLETE;
    }
    return guarded([&] {
        *out = dup_string(nuplus::d_surgery(p, q, i, knot->eval.vsequence()).str());
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_nu_cable(int64_t nu, int64_t p, int64_t q, int64_t* value,
                              int64_t* lower_bound, char** regime_tag) {
    if (!value) return invalid("value must not be null");
    clear_error();
    try {
        nuplus::CableNu result = nuplus::nu_plus_cable(nu, nuplus::CableParams::make(p, q));
        *value = result.value;
        if (regime_tag)
            *regime_tag = dup_string(nuplus::regime_name(result.regime));
        return NUPLUS_OK;
    } catch (const nuplus::regime_error& e) {
        t_error = e.what();
        if (lower_bound)
            *lower_bound = e.lower_bound();
        return NUPLUS_EREGIME;
    } catch (const std::domain_error& e) {
        t_error = e.what();
        return NUPLUS_EDOMAIN;
    } catch (const std::exception& e) {
        t_error = e.what();
        return NUPLUS_EINTERNAL;
    }
}

nuplus_status nuplus_nu_cable_lower_bound(int64_t nu, int64_t p, int64_t q, int64_t* out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = nuplus::nu_plus_cable_lower_bound(nu, nuplus::CableParams::make(p, q));
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_g4_cable(int64_t n, int64_t p, int64_t q, int64_t* value,
                              int64_t* lower_bound, char** regime_tag) {
    if (!value) return invalid("value must not be null");
    clear_error();
    try {
        nuplus::CableNu result = nuplus::g4_cable(n, nuplus::CableParams::make(p, q));
        *value = result.value;
        if (regime_tag)
            *regime_tag = dup_string(nuplus::regime_name(result.regime));
        return NUPLUS_OK;
    } catch (const nuplus::regime_error& e) {
        t_error = e.what();
        if (lower_bound)
            *lower_bound = e.lower_bound();
        return NUPLUS_EREGIME;
    } catch (const std::domain_error& e) {
        t_error = e.what();
        return NUPLUS_EDOMAIN;
    } catch (const std::exception& e) {
        t_error = e.what();
        return NUPLUS_EINTERNAL;
    }
}

nuplus_status nuplus_g4_cable_upper_bound(int64_t g4, int64_t p, int64_t q, int64_t* out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = nuplus::g4_cable_upper_bound(g4, nuplus::CableParams::make(p, q));
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_nu_quasi_alternating(int64_t sigma, int64_t* out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] {
        *out = nuplus::nu_plus_quasi_alternating(sigma);
        return NUPLUS_OK;
    });
}

nuplus_status nuplus_verify(int64_t max_p, uint64_t seed, nuplus_verify_callback callback,
                            void* user) {
    return guarded([&]() -> nuplus_status {
        auto results = nuplus::run_verify(max_p, seed);
        for (const auto& r : results)
            if (callback)
                callback(r.suite.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
        if (!nuplus::verify_all_passed(results)) {
            t_error = "verification failed";
            return NUPLUS_EVERIFY;
        }
        return NUPLUS_OK;
    });
}

} // extern "C"
