#include "bianchi/bianchi.h"

#include "bianchi/errors.hpp"
#include "bianchi/io.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct bianchi_ring {
    bianchi::RingContext ctx;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
bianchi_status guarded(F&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const bianchi::InvalidDiscriminant& e) {
        last_error = e.what();
        return BIANCHI_INVALID_D;
    } catch (const bianchi::ParseError& e) {
        last_error = e.what();
        return BIANCHI_PARSE_ERROR;
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return BIANCHI_PARSE_ERROR;
    } catch (const bianchi::NotPositiveDefinite& e) {
        last_error = e.what();
        return BIANCHI_NOT_DEFINITE;
    } catch (const bianchi::CheckFailure& e) {
        last_error = e.what();
        return BIANCHI_VIOLATION;
    } catch (const bianchi::Error& e) {
        last_error = e.what();
        return BIANCHI_INVALID_ARGUMENT;
    } catch (const std::overflow_error& e) {
        last_error = std::string("integer overflow: ") + e.what();
        return BIANCHI_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BIANCHI_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return BIANCHI_INTERNAL;
    }
}

bianchi_status null_arg(const char* what) {
    last_error = std::string("null argument: ") + what;
    return BIANCHI_INVALID_ARGUMENT;
}

bianchi::Point parse_point(const char* A, const char* B, const char* height, int height_is_t) {
    using bianchi::parse_rational;
    const bianchi::FieldElem z{parse_rational(A), parse_rational(B)};
    bianchi::Rational h = parse_rational(height);
    if (height_is_t) {
        if (sgn(h) <= 0) throw bianchi::InvalidArgument("t must be positive");
        h *= h;
    }
    return bianchi::make_point(z, h);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace

extern "C" {

bianchi_status bianchi_ring_create(long long d, bianchi_ring** out) {
    if (!out) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        *out = new bianchi_ring{bianchi::RingContext(d)};
        return BIANCHI_OK;
    });
}

void bianchi_ring_destroy(bianchi_ring* ring) { delete ring; }

long long bianchi_ring_d(const bianchi_ring* ring) { return ring ? ring->ctx.d() : 0; }

bianchi_status bianchi_reduce_point(const bianchi_ring* ring, const char* A, const char* B, const char* height,
                                    int height_is_t, char** certificate_json) {
    if (!ring || !A || !B || !height || !certificate_json) return null_arg("reduce_point");
    *certificate_json = nullptr;
    return guarded([&] {
        const auto cert = bianchi::reduce(ring->ctx, parse_point(A, B, height, height_is_t));
        *certificate_json = dup(dump(bianchi::io::to_json(cert, ring->ctx.d())));
        return cert.bound_ok ? BIANCHI_OK : BIANCHI_CHECK_FAILED;
    });
}

bianchi_status bianchi_membership(const bianchi_ring* ring, const char* A, const char* B, const char* height,
                                  int height_is_t, char** json) {
    if (!ring || !A || !B || !height || !json) return null_arg("membership");
    *json = nullptr;
    return guarded([&] {
        *json = dup(dump(bianchi::io::membership_json(ring->ctx, parse_point(A, B, height, height_is_t))));
        return BIANCHI_OK;
    });
}

bianchi_status bianchi_reduce_form(const bianchi_ring* ring, long long a, long long b_a, long long b_b, long long dd,
                                   char** json) {
    if (!ring || !json) return null_arg("reduce_form");
    *json = nullptr;
    return guarded([&] {
        const auto r = bianchi::reduce_form(ring->ctx, {a, bianchi::AlgInt{b_a, b_b}, dd});
        *json = dup(dump(bianchi::io::to_json(r, ring->ctx)));
        return r.all_ok() ? BIANCHI_OK : BIANCHI_CHECK_FAILED;
    });
}

bianchi_status bianchi_count(const bianchi_ring* ring, const long long* t_sq, size_t n, unsigned workers,
                             int sl_counts, char** csv, char** report_json) {
    if (!ring || (!t_sq && n > 0)) return null_arg("count");
    if (csv) *csv = nullptr;
    if (report_json) *report_json = nullptr;
    return guarded([&] {
        std::vector<bianchi::Int> grid(t_sq, t_sq + n);
        std::vector<bianchi::SandwichReport> sandwich;
        const auto table = bianchi::count_table(ring->ctx, grid, workers, &sandwich);
        bool violated = false;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& s : sandwich) {
            violated = violated || !s.ok();
            rows.push_back({{"T_sq", s.t_sq},
                            {"N", s.n},
                            {"N_tilde", s.n_tilde},
                            {"X", s.x},
                            {"X_scaled", s.x_lower},
                            {"lower_ok", s.lower_ok},
                            {"upper_ok", s.upper_ok},
                            {"N_tilde_over_X", s.ratio_tilde_x},
                            {"N_over_T4", static_cast<double>(s.n) / (static_cast<double>(s.t_sq) * static_cast<double>(s.t_sq))}});
        }
        nlohmann::json report{{"d", ring->ctx.d()}, {"sl_counts", sl_counts != 0}, {"rows", rows}};
        report["fit"] = table.rows.size() >= 4 ? bianchi::io::to_json(bianchi::fit_growth(table)) : nlohmann::json();
        report["violations"] = violated;
        if (csv) *csv = dup(bianchi::io::count_csv(table, sl_counts != 0));
        if (report_json) *report_json = dup(dump(report));
        if (violated) last_error = "sandwich inequality violated";
        return violated ? BIANCHI_VIOLATION : BIANCHI_OK;
    });
}

bianchi_status bianchi_sharpness(const bianchi_ring* ring, long long n_max, char** csv) {
    if (!ring || !csv) return null_arg("sharpness");
    *csv = nullptr;
    return guarded([&] {
        *csv = dup(bianchi::io::sharpness_csv(ring->ctx, n_max));
        return BIANCHI_OK;
    });
}

bianchi_status bianchi_verify_certificate(const char* certificate_json, char** report_json) {
    if (!certificate_json || !report_json) return null_arg("verify_certificate");
    *report_json = nullptr;
    return guarded([&] {
        const auto report = bianchi::io::verify_certificate(nlohmann::json::parse(certificate_json));
        *report_json = dup(dump(bianchi::io::to_json(report)));
        if (!report.ok) last_error = report.failures.front();
        return report.ok ? BIANCHI_OK : BIANCHI_CHECK_FAILED;
    });
}

const char* bianchi_last_error(void) { return last_error.c_str(); }

void bianchi_free(char* p) { std::free(p); }

const char* bianchi_version(void) { return "0.1.0"; }

} // extern "C"
