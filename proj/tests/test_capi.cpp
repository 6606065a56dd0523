#include "doctest.h"

#include "bianchi/bianchi.h"

#include "json.hpp"

#include <string>

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { bianchi_free(p); }
    std::string s() const { return p ? p : ""; }
};

} // namespace

TEST_CASE("ring handles") {
    bianchi_ring* r = nullptr;
    CHECK(bianchi_ring_create(4, &r) == BIANCHI_INVALID_D);
    CHECK(r == nullptr);
    CHECK(std::string(bianchi_last_error()).find("squarefree") != std::string::npos);
    REQUIRE(bianchi_ring_create(7, &r) == BIANCHI_OK);
    CHECK(bianchi_ring_d(r) == 7);
    bianchi_ring_destroy(r);
    CHECK(bianchi_ring_create(1, nullptr) == BIANCHI_INVALID_ARGUMENT);
    CHECK(std::string(bianchi_version()).size() > 0);
}

TEST_CASE("reduce, membership and verify") {
    bianchi_ring* r = nullptr;
    REQUIRE(bianchi_ring_create(1, &r) == BIANCHI_OK);
    Str cert;
    REQUIRE(bianchi_reduce_point(r, "7/4", "0", "1/4", 1, &cert.p) == BIANCHI_OK);
    const auto j = nlohmann::json::parse(cert.s());
    CHECK(j["D_sq"] == "16");
    CHECK(j["bound_ok"] == true);

    Str report;
    CHECK(bianchi_verify_certificate(cert.p, &report.p) == BIANCHI_OK);
    CHECK(nlohmann::json::parse(report.s())["ok"] == true);

    auto tampered = j;
    tampered["height_sq"] = "2";
    Str bad;
    CHECK(bianchi_verify_certificate(tampered.dump().c_str(), &bad.p) == BIANCHI_CHECK_FAILED);
    Str garbage;
    CHECK(bianchi_verify_certificate("{not json", &garbage.p) == BIANCHI_PARSE_ERROR);
    CHECK(garbage.p == nullptr);

    Str m;
    REQUIRE(bianchi_membership(r, "0", "0", "4", 0, &m.p) == BIANCHI_OK);
    CHECK(nlohmann::json::parse(m.s())["in_F"] == true);

    Str e;
    CHECK(bianchi_reduce_point(r, "1.5", "0", "1", 0, &e.p) == BIANCHI_PARSE_ERROR);
    CHECK(e.p == nullptr);
    CHECK(bianchi_reduce_point(r, "1", "0", "0", 0, &e.p) == BIANCHI_INVALID_ARGUMENT);
    CHECK(bianchi_reduce_point(r, "1", "0", "-1/2", 1, &e.p) == BIANCHI_INVALID_ARGUMENT);
    bianchi_ring_destroy(r);
}

TEST_CASE("forms, counting and sharpness") {
    bianchi_ring* r = nullptr;
    REQUIRE(bianchi_ring_create(1, &r) == BIANCHI_OK);
    Str f;
    CHECK(bianchi_reduce_form(r, 2, 0, 1, 1, &f.p) == BIANCHI_OK);
    CHECK(nlohmann::json::parse(f.s())["discriminant_preserved"] == true);
    Str nd;
    CHECK(bianchi_reduce_form(r, 1, 1, 1, 1, &nd.p) == BIANCHI_NOT_DEFINITE);

    const long long grid[] = {1, 4, 9, 16};
    Str csv, rep;
    REQUIRE(bianchi_count(r, grid, 4, 2, 0, &csv.p, &rep.p) == BIANCHI_OK);
    CHECK(csv.s().rfind("T_sq,N,N_tilde,X\n1,36,36,6\n", 0) == 0);
    const auto report = nlohmann::json::parse(rep.s());
    CHECK(report["violations"] == false);
    CHECK(report["fit"]["rows"] == 4);
    CHECK(bianchi_count(r, grid, 0, 1, 0, nullptr, nullptr) == BIANCHI_INVALID_ARGUMENT);

    Str sharp;
    REQUIRE(bianchi_sharpness(r, 2, &sharp.p) == BIANCHI_OK);
    CHECK(sharp.s() == "n,height_sq,D_sq,ratio\n2,9,16,3/16\n");
    bianchi_ring_destroy(r);
}
