#include "bianchi/bianchi.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Owned {
    char* p = nullptr;
    ~Owned() { bianchi_free(p); }
};

using RingPtr = std::unique_ptr<bianchi_ring, decltype(&bianchi_ring_destroy)>;

int exit_code(bianchi_status s) {
    switch (s) {
    case BIANCHI_OK: return 0;
    case BIANCHI_INVALID_D: return 2;
    case BIANCHI_PARSE_ERROR: return 3;
    case BIANCHI_NOT_DEFINITE: return 4;
    case BIANCHI_VIOLATION: return 5;
    default: return 1;
    }
}

int report(bianchi_status s) {
    if (s != BIANCHI_OK && *bianchi_last_error()) std::cerr << "error: " << bianchi_last_error() << '\n';
    return exit_code(s);
}

bool open_ring(long long d, RingPtr& ring, int& code) {
    bianchi_ring* r = nullptr;
    const bianchi_status s = bianchi_ring_create(d, &r);
    if (s != BIANCHI_OK) {
        code = report(s);
        return false;
    }
    ring.reset(r);
    return true;
}

// "16,36,64" -> {16, 36, 64}; false on anything that is not a comma list of integers.
bool parse_grid(const std::string& text, std::vector<long long>& out) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) return false;
        std::size_t used = 0;
        try {
            out.push_back(std::stoll(item, &used));
        } catch (const std::exception&) {
            return false;
        }
        if (used != item.size()) return false;
    }
    return !out.empty();
}

struct HeightArgs {
    std::string t;
    std::string t2;

    void attach(CLI::App* cmd) {
        auto* ot = cmd->add_option("--t", t, "height t as a rational (s = t^2 is computed exactly)");
        auto* os = cmd->add_option("--t2", t2, "squared height s = t^2 as a rational");
        ot->excludes(os);
        os->excludes(ot);
    }
    bool given() const { return !t.empty() || !t2.empty(); }
    const char* value() const { return t.empty() ? t2.c_str() : t.c_str(); }
    int is_t() const { return t.empty() ? 0 : 1; }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduction and height certificates for Bianchi groups PSL(2, O_d)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bianchi_version()));

    long long d = 1;
    std::vector<std::string> z;
    HeightArgs height;

    auto* reduce = app.add_subcommand("reduce", "reduce a point of H^3 into the fundamental domain and print its certificate");
    reduce->add_option("--d", d, "squarefree d > 0 (ring of integers of Q(sqrt(-d)))")->required();
    reduce->add_option("--z", z, "z = A + B sqrt(-d) as two rationals A B")->expected(2)->required();
    height.attach(reduce);

    auto* membership = app.add_subcommand("membership", "test membership in P_d, B_d and F_d");
    membership->add_option("--d", d, "squarefree d > 0")->required();
    membership->add_option("--z", z, "z = A + B sqrt(-d) as two rationals A B")->expected(2)->required();
    height.attach(membership);

    long long fa = 1, fdd = 1;
    std::vector<long long> fb;
    auto* reduce_form = app.add_subcommand("reduce-form", "reduce a positive definite binary Hermitian form");
    reduce_form->add_option("--d", d, "squarefree d > 0")->required();
    reduce_form->add_option("--a", fa, "coefficient of |X|^2")->required();
    reduce_form->add_option("--b", fb, "b = x + y omega as two integers x y")->expected(2)->required();
    reduce_form->add_option("--dd", fdd, "coefficient of |Z|^2")->required();

    std::string tsq;
    unsigned workers = 1;
    bool sl = false;
    std::string format = "csv";
    auto* count = app.add_subcommand("count", "count group elements of bounded height");
    count->add_option("--d", d, "squarefree d > 0")->required();
    count->add_option("--tsq", tsq, "comma separated list of integer T^2 values")->required();
    count->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 1024u));
    count->add_flag("--sl", sl, "report N and N_tilde for SL(2, O_d) (twice the PSL counts)");
    count->add_option("--format", format, "csv (fit summary on stderr) or json")->check(CLI::IsMember({"csv", "json"}));

    long long n_max = 10;
    auto* sharpness = app.add_subcommand("sharpness", "print the sharpness family sigma_n for n = 2..n_max");
    sharpness->add_option("--n-max", n_max, "largest n (>= 2)")->required();
    sharpness->add_option("--d", d, "squarefree d > 0 (the family lives in every ring)");

    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "re-verify a certificate JSON produced by reduce");
    verify->add_option("certificate", cert_path, "certificate file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    int code = 0;
    RingPtr ring(nullptr, &bianchi_ring_destroy);
    Owned out;

    if (*reduce || *membership) {
        if (!height.given()) {
            std::cerr << "error: one of --t or --t2 is required\n";
            return 1;
        }
        if (!open_ring(d, ring, code)) return code;
        const bianchi_status s =
            *reduce ? bianchi_reduce_point(ring.get(), z[0].c_str(), z[1].c_str(), height.value(), height.is_t(), &out.p)
                    : bianchi_membership(ring.get(), z[0].c_str(), z[1].c_str(), height.value(), height.is_t(), &out.p);
        if (out.p) std::cout << out.p;
        return report(s);
    }
    if (*reduce_form) {
        if (!open_ring(d, ring, code)) return code;
        const bianchi_status s = bianchi_reduce_form(ring.get(), fa, fb[0], fb[1], fdd, &out.p);
        if (out.p) std::cout << out.p;
        return report(s);
    }
    if (*count) {
        std::vector<long long> grid;
        if (!parse_grid(tsq, grid)) {
            std::cerr << "error: --tsq needs a non-empty comma separated list of integers\n";
            return 1;
        }
        if (!open_ring(d, ring, code)) return code;
        Owned rep;
        const bianchi_status s = bianchi_count(ring.get(), grid.data(), grid.size(), workers, sl ? 1 : 0, &out.p, &rep.p);
        if (format == "json") {
            if (rep.p) std::cout << rep.p;
        } else {
            if (out.p) std::cout << out.p;
            if (rep.p) std::cerr << rep.p;
        }
        return report(s);
    }
    if (*sharpness) {
        if (!open_ring(d, ring, code)) return code;
        const bianchi_status s = bianchi_sharpness(ring.get(), n_max, &out.p);
        if (out.p) std::cout << out.p;
        return report(s);
    }
    if (*verify) {
        std::string text;
        if (cert_path == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(cert_path);
            if (!in) {
                std::cerr << "error: cannot open " << cert_path << '\n';
                return 1;
            }
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        const bianchi_status s = bianchi_verify_certificate(text.c_str(), &out.p);
        if (out.p) std::cout << out.p;
        return report(s);
    }
    return 1;
}
