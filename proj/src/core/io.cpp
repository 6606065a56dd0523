#include "bianchi/io.hpp"
#include "bianchi/errors.hpp"

#include <sstream>

namespace bianchi::io {

json to_json(AlgInt x) { return json::array({x.a, x.b}); }

json to_json(const FieldElem& z) { return {{"A", to_string(z.A)}, {"B", to_string(z.B)}}; }

json to_json(const Point& p) { return {{"z", to_json(p.z)}, {"s", to_string(p.s)}}; }

json to_json(const GroupElem& g) {
    return {{"alpha", to_json(g.alpha())}, {"beta", to_json(g.beta())}, {"gamma", to_json(g.gamma())}, {"delta", to_json(g.delta())}};
}

json to_json(const HermitianForm& f) { return {{"a", f.a}, {"b", to_json(f.b)}, {"dd", f.dd}}; }

json to_json(const ReductionCertificate& cert, Int d) {
    return {{"d", d},
            {"point", to_json(cert.point)},
            {"gamma", to_json(cert.gamma)},
            {"image", to_json(cert.image)},
            {"D_sq", to_string(cert.d_sq)},
            {"height_sq", std::to_string(cert.height_sq)},
            {"bound_ok", cert.bound_ok},
            {"branch", std::string(to_string(cert.branch))},
            {"checks",
             {{"bezout_bounds", cert.checks.bezout_bounds},
              {"height_chain", cert.checks.height_chain},
              {"image_norm", cert.checks.image_norm},
              {"translation_height", cert.checks.translation_height},
              {"submultiplicative", cert.checks.submultiplicative}}}};
}

json to_json(const FormReduction& r, const RingContext& ctx) {
    json j = to_json(r.certificate, ctx.d());
    j["form"] = to_json(r.form);
    j["g"] = to_json(r.g);
    j["f_red"] = to_json(r.reduced);
    j["discriminant"] = discriminant(ctx, r.form);
    j["form_height_sq"] = std::to_string(form_height_sq(ctx, r.form));
    j["reduced_ok"] = r.reduced_ok;
    j["point_bound_ok"] = r.point_bound_ok;
    j["form_bound_ok"] = r.form_bound_ok;
    j["discriminant_preserved"] = r.discriminant_preserved;
    return j;
}

json to_json(const GrowthFit& fit) { return {{"slope_N", fit.slope_n}, {"slope_X", fit.slope_x}, {"rows", fit.rows}}; }

json membership_json(const RingContext& ctx, const Point& p) {
    const MuWitness w = mu_witness(ctx, p);
    const bool p_ok = in_P(ctx, p.z);
    const bool b_ok = w.m_star >= 1;
    return {{"d", ctx.d()},
            {"point", to_json(p)},
            {"in_P", p_ok},
            {"in_B", b_ok},
            {"in_F", p_ok && b_ok},
            {"m_star", to_string(w.m_star)},
            {"gamma0", to_json(w.gamma0)},
            {"delta0", to_json(w.delta0)},
            {"D_sq", to_string(d_sq(ctx, p))}};
}

namespace {

Rational rational_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) throw ParseError(std::string("missing rational field '") + key + "'");
    return parse_rational(j.at(key).get<std::string>());
}

Int int_field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const json& v = j.at(key);
    if (v.is_number_integer()) return v.get<Int>();
    if (v.is_string()) {
        const Rational r = parse_rational(v.get<std::string>());
        if (r.get_den() != 1) throw ParseError(std::string("field '") + key + "' is not an integer");
        return to_int(r.get_num());
    }
    throw ParseError(std::string("field '") + key + "' is not an integer");
}

} // namespace

AlgInt alg_int_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("algebraic integer must be [a, b]");
    return {j[0].get<Int>(), j[1].get<Int>()};
}

FieldElem field_from_json(const json& j) { return {rational_field(j, "A"), rational_field(j, "B")}; }

Point point_from_json(const json& j) {
    if (!j.contains("z")) throw ParseError("point is missing 'z'");
    const Rational s = rational_field(j, "s");
    if (sgn(s) <= 0) throw ParseError("point needs s > 0");
    return {field_from_json(j.at("z")), s};
}

GroupElem group_from_json(const RingContext& ctx, const json& j) {
    for (const char* k : {"alpha", "beta", "gamma", "delta"})
        if (!j.contains(k)) throw ParseError(std::string("group element is missing '") + k + "'");
    return {ctx, alg_int_from_json(j.at("alpha")), alg_int_from_json(j.at("beta")), alg_int_from_json(j.at("gamma")),
            alg_int_from_json(j.at("delta"))};
}

HermitianForm form_from_json(const json& j) {
    if (!j.contains("b")) throw ParseError("form is missing 'b'");
    return {int_field(j, "a"), alg_int_from_json(j.at("b")), int_field(j, "dd")};
}

VerifyReport verify_certificate(const json& cert) {
    VerifyReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.failures.push_back(std::move(msg));
    };
    const RingContext ctx(int_field(cert, "d"));
    if (!cert.contains("gamma") || !cert.contains("image")) throw ParseError("certificate needs 'gamma' and 'image'");
    const GroupElem gamma = group_from_json(ctx, cert.at("gamma"));
    const Point image = point_from_json(cert.at("image"));
    const Point point = cert.contains("point") ? point_from_json(cert.at("point")) : apply(ctx, inverse(ctx, gamma), image);

    if (!(apply(ctx, gamma, point) == image)) fail("gamma does not map the point to the image");
    if (!in_F(ctx, image)) fail("image is not in the fundamental domain");
    const Rational dsq = d_sq(ctx, point);
    if (cert.contains("D_sq") && rational_field(cert, "D_sq") != dsq) fail("D_sq does not match the point");
    const Int h = height_sq(ctx, gamma);
    if (cert.contains("height_sq") && int_field(cert, "height_sq") != h) fail("height_sq does not match gamma");
    if (!certificate_bound_holds(ctx, h, dsq)) fail("height bound (16 C_d^2)^2 D^4 is violated");
    if (cert.contains("bound_ok") && !cert.at("bound_ok").get<bool>()) fail("certificate reports bound_ok = false");
    if (cert.contains("branch")) parse_branch(cert.at("branch").get<std::string>());
    return r;
}

json to_json(const VerifyReport& r) { return {{"ok", r.ok}, {"failures", r.failures}}; }

std::string count_csv(const CountTable& table, bool sl_counts) {
    std::ostringstream os;
    const Count factor = sl_counts ? 2 : 1;
    os << "T_sq,N,N_tilde,X\n";
    for (const CountRow& row : table.rows)
        os << row.t_sq << ',' << factor * row.n << ',' << factor * row.n_tilde << ',' << row.x << '\n';
    return os.str();
}

std::string sharpness_csv(const RingContext& ctx, Int n_max) {
    if (n_max < 2) throw InvalidArgument("sharpness table needs n_max >= 2");
    std::ostringstream os;
    os << "n,height_sq,D_sq,ratio\n";
    for (Int n = 2; n <= n_max; ++n) {
        const SharpnessWitness w = sharpness_witness(ctx, n);
        const Int h = height_sq(ctx, w.sigma);
        const Rational dsq = d_sq(ctx, w.point);
        // H / D^2 = (n^2 - 1) / (4 n^2)
        const Rational ratio = make_rational(n * n - 1, 4 * n * n);
        os << n << ',' << h << ',' << to_string(dsq) << ',' << to_string(ratio) << '\n';
    }
    return os.str();
}

} // namespace bianchi::io
