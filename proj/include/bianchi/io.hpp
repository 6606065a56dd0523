#pragma once

#include "bianchi/count.hpp"
#include "bianchi/hermitian.hpp"
#include "bianchi/reduce.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace bianchi::io {

using nlohmann::json;

// Rationals travel as exact strings; AlgInt as [a, b] in the {1, omega} basis.
json to_json(AlgInt x);
json to_json(const FieldElem& z);
json to_json(const Point& p);
json to_json(const GroupElem& g);
json to_json(const HermitianForm& f);
json to_json(const ReductionCertificate& cert, Int d);
json to_json(const FormReduction& r, const RingContext& ctx);
json to_json(const GrowthFit& fit);
json membership_json(const RingContext& ctx, const Point& p);

AlgInt alg_int_from_json(const json& j);
FieldElem field_from_json(const json& j);
Point point_from_json(const json& j);
GroupElem group_from_json(const RingContext& ctx, const json& j);
HermitianForm form_from_json(const json& j);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Re-checks a certificate produced by to_json(ReductionCertificate) from scratch.
VerifyReport verify_certificate(const json& cert);
json to_json(const VerifyReport& r);

// Header "T_sq,N,N_tilde,X"; with sl_counts, N and N_tilde count SL(2, O_d).
std::string count_csv(const CountTable& table, bool sl_counts = false);
// Header "n,height_sq,D_sq,ratio"; every row's action identity is verified.
std::string sharpness_csv(const RingContext& ctx, Int n_max);

} // namespace bianchi::io
