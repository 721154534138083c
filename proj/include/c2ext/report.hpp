#pragma once

#include "c2ext/ext_algebra.hpp"
#include "c2ext/graded_quotient.hpp"
#include "c2ext/resolution.hpp"
#include "c2ext/ring_doc.hpp"
#include "c2ext/tate.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace c2ext {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json report_header(const std::string& command);
Json json_ring(const RingSpec& ring);
Json json_generators(const std::vector<Polynomial>& gens);
Json json_hilbert(const GradedQuotient& q);
Json json_ci(const CiReport& ci);
Json json_minimal_generators(const MinimalGenerators& mg);
Json json_betti(const FreeResolution& res);
Json json_poincare(const PoincareSeries& ps);
Json json_verify(const VerifyReport& vr);
Json json_ext_table(const ExtAlgebra& ext);
Json json_commutative_quotient(const CommutativeQuotientReport& report);
Json json_ci_presentation(const CIPresentation& pres);
Json json_quotient_target(const QuotientTarget& target);
Json json_tate_verify(const TateVerifyReport& report);

}  // namespace c2ext
