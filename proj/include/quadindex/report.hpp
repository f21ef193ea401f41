#ifndef QUADINDEX_REPORT_HPP
#define QUADINDEX_REPORT_HPP

#include <json.hpp>

#include "quadindex/irreducibility.hpp"
#include "quadindex/quadtheorem.hpp"

namespace quadindex::report {

using Json = nlohmann::ordered_json;

/// Everything cmd_classify emits for one quadrinomial.
struct ClassifyReport {
    quadtheorem::MonogenicityReport mono;
    zpoly::IrreducibilityResult irred;
    std::uint64_t seed = 0;

    bool operator==(const ClassifyReport& o) const;
};

/// Schema: {poly:{n,a,b,c}, applicable, k, D, D_factors:[{p,e}], cofactor,
/// primes:[{p,case,subcase,source,verdict,witness}], monogenic, index,
/// index_divisors, irreducibility, irreducibility_method, seed, version}.
/// All BigInt-valued fields are decimal strings.
Json to_json(const ClassifyReport& r);
ClassifyReport classify_report_from_json(const Json& j);

Json to_json(const quadtheorem::CaseVerdict& cv);
quadtheorem::CaseVerdict case_verdict_from_json(const Json& j);

std::string render_text(const ClassifyReport& r);

/// CSV column order (documented in the README):
/// n,a,b,c,k,D,monogenic,index,index_divisors,irreducibility,seed
std::string csv_header();
std::string csv_row(const ClassifyReport& r);

}  // namespace quadindex::report

#endif
