#include "quadindex/report.hpp"

#include <sstream>

#include "quadindex/version.hpp"

namespace quadindex::report {

using quadtheorem::CaseVerdict;
using quadtheorem::Monogenicity;
using quadtheorem::Verdict;

namespace {

Verdict verdict_from_string(const std::string& s) {
    if (s == "divides") return Verdict::Divides;
    if (s == "does_not_divide") return Verdict::DoesNotDivide;
    if (s == "inapplicable") return Verdict::Inapplicable;
    throw invalid_argument("unknown verdict: " + s);
}

quadtheorem::Subcase subcase_from_string(const std::string& s) {
    using quadtheorem::Subcase;
    for (Subcase v : {Subcase::None, Subcase::S2i, Subcase::S2ii, Subcase::S4i, Subcase::S4ii,
                      Subcase::S5i, Subcase::S5ii, Subcase::S611, Subcase::S612, Subcase::S613,
                      Subcase::S621, Subcase::S622})
        if (quadtheorem::to_string(v) == s) return v;
    throw invalid_argument("unknown subcase: " + s);
}

quadtheorem::RuleSource source_from_string(const std::string& s) {
    using quadtheorem::RuleSource;
    for (RuleSource v :
         {RuleSource::Main, RuleSource::OddADivisorRule, RuleSource::CharTwoADivisorRule})
        if (quadtheorem::to_string(v) == s) return v;
    throw invalid_argument("unknown rule source: " + s);
}

Monogenicity monogenicity_from_string(const std::string& s) {
    if (s == "true") return Monogenicity::Monogenic;
    if (s == "false") return Monogenicity::NotMonogenic;
    if (s == "unknown") return Monogenicity::Unknown;
    throw invalid_argument("unknown monogenicity: " + s);
}

zpoly::IrredStatus irred_from_string(const std::string& s) {
    if (s == "certified") return zpoly::IrredStatus::Certified;
    if (s == "assumed") return zpoly::IrredStatus::Assumed;
    if (s == "refuted") return zpoly::IrredStatus::Refuted;
    throw invalid_argument("unknown irreducibility status: " + s);
}

}  // namespace

bool ClassifyReport::operator==(const ClassifyReport& o) const {
    return to_json(*this) == to_json(o);
}

Json to_json(const CaseVerdict& cv) {
    Json j;
    j["p"] = cv.p.get_str();
    j["case"] = static_cast<int>(cv.label.pattern);
    j["subcase"] = quadtheorem::to_string(cv.label.sub);
    j["source"] = quadtheorem::to_string(cv.label.source);
    j["verdict"] = quadtheorem::to_string(cv.verdict);
    Json w = Json::object();
    for (const auto& [k, v] : cv.witness) w[k] = v;
    j["witness"] = std::move(w);
    return j;
}

CaseVerdict case_verdict_from_json(const Json& j) {
    CaseVerdict cv;
    cv.p = BigInt(j.at("p").get<std::string>());
    cv.label.pattern = static_cast<quadtheorem::PrimeCase>(j.at("case").get<int>());
    cv.label.sub = subcase_from_string(j.at("subcase").get<std::string>());
    cv.label.source = source_from_string(j.at("source").get<std::string>());
    cv.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& [k, v] : j.at("witness").items())
        cv.witness.emplace_back(k, v.get<std::string>());
    return cv;
}

Json to_json(const ClassifyReport& r) {
    const auto& m = r.mono;
    Json j;
    j["poly"] = Json{{"n", m.q.n.get_str()},
                     {"a", m.q.a.get_str()},
                     {"b", m.q.b.get_str()},
                     {"c", m.q.c.get_str()}};
    j["applicable"] = m.scope.applicable;
    j["k"] = m.scope.k.get_str();
    j["D"] = m.D.get_str();
    Json df = Json::array();
    for (const auto& [p, e] : m.d_factors.factors)
        df.push_back(Json{{"p", p.get_str()}, {"e", e}});
    j["D_factors"] = std::move(df);
    j["cofactor"] = m.d_factors.cofactor.get_str();
    Json primes = Json::array();
    for (const auto& cv : m.per_prime) primes.push_back(to_json(cv));
    j["primes"] = std::move(primes);
    j["monogenic"] = quadtheorem::to_string(m.verdict);
    j["index"] = m.index_exact ? Json(m.index_exact->get_str()) : Json(nullptr);
    Json divs = Json::array();
    for (const auto& p : m.index_divisors) divs.push_back(p.get_str());
    j["index_divisors"] = std::move(divs);
    j["irreducibility"] = zpoly::to_string(r.irred.status);
    j["irreducibility_method"] = r.irred.method;
    j["seed"] = std::to_string(r.seed);
    j["version"] = kVersion;
    return j;
}

ClassifyReport classify_report_from_json(const Json& j) {
    ClassifyReport r;
    auto& m = r.mono;
    const auto& poly = j.at("poly");
    m.q.n = BigInt(poly.at("n").get<std::string>());
    m.q.a = BigInt(poly.at("a").get<std::string>());
    m.q.b = BigInt(poly.at("b").get<std::string>());
    m.q.c = BigInt(poly.at("c").get<std::string>());
    m.scope = zpoly::check_scope(m.q);
    internal_check(m.scope.applicable == j.at("applicable").get<bool>(),
                   "report: applicability mismatch");
    m.D = BigInt(j.at("D").get<std::string>());
    for (const auto& pe : j.at("D_factors"))
        m.d_factors.factors.emplace_back(BigInt(pe.at("p").get<std::string>()),
                                         pe.at("e").get<unsigned>());
    m.d_factors.cofactor = BigInt(j.at("cofactor").get<std::string>());
    for (const auto& pj : j.at("primes")) m.per_prime.push_back(case_verdict_from_json(pj));
    m.verdict = monogenicity_from_string(j.at("monogenic").get<std::string>());
    if (!j.at("index").is_null()) m.index_exact = BigInt(j.at("index").get<std::string>());
    for (const auto& d : j.at("index_divisors")) m.index_divisors.emplace_back(d.get<std::string>());
    r.irred.status = irred_from_string(j.at("irreducibility").get<std::string>());
    r.irred.method = j.at("irreducibility_method").get<std::string>();
    r.seed = std::stoull(j.at("seed").get<std::string>());
    m.seed = r.seed;
    return r;
}

std::string render_text(const ClassifyReport& r) {
    const auto& m = r.mono;
    std::ostringstream os;
    auto term = [](const BigInt& v, const std::string& power) {
        BigInt mag = abs(v);
        std::string out = v < 0 ? " - " : " + ";
        if (mag != 1 || power.empty()) out += mag.get_str();
        if (!power.empty()) {
            if (mag != 1) out += "*";
            out += power;
        }
        return out;
    };
    os << "f(x) = x^" << m.q.n.get_str() << term(m.q.a, "x^" + BigInt(m.q.n - 1).get_str())
       << term(m.q.b, "x") << term(m.q.c, "") << "\n";
    os << "scope: applicable, k = " << m.scope.k.get_str() << "\n";
    os << "D = " << m.D.get_str() << "\n";
    os << "|D| = ";
    bool first = true;
    for (const auto& [p, e] : m.d_factors.factors) {
        if (!first) os << " * ";
        os << p.get_str();
        if (e > 1) os << "^" << e;
        first = false;
    }
    if (m.d_factors.cofactor != 1)
        os << (first ? "" : " * ") << m.d_factors.cofactor.get_str() << " (composite)";
    os << "\n";
    for (const auto& cv : m.per_prime) {
        os << "  p = " << cv.p.get_str() << ": case " << static_cast<int>(cv.label.pattern);
        if (cv.label.sub != quadtheorem::Subcase::None)
            os << " (" << quadtheorem::to_string(cv.label.sub) << ")";
        os << " -> " << quadtheorem::to_string(cv.verdict);
        for (const auto& [k, v] : cv.witness) os << ", " << k << "=" << v;
        os << "\n";
    }
    os << "monogenic: " << quadtheorem::to_string(m.verdict) << "\n";
    if (m.index_exact) os << "index: " << m.index_exact->get_str() << "\n";
    else if (!m.index_divisors.empty()) {
        os << "index divisible by:";
        for (const auto& p : m.index_divisors) os << " " << p.get_str();
        os << "\n";
    }
    os << "irreducibility: " << zpoly::to_string(r.irred.status) << " (" << r.irred.method
       << ")\n";
    os << "seed: " << r.seed << ", version: " << kVersion << "\n";
    return os.str();
}

std::string csv_header() {
    return "n,a,b,c,k,D,monogenic,index,index_divisors,irreducibility,seed";
}

std::string csv_row(const ClassifyReport& r) {
    const auto& m = r.mono;
    std::ostringstream os;
    os << m.q.n.get_str() << ',' << m.q.a.get_str() << ',' << m.q.b.get_str() << ','
       << m.q.c.get_str() << ',' << m.scope.k.get_str() << ',' << m.D.get_str() << ','
       << quadtheorem::to_string(m.verdict) << ','
       << (m.index_exact ? m.index_exact->get_str() : std::string()) << ',';
    bool first = true;
    for (const auto& p : m.index_divisors) {
        if (!first) os << ';';
        os << p.get_str();
        first = false;
    }
    os << ',' << zpoly::to_string(r.irred.status) << ',' << r.seed;
    return os.str();
}

}  // namespace quadindex::report
