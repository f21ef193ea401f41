// Command-line front end: classify quadrinomials, list excluded primes, run
// the general index-divisibility criterion, batch-scan coefficient ranges,
// and verify the specialized classifier against the general criterion.
//
// Exit codes: 0 success, 1 usage/parse error, 2 out-of-scope input,
// 3 internal inconsistency (two routes to the same quantity disagreed).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "quadindex/irreducibility.hpp"
#include "quadindex/scan.hpp"
#include "quadindex/version.hpp"

using namespace quadindex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitInconsistent = 3;

struct OutputTarget {
    std::string path;
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw invalid_argument("cannot open output file: " + path);
        }
        return file;
    }
};

BigInt parse_bigint(const std::string& s, const char* what) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + ": not an integer: " + s);
    }
}

std::vector<BigInt> parse_prime_list(const std::string& csv) {
    std::vector<BigInt> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(parse_bigint(tok, "--primes"));
    }
    return out;
}

scan::ScanRange parse_range(const std::string& text, const char* what) {
    scan::ScanRange r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stol(text);
        } else {
            r.lo = std::stol(text.substr(0, dots));
            r.hi = std::stol(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + ": expected N or LO..HI, got " + text);
    }
    return r;
}

int emit_scope_failure(const zpoly::TheoremScope& scope, bool json, std::ostream& os) {
    if (json) {
        report::Json j;
        j["applicable"] = false;
        j["reason"] = zpoly::to_string(scope.failure);
        j["version"] = kVersion;
        os << j.dump() << "\n";
    } else {
        os << "not applicable: " << zpoly::to_string(scope.failure) << "\n";
    }
    return kExitInapplicable;
}

int cmd_classify(const BigInt& n, const BigInt& a, const BigInt& b, const BigInt& c,
                 bool json, OutputTarget& out, std::uint64_t seed, unsigned long budget,
                 unsigned long cap) {
    zpoly::Quadrinomial q{n, a, b, c};
    auto scope = zpoly::check_scope(q);
    std::ostream& os = out.stream();
    if (!scope.applicable) return emit_scope_failure(scope, json, os);
    if (!n.fits_ulong_p() || n.get_ui() > cap) {
        if (json) {
            report::Json j;
            j["applicable"] = true;
            j["reason"] = "degree exceeds the discriminant cap; use `exclusions` for "
                          "predicate-level results";
            j["version"] = kVersion;
            os << j.dump() << "\n";
        } else {
            os << "degree " << n.get_str()
               << " exceeds the discriminant cap; use `exclusions` for predicate-level "
                  "results\n";
        }
        return kExitInapplicable;
    }

    report::ClassifyReport rep;
    rep.seed = seed;
    rep.irred = zpoly::check_irreducible(zpoly::expand(q, cap), seed);
    if (rep.irred.status == zpoly::IrredStatus::Refuted) {
        if (json) {
            report::Json j;
            j["applicable"] = true;
            j["irreducibility"] = "refuted";
            j["irreducibility_method"] = rep.irred.method;
            j["reason"] = "polynomial is reducible; index and monogenicity are undefined";
            j["version"] = kVersion;
            os << j.dump() << "\n";
        } else {
            os << "reducible (" << rep.irred.method
               << "): index and monogenicity are undefined\n";
        }
        return kExitInapplicable;
    }
    quadtheorem::MonogenicityOptions mopts;
    mopts.seed = seed;
    mopts.budget.rho_iterations = budget;
    mopts.budget.rho_seed = seed;
    mopts.degree_cap = cap;
    rep.mono = quadtheorem::is_monogenic(q, mopts);
    if (json)
        os << report::to_json(rep).dump() << "\n";
    else
        os << report::render_text(rep);
    return kExitOk;
}

int cmd_exclusions(const BigInt& n, const BigInt& a, const BigInt& b, const BigInt& c,
                   const std::string& primes_csv, long prime_bound, bool json,
                   OutputTarget& out, std::uint64_t seed) {
    zpoly::Quadrinomial q{n, a, b, c};
    auto scope = zpoly::check_scope(q);
    std::ostream& os = out.stream();
    if (!scope.applicable) return emit_scope_failure(scope, json, os);

    std::vector<BigInt> primes = parse_prime_list(primes_csv);
    if (primes.empty()) {
        for (long v = 2; v <= prime_bound; ++v)
            if (arith::is_prime(BigInt(v))) primes.emplace_back(v);
    }
    report::Json rows = report::Json::array();
    for (const BigInt& p : primes) {
        if (!arith::is_prime(p)) throw invalid_argument("not a prime: " + p.get_str());
        auto reason = quadtheorem::exclusion_check(q, p);
        if (json) {
            report::Json row;
            row["p"] = p.get_str();
            row["excluded"] = reason.has_value();
            row["condition"] = reason ? quadtheorem::to_string(*reason) : "";
            rows.push_back(std::move(row));
        } else {
            os << "p = " << p.get_str() << ": "
               << (reason ? "excluded (" + quadtheorem::to_string(*reason) + ")"
                          : "no exclusion condition applies")
               << "\n";
        }
    }
    if (json) {
        report::Json j;
        j["poly"] = report::Json{{"n", n.get_str()},
                                 {"a", a.get_str()},
                                 {"b", b.get_str()},
                                 {"c", c.get_str()}};
        j["k"] = scope.k.get_str();
        j["exclusions"] = std::move(rows);
        j["seed"] = std::to_string(seed);
        j["version"] = kVersion;
        os << j.dump() << "\n";
    }
    return kExitOk;
}

int cmd_dedekind(const std::string& poly_text, const BigInt& p, std::uint64_t seed,
                 bool json, OutputTarget& out) {
    zpoly::IntPoly f = zpoly::parse_poly(poly_text);
    if (!f.is_monic()) throw CLI::ValidationError("--poly must be monic");
    if (!arith::is_prime(p)) throw CLI::ValidationError("--p must be prime");
    auto cert = dedekind::index_divides(f, p, seed);
    auto irred = zpoly::check_irreducible(f, seed);
    std::ostream& os = out.stream();
    auto splitting = dedekind::splitting_of(cert);
    if (json) {
        report::Json j;
        j["poly"] = zpoly::format_poly(f);
        j["p"] = p.get_str();
        report::Json factors = report::Json::array();
        for (const auto& [g, e] : cert.factorization.factors)
            factors.push_back(report::Json{{"factor", fppoly::format_poly(g)}, {"e", e}});
        j["factorization"] = std::move(factors);
        j["m_poly"] = zpoly::format_poly(cert.m_poly);
        j["m_bar"] = fppoly::format_poly(cert.m_bar);
        j["divides"] = cert.divides;
        report::Json reps = report::Json::array();
        for (const auto& ev : cert.repeated)
            reps.push_back(report::Json{{"factor", fppoly::format_poly(ev.factor)},
                                        {"e", ev.exponent},
                                        {"divides_m", ev.divides_m}});
        j["repeated"] = std::move(reps);
        if (splitting) {
            report::Json st = report::Json::array();
            for (auto& [d, e] : splitting->parts)
                st.push_back(report::Json{{"residue_degree", d}, {"ramification", e}});
            j["splitting"] = std::move(st);
        } else {
            j["splitting"] = nullptr;
        }
        j["irreducibility"] = zpoly::to_string(irred.status);
        j["irreducibility_method"] = irred.method;
        j["seed"] = std::to_string(seed);
        j["version"] = kVersion;
        os << j.dump() << "\n";
    } else {
        os << "f mod " << p.get_str() << " =";
        for (const auto& [g, e] : cert.factorization.factors) {
            os << " (" << fppoly::pretty_poly(g) << ")";
            if (e > 1) os << "^" << e;
        }
        os << "\n";
        os << "M mod " << p.get_str() << " = " << fppoly::pretty_poly(cert.m_bar) << "\n";
        for (const auto& ev : cert.repeated)
            os << "  repeated factor " << fppoly::pretty_poly(ev.factor) << " (e=" << ev.exponent
               << "): " << (ev.divides_m ? "divides M" : "does not divide M") << "\n";
        os << "verdict: p " << (cert.divides ? "DIVIDES" : "does not divide")
           << " the index\n";
        if (splitting) {
            os << "splitting type:";
            for (auto& [d, e] : splitting->parts) os << " (" << d << "," << e << ")";
            os << "\n";
        }
        os << "irreducibility: " << zpoly::to_string(irred.status) << " (" << irred.method
           << ")\n";
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t samples, std::uint64_t seed, long prime_bound, long coeff_bound,
               bool inject_fault, OutputTarget& out) {
    std::ostream& os = out.stream();
    arith::Rng rng(seed);
    const long ns[] = {5, 6, 7, 8, 9};
    std::uint64_t pairs = 0, generated = 0;
    std::vector<BigInt> small_primes;
    for (long v = 2; v <= prime_bound; ++v)
        if (arith::is_prime(BigInt(v))) small_primes.emplace_back(v);

    while (generated < samples) {
        long n = ns[mpz_get_ui(BigInt(rng.below(5)).get_mpz_t())];
        BigInt n2(n * n);
        std::vector<BigInt> valid_a;
        for (BigInt a = 1; a <= n2; ++a)
            if (n2 % a == 0 && gcd(a, BigInt(n2 / a)) == 1) valid_a.push_back(a);
        BigInt a = valid_a[mpz_get_ui(BigInt(rng.below(valid_a.size())).get_mpz_t())];
        BigInt b = rng.below(2 * coeff_bound + 1) - coeff_bound;
        BigInt c = rng.below(2 * coeff_bound + 1) - coeff_bound;
        zpoly::Quadrinomial q{BigInt(n), a, b, c};
        if (!q.shape_valid() || !zpoly::check_scope(q).applicable) continue;
        ++generated;

        std::uint64_t qseed = arith::derive_seed(seed, BigInt(generated));
        std::vector<BigInt> primes = small_primes;
        BigInt d = zpoly::discriminant(q);
        if (d != 0) {
            auto fact = arith::factor(d);
            for (const auto& [p, e] : fact.factors)
                if (p > prime_bound) primes.push_back(p);
        }
        for (const BigInt& p : primes) {
            auto cv = quadtheorem::classify_prime(q, p, {.seed = qseed});
            bool specialized = cv.verdict == quadtheorem::Verdict::Divides;
            if (inject_fault && pairs == 0) specialized = !specialized;
            bool general = dedekind::index_divides(zpoly::expand(q), p, qseed).divides;
            ++pairs;
            if (specialized != general) {
                report::Json j;
                j["mismatch"] = report::Json{{"n", std::to_string(n)},
                                             {"a", a.get_str()},
                                             {"b", b.get_str()},
                                             {"c", c.get_str()},
                                             {"p", p.get_str()},
                                             {"specialized", specialized},
                                             {"general", general}};
                j["pairs_checked"] = pairs;
                j["seed"] = std::to_string(seed);
                j["version"] = kVersion;
                os << j.dump() << "\n";
                return kExitInconsistent;
            }
        }
    }
    report::Json j;
    j["samples"] = generated;
    j["pairs_checked"] = pairs;
    j["mismatches"] = 0;
    j["seed"] = std::to_string(seed);
    j["version"] = kVersion;
    os << j.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"index-divisor classification and monogenicity testing for quadrinomials "
                 "x^n + a x^(n-1) + b x + c"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string n_str, a_str, b_str, c_str;
    std::string poly_text, p_str, primes_csv, out_path, filter = "all", format = "jsonl";
    std::string n_range, a_range, b_range, c_range;
    std::uint64_t seed = 0, samples = 100;
    unsigned long budget = 400000, cap = zpoly::kDefaultDegreeCap;
    long prime_bound = 50, coeff_bound = 10;
    int jobs = 1;
    bool json = false, inject_fault = false;

    auto add_quad_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n", n_str, "degree n (> 4)")->required();
        cmd->add_option("--a", a_str, "coefficient of x^(n-1)")->required();
        cmd->add_option("--b", b_str, "coefficient of x")->required();
        cmd->add_option("--c", c_str, "constant coefficient")->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json, "emit JSON instead of text");
        cmd->add_option("--out", out_path, "write output to a file");
        cmd->add_option("--seed", seed, "seed for all randomized routines");
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "discriminant, per-prime index verdicts, monogenicity");
    add_quad_flags(classify);
    add_common(classify);
    classify->add_option("--factor-budget", budget, "Pollard-rho step budget");
    classify->add_option("--degree-cap", cap, "largest degree to expand");

    CLI::App* exclusions = app.add_subcommand(
        "exclusions", "primes provably dividing neither D nor the index (any degree)");
    add_quad_flags(exclusions);
    add_common(exclusions);
    exclusions->add_option("--primes", primes_csv, "comma-separated primes to test");
    exclusions->add_option("--prime-bound", prime_bound, "test all primes up to this bound");

    CLI::App* dedekind_cmd = app.add_subcommand(
        "dedekind", "general index-divisibility criterion for a monic polynomial");
    dedekind_cmd->add_option("--poly", poly_text, "coefficients, leading first, e.g. 1,4,0,0,0,1,3")
        ->required();
    dedekind_cmd->add_option("--p", p_str, "prime")->required();
    add_common(dedekind_cmd);

    CLI::App* scan_cmd = app.add_subcommand("scan", "classify every tuple in coefficient ranges");
    scan_cmd->add_option("--n", n_range, "degree or range LO..HI")->required();
    scan_cmd->add_option("--a", a_range, "value or range LO..HI")->required();
    scan_cmd->add_option("--b", b_range, "value or range LO..HI")->required();
    scan_cmd->add_option("--c", c_range, "value or range LO..HI")->required();
    scan_cmd->add_option("--filter", filter, "all | monogenic | non-monogenic | unknown");
    scan_cmd->add_option("--format", format, "jsonl | csv");
    scan_cmd->add_option("--jobs", jobs, "worker threads (output is identical for any value)");
    scan_cmd->add_option("--out", out_path, "write output to a file");
    scan_cmd->add_option("--seed", seed, "seed for all randomized routines");
    scan_cmd->add_option("--factor-budget", budget, "Pollard-rho step budget");

    CLI::App* verify = app.add_subcommand(
        "verify", "compare the specialized classifier against the general criterion");
    verify->add_option("--samples", samples, "number of random quadrinomials");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--prime-bound", prime_bound, "classify all primes up to this bound");
    verify->add_option("--coeff-bound", coeff_bound, "|b|, |c| bound for sampling");
    verify->add_option("--out", out_path, "write output to a file");
    verify->add_flag("--inject-fault", inject_fault,
                     "flip the first specialized verdict (self-test of the harness)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    OutputTarget out{out_path, {}};
    try {
        if (classify->parsed())
            return cmd_classify(parse_bigint(n_str, "--n"), parse_bigint(a_str, "--a"),
                                parse_bigint(b_str, "--b"), parse_bigint(c_str, "--c"), json,
                                out, seed, budget, cap);
        if (exclusions->parsed())
            return cmd_exclusions(parse_bigint(n_str, "--n"), parse_bigint(a_str, "--a"),
                                  parse_bigint(b_str, "--b"), parse_bigint(c_str, "--c"),
                                  primes_csv, prime_bound, json, out, seed);
        if (dedekind_cmd->parsed())
            return cmd_dedekind(poly_text, parse_bigint(p_str, "--p"), seed, json, out);
        if (scan_cmd->parsed()) {
            scan::ScanOptions sopts;
            sopts.n = parse_range(n_range, "--n");
            sopts.a = parse_range(a_range, "--a");
            sopts.b = parse_range(b_range, "--b");
            sopts.c = parse_range(c_range, "--c");
            if (filter == "all") sopts.filter = scan::ScanFilter::All;
            else if (filter == "monogenic") sopts.filter = scan::ScanFilter::Monogenic;
            else if (filter == "non-monogenic") sopts.filter = scan::ScanFilter::NonMonogenic;
            else if (filter == "unknown") sopts.filter = scan::ScanFilter::Unknown;
            else throw CLI::ValidationError("--filter: unknown value " + filter);
            if (format == "jsonl") sopts.format = scan::ScanFormat::Jsonl;
            else if (format == "csv") sopts.format = scan::ScanFormat::Csv;
            else throw CLI::ValidationError("--format: unknown value " + format);
            sopts.jobs = jobs;
            sopts.seed = seed;
            sopts.budget.rho_iterations = budget;
            scan::run_scan(sopts, out.stream());
            return kExitOk;
        }
        if (verify->parsed())
            return cmd_verify(samples, seed, prime_bound, coeff_bound, inject_fault, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
