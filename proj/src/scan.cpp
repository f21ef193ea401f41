#include "quadindex/scan.hpp"

#include <ostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quadindex/version.hpp"

namespace quadindex::scan {

std::string to_string(ScanFilter f) {
    switch (f) {
        case ScanFilter::All: return "all";
        case ScanFilter::Monogenic: return "monogenic";
        case ScanFilter::NonMonogenic: return "non-monogenic";
        case ScanFilter::Unknown: return "unknown";
    }
    return "?";
}

namespace {

struct Tuple {
    long n, a, b, c;
};

std::uint64_t tuple_seed(std::uint64_t seed, const Tuple& t) {
    std::uint64_t s = seed;
    for (long v : {t.n, t.a, t.b, t.c})
        s = arith::derive_seed(s, BigInt(v));
    return s;
}

// One output line per tuple; empty when the filter rejects it.
std::string process_tuple(const Tuple& t, const ScanOptions& opts,
                          quadtheorem::Monogenicity& verdict_out) {
    zpoly::Quadrinomial q{BigInt(t.n), BigInt(t.a), BigInt(t.b), BigInt(t.c)};
    report::ClassifyReport rep;
    rep.seed = tuple_seed(opts.seed, t);
    quadtheorem::MonogenicityOptions mopts;
    mopts.budget = opts.budget;
    mopts.budget.rho_seed = rep.seed;
    mopts.seed = rep.seed;
    mopts.degree_cap = opts.degree_cap;
    if (zpoly::discriminant(q, opts.degree_cap) == 0) {
        // repeated roots over Q: reducible, no number field to speak of
        rep.irred = {zpoly::IrredStatus::Refuted, "zero discriminant"};
        rep.mono.q = q;
        rep.mono.scope = zpoly::check_scope(q);
        rep.mono.seed = rep.seed;
    } else {
        rep.irred = zpoly::check_irreducible(zpoly::expand(q, opts.degree_cap), rep.seed);
        rep.mono = quadtheorem::is_monogenic(q, mopts);
        if (rep.irred.status == zpoly::IrredStatus::Refuted) {
            // the criterion computations stand, the field verdict does not
            rep.mono.verdict = quadtheorem::Monogenicity::Unknown;
            rep.mono.index_exact.reset();
        }
    }
    verdict_out = rep.mono.verdict;

    bool keep = opts.filter == ScanFilter::All ||
                (opts.filter == ScanFilter::Monogenic &&
                 verdict_out == quadtheorem::Monogenicity::Monogenic) ||
                (opts.filter == ScanFilter::NonMonogenic &&
                 verdict_out == quadtheorem::Monogenicity::NotMonogenic) ||
                (opts.filter == ScanFilter::Unknown &&
                 verdict_out == quadtheorem::Monogenicity::Unknown);
    if (!keep) return {};
    if (opts.format == ScanFormat::Csv) return report::csv_row(rep) + "\n";
    return report::to_json(rep).dump() + "\n";
}

}  // namespace

ScanSummary run_scan(const ScanOptions& opts, std::ostream& out) {
    std::vector<Tuple> tuples;
    for (long n = opts.n.lo; n <= opts.n.hi; ++n)
        for (long a = opts.a.lo; a <= opts.a.hi; ++a)
            for (long b = opts.b.lo; b <= opts.b.hi; ++b)
                for (long c = opts.c.lo; c <= opts.c.hi; ++c) {
                    zpoly::Quadrinomial q{BigInt(n), BigInt(a), BigInt(b), BigInt(c)};
                    if (zpoly::check_scope(q).applicable) tuples.push_back({n, a, b, c});
                }

    if (opts.format == ScanFormat::Csv) out << report::csv_header() << "\n";

    ScanSummary sum;
    sum.tuples_considered = tuples.size();
    std::vector<std::string> lines(tuples.size());
    std::vector<quadtheorem::Monogenicity> verdicts(
        tuples.size(), quadtheorem::Monogenicity::Unknown);
    std::vector<std::string> errors(tuples.size());

    auto safe_process = [&](std::size_t i) {
        try {
            lines[i] = process_tuple(tuples[i], opts, verdicts[i]);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

#ifdef _OPENMP
    if (opts.jobs > 1) {
        #pragma omp parallel for schedule(dynamic) num_threads(opts.jobs)
        for (std::size_t i = 0; i < tuples.size(); ++i) safe_process(i);
    } else
#endif
    {
        for (std::size_t i = 0; i < tuples.size(); ++i) safe_process(i);
    }
    for (const std::string& e : errors)
        if (!e.empty()) throw internal_error("scan: " + e);

    for (std::size_t i = 0; i < tuples.size(); ++i) {
        switch (verdicts[i]) {
            case quadtheorem::Monogenicity::Monogenic: ++sum.monogenic; break;
            case quadtheorem::Monogenicity::NotMonogenic: ++sum.not_monogenic; break;
            case quadtheorem::Monogenicity::Unknown: ++sum.unknown; break;
        }
        if (!lines[i].empty()) {
            out << lines[i];
            ++sum.records;
        }
    }

    if (opts.format == ScanFormat::Jsonl) {
        report::Json j;
        j["summary"] = report::Json{{"tuples_considered", sum.tuples_considered},
                                    {"records", sum.records},
                                    {"monogenic", sum.monogenic},
                                    {"not_monogenic", sum.not_monogenic},
                                    {"unknown", sum.unknown},
                                    {"filter", to_string(opts.filter)},
                                    {"seed", std::to_string(opts.seed)},
                                    {"version", kVersion}};
        out << j.dump() << "\n";
    }
    return sum;
}

}  // namespace quadindex::scan
