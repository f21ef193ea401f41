#ifndef QUADINDEX_IRREDUCIBILITY_HPP
#define QUADINDEX_IRREDUCIBILITY_HPP

#include <cstdint>
#include <string>

#include "quadindex/intpoly.hpp"

namespace quadindex::zpoly {

enum class IrredStatus { Certified, Assumed, Refuted };
std::string to_string(IrredStatus s);

struct IrreducibilityResult {
    IrredStatus status = IrredStatus::Assumed;
    std::string method;  // e.g. "irreducible mod 7", "eisenstein at 3", "rational root -1"
};

/// Best-effort irreducibility check over Q for monic f: rational-root
/// refutation, Eisenstein certificates, and an irreducible-mod-p witness
/// search over p < 100. Assumed when all three are silent.
IrreducibilityResult check_irreducible(const IntPoly& f, std::uint64_t seed = 0);

}  // namespace quadindex::zpoly

#endif
