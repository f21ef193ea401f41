#ifndef QUADINDEX_ERRORS_HPP
#define QUADINDEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quadindex {

/// Caller violated a documented precondition.
class invalid_argument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A quantity the mathematics guarantees (an exact division, an asserted
/// congruence, agreement between two independent computations) failed to
/// hold. Always a bug, never a data error.
class internal_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace quadindex

#endif
