#ifndef QUADINDEX_VERSION_HPP
#define QUADINDEX_VERSION_HPP

namespace quadindex {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
