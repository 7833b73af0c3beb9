#ifndef CARTAN_VERSION_HPP
#define CARTAN_VERSION_HPP

namespace cartan {
inline constexpr const char* kToolVersion = "0.1.0";
}

#endif
