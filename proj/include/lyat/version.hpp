#ifndef LYAT_VERSION_HPP
#define LYAT_VERSION_HPP

namespace lyat {
inline constexpr const char* library_version = "0.1.0";
}

#endif
