#ifndef SEMIDELTA_VERSION_HPP_
#define SEMIDELTA_VERSION_HPP_

namespace semidelta {

inline constexpr const char* version_string = "0.1.0";

}  // namespace semidelta

#endif  // SEMIDELTA_VERSION_HPP_
