#ifndef XIC_CONSTANTS_HPP
#define XIC_CONSTANTS_HPP

namespace xic {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLog2Pi = 1.8378770664093454836; // log(2*pi)

// Euler's constant, gamma = lim (sum_{k<=n} 1/k - log n) = -psi(1).
inline constexpr double kEulerGamma = 0.57721566490153286061;

} // namespace xic

#endif
