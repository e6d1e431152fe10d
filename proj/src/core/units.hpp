#pragma once

// All mechanics are computed in SI (m, Pa, N); mm / kPa / MPa appear only at
// I/O boundaries so there is exactly one conversion site per quantity.

namespace sucktac::units {

inline constexpr double mm_to_m = 1e-3;
inline constexpr double m_to_mm = 1e3;
inline constexpr double kpa_to_pa = 1e3;
inline constexpr double pa_to_kpa = 1e-3;
inline constexpr double mpa_to_pa = 1e6;
inline constexpr double pa_to_mpa = 1e-6;

}  // namespace sucktac::units
