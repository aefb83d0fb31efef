#pragma once

namespace excimech {

// CODATA 2018 / 2019-SI exact values.
inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kBoltzmann = 1.380649e-23;     // J / K
inline constexpr double kElectronVolt = 1.602176634e-19;  // J

inline constexpr double kTwoPi = 6.28318530717958647692528676656;

}  // namespace excimech
