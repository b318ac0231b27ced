#pragma once

#include <stdexcept>
#include <string>

namespace mayer {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct NonpositiveAmplitude : Error { using Error::Error; };
struct NonpositiveDensity : Error { using Error::Error; };
struct NonpositiveDistance : Error { using Error::Error; };
struct WindowTooNarrow : Error { using Error::Error; };
struct SeedInvalid : Error { using Error::Error; };
struct ZeroDensityRange : Error { using Error::Error; };
struct IncommensurateWave : Error { using Error::Error; };
struct NonPeriodicLattice : Error { using Error::Error; };
struct VanishingDenominator : Error { using Error::Error; };
struct DivergenceTooLarge : Error { using Error::Error; };
struct NonTimelikeField : Error { using Error::Error; };
struct NonTimelikeVelocity : Error { using Error::Error; };
struct NotTimelike : Error { using Error::Error; };
struct NoNontrivialSolution : Error { using Error::Error; };

}  // namespace mayer
