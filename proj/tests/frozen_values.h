// Generated by tests/oracles/frozen_values.py. Do not edit.
#pragma once

namespace tiltbound::testing {

inline constexpr double kUStarH1E1 = 2.8900938868435097448;
inline constexpr double kUStarH1em8E1 = 0.33333334222222231111;
inline constexpr double kSigmaH0p2 = 1.4197240896456620122;
inline constexpr double kSigmaH1 = 0.65804932522251572654;
inline constexpr double kSigmaH5 = 0.082080059491765924478;
inline constexpr double kEpsTildeH1TwoSigma = 0.81360615445239029073;
inline constexpr double kEpsW0H1S1 = 1.2544266169822876271;
inline constexpr double kEpsWm1H1S1 = 2.3666554490136505637;
inline constexpr double kLambertM1Minus0p1 = -3.5771520639572972184;
inline constexpr double kKm1H1 = 0.31784443289937268383;
inline constexpr double kKm1H50 = 0.90896747171202495845;
inline constexpr double kKm1H1em3 = 0.00095658034376728347288;
inline constexpr double kTwoPointU0p5V2H2W1 = 1.5848130755028847397;
inline constexpr double kSupH1W0S1 = 0.48235554410246822486;
inline constexpr double kSupH5Wm1S1 = 0.59040508164149796004;
inline constexpr double kSupH1W1S0p5 = 0.33247382284157956324;
inline constexpr double kSupH1W1S2 = 2.2729975680487034664;

}  // namespace tiltbound::testing
