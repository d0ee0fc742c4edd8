#pragma once

namespace qdf {

inline constexpr const char* kToolName = "qdf";
inline constexpr const char* kVersion = "0.1.0";

/// Energy unit used everywhere after ingestion.
inline constexpr double kKcalPerHartree = 627.509474;

}  // namespace qdf
