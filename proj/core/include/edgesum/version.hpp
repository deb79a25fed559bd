#pragma once

namespace edgesum {

/// Library version, also reported in every JSON report for traceability.
inline constexpr const char* version_string = "0.1.0";

}  // namespace edgesum
