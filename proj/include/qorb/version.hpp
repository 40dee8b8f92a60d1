#pragma once

namespace qorb {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace qorb
