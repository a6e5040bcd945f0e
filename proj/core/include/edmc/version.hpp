#pragma once

namespace edmc {

inline constexpr const char* kVersion = "0.1.0";

/// Compiler fingerprint baked into run records.
const char* build_info();

}  // namespace edmc
