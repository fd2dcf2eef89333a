#pragma once

namespace franel {

// Also keyed into profile cache filenames so stale caches are never reused
// across algorithm changes.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace franel
