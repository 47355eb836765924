#pragma once

namespace segrelab {

// Bumping this invalidates every on-disk Groebner cache entry.
inline const char* engine_version() { return "segrelab/1.0.0"; }

}  // namespace segrelab
