#pragma once
#include <cstdint>
#include <cstddef>

namespace mglpa {

/** Vertex id, also used as community label. */
using Vertex = std::uint32_t;
/** Index into the arc arrays of a CSR graph. */
using ArcIndex = std::uint64_t;

#ifdef MGLPA_DOUBLE_WEIGHTS
using Weight = double;
#else
/** Edge weight type (32-bit unless built with MGLPA_DOUBLE_WEIGHTS). */
using Weight = float;
#endif

/** Label value that never names a vertex. */
inline constexpr Vertex kNoLabel = ~Vertex{0};

}  // namespace mglpa
