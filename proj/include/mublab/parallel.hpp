#pragma once

#include <cstdint>

namespace mublab {

/// Selects between the serial reference implementation of a kernel and the
/// OpenMP one. Both must produce identical results; the serial path is kept
/// as the oracle the parallel path is tested against.
enum class Execution { Serial, Parallel };

/// SplitMix64 step. Used to derive independent per-task seeds from a single
/// run seed so that serial and parallel schedules see the same substreams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace mublab
