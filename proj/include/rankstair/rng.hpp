/*
   Copyright 2026 The rankstair authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RANKSTAIR_RNG_HPP
#define RANKSTAIR_RNG_HPP

#include <cstdint>
#include <random>

#include "rankstair/fields.hpp"
#include "rankstair/matrix.hpp"

namespace rankstair {

/// Reproducible random stream keyed by (seed, stream index), so independent
/// trials can run in parallel and still produce identical results regardless
/// of scheduling. std::uniform_int_distribution is avoided on purpose: its
/// output is implementation-defined, rejection sampling below is not.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : eng_(mix(seed, stream)) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    fq_t fq(const SmallField& F) { return fq_t(below(F.q())); }

    ExtEl ext(const FieldTower& T) {
        ExtEl e(T.m());
        for (unsigned i = 0; i < T.m(); ++i) e.c[i] = fq(T.base());
        return e;
    }

    ExtMatrix ext_matrix(const FieldTower& T, std::size_t rows, std::size_t cols) {
        ExtMatrix M(rows, cols, T.m());
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                for (unsigned u = 0; u < T.m(); ++u) M.entry(r, c)[u] = fq(T.base());
        return M;
    }

    BaseMatrix base_matrix(const SmallField& F, std::size_t rows, std::size_t cols) {
        BaseMatrix M(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) M.set(r, c, fq(F));
        return M;
    }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 over the pair; decorrelates nearby (seed, stream) keys.
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace rankstair

#endif  // RANKSTAIR_RNG_HPP
