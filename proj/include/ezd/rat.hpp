/*
   Copyright 2026 The ezd authors

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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ezd {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator, which is exactly the contract we need; there is no
/// floating point anywhere in the library.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
Rat rat_parse(const std::string& s);

std::string rat_str(const Rat& x);

/// Binomial coefficient as an exact rational (divided-power structure constants).
Rat rat_binom(long n, long k);

/// Deterministic, platform-independent PRNG (xorshift64*). Used for seeded
/// representative mixing and for seeded test instance generation; never for
/// anything that affects mathematical verdicts.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next()
    {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    /// Uniform-ish integer in [lo, hi] (inclusive). Bias is irrelevant here.
    long range(long lo, long hi)
    {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace ezd
