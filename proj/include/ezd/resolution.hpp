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

#include "ezd/freeseq.hpp"

namespace ezd {

/// A truncated free resolution of M over its algebra, built by killing
/// syzygies with minimal generating sets (so over a local ring the ranks are
/// the betti numbers). Used as the cross-check path next to the semifree
/// construction — Tor is computed from homology, never from ranks, except
/// where a test deliberately compares the two.
struct FreeResolution {
    FDModule mod;
    FreeSeq fseq;  // lo = 0
    Mat aug;       // realize(F_0) -> M
};

FreeResolution minimal_free_resolution(const FDModule& m, int cap);

/// Checks H_0 = M (via the augmentation) and H_i = 0 for 1 <= i <= top.
bool verify_resolution(const FreeResolution& r, int top);

/// Tor_i(M, N) for 0 <= i <= top as homology of F tensor N, with lengths.
struct TorTable {
    std::vector<HomologySpace> spaces;
    std::vector<long long> beta;
    int top = -1;
};

TorTable tor_table(const FreeSeq& fseq, const FDModule& n, int top);

}  // namespace ezd
