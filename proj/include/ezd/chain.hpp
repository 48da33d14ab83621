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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ezd/linalg.hpp"

namespace ezd {

/// A bounded-below sequence of rational vector spaces with degree -1 maps.
/// Degrees below `lo` are genuinely zero; degrees above `hi` are truncated and
/// unknown — asking about them raises a truncation error rather than silently
/// returning zero.
struct Complex {
    int lo = 0, hi = -1;
    std::vector<int> dims;   // dims[n - lo]
    std::vector<Mat> diffs;  // diffs[n - lo - 1]: X_n -> X_{n-1}, for n in [lo+1, hi]

    int dim(int n) const;
    /// Differential X_n -> X_{n-1}; the zero map below the window, an error
    /// above it.
    Mat diff(int n) const;

    bool in_window(int n) const { return n >= lo && n <= hi; }
};

Complex make_complex(int lo, std::vector<int> dims, std::vector<Mat> diffs);

/// d_n d_{n+1} = 0 for every n in the window.
bool verify_complex(const Complex& c);

/// Degree shift: (S^i X)_n = X_{n-i}, (S^i d)_n = (-1)^i d_{n-i}.
Complex shift(const Complex& c, int i);

/// Cycles, boundaries, and deterministic coset representatives at one degree.
/// Valid for n <= hi - 1 (boundaries at n need the differential entering from
/// n + 1).
struct HomologySpace {
    int degree = 0;
    int ambient = 0;
    Subspace cycles;
    Subspace boundaries;
    std::vector<Vec> reps;

    int dim() const { return static_cast<int>(reps.size()); }
    /// Coordinates of a cycle's class in the representative basis.
    Vec class_coords(const Vec& cycle) const;
    /// The ambient vector representing coordinate vector c.
    Vec from_coords(const Vec& c) const;
};

HomologySpace homology(const Complex& c, int n);

/// A degree-homogeneous family of maps between complexes. Only even degrees
/// appear in this artifact, so chain-map squares commute without signs.
struct CxMap {
    std::shared_ptr<const Complex> src, dst;
    int degree = 0;
    std::map<int, Mat> comps;  // comps[n]: src_n -> dst_{n+degree}

    Mat comp(int n) const;  // zero map when absent
};

CxMap make_cxmap(std::shared_ptr<const Complex> src, std::shared_ptr<const Complex> dst, int degree,
                 std::map<int, Mat> comps);

/// Chain-map condition d f = f d on all degrees where both sides exist.
bool verify_chain_map(const CxMap& f);

/// Induced map on homology: classes of f(rep). Requires f to send cycles to
/// cycles; hsrc must be the homology of src at degree n, hdst at n + degree.
Mat induced_on_homology(const CxMap& f, const HomologySpace& hsrc, const HomologySpace& hdst);

/// Mapping cone of a degree 0 chain map h: F -> G:
/// W_n = F_{n-1} (+) G_n, d(x, g) = (-d x, d g - h x).
Complex cone_deg0(const CxMap& h);

/// Mapping cone of a degree -2 chain map t on a single complex C, with
/// t[n]: C_n -> C_{n-2}: W_n = C_{n-1} (+) C_n and
/// d^W_n = [[-d_{n-1}, -t_n], [0, d_n]] (both minus signs included).
Complex cone_degm2(const Complex& c, const std::map<int, Mat>& t);

/// Per-position exactness data for a run of composable maps.
struct ExactnessEntry {
    int position = 0;      // index of the middle space
    std::string label;
    bool im_in_ker = false;
    bool ker_in_im = false;
    int defect_im = 0;   // dim(im f / im f ∩ ker g)
    int defect_ker = 0;  // dim(ker g / im f ∩ ker g)
    bool exact() const { return im_in_ker && ker_in_im; }
};

/// maps[i]: V_i -> V_{i+1}; reports exactness at positions 1..len-2.
std::vector<ExactnessEntry> exactness_report(const std::vector<int>& dims, const std::vector<Mat>& maps,
                                             const std::vector<std::string>& labels = {});

/// Degreewise short exactness of 0 -> A -> B -> C -> 0 plus the two chain-map
/// squares, over the union of the windows (degrees above any complex's hi are
/// not checked).
struct SesCheck {
    bool chain_maps_ok = false;
    bool degreewise_exact = false;
    int checked_lo = 0, checked_hi = 0;
    bool ok() const { return chain_maps_ok && degreewise_exact; }
};
SesCheck check_ses(const CxMap& incl, const CxMap& proj);

/// One node of a long exact sequence: a labeled homology space.
struct LesNode {
    std::string label;
    int which = 0;  // 0 = A, 1 = B, 2 = C
    int degree = 0;
    HomologySpace h;
};

/// The long exact homology sequence of a short exact sequence of complexes,
/// materialized top degree first:
///   H_whi(A) -> H_whi(B) -> H_whi(C) -> H_{whi-1}(A) -> ... -> H_wlo(C)
/// with connecting maps computed by an explicit zigzag.
struct LongExactSeq {
    std::vector<LesNode> nodes;
    std::vector<Mat> maps;  // maps[i]: nodes[i] -> nodes[i+1]

    /// Connecting map out of H_n(C), if that node and its successor exist.
    const Mat* connecting(int n) const;
    const Mat* map_from(int which, int degree) const;  // map out of node (which, degree)
    const LesNode* node(int which, int degree) const;

    std::vector<ExactnessEntry> exactness() const;
};

LongExactSeq les_from_ses(const CxMap& incl, const CxMap& proj, int wlo, int whi,
                          const std::string& nameA = "A", const std::string& nameB = "B",
                          const std::string& nameC = "C");

}  // namespace ezd
