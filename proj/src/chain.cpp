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

#include "ezd/chain.hpp"

#include "ezd/error.hpp"

namespace ezd {

int Complex::dim(int n) const
{
    if (n < lo) return 0;
    if (n > hi) fail(ErrKind::truncation, "degree " + std::to_string(n) + " is beyond the window top " + std::to_string(hi));
    return dims[n - lo];
}

Mat Complex::diff(int n) const
{
    if (n > hi) fail(ErrKind::truncation, "differential at degree " + std::to_string(n) + " is beyond the window");
    if (n <= lo) {
        int src = (n < lo) ? 0 : dims[0];
        return Mat::zero(0, src);
    }
    return diffs[n - lo - 1];
}

Complex make_complex(int lo, std::vector<int> dims, std::vector<Mat> diffs)
{
    Complex c;
    c.lo = lo;
    c.hi = lo + static_cast<int>(dims.size()) - 1;
    c.dims = std::move(dims);
    c.diffs = std::move(diffs);
    if (c.diffs.size() + 1 != c.dims.size() && !(c.dims.empty() && c.diffs.empty()))
        fail(ErrKind::structure, "need exactly one differential per adjacent degree pair");
    for (size_t k = 0; k < c.diffs.size(); ++k) {
        if (c.diffs[k].cols() != c.dims[k + 1] || c.diffs[k].rows() != c.dims[k])
            fail(ErrKind::structure, "differential shape mismatch at degree " + std::to_string(c.lo + 1 + static_cast<int>(k)));
    }
    return c;
}

bool verify_complex(const Complex& c)
{
    for (int n = c.lo + 2; n <= c.hi; ++n)
        if (!c.diff(n - 1).mul(c.diff(n)).is_zero()) return false;
    return true;
}

Complex shift(const Complex& c, int i)
{
    Complex out;
    out.lo = c.lo + i;
    out.hi = c.hi + i;
    out.dims = c.dims;
    out.diffs = c.diffs;
    if (i % 2 != 0)
        for (Mat& m : out.diffs) m = m.neg();
    return out;
}

Vec HomologySpace::class_coords(const Vec& cycle) const
{
    if (!cycles.contains(cycle)) fail(ErrKind::precondition, "vector is not a cycle");
    std::vector<Vec> cols = reps;
    for (const Vec& b : boundaries.basis()) cols.push_back(b);
    if (cols.empty()) return {};
    auto x = solve(Mat::from_cols(cols, ambient), cycle);
    if (!x) fail(ErrKind::structure, "cycle not expressible in representatives + boundaries");
    return Vec(x->begin(), x->begin() + static_cast<long>(reps.size()));
}

Vec HomologySpace::from_coords(const Vec& c) const
{
    Vec v = vec_zero(ambient);
    for (size_t i = 0; i < reps.size(); ++i) v = vec_add(v, vec_scale(c[i], reps[i]));
    return v;
}

HomologySpace homology(const Complex& c, int n)
{
    if (n > c.hi - 1)
        fail(ErrKind::truncation, "homology at degree " + std::to_string(n) + " needs the differential from degree " +
                                      std::to_string(n + 1) + ", beyond the window");
    HomologySpace h;
    h.degree = n;
    if (n < c.lo) {
        h.ambient = 0;
        h.cycles = Subspace::zero_space(0);
        h.boundaries = Subspace::zero_space(0);
        return h;
    }
    h.ambient = c.dim(n);
    h.cycles = kernel_basis(c.diff(n));
    h.boundaries = image_basis(c.diff(n + 1));
    h.reps = quotient_basis(h.cycles, h.boundaries);
    return h;
}

Mat CxMap::comp(int n) const
{
    auto it = comps.find(n);
    if (it != comps.end()) return it->second;
    int srcd = (n >= src->lo && n <= src->hi) ? src->dim(n) : 0;
    int m = n + degree;
    int dstd = (m >= dst->lo && m <= dst->hi) ? dst->dim(m) : 0;
    return Mat::zero(dstd, srcd);
}

CxMap make_cxmap(std::shared_ptr<const Complex> src, std::shared_ptr<const Complex> dst, int degree,
                 std::map<int, Mat> comps)
{
    CxMap f;
    f.src = std::move(src);
    f.dst = std::move(dst);
    f.degree = degree;
    f.comps = std::move(comps);
    for (const auto& [n, m] : f.comps) {
        if (!f.src->in_window(n)) fail(ErrKind::structure, "map component outside the source window");
        if (m.cols() != f.src->dim(n)) fail(ErrKind::structure, "map component source dim mismatch");
        int tgt = n + degree;
        int want = (tgt >= f.dst->lo && tgt <= f.dst->hi) ? f.dst->dim(tgt) : 0;
        if (m.rows() != want) fail(ErrKind::structure, "map component target dim mismatch");
    }
    return f;
}

bool verify_chain_map(const CxMap& f)
{
    if (f.degree % 2 != 0) fail(ErrKind::precondition, "only even-degree chain maps are supported");
    // d_dst f_n = f_{n-1} d_n for every n with all four pieces in-window.
    int lo = f.src->lo + 1;
    int hi = std::min(f.src->hi, f.dst->hi - f.degree);
    for (int n = lo; n <= hi; ++n) {
        Mat left = f.dst->diff(n + f.degree).mul(f.comp(n));
        Mat right = f.comp(n - 1).mul(f.src->diff(n));
        if (left != right) return false;
    }
    return true;
}

Mat induced_on_homology(const CxMap& f, const HomologySpace& hsrc, const HomologySpace& hdst)
{
    if (hdst.degree != hsrc.degree + f.degree) fail(ErrKind::precondition, "homology degrees do not match the map degree");
    Mat out(hdst.dim(), hsrc.dim());
    Mat comp = f.comp(hsrc.degree);
    for (int j = 0; j < hsrc.dim(); ++j) {
        Vec img = comp.apply(hsrc.reps[j]);
        Vec cls = hdst.class_coords(img);
        for (int i = 0; i < hdst.dim(); ++i) out.at(i, j) = cls[i];
    }
    return out;
}

Complex cone_deg0(const CxMap& h)
{
    if (h.degree != 0) fail(ErrKind::precondition, "cone_deg0 expects a degree 0 chain map");
    if (!verify_chain_map(h)) fail(ErrKind::precondition, "cone input is not a chain map");
    const Complex& F = *h.src;
    const Complex& G = *h.dst;
    int lo = std::min(F.lo + 1, G.lo);
    int hi = std::min(F.hi + 1, G.hi);

    auto fdim = [&](int n) { return (n >= F.lo && n <= F.hi) ? F.dim(n) : 0; };
    auto gdim = [&](int n) { return (n >= G.lo && n <= G.hi) ? G.dim(n) : 0; };

    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(fdim(n - 1) + gdim(n));
    std::vector<Mat> diffs;
    for (int n = lo + 1; n <= hi; ++n) {
        Mat d(fdim(n - 2) + gdim(n - 1), fdim(n - 1) + gdim(n));
        d.set_block(0, 0, F.diff(n - 1).neg());
        d.set_block(fdim(n - 2), 0, h.comp(n - 1).neg());
        d.set_block(fdim(n - 2), fdim(n - 1), G.diff(n));
        diffs.push_back(std::move(d));
    }
    return make_complex(lo, std::move(dims), std::move(diffs));
}

Complex cone_degm2(const Complex& c, const std::map<int, Mat>& t)
{
    auto tt = [&](int n) -> Mat {
        auto it = t.find(n);
        if (it != t.end()) return it->second;
        int srcd = (n >= c.lo && n <= c.hi) ? c.dims[n - c.lo] : 0;
        int dstd = (n - 2 >= c.lo && n - 2 <= c.hi) ? c.dims[n - 2 - c.lo] : 0;
        return Mat::zero(dstd, srcd);
    };
    auto cdim = [&](int n) { return (n >= c.lo && n <= c.hi) ? c.dims[n - c.lo] : 0; };
    auto cdiff = [&](int n) -> Mat {
        if (n > c.lo && n <= c.hi) return c.diff(n);
        return Mat::zero(cdim(n - 1), cdim(n));
    };

    int lo = c.lo;
    int hi = c.hi;
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(cdim(n - 1) + cdim(n));
    std::vector<Mat> diffs;
    for (int n = lo + 1; n <= hi; ++n) {
        Mat d(cdim(n - 2) + cdim(n - 1), cdim(n - 1) + cdim(n));
        d.set_block(0, 0, cdiff(n - 1).neg());
        d.set_block(0, cdim(n - 1), tt(n).neg());
        d.set_block(cdim(n - 2), cdim(n - 1), cdiff(n));
        diffs.push_back(std::move(d));
    }
    return make_complex(lo, std::move(dims), std::move(diffs));
}

std::vector<ExactnessEntry> exactness_report(const std::vector<int>& dims, const std::vector<Mat>& maps,
                                             const std::vector<std::string>& labels)
{
    if (maps.size() + 1 != dims.size()) fail(ErrKind::structure, "exactness_report: need one map per adjacent pair");
    std::vector<ExactnessEntry> out;
    for (size_t i = 1; i + 1 < dims.size(); ++i) {
        ExactnessEntry e;
        e.position = static_cast<int>(i);
        e.label = i < labels.size() ? labels[i] : ("position " + std::to_string(i));
        Subspace im = image_basis(maps[i - 1]);
        Subspace ker = kernel_basis(maps[i]);
        Subspace meet = subspace_intersect(im, ker);
        e.im_in_ker = (meet.dim() == im.dim());
        e.ker_in_im = (meet.dim() == ker.dim());
        e.defect_im = im.dim() - meet.dim();
        e.defect_ker = ker.dim() - meet.dim();
        out.push_back(std::move(e));
    }
    return out;
}

SesCheck check_ses(const CxMap& incl, const CxMap& proj)
{
    SesCheck out;
    if (incl.dst != proj.src) fail(ErrKind::precondition, "short exact sequence maps do not compose");
    if (incl.degree != 0 || proj.degree != 0) fail(ErrKind::precondition, "ses maps must have degree 0");
    out.chain_maps_ok = verify_chain_map(incl) && verify_chain_map(proj);

    const Complex& A = *incl.src;
    const Complex& B = *incl.dst;
    const Complex& C = *proj.dst;
    out.checked_lo = std::min(std::min(A.lo, B.lo), C.lo);
    out.checked_hi = std::min(std::min(A.hi, B.hi), C.hi);
    auto dimof = [](const Complex& X, int n) { return (n >= X.lo && n <= X.hi) ? X.dims[n - X.lo] : 0; };

    out.degreewise_exact = true;
    for (int n = out.checked_lo; n <= out.checked_hi; ++n) {
        int da = dimof(A, n), db = dimof(B, n), dc = dimof(C, n);
        Mat i = incl.comp(n), p = proj.comp(n);
        bool ok = (rank(i) == da) && (rank(p) == dc) && (da + dc == db) && p.mul(i).is_zero();
        if (!ok) out.degreewise_exact = false;
    }
    return out;
}

const Mat* LongExactSeq::connecting(int n) const { return map_from(2, n); }

const Mat* LongExactSeq::map_from(int which, int degree) const
{
    for (size_t i = 0; i + 1 < nodes.size(); ++i)
        if (nodes[i].which == which && nodes[i].degree == degree) return &maps[i];
    return nullptr;
}

const LesNode* LongExactSeq::node(int which, int degree) const
{
    for (const auto& nd : nodes)
        if (nd.which == which && nd.degree == degree) return &nd;
    return nullptr;
}

std::vector<ExactnessEntry> LongExactSeq::exactness() const
{
    std::vector<int> dims;
    std::vector<std::string> labels;
    for (const auto& nd : nodes) {
        dims.push_back(nd.h.dim());
        labels.push_back(nd.label);
    }
    return exactness_report(dims, maps, labels);
}

LongExactSeq les_from_ses(const CxMap& incl, const CxMap& proj, int wlo, int whi, const std::string& nameA,
                          const std::string& nameB, const std::string& nameC)
{
    SesCheck sc = check_ses(incl, proj);
    if (!sc.ok()) fail(ErrKind::precondition, "les_from_ses: input is not a degreewise short exact sequence of complexes");
    const Complex& A = *incl.src;
    const Complex& B = *incl.dst;
    const Complex& C = *proj.dst;
    if (whi > std::min(std::min(A.hi, B.hi), C.hi) - 1)
        fail(ErrKind::truncation, "les window reaches beyond reliable homology degrees");

    LongExactSeq les;
    std::map<std::pair<int, int>, HomologySpace> hs;
    auto get_h = [&](int which, int n) -> const HomologySpace& {
        auto key = std::make_pair(which, n);
        auto it = hs.find(key);
        if (it == hs.end()) {
            const Complex& X = which == 0 ? A : which == 1 ? B : C;
            it = hs.emplace(key, homology(X, n)).first;
        }
        return it->second;
    };
    auto label_of = [&](int which, int n) {
        const std::string& nm = which == 0 ? nameA : which == 1 ? nameB : nameC;
        return "H_" + std::to_string(n) + "(" + nm + ")";
    };

    for (int n = whi; n >= wlo; --n) {
        for (int which = 0; which < 3; ++which) {
            LesNode nd;
            nd.which = which;
            nd.degree = n;
            nd.label = label_of(which, n);
            nd.h = get_h(which, n);
            les.nodes.push_back(std::move(nd));
        }
    }

    for (size_t i = 0; i + 1 < les.nodes.size(); ++i) {
        const LesNode& from = les.nodes[i];
        const LesNode& to = les.nodes[i + 1];
        if (from.which == 0) {
            les.maps.push_back(induced_on_homology(incl, from.h, to.h));
        }
        else if (from.which == 1) {
            les.maps.push_back(induced_on_homology(proj, from.h, to.h));
        }
        else {
            // Connecting map by zigzag: lift the cycle through proj, push with
            // the differential, pull back through incl.
            const int n = from.degree;
            Mat out(to.h.dim(), from.h.dim());
            Mat p = proj.comp(n);
            Mat icl = incl.comp(n - 1);
            Mat d = B.diff(n);
            for (int j = 0; j < from.h.dim(); ++j) {
                auto b = solve(p, from.h.reps[j]);
                if (!b) fail(ErrKind::structure, "connecting map: cycle has no preimage");
                Vec w = d.apply(*b);
                auto a = solve(icl, w);
                if (!a) fail(ErrKind::structure, "connecting map: boundary does not pull back");
                Vec cls = to.h.class_coords(*a);
                for (int r = 0; r < to.h.dim(); ++r) out.at(r, j) = cls[r];
            }
            les.maps.push_back(std::move(out));
        }
    }
    return les;
}

}  // namespace ezd
