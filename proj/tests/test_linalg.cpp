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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace ezd;
using namespace ezdtest;

TEST_CASE("rref on the identity")
{
    auto [r, piv] = rref(Mat::identity(2));
    CHECK(r == Mat::identity(2));
    CHECK(piv == std::vector<int>{0, 1});
}

TEST_CASE("rref on a rank one matrix")
{
    Mat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    auto [r, piv] = rref(m);
    CHECK(piv == std::vector<int>{0});
    CHECK(r.at(0, 0) == 1);
    CHECK(r.at(0, 1) == 2);
    CHECK(r.at(1, 0) == 0);
    CHECK(r.at(1, 1) == 0);
}

TEST_CASE("rank agrees with the determinant-minor oracle")
{
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        Rng rng(seed);
        Mat m = random_mat(rng, 5, 7, -2, 2);
        CHECK(rank(m) == rank_by_minors(m));
    }
}

TEST_CASE("kernel basics")
{
    CHECK(kernel_basis(Mat::identity(3)).dim() == 0);
    CHECK(kernel_basis(Mat::zero(3, 3)).dim() == 3);
    // kernel ordering by free column index
    Mat m(1, 3);
    m.at(0, 0) = 1;
    auto kv = kernel_vectors(m);
    REQUIRE(kv.size() == 2);
    CHECK(kv[0][1] == 1);
    CHECK(kv[1][2] == 1);
}

TEST_CASE("kernel vectors are killed and rank-nullity holds")
{
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        Rng rng(seed);
        Mat m = random_mat(rng, 4, 6);
        auto kv = kernel_vectors(m);
        for (const Vec& v : kv) CHECK(vec_is_zero(m.apply(v)));
        CHECK(rank(m) + static_cast<int>(kv.size()) == m.cols());
    }
}

TEST_CASE("rref is idempotent")
{
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        Rng rng(seed);
        Mat m = random_mat(rng, 4, 5);
        Mat r = rref(m).first;
        CHECK(rref(r).first == r);
    }
}

TEST_CASE("solve finds a preimage exactly when one exists")
{
    Rng rng(31);
    Mat m = random_mat(rng, 4, 3);
    Vec x{Rat(1), Rat(-2), Rat(1, 2)};
    Vec b = m.apply(x);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);

    // a vector outside the column space (random until it misses)
    for (std::uint64_t seed : {41u, 42u, 43u, 44u}) {
        Rng rng2(seed);
        Vec c(4, Rat(0));
        for (int i = 0; i < 4; ++i) c[i] = Rat(rng2.range(-3, 3));
        if (!image_basis(m).contains(c)) {
            CHECK(!solve(m, c).has_value());
            break;
        }
    }
}

TEST_CASE("rank of the identity")
{
    for (int n : {1, 2, 5}) CHECK(rank(Mat::identity(n)) == n);
}

TEST_CASE("quotient_basis of the plane modulo the x-axis")
{
    Subspace full = Subspace::full_space(2);
    Subspace axis = Subspace::span(2, {vec_unit(2, 0)});
    auto reps = quotient_basis(full, axis);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0] == vec_unit(2, 1));
}

TEST_CASE("intersection of the axes is zero")
{
    Subspace a = Subspace::span(2, {vec_unit(2, 0)});
    Subspace b = Subspace::span(2, {vec_unit(2, 1)});
    CHECK(subspace_intersect(a, b).dim() == 0);
}

TEST_CASE("intersection dimension formula")
{
    for (std::uint64_t seed : {51u, 52u, 53u}) {
        Rng rng(seed);
        Subspace a = image_basis(random_mat(rng, 5, 3));
        Subspace b = image_basis(random_mat(rng, 5, 3));
        Subspace meet = subspace_intersect(a, b);
        Subspace join = subspace_sum(a, b);
        CHECK(meet.dim() + join.dim() == a.dim() + b.dim());
        for (const Vec& v : meet.basis()) {
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
    }
}

TEST_CASE("subspace equality is basis independent")
{
    Subspace a = Subspace::span(3, {vec_unit(3, 0), vec_unit(3, 1)});
    Vec w = vec_add(vec_unit(3, 0), vec_unit(3, 1));
    Subspace b = Subspace::span(3, {w, vec_unit(3, 0)});
    CHECK(a == b);
    Subspace c = Subspace::span(3, {vec_unit(3, 2)});
    CHECK(a != c);
}

TEST_CASE("from_independent rejects dependent vectors")
{
    CHECK_THROWS_AS(Subspace::from_independent(2, {vec_unit(2, 0), vec_unit(2, 0)}), Error);
}
