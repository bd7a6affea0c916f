/*
   Copyright 2026 the repst authors

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

/**
 * @file half_braiding.hpp
 * @brief Candidate half-braidings on idempotent-cut tensor powers of the
 *        generating object, and the categorical-center condition checker.
 *
 * The rational group algebra of S_n embeds into the endomorphisms of the
 * n-th tensor power of the generating object by sending a permutation g to
 * the x-basis element of its pair diagram {{i, g(i)'}}. An idempotent
 * e = sum c_g g with rational coefficients therefore cuts out an object, and
 * the construction implemented here attaches to e (together with the
 * permutation sigma whose centralizer contains the support of e) a candidate
 * half-braiding
 *
 *     c = rotation . (e tensor Id) . (Id + sum_i (E^i_{sigma(i)} - E^i_i))
 *
 * on n+1 strands, where E^i_j is the insertion diagram absorbing the fresh
 * upper point into the through-strand {i, i'} and the fresh lower point into
 * the through-strand {j, j'}, and rotation is the cyclic permutation diagram
 * (1 2 ... n+1). Under evaluation the twist sum acts on a tuple with a fresh
 * value u appended by replacing u, whenever it equals coordinate i, with
 * coordinate sigma(i) — the conjugated permutation sigma_v applied to u.
 *
 * check_center verifies, symbolically in the parameter t, the two unit
 * compatibilities and the multiplication/crossing compatibilities that make
 * the pair (object, c) an object of the categorical center.
 */

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "repst/diagram.hpp"
#include "repst/permutation.hpp"
#include "repst/rational.hpp"

namespace repst {

/// Group-algebra convolution: (a*b)(w) = sum over u*v = w of a(u) b(v).
std::map<Permutation, Rational> convolve(const std::map<Permutation, Rational>& a,
                                         const std::map<Permutation, Rational>& b);

/// The averaging idempotent (1/|G|) sum_g g of the listed group elements.
std::map<Permutation, Rational> trivial_idempotent(const std::vector<Permutation>& group);

/// The sign-character idempotent (1/|G|) sum_g sign(g) g.
std::map<Permutation, Rational> sign_idempotent(const std::vector<Permutation>& group);

/// The idempotent (1/|G|) sum_g psi(g^{-1}) g of a rational-valued linear
/// character psi given by its value table. Every listed element must appear
/// in the table, and the values must be multiplicative.
std::map<Permutation, Rational> linear_idempotent(
    const std::vector<Permutation>& group, const std::map<Permutation, Rational>& character);

/// sum c_g x_{pattern(g)}: the x-basis embedding of a group-algebra element
/// of S_n into the endomorphisms of the n-th tensor power.
DiagramMorphism group_algebra_embedding(int n, const std::map<Permutation, Rational>& element);

/// The insertion diagram E^i_j on n+1 strands (1 <= i, j <= n): every
/// strand k passes through; the fresh upper point n+1 is absorbed into the
/// through-strand {i, i'} and the fresh lower point (n+1)' into the
/// through-strand {j, j'} (one four-point block when i = j).
SetPartition insertion_pattern(int n, int i, int j);

/// Id + sum_{i=1..n} (E^i_{sigma(i)} - E^i_i), a morphism on n+1 strands.
DiagramMorphism twist_sum(const Permutation& sigma);

/// The cyclic rotation diagram of (1 2 ... n+1) on n+1 strands.
DiagramMorphism rotation_morphism(int n);

/// d1 = (e tensor Id) after the twist sum.
DiagramMorphism half_braiding_d1(const Permutation& sigma, const DiagramMorphism& e);

/// The candidate half-braiding c = rotation after d1.
DiagramMorphism half_braiding(const Permutation& sigma, const DiagramMorphism& e);

/// Outcome of the center-condition check; every field is an exact symbolic
/// identity in t.
struct CenterCheckReport {
  bool unit_left = false;      ///< c . (e tensor unit) == unit tensor e
  bool unit_right = false;     ///< (counit tensor e) . c == e tensor counit
  bool merge_compat = false;   ///< c2 intertwines e tensor merge with merge tensor e
  bool crossing_compat = false;  ///< c2 intertwines e tensor crossing likewise

  bool passed() const { return unit_left && unit_right && merge_compat && crossing_compat; }
  std::string to_string() const;
};

/// Checks the center conditions for the object cut out by the idempotent
/// e: n -> n with candidate braiding c: n+1 -> n+1. c2 denotes the braiding
/// of the object against two strands, (Id tensor c) . (c tensor Id).
CenterCheckReport check_center(const DiagramMorphism& e, const DiagramMorphism& c);

}  // namespace repst
