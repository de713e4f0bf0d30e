// Copyright 2026 The pancyc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PANCYC_CYCLE_GEOMETRY_HPP_
#define PANCYC_CYCLE_GEOMETRY_HPP_

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pancyc/certificate.hpp"
#include "pancyc/graph.hpp"

namespace pancyc {

// ||k|| on Z_n: the shorter way around.
int circ_distance(long long k, int n);

// (x + y) mod n.
int direction_of(const Edge& e, int n);

// max(1, floor(frac * n)), with a tiny guard so 0.1 * 50 lands on 5.
int scaled_length(double frac, int n);

// All chords {x, y} with x + y = i (mod n), ordered outward from the point
// i/2 on the circle. Loops are skipped. Equal distances never occur, so the
// order is total without a tie rule.
struct DirectionSlice {
  int n = 0;
  int i = 0;
  std::vector<Edge> ordered_edges;

  int size() const { return static_cast<int>(ordered_edges.size()); }

  // The window starting at the k-th smallest edge (k >= 1), `len` long,
  // clamped to the end of the slice.
  std::span<const Edge> window(int k, int len) const;
  // The slice minus `len` edges at each end; empty if nothing is left.
  std::span<const Edge> middle(int len) const;
};

DirectionSlice direction_slice(int n, int i);

// 0-based position of e inside direction_slice(n, direction_of(e, n)).
int rank_in_direction(const Edge& e, int n);

// Endpoints are four distinct points that alternate around the circle.
bool is_crossing(const Edge& e1, const Edge& e2, int n);

// Crossing, and some endpoint of e1 lies within scaled_length(beta, n) of an
// endpoint of e2.
bool is_close_crossing(const Edge& e1, const Edge& e2, int n, double beta);

enum class ShortcutVariant { I, II };

struct Shortcut {
  ShortcutVariant variant = ShortcutVariant::I;
  Vertex i1 = 0;
  Vertex i2 = 0;
  Vertex i3 = 0;
  Vertex i4 = 0;
  int l = 0;

  // The eight points in the clockwise order the variant demands.
  std::array<Vertex, 8> points(int n) const;
  // {i1,i3}, {i1+1,i4}, {i2,i4+l+1}, {i2+1,i3+1}.
  std::array<Edge, 4> edges(int n) const;

  friend bool operator==(const Shortcut&, const Shortcut&) = default;
};

bool validate_shortcut(const Shortcut& s, int n);

// The (l+8)-cycle and the (n-l)-cycle living in C_n plus the four chords.
// Throws std::invalid_argument for an invalid shortcut.
std::pair<CycleCertificate, CycleCertificate> cycles_from_shortcut(const Shortcut& s, int n);

struct CrossingPair {
  Edge e1;
  Edge e2;
  int i = 0;  // direction of e1
  int l = 0;  // e2 lies in direction i + l
  bool close = false;
};

// Fills i, l and close (for the given beta) from the two chords.
CrossingPair make_crossing_pair(const Edge& e1, const Edge& e2, int n, double beta);

// The (l+2)-cycle and the (n-l+2)-cycle of C_n plus e1, e2.
// Throws std::invalid_argument if the chords do not cross or l disagrees.
std::pair<CycleCertificate, CycleCertificate> cycles_from_crossing(const CrossingPair& cp, int n);

// Edges of direction dir that form a close crossing with e, by slice rank.
std::vector<int> close_crossing_ranks(const Edge& e, int dir, int n, double beta);

// Smallest-start pair of windows (1-based, length len) covering every rank,
// or nothing if two windows are not enough.
std::optional<std::pair<int, int>> covering_windows(std::vector<int> ranks, int len);

}  // namespace pancyc

#endif  // PANCYC_CYCLE_GEOMETRY_HPP_
