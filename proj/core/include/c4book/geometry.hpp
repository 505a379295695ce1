#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "c4book/gf.hpp"
#include "c4book/graph.hpp"

namespace c4book::geometry {

/// Largest q for which the polarity graph is materialized (dense adjacency).
inline constexpr std::uint64_t kMaxPolarityOrder = 256;

/// Symmetric bilinear form defining orthogonality; recorded in certificates.
inline constexpr std::string_view kBilinearForm = "x1*y1+x2*y2+x3*y3";

/// Point of PG(2, q): a homogeneous triple whose first nonzero coordinate is 1.
struct ProjPoint {
  std::array<gf::FieldElement, 3> coords;

  /// Scales a nonzero triple to its normalized representative;
  /// DomainError for the zero triple.
  static ProjPoint normalized(gf::FieldElement x1, gf::FieldElement x2, gf::FieldElement x3);

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) = default;
};

/// All q^2+q+1 normalized points: (1, a, b) for a, b in element order, then
/// (0, 1, b), then (0, 0, 1).
std::vector<ProjPoint> projective_points(const gf::Field& field);

/// Position of a normalized point in projective_points(field).
std::size_t point_index(const gf::Field& field, const ProjPoint& point);

/// Orthogonal polarity graph ER_q: distinct points adjacent iff orthogonal
/// under kBilinearForm. The degree dichotomy (q for absolute points, q+1
/// otherwise) and |absolute points| = q+1 are checked on every build;
/// InternalInconsistency if either fails. CapExceeded past kMaxPolarityOrder.
Graph er_graph(const gf::Field& field);

/// Indices of self-orthogonal points (u.u = 0), ascending. The count is
/// verified to be q+1.
std::vector<Vertex> absolute_points(const gf::Field& field);

}  // namespace c4book::geometry
