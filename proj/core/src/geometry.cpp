#include "c4book/geometry.hpp"

#include "c4book/error.hpp"

namespace c4book::geometry {

namespace {

using Index = std::uint32_t;
using Triple = std::array<Index, 3>;

Triple triple_of(std::uint64_t q, std::size_t i) {
  const std::uint64_t qq = q * q;
  if (i < qq) return {1, static_cast<Index>(i / q), static_cast<Index>(i % q)};
  if (i < qq + q) return {0, 1, static_cast<Index>(i - qq)};
  return {0, 0, 1};
}

std::size_t index_of(std::uint64_t q, const Triple& t) {
  if (t[0] == 1) return t[1] * q + t[2];
  if (t[1] == 1) return q * q + t[2];
  return q * q + q;
}

Index dot(const gf::Tables& tb, const Triple& a, const Triple& b) {
  return tb.plus(tb.plus(tb.times(a[0], b[0]), tb.times(a[1], b[1])), tb.times(a[2], b[2]));
}

// Normalized points x with a . x = 0, i.e. the polar line of a.
template <class F>
void for_each_on_polar(const gf::Tables& tb, const Triple& a, F&& emit) {
  const std::uint64_t q = tb.q;
  const Index a1 = a[0], a2 = a[1], a3 = a[2];
  // x = (1, x2, x3): a1 + a2 x2 + a3 x3 = 0
  if (a3 != 0) {
    const Index inv3 = tb.inv[a3];
    for (Index x2 = 0; x2 < q; ++x2) {
      const Index lhs = tb.plus(a1, tb.times(a2, x2));
      emit(Triple{1, x2, tb.times(tb.neg[lhs], inv3)});
    }
  } else if (a2 != 0) {
    const Index x2 = tb.times(tb.neg[a1], tb.inv[a2]);
    for (Index x3 = 0; x3 < q; ++x3) emit(Triple{1, x2, x3});
  }
  // x = (0, 1, x3): a2 + a3 x3 = 0
  if (a3 != 0) {
    emit(Triple{0, 1, tb.times(tb.neg[a2], tb.inv[a3])});
  } else if (a2 == 0) {
    for (Index x3 = 0; x3 < q; ++x3) emit(Triple{0, 1, x3});
  }
  // x = (0, 0, 1): a3 = 0
  if (a3 == 0) emit(Triple{0, 0, 1});
}

void check_order(const gf::Field& field) {
  if (field.q() > kMaxPolarityOrder) {
    throw Error(Errc::CapExceeded, "polarity graph limited to q <= " + std::to_string(kMaxPolarityOrder));
  }
}

std::vector<Vertex> absolute_from_tables(const gf::Tables& tb) {
  const std::uint64_t q = tb.q;
  const std::size_t n = q * q + q + 1;
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Triple t = triple_of(q, i);
    if (dot(tb, t, t) == 0) out.push_back(i);
  }
  if (out.size() != q + 1) {
    throw Error(Errc::InternalInconsistency,
                "expected q+1 absolute points, found " + std::to_string(out.size()));
  }
  return out;
}

}  // namespace

ProjPoint ProjPoint::normalized(gf::FieldElement x1, gf::FieldElement x2, gf::FieldElement x3) {
  std::array<gf::FieldElement, 3> c{std::move(x1), std::move(x2), std::move(x3)};
  for (const auto& lead : c) {
    if (lead.is_zero()) continue;
    const gf::FieldElement scale = inv(lead);
    for (auto& x : c) x = x * scale;
    return ProjPoint{std::move(c)};
  }
  throw Error(Errc::DomainError, "the zero triple is not a projective point");
}

std::vector<ProjPoint> projective_points(const gf::Field& field) {
  const auto elems = field.elements();
  const auto zero = field.zero();
  const auto one = field.one();
  std::vector<ProjPoint> out;
  out.reserve(field.q() * field.q() + field.q() + 1);
  for (const auto& a : elems)
    for (const auto& b : elems) out.push_back(ProjPoint{{one, a, b}});
  for (const auto& b : elems) out.push_back(ProjPoint{{zero, one, b}});
  out.push_back(ProjPoint{{zero, zero, one}});
  return out;
}

std::size_t point_index(const gf::Field& field, const ProjPoint& point) {
  const Triple t{static_cast<Index>(point.coords[0].index()), static_cast<Index>(point.coords[1].index()),
                 static_cast<Index>(point.coords[2].index())};
  if (t[0] > 1 || (t[0] == 0 && t[1] > 1) || (t[0] == 0 && t[1] == 0 && t[2] != 1)) {
    throw Error(Errc::DomainError, "point is not normalized");
  }
  return index_of(field.q(), t);
}

Graph er_graph(const gf::Field& field) {
  check_order(field);
  const gf::Tables tb = gf::make_tables(field);
  const std::uint64_t q = tb.q;
  const std::size_t n = q * q + q + 1;
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Triple a = triple_of(q, i);
    for_each_on_polar(tb, a, [&](const Triple& x) {
      const std::size_t j = index_of(q, x);
      if (j > i) g.add_edge(i, j);
    });
  }

  const auto absolute = absolute_from_tables(tb);
  std::vector<bool> is_absolute(n, false);
  for (Vertex v : absolute) is_absolute[v] = true;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t expected = is_absolute[v] ? q : q + 1;
    if (g.degree(v) != expected) {
      throw Error(Errc::InternalInconsistency, "vertex " + std::to_string(v) + " has degree " +
                                                   std::to_string(g.degree(v)) + ", expected " +
                                                   std::to_string(expected));
    }
  }
  return g;
}

std::vector<Vertex> absolute_points(const gf::Field& field) {
  check_order(field);
  return absolute_from_tables(gf::make_tables(field));
}

}  // namespace c4book::geometry
