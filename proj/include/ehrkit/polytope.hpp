#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "ehrkit/errors.hpp"
#include "ehrkit/hull.hpp"
#include "ehrkit/matrix.hpp"
#include "ehrkit/normal_form.hpp"
#include "ehrkit/rational.hpp"

namespace ehrkit {

/// Facet inequalities (and, below full dimension, the equalities of the affine hull).
struct HRep {
    std::size_t ambient_dim = 0;
    std::vector<Inequality> inequalities;
    std::vector<Inequality> equalities;
};

/// A face, given by the indices of the polytope vertices it contains.
struct Face {
    std::vector<std::size_t> vertex_indices;
    std::size_t dim = 0;

    friend bool operator==(const Face&, const Face&) = default;
};

namespace detail {

inline RatVector as_rational(const IntVector& v) { return to_rational(v); }
inline RatVector as_rational(const RatVector& v) { return v; }

inline IntVector as_integer(const RatVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integral(v[i])) throw Error("non-integral vertex in a lattice polytope");
        r[i] = v[i].get_num();
    }
    return r;
}

template <class Scalar>
std::vector<Scalar> convert_point(const RatVector& v) {
    if constexpr (std::is_same_v<Scalar, Integer>) return as_integer(v);
    else return v;
}

} // namespace detail

/// Convex hull of finitely many points of Z^d (Scalar = Integer) or Q^d
/// (Scalar = Rational). Non-vertices in the input are dropped; the stored
/// vertex list is irredundant and sorted lexicographically.
template <class Scalar>
class Polytope {
public:
    using Point = std::vector<Scalar>;

    explicit Polytope(const std::vector<Point>& points) {
        if (points.empty()) throw Error("a polytope needs at least one point");
        std::vector<RatVector> rat;
        rat.reserve(points.size());
        for (const auto& p : points) rat.push_back(detail::as_rational(p));
        auto hull = convex_hull(std::move(rat));
        for (const auto& v : hull.vertices) vertices_.push_back(detail::convert_point<Scalar>(v));
        data_ = std::make_shared<const HullData>(std::move(hull));
    }

    std::size_t ambient_dim() const { return data_->ambient_dim; }
    std::size_t dim() const { return data_->dim; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<RatVector>& rational_vertices() const { return data_->vertices; }

    HRep hrep() const { return HRep{data_->ambient_dim, data_->inequalities, data_->equalities}; }
    const std::vector<Inequality>& inequalities() const { return data_->inequalities; }
    const std::vector<Inequality>& equalities() const { return data_->equalities; }
    /// Vertex indices on the i-th facet (same order as inequalities()).
    const std::vector<std::size_t>& facet_vertices(std::size_t i) const { return data_->incidence[i]; }

    Polytope sub_polytope(const std::vector<std::size_t>& indices) const {
        std::vector<Point> pts;
        for (auto i : indices) pts.push_back(vertices_.at(i));
        return Polytope(pts);
    }

    /// Componentwise bounds of the vertex coordinates.
    std::pair<RatVector, RatVector> bounding_box() const {
        RatVector lo = data_->vertices.front(), hi = lo;
        for (const auto& v : data_->vertices)
            for (std::size_t j = 0; j < v.size(); ++j) {
                lo[j] = std::min(lo[j], v[j]);
                hi[j] = std::max(hi[j], v[j]);
            }
        return {lo, hi};
    }

private:
    std::vector<Point> vertices_;
    std::shared_ptr<const HullData> data_;
};

using LatticePolytope = Polytope<Integer>;
using RationalPolytope = Polytope<Rational>;

/// A lattice polytope translated by a rational vector.
struct AlmostIntegralPolytope {
    LatticePolytope base;
    RatVector translate;

    AlmostIntegralPolytope(LatticePolytope p, RatVector c) : base(std::move(p)), translate(std::move(c)) {
        if (translate.size() != base.ambient_dim())
            throw DimensionMismatch("translation vector length differs from the ambient dimension");
    }

    Integer denominator() const { return den(translate); }

    std::vector<RatVector> translated_vertices() const {
        std::vector<RatVector> out;
        for (const auto& v : base.vertices()) out.push_back(translate + v);
        return out;
    }
};

/// aff(P) as origin + span(lattice_basis), where lattice_basis is a basis of aff_0(P) ∩ Z^d.
struct AffineHull {
    std::size_t dim = 0;
    RatVector origin;
    std::vector<IntVector> lattice_basis;
};

template <class Scalar>
AffineHull affine_hull(const Polytope<Scalar>& p) {
    const auto& verts = p.rational_vertices();
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < verts.size(); ++i) diffs.push_back(primitive_multiple(verts[i] - verts[0]));
    return AffineHull{p.dim(), verts[0], saturated_lattice_basis(diffs, p.ambient_dim())};
}

template <class Scalar>
std::size_t affine_dimension(const Polytope<Scalar>& p, const std::vector<std::size_t>& indices) {
    if (indices.size() <= 1) return 0;
    const auto& v = p.rational_vertices();
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < indices.size(); ++i) diffs.push_back(v[indices[i]] - v[indices[0]]);
    return rank_of(diffs, p.ambient_dim());
}

/// All faces grouped by dimension: result[k] holds the k-faces, result[dim P] = {P}.
template <class Scalar>
std::vector<std::vector<Face>> face_lattice(const Polytope<Scalar>& p) {
    const std::size_t m = p.dim();
    std::vector<std::vector<Face>> levels(m + 1);
    std::vector<std::size_t> all(p.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    levels[m].push_back(Face{all, m});
    if (m == 0) return levels;
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t i = 0; i < p.inequalities().size(); ++i) facets.push_back(p.facet_vertices(i));
    for (const auto& f : facets) levels[m - 1].push_back(Face{f, m - 1});
    for (std::size_t k = m - 1; k >= 1; --k) {
        std::set<std::vector<std::size_t>> seen;
        for (const auto& face : levels[k])
            for (const auto& g : facets) {
                std::vector<std::size_t> meet;
                std::set_intersection(face.vertex_indices.begin(), face.vertex_indices.end(), g.begin(), g.end(),
                                      std::back_inserter(meet));
                if (meet.empty() || meet.size() == face.vertex_indices.size()) continue;
                if (seen.count(meet)) continue;
                if (affine_dimension(p, meet) != k - 1) continue;
                seen.insert(meet);
            }
        for (const auto& s : seen) levels[k - 1].push_back(Face{s, k - 1});
    }
    return levels;
}

template <class Scalar>
std::vector<Face> faces_of_dim(const Polytope<Scalar>& p, std::size_t j) {
    if (j > p.dim()) throw Error("face dimension exceeds the polytope dimension");
    return face_lattice(p)[j];
}

namespace detail {

// Pulling triangulation: cone from the smallest vertex of a face over the
// facets of that face not containing it.
inline void pull_triangulate(const std::vector<std::vector<Face>>& levels, const Face& face,
                             std::vector<std::size_t>& apexes, std::vector<std::vector<std::size_t>>& out) {
    if (face.dim == 0) {
        auto simplex = apexes;
        simplex.push_back(face.vertex_indices.front());
        out.push_back(std::move(simplex));
        return;
    }
    std::size_t v0 = face.vertex_indices.front();
    apexes.push_back(v0);
    for (const auto& g : levels[face.dim - 1]) {
        if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), v0)) continue;
        if (!std::includes(face.vertex_indices.begin(), face.vertex_indices.end(), g.vertex_indices.begin(),
                           g.vertex_indices.end()))
            continue;
        pull_triangulate(levels, g, apexes, out);
    }
    apexes.pop_back();
}

} // namespace detail

/// Simplices (vertex index lists of length dim+1) of a triangulation using only vertices.
template <class Scalar>
std::vector<std::vector<std::size_t>> triangulate(const Polytope<Scalar>& p) {
    auto levels = face_lattice(p);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> apexes;
    detail::pull_triangulate(levels, levels[p.dim()].front(), apexes, out);
    return out;
}

/// Volume normalized so that a fundamental cell of aff(P) ∩ Z^d has volume 1.
/// A single point has relative volume 1.
inline Rational relative_volume(const LatticePolytope& p) {
    const std::size_t m = p.dim();
    if (m == 0) return 1;
    auto hull = affine_hull(p);
    RatMatrix basis = to_rational(IntMatrix::from_columns(p.ambient_dim(), hull.lattice_basis));
    RatMatrix to_lattice = left_inverse(basis);
    std::vector<IntVector> coords;
    for (const auto& v : p.rational_vertices()) coords.push_back(detail::as_integer(to_lattice * (v - hull.origin)));
    Integer total = 0;
    for (const auto& s : triangulate(p)) {
        IntMatrix e(m, m);
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = 0; j < m; ++j) e(i - 1, j) = coords[s[i]][j] - coords[s[0]][j];
        total += abs(determinant(e));
    }
    Integer fact = 1;
    for (std::size_t i = 2; i <= m; ++i) fact *= static_cast<unsigned long>(i);
    return make_rational(total, fact);
}

/// The vector c with P = c + (-P) if the vertex set is centrally symmetric.
/// The center of P is c / 2.
template <class Scalar>
std::optional<RatVector> is_centrally_symmetric(const Polytope<Scalar>& p) {
    const auto& verts = p.rational_vertices();
    RatVector sum(p.ambient_dim());
    for (const auto& v : verts) sum = sum + v;
    RatVector c = scaled(sum, make_rational(2, static_cast<unsigned long>(verts.size())));
    for (const auto& v : verts)
        if (!std::binary_search(verts.begin(), verts.end(), c - v, lex_less<Rational>)) return std::nullopt;
    return c;
}

/// A facet that has no parallel opposite facet, or one of a different relative volume.
struct FacetViolation {
    std::size_t facet;
    std::optional<std::size_t> partner;
    Rational volume;
    Rational partner_volume;
};

/// Pairs every facet with the facet of opposite outer normal and compares
/// relative volumes. Empty iff P is centrally symmetric.
inline std::vector<FacetViolation> minkowski_facet_check(const LatticePolytope& p) {
    if (p.dim() < 1) throw Error("facet check needs a polytope of dimension >= 1");
    const auto& ineqs = p.inequalities();
    std::map<IntVector, std::size_t> by_normal;
    for (std::size_t i = 0; i < ineqs.size(); ++i) by_normal[ineqs[i].normal] = i;
    std::vector<Rational> vol(ineqs.size());
    for (std::size_t i = 0; i < ineqs.size(); ++i) vol[i] = relative_volume(p.sub_polytope(p.facet_vertices(i)));
    std::vector<FacetViolation> out;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        auto it = by_normal.find(-ineqs[i].normal);
        if (it == by_normal.end()) {
            out.push_back({i, std::nullopt, vol[i], Rational(0)});
        } else if (vol[i] != vol[it->second]) {
            out.push_back({i, it->second, vol[i], vol[it->second]});
        }
    }
    return out;
}

struct ZonotopeTest {
    bool is_zonotope = false;
    std::optional<Face> asymmetric_face;  // a 2-face that is not centrally symmetric
};

/// Zonotope recognition: every 2-face centrally symmetric (P itself when dim P = 2).
inline ZonotopeTest is_zonotope(const LatticePolytope& p) {
    if (p.dim() <= 1) return {true, std::nullopt};
    if (p.dim() == 2) {
        if (is_centrally_symmetric(p)) return {true, std::nullopt};
        return {false, face_lattice(p)[2].front()};
    }
    for (const auto& f : faces_of_dim(p, 2))
        if (!is_centrally_symmetric(p.sub_polytope(f.vertex_indices))) return {false, f};
    return {true, std::nullopt};
}

} // namespace ehrkit
