#pragma once

// Exact convex hull by the double description method. Points are lifted to
// (1, y) in the affine hull's coordinates, and the extreme rays of the cone of
// valid inequalities are maintained while the points are added one by one.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ehrkit/errors.hpp"
#include "ehrkit/matrix.hpp"
#include "ehrkit/rational.hpp"

namespace ehrkit {

/// a . x <= offset (or = offset for equalities); normal is a primitive integer vector.
struct Inequality {
    IntVector normal;
    Rational offset;

    friend bool operator==(const Inequality&, const Inequality&) = default;
};

namespace detail {

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }
    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    IntVector h;   // h . w >= 0 for every processed lifted point w
    Bitset tight;  // processed points with h . w == 0
};

inline IntVector make_primitive_ray(IntVector v) { return primitive(std::move(v)); }

inline std::size_t rank_of_rows(const std::vector<IntVector>& w, const Bitset& rows, std::size_t n,
                                std::size_t width) {
    std::vector<IntVector> sel;
    for (std::size_t i = 0; i < n; ++i)
        if (rows.test(i)) sel.push_back(w[i]);
    return rank_of(sel, width);
}

/// Facets of conv(w) for lifted integer points w_i = (s_i, s_i * y_i), s_i > 0,
/// assumed to span R^{m+1}. Each returned ray h satisfies h . w_i >= 0.
inline std::vector<Ray> double_description(const std::vector<IntVector>& w, std::size_t m) {
    const std::size_t n = w.size(), width = m + 1;
    // Greedy choice of m+1 affinely independent points.
    std::vector<std::size_t> basis;
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < n && basis.size() < width; ++i) {
        chosen.push_back(w[i]);
        if (rank_of(chosen, width) == chosen.size()) basis.push_back(i);
        else chosen.pop_back();
    }
    if (basis.size() != width) throw Error("hull input is not full-dimensional in its affine hull");

    RatMatrix aug(width, 2 * width);
    for (std::size_t i = 0; i < width; ++i) {
        for (std::size_t j = 0; j < width; ++j) aug(i, j) = w[basis[i]][j];
        aug(i, width + i) = 1;
    }
    auto inv = row_echelon(aug).reduced;
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < width; ++j) {
        RatVector col(width);
        for (std::size_t i = 0; i < width; ++i) col[i] = inv(i, width + j);
        Ray r{primitive_multiple(col), Bitset(n)};
        for (std::size_t i = 0; i < width; ++i)
            if (i != j) r.tight.set(basis[i]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> in_basis(n, false);
    for (auto b : basis) in_basis[b] = true;

    for (std::size_t idx = 0; idx < n; ++idx) {
        if (in_basis[idx]) continue;
        std::vector<Integer> s(rays.size());
        bool any_negative = false;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            s[r] = dot(rays[r].h, w[idx]);
            any_negative = any_negative || s[r] < 0;
        }
        if (!any_negative) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (s[r] == 0) rays[r].tight.set(idx);
            continue;
        }
        std::vector<Ray> next;
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (s[r] > 0) pos.push_back(r);
            else if (s[r] < 0) neg.push_back(r);
            else {
                Ray kept = rays[r];
                kept.tight.set(idx);
                next.push_back(std::move(kept));
            }
        }
        for (auto p : pos) next.push_back(rays[p]);
        for (auto p : pos)
            for (auto q : neg) {
                Bitset common = rays[p].tight & rays[q].tight;
                if (m >= 1 && common.count() + 1 < m) continue;
                if (rank_of_rows(w, common, n, width) + 1 != m) continue;
                IntVector h(width);
                for (std::size_t j = 0; j < width; ++j) h[j] = s[p] * rays[q].h[j] - s[q] * rays[p].h[j];
                Ray nr{make_primitive_ray(std::move(h)), common};
                nr.tight.set(idx);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
    }
    return rays;
}

} // namespace detail

/// Convex hull of a finite point set in Q^d, in canonical form.
struct HullData {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    std::vector<RatVector> vertices;                  // sorted lexicographically
    std::vector<Inequality> inequalities;             // sorted by normal
    std::vector<std::vector<std::size_t>> incidence;  // vertices on each inequality's facet
    std::vector<Inequality> equalities;               // describe aff(P) when dim < d
};

inline HullData convex_hull(std::vector<RatVector> points) {
    if (points.empty()) throw Error("convex hull of an empty point set");
    const std::size_t d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d) throw DimensionMismatch("points of different dimension");
    std::sort(points.begin(), points.end(), lex_less<Rational>);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    HullData out;
    out.ambient_dim = d;
    const RatVector& p0 = points.front();
    RatMatrix diffs(points.size() - 1, d);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) diffs(i - 1, j) = points[i][j] - p0[j];
    auto ech = row_echelon(diffs);
    const std::size_t m = ech.rank();
    out.dim = m;

    for (auto a : integer_nullspace_basis(diffs)) {
        auto first = std::find_if(a.begin(), a.end(), [](const Integer& z) { return z != 0; });
        if (first != a.end() && *first < 0)
            for (auto& z : a) z = -z;
        Rational b = dot(a, p0);
        out.equalities.push_back({std::move(a), b});
    }
    std::sort(out.equalities.begin(), out.equalities.end(),
              [](const Inequality& x, const Inequality& y) { return lex_less(x.normal, y.normal); });

    if (m == 0) {
        out.vertices = {p0};
        return out;
    }

    const auto& cols = ech.pivot_columns;
    std::vector<IntVector> lifted;
    lifted.reserve(points.size());
    for (const auto& p : points) {
        RatVector y(m);
        for (std::size_t j = 0; j < m; ++j) y[j] = p[cols[j]];
        Integer s = den(y);
        IntVector w(m + 1);
        w[0] = s;
        for (std::size_t j = 0; j < m; ++j) {
            Rational v = y[j] * s;
            w[j + 1] = v.get_num();
        }
        lifted.push_back(std::move(w));
    }
    auto rays = detail::double_description(lifted, m);

    // Vertices: points pinned down by the facets through them.
    const std::size_t n = points.size();
    std::vector<std::size_t> vertex_of(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        detail::Bitset meet(n);
        bool first = true;
        for (const auto& r : rays) {
            if (!r.tight.test(i)) continue;
            meet = first ? r.tight : (meet & r.tight);
            first = false;
        }
        if (!first && meet.count() == 1) {
            vertex_of[i] = out.vertices.size();
            out.vertices.push_back(points[i]);
        }
    }

    // Projector onto aff_0(P), used to canonicalize facet normals.
    RatMatrix basis(m, d);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < d; ++j) basis(i, j) = ech.reduced(i, j);
    RatMatrix gram = basis * basis.transposed();
    RatMatrix gram_inv = left_inverse(gram);

    struct Entry {
        Inequality ineq;
        std::vector<std::size_t> verts;
    };
    std::vector<Entry> facets;
    for (const auto& r : rays) {
        // h . (1, y) >= 0  <=>  -h' . y <= h0
        RatVector a(d);
        for (std::size_t j = 0; j < m; ++j) a[cols[j]] = -r.h[j + 1];
        Rational beta = r.h[0];
        RatVector coords = basis * a;
        RatVector proj = basis.transposed() * (gram_inv * coords);
        beta -= dot(a - proj, p0);
        IntVector normal = primitive_multiple(proj);
        std::size_t nz = 0;
        while (proj[nz] == 0) ++nz;
        Rational scale = Rational(normal[nz]) / proj[nz];
        Entry e{{std::move(normal), beta * scale}, {}};
        for (std::size_t i = 0; i < n; ++i)
            if (r.tight.test(i) && vertex_of[i] != n) e.verts.push_back(vertex_of[i]);
        facets.push_back(std::move(e));
    }
    std::sort(facets.begin(), facets.end(),
              [](const Entry& x, const Entry& y) { return lex_less(x.ineq.normal, y.ineq.normal); });
    for (auto& f : facets) {
        out.inequalities.push_back(std::move(f.ineq));
        out.incidence.push_back(std::move(f.verts));
    }
    return out;
}

} // namespace ehrkit
