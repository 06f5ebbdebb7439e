#include "reachmap/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <map>
#include <unordered_set>

#include "reachmap/errors.hpp"

namespace reachmap {

namespace {

using I128 = __int128;
using Pt = std::array<std::int64_t, 3>;

// Keeps every product in the orientation determinant well inside __int128.
constexpr std::int64_t kMaxCoord = std::int64_t{1} << 30;

Pt sub(const Pt& a, const Pt& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

std::array<I128, 3> cross(const Pt& a, const Pt& b) {
    return {I128(a[1]) * b[2] - I128(a[2]) * b[1],
            I128(a[2]) * b[0] - I128(a[0]) * b[2],
            I128(a[0]) * b[1] - I128(a[1]) * b[0]};
}

bool is_zero(const std::array<I128, 3>& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Sign of det[b-a, c-a, d-a]: positive when d lies on the side of plane (a,b,c)
// pointed to by (b-a) x (c-a).
int orient(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    const Pt u = sub(b, a), v = sub(c, a), w = sub(d, a);
    const I128 det = I128(u[0]) * (I128(v[1]) * w[2] - I128(v[2]) * w[1]) -
                     I128(u[1]) * (I128(v[0]) * w[2] - I128(v[2]) * w[0]) +
                     I128(u[2]) * (I128(v[0]) * w[1] - I128(v[1]) * w[0]);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

bool collinear(const Pt& a, const Pt& b, const Pt& c) {
    return is_zero(cross(sub(b, a), sub(c, a)));
}

// Affine dimension of the point set: 0 point, 1 line, 2 plane, 3 full.
int affine_rank(const std::vector<Pt>& pts) {
    if (pts.size() <= 1) return 0;
    std::size_t i1 = 0;
    while (i1 < pts.size() && pts[i1] == pts[0]) ++i1;
    if (i1 == pts.size()) return 0;
    std::size_t i2 = i1 + 1;
    while (i2 < pts.size() && collinear(pts[0], pts[i1], pts[i2])) ++i2;
    if (i2 == pts.size()) return 1;
    for (std::size_t i3 = i2 + 1; i3 < pts.size(); ++i3)
        if (orient(pts[0], pts[i1], pts[i2], pts[i3]) != 0) return 3;
    return 2;
}

// Interior points of an axis-aligned column are convex combinations of the
// column's two extremes, so they can never be hull vertices. Keeping only the
// per-column extremes along each axis shrinks dense voxel blocks from volume
// to surface size without changing the hull.
std::vector<Pt> column_extremes(const std::vector<Pt>& pts) {
    std::vector<bool> keep(pts.size(), false);
    for (int axis = 0; axis < 3; ++axis) {
        const int a = (axis + 1) % 3, b = (axis + 2) % 3;
        std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::size_t, std::size_t>>
            extremes;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::pair<std::int64_t, std::int64_t> key{pts[i][a], pts[i][b]};
            auto [it, inserted] = extremes.try_emplace(key, i, i);
            if (!inserted) {
                if (pts[i][axis] < pts[it->second.first][axis]) it->second.first = i;
                if (pts[i][axis] > pts[it->second.second][axis]) it->second.second = i;
            }
        }
        for (const auto& [key, mm] : extremes) {
            keep[mm.first] = true;
            keep[mm.second] = true;
        }
    }
    std::vector<Pt> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (keep[i]) out.push_back(pts[i]);
    return out;
}

// Rotates a supporting plane around the (possibly virtual) directed edge
// (u, v) until it first touches the point set, and returns the index of a
// touched point. Points on the edge's line cannot steer the plane and are
// skipped. Single-pass max works because "p strictly outside the candidate
// plane" is exactly "p is hit later in the rotation", a total preorder.
std::size_t pivot(const std::vector<Pt>& pts, const Pt& u, const Pt& v) {
    std::size_t best = pts.size();
    const Pt edge = sub(v, u);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (is_zero(cross(sub(pts[i], u), edge))) continue;
        if (best == pts.size() || orient(v, u, pts[best], pts[i]) > 0) best = i;
    }
    if (best == pts.size())
        throw NumericDegeneracyError("hull pivot found no point off the edge line");
    return best;
}

std::vector<std::size_t> gather_coplanar(const std::vector<Pt>& pts, const Pt& u,
                                         const Pt& v, const Pt& c) {
    std::vector<std::size_t> on_plane;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (orient(v, u, c, pts[i]) == 0) on_plane.push_back(i);
    return on_plane;
}

// 2D convex hull (monotone chain) of the facet's coplanar points, projected
// along the dominant axis of the outward normal. Strict turns drop collinear
// points, so the ring holds only true vertices, ordered CCW seen from outside.
std::vector<std::size_t> facet_ring(const std::vector<Pt>& pts,
                                    const std::vector<std::size_t>& on_plane,
                                    const std::array<I128, 3>& normal) {
    int axis = 0;
    auto mag = [&](int k) { return normal[k] < 0 ? -normal[k] : normal[k]; };
    if (mag(1) > mag(axis)) axis = 1;
    if (mag(2) > mag(axis)) axis = 2;
    const int a = (axis + 1) % 3, b = (axis + 2) % 3;  // right-handed pair

    std::vector<std::size_t> order = on_plane;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return std::pair(pts[l][a], pts[l][b]) < std::pair(pts[r][a], pts[r][b]);
    });
    auto turn = [&](std::size_t o, std::size_t p, std::size_t q) {
        const I128 cr = I128(pts[p][a] - pts[o][a]) * (pts[q][b] - pts[o][b]) -
                        I128(pts[p][b] - pts[o][b]) * (pts[q][a] - pts[o][a]);
        return cr > 0 ? 1 : (cr < 0 ? -1 : 0);
    };

    std::vector<std::size_t> ring;
    for (std::size_t pass = 0; pass < 2; ++pass) {
        const std::size_t base = ring.size();
        for (std::size_t k = 0; k < order.size(); ++k) {
            const std::size_t i = pass == 0 ? k : order.size() - 1 - k;
            while (ring.size() >= base + 2 &&
                   turn(ring[ring.size() - 2], ring.back(), order[i]) <= 0)
                ring.pop_back();
            ring.push_back(order[i]);
        }
        ring.pop_back();  // each chain's last point starts the other chain
    }
    if (normal[axis] < 0) std::reverse(ring.begin(), ring.end());
    return ring;
}

class HullBuilder {
  public:
    explicit HullBuilder(const std::vector<Pt>& pts) : pts_(pts) {}

    Mesh build() {
        emit_facet(initial_facet());
        while (!queue_.empty()) {
            const auto [u, v] = queue_.front();
            queue_.pop_front();
            if (claimed_.count(edge_key(v, u))) continue;  // far facet already built
            const std::size_t c = pivot(pts_, pts_[u], pts_[v]);
            emit_facet(plane_facet(pts_[u], pts_[v], pts_[c]));
        }
        mesh_.convex = true;
        return std::move(mesh_);
    }

    const std::vector<std::size_t>& vertex_points() const { return vertex_points_; }

  private:
    // Ring of the facet lying on the plane spanned by the directed edge
    // (u, v) and point c, oriented CCW around the outward normal
    // (u - v) x (c - v).
    std::vector<std::size_t> plane_facet(const Pt& u, const Pt& v, const Pt& c) {
        const auto normal = cross(sub(u, v), sub(c, v));
        return facet_ring(pts_, gather_coplanar(pts_, u, v, c), normal);
    }

    // Bootstraps without any known facet. The lex-min point p0 is a vertex;
    // the plane x = p0.x supports the set, so rotating it around the vertical
    // line through p0 (a virtual edge) reaches a first supporting plane. If
    // that plane touches only a line of points, the line is a hull edge and
    // one more rotation around it lands on a real facet.
    std::vector<std::size_t> initial_facet() {
        const Pt& p0 = pts_.front();  // points are sorted, lex-min first
        const Pt above{p0[0], p0[1], p0[2] + 1};
        const std::size_t c1 = pivot(pts_, p0, above);
        const auto on_plane = gather_coplanar(pts_, p0, above, pts_[c1]);

        bool planar = false;
        for (const std::size_t i : on_plane)
            planar = planar || !collinear(p0, pts_[c1], pts_[i]);
        if (planar)
            return facet_ring(pts_, on_plane, cross(sub(p0, above), sub(pts_[c1], above)));

        // The supporting plane touched only the hull edge through p0 and c1.
        const Pt dir = sub(pts_[c1], p0);
        auto along = [&](std::size_t i) {
            const Pt d = sub(pts_[i], p0);
            return I128(d[0]) * dir[0] + I128(d[1]) * dir[1] + I128(d[2]) * dir[2];
        };
        std::size_t lo = on_plane.front(), hi = on_plane.front();
        for (const std::size_t i : on_plane) {
            if (along(i) < along(lo)) lo = i;
            if (along(i) > along(hi)) hi = i;
        }
        const std::size_t c2 = pivot(pts_, pts_[lo], pts_[hi]);
        return plane_facet(pts_[lo], pts_[hi], pts_[c2]);
    }

    void emit_facet(const std::vector<std::size_t>& ring) {
        std::vector<int> ids(ring.size());
        for (std::size_t i = 0; i < ring.size(); ++i) ids[i] = vertex_id(ring[i]);
        for (std::size_t i = 1; i + 1 < ring.size(); ++i)
            mesh_.triangles.push_back({ids[0], ids[i], ids[i + 1]});
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const std::size_t s = ring[i], t = ring[(i + 1) % ring.size()];
            if (!claimed_.insert(edge_key(s, t)).second)
                throw NumericDegeneracyError("hull facets produced an inconsistent edge");
            if (!claimed_.count(edge_key(t, s))) queue_.emplace_back(s, t);
        }
    }

    int vertex_id(std::size_t point) {
        auto [it, inserted] = vertex_ids_.try_emplace(point, int(vertex_points_.size()));
        if (inserted) vertex_points_.push_back(point);
        return it->second;
    }

    static std::uint64_t edge_key(std::size_t a, std::size_t b) {
        return (std::uint64_t(a) << 32) | std::uint64_t(b);
    }

    const std::vector<Pt>& pts_;
    Mesh mesh_;
    std::map<std::size_t, int> vertex_ids_;
    std::vector<std::size_t> vertex_points_;
    std::unordered_set<std::uint64_t> claimed_;
    std::deque<std::pair<std::size_t, std::size_t>> queue_;
};

}  // namespace

Mesh hull_of_lattice_points(std::vector<Pt> points, const Eigen::Vector3d& origin,
                            double edge) {
    if (!std::isfinite(edge) || edge <= 0.0)
        throw InvalidArgumentError("hull lattice edge must be positive");
    for (const Pt& p : points)
        for (const std::int64_t c : p)
            if (c < -kMaxCoord || c > kMaxCoord)
                throw InvalidArgumentError("hull lattice coordinate exceeds +/-2^30");

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const int rank = affine_rank(points);
    if (rank < 3)
        throw DegenerateHullError("points span a " + std::to_string(rank) +
                                      "-dimensional set; a hull needs 3",
                                  rank);
    points = column_extremes(points);

    HullBuilder builder(points);
    Mesh mesh = builder.build();
    mesh.vertices.reserve(builder.vertex_points().size());
    for (const std::size_t i : builder.vertex_points()) {
        const Pt& p = points[i];
        mesh.vertices.emplace_back(origin.x() + edge * double(p[0]),
                                   origin.y() + edge * double(p[1]),
                                   origin.z() + edge * double(p[2]));
    }
    return mesh;
}

Mesh extract_hull(const CapabilityMap& map, double band_lo, double band_hi) {
    if (!std::isfinite(band_lo) || !std::isfinite(band_hi) || band_lo < 0.0 ||
        band_lo > band_hi)
        throw InvalidArgumentError("score band must satisfy 0 <= lo <= hi");
    map.grid.validate();
    const int n_dir = map.meta.params.n_dir;
    if (n_dir <= 0) throw InvalidArgumentError("map metadata has no direction count");

    // Scores are small integer ratios; the slack only absorbs representation
    // error in user-typed bounds like 0.3.
    constexpr double kSlack = 1e-12;
    std::vector<Pt> corners;
    for (const MapEntry& e : map.entries) {
        const double score = double(e.numerator) / double(n_dir);
        if (score < band_lo - kSlack || score > band_hi + kSlack) continue;
        const auto [i, j, k] = map.grid.coords_of(e.voxel);
        for (int di = 0; di <= 1; ++di)
            for (int dj = 0; dj <= 1; ++dj)
                for (int dk = 0; dk <= 1; ++dk)
                    corners.push_back({i + di, j + dj, k + dk});
    }
    if (corners.empty()) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "score band [%g, %g] selects no voxels", band_lo,
                      band_hi);
        throw EmptySelectionError(msg);
    }
    return hull_of_lattice_points(std::move(corners), map.grid.origin,
                                  map.grid.voxel_edge);
}

void write_obj(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << "# convex hull export\n"
        << "# torso frame: origin at the right shoulder, X right, Y anterior, "
           "Z superior, meters\n";
    out.precision(17);
    for (const auto& v : mesh.vertices)
        out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
    for (const auto& t : mesh.triangles)
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace reachmap
