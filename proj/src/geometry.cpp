#include "regrasp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace regrasp {

Transform euler_to_transform(const Vec3& p, const Vec3& r) {
    const double sx = std::sin(r.x()), cx = std::cos(r.x());
    const double sy = std::sin(r.y()), cy = std::cos(r.y());
    const double sz = std::sin(r.z()), cz = std::cos(r.z());
    Mat3 R;
    R << cy * cz, -cy * sz, sy,
         sx * sy * cz + cx * sz, -sx * sy * sz + cx * cz, -sx * cy,
         -cx * sy * cz + sx * sz, cx * sy * sz + sx * cz, cx * cy;
    return {R, p};
}

double rotation_distance(const Mat3& a, const Mat3& b) {
    const double tr = (a.transpose() * b).trace();
    const double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
    return std::acos(c);
}

bool is_rotation(const Mat3& R, double tol) {
    if (!((R * R.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol)) return false;
    return std::abs(R.determinant() - 1.0) <= tol;
}

Mat3 rotation_between(const Vec3& from, const Vec3& to) {
    const Vec3 f = from.normalized(), t = to.normalized();
    const double c = f.dot(t);
    if (c > 1.0 - 1e-12) return Mat3::Identity();
    if (c < -1.0 + 1e-12) {
        // pick the coordinate axis least aligned with f as rotation axis
        int k = 0;
        f.cwiseAbs().minCoeff(&k);
        Vec3 axis = Vec3::Unit(k) - f * f(k);
        return Eigen::AngleAxisd(M_PI, axis.normalized()).toRotationMatrix();
    }
    const Vec3 axis = f.cross(t).normalized();
    return Eigen::AngleAxisd(std::acos(std::clamp(c, -1.0, 1.0)), axis).toRotationMatrix();
}

Vec3 TriMesh::face_normal(int f) const {
    const auto& tri = faces[f];
    const Vec3 e1 = vertices[tri[1]] - vertices[tri[0]];
    const Vec3 e2 = vertices[tri[2]] - vertices[tri[0]];
    return e1.cross(e2).normalized();
}

double TriMesh::face_area(int f) const {
    const auto& tri = faces[f];
    const Vec3 e1 = vertices[tri[1]] - vertices[tri[0]];
    const Vec3 e2 = vertices[tri[2]] - vertices[tri[0]];
    return 0.5 * e1.cross(e2).norm();
}

Vec3 TriMesh::aabb_min() const {
    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    for (const auto& v : vertices) lo = lo.cwiseMin(v);
    return lo;
}

Vec3 TriMesh::aabb_max() const {
    Vec3 hi = Vec3::Constant(-std::numeric_limits<double>::infinity());
    for (const auto& v : vertices) hi = hi.cwiseMax(v);
    return hi;
}

double mesh_volume(const TriMesh& m) {
    double vol = 0.0;
    for (const auto& f : m.faces) {
        const Vec3& a = m.vertices[f[0]];
        const Vec3& b = m.vertices[f[1]];
        const Vec3& c = m.vertices[f[2]];
        vol += a.dot(b.cross(c)) / 6.0;
    }
    return vol;
}

Vec3 mesh_volume_centroid(const TriMesh& m) {
    double vol = 0.0;
    Vec3 c = Vec3::Zero();
    for (const auto& f : m.faces) {
        const Vec3& a = m.vertices[f[0]];
        const Vec3& b = m.vertices[f[1]];
        const Vec3& d = m.vertices[f[2]];
        const double v = a.dot(b.cross(d)) / 6.0;
        vol += v;
        c += v * (a + b + d) / 4.0;
    }
    if (std::abs(vol) < 1e-15) throw DegenerateGeometry("mesh has no volume");
    return c / vol;
}

TriMesh clean_mesh(TriMesh m, bool auto_com) {
    const int n = static_cast<int>(m.vertices.size());
    for (const auto& v : m.vertices) {
        if (!v.allFinite()) throw MeshError("mesh contains non-finite vertex");
    }
    std::vector<std::array<int, 3>> kept;
    kept.reserve(m.faces.size());
    for (const auto& f : m.faces) {
        for (int idx : f) {
            if (idx < 0 || idx >= n) throw MeshError("face index out of range");
        }
        const Vec3 e1 = m.vertices[f[1]] - m.vertices[f[0]];
        const Vec3 e2 = m.vertices[f[2]] - m.vertices[f[0]];
        if (e1.cross(e2).norm() <= 1e-14) continue;  // degenerate face
        kept.push_back(f);
    }
    m.faces = std::move(kept);
    if (m.faces.empty()) throw MeshError("mesh has no non-degenerate faces");
    if (auto_com) {
        m.com = mesh_volume_centroid(m);
    }
    if (!m.com.allFinite()) throw MeshError("mesh com is non-finite");
    const Vec3 lo = m.aabb_min(), hi = m.aabb_max();
    if ((m.com.array() < lo.array() - 1e-12).any() || (m.com.array() > hi.array() + 1e-12).any()) {
        throw MeshError("mesh com outside bounding box");
    }
    return m;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MeshError("cannot open mesh file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string lowercase_ext(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
    return ext;
}

}  // namespace

TriMesh load_mesh(const std::string& path) {
    const std::string ext = lowercase_ext(path);
    const std::string text = read_file(path);
    if (ext == "off") return parse_off(text, path);
    if (ext == "stl") return parse_stl_ascii(text, path);
    throw MeshError("unsupported mesh format (want .off or .stl): " + path);
}

TriMesh parse_off(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "OFF") throw MeshError(name + ": missing OFF header");
    size_t nv = 0, nf = 0, ne = 0;
    if (!(in >> nv >> nf >> ne)) throw MeshError(name + ": bad OFF counts");
    TriMesh m;
    m.vertices.resize(nv);
    for (size_t i = 0; i < nv; ++i) {
        if (!(in >> m.vertices[i].x() >> m.vertices[i].y() >> m.vertices[i].z()))
            throw MeshError(name + ": truncated vertex list");
    }
    for (size_t i = 0; i < nf; ++i) {
        size_t k = 0;
        if (!(in >> k) || k < 3) throw MeshError(name + ": bad face record");
        std::vector<int> idx(k);
        for (auto& v : idx) {
            if (!(in >> v)) throw MeshError(name + ": truncated face record");
        }
        for (size_t j = 1; j + 1 < k; ++j) {   // fan-triangulate polygons
            m.faces.push_back({idx[0], idx[j], idx[j + 1]});
        }
    }
    return clean_mesh(std::move(m), true);
}

TriMesh parse_stl_ascii(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "solid") throw MeshError(name + ": not ASCII STL");
    TriMesh m;
    std::map<std::array<double, 3>, int> dedup;
    auto vertex_id = [&](const Vec3& v) {
        std::array<double, 3> key{v.x(), v.y(), v.z()};
        auto it = dedup.find(key);
        if (it != dedup.end()) return it->second;
        const int id = static_cast<int>(m.vertices.size());
        m.vertices.push_back(v);
        dedup.emplace(key, id);
        return id;
    };
    while (in >> tok) {
        if (tok == "facet") {
            std::array<int, 3> tri{};
            int corner = 0;
            std::string word;
            while (in >> word && word != "endfacet") {
                if (word == "vertex") {
                    Vec3 v;
                    if (!(in >> v.x() >> v.y() >> v.z()))
                        throw MeshError(name + ": bad STL vertex");
                    if (corner > 2) throw MeshError(name + ": non-triangular STL facet");
                    tri[corner++] = vertex_id(v);
                }
            }
            if (corner != 3) throw MeshError(name + ": STL facet with != 3 vertices");
            m.faces.push_back(tri);
        } else if (tok == "endsolid") {
            break;
        }
    }
    if (m.faces.empty()) throw MeshError(name + ": STL contains no facets");
    return clean_mesh(std::move(m), true);
}

void write_off(const TriMesh& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MeshError("cannot write: " + path);
    out << "OFF\n" << m.vertices.size() << ' ' << m.faces.size() << " 0\n";
    out.precision(17);
    for (const auto& v : m.vertices) out << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
    for (const auto& f : m.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

TriMesh make_box(const Vec3& extents, const Vec3& center) {
    const Vec3 h = extents / 2.0;
    TriMesh m;
    for (int i = 0; i < 8; ++i) {
        m.vertices.push_back(center + Vec3((i & 1) ? h.x() : -h.x(),
                                           (i & 2) ? h.y() : -h.y(),
                                           (i & 4) ? h.z() : -h.z()));
    }
    // CCW as seen from outside
    const int quads[6][4] = {
        {0, 2, 3, 1},  // -z
        {4, 5, 7, 6},  // +z
        {0, 1, 5, 4},  // -y
        {2, 6, 7, 3},  // +y
        {0, 4, 6, 2},  // -x
        {1, 3, 7, 5},  // +x
    };
    for (const auto& q : quads) {
        m.faces.push_back({q[0], q[1], q[2]});
        m.faces.push_back({q[0], q[2], q[3]});
    }
    m.com = center;
    return m;
}

// ---------------------------------------------------------------------------
// Convex hull (incremental quickhull over triangles, then coplanar merge)

namespace {

struct HullTri {
    int v[3];
    Vec3 n;        // outward unit normal
    double d;      // plane offset: n . x = d
    bool alive = true;
};

constexpr double kCoplanarMergeRad = 1e-6;

double plane_eps(std::span<const Vec3> pts) {
    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 hi = -lo;
    for (const auto& p : pts) { lo = lo.cwiseMin(p); hi = hi.cwiseMax(p); }
    return std::max(1e-12, 1e-10 * (hi - lo).norm());
}

}  // namespace

ConvexHull convex_hull_points(std::span<const Vec3> points) {
    const size_t n = points.size();
    if (n < 4) throw DegenerateGeometry("convex hull needs at least 4 points");
    const double eps = plane_eps(points);

    // initial simplex: two extreme points, then farthest from line, then plane
    size_t i0 = 0, i1 = 0;
    for (size_t i = 1; i < n; ++i) {
        if (points[i].x() < points[i0].x()) i0 = i;
        if (points[i].x() > points[i1].x()) i1 = i;
    }
    if ((points[i1] - points[i0]).norm() < eps) throw DegenerateGeometry("all points coincident");
    size_t i2 = i0;
    double best = -1.0;
    const Vec3 dir = (points[i1] - points[i0]).normalized();
    for (size_t i = 0; i < n; ++i) {
        const Vec3 r = points[i] - points[i0];
        const double d = (r - r.dot(dir) * dir).norm();
        if (d > best) { best = d; i2 = i; }
    }
    if (best < eps) throw DegenerateGeometry("all points collinear");
    const Vec3 n012 = (points[i1] - points[i0]).cross(points[i2] - points[i0]).normalized();
    size_t i3 = i0;
    best = -1.0;
    for (size_t i = 0; i < n; ++i) {
        const double d = std::abs(n012.dot(points[i] - points[i0]));
        if (d > best) { best = d; i3 = i; }
    }
    if (best < eps) throw DegenerateGeometry("all points coplanar");

    std::vector<HullTri> tris;
    auto add_tri = [&](int a, int b, int c, const Vec3& interior) {
        HullTri t;
        t.v[0] = a; t.v[1] = b; t.v[2] = c;
        Vec3 nn = (points[b] - points[a]).cross(points[c] - points[a]);
        if (nn.norm() < 1e-30) nn = Vec3::UnitZ();
        nn.normalize();
        if (nn.dot(interior - points[a]) > 0) {  // flip to face outward
            std::swap(t.v[1], t.v[2]);
            nn = -nn;
        }
        t.n = nn;
        t.d = nn.dot(points[t.v[0]]);
        tris.push_back(t);
        return static_cast<int>(tris.size() - 1);
    };

    const Vec3 interior = (points[i0] + points[i1] + points[i2] + points[i3]) / 4.0;
    add_tri((int)i0, (int)i1, (int)i2, interior);
    add_tri((int)i0, (int)i1, (int)i3, interior);
    add_tri((int)i0, (int)i2, (int)i3, interior);
    add_tri((int)i1, (int)i2, (int)i3, interior);

    // incremental insertion
    for (size_t p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        // find visible faces
        std::vector<int> visible;
        for (size_t f = 0; f < tris.size(); ++f) {
            if (!tris[f].alive) continue;
            if (tris[f].n.dot(points[p]) - tris[f].d > eps) visible.push_back((int)f);
        }
        if (visible.empty()) continue;  // inside current hull
        // horizon = edges of visible faces shared with exactly one visible face
        std::map<std::pair<int, int>, int> edge_count;
        for (int f : visible) {
            for (int e = 0; e < 3; ++e) {
                int a = tris[f].v[e], b = tris[f].v[(e + 1) % 3];
                if (a > b) std::swap(a, b);
                edge_count[{a, b}]++;
            }
            tris[f].alive = false;
        }
        for (const auto& [edge, count] : edge_count) {
            if (count == 1) add_tri(edge.first, edge.second, (int)p, interior);
        }
    }

    // collect hull vertices and merge coplanar triangles into polygon facets
    ConvexHull hull;
    std::set<int> used;
    std::vector<int> live;
    for (size_t f = 0; f < tris.size(); ++f) {
        if (!tris[f].alive) continue;
        live.push_back((int)f);
        for (int v : tris[f].v) used.insert(v);
    }
    hull.points.reserve(used.size());
    for (int v : used) hull.points.push_back(points[v]);

    std::vector<bool> grouped(tris.size(), false);
    for (int f : live) {
        if (grouped[f]) continue;
        // gather all live triangles with matching plane
        std::vector<int> group;
        for (int g : live) {
            if (grouped[g]) continue;
            if (std::acos(std::clamp(tris[f].n.dot(tris[g].n), -1.0, 1.0)) <= kCoplanarMergeRad &&
                std::abs(tris[f].d - tris[g].d) <= 10 * eps) {
                group.push_back(g);
                grouped[g] = true;
            }
        }
        // facet polygon = boundary cycle of the merged triangle patch
        std::map<std::pair<int, int>, int> edge_count;
        for (int g : group) {
            for (int e = 0; e < 3; ++e) {
                int a = tris[g].v[e], b = tris[g].v[(e + 1) % 3];
                if (a > b) std::swap(a, b);
                edge_count[{a, b}]++;
            }
        }
        std::map<int, std::vector<int>> next;
        for (const auto& [edge, count] : edge_count) {
            if (count == 1) {
                next[edge.first].push_back(edge.second);
                next[edge.second].push_back(edge.first);
            }
        }
        if (next.empty()) continue;
        std::vector<int> cycle;
        const int start = next.begin()->first;
        int prev = -1, cur = start;
        do {
            cycle.push_back(cur);
            const auto& nb = next[cur];
            int nxt = (nb.size() > 1 && nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        } while (cur != start && cycle.size() <= next.size());

        HullFacet facet;
        facet.normal = tris[f].n;
        facet.offset = tris[f].d;
        for (int v : cycle) facet.polygon.push_back(points[v]);
        // orient CCW around the outward normal
        Vec3 area = Vec3::Zero();
        for (size_t i = 1; i + 1 < facet.polygon.size(); ++i) {
            area += (facet.polygon[i] - facet.polygon[0])
                        .cross(facet.polygon[i + 1] - facet.polygon[0]);
        }
        if (area.dot(facet.normal) < 0) std::reverse(facet.polygon.begin(), facet.polygon.end());
        hull.facets.push_back(std::move(facet));
    }
    return hull;
}

ConvexHull convex_hull(const TriMesh& mesh) {
    return convex_hull_points(mesh.vertices);
}

// ---------------------------------------------------------------------------
// GJK distance between convex point sets

namespace {

struct SupportPoint {
    Vec3 w;  // a - b in Minkowski difference
};

Vec3 support_points(std::span<const Vec3> pts, const Transform& t, const Vec3& dir) {
    // maximize dir . (R p + t) over p
    const Vec3 local_dir = t.R.transpose() * dir;
    double best = -std::numeric_limits<double>::infinity();
    Vec3 arg = Vec3::Zero();
    for (const auto& p : pts) {
        const double d = local_dir.dot(p);
        if (d > best) { best = d; arg = p; }
    }
    return t.apply(arg);
}

// Closest point to origin on the simplex; prunes the simplex in place.
Vec3 simplex_closest(std::vector<Vec3>& s) {
    auto closest_on_segment = [](const Vec3& a, const Vec3& b, double& u) {
        const Vec3 ab = b - a;
        const double len2 = ab.squaredNorm();
        u = len2 > 0 ? std::clamp(-a.dot(ab) / len2, 0.0, 1.0) : 0.0;
        return Vec3(a + u * ab);
    };
    if (s.size() == 1) return s[0];
    if (s.size() == 2) {
        double u;
        const Vec3 p = closest_on_segment(s[0], s[1], u);
        if (u <= 0.0) s = {s[0]};
        else if (u >= 1.0) s = {s[1]};
        return p;
    }
    auto closest_on_triangle = [&](const Vec3& a, const Vec3& b, const Vec3& c,
                                   std::vector<Vec3>& kept) {
        const Vec3 ab = b - a, ac = c - a, ap = -a;
        const double d1 = ab.dot(ap), d2 = ac.dot(ap);
        if (d1 <= 0 && d2 <= 0) { kept = {a}; return a; }
        const Vec3 bp = -b;
        const double d3 = ab.dot(bp), d4 = ac.dot(bp);
        if (d3 >= 0 && d4 <= d3) { kept = {b}; return b; }
        const double vc = d1 * d4 - d3 * d2;
        if (vc <= 0 && d1 >= 0 && d3 <= 0) {
            const double v = d1 / (d1 - d3);
            kept = {a, b};
            return Vec3(a + v * ab);
        }
        const Vec3 cp = -c;
        const double d5 = ab.dot(cp), d6 = ac.dot(cp);
        if (d6 >= 0 && d5 <= d6) { kept = {c}; return c; }
        const double vb = d5 * d2 - d1 * d6;
        if (vb <= 0 && d2 >= 0 && d6 <= 0) {
            const double w = d2 / (d2 - d6);
            kept = {a, c};
            return Vec3(a + w * ac);
        }
        const double va = d3 * d6 - d5 * d4;
        if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
            const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
            kept = {b, c};
            return Vec3(b + w * (c - b));
        }
        const double denom = 1.0 / (va + vb + vc);
        const double v = vb * denom, w = vc * denom;
        kept = {a, b, c};
        return Vec3(a + ab * v + ac * w);
    };
    if (s.size() == 3) {
        std::vector<Vec3> kept;
        const Vec3 p = closest_on_triangle(s[0], s[1], s[2], kept);
        s = kept;
        return p;
    }
    // tetrahedron: test each face, keep the best
    const int faces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    double best = std::numeric_limits<double>::infinity();
    Vec3 best_p = Vec3::Zero();
    std::vector<Vec3> best_kept;
    // origin inside?
    bool inside = true;
    for (const auto& f : faces) {
        const Vec3 &a = s[f[0]], &b = s[f[1]], &c = s[f[2]];
        Vec3 n = (b - a).cross(c - a);
        // the fourth vertex determines the inside direction
        const Vec3& other = s[6 - f[0] - f[1] - f[2]];
        if (n.dot(other - a) > 0) n = -n;
        if (n.dot(-a) > 1e-15 * n.norm()) inside = false;
    }
    if (inside) return Vec3::Zero();
    for (const auto& f : faces) {
        std::vector<Vec3> kept;
        const Vec3 p = closest_on_triangle(s[f[0]], s[f[1]], s[f[2]], kept);
        const double d = p.squaredNorm();
        if (d < best) { best = d; best_p = p; best_kept = kept; }
    }
    s = best_kept;
    return best_p;
}

}  // namespace

double convex_distance(std::span<const Vec3> a, const Transform& ta,
                       std::span<const Vec3> b, const Transform& tb) {
    Vec3 dir = ta.apply(a[0]) - tb.apply(b[0]);
    if (dir.squaredNorm() < 1e-20) dir = Vec3::UnitX();
    std::vector<Vec3> simplex;
    double dist = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 128; ++iter) {
        const Vec3 w = support_points(a, ta, -dir) - support_points(b, tb, dir);
        // no progress toward the origin => current distance is the answer
        const double lower = dir.normalized().dot(w);
        if (dist - (-lower) <= 1e-12 * std::max(1.0, dist)) break;
        simplex.push_back(w);
        const Vec3 closest = simplex_closest(simplex);
        const double d = closest.norm();
        if (d < 1e-12) return 0.0;  // origin inside: sets intersect
        if (d >= dist - 1e-15) break;
        dist = d;
        dir = closest;
    }
    return dist == std::numeric_limits<double>::infinity() ? 0.0 : dist;
}

bool collide_points(std::span<const Vec3> a, const Transform& ta,
                    std::span<const Vec3> b, const Transform& tb, double margin) {
    const double d = convex_distance(a, ta, b, tb);
    if (margin > 0.0) return d < margin;
    return d <= 1e-12;
}

bool collide(const TriMesh& a, const Transform& ta,
             const TriMesh& b, const Transform& tb, double margin) {
    return collide_points(a.vertices, ta, b.vertices, tb, margin);
}

bool collide_mesh_convex(const TriMesh& mesh, const Transform& tm,
                         std::span<const Vec3> convex_pts, const Transform& tc,
                         double margin) {
    for (const auto& f : mesh.faces) {
        const std::array<Vec3, 3> tri{mesh.vertices[f[0]], mesh.vertices[f[1]],
                                      mesh.vertices[f[2]]};
        if (collide_points(std::span<const Vec3>(tri.data(), 3), tm, convex_pts, tc, margin))
            return true;
    }
    return false;
}

double segment_convex_distance(const Vec3& s0, const Vec3& s1,
                               std::span<const Vec3> pts, const Transform& tp) {
    const std::array<Vec3, 2> seg{s0, s1};
    return convex_distance(std::span<const Vec3>(seg.data(), 2), Transform::identity(), pts, tp);
}

double segment_segment_distance(const Vec3& a0, const Vec3& a1,
                                const Vec3& b0, const Vec3& b1) {
    const Vec3 d1 = a1 - a0, d2 = b1 - b0, r = a0 - b0;
    const double aa = d1.squaredNorm(), ee = d2.squaredNorm(), ff = d2.dot(r);
    double s = 0.0, t = 0.0;
    if (aa <= 1e-18 && ee <= 1e-18) return r.norm();
    if (aa <= 1e-18) {
        t = std::clamp(ff / ee, 0.0, 1.0);
    } else {
        const double cc = d1.dot(r);
        if (ee <= 1e-18) {
            s = std::clamp(-cc / aa, 0.0, 1.0);
        } else {
            const double bb = d1.dot(d2);
            const double denom = aa * ee - bb * bb;
            if (denom > 1e-18) s = std::clamp((bb * ff - cc * ee) / denom, 0.0, 1.0);
            t = (bb * s + ff) / ee;
            if (t < 0.0) { t = 0.0; s = std::clamp(-cc / aa, 0.0, 1.0); }
            else if (t > 1.0) { t = 1.0; s = std::clamp((bb - cc) / aa, 0.0, 1.0); }
        }
    }
    return ((a0 + s * d1) - (b0 + t * d2)).norm();
}

double polygon_signed_margin(const Vec2& p, std::span<const Vec2> polygon) {
    const size_t n = polygon.size();
    double inner = std::numeric_limits<double>::infinity();
    bool inside = true;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = polygon[i];
        const Vec2& b = polygon[(i + 1) % n];
        const Vec2 e = b - a;
        const double len = e.norm();
        if (len < 1e-15) continue;
        // CCW polygon: interior is to the left of each edge
        const double cross = e.x() * (p.y() - a.y()) - e.y() * (p.x() - a.x());
        const double signed_dist = cross / len;
        if (signed_dist < 0) inside = false;
        inner = std::min(inner, signed_dist);
    }
    if (inside) return inner;
    // outside: true distance to the boundary, negated
    double dmin = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = polygon[i];
        const Vec2& b = polygon[(i + 1) % n];
        const Vec2 e = b - a;
        const double len2 = e.squaredNorm();
        const double u = len2 > 0 ? std::clamp((p - a).dot(e) / len2, 0.0, 1.0) : 0.0;
        dmin = std::min(dmin, (p - (a + u * e)).norm());
    }
    return -dmin;
}

}  // namespace regrasp
