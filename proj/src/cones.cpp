#include "gtoric/cones.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gtoric {

const char* fan_flag_name(FanFlag f) {
    switch (f) {
    case FanFlag::Verified: return "verified";
    case FanFlag::Declared: return "declared";
    case FanFlag::No: return "false";
    }
    return "?";
}

Cone::Cone(long long rank, std::vector<IntVec> rays) : rank_(rank) {
    if (rank < 1)
        throw Error(ErrorCode::InvalidArgument, "Cone: rank must be >= 1");
    rays_.reserve(rays.size());
    for (IntVec& r : rays) {
        if (r.rank() != rank)
            throw Error(ErrorCode::InvalidArgument, "Cone: ray rank mismatch");
        if (r.is_zero())
            throw Error(ErrorCode::InvalidArgument, "Cone: zero ray");
        rays_.push_back(r.primitive());
    }
    for (size_t i = 0; i < rays_.size(); ++i)
        for (size_t j = i + 1; j < rays_.size(); ++j) {
            if (rays_[i] == rays_[j])
                throw Error(ErrorCode::InvalidArgument, "Cone: duplicate ray " + rays_[i].str());
            if (rank_ <= 2 && rays_[i] == -rays_[j])
                throw Error(ErrorCode::InvalidArgument,
                            "Cone: opposite rays " + rays_[i].str() + " violate strong convexity");
        }
}

IntMat Cone::ray_matrix_columns() const {
    if (rays_.empty()) return IntMat(rank_, 0);
    return IntMat::from_columns(rays_);
}

IntMat Cone::ray_matrix_rows() const {
    if (rays_.empty()) return IntMat(0, rank_);
    return IntMat::from_rows(rays_);
}

long long Cone::span_dimension() const {
    if (rays_.empty()) return 0;
    SnfResult snf = smith_normal_form(ray_matrix_columns());
    long long r = 0;
    for (const Int& d : snf.diagonal())
        if (d != 0) ++r;
    return r;
}

std::string Cone::str() const {
    std::ostringstream os;
    os << "cone{";
    for (size_t i = 0; i < rays_.size(); ++i) {
        if (i) os << ", ";
        os << rays_[i].str();
    }
    os << "}";
    return os.str();
}

namespace {

void require_full_2d(const Cone& c, const char* op) {
    if (c.rank() != 2)
        throw Error(ErrorCode::InvalidArgument, std::string(op) + ": cone must live in rank 2");
    if (c.ray_count() != 2)
        throw Error(ErrorCode::InvalidArgument, std::string(op) + ": cone must have exactly 2 rays");
    const IntVec& r0 = c.rays()[0];
    const IntVec& r1 = c.rays()[1];
    if (r0[0] * r1[1] - r0[1] * r1[0] == 0)
        throw Error(ErrorCode::DegenerateCone, std::string(op) + ": collinear rays " + c.str());
}

// primitive vector orthogonal to r, signed to be nonnegative on s
IntVec inward_normal(const IntVec& r, const IntVec& s) {
    IntVec n{-r[1], r[0]};
    if (n.dot(s) < 0) n = -n;
    return n; // r primitive => n primitive
}

} // namespace

Int delta(const Cone& c) {
    require_full_2d(c, "delta");
    return det(c.ray_matrix_columns());
}

Cone dual_cone_2d(const Cone& c) {
    require_full_2d(c, "dual_cone_2d");
    const IntVec& r0 = c.rays()[0];
    const IntVec& r1 = c.rays()[1];
    return Cone(2, {inward_normal(r0, r1), inward_normal(r1, r0)});
}

namespace {

// Map first to e1, flip the second into the upper half plane, then shear its
// x-coordinate into [0, b).
SurfaceNormalForm normal_form_ordered(const IntVec& first, const IntVec& second) {
    GcdExt e = gcd_ext(first[0], first[1]);
    // [[s, t], [-y, x]] sends first = (x,y) to e1
    IntMat m(2, 2, {e.s, e.t, -first[1], first[0]});
    IntVec img = m.apply(second);
    if (img[1] < 0) {
        IntMat flip(2, 2, {Int(1), Int(0), Int(0), Int(-1)});
        m = flip * m;
        img = IntVec{img[0], -img[1]};
    }
    Int b = img[1];
    Int a = img[0] - floor_div(img[0], b) * b; // a = img_x mod b, in [0, b)
    Int shear = (a - img[0]) / b;
    IntMat s(2, 2, {Int(1), shear, Int(0), Int(1)});
    SurfaceNormalForm out;
    out.a = a;
    out.b = b;
    out.smooth = (b == 1);
    out.transform = s * m;
    return out;
}

} // namespace

SurfaceNormalForm normalize_surface_cone(const Cone& c) {
    require_full_2d(c, "normalize_surface_cone");
    SurfaceNormalForm f0 = normal_form_ordered(c.rays()[0], c.rays()[1]);
    SurfaceNormalForm f1 = normal_form_ordered(c.rays()[1], c.rays()[0]);
    // b agrees (it is |delta|); tie-break on the smaller a
    return f1.a < f0.a ? f1 : f0;
}

bool is_smooth_cone(const Cone& c) {
    if (c.rays().empty()) return true;
    if (!c.is_simplicial())
        throw Error(ErrorCode::NonSimplicial,
                    "is_smooth_cone: rays are linearly dependent in " + c.str());
    SnfResult snf = smith_normal_form(c.ray_matrix_columns());
    for (const Int& d : snf.diagonal())
        if (d != 1) return false;
    return true;
}

namespace {

Int cross2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// cyclic angular order starting from the positive x-axis, exact
bool angle_less(const IntVec& a, const IntVec& b) {
    auto half = [](const IntVec& v) {
        return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross2(a, b) > 0;
}

bool check_complete_rank1(const std::vector<IntVec>& rays,
                          const std::vector<std::vector<int>>& cones) {
    bool pos = false, neg = false;
    for (const IntVec& r : rays) {
        if (r[0] == 1) pos = true;
        if (r[0] == -1) neg = true;
    }
    if (!pos || !neg) return false;
    std::set<std::vector<int>> maximal(cones.begin(), cones.end());
    for (int i = 0; i < static_cast<int>(rays.size()); ++i)
        if (!maximal.count({i})) return false;
    return true;
}

bool check_complete_rank2(const std::vector<IntVec>& rays,
                          const std::vector<std::vector<int>>& cones) {
    size_t k = rays.size();
    if (k < 3 || cones.size() != k) return false;
    std::vector<int> order(k);
    for (size_t i = 0; i < k; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return angle_less(rays[i], rays[j]); });
    std::set<std::vector<int>> maximal(cones.begin(), cones.end());
    for (size_t i = 0; i < k; ++i) {
        int a = order[i], b = order[(i + 1) % k];
        if (cross2(rays[a], rays[b]) <= 0) return false; // gap of angle >= pi
        std::vector<int> pair{std::min(a, b), std::max(a, b)};
        if (!maximal.count(pair)) return false;
    }
    return true;
}

// Necessary condition for the rays to positively span Q^n: full span and no
// coordinate half-space containing every ray. When the fan has exactly
// rank+1 rays (the weighted projective case) the one-dimensional kernel of
// the ray matrix is additionally required to be strictly positive, which is
// then exact.
bool positive_span_sanity(long long rank, const std::vector<IntVec>& rays) {
    if (rays.empty()) return false;
    SnfResult snf = smith_normal_form(IntMat::from_columns(rays));
    long long r = 0;
    for (const Int& d : snf.diagonal())
        if (d != 0) ++r;
    if (r != rank) return false;
    for (long long j = 0; j < rank; ++j) {
        bool pos = false, neg = false;
        for (const IntVec& v : rays) {
            if (v[j] > 0) pos = true;
            if (v[j] < 0) neg = true;
        }
        if (!pos || !neg) return false;
    }
    if (static_cast<long long>(rays.size()) == rank + 1) {
        // kernel generator via SNF: column of v past the rank
        SnfResult s2 = smith_normal_form(IntMat::from_columns(rays));
        IntVec ker = s2.v.col(rank);
        bool all_pos = true, all_neg = true;
        for (long long i = 0; i <= rank; ++i) {
            if (ker[i] <= 0) all_pos = false;
            if (ker[i] >= 0) all_neg = false;
        }
        if (!all_pos && !all_neg) return false;
    }
    return true;
}

} // namespace

Fan::Fan(long long rank, std::vector<IntVec> rays,
         std::vector<std::vector<int>> maximal_cones,
         bool declared_complete, bool declared_simplicial)
    : rank_(rank) {
    if (rank < 1)
        throw Error(ErrorCode::InvalidArgument, "Fan: rank must be >= 1");
    rays_.reserve(rays.size());
    for (IntVec& r : rays) {
        if (r.rank() != rank)
            throw Error(ErrorCode::ParseDimension, "Fan: ray rank mismatch");
        if (r.is_zero())
            throw Error(ErrorCode::InvalidArgument, "Fan: zero ray");
        rays_.push_back(r.primitive());
    }
    for (size_t i = 0; i < rays_.size(); ++i)
        for (size_t j = i + 1; j < rays_.size(); ++j)
            if (rays_[i] == rays_[j])
                throw Error(ErrorCode::InvalidArgument, "Fan: duplicate ray " + rays_[i].str());

    cones_.reserve(maximal_cones.size());
    for (std::vector<int>& cone : maximal_cones) {
        for (int idx : cone)
            if (idx < 0 || idx >= static_cast<int>(rays_.size()))
                throw Error(ErrorCode::ParseBadIndex,
                            "Fan: cone ray index " + std::to_string(idx) + " out of range");
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        cones_.push_back(std::move(cone));
    }

    bool simplicial = true;
    bool smooth = true;
    for (const std::vector<int>& cone : cones_) {
        Cone c = cone_from(cone);
        if (!c.is_simplicial()) {
            simplicial = false;
            smooth = false;
            break;
        }
        if (smooth && !is_smooth_cone(c)) smooth = false;
    }
    simplicial_ = simplicial ? FanFlag::Verified : FanFlag::No;
    if (declared_simplicial && !simplicial)
        throw Error(ErrorCode::DeclarationContradicted,
                    "Fan: declared simplicial but a maximal cone has dependent rays");
    smooth_ = smooth ? FanFlag::Verified : FanFlag::No;

    if (rank_ == 1) {
        complete_ = check_complete_rank1(rays_, cones_) ? FanFlag::Verified : FanFlag::No;
    } else if (rank_ == 2) {
        complete_ = check_complete_rank2(rays_, cones_) ? FanFlag::Verified : FanFlag::No;
    } else if (declared_complete) {
        if (!positive_span_sanity(rank_, rays_))
            throw Error(ErrorCode::DeclarationContradicted,
                        "Fan: declared complete but the rays do not positively span the space");
        complete_ = FanFlag::Declared;
    } else {
        complete_ = FanFlag::No;
    }
    if (declared_complete && rank_ <= 2 && complete_ != FanFlag::Verified)
        throw Error(ErrorCode::DeclarationContradicted,
                    "Fan: declared complete but the rank-" + std::to_string(rank_) +
                        " completeness check fails");
}

Cone Fan::cone_from(const std::vector<int>& ray_indices) const {
    std::vector<IntVec> rays;
    rays.reserve(ray_indices.size());
    for (int idx : ray_indices) {
        if (idx < 0 || idx >= static_cast<int>(rays_.size()))
            throw Error(ErrorCode::ParseBadIndex, "Fan::cone_from: index out of range");
        rays.push_back(rays_[static_cast<size_t>(idx)]);
    }
    return Cone(rank_, std::move(rays));
}

std::vector<long long> census(const Fan& f) {
    if (f.simplicial() != FanFlag::Verified)
        throw Error(ErrorCode::NonSimplicial, "census: fan must be simplicial");
    std::set<std::vector<int>> faces;
    faces.insert({}); // the zero cone
    for (const std::vector<int>& cone : f.maximal_cones()) {
        size_t k = cone.size();
        for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
            std::vector<int> face;
            for (size_t b = 0; b < k; ++b)
                if (mask & (size_t(1) << b)) face.push_back(cone[b]);
            faces.insert(std::move(face));
        }
    }
    std::vector<long long> counts(static_cast<size_t>(f.rank()) + 1, 0);
    for (const std::vector<int>& face : faces)
        counts.at(face.size()) += 1; // simplicial: dim == ray count
    return counts;
}

Fan wps_fan(const std::vector<Int>& weights) {
    long long d = static_cast<long long>(weights.size()) - 1;
    if (d < 1)
        throw Error(ErrorCode::InvalidArgument, "wps_fan: need at least two weights");
    Int g = 0;
    for (const Int& w : weights) {
        if (w <= 0)
            throw Error(ErrorCode::InvalidArgument, "wps_fan: weights must be positive");
        g = int_gcd(g, w);
    }
    if (g != 1)
        throw Error(ErrorCode::InvalidArgument, "wps_fan: weights must be coprime, gcd is " + g.str());

    // u * w = (1, 0, ..., 0)^T; dropping the first coordinate realizes
    // N = Z^{d+1} / Z*w inside Z^d, and the rays are the images of e_i.
    IntMat wcol(d + 1, 1);
    for (long long i = 0; i <= d; ++i) wcol.at(i, 0) = weights[static_cast<size_t>(i)];
    SnfResult snf = smith_normal_form(wcol);
    IntMat proj = snf.u; // (d+1) x (d+1)

    std::vector<IntVec> rays;
    rays.reserve(static_cast<size_t>(d + 1));
    for (long long i = 0; i <= d; ++i) {
        std::vector<Int> img;
        img.reserve(static_cast<size_t>(d));
        for (long long r = 1; r <= d; ++r) img.push_back(proj.at(r, i));
        rays.push_back(IntVec(std::move(img)).primitive());
    }

    std::vector<std::vector<int>> cones;
    for (int omit = 0; omit <= d; ++omit) {
        std::vector<int> cone;
        for (int i = 0; i <= d; ++i)
            if (i != omit) cone.push_back(i);
        cones.push_back(std::move(cone));
    }
    return Fan(d, std::move(rays), std::move(cones), /*declared_complete=*/true,
               /*declared_simplicial=*/true);
}

Fan resolution_fan(long long d) {
    if (d < 1)
        throw Error(ErrorCode::InvalidArgument, "resolution_fan: d must be >= 1");
    std::vector<IntVec> rays{IntVec{Int(0), Int(1)}, IntVec{Int(1), Int(0)},
                             IntVec{Int(d), Int(-1)}};
    std::vector<std::vector<int>> cones{{0, 1}, {1, 2}};
    return Fan(2, std::move(rays), std::move(cones));
}

} // namespace gtoric
