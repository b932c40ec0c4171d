#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtoric/lattice.hpp"

namespace gtoric {

// Strongly convex rational polyhedral cone, stored by its primitive ray
// generators in a fixed-rank lattice. Strong convexity is checked exactly in
// rank <= 2; in higher rank the simplicial cones used here are strongly
// convex by linear independence and anything else is taken as declared.
class Cone {
public:
    // Rays are normalized to primitive generators; duplicates and opposite
    // pairs are rejected.
    Cone(long long rank, std::vector<IntVec> rays);

    long long rank() const { return rank_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    long long ray_count() const { return static_cast<long long>(rays_.size()); }

    IntMat ray_matrix_columns() const; // rank x ray_count
    IntMat ray_matrix_rows() const;    // ray_count x rank
    long long span_dimension() const;  // rank of the ray matrix
    bool is_simplicial() const { return span_dimension() == ray_count(); }
    bool is_full_dimensional() const { return span_dimension() == rank_; }

    bool operator==(const Cone& o) const { return rank_ == o.rank_ && rays_ == o.rays_; }

    std::string str() const;

private:
    long long rank_;
    std::vector<IntVec> rays_;
};

// Determinant of the 2x2 matrix whose columns are the two primitive ray
// generators. Sign depends on ray order; consumers use |delta|.
Int delta(const Cone& c);

// Dual of a full-dimensional strongly convex 2D cone, by primitive inward
// facet normals (one per input ray, in order).
Cone dual_cone_2d(const Cone& c);

struct SurfaceNormalForm {
    bool smooth = false; // smooth <=> b == 1 (and then a == 0)
    Int a;               // 0 <= a < b, gcd(a,b) == 1
    Int b;               // == |delta| of the input cone
    IntMat transform;    // 2x2, |det| == 1; maps the input rays onto {e1, a*e1+b*e2}
};

// GL(2,Z) normal form of a full-dimensional 2D cone: one generator goes to
// e1, the other is sheared into (a,b) with 0 <= a < b. Of the two ray
// orderings the lexicographically smaller (a,b) is the canonical one.
SurfaceNormalForm normalize_surface_cone(const Cone& c);

// A simplicial cone is smooth iff the SNF of its ray matrix is all ones.
// Throws NonSimplicial for dependent rays.
bool is_smooth_cone(const Cone& c);

enum class FanFlag { Verified, Declared, No };
const char* fan_flag_name(FanFlag f);

class Fan {
public:
    // maximal_cones lists ray-index sets; faces are implied (all subsets,
    // the fans handled here being simplicial). declared_* feed the flags for
    // properties that cannot be verified exactly in the given rank.
    Fan(long long rank, std::vector<IntVec> rays,
        std::vector<std::vector<int>> maximal_cones,
        bool declared_complete = false, bool declared_simplicial = false);

    long long rank() const { return rank_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<std::vector<int>>& maximal_cones() const { return cones_; }

    FanFlag simplicial() const { return simplicial_; }
    FanFlag smooth() const { return smooth_; }
    FanFlag complete() const { return complete_; }

    Cone cone_from(const std::vector<int>& ray_indices) const;

private:
    long long rank_;
    std::vector<IntVec> rays_;
    std::vector<std::vector<int>> cones_;
    FanFlag simplicial_ = FanFlag::No;
    FanFlag smooth_ = FanFlag::No;
    FanFlag complete_ = FanFlag::No;
};

// Face counts |Sigma(i)| for i = 0..rank; |Sigma(0)| == 1 for the zero cone.
// Requires a verified-simplicial fan (faces are the ray subsets).
std::vector<long long> census(const Fan& f);

// Fan of the weighted projective space P(a_0,...,a_d): the quotient lattice
// Z^{d+1} / Z*(a_0,...,a_d) realized inside Z^d via SNF, rays the images of
// the standard basis vectors, maximal cones all d-subsets.
Fan wps_fan(const std::vector<Int>& weights);

// Fan of the resolution of Spec k[x, xy, ..., xy^d]: rays e2, e1, d*e1-e2
// with the two smooth maximal cones meeting along e1.
Fan resolution_fan(long long d);

} // namespace gtoric
