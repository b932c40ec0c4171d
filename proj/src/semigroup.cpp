#include "gtoric/semigroup.hpp"

#include <algorithm>

namespace gtoric {

bool in_sigma(const Int& a, const Int& b, const Pt& p) {
    return p.y >= 0 && b * p.x - a * p.y >= 0;
}

void check_cone_params(const Int& a, const Int& b) {
    if (b < 1 || a < 0 || a > b)
        throw Error(ErrorCode::InvalidArgument,
                    "cone parameters need 0 <= a <= b, b >= 1; got (" + a.str() + "," + b.str() + ")");
    if (int_gcd(a, b) != 1)
        throw Error(ErrorCode::InvalidArgument,
                    "cone parameters (" + a.str() + "," + b.str() + ") are not coprime");
}

std::vector<Pt> hilbert_generators_2d(const Int& a, const Int& b) {
    check_cone_params(a, b);
    if (a == 0) return {Pt{1, 0}, Pt{0, 1}}; // first quadrant

    // lattice points of region T, (0,0) excluded
    std::vector<Pt> region;
    for (Int x = 1; x <= a; ++x)
        for (Int y = 0; a * y <= b * x; ++y) region.push_back(Pt{x, y});

    auto decomposable = [&](const Pt& p) {
        for (Int x = 0; x <= p.x; ++x)
            for (Int y = 0; y <= p.y; ++y) {
                Pt q{x, y};
                if ((x == 0 && y == 0) || q == p) continue;
                Pt r{p.x - x, p.y - y};
                if (in_sigma(a, b, q) && in_sigma(a, b, r)) return true;
            }
        return false;
    };

    std::vector<Pt> gens;
    for (const Pt& p : region)
        if (!decomposable(p)) gens.push_back(p);
    std::sort(gens.begin(), gens.end());
    return gens;
}

SemigroupBasisReport quotient_basis(const Int& a, const Int& b) {
    check_cone_params(a, b);

    // p is in sigma but leaves it when translated by -e1 iff b(x-1) - ay < 0;
    // the +v orbit of such points has exactly one member with 0 <= y < b,
    // and it satisfies x <= a, so the enumeration box is exact.
    std::vector<Pt> reps;
    for (Int y = 0; y < b; ++y)
        for (Int x = 0; x <= (a == 0 ? Int(0) : a); ++x) {
            Pt p{x, y};
            if (!in_sigma(a, b, p)) continue;
            if (b * p.x - a * p.y < b) reps.push_back(p);
        }
    std::sort(reps.begin(), reps.end(), [](const Pt& l, const Pt& r) {
        return l.y < r.y || (l.y == r.y && l.x < r.x);
    });

    SemigroupBasisReport report;
    report.a = a;
    report.b = b;
    report.generators = hilbert_generators_2d(a, b);
    report.quotient_basis = reps;
    report.rank = static_cast<long long>(reps.size());
    if (report.rank != b)
        throw Error(ErrorCode::InvalidArgument,
                    "quotient_basis: orbit count " + report.rank.str() +
                        " != b = " + b.str() + " (theorem violation)");
    return report;
}

Int floor_sum_identity(const Int& a, const Int& b) {
    check_cone_params(a, b);
    if (a == 0)
        throw Error(ErrorCode::InvalidArgument, "floor_sum_identity: a must be positive");
    Int sum = 1; // the column x = 0 contributes 1
    Int prev = 0;
    for (Int i = 1; i <= a; ++i) {
        Int cur = (i * b) / a; // floor, nonnegative operands
        Int term = cur - prev;
        if (i == a) term -= 1; // (a,b) itself is counted separately
        sum += term;
        prev = cur;
    }
    return sum;
}

Int boundary_image(const Int& a, const Int& b) {
    return quotient_basis(a, b).rank;
}

} // namespace gtoric
