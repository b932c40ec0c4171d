#pragma once

#include <vector>

#include "gtoric/lattice.hpp"

namespace gtoric {

// Lattice point of Z^2 in the normalized-cone picture.
struct Pt {
    Int x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator<(const Pt& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Membership in sigma = cone(e1, a*e1 + b*e2): y >= 0 and b*x - a*y >= 0.
// Exact integer cross-multiplication only.
bool in_sigma(const Int& a, const Int& b, const Pt& p);

// Validates the normalized-cone parameters: b >= 1, 0 <= a <= b,
// gcd(a,b) == 1 (so a == b only for (1,1), a == 0 only for (0,1)).
// The (1,m) family of Spec k[x, xy, ..., xy^m] is (a,b) = (1,m).
void check_cone_params(const Int& a, const Int& b);

// Minimal generating set of sigma cap Z^2: all lattice points of the region
// T = {0 <= x <= a, 0 <= y, a*y <= b*x} minus those that split as a sum of
// two nonzero semigroup elements. Contains (1,0) and (a,b).
std::vector<Pt> hilbert_generators_2d(const Int& a, const Int& b);

struct SemigroupBasisReport {
    Int a, b;
    std::vector<Pt> generators;     // Hilbert generators inside region T
    std::vector<Pt> quotient_basis; // one minimal representative per +v orbit
    Int rank;                       // orbit count == b, asserted post hoc
};

// The k[v]-module generators of R/xR: points p of sigma with p - e1 outside
// sigma, one representative per orbit under translation by v = (a,b), the
// representative being the orbit point of smallest y (then smallest x).
SemigroupBasisReport quotient_basis(const Int& a, const Int& b);

// The telescoping sum 1 + floor(b/a) + (floor(2b/a) - floor(b/a)) + ... +
// (b - floor((a-1)b/a) - 1), evaluated term by term; equals b.
Int floor_sum_identity(const Int& a, const Int& b);

// Image of x under the boundary map G_1(R[1/x]) -> G_0(R/xR), i.e. the class
// [R/xR] in G_0((R/xR)_red) = Z: the quotient-basis orbit count.
Int boundary_image(const Int& a, const Int& b);

} // namespace gtoric
