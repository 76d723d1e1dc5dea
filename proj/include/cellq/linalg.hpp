#pragma once

#include <optional>
#include <vector>

#include "cellq/int.hpp"
#include "cellq/laurent.hpp"

namespace cellq {

// Polynomials over Q as ascending coefficient vectors (trimmed).
namespace qpoly {

using Poly = std::vector<Rat>;

void trim(Poly& p);
int degree(const Poly& p); // -1 for zero
Poly monic(Poly p);
Poly mul(const Poly& a, const Poly& b);
// division with remainder; b nonzero
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);   // monic
Poly lcm(const Poly& a, const Poly& b);
Rat eval(const Poly& p, const Rat& x);
std::string to_string(const Poly& p);

/// All rational roots, each listed once; also reports whether the polynomial
/// splits into distinct linear factors over Q.
struct RootScan {
    std::vector<Rat> roots;
    bool splits_distinct_linear = false;
};
RootScan rational_roots(const Poly& p);

} // namespace qpoly

// Exact dense linear algebra over Q. Gaussian elimination with first-nonzero
// pivoting; no thresholds anywhere.

long rank_of(QMat m);
// basis of the right kernel, as matrix columns (cols = nullity)
QMat kernel_of(QMat m);
// solve m x = b; nullopt when inconsistent
std::optional<QVec> solve(QMat m, QVec b);
// inverse of a square invertible matrix; throws InvariantError when singular
QMat inverse_of(const QMat& m);
Rat determinant(QMat m);

// monic minimal polynomial over Q (Krylov sequences on the standard basis)
qpoly::Poly min_poly(const QMat& m);
// characteristic polynomial, monic of degree n (Faddeev-LeVerrier)
qpoly::Poly char_poly(const QMat& m);

/// Express each column of `vecs` in the column space of `basis`; nullopt when
/// some column fails to lie in it.
std::optional<QMat> coords_in_basis(const QMat& basis, const QMat& vecs);

/// Column-reduced basis of the span of the given columns.
QMat column_space_basis(const QMat& m);

/// Hermite normal form of the lattice generated by the rows of `gens` in
/// Z^cols: rows upper-triangular, positive diagonal, entries above a pivot
/// reduced into [0, pivot). Returns the (rank x cols) basis.
ZMat hnf_basis(ZMat gens);

/// HNF basis of a full-rank lattice in dimension dim; throws RankDeficient
/// when the generators span less than dim.
ZMat lattice_hnf(const std::vector<std::vector<Int>>& generators, int dim);

} // namespace cellq
