#ifndef CKS_POLYNOMIAL_HPP
#define CKS_POLYNOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cks/linalg.hpp"

// Integer/rational univariate polynomials, ascending coefficient order.
// Covers what the number-field layer needs: evaluation, Sturm chains for
// real-root counting and isolation, and irreducibility checks in the tiny
// degrees where we re-certify data.

namespace cks {

std::size_t poly_degree(const IntVec& p);  // degree of trimmed p, 0 for constants
IntVec poly_trim(IntVec p);
IntVec poly_derivative(const IntVec& p);
Int poly_eval(const IntVec& p, const Int& x);
Rat poly_eval(const IntVec& p, const Rat& x);
IntVec poly_mul(const IntVec& a, const IntVec& b);
// Remainder of a by monic-leading b after clearing denominators; used only
// inside the Sturm chain where scaling by positive constants is harmless.
IntVec poly_primitive_part(IntVec p);

// Number of distinct real roots of p in the open interval (lo, hi).
// Either bound may be absent, meaning -infinity / +infinity.
// Requires p squarefree (gcd(p, p') constant); throws otherwise.
int sturm_count(const IntVec& p, const std::optional<Rat>& lo,
                const std::optional<Rat>& hi);

// Rational isolating intervals (lo, hi] for every real root, ascending.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntVec& p);
// Shrinks an isolating interval of p below the given width.
std::pair<Rat, Rat> refine_root(const IntVec& p, std::pair<Rat, Rat> iv,
                                const Rat& width);

// Exact irreducibility over Q for monic integer polynomials of degree <= 4
// (rational-root test plus quadratic-factor search). Degrees above 4 return
// nullopt: not decided here.
std::optional<bool> poly_irreducible_small(const IntVec& p);

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);
bool is_perfect_square(const Int& n, Int* root = nullptr);

}  // namespace cks

#endif
