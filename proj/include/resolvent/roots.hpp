#ifndef RESOLVENT_ROOTS_HPP
#define RESOLVENT_ROOTS_HPP

#include <vector>

#include "resolvent/ball.hpp"
#include "resolvent/cyclotomic.hpp"
#include "resolvent/unipoly.hpp"

namespace resolvent {

// Certified root isolation for a square-free polynomial: returns deg P
// pairwise-disjoint balls, each containing exactly one root. Simultaneous
// (Aberth) refinement from a fixed deterministic start on the circle of
// radius 1 + max |coeff|, followed by a Weierstrass a-posteriori inclusion
// bound. Non-square-free input raises argument_error naming the repeated
// factor.
std::vector<Ball> roots_certified(const UniPoly<Rational>& P, mpfr_prec_t bits);
std::vector<Ball> roots_certified(const UniPoly<CycElem>& P, mpfr_prec_t bits);

// Re-isolates at a higher precision and reorders the output to match the
// labeling of `previous` (each previous ball must capture exactly one new
// ball).
std::vector<Ball> refine_roots(const UniPoly<Rational>& P, const std::vector<Ball>& previous,
                               mpfr_prec_t bits);

}  // namespace resolvent

#endif
