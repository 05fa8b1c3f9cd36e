#ifndef RESOLVENT_IRREDUCIBLE_HPP
#define RESOLVENT_IRREDUCIBLE_HPP

#include <optional>

#include "resolvent/unipoly.hpp"

namespace resolvent {

struct IrreducibilityResult {
    bool irreducible;
    // a proper monic integer factor witnessing reducibility
    std::optional<UniPoly<Rational>> factor;
};

// Certified irreducibility over Q for monic square-free integer polynomials of
// degree <= 24. Searches every root subset of size <= deg/2 for a factor with
// certified-near-integer coefficients; candidates are confirmed or refuted by
// exact integer division. A positive answer carries the factor; a negative
// answer is rigorous because a true integer factor keeps its coefficient
// balls on the integers at every precision while non-factors are eventually
// excluded.
IrreducibilityResult is_irreducible_over_Q(const UniPoly<Rational>& P);

}  // namespace resolvent

#endif
