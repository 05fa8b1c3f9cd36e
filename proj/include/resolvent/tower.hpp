#ifndef RESOLVENT_TOWER_HPP
#define RESOLVENT_TOWER_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "resolvent/ball.hpp"
#include "resolvent/cyclotomic.hpp"

namespace resolvent {

// Expression tree (DAG) of rationals, cyclotomic constants, field operations
// and branch-indexed p-th roots. Shared subtrees matter: a branch assignment
// binds each root NODE once, so a shared radical keeps the same branch
// everywhere it appears. That sharing is what makes e.g. the Cardano pairing
// z2 = -p/(3 z1) tight.
struct TowerNode;
using TowerPtr = std::shared_ptr<const TowerNode>;

struct TowerNode {
    enum class Kind { Rat, Cyc, Sum, Product, Quotient, Negation, Root };
    Kind kind;
    Rational rat;               // Kind::Rat
    CycElem cyc;                // Kind::Cyc
    std::vector<TowerPtr> args; // operands (Quotient: {num, den})
    long root_p = 0;            // Kind::Root: prime index
    long branch = 0;            // Kind::Root: 0 <= branch < root_p
};

TowerPtr tower_rational(const Rational& q);
TowerPtr tower_cyc(const CycElem& c);
TowerPtr tower_sum(std::vector<TowerPtr> args);
TowerPtr tower_product(std::vector<TowerPtr> args);
TowerPtr tower_quotient(TowerPtr num, TowerPtr den);
TowerPtr tower_negate(TowerPtr arg);
TowerPtr tower_root(long p, TowerPtr radicand, long branch);

// Certified evaluation under the branches fixed in the tree. Working
// precision starts at `bits` and doubles (up to 4096) until the radius drops
// below 2^{-bits/2}; division by a ball that may contain zero raises
// indeterminate_error once the precision budget is exhausted.
Ball tower_eval(const TowerPtr& t, mpfr_prec_t bits);

// All branch assignments, with values merged when their balls coincide within
// certified precision. Returns one representative ball per distinct value.
std::vector<Ball> tower_enumerate(const TowerPtr& t, mpfr_prec_t bits);

// Distinct root nodes of the DAG in deterministic (pre-order) order.
std::vector<const TowerNode*> tower_root_nodes(const TowerPtr& t);

std::string tower_to_string(const TowerPtr& t);

}  // namespace resolvent

#endif
