#ifndef RESOLVENT_CLASSICAL_HPP
#define RESOLVENT_CLASSICAL_HPP

#include <string>
#include <vector>

#include "resolvent/multipoly.hpp"
#include "resolvent/tower.hpp"
#include "resolvent/unipoly.hpp"

namespace resolvent {

struct CubicData {
    Rational e1, e2, e3;
    Rational p, q, R;  // p = e2 - e1^2/3, q = -e3 + e1 e2/3 - 2 e1^3/27, R = (q/2)^2 + (p/3)^3
};

struct CubicSolution {
    CubicData data;
    std::vector<TowerPtr> roots;  // three towers, each evaluating to a root
    // p = 0: handled by a direct cube-root tower of the depressed cubic
    bool depressed_direct = false;
};

// Monic cubic over Q. z1 is the cube-root tower and z2 is always computed as
// -p/(3 z1), never as an independent radical, so branch enumeration stays
// tight (6 assignments collapsing to the 3 roots).
CubicSolution solve_cubic(const UniPoly<Rational>& f);

struct QuarticSolution {
    Rational e1, e2, e3, e4;
    UniPoly<Rational> resolvent_cubic;
    std::vector<TowerPtr> roots;  // four towers
    int y_choice = 0;             // resolvent root used for the split
    bool degenerate_fallback = false;
};

// Monic quartic over Q via the resolvent cubic; y1 is the resolvent root
// whose tower evaluates with maximal |e1^2 - 4 e2 + 4 y1| (avoiding the z = 0
// singularity); the all-degenerate case falls back to the direct
// two-quadratic factorization.
QuarticSolution solve_quartic(const UniPoly<Rational>& f);

struct VerifyItem {
    std::string name;
    bool pass;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

// Exact polynomial identities behind the Lagrange solution of the cubic:
// z1^3 + z2^3 = -q, z1^3 z2^3 = -(p/3)^3, z3 = w^2 z1, and the stabilizer
// chain S_3 > A_3 > {id}.
VerifyReport verify_lagrange_cubic();

// The quartic identities: the resolvent-cubic factorization of B^2 - 4AC, the
// square relations between scheme functions, the cube relation with its exact
// cyclotomic constant (reported in the notes), and the stabilizer chain
// 24, 12, 4, 2, 1.
VerifyReport verify_lagrange_quartic();

// Theta = Psi + w (gamma Psi) + (w gamma)^2 Psi + ...; requires w a primitive
// p-th root of unity and gamma^p = id. Verifies gamma Theta = w^{-1} Theta.
MultiPoly<CycElem> lagrange_theta(const MultiPoly<CycElem>& psi, const Perm& gamma, long p,
                                  const CycElem& omega);

struct LagrangeInversion {
    MultiPoly<CycElem> theta;                  // Theta_1
    std::vector<MultiPoly<CycElem>> theta_i;   // Theta_i = sum_s w^{si} gamma^s Psi
    // c_i = theta_i / theta^i; stored as (numerator, denominator) pairs
    std::vector<std::pair<MultiPoly<CycElem>, MultiPoly<CycElem>>> c;
};

// Lagrange's inversion: the coefficients c_i are gamma-invariant and
// Psi = (c_0 + c_1 Theta + ... + c_{p-1} Theta^{p-1}) / p; both facts are
// verified exactly (denominators cleared at the MultiPoly level).
LagrangeInversion lagrange_invert(const MultiPoly<CycElem>& psi, const Perm& gamma, long p,
                                  const CycElem& omega);

}  // namespace resolvent

#endif
