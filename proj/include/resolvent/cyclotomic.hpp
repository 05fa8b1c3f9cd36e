#ifndef RESOLVENT_CYCLOTOMIC_HPP
#define RESOLVENT_CYCLOTOMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "resolvent/ball.hpp"
#include "resolvent/errors.hpp"
#include "resolvent/numtheory.hpp"
#include "resolvent/rational.hpp"
#include "resolvent/unipoly.hpp"

namespace resolvent {

// The m-th cyclotomic polynomial, computed by exact division of t^m - 1 by the
// product of Phi_d over proper divisors d. Monic over Z, degree phi(m).
UniPoly<Rational> cyclotomic_poly(long m);

// Element of Q(zeta_m), stored as exactly deg Phi_m rational coordinates in
// the power basis 1, zeta, ..., zeta^{deg-1}. Arithmetic between different
// conductors embeds both sides into Q(zeta_lcm) first.
class CycElem {
public:
    CycElem() : m_(1), c_{Rational(0)} {}

    static CycElem from_rational(const Rational& q, long m = 1);
    static CycElem zeta(long m, long power = 1);

    long conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    CycElem embed(long M) const;  // m | M

    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator/(const CycElem& a, const CycElem& b);
    CycElem operator-() const;
    friend bool operator==(const CycElem& a, const CycElem& b);
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

    CycElem inverse() const;
    CycElem pow(long e) const;

    // Galois automorphism zeta_m -> zeta_m^k, gcd(k, m) = 1.
    CycElem galois_apply(long k) const;

    Ball to_ball(mpfr_prec_t bits) const;

    std::string str(const std::string& var = "z") const;

private:
    friend CycElem cyc_normalize(long m, const std::vector<Rational>& raw);
    long m_;
    std::vector<Rational> c_;
};

// Reduces a polynomial in zeta_m (any length) modulo Phi_m.
CycElem cyc_normalize(long m, const std::vector<Rational>& raw);

inline CycElem cyc_inverse(const CycElem& x) { return x.inverse(); }
inline CycElem cyc_embed(const CycElem& x, long M) { return x.embed(M); }
inline CycElem cyc_galois_apply(const CycElem& x, long k) { return x.galois_apply(k); }
inline Ball cyc_to_ball(const CycElem& x, mpfr_prec_t bits) { return x.to_ball(bits); }

// Attempts to rewrite x (conductor L) in Q(zeta_M) for M | L; nullopt when x
// does not lie in the subfield.
std::optional<CycElem> cyc_try_restrict(const CycElem& x, long M);

// UniPoly plumbing for CycElem coefficients.
template <>
struct coeff_traits<CycElem> {
    static constexpr bool is_exact = true;
    static CycElem zero_like(const CycElem& s) {
        return CycElem::from_rational(Rational(0), s.conductor());
    }
    static CycElem one_like(const CycElem& s) {
        return CycElem::from_rational(Rational(1), s.conductor());
    }
    static bool is_zero(const CycElem& x) { return x.is_zero(); }
};

// Lifts a rational polynomial into Q(zeta_m)[t].
UniPoly<CycElem> poly_to_cyclotomic(const UniPoly<Rational>& p, long m);

// If every coefficient is rational, lowers to Q[t].
std::optional<UniPoly<Rational>> poly_from_cyclotomic(const UniPoly<CycElem>& p);

}  // namespace resolvent

#endif
