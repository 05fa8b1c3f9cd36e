#ifndef RESOLVENT_BALL_HPP
#define RESOLVENT_BALL_HPP

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "resolvent/errors.hpp"
#include "resolvent/rational.hpp"
#include "resolvent/unipoly.hpp"

namespace resolvent {

// Complex ball: arbitrary-precision center (re, im) plus an upward-rounded
// radius bounding |z - center| in complex modulus. Every operation produces a
// radius that rigorously encloses the exact result (outward rounding).
class Ball {
    static constexpr mpfr_prec_t kRadPrec = 32;

public:
    explicit Ball(mpfr_prec_t prec = 64) : prec_(prec) {
        mpfr_init2(re_, prec_);
        mpfr_init2(im_, prec_);
        mpfr_init2(rad_, kRadPrec);
        mpfr_set_zero(re_, 1);
        mpfr_set_zero(im_, 1);
        mpfr_set_zero(rad_, 1);
    }

    Ball(const Ball& o) : prec_(o.prec_) {
        mpfr_init2(re_, prec_);
        mpfr_init2(im_, prec_);
        mpfr_init2(rad_, kRadPrec);
        mpfr_set(re_, o.re_, MPFR_RNDN);
        mpfr_set(im_, o.im_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }

    Ball(Ball&& o) noexcept : prec_(o.prec_) {
        re_[0] = o.re_[0];
        im_[0] = o.im_[0];
        rad_[0] = o.rad_[0];
        // leave the source valid for destruction/assignment
        mpfr_init2(o.re_, MPFR_PREC_MIN);
        mpfr_init2(o.im_, MPFR_PREC_MIN);
        mpfr_init2(o.rad_, MPFR_PREC_MIN);
        mpfr_set_zero(o.re_, 1);
        mpfr_set_zero(o.im_, 1);
        mpfr_set_zero(o.rad_, 1);
    }

    Ball& operator=(const Ball& o) {
        if (this != &o) {
            Ball tmp(o);
            swap(tmp);
        }
        return *this;
    }

    Ball& operator=(Ball&& o) noexcept {
        swap(o);
        return *this;
    }

    ~Ball() {
        mpfr_clear(re_);
        mpfr_clear(im_);
        mpfr_clear(rad_);
    }

    void swap(Ball& o) noexcept {
        mpfr_swap(re_, o.re_);
        mpfr_swap(im_, o.im_);
        mpfr_swap(rad_, o.rad_);
        std::swap(prec_, o.prec_);
    }

    mpfr_prec_t prec() const { return prec_; }

    static Ball from_rational(const Rational& q, mpfr_prec_t prec) {
        Ball b(prec);
        int t = mpfr_set_q(b.re_, q.get_mpq_t(), MPFR_RNDN);
        if (t != 0) b.bump_rad(b.re_);
        return b;
    }

    static Ball from_long(long v, mpfr_prec_t prec) {
        Ball b(prec);
        int t = mpfr_set_si(b.re_, v, MPFR_RNDN);
        if (t != 0) b.bump_rad(b.re_);
        return b;
    }

    // e^{2 pi i k / m}, certified.
    static Ball root_of_unity(long m, long k, mpfr_prec_t prec) {
        if (m <= 0) throw argument_error("root_of_unity: m must be positive");
        k %= m;
        if (k < 0) k += m;
        Ball b(prec);
        const mpfr_prec_t gp = prec + 64;
        mpfr_t pi, theta;
        mpfr_init2(pi, gp);
        mpfr_init2(theta, gp);
        mpfr_const_pi(pi, MPFR_RNDN);
        mpfr_mul_si(theta, pi, 2 * k, MPFR_RNDN);
        mpfr_div_si(theta, theta, m, MPFR_RNDN);
        mpfr_t s, c;
        mpfr_init2(s, gp);
        mpfr_init2(c, gp);
        mpfr_sin_cos(s, c, theta, MPFR_RNDN);
        mpfr_set(b.re_, c, MPFR_RNDN);
        mpfr_set(b.im_, s, MPFR_RNDN);
        // |values| <= 1; guard-precision trig plus the final rounding stay
        // far below 2^{-prec+2}.
        b.add_rad_2exp(-static_cast<long>(prec) + 2);
        mpfr_clears(pi, theta, s, c, static_cast<mpfr_ptr>(nullptr));
        return b;
    }

    bool is_exact_zero() const {
        return mpfr_zero_p(re_) && mpfr_zero_p(im_) && mpfr_zero_p(rad_);
    }

    friend Ball operator-(const Ball& a) {
        Ball r(a);
        mpfr_neg(r.re_, r.re_, MPFR_RNDN);
        mpfr_neg(r.im_, r.im_, MPFR_RNDN);
        return r;
    }

    friend Ball operator+(const Ball& a, const Ball& b) {
        Ball r(std::max(a.prec_, b.prec_));
        int t1 = mpfr_add(r.re_, a.re_, b.re_, MPFR_RNDN);
        int t2 = mpfr_add(r.im_, a.im_, b.im_, MPFR_RNDN);
        mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
        if (t1 != 0) r.bump_rad(r.re_);
        if (t2 != 0) r.bump_rad(r.im_);
        return r;
    }

    friend Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

    friend Ball operator*(const Ball& a, const Ball& b) {
        Ball r(std::max(a.prec_, b.prec_));
        const mpfr_prec_t gp = r.prec_ + 32;
        mpfr_t t1, t2, re, im;
        mpfr_inits2(gp, t1, t2, re, im, static_cast<mpfr_ptr>(nullptr));
        // center product at guard precision, then one rounding per component
        mpfr_mul(t1, a.re_, b.re_, MPFR_RNDN);
        mpfr_mul(t2, a.im_, b.im_, MPFR_RNDN);
        mpfr_sub(re, t1, t2, MPFR_RNDN);
        mpfr_mul(t1, a.re_, b.im_, MPFR_RNDN);
        mpfr_mul(t2, a.im_, b.re_, MPFR_RNDN);
        mpfr_add(im, t1, t2, MPFR_RNDN);
        int s1 = mpfr_set(r.re_, re, MPFR_RNDN);
        int s2 = mpfr_set(r.im_, im, MPFR_RNDN);
        // |z1 z2 - c1 c2| <= |c1| r2 + |c2| r1 + r1 r2
        mpfr_t ma, mb, acc, term;
        mpfr_inits2(kRadPrec, ma, mb, acc, term, static_cast<mpfr_ptr>(nullptr));
        a.abs_ub(ma);
        b.abs_ub(mb);
        mpfr_mul(acc, ma, b.rad_, MPFR_RNDU);
        mpfr_mul(term, mb, a.rad_, MPFR_RNDU);
        mpfr_add(acc, acc, term, MPFR_RNDU);
        mpfr_mul(term, a.rad_, b.rad_, MPFR_RNDU);
        mpfr_add(acc, acc, term, MPFR_RNDU);
        mpfr_add(r.rad_, r.rad_, acc, MPFR_RNDU);
        // guard-precision arithmetic error is dominated by 3 ulps of the
        // result components at working precision
        r.bump_rad(re);
        r.bump_rad(im);
        if (s1 != 0) r.bump_rad(r.re_);
        if (s2 != 0) r.bump_rad(r.im_);
        mpfr_clears(t1, t2, re, im, ma, mb, acc, term, static_cast<mpfr_ptr>(nullptr));
        return r;
    }

    Ball inverse() const {
        mpfr_t lb;
        mpfr_init2(lb, kRadPrec);
        abs_lb(lb);
        if (mpfr_cmp(lb, rad_) <= 0) {
            mpfr_clear(lb);
            throw indeterminate_error("Ball::inverse: ball may contain zero");
        }
        Ball r(prec_);
        const mpfr_prec_t gp = prec_ + 32;
        mpfr_t n, t, re, im;
        mpfr_inits2(gp, n, t, re, im, static_cast<mpfr_ptr>(nullptr));
        mpfr_sqr(n, re_, MPFR_RNDN);
        mpfr_sqr(t, im_, MPFR_RNDN);
        mpfr_add(n, n, t, MPFR_RNDN);
        mpfr_div(re, re_, n, MPFR_RNDN);
        mpfr_div(im, im_, n, MPFR_RNDN);
        mpfr_neg(im, im, MPFR_RNDN);
        int s1 = mpfr_set(r.re_, re, MPFR_RNDN);
        int s2 = mpfr_set(r.im_, im, MPFR_RNDN);
        // |1/z - 1/c| <= r / (L (L - r)) with L a lower bound on |c|
        mpfr_t den, diff;
        mpfr_inits2(kRadPrec, den, diff, static_cast<mpfr_ptr>(nullptr));
        mpfr_sub(diff, lb, rad_, MPFR_RNDD);
        mpfr_mul(den, lb, diff, MPFR_RNDD);
        mpfr_div(r.rad_, rad_, den, MPFR_RNDU);
        r.bump_rad(re);
        r.bump_rad(im);
        if (s1 != 0) r.bump_rad(r.re_);
        if (s2 != 0) r.bump_rad(r.im_);
        mpfr_clears(n, t, re, im, den, diff, static_cast<mpfr_ptr>(nullptr));
        mpfr_clear(lb);
        return r;
    }

    friend Ball operator/(const Ball& a, const Ball& b) { return a * b.inverse(); }

    // p-th root on the branch continuous at the center whose value is the
    // principal root rotated by e^{2 pi i branch / p}.
    Ball nth_root(unsigned long p, unsigned long branch) const {
        if (p == 0) throw argument_error("nth_root: p must be positive");
        if (mpfr_zero_p(re_) && mpfr_zero_p(im_) && mpfr_zero_p(rad_)) return Ball(prec_);
        mpfr_t lb, ub;
        mpfr_init2(lb, kRadPrec);
        mpfr_init2(ub, kRadPrec);
        abs_lb(lb);
        abs_ub(ub);
        Ball r(prec_);
        if (mpfr_cmp(lb, rad_) <= 0) {
            // disc may contain 0: every p-th root lies within (|c|+r)^{1/p} of 0
            mpfr_t m;
            mpfr_init2(m, kRadPrec);
            mpfr_add(m, ub, rad_, MPFR_RNDU);
            mpfr_rootn_ui(m, m, p, MPFR_RNDU);
            mpfr_set(r.rad_, m, MPFR_RNDU);
            mpfr_clears(m, lb, ub, static_cast<mpfr_ptr>(nullptr));
            return r;
        }
        const mpfr_prec_t gp = prec_ + 64;
        mpfr_t mod, theta, mr, phi, pi, s, c;
        mpfr_inits2(gp, mod, theta, mr, phi, pi, s, c, static_cast<mpfr_ptr>(nullptr));
        mpfr_hypot(mod, re_, im_, MPFR_RNDN);
        mpfr_atan2(theta, im_, re_, MPFR_RNDN);
        mpfr_rootn_ui(mr, mod, p, MPFR_RNDN);
        mpfr_const_pi(pi, MPFR_RNDN);
        mpfr_mul_ui(pi, pi, 2 * branch, MPFR_RNDN);
        mpfr_add(phi, theta, pi, MPFR_RNDN);
        mpfr_div_ui(phi, phi, p, MPFR_RNDN);
        mpfr_sin_cos(s, c, phi, MPFR_RNDN);
        mpfr_mul(c, c, mr, MPFR_RNDN);
        mpfr_mul(s, s, mr, MPFR_RNDN);
        mpfr_set(r.re_, c, MPFR_RNDN);
        mpfr_set(r.im_, s, MPFR_RNDN);
        // propagated: r_in * sup |d/dz z^{1/p}| = r_in * (1/p) h^{(1-p)/p},
        // h a lower bound on min |z| over the disc
        mpfr_t h, num, S;
        mpfr_inits2(kRadPrec, h, num, S, static_cast<mpfr_ptr>(nullptr));
        mpfr_sub(h, lb, rad_, MPFR_RNDD);
        mpfr_rootn_ui(num, h, p, MPFR_RNDU);
        mpfr_div(S, num, h, MPFR_RNDU);
        mpfr_div_ui(S, S, p, MPFR_RNDU);
        mpfr_mul(S, S, rad_, MPFR_RNDU);
        mpfr_add(r.rad_, r.rad_, S, MPFR_RNDU);
        // guard-precision polar path: a few ulps at working precision
        r.bump_rad(c);
        r.bump_rad(c);
        r.bump_rad(s);
        r.bump_rad(s);
        mpfr_clears(mod, theta, mr, phi, pi, s, c, h, num, S, static_cast<mpfr_ptr>(nullptr));
        mpfr_clears(lb, ub, static_cast<mpfr_ptr>(nullptr));
        return r;
    }

    Ball pow_ui(unsigned long e) const {
        Ball acc = from_long(1, prec_);
        Ball b = *this;
        while (e > 0) {
            if (e & 1ul) acc = acc * b;
            if (e > 1) b = b * b;
            e >>= 1;
        }
        return acc;
    }

    // |center| <= result (upward)
    void abs_ub(mpfr_t out) const { mpfr_hypot(out, re_, im_, MPFR_RNDU); }
    // |center| >= result (downward)
    void abs_lb(mpfr_t out) const { mpfr_hypot(out, re_, im_, MPFR_RNDD); }

    // upper bound on |z| over the whole ball
    void abs_total_ub(mpfr_t out) const {
        mpfr_t t;
        mpfr_init2(t, kRadPrec);
        abs_ub(t);
        mpfr_add(out, t, rad_, MPFR_RNDU);
        mpfr_clear(t);
    }

    bool may_contain_zero() const {
        mpfr_t lb;
        mpfr_init2(lb, kRadPrec);
        abs_lb(lb);
        bool res = mpfr_cmp(lb, rad_) <= 0;
        mpfr_clear(lb);
        return res;
    }

    bool definitely_nonzero() const { return !may_contain_zero(); }

    // certified |a - b| > 0
    friend bool disjoint(const Ball& a, const Ball& b) {
        mpfr_t dre, dim, d, rr;
        mpfr_init2(dre, std::max(a.prec_, b.prec_) + 8);
        mpfr_init2(dim, std::max(a.prec_, b.prec_) + 8);
        mpfr_init2(d, kRadPrec);
        mpfr_init2(rr, kRadPrec);
        mpfr_sub(dre, a.re_, b.re_, MPFR_RNDN);
        mpfr_sub(dim, a.im_, b.im_, MPFR_RNDN);
        mpfr_hypot(d, dre, dim, MPFR_RNDD);
        // one rounding each on dre/dim: shave two ulps off the lower bound
        if (!mpfr_zero_p(dre)) {
            mpfr_t u;
            mpfr_init2(u, kRadPrec);
            mpfr_set_ui_2exp(u, 1, mpfr_get_exp(dre) - (std::max(a.prec_, b.prec_) + 8) + 1, MPFR_RNDU);
            mpfr_sub(d, d, u, MPFR_RNDD);
            mpfr_clear(u);
        }
        if (!mpfr_zero_p(dim)) {
            mpfr_t u;
            mpfr_init2(u, kRadPrec);
            mpfr_set_ui_2exp(u, 1, mpfr_get_exp(dim) - (std::max(a.prec_, b.prec_) + 8) + 1, MPFR_RNDU);
            mpfr_sub(d, d, u, MPFR_RNDD);
            mpfr_clear(u);
        }
        mpfr_add(rr, a.rad_, b.rad_, MPFR_RNDU);
        bool res = mpfr_cmp(d, rr) > 0;
        mpfr_clears(dre, dim, d, rr, static_cast<mpfr_ptr>(nullptr));
        return res;
    }

    friend bool overlaps(const Ball& a, const Ball& b) { return !disjoint(a, b); }

    // certified containment of an exact rational point
    bool contains_point(const Rational& re, const Rational& im) const {
        mpfr_t xr, xi, dre, dim, d;
        const mpfr_prec_t gp = prec_ + 64;
        mpfr_inits2(gp, xr, xi, dre, dim, static_cast<mpfr_ptr>(nullptr));
        mpfr_init2(d, kRadPrec);
        int t1 = mpfr_set_q(xr, re.get_mpq_t(), MPFR_RNDN);
        int t2 = mpfr_set_q(xi, im.get_mpq_t(), MPFR_RNDN);
        mpfr_sub(dre, re_, xr, MPFR_RNDA);
        mpfr_sub(dim, im_, xi, MPFR_RNDA);
        mpfr_hypot(d, dre, dim, MPFR_RNDU);
        // rounding of the rational inputs, when inexact
        if (t1 != 0 && !mpfr_zero_p(xr)) {
            mpfr_t u;
            mpfr_init2(u, kRadPrec);
            mpfr_set_ui_2exp(u, 1, mpfr_get_exp(xr) - gp + 1, MPFR_RNDU);
            mpfr_add(d, d, u, MPFR_RNDU);
            mpfr_clear(u);
        }
        if (t2 != 0 && !mpfr_zero_p(xi)) {
            mpfr_t u;
            mpfr_init2(u, kRadPrec);
            mpfr_set_ui_2exp(u, 1, mpfr_get_exp(xi) - gp + 1, MPFR_RNDU);
            mpfr_add(d, d, u, MPFR_RNDU);
            mpfr_clear(u);
        }
        bool res = mpfr_cmp(d, rad_) <= 0;
        mpfr_clears(xr, xi, dre, dim, static_cast<mpfr_ptr>(nullptr));
        mpfr_clear(d);
        return res;
    }

    // radius <= 2^k ?
    bool rad_below_2exp(long k) const {
        if (mpfr_zero_p(rad_)) return true;
        return mpfr_get_exp(rad_) <= k;
    }

    // |ball| <= q (certified)?
    bool abs_leq(const Rational& q) const {
        mpfr_t t, b;
        mpfr_init2(t, kRadPrec);
        mpfr_init2(b, 96);
        abs_total_ub(t);
        mpfr_set_q(b, q.get_mpq_t(), MPFR_RNDD);
        bool res = mpfr_cmp(t, b) <= 0;
        mpfr_clear(t);
        mpfr_clear(b);
        return res;
    }

    double mid_re_d() const { return mpfr_get_d(re_, MPFR_RNDN); }
    double mid_im_d() const { return mpfr_get_d(im_, MPFR_RNDN); }
    double rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }

    // distance |center(a) - center(b)| rounded up, as double
    friend double center_dist_d(const Ball& a, const Ball& b) {
        mpfr_t dre, dim, d;
        mpfr_inits2(std::max(a.prec_, b.prec_), dre, dim, static_cast<mpfr_ptr>(nullptr));
        mpfr_init2(d, kRadPrec);
        mpfr_sub(dre, a.re_, b.re_, MPFR_RNDA);
        mpfr_sub(dim, a.im_, b.im_, MPFR_RNDA);
        mpfr_hypot(d, dre, dim, MPFR_RNDU);
        double res = mpfr_get_d(d, MPFR_RNDU);
        mpfr_clears(dre, dim, static_cast<mpfr_ptr>(nullptr));
        mpfr_clear(d);
        return res;
    }

    std::string str(std::size_t digits = 20) const {
        mpfr_exp_t e;
        char* rs = mpfr_get_str(nullptr, &e, 10, digits, re_, MPFR_RNDN);
        char* is = mpfr_get_str(nullptr, &e, 10, digits, im_, MPFR_RNDN);
        std::string out = std::to_string(mid_re_d()) + (mid_im_d() < 0 ? "" : "+") +
                          std::to_string(mid_im_d()) + "i (rad<=" + std::to_string(rad_d()) + ")";
        mpfr_free_str(rs);
        mpfr_free_str(is);
        return out;
    }

    // raw access for the root refiner
    mpfr_ptr re() { return re_; }
    mpfr_ptr im() { return im_; }
    mpfr_srcptr re() const { return re_; }
    mpfr_srcptr im() const { return im_; }
    void set_rad_2exp(long k) { mpfr_set_ui_2exp(rad_, 1, k, MPFR_RNDU); }
    void clear_rad() { mpfr_set_zero(rad_, 1); }
    void add_rad_2exp(long k) {
        mpfr_t u;
        mpfr_init2(u, kRadPrec);
        mpfr_set_ui_2exp(u, 1, k, MPFR_RNDU);
        mpfr_add(rad_, rad_, u, MPFR_RNDU);
        mpfr_clear(u);
    }
    void add_rad(mpfr_srcptr m) { mpfr_add(rad_, rad_, m, MPFR_RNDU); }
    mpfr_srcptr rad() const { return rad_; }

private:
    // add one ulp of x (at working precision) to the radius
    void bump_rad(mpfr_srcptr x) {
        if (mpfr_zero_p(x)) return;
        add_rad_2exp(mpfr_get_exp(x) - prec_);
    }

    mpfr_t re_, im_, rad_;
    mpfr_prec_t prec_;
};

template <>
struct coeff_traits<Ball> {
    static constexpr bool is_exact = false;
    static Ball zero_like(const Ball& s) { return Ball(s.prec()); }
    static Ball one_like(const Ball& s) { return Ball::from_long(1, s.prec()); }
    static bool is_zero(const Ball& b) { return b.is_exact_zero(); }
};

// ---- dense polynomial helpers over balls (constant term first) ----

using BallPoly = std::vector<Ball>;

inline BallPoly ballpoly_one(mpfr_prec_t prec) { return {Ball::from_long(1, prec)}; }

// p(t) * (t - c)
inline BallPoly ballpoly_mul_linear(const BallPoly& p, const Ball& c) {
    BallPoly out;
    out.reserve(p.size() + 1);
    out.push_back(-(c * p[0]));
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i - 1] - c * p[i]);
    out.push_back(p.back());
    return out;
}

inline BallPoly ballpoly_mul(const BallPoly& a, const BallPoly& b) {
    const mpfr_prec_t prec = std::max(a[0].prec(), b[0].prec());
    BallPoly out(a.size() + b.size() - 1, Ball(prec));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

inline Ball ballpoly_eval(const BallPoly& p, const Ball& x) {
    Ball acc = p.back();
    for (auto it = p.rbegin() + 1; it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace resolvent

#endif
