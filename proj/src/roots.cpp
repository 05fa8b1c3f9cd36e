#include "resolvent/roots.hpp"

#include <cmath>
#include <functional>

namespace resolvent {

namespace {

// approximate complex point arithmetic: Ball centers with the radius dropped
Ball approx(Ball b) {
    b.clear_rad();
    return b;
}

Ball approx_mul(const Ball& a, const Ball& b) { return approx(a * b); }
Ball approx_sub(const Ball& a, const Ball& b) { return approx(a - b); }
Ball approx_add(const Ball& a, const Ball& b) { return approx(a + b); }

Ball approx_div(const Ball& a, const Ball& b) {
    if (mpfr_zero_p(b.re()) && mpfr_zero_p(b.im()))
        throw indeterminate_error("roots: exact zero denominator during iteration");
    return approx(a * approx(b).inverse());
}

Ball horner(const std::vector<Ball>& coeffs, const Ball& x) {
    Ball acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = approx_add(approx_mul(acc, x), *it);
    return acc;
}

double abs_d(const Ball& b) {
    return std::hypot(b.mid_re_d(), b.mid_im_d());
}

// One certification pass: exact coefficient balls at precision w, Weierstrass
// corrections, inclusion radius n*|W_i|.
std::vector<Ball> certify(const std::vector<Ball>& exact_coeffs, const std::vector<Ball>& pts) {
    const std::size_t n = pts.size();
    std::vector<Ball> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Ball num = ballpoly_eval(exact_coeffs, pts[i]);
        Ball den = Ball::from_long(1, pts[i].prec());
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            den = den * (pts[i] - pts[j]);
        }
        Ball w = num / den;  // throws when den may contain zero
        mpfr_t bound;
        mpfr_init2(bound, 32);
        w.abs_total_ub(bound);
        mpfr_mul_ui(bound, bound, static_cast<unsigned long>(n), MPFR_RNDU);
        Ball enclosure = pts[i];
        enclosure.add_rad(bound);
        mpfr_clear(bound);
        out.push_back(enclosure);
    }
    return out;
}

using CoeffFn = std::function<std::vector<Ball>(mpfr_prec_t)>;  // monic coefficient balls

std::vector<Ball> roots_impl(long degree, const CoeffFn& make_coeffs, mpfr_prec_t bits) {
    const std::size_t n = static_cast<std::size_t>(degree);
    if (degree <= 0) throw argument_error("roots_certified: degree must be >= 1");

    const long rad_target = -static_cast<long>(bits);
    double angle_offset = 0.7;

    for (mpfr_prec_t w = bits + 64; w <= 16 * (bits + 64); w *= 2) {
        std::vector<Ball> coeffs = make_coeffs(w);

        // starting circle radius 1 + max |coeff|
        double R = 1.0;
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
            mpfr_t t;
            mpfr_init2(t, 32);
            coeffs[i].abs_total_ub(t);
            R = std::max(R, 1.0 + mpfr_get_d(t, MPFR_RNDU));
            mpfr_clear(t);
        }

        std::vector<Ball> pts;
        pts.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            double theta = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n) + angle_offset;
            Ball p(w);
            mpfr_set_d(p.re(), R * std::cos(theta), MPFR_RNDN);
            mpfr_set_d(p.im(), R * std::sin(theta), MPFR_RNDN);
            pts.push_back(std::move(p));
        }

        // derivative coefficients (approximate)
        std::vector<Ball> dcoeffs;
        for (std::size_t i = 1; i < coeffs.size(); ++i) {
            Ball c = coeffs[i];
            dcoeffs.push_back(approx(Ball::from_long(static_cast<long>(i), w) * c));
        }

        bool iteration_ok = true;
        const long sweeps = 64 + static_cast<long>(w) / 2;
        try {
            for (long sweep = 0; sweep < sweeps; ++sweep) {
                double maxcorr = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    Ball p = horner(coeffs, pts[i]);
                    Ball dp = horner(dcoeffs, pts[i]);
                    // Aberth: z <- z - u / (1 - u * S), u = P/P', S = sum 1/(z_i - z_j)
                    Ball u = approx_div(p, dp);
                    Ball S(w);
                    for (std::size_t j = 0; j < n; ++j) {
                        if (j == i) continue;
                        S = approx_add(S, approx_div(Ball::from_long(1, w), approx_sub(pts[i], pts[j])));
                    }
                    Ball corr = approx_div(u, approx_sub(Ball::from_long(1, w), approx_mul(u, S)));
                    pts[i] = approx_sub(pts[i], corr);
                    maxcorr = std::max(maxcorr, abs_d(corr));
                }
                if (maxcorr < std::ldexp(R, -static_cast<int>(w) + 8) || maxcorr == 0.0) break;
            }
        } catch (const indeterminate_error&) {
            iteration_ok = false;
        }

        if (iteration_ok) {
            try {
                std::vector<Ball> balls = certify(coeffs, pts);
                bool good = true;
                for (const auto& b : balls)
                    if (!b.rad_below_2exp(rad_target)) good = false;
                for (std::size_t i = 0; i < n && good; ++i)
                    for (std::size_t j = i + 1; j < n && good; ++j)
                        if (!disjoint(balls[i], balls[j])) good = false;
                if (good) return balls;
            } catch (const indeterminate_error&) {
                // coincident points: fall through and retry
            }
        }
        angle_offset += 0.125;  // deterministic restart schedule
    }
    throw indeterminate_error("roots_certified: could not certify within the precision budget");
}

void require_square_free(const UniPoly<Rational>& P) {
    auto g = poly_gcd(P, P.derivative());
    if (g.degree() > 0)
        throw argument_error("roots_certified: input not square-free; repeated factor " + poly_to_string(g));
}

void require_square_free(const UniPoly<CycElem>& P) {
    auto g = poly_gcd(P, P.derivative());
    if (g.degree() > 0) throw argument_error("roots_certified: input not square-free over Q(zeta_m)");
}

}  // namespace

std::vector<Ball> roots_certified(const UniPoly<Rational>& P, mpfr_prec_t bits) {
    if (P.degree() < 1) throw argument_error("roots_certified: degree must be >= 1");
    require_square_free(P);
    UniPoly<Rational> M = P.monic();
    CoeffFn fn = [&M](mpfr_prec_t w) {
        std::vector<Ball> out;
        for (const auto& c : M.coeffs()) out.push_back(Ball::from_rational(c, w));
        return out;
    };
    return roots_impl(P.degree(), fn, bits);
}

std::vector<Ball> roots_certified(const UniPoly<CycElem>& P, mpfr_prec_t bits) {
    if (P.degree() < 1) throw argument_error("roots_certified: degree must be >= 1");
    require_square_free(P);
    UniPoly<CycElem> M = P.monic();
    CoeffFn fn = [&M](mpfr_prec_t w) {
        std::vector<Ball> out;
        for (const auto& c : M.coeffs()) out.push_back(c.to_ball(w));
        return out;
    };
    return roots_impl(P.degree(), fn, bits);
}

std::vector<Ball> refine_roots(const UniPoly<Rational>& P, const std::vector<Ball>& previous,
                               mpfr_prec_t bits) {
    std::vector<Ball> fresh = roots_certified(P, bits);
    std::vector<Ball> out;
    out.reserve(previous.size());
    std::vector<bool> used(fresh.size(), false);
    for (const auto& prev : previous) {
        int match = -1;
        for (std::size_t j = 0; j < fresh.size(); ++j) {
            if (used[j] || disjoint(prev, fresh[j])) continue;
            if (match >= 0) throw indeterminate_error("refine_roots: ambiguous match");
            match = static_cast<int>(j);
        }
        if (match < 0) throw indeterminate_error("refine_roots: lost a root during refinement");
        used[static_cast<std::size_t>(match)] = true;
        out.push_back(fresh[static_cast<std::size_t>(match)]);
    }
    return out;
}

}  // namespace resolvent
