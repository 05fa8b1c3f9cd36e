#include "resolvent/irreducible.hpp"

#include <vector>

#include "resolvent/ball.hpp"
#include "resolvent/roots.hpp"

namespace resolvent {

namespace {

enum class CoeffClass { Roundable, Excluded, Undecided };

// Distance from the ball to the nearest integer point on the real axis
// decides membership: certainly-off-the-grid rejects the subset, small radius
// lets us round.
CoeffClass classify(const Ball& b, Integer& rounded) {
    mpfr_t k, dre, dim, dist;
    mpfr_init2(k, mpfr_get_prec(b.re()));
    mpfr_init2(dre, 64);
    mpfr_init2(dim, 64);
    mpfr_init2(dist, 32);
    mpfr_round(k, b.re());
    mpfr_sub(dre, b.re(), k, MPFR_RNDZ);  // toward zero: lower magnitude
    mpfr_abs(dre, dre, MPFR_RNDZ);
    mpfr_abs(dim, b.im(), MPFR_RNDZ);
    mpfr_hypot(dist, dre, dim, MPFR_RNDD);

    CoeffClass out;
    if (mpfr_cmp(dist, b.rad()) > 0) {
        out = CoeffClass::Excluded;
    } else if (mpfr_cmp_d(b.rad(), 0.25) < 0) {
        mpz_t z;
        mpz_init(z);
        mpfr_get_z(z, k, MPFR_RNDN);
        rounded = Integer(z);
        mpz_clear(z);
        out = CoeffClass::Roundable;
    } else {
        out = CoeffClass::Undecided;
    }
    mpfr_clears(k, dre, dim, dist, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace

IrreducibilityResult is_irreducible_over_Q(const UniPoly<Rational>& P) {
    const long n = P.degree();
    if (n < 1) throw argument_error("is_irreducible_over_Q: degree must be >= 1");
    if (n > 24) throw unsupported_error("is_irreducible_over_Q: degree cap 24 exceeded");
    if (!P.is_monic()) throw argument_error("is_irreducible_over_Q: polynomial must be monic");
    if (!is_integer_poly(P)) throw argument_error("is_irreducible_over_Q: integer coefficients required");
    {
        auto g = poly_gcd(P, P.derivative());
        if (g.degree() > 0)
            throw argument_error("is_irreducible_over_Q: input not square-free; repeated factor " +
                                 poly_to_string(g));
    }
    if (n == 1) return {true, std::nullopt};

    for (mpfr_prec_t w = 128; w <= 8192; w *= 2) {
        std::vector<Ball> roots = roots_certified(P, w);
        bool any_undecided = false;

        // subsets in first-found-smallest order: size ascending, lexicographic
        // within a size
        for (long size = 1; size <= n / 2; ++size) {
            std::vector<int> idx(static_cast<std::size_t>(size));
            std::optional<UniPoly<Rational>> found;
            auto rec = [&](auto&& self, int start, int depth) -> bool {
                if (found) return true;
                if (depth == size) {
                    BallPoly g = ballpoly_one(w);
                    for (int i = 0; i < depth; ++i)
                        g = ballpoly_mul_linear(g, roots[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
                    std::vector<Rational> coeffs;
                    coeffs.reserve(g.size());
                    bool rejected = false, undecided = false;
                    for (const auto& c : g) {
                        Integer r;
                        switch (classify(c, r)) {
                            case CoeffClass::Excluded: rejected = true; break;
                            case CoeffClass::Undecided: undecided = true; break;
                            case CoeffClass::Roundable: coeffs.emplace_back(r); break;
                        }
                        if (rejected) break;
                    }
                    if (rejected) return false;
                    if (undecided) {
                        any_undecided = true;
                        return false;
                    }
                    UniPoly<Rational> cand(std::move(coeffs));
                    auto [q, rem] = poly_divide(P, cand);
                    if (rem.is_zero()) {
                        found = cand;
                        return true;
                    }
                    // a rounded candidate that fails exact division is not yet
                    // excluded; keep refining
                    any_undecided = true;
                    return false;
                }
                for (int v = start; v <= static_cast<int>(n) - (size - depth); ++v) {
                    idx[static_cast<std::size_t>(depth)] = v;
                    if (self(self, v + 1, depth + 1)) return true;
                }
                return false;
            };
            rec(rec, 0, 0);
            if (found) return {false, found};
        }
        if (!any_undecided) return {true, std::nullopt};
    }
    throw indeterminate_error("is_irreducible_over_Q: undecided after precision budget");
}

}  // namespace resolvent
