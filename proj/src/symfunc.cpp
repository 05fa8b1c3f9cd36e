#include "resolvent/multipoly.hpp"

namespace resolvent {

std::map<Partition, long> e_product_expand(const Partition& mu, int nvars) {
    if (static_cast<int>(mu.size()) > nvars)
        throw argument_error("e_product_expand: not enough variables to be faithful");
    MultiPoly<Rational> prod = MultiPoly<Rational>::constant(nvars, Rational(1));
    for (long part : mu) prod = prod * elementary_sym<Rational>(part, nvars, Rational(1));
    std::map<Partition, long> out;
    for (const auto& [exps, c] : prod.terms()) {
        // collect by shape: each shape is recorded at its weakly decreasing
        // representative
        std::vector<long> sorted(exps);
        std::sort(sorted.rbegin(), sorted.rend());
        if (sorted != exps) continue;
        if (!is_integer(c) || !c.get_num().fits_slong_p())
            throw std::logic_error("e_product_expand: unexpected coefficient");
        out[shape_of(exps)] = c.get_num().get_si();
    }
    return out;
}

}  // namespace resolvent
