#ifndef RESOLVENT_MULTIPOLY_HPP
#define RESOLVENT_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resolvent/cyclotomic.hpp"
#include "resolvent/partition.hpp"
#include "resolvent/perm.hpp"
#include "resolvent/rational.hpp"

namespace resolvent {

// Graded lexicographic order on exponent vectors (total degree first).
struct GrlexLess {
    bool operator()(const std::vector<long>& a, const std::vector<long>& b) const {
        long da = 0, db = 0;
        for (long x : a) da += x;
        for (long x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial in x_1..x_n. No zero coefficients stored.
template <class T>
class MultiPoly {
public:
    using TermMap = std::map<std::vector<long>, T, GrlexLess>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const T& c) {
        MultiPoly f(nvars);
        f.add_term(std::vector<long>(static_cast<std::size_t>(nvars), 0), c);
        return f;
    }

    static MultiPoly variable(int nvars, int i, const T& one) {
        if (i < 0 || i >= nvars) throw argument_error("MultiPoly::variable: index out of range");
        MultiPoly f(nvars);
        std::vector<long> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        f.add_term(std::move(e), one);
        return f;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<long> exps, const T& c) {
        if (static_cast<int>(exps.size()) != nvars_) throw argument_error("MultiPoly: bad exponent length");
        if (coeff_traits<T>::is_zero(c)) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exps), c);
        } else {
            it->second = it->second + c;
            if (coeff_traits<T>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_vars(a, b);
        MultiPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    MultiPoly operator-() const {
        MultiPoly out(nvars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_vars(a, b);
        MultiPoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<long> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }

    friend MultiPoly operator*(const T& s, const MultiPoly& a) {
        MultiPoly out(a.nvars_);
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // leading term in graded lex
    std::pair<std::vector<long>, T> leading_term() const {
        if (terms_.empty()) throw argument_error("leading_term of zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    MultiPoly pow(unsigned long k, const T& one) const {
        MultiPoly acc = constant(nvars_, one);
        MultiPoly b = *this;
        while (k > 0) {
            if (k & 1ul) acc = acc * b;
            if (k > 1) b = b * b;
            k >>= 1;
        }
        return acc;
    }

    // substitution of values; conv maps coefficients into the value domain
    template <class V, class Conv>
    V eval(const std::vector<V>& values, Conv conv) const {
        if (static_cast<int>(values.size()) != nvars_) throw argument_error("eval: wrong number of values");
        std::optional<V> acc;
        for (const auto& [e, c] : terms_) {
            V term = conv(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (long k = 0; k < e[i]; ++k) term = term * values[i];
            acc = acc ? *acc + term : term;
        }
        if (!acc) {
            // zero polynomial: produce a zero of the value domain
            V z = conv(T{});
            return z - z;
        }
        return *acc;
    }

private:
    static void check_vars(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ != b.nvars_) throw argument_error("MultiPoly: nvars mismatch");
    }

    int nvars_;
    TermMap terms_;
};

// sigma Phi = Phi(x_{sigma_1}, ..., x_{sigma_n}): substitutes x_i -> x_{sigma_i},
// a left action: apply_perm(apply_perm(f, tau), sigma) = apply_perm(f, sigma tau).
template <class T>
MultiPoly<T> apply_perm(const MultiPoly<T>& f, const Perm& sigma) {
    if (sigma.degree() != f.nvars()) throw argument_error("apply_perm: degree mismatch");
    MultiPoly<T> out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        std::vector<long> q(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) q[static_cast<std::size_t>(sigma(static_cast<int>(i)))] = e[i];
        out.add_term(std::move(q), c);
    }
    return out;
}

// Symmetry check by adjacent transpositions; returns a witness transposition
// (i, i+1), 0-based i, when not symmetric.
template <class T>
std::optional<int> symmetry_witness(const MultiPoly<T>& f) {
    const int n = f.nvars();
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = j;
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
        if (apply_perm(f, Perm(v)) != f) return i;
    }
    return std::nullopt;
}

template <class T>
bool is_symmetric(const MultiPoly<T>& f) {
    return !symmetry_witness(f).has_value();
}

// k-th elementary symmetric polynomial in nvars variables; e_0 = 1.
template <class T>
MultiPoly<T> elementary_sym(long k, int nvars, const T& one) {
    if (k < 0 || k > nvars) throw argument_error("elementary_sym: need 0 <= k <= nvars");
    MultiPoly<T> out(nvars);
    std::vector<int> idx(static_cast<std::size_t>(k));
    // iterate k-subsets of {0..nvars-1}
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            std::vector<long> e(static_cast<std::size_t>(nvars), 0);
            for (int i = 0; i < depth; ++i) e[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = 1;
            out.add_term(std::move(e), one);
            return;
        }
        for (int v = start; v < nvars; ++v) {
            idx[static_cast<std::size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Monomial symmetric polynomial m_lambda.
template <class T>
MultiPoly<T> monomial_sym(const Partition& lambda, int nvars, const T& one) {
    if (static_cast<int>(lambda.size()) > nvars)
        throw argument_error("monomial_sym: more parts than variables");
    MultiPoly<T> out(nvars);
    std::vector<long> exps(static_cast<std::size_t>(nvars), 0);
    for (std::size_t i = 0; i < lambda.size(); ++i) exps[i] = lambda[i];
    std::sort(exps.begin(), exps.end());
    do {
        out.add_term(exps, one);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

// e_mu = e_{mu_1} ... e_{mu_h} expanded and collected by shape; the
// coefficients count 0,1-matrices with row sums mu and column sums lambda.
std::map<Partition, long> e_product_expand(const Partition& mu, int nvars);

// Writes a symmetric f as a polynomial g(e_1, ..., e_n): the result is a
// MultiPoly in n variables whose i-th variable stands for e_{i+1}. Repeatedly
// strips the graded-lex leading monomial x^lambda by subtracting
// (lead coeff) * e_{lambda'}; terminates by the dominance descent.
template <class T>
MultiPoly<T> decompose_in_elementary(const MultiPoly<T>& f, const T& one) {
    if (auto w = symmetry_witness(f))
        throw argument_error("decompose_in_elementary: input not symmetric; witness transposition (" +
                             std::to_string(*w + 1) + "," + std::to_string(*w + 2) + ")");
    const int n = f.nvars();
    std::vector<MultiPoly<T>> e_cache;  // e_1..e_n
    for (long k = 1; k <= n; ++k) e_cache.push_back(elementary_sym<T>(k, n, one));

    MultiPoly<T> out(n);
    MultiPoly<T> rem = f;
    while (!rem.is_zero()) {
        auto [exps, c] = rem.leading_term();
        Partition lambda = shape_of(exps);
        // the graded-lex leading exponent of a symmetric polynomial is
        // weakly decreasing
        for (std::size_t i = 0; i + 1 < exps.size(); ++i)
            if (exps[i] < exps[i + 1]) throw std::logic_error("decompose: leading exponent not a shape");
        Partition mu = conjugate(lambda);
        MultiPoly<T> prod = MultiPoly<T>::constant(n, c);
        std::vector<long> evar_exps(static_cast<std::size_t>(n), 0);
        for (long part : mu) {
            if (part > n) throw std::logic_error("decompose: conjugate part exceeds variable count");
            prod = prod * e_cache[static_cast<std::size_t>(part - 1)];
            evar_exps[static_cast<std::size_t>(part - 1)] += 1;
        }
        out.add_term(std::move(evar_exps), c);
        rem = rem - prod;
    }
    return out;
}

// Substitutes the expanded e_k back into a decomposition (inverse of
// decompose_in_elementary).
template <class T>
MultiPoly<T> expand_elementary_form(const MultiPoly<T>& g, int nvars, const T& one) {
    std::vector<MultiPoly<T>> e_cache;
    for (long k = 1; k <= nvars; ++k) e_cache.push_back(elementary_sym<T>(k, nvars, one));
    MultiPoly<T> out(nvars);
    for (const auto& [exps, c] : g.terms()) {
        MultiPoly<T> term = MultiPoly<T>::constant(nvars, c);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) term = term * e_cache[i].pow(static_cast<unsigned long>(exps[i]), one);
        out = out + term;
    }
    return out;
}

// Exact scan of S_n for {sigma : sigma f = f}; degree guard n <= 6.
template <class T>
PermGroup symbolic_stabilizer(const MultiPoly<T>& f) {
    const int n = f.nvars();
    if (n > 6) throw unsupported_error("symbolic_stabilizer: nvars > 6");
    std::vector<Perm> fixing;
    const PermGroup sn = PermGroup::symmetric(n);
    for (const auto& sigma : sn.elements())
        if (apply_perm(f, sigma) == f) fixing.push_back(sigma);
    return group_from_sorted(n, std::move(fixing));
}

// Display with variable names x1..xn (or given names).
template <class T, class Fmt>
std::string multipoly_to_string(const MultiPoly<T>& f, Fmt coeff_str, const std::string& stem = "x") {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        std::string term = coeff_str(it->second);
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            term += "*" + stem + std::to_string(i + 1);
            if (it->first[i] > 1) term += "^" + std::to_string(it->first[i]);
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

}  // namespace resolvent

#endif
