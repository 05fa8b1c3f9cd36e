#ifndef RESOLVENT_UNIPOLY_HPP
#define RESOLVENT_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "resolvent/errors.hpp"
#include "resolvent/rational.hpp"

namespace resolvent {

// Per-domain hooks for the generic polynomial code. Exact domains (Rational,
// CycElem) trim trailing zeros and support division/gcd; inexact ones (Ball)
// only get the ring operations.
template <class T>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

// Dense univariate polynomial, constant term first. The zero polynomial has an
// empty coefficient vector and degree() == -1 (the "-inf" sentinel).
template <class T>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const T& v) { return UniPoly(std::vector<T>{v}); }

    // c * t^k
    static UniPoly monomial(const T& c, std::size_t k) {
        std::vector<T> v(k + 1, coeff_traits<T>::zero_like(c));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const T& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<T>& coeffs() const { return c_; }

    const T& leading() const {
        if (c_.empty()) throw argument_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    T coeff_or_zero(std::size_t i, const T& like) const {
        return i < c_.size() ? c_[i] : coeff_traits<T>::zero_like(like);
    }

    bool is_monic() const {
        return !c_.empty() && c_.back() == coeff_traits<T>::one_like(c_.back());
    }

    UniPoly operator-() const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(-x);
        return UniPoly(std::move(v));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<T> v;
        const auto n = std::max(a.c_.size(), b.c_.size());
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                v.push_back(a.c_[i] + b.c_[i]);
            else if (i < a.c_.size())
                v.push_back(a.c_[i]);
            else
                v.push_back(b.c_[i]);
        }
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        const T z = coeff_traits<T>::zero_like(a.c_.front());
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, z);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const T& s, const UniPoly& a) {
        std::vector<T> v;
        v.reserve(a.c_.size());
        for (const auto& x : a.c_) v.push_back(s * x);
        return UniPoly(std::move(v));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<T> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            T k = coeff_traits<T>::one_like(c_[i]);
            T acc = coeff_traits<T>::zero_like(c_[i]);
            for (std::size_t j = 0; j < i; ++j) acc = acc + k;
            v.push_back(acc * c_[i]);
        }
        return UniPoly(std::move(v));
    }

    // Horner evaluation in a possibly different domain; conv maps coefficients
    // into the point's domain.
    template <class P, class Conv>
    P eval_with(const P& x, Conv conv) const {
        if (c_.empty()) return x - x;  // zero of the point domain
        P acc = conv(c_.back());
        for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) acc = acc * x + conv(*it);
        return acc;
    }

    T eval(const T& x) const {
        return eval_with<T>(x, [](const T& c) { return c; });
    }

    UniPoly monic() const {
        if (is_zero()) throw argument_error("monic of zero polynomial");
        if (is_monic()) return *this;
        const T inv = coeff_traits<T>::one_like(leading()) / leading();
        return inv * *this;
    }

private:
    void trim() {
        if constexpr (coeff_traits<T>::is_exact) {
            while (!c_.empty() && coeff_traits<T>::is_zero(c_.back())) c_.pop_back();
        }
    }

    std::vector<T> c_;
};

// Division with remainder by the leading-term recursion: A = B*Q + R with
// deg R < deg B. Exact over a coefficient field.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> poly_divide(const UniPoly<T>& A, const UniPoly<T>& B) {
    static_assert(coeff_traits<T>::is_exact, "division requires an exact coefficient field");
    if (B.is_zero()) throw argument_error("poly_divide: zero divisor");
    const T one = coeff_traits<T>::one_like(B.leading());
    const T zero = coeff_traits<T>::zero_like(B.leading());
    UniPoly<T> R = A;
    std::vector<T> q;
    if (A.degree() >= B.degree()) q.assign(static_cast<std::size_t>(A.degree() - B.degree()) + 1, zero);
    while (!R.is_zero() && R.degree() >= B.degree()) {
        const std::size_t k = static_cast<std::size_t>(R.degree() - B.degree());
        const T c = R.leading() / B.leading();
        q[k] = q[k] + c;
        R = R - UniPoly<T>::monomial(c, k) * B;
    }
    return {UniPoly<T>(std::move(q)), R};
}

template <class T>
struct ExtendedGcd {
    UniPoly<T> gcd;  // made monic
    UniPoly<T> p, q; // scaled so that A = gcd * p and B = gcd * q exactly
    // Raw window values of the Berlekamp recursion, for the identity
    // q_n p_{n-1} - p_n q_{n-1} = (-1)^n.
    UniPoly<T> p_raw, q_raw, p_prev, q_prev;
    UniPoly<T> raw_lead;  // leading coefficient of r_{n-1}, as a constant poly
    long steps = 0;       // n: first index with r_n = 0

    // s*A + t*B = gcd (monic); uses A q_k - B p_k = (-1)^k r_k at k = n-1.
    std::pair<UniPoly<T>, UniPoly<T>> bezout() const {
        const T lead = raw_lead.leading();
        const T one = coeff_traits<T>::one_like(lead);
        T sign = (steps % 2 == 0) ? -one : one;  // (-1)^{n-1}
        const T inv = one / lead;
        return {(sign * inv) * q_prev, (-sign * inv) * p_prev};
    }
};

// Berlekamp's extended Euclidean recursions (constant-size sliding window):
//   r_{k-2} = a_k r_{k-1} + r_k,  p_k = a_k p_{k-1} + p_{k-2},
//   q_k = a_k q_{k-1} + q_{k-2}
// seeded with r_{-2}=A, r_{-1}=B, p_{-2}=0, p_{-1}=1, q_{-2}=1, q_{-1}=0.
// Stops at the first r_n = 0; gcd = r_{n-1}.
template <class T>
ExtendedGcd<T> extended_gcd(const UniPoly<T>& A, const UniPoly<T>& B) {
    if (A.is_zero() && B.is_zero()) throw argument_error("extended_gcd: both inputs zero");
    ExtendedGcd<T> out;
    const T sample = A.is_zero() ? B.leading() : A.leading();
    const T one = coeff_traits<T>::one_like(sample);
    const UniPoly<T> One = UniPoly<T>::constant(one);

    if (B.is_zero()) {
        out.gcd = A.monic();
        out.p = UniPoly<T>::constant(A.leading());
        out.q = UniPoly<T>();
        out.p_raw = One;
        out.q_raw = UniPoly<T>();
        out.p_prev = UniPoly<T>();
        out.q_prev = One;
        out.raw_lead = UniPoly<T>::constant(A.leading());
        out.steps = 0;
        return out;
    }

    UniPoly<T> r2 = A, r1 = B;            // r_{k-2}, r_{k-1}
    UniPoly<T> p2, p1 = One;              // p_{k-2}, p_{k-1}
    UniPoly<T> q2 = One, q1;              // q_{k-2}, q_{k-1}
    long n = 0;
    for (;;) {
        auto [a, r] = poly_divide(r2, r1);
        UniPoly<T> p = a * p1 + p2;
        UniPoly<T> q = a * q1 + q2;
        if (r.is_zero()) {
            const T lead = r1.leading();
            out.gcd = r1.monic();
            out.p = UniPoly<T>::constant(lead) * p;
            out.q = UniPoly<T>::constant(lead) * q;
            out.p_raw = p;
            out.q_raw = q;
            out.p_prev = p1;
            out.q_prev = q1;
            out.raw_lead = UniPoly<T>::constant(lead);
            out.steps = n;
            return out;
        }
        r2 = std::move(r1);
        r1 = std::move(r);
        p2 = std::move(p1);
        p1 = std::move(p);
        q2 = std::move(q1);
        q1 = std::move(q);
        ++n;
    }
}

template <class T>
UniPoly<T> poly_gcd(const UniPoly<T>& A, const UniPoly<T>& B) {
    if (B.is_zero()) return A.is_zero() ? A : A.monic();
    if (A.is_zero()) return B.monic();
    return A.degree() >= B.degree() ? extended_gcd(A, B).gcd : extended_gcd(B, A).gcd;
}

namespace detail {

// Determinant by Gaussian elimination over a field.
template <class T>
T field_det(std::vector<std::vector<T>> M, const T& one, const T& zero) {
    const std::size_t n = M.size();
    T det = one;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == zero) ++piv;
        if (piv == n) return zero;
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det = det * M[col][col];
        const T inv = one / M[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (M[row][col] == zero) continue;
            const T f = M[row][col] * inv;
            for (std::size_t j = col; j < n; ++j) M[row][j] = M[row][j] - f * M[col][j];
        }
    }
    return det;
}

}  // namespace detail

// Sylvester-matrix resultant, rows of P's coefficients (constant term first)
// stacked over rows of Q's. Equals (-1)^{nm} lc(P)^n prod_i Q(x_i) over the
// roots x_i of P.
template <class T>
T resultant(const UniPoly<T>& P, const UniPoly<T>& Q) {
    if (P.degree() < 1 || Q.degree() < 1) throw argument_error("resultant: degrees must be >= 1");
    const std::size_t m = static_cast<std::size_t>(P.degree());
    const std::size_t n = static_cast<std::size_t>(Q.degree());
    const T zero = coeff_traits<T>::zero_like(P.leading());
    const T one = coeff_traits<T>::one_like(P.leading());
    std::vector<std::vector<T>> M(m + n, std::vector<T>(m + n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) M[i][i + j] = P[j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) M[n + i][i + j] = Q[j];
    return detail::field_det(std::move(M), one, zero);
}

template <class T>
struct DiscriminantResult {
    T res;       // R[P, P']
    T delta_sq;  // prod_{i<j} (x_i - x_j)^2
};

// delta_sq = (-1)^{m(m-1)/2} R[P,P'] / lc^{2m-1}.
template <class T>
DiscriminantResult<T> discriminant(const UniPoly<T>& P) {
    if (P.degree() < 2) throw argument_error("discriminant: degree must be >= 2");
    const long m = P.degree();
    DiscriminantResult<T> out{resultant(P, P.derivative()), coeff_traits<T>::zero_like(P.leading())};
    const T one = coeff_traits<T>::one_like(P.leading());
    T lcpow = one;
    for (long i = 0; i < 2 * m - 1; ++i) lcpow = lcpow * P.leading();
    T d = out.res / lcpow;
    if ((m * (m - 1) / 2) % 2 != 0) d = -d;
    out.delta_sq = d;
    return out;
}

template <class T>
UniPoly<T> poly_pow(const UniPoly<T>& base, unsigned long e) {
    if (base.is_zero() && e == 0) throw argument_error("poly_pow: 0^0");
    UniPoly<T> acc, b = base;
    bool started = false;
    while (e > 0) {
        if (e & 1ul) {
            acc = started ? acc * b : b;
            started = true;
        }
        b = b * b;
        e >>= 1;
    }
    if (!started) {
        const T one = coeff_traits<T>::one_like(base.is_zero() ? T() : base.leading());
        return UniPoly<T>::constant(one);
    }
    return acc;
}

// f(g(t))
template <class T>
UniPoly<T> poly_compose(const UniPoly<T>& f, const UniPoly<T>& g) {
    UniPoly<T> acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * g + UniPoly<T>::constant(*it);
    return acc;
}

// ---- Rational-specific helpers ----

inline bool is_integer_poly(const UniPoly<Rational>& p) {
    for (const auto& c : p.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

inline UniPoly<Rational> poly_from_longs(const std::vector<long>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly<Rational>(std::move(v));
}

// Compact display: descending powers, no spaces, e.g. "t^2-2t+2".
inline std::string poly_to_string(const UniPoly<Rational>& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational& c = p[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        const bool first = out.empty();
        Rational a = abs(c);
        std::string mag;
        if (k == 0)
            mag = rational_to_string(a);
        else {
            if (a != 1) mag = rational_to_string(a);
            mag += var;
            if (k > 1) mag += "^" + std::to_string(k);
        }
        if (sgn(c) < 0)
            out += "-" + mag;
        else
            out += first ? mag : "+" + mag;
    }
    return out;
}

}  // namespace resolvent

#endif
