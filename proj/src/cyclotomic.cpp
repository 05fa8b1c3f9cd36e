#include "resolvent/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "resolvent/linalg.hpp"

namespace resolvent {

namespace {

struct ConductorData {
    UniPoly<Rational> phi;
    long deg = 0;
    // red[j] = coordinates of zeta^{deg+j} in the power basis, j = 0..deg-2
    std::vector<std::vector<Rational>> red;
};

const ConductorData& conductor_data(long m) {
    static std::map<long, ConductorData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    ConductorData data;
    data.phi = cyclotomic_poly(m);
    data.deg = data.phi.degree();
    const long d = data.deg;
    // rows for exponents d .. max(m-1, 2d-2): enough for both normalization
    // of zeta-powers below m and products of two reduced elements
    const long top_exp = std::max(m - 1, 2 * d - 2);
    if (top_exp >= d) {
        // zeta^d = -(phi_0 + phi_1 zeta + ... + phi_{d-1} zeta^{d-1})
        std::vector<Rational> cur(static_cast<std::size_t>(d));
        for (long i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = -data.phi[static_cast<std::size_t>(i)];
        data.red.push_back(cur);
        for (long e = d + 1; e <= top_exp; ++e) {
            // multiply by zeta: shift, reduce the overflow term via red[0]
            std::vector<Rational> next(static_cast<std::size_t>(d), Rational(0));
            const Rational topc = cur[static_cast<std::size_t>(d - 1)];
            for (long i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
            if (sgn(topc) != 0)
                for (long i = 0; i < d; ++i)
                    next[static_cast<std::size_t>(i)] += topc * data.red[0][static_cast<std::size_t>(i)];
            data.red.push_back(next);
            cur = std::move(next);
        }
    }
    auto [pos, inserted] = cache.emplace(m, std::move(data));
    return pos->second;
}

}  // namespace

UniPoly<Rational> cyclotomic_poly(long m) {
    if (m < 1) throw argument_error("cyclotomic_poly: m must be >= 1");
    // t^m - 1
    std::vector<Rational> tm(m + 1, Rational(0));
    tm[0] = Rational(-1);
    tm[m] = Rational(1);
    UniPoly<Rational> num(std::move(tm));
    if (m == 1) return num;
    UniPoly<Rational> den = UniPoly<Rational>::constant(Rational(1));
    for (long d : divisors(m))
        if (d < m) den = den * cyclotomic_poly(d);
    auto [q, r] = poly_divide(num, den);
    if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: non-exact division");
    return q;
}

CycElem cyc_normalize(long m, const std::vector<Rational>& raw) {
    if (m < 1) throw argument_error("cyc_normalize: m must be >= 1");
    const ConductorData& cd = conductor_data(m);
    const long d = cd.deg;
    CycElem out;
    out.m_ = m;
    out.c_.assign(static_cast<std::size_t>(d), Rational(0));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (sgn(raw[i]) == 0) continue;
        long e = static_cast<long>(i) % m;  // zeta^m = 1
        if (e < d) {
            out.c_[static_cast<std::size_t>(e)] += raw[i];
        } else {
            const auto& row = cd.red[static_cast<std::size_t>(e - d)];
            for (long j = 0; j < d; ++j) out.c_[static_cast<std::size_t>(j)] += raw[i] * row[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

CycElem CycElem::from_rational(const Rational& q, long m) {
    return cyc_normalize(m, {q});
}

CycElem CycElem::zeta(long m, long power) {
    power %= m;
    if (power < 0) power += m;
    std::vector<Rational> raw(static_cast<std::size_t>(power) + 1, Rational(0));
    raw.back() = Rational(1);
    return cyc_normalize(m, raw);
}

bool CycElem::is_zero() const {
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CycElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rational CycElem::rational_value() const {
    if (!is_rational()) throw argument_error("rational_value: element is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

CycElem CycElem::embed(long M) const {
    if (M % m_ != 0) throw argument_error("cyc_embed: target conductor not a multiple");
    if (M == m_) return *this;
    const long step = M / m_;
    std::vector<Rational> raw(static_cast<std::size_t>(M), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) raw[i * static_cast<std::size_t>(step)] += c_[i];
    return cyc_normalize(M, raw);
}

namespace {
inline long align(const CycElem& a, const CycElem& b, CycElem& ea, CycElem& eb) {
    const long M = a.conductor() / std::gcd(a.conductor(), b.conductor()) * b.conductor();
    ea = a.embed(M);
    eb = b.embed(M);
    return M;
}
}  // namespace

CycElem operator+(const CycElem& a, const CycElem& b) {
    CycElem x, y;
    const long M = align(a, b, x, y);
    std::vector<Rational> raw(x.coeffs());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += y.coeffs()[i];
    return cyc_normalize(M, raw);
}

CycElem operator-(const CycElem& a, const CycElem& b) { return a + (-b); }

CycElem CycElem::operator-() const {
    CycElem out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    CycElem x, y;
    const long M = align(a, b, x, y);
    const auto& u = x.coeffs();
    const auto& v = y.coeffs();
    std::vector<Rational> conv(u.size() + v.size() - 1, Rational(0));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (sgn(v[j]) != 0) conv[i + j] += u[i] * v[j];
    }
    return cyc_normalize(M, conv);
}

CycElem CycElem::inverse() const {
    if (is_zero()) throw argument_error("cyc_inverse: division by zero");
    if (is_rational()) return from_rational(Rational(1) / c_[0], m_);
    const ConductorData& cd = conductor_data(m_);
    // Bezout pair against the irreducible modulus: s*rep + t*Phi = 1
    UniPoly<Rational> rep(c_);
    auto eg = extended_gcd(cd.phi, rep);
    if (eg.gcd.degree() != 0) throw std::logic_error("cyc_inverse: gcd with Phi_m not constant");
    auto [s, t] = eg.bezout();  // s*Phi + t*rep = 1
    return cyc_normalize(m_, t.coeffs());
}

CycElem operator/(const CycElem& a, const CycElem& b) { return a * b.inverse(); }

CycElem CycElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycElem acc = from_rational(Rational(1), m_);
    CycElem base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) acc = acc * base;
        if (k > 1) base = base * base;
        k >>= 1;
    }
    return acc;
}

CycElem CycElem::galois_apply(long k) const {
    long kk = ((k % m_) + m_) % m_;
    if (std::gcd(kk, m_) != 1) throw argument_error("cyc_galois_apply: k not coprime to conductor");
    std::vector<Rational> raw(static_cast<std::size_t>(m_), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) raw[static_cast<std::size_t>((static_cast<long>(i) * kk) % m_)] += c_[i];
    return cyc_normalize(m_, raw);
}

bool operator==(const CycElem& a, const CycElem& b) {
    CycElem x, y;
    align(a, b, x, y);
    return x.coeffs() == y.coeffs();
}

Ball CycElem::to_ball(mpfr_prec_t bits) const {
    Ball acc(bits);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        Ball term = Ball::from_rational(c_[i], bits);
        if (i > 0) term = term * Ball::root_of_unity(m_, static_cast<long>(i), bits);
        acc = acc + term;
    }
    return acc;
}

std::string CycElem::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        Rational a = abs(c_[i]);
        std::string mag;
        if (i == 0)
            mag = rational_to_string(a);
        else {
            if (a != 1) mag = rational_to_string(a) + "*";
            mag += var;
            if (i > 1) mag += "^" + std::to_string(i);
        }
        if (sgn(c_[i]) < 0)
            out += "-" + mag;
        else
            out += out.empty() ? mag : "+" + mag;
    }
    if (m_ > 1) out += " (m=" + std::to_string(m_) + ")";
    return out;
}

std::optional<CycElem> cyc_try_restrict(const CycElem& x, long M) {
    const long L = x.conductor();
    if (L % M != 0) throw argument_error("cyc_try_restrict: M must divide the conductor");
    if (L == M) return x;
    const long dM = euler_phi(M);
    const long dL = static_cast<long>(x.coeffs().size());
    // columns: embeddings of zeta_M^j, j < deg Phi_M
    std::vector<std::vector<Rational>> A(static_cast<std::size_t>(dL),
                                         std::vector<Rational>(static_cast<std::size_t>(dM), Rational(0)));
    for (long j = 0; j < dM; ++j) {
        CycElem col = CycElem::zeta(M, j).embed(L);
        for (long i = 0; i < dL; ++i) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeffs()[static_cast<std::size_t>(i)];
    }
    auto sol = solve_linear_system(A, x.coeffs());
    if (!sol) return std::nullopt;
    return cyc_normalize(M, *sol);
}

UniPoly<CycElem> poly_to_cyclotomic(const UniPoly<Rational>& p, long m) {
    std::vector<CycElem> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(CycElem::from_rational(c, m));
    return UniPoly<CycElem>(std::move(v));
}

std::optional<UniPoly<Rational>> poly_from_cyclotomic(const UniPoly<CycElem>& p) {
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational()) return std::nullopt;
        v.push_back(c.rational_value());
    }
    return UniPoly<Rational>(std::move(v));
}

}  // namespace resolvent
