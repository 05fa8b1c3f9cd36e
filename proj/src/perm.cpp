#include "resolvent/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace resolvent {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[static_cast<std::size_t>(v)])
            throw argument_error("Perm: images are not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::identity(long n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return Perm(std::move(v));
}

bool Perm::is_even() const {
    std::vector<bool> seen(img_.size(), false);
    int parity = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(img_[j]);
            ++len;
        }
        parity ^= static_cast<int>((len - 1) & 1);
    }
    return parity == 0;
}

long Perm::order() const {
    Perm p = *this;
    long k = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++k;
    }
    return k;
}

Perm operator*(const Perm& s, const Perm& t) {
    if (s.degree() != t.degree()) throw argument_error("Perm: degree mismatch");
    std::vector<int> v(s.img_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.img_[static_cast<std::size_t>(t.img_[i])];
    return Perm(std::move(v));
}

std::string Perm::cycle_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i)) {
            seen[i] = true;
            continue;
        }
        std::string cyc = "(" + std::to_string(i + 1);
        seen[i] = true;
        std::size_t j = static_cast<std::size_t>(img_[i]);
        while (j != i) {
            seen[j] = true;
            cyc += "," + std::to_string(j + 1);
            j = static_cast<std::size_t>(img_[j]);
        }
        out += cyc + ")";
    }
    return out.empty() ? "id" : out;
}

Perm Perm::from_cycles(const std::string& text, long n) {
    if (text == "id" || text.empty()) return identity(n);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') throw parse_error("expected '(' in cycle notation", pos);
        ++pos;
        std::vector<long> pts;
        for (;;) {
            std::size_t start = pos;
            while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw parse_error("expected point in cycle", pos);
            long v = std::stol(text.substr(start, pos - start));
            if (v < 1 || v > n) throw parse_error("cycle point out of range", start);
            pts.push_back(v - 1);
            if (pos >= text.size()) throw parse_error("unterminated cycle", pos);
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            throw parse_error("expected ',' or ')' in cycle", pos);
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            img[static_cast<std::size_t>(pts[i])] = static_cast<int>(pts[(i + 1) % pts.size()]);
    }
    return Perm(std::move(img));
}

PermGroup group_from_sorted(long n, std::vector<Perm> elems) {
    PermGroup g;
    g.n_ = n;
    g.elems_ = std::move(elems);
    return g;
}

PermGroup PermGroup::closure(const std::vector<Perm>& gens, std::size_t guard) {
    if (gens.empty()) throw argument_error("closure: no generators");
    const long n = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != n) throw argument_error("closure: mixed degrees");
    std::set<Perm> found;
    found.insert(Perm::identity(n));
    std::vector<Perm> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                Perm h = f * g;
                if (found.insert(h).second) {
                    if (found.size() > guard) throw unsupported_error("closure: order guard exceeded");
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    return group_from_sorted(n, std::vector<Perm>(found.begin(), found.end()));
}

PermGroup PermGroup::trivial(long n) { return group_from_sorted(n, {Perm::identity(n)}); }

PermGroup PermGroup::symmetric(long n) {
    if (n <= 1) return trivial(n);
    std::vector<int> t(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    std::vector<int> c(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
    return closure({Perm(t), Perm(c)});
}

PermGroup PermGroup::alternating(long n) {
    if (n <= 2) return trivial(n);
    std::vector<Perm> gens;
    for (long i = 0; i + 2 < n; ++i) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        v[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
        v[static_cast<std::size_t>(i + 1)] = static_cast<int>(i + 2);
        v[static_cast<std::size_t>(i + 2)] = static_cast<int>(i);
        gens.emplace_back(std::move(v));
    }
    if (gens.empty()) return trivial(n);
    return closure(gens);
}

PermGroup PermGroup::cyclic_from(const Perm& g) { return closure({g}); }

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& G) const {
    for (const auto& h : elems_)
        if (!G.contains(h)) return false;
    return true;
}

bool PermGroup::is_transitive() const {
    if (n_ == 0) return true;
    std::vector<bool> orbit(static_cast<std::size_t>(n_), false);
    orbit[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : elems_)
            for (long i = 0; i < n_; ++i)
                if (orbit[static_cast<std::size_t>(i)] && !orbit[static_cast<std::size_t>(g(static_cast<int>(i)))]) {
                    orbit[static_cast<std::size_t>(g(static_cast<int>(i)))] = true;
                    grew = true;
                }
    }
    for (bool b : orbit)
        if (!b) return false;
    return true;
}

std::vector<Perm> left_cosets(const PermGroup& G, const PermGroup& H) {
    if (!H.is_subgroup_of(G)) throw argument_error("left_cosets: H is not a subgroup of G");
    std::set<Perm> remaining(G.elements().begin(), G.elements().end());
    std::vector<Perm> reps;
    while (!remaining.empty()) {
        Perm rep = *remaining.begin();
        reps.push_back(rep);
        for (const auto& h : H.elements()) remaining.erase(rep * h);
    }
    if (reps.size() * H.order() != G.order()) throw std::logic_error("left_cosets: cosets do not tile G");
    return reps;
}

bool is_normal(const PermGroup& H, const PermGroup& G) {
    if (!H.is_subgroup_of(G)) throw argument_error("is_normal: H is not a subgroup of G");
    for (const auto& g : G.elements()) {
        const Perm gi = g.inverse();
        for (const auto& h : H.elements())
            if (!H.contains(g * h * gi)) return false;
    }
    return true;
}

PermGroup derived_subgroup(const PermGroup& G) {
    std::vector<Perm> comms;
    for (const auto& a : G.elements())
        for (const auto& b : G.elements()) comms.push_back(a * b * a.inverse() * b.inverse());
    return PermGroup::closure(comms);
}

std::vector<PermGroup> derived_series(const PermGroup& G) {
    std::vector<PermGroup> series{G};
    for (;;) {
        PermGroup next = derived_subgroup(series.back());
        if (next.order() == series.back().order()) break;
        series.push_back(next);
        if (series.back().order() == 1) break;
    }
    return series;
}

bool is_solvable(const PermGroup& G) { return derived_series(G).back().order() == 1; }

ThreeCycleClass contains_all_3cycles(const PermGroup& G) {
    const long n = G.degree();
    if (n < 3) throw argument_error("contains_all_3cycles: degree must be >= 3");
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                std::vector<int> v(static_cast<std::size_t>(n));
                std::iota(v.begin(), v.end(), 0);
                v[static_cast<std::size_t>(a)] = static_cast<int>(b);
                v[static_cast<std::size_t>(b)] = static_cast<int>(c);
                v[static_cast<std::size_t>(c)] = static_cast<int>(a);
                if (!G.contains(Perm(std::move(v)))) return ThreeCycleClass::Neither;
            }
    for (const auto& g : G.elements())
        if (!g.is_even()) return ThreeCycleClass::SymmetricGroup;
    return ThreeCycleClass::AlternatingGroup;
}

std::optional<Perm> prime_cyclic_coset_witness(const PermGroup& G, const PermGroup& H, long p) {
    if (!H.is_subgroup_of(G)) throw argument_error("coset witness: H not a subgroup");
    if (G.order() != H.order() * static_cast<std::size_t>(p))
        throw argument_error("coset witness: index is not p");
    auto same_coset = [&H](const Perm& a, const Perm& b) {
        return H.contains(a.inverse() * b);
    };
    for (const auto& g : G.elements()) {
        if (H.contains(g)) continue;
        // gamma H = H gamma as sets
        bool commutes = true;
        for (const auto& h : H.elements())
            if (!H.contains(g.inverse() * h * g)) {
                commutes = false;
                break;
            }
        if (!commutes) continue;
        // order p on cosets: gamma^p in H and powers hit all cosets
        std::vector<Perm> powers{Perm::identity(G.degree())};
        for (long k = 1; k < p; ++k) powers.push_back(powers.back() * g);
        Perm gp = powers.back() * g;
        if (!H.contains(gp)) continue;
        bool covers = true;
        for (long i = 0; i < p && covers; ++i)
            for (long j = i + 1; j < p && covers; ++j)
                if (same_coset(powers[static_cast<std::size_t>(i)], powers[static_cast<std::size_t>(j)])) covers = false;
        if (covers) return g;
    }
    return std::nullopt;
}

}  // namespace resolvent
