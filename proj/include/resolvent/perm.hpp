#ifndef RESOLVENT_PERM_HPP
#define RESOLVENT_PERM_HPP

#include <optional>
#include <string>
#include <vector>

#include "resolvent/errors.hpp"

namespace resolvent {

// Permutation of {1..n}, stored 0-based. Composition follows (st)_i = s_{t_i}.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(long n);
    // Cycle notation with 1-based points, e.g. "(1,2)(3,4)" or "id".
    static Perm from_cycles(const std::string& text, long n);

    long degree() const { return static_cast<long>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;
    bool is_even() const;
    long order() const;

    friend Perm operator*(const Perm& s, const Perm& t);

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    // canonical order: lexicographic on image sequences
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    std::string cycle_string() const;

private:
    std::vector<int> img_;
};

// Explicitly enumerated subgroup of S_n; elements sorted canonically.
class PermGroup {
public:
    PermGroup() = default;

    // Breadth-first product closure of the generators. Guarded at 10000
    // elements.
    static PermGroup closure(const std::vector<Perm>& gens, std::size_t guard = 10000);
    static PermGroup trivial(long n);
    static PermGroup symmetric(long n);
    static PermGroup alternating(long n);
    static PermGroup cyclic_from(const Perm& g);

    long degree() const { return n_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<Perm>& elements() const { return elems_; }
    bool contains(const Perm& p) const;
    bool is_subgroup_of(const PermGroup& G) const;
    bool is_transitive() const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.n_ == b.n_ && a.elems_ == b.elems_;
    }
    friend bool operator!=(const PermGroup& a, const PermGroup& b) { return !(a == b); }
    friend bool operator<(const PermGroup& a, const PermGroup& b) {
        if (a.elems_.size() != b.elems_.size()) return a.elems_.size() < b.elems_.size();
        return a.elems_ < b.elems_;
    }

private:
    friend PermGroup group_from_sorted(long n, std::vector<Perm> elems);
    long n_ = 0;
    std::vector<Perm> elems_;
};

PermGroup group_from_sorted(long n, std::vector<Perm> elems);

// Left-coset transversal of H in G with the identity first; deterministic
// (smallest unused element in canonical order becomes the next
// representative).
std::vector<Perm> left_cosets(const PermGroup& G, const PermGroup& H);

bool is_normal(const PermGroup& H, const PermGroup& G);
PermGroup derived_subgroup(const PermGroup& G);
std::vector<PermGroup> derived_series(const PermGroup& G);
bool is_solvable(const PermGroup& G);

enum class ThreeCycleClass { SymmetricGroup, AlternatingGroup, Neither };
ThreeCycleClass contains_all_3cycles(const PermGroup& G);

// A gamma in G with gamma H = H gamma, gamma^p in H, and powers of gamma
// covering all p cosets; first in canonical order, if any.
std::optional<Perm> prime_cyclic_coset_witness(const PermGroup& G, const PermGroup& H, long p);

}  // namespace resolvent

#endif
