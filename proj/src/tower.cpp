#include "resolvent/tower.hpp"

#include <functional>
#include <set>

#include "resolvent/numtheory.hpp"

namespace resolvent {

namespace {
constexpr mpfr_prec_t kMaxPrec = 4096;
}

TowerPtr tower_rational(const Rational& q) {
    auto n = std::make_shared<TowerNode>();
    n->kind = TowerNode::Kind::Rat;
    n->rat = q;
    return n;
}

TowerPtr tower_cyc(const CycElem& c) {
    auto n = std::make_shared<TowerNode>();
    n->kind = TowerNode::Kind::Cyc;
    n->cyc = c;
    return n;
}

TowerPtr tower_sum(std::vector<TowerPtr> args) {
    if (args.empty()) throw argument_error("tower_sum: no operands");
    if (args.size() == 1) return args[0];
    auto n = std::make_shared<TowerNode>();
    n->kind = TowerNode::Kind::Sum;
    n->args = std::move(args);
    return n;
}

TowerPtr tower_product(std::vector<TowerPtr> args) {
    if (args.empty()) throw argument_error("tower_product: no operands");
    if (args.size() == 1) return args[0];
    auto n = std::make_shared<TowerNode>();
    n->kind = TowerNode::Kind::Product;
    n->args = std::move(args);
    return n;
}

TowerPtr tower_quotient(TowerPtr num, TowerPtr den) {
    auto n = std::make_shared<TowerNode>();
    n->kind = TowerNode::Kind::Quotient;
    n->args = {std::move(num), std::move(den)};
    return n;
}

TowerPtr tower_negate(TowerPtr arg) {
    auto n = std::make_shared<TowerNode>();
    n->kind = TowerNode::Kind::Negation;
    n->args = {std::move(arg)};
    return n;
}

TowerPtr tower_root(long p, TowerPtr radicand, long branch) {
    if (!is_prime(p)) throw argument_error("tower_root: index must be prime");
    if (branch < 0 || branch >= p) throw argument_error("tower_root: branch out of range");
    auto n = std::make_shared<TowerNode>();
    n->kind = TowerNode::Kind::Root;
    n->args = {std::move(radicand)};
    n->root_p = p;
    n->branch = branch;
    return n;
}

namespace {

using BranchMap = std::map<const TowerNode*, long>;
using Memo = std::map<const TowerNode*, Ball>;

Ball eval_node(const TowerNode* n, mpfr_prec_t prec, const BranchMap* branches, Memo& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Ball out(prec);
    switch (n->kind) {
        case TowerNode::Kind::Rat:
            out = Ball::from_rational(n->rat, prec);
            break;
        case TowerNode::Kind::Cyc:
            out = n->cyc.to_ball(prec);
            break;
        case TowerNode::Kind::Sum: {
            out = eval_node(n->args[0].get(), prec, branches, memo);
            for (std::size_t i = 1; i < n->args.size(); ++i)
                out = out + eval_node(n->args[i].get(), prec, branches, memo);
            break;
        }
        case TowerNode::Kind::Product: {
            out = eval_node(n->args[0].get(), prec, branches, memo);
            for (std::size_t i = 1; i < n->args.size(); ++i)
                out = out * eval_node(n->args[i].get(), prec, branches, memo);
            break;
        }
        case TowerNode::Kind::Quotient: {
            Ball num = eval_node(n->args[0].get(), prec, branches, memo);
            Ball den = eval_node(n->args[1].get(), prec, branches, memo);
            out = num / den;  // throws indeterminate_error when den may be 0
            break;
        }
        case TowerNode::Kind::Negation:
            out = -eval_node(n->args[0].get(), prec, branches, memo);
            break;
        case TowerNode::Kind::Root: {
            Ball arg = eval_node(n->args[0].get(), prec, branches, memo);
            long b = n->branch;
            if (branches) {
                auto bit = branches->find(n);
                if (bit != branches->end()) b = bit->second;
            }
            out = arg.nth_root(static_cast<unsigned long>(n->root_p), static_cast<unsigned long>(b));
            break;
        }
    }
    memo.emplace(n, out);
    return out;
}

Ball eval_with_refinement(const TowerPtr& t, mpfr_prec_t bits, const BranchMap* branches) {
    const long target = -static_cast<long>(bits) / 2;
    bool have = false;
    Ball best(bits);
    std::string last_err;
    const mpfr_prec_t limit = std::max<mpfr_prec_t>(kMaxPrec, bits);
    for (mpfr_prec_t w = bits; w <= limit; w *= 2) {
        try {
            Memo memo;
            Ball v = eval_node(t.get(), w, branches, memo);
            best = v;
            have = true;
            if (v.rad_below_2exp(target)) return v;
        } catch (const indeterminate_error& e) {
            last_err = e.what();
        }
    }
    if (have) return best;
    throw indeterminate_error("tower_eval: " + (last_err.empty() ? std::string("no evaluation succeeded") : last_err));
}

void collect_roots(const TowerNode* n, std::set<const TowerNode*>& seen,
                   std::vector<const TowerNode*>& out) {
    if (seen.count(n)) return;
    seen.insert(n);
    if (n->kind == TowerNode::Kind::Root) out.push_back(n);
    for (const auto& a : n->args) collect_roots(a.get(), seen, out);
}

}  // namespace

std::vector<const TowerNode*> tower_root_nodes(const TowerPtr& t) {
    std::set<const TowerNode*> seen;
    std::vector<const TowerNode*> out;
    collect_roots(t.get(), seen, out);
    return out;
}

Ball tower_eval(const TowerPtr& t, mpfr_prec_t bits) {
    return eval_with_refinement(t, bits, nullptr);
}

std::vector<Ball> tower_enumerate(const TowerPtr& t, mpfr_prec_t bits) {
    const auto roots = tower_root_nodes(t);
    unsigned long total = 1;
    for (const auto* r : roots) {
        total *= static_cast<unsigned long>(r->root_p);
        if (total > 2048) throw unsupported_error("tower_enumerate: too many branch assignments");
    }

    const mpfr_prec_t limit = std::max<mpfr_prec_t>(kMaxPrec, bits);
    for (mpfr_prec_t w = bits; w <= limit; w *= 2) {
        std::vector<Ball> values;
        values.reserve(total);
        bool ok = true;
        for (unsigned long idx = 0; idx < total && ok; ++idx) {
            BranchMap bm;
            unsigned long rest = idx;
            for (const auto* r : roots) {
                bm[r] = static_cast<long>(rest % static_cast<unsigned long>(r->root_p));
                rest /= static_cast<unsigned long>(r->root_p);
            }
            try {
                values.push_back(eval_with_refinement(t, w, &bm));
            } catch (const indeterminate_error&) {
                ok = false;
            }
        }
        if (!ok) continue;

        // cluster by overlap; demand the relation be transitive (i.e. the
        // connected components are cliques mutually disjoint from each other)
        std::vector<std::size_t> comp(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) comp[i] = i;
        std::vector<std::vector<bool>> ov(values.size(), std::vector<bool>(values.size(), false));
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j) ov[i][j] = ov[j][i] = overlaps(values[i], values[j]);
        // union-find over overlaps
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j)
                if (ov[i][j]) comp[find(i)] = find(j);
        bool ambiguous = false;
        for (std::size_t i = 0; i < values.size() && !ambiguous; ++i)
            for (std::size_t j = i + 1; j < values.size() && !ambiguous; ++j)
                if (find(i) == find(j) && !ov[i][j]) ambiguous = true;
        if (ambiguous) continue;  // refine

        std::map<std::size_t, std::size_t> rep;  // component -> best index
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::size_t c = find(i);
            auto it = rep.find(c);
            if (it == rep.end() || values[i].rad_d() < values[it->second].rad_d()) rep[c] = i;
        }
        std::vector<Ball> out;
        out.reserve(rep.size());
        for (const auto& [c, i] : rep) out.push_back(values[i]);
        return out;
    }
    throw indeterminate_error("tower_enumerate: could not separate values within precision budget");
}

std::string tower_to_string(const TowerPtr& t) {
    const TowerNode* n = t.get();
    switch (n->kind) {
        case TowerNode::Kind::Rat:
            return rational_to_string(n->rat);
        case TowerNode::Kind::Cyc:
            return "[" + n->cyc.str() + "]";
        case TowerNode::Kind::Sum: {
            std::string s = "(";
            for (std::size_t i = 0; i < n->args.size(); ++i)
                s += (i ? " + " : "") + tower_to_string(n->args[i]);
            return s + ")";
        }
        case TowerNode::Kind::Product: {
            std::string s = "(";
            for (std::size_t i = 0; i < n->args.size(); ++i)
                s += (i ? "*" : "") + tower_to_string(n->args[i]);
            return s + ")";
        }
        case TowerNode::Kind::Quotient:
            return "(" + tower_to_string(n->args[0]) + " / " + tower_to_string(n->args[1]) + ")";
        case TowerNode::Kind::Negation:
            return "-" + tower_to_string(n->args[0]);
        case TowerNode::Kind::Root:
            return "root(" + std::to_string(n->root_p) + ", " + tower_to_string(n->args[0]) + ", b" +
                   std::to_string(n->branch) + ")";
    }
    return "?";
}

}  // namespace resolvent
