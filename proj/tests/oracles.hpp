#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "foresthopf/coproduct.hpp"
#include "foresthopf/polymodel.hpp"

namespace foresthopf::oracles {

// Antipode by solving S(F) = -F - sum S(B_a) R_a recursively over vertex
// count, using the combinatorial coproduct. Independent of the series route.
inline LinComb antipode_oracle(const Forest& f) {
    static std::map<std::string, LinComb> memo;
    auto hit = memo.find(f.text());
    if (hit != memo.end()) return hit->second;
    LinComb s(f, -1);
    const Tensor2 t = delta_eps_comb(f);
    for (const auto& [k, c] : t.terms())
        s -= c * (antipode_oracle(k.first) * LinComb(k.second));
    memo.emplace(f.text(), s);
    return s;
}

namespace detail {

struct FlatTree {
    std::vector<const Tree*> node;   // preorder
    std::vector<int> parent;         // -1 for the root
};

inline void flatten(const Tree& t, int parent, FlatTree& out) {
    const int id = static_cast<int>(out.node.size());
    out.node.push_back(&t);
    out.parent.push_back(parent);
    for (const Tree& c : t.children()) flatten(c, id, out);
}

inline bool is_ancestor(const FlatTree& ft, int a, int b) {
    while (b != -1) {
        if (b == a) return true;
        b = ft.parent[b];
    }
    return false;
}

// Rebuild the root component after removing the subtrees rooted at cut ids.
inline Tree prune(const Tree& t, int& next_id, const std::set<int>& cut) {
    [[maybe_unused]] const int id = next_id++;
    std::vector<Tree> kids;
    for (const Tree& c : t.children()) {
        const int child_id = next_id;
        if (cut.count(child_id)) {
            // skip the whole subtree
            next_id += static_cast<int>(c.vertex_count());
        } else {
            kids.push_back(prune(c, next_id, cut));
        }
    }
    return kids.empty() ? Tree(t.label()) : Tree(t.label(), std::move(kids));
}

}  // namespace detail

// Connes-Kreimer style coproduct of a single tree by brute-force admissible
// cuts: subsets of edges with no two edges on one root-to-leaf path. The cut
// branches concatenate in planar (preorder) order; the root component stays.
inline Tensor2 delta_rt_cut_oracle(const Tree& t) {
    detail::FlatTree ft;
    detail::flatten(t, -1, ft);
    const int n = static_cast<int>(ft.node.size());

    std::vector<int> edges;  // identified by their lower vertex
    for (int v = 1; v < n; ++v) edges.push_back(v);

    Tensor2 out{Forest(t), Forest()};
    out.add_term(Forest(), Forest(t), 1);

    const std::uint32_t subsets = 1u << edges.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        std::set<int> cut;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask & (1u << i)) cut.insert(edges[i]);
        bool admissible = true;
        for (int a : cut)
            for (int b : cut)
                if (a != b && detail::is_ancestor(ft, a, b)) admissible = false;
        if (!admissible) continue;

        std::vector<Tree> branches;  // preorder = planar order
        for (int v = 0; v < n; ++v)
            if (cut.count(v)) branches.push_back(*ft.node[v]);
        int next_id = 0;
        Tree rest = detail::prune(t, next_id, cut);
        out.add_term(Forest(std::move(branches)), Forest(std::move(rest)), 1);
    }
    return out;
}

// The higher-or-more-left order straight from its definition, as a pairwise
// comparison: a is smaller when it lies on the root-to-b path (higher), when
// its tree comes later in the forest, or recursively after deleting the
// shared tree's root. Independent of the traversal that realizes the order.
inline bool hl_less_oracle(const VertexPath& a, const VertexPath& b) {
    if (a.tree != b.tree) return a.tree > b.tree;  // later trees are smaller
    const auto& pa = a.path;
    const auto& pb = b.path;
    std::size_t i = 0;
    while (i < pa.size() && i < pb.size() && pa[i] == pb[i]) ++i;
    if (i == pa.size() && i == pb.size()) return false;  // same vertex
    if (i == pa.size()) return true;   // a is an ancestor of b: a is higher
    if (i == pb.size()) return false;  // b is an ancestor of a
    // not comparable by height: the root-deleted forest orders the branches
    // left to right, and later branches are smaller
    return pa[i] > pb[i];
}

// Antipode series in k[x] computed from D(x^n) = n x^{n-1}, independent of
// the closed form -(x-1)^n.
inline Poly kx_antipode_series(std::size_t n) {
    Poly acc;
    Poly power = Poly::monomial(n);  // D^k(x^n)
    BigInt fact = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            fact *= k;
            // differentiate the monomial combination: D(x^m) = m x^{m-1}
            Poly next;
            for (std::size_t m = 1; m < power.coeffs().size(); ++m)
                next += Poly::monomial(m - 1, power.coeffs()[m] * Rational(m));
            power = next;
        }
        const Rational coeff((k % 2 == 0) ? BigInt(1) : BigInt(-1), fact);
        acc += coeff * power;
    }
    return -acc;
}

// Independent generator of all forests with n vertices, as canonical texts.
// Grows sets bottom-up instead of decoding indices, so it cross-checks both
// the counting recurrence and the enumerator's completeness.
inline std::set<std::string> brute_forest_texts(std::size_t n,
                                                const std::vector<std::string>& alphabet) {
    // trees_by_size[k] holds every tree with k vertices
    std::vector<std::vector<Tree>> trees_by_size(n + 1);
    std::vector<std::vector<Forest>> forests_by_size(n + 1);
    forests_by_size[0] = {Forest()};
    for (std::size_t k = 1; k <= n; ++k) {
        if (k >= 1) {
            trees_by_size[k].clear();
            if (k == 1) {
                trees_by_size[1].push_back(Tree(Decoration::sigma()));
                for (const std::string& a : alphabet)
                    trees_by_size[1].push_back(Tree(Decoration::generator(a)));
            } else {
                for (const Forest& g : forests_by_size[k - 1])
                    trees_by_size[k].push_back(bplus(g));
            }
        }
        // all ways to start with a j-vertex tree
        std::vector<Forest> forests;
        for (std::size_t j = 1; j <= k; ++j)
            for (const Tree& t : trees_by_size[j])
                for (const Forest& rest : forests_by_size[k - j])
                    forests.push_back(concat(Forest(t), rest));
        forests_by_size[k] = std::move(forests);
    }
    std::set<std::string> out;
    for (const Forest& f : forests_by_size[n]) out.insert(f.text());
    return out;
}

}  // namespace foresthopf::oracles
