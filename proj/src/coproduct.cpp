#include "foresthopf/coproduct.hpp"

#include <stdexcept>

namespace foresthopf {

namespace {

Forest tail_forest(const Forest& f) {
    std::vector<Tree> rest(f.trees().begin() + 1, f.trees().end());
    return Forest(std::move(rest));
}

// (id (x) B+) t
Tensor2 graft_right(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k, c] : t.terms())
        out.add_term(k.first, Forest(bplus(k.second)), c);
    return out;
}

Tensor2 delta_eps_tree(const Tree& t) {
    if (t.label().is_sigma()) {
        // t = B+(G) with G the children forest
        Forest inner(t.children());
        Tensor2 out{inner, Forest()};
        out += graft_right(delta_eps(inner));
        return out;
    }
    return Tensor2(Forest(), Forest());  // generator leaf: 1 (x) 1
}

bool sigma_only(const Tree& t) {
    if (!t.label().is_sigma()) return false;
    for (const Tree& c : t.children())
        if (!sigma_only(c)) return false;
    return true;
}

Tensor2 delta_rt_tree(const Tree& t) {
    if (t.label().is_sigma()) {
        Forest inner(t.children());
        Tensor2 out{Forest(Tree(t)), Forest()};
        out += graft_right(delta_rt(inner));
        return out;
    }
    Tensor2 out{Forest(Tree(t)), Forest()};
    out.add_term(Forest(), Forest(Tree(t)), 1);
    return out;
}

}  // namespace

Tensor2 delta_eps(const Forest& f) {
    if (f.empty()) return Tensor2();
    if (f.breadth() == 1) return delta_eps_tree(f.trees().front());
    // peel the leftmost tree
    Forest head(f.trees().front());
    Forest rest = tail_forest(f);
    return act_left(LinComb(head), delta_eps(rest)) +
           act_right(delta_eps(head), LinComb(rest));
}

Tensor2 delta_eps_comb(const Forest& f) {
    Tensor2 out;
    const std::size_t n = f.vertex_count();
    for (VertexRef a = 0; a < n; ++a) {
        auto [above, below] = split_at(f, a);
        out.add_term(above, below, 1);
    }
    return out;
}

Tensor2 delta_eps_lin(const LinComb& v) {
    Tensor2 out;
    for (const auto& [f, c] : v.terms()) out += c * delta_eps(f);
    return out;
}

Tensor2 delta_foissy(const Forest& f) {
    for (const Tree& t : f.trees())
        if (!sigma_only(t))
            throw std::domain_error(
                "delta_foissy is defined on undecorated (sigma-only) forests");
    if (f.empty()) return Tensor2(Forest(), Forest());  // 1 (x) 1
    if (f.breadth() == 1) {
        const Tree& t = f.trees().front();
        Forest inner(t.children());
        Tensor2 out{f, Forest()};
        out += graft_right(delta_foissy(inner));
        return out;
    }
    Forest head(f.trees().front());
    Forest rest = tail_forest(f);
    Tensor2 out = act_left(LinComb(head), delta_foissy(rest));
    out += act_right(delta_foissy(head), LinComb(rest));
    out.add_term(head, rest, -1);
    return out;
}

Tensor2 delta_rt(const Forest& f) {
    if (f.empty()) return Tensor2(Forest(), Forest());  // 1 (x) 1
    Tensor2 out = delta_rt_tree(f.trees().front());
    for (std::size_t i = 1; i < f.breadth(); ++i)
        out = out * delta_rt_tree(f.trees()[i]);
    return out;
}

Tensor3 apply_delta_left(const Tensor2& t, const DeltaFn& delta) {
    Tensor3 out;
    for (const auto& [k, c] : t.terms()) {
        const Tensor2 inner_t = delta(k.first);
        for (const auto& [inner, ci] : inner_t.terms())
            out.add_term(inner.first, inner.second, k.second, c * ci);
    }
    return out;
}

Tensor3 apply_delta_right(const Tensor2& t, const DeltaFn& delta) {
    Tensor3 out;
    for (const auto& [k, c] : t.terms()) {
        const Tensor2 inner_t = delta(k.second);
        for (const auto& [inner, ci] : inner_t.terms())
            out.add_term(k.first, inner.first, inner.second, c * ci);
    }
    return out;
}

}  // namespace foresthopf
