#pragma once

#include <functional>

#include "foresthopf/lincomb.hpp"

namespace foresthopf {

// The infinitesimal coproduct, defined recursively:
//   delta_eps(1)      = 0
//   delta_eps(.x)     = 1 (x) 1                       for a generator leaf
//   delta_eps(B+(G))  = G (x) 1 + (id (x) B+) delta_eps(G)
//   delta_eps(T1...Tm)= T1 . delta_eps(T2...Tm) + delta_eps(T1) . (T2...Tm)
Tensor2 delta_eps(const Forest& f);

// Same coproduct by its combinatorial description: sum of B_a (x) R_a over
// all vertices a in <=_{h,l} order.
Tensor2 delta_eps_comb(const Forest& f);

// Linear extension to arbitrary combinations.
Tensor2 delta_eps_lin(const LinComb& v);

// Foissy's coproduct on undecorated (sigma-only) forests:
//   delta_foissy(1)      = 1 (x) 1
//   delta_foissy(B+(G))  = B+(G) (x) 1 + (id (x) B+) delta_foissy(G)
//   delta_foissy(F1 F2)  = F1 . d(F2) + d(F1) . F2 - F1 (x) F2
// Throws std::domain_error if any vertex carries a generator label.
Tensor2 delta_foissy(const Forest& f);

// The Connes-Kreimer style coproduct:
//   delta_rt(1)     = 1 (x) 1
//   delta_rt(.x)    = .x (x) 1 + 1 (x) .x
//   delta_rt(B+(G)) = B+(G) (x) 1 + (id (x) B+) delta_rt(G)
//   delta_rt(F1 F2) = delta_rt(F1) delta_rt(F2)   (componentwise product)
Tensor2 delta_rt(const Forest& f);

using DeltaFn = std::function<Tensor2(const Forest&)>;

// (delta (x) id) and (id (x) delta) applied to a two-tensor, for the
// coassociativity checks. The delta is passed in so every coproduct (and the
// self-test mutants) can be checked with the same code.
Tensor3 apply_delta_left(const Tensor2& t, const DeltaFn& delta);
Tensor3 apply_delta_right(const Tensor2& t, const DeltaFn& delta);

}  // namespace foresthopf
