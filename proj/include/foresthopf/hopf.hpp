#pragma once

#include <functional>

#include "foresthopf/coproduct.hpp"

namespace foresthopf {

// Linear endomorphism of the forest module, given by its action on basis
// forests and extended linearly on demand.
class Endo {
public:
    using Action = std::function<LinComb(const Forest&)>;

    explicit Endo(Action a) : action_(std::move(a)) {}

    static Endo zero();
    static Endo identity();

    LinComb operator()(const Forest& f) const { return action_(f); }
    LinComb operator()(const LinComb& v) const;

private:
    Action action_;
};

// D_eps = m . delta_eps, the vertex-count-lowering derivation.
LinComb d_eps(const Forest& f);
LinComb d_eps(const LinComb& v);
Endo d_eps_endo();

// Convolution f * g = m (f (x) g) delta_eps.
Endo convolve(const Endo& f, const Endo& g);

// Iterated convolution, f^{*1} = f; k must be at least 1 (the convolution
// algebra has no unit).
Endo conv_power(const Endo& f, unsigned k);

// Circular convolution f (*) g = f * g + f + g; its unit is the zero map.
Endo circ_convolve(const Endo& f, const Endo& g);

// Smallest k >= 1 with conv_power(d_eps, k)(f) = 0; at most |f| + 1.
std::size_t nilpotency_witness(const Forest& f);

// Antipode by the truncated exponential series
//   S(F) = - sum_{k=0..|F|} ((-1)^k / k!) D_eps^{(compose k)}(F),
// extended linearly. The powers are compositional; the series stops at |F|
// because D_eps lowers vertex count by one.
LinComb antipode(const Forest& f);
LinComb antipode(const LinComb& v);
Endo antipode_endo();

// Both defining equations of the antipode on a basis forest:
//   sum S(B) R + S(F) + F = 0 = sum B S(R) + S(F) + F.
bool antipode_check(const Forest& f);

}  // namespace foresthopf
