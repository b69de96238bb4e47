#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foresthopf/hopf.hpp"

namespace foresthopf {

// Univariate polynomial over the exact rationals, dense coefficients with no
// trailing zeros.
class Poly {
public:
    Poly() = default;  // zero
    static Poly constant(Rational c);
    static Poly monomial(std::size_t n, Rational c = 1);
    static Poly variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const;  // zero polynomial has no degree
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    bool operator==(const Poly&) const = default;

    std::string text() const;  // "x^2", "- x^2 + 2*x - 1", "0"

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, Poly p);
Poly operator-(Poly p);

// Formal sum of monomial pairs x^i (x) x^j.
class PolyTensor2 {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    PolyTensor2() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(std::size_t i, std::size_t j, const Rational& c);

    PolyTensor2& operator+=(const PolyTensor2& o);
    PolyTensor2& operator-=(const PolyTensor2& o);

    bool operator==(const PolyTensor2&) const = default;

private:
    std::map<Key, Rational> terms_;
};

PolyTensor2 operator+(PolyTensor2 a, const PolyTensor2& b);
PolyTensor2 operator-(PolyTensor2 a, const PolyTensor2& b);

// p (x) q expanded into monomial pairs.
PolyTensor2 poly_tensor(const Poly& p, const Poly& q);

// The infinitesimal coproduct on k[x]:
//   kx_delta(1) = 0,  kx_delta(x^n) = sum_{i=0}^{n-1} x^i (x) x^{n-1-i}.
PolyTensor2 kx_delta(const Poly& p);

// Antipode on k[x]: S(x^n) = -(x-1)^n, extended linearly.
Poly kx_antipode(const Poly& p);

// Cocycle operator on k[x]: multiplication by x. Satisfies
// kx_delta(kx_P(p)) = p (x) 1 + (id (x) kx_P) kx_delta(p).
Poly kx_P(const Poly& p);

// A target for the universal morphism: a cocycle infinitesimal unitary
// bialgebra together with generator images whose coproduct is 1 (x) 1.
template <typename T>
concept CocycleTarget = requires(const T& t, const typename T::Elem& a,
                                 const typename T::Elem& b, const std::string& name) {
    typename T::Elem;
    typename T::Tensor;
    { t.unit() } -> std::convertible_to<typename T::Elem>;
    { t.mul(a, b) } -> std::convertible_to<typename T::Elem>;
    { t.cocycle(a) } -> std::convertible_to<typename T::Elem>;
    { t.generator(name) } -> std::convertible_to<typename T::Elem>;
    { t.delta(a) } -> std::convertible_to<typename T::Tensor>;
    { t.unit_tensor() } -> std::convertible_to<typename T::Tensor>;
};

// k[x] as a target. Construction validates every registered generator image:
// an image with kx_delta(image) != 1 (x) 1 is rejected with std::domain_error.
// Generators without an explicit image map to x.
class KxTarget {
public:
    using Elem = Poly;
    using Tensor = PolyTensor2;

    KxTarget() = default;
    explicit KxTarget(std::map<std::string, Poly> images);

    Poly unit() const { return Poly::constant(1); }
    Poly mul(const Poly& a, const Poly& b) const { return a * b; }
    Poly cocycle(const Poly& a) const { return kx_P(a); }
    Poly generator(const std::string& name) const;
    PolyTensor2 delta(const Poly& a) const { return kx_delta(a); }
    PolyTensor2 unit_tensor() const;

private:
    std::map<std::string, Poly> images_;
};

// The unique operated-algebra morphism out of the free object:
//   phi(1) = 1, phi(.x) = f(x), phi(B+(G)) = P(phi(G)), phi(FG) = phi(F)phi(G).
template <CocycleTarget T>
typename T::Elem phi_bar(const Forest& f, const T& target);

template <CocycleTarget T>
typename T::Elem phi_bar(const Tree& t, const T& target) {
    if (t.label().is_sigma()) return target.cocycle(phi_bar(Forest(t.children()), target));
    return target.generator(t.label().name());
}

template <CocycleTarget T>
typename T::Elem phi_bar(const Forest& f, const T& target) {
    typename T::Elem out = target.unit();
    for (const Tree& t : f.trees()) out = target.mul(out, phi_bar(t, target));
    return out;
}

// Default k[x] instance with f(x) = x for every generator, extended linearly
// for combinations.
Poly phi_bar_kx(const Forest& f);
Poly phi_bar_kx(const LinComb& v);

// Compatibility of phi with the coproducts and the antipodes in the k[x]
// instance: kx_delta(phi(F)) = (phi (x) phi)(delta_eps(F)) and
// phi(S(F)) = kx_antipode(phi(F)).
bool morphism_check(const Forest& f);

// (phi (x) phi) applied to a forest two-tensor.
PolyTensor2 phi_tensor_kx(const Tensor2& t);

}  // namespace foresthopf
