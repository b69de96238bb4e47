#include "foresthopf/polymodel.hpp"

#include <stdexcept>

namespace foresthopf {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Rational c) {
    Poly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(std::size_t n, Rational c) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(n + 1, Rational(0));
        p.coeffs_[n] = std::move(c);
    }
    return p;
}

std::size_t Poly::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (Rational& x : coeffs_) x *= c;
    return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(const Rational& c, Poly p) { return p *= c; }
Poly operator-(Poly p) { return p *= Rational(-1); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly out;
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    for (std::size_t i = 0; i < c.size(); ++i) out += Poly::monomial(i, c[i]);
    return out;
}

std::string Poly::text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (first) {
            if (neg) out += "- ";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = neg ? Rational(-c) : c;
        if (i == 0) {
            out += rational_to_string(mag);
        } else {
            if (mag != 1) {
                out += rational_to_string(mag);
                out += '*';
            }
            out += 'x';
            if (i > 1) out += '^' + std::to_string(i);
        }
        first = false;
    }
    return out;
}

void PolyTensor2::add_term(std::size_t i, std::size_t j, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key{i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyTensor2& PolyTensor2::operator+=(const PolyTensor2& o) {
    if (this == &o) {
        for (auto& [k, c] : terms_) c *= 2;
        return *this;
    }
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

PolyTensor2& PolyTensor2::operator-=(const PolyTensor2& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

PolyTensor2 operator+(PolyTensor2 a, const PolyTensor2& b) { return a += b; }
PolyTensor2 operator-(PolyTensor2 a, const PolyTensor2& b) { return a -= b; }

PolyTensor2 poly_tensor(const Poly& p, const Poly& q) {
    PolyTensor2 out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < q.coeffs().size(); ++j)
            out.add_term(i, j, p.coeffs()[i] * q.coeffs()[j]);
    return out;
}

PolyTensor2 kx_delta(const Poly& p) {
    PolyTensor2 out;
    for (std::size_t n = 1; n < p.coeffs().size(); ++n) {
        const Rational& c = p.coeffs()[n];
        if (c == 0) continue;
        for (std::size_t i = 0; i < n; ++i) out.add_term(i, n - 1 - i, c);
    }
    return out;
}

Poly kx_antipode(const Poly& p) {
    // -(x-1)^n per monomial, by iterated multiplication
    Poly out;
    Poly base = Poly::variable() - Poly::constant(1);
    Poly power = Poly::constant(1);
    for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
        if (n > 0) power = power * base;
        out += p.coeffs()[n] * power;
    }
    return -out;
}

Poly kx_P(const Poly& p) { return Poly::variable() * p; }

KxTarget::KxTarget(std::map<std::string, Poly> images) : images_(std::move(images)) {
    for (const auto& [name, image] : images_) {
        if (!valid_generator_name(name))
            throw std::domain_error("bad generator name '" + name + "' in target");
        if (kx_delta(image) != unit_tensor())
            throw std::domain_error("generator image for '" + name +
                                    "' violates delta(f(x)) = 1 (x) 1");
    }
}

Poly KxTarget::generator(const std::string& name) const {
    auto it = images_.find(name);
    return it == images_.end() ? Poly::variable() : it->second;
}

PolyTensor2 KxTarget::unit_tensor() const {
    PolyTensor2 t;
    t.add_term(0, 0, 1);
    return t;
}

static_assert(CocycleTarget<KxTarget>);

Poly phi_bar_kx(const Forest& f) { return phi_bar(f, KxTarget()); }

Poly phi_bar_kx(const LinComb& v) {
    Poly out;
    for (const auto& [f, c] : v.terms()) out += c * phi_bar_kx(f);
    return out;
}

PolyTensor2 phi_tensor_kx(const Tensor2& t) {
    PolyTensor2 out;
    for (const auto& [k, c] : t.terms())
        out += poly_tensor(c * phi_bar_kx(k.first), phi_bar_kx(k.second));
    return out;
}

bool morphism_check(const Forest& f) {
    const Poly image = phi_bar_kx(f);
    if (kx_delta(image) != phi_tensor_kx(delta_eps(f))) return false;
    return phi_bar_kx(antipode(f)) == kx_antipode(image);
}

}  // namespace foresthopf
