#include "foresthopf/lincomb.hpp"

namespace foresthopf {

LinComb::LinComb(Forest f, Rational c) {
    if (c != 0) terms_.emplace(std::move(f), std::move(c));
}

void LinComb::add_term(const Forest& f, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(f, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LinComb& LinComb::operator+=(const LinComb& o) {
    if (this == &o) return *this *= Rational(2);
    for (const auto& [f, c] : o.terms_) add_term(f, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [f, c] : o.terms_) add_term(f, -c);
    return *this;
}

LinComb& LinComb::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [f, coeff] : terms_) coeff *= c;
    return *this;
}

LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
LinComb operator*(const Rational& c, LinComb v) { return v *= c; }
LinComb operator-(LinComb v) { return v *= Rational(-1); }

LinComb operator*(const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [fa, ca] : a.terms())
        for (const auto& [fb, cb] : b.terms())
            out.add_term(concat(fa, fb), ca * cb);
    return out;
}

bool ForestPairLess::operator()(const std::pair<Forest, Forest>& a,
                                const std::pair<Forest, Forest>& b) const {
    if (auto c = forest_order(a.first, b.first); c != 0) return c < 0;
    return forest_order(a.second, b.second) < 0;
}

Tensor2::Tensor2(Forest left, Forest right, Rational c) {
    if (c != 0) terms_.emplace(Key{std::move(left), std::move(right)}, std::move(c));
}

void Tensor2::add_term(const Forest& l, const Forest& r, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key{l, r}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    if (this == &o) return *this *= Rational(2);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

Tensor2& Tensor2::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, coeff] : terms_) coeff *= c;
    return *this;
}

Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
Tensor2 operator*(const Rational& c, Tensor2 t) { return t *= c; }

Tensor2 act_left(const LinComb& a, const Tensor2& t) {
    Tensor2 out;
    for (const auto& [fa, ca] : a.terms())
        for (const auto& [k, ct] : t.terms())
            out.add_term(concat(fa, k.first), k.second, ca * ct);
    return out;
}

Tensor2 act_right(const Tensor2& t, const LinComb& a) {
    Tensor2 out;
    for (const auto& [k, ct] : t.terms())
        for (const auto& [fa, ca] : a.terms())
            out.add_term(k.first, concat(k.second, fa), ct * ca);
    return out;
}

Tensor2 operator*(const Tensor2& s, const Tensor2& t) {
    Tensor2 out;
    for (const auto& [ks, cs] : s.terms())
        for (const auto& [kt, ct] : t.terms())
            out.add_term(concat(ks.first, kt.first), concat(ks.second, kt.second),
                         cs * ct);
    return out;
}

bool Tensor3::KeyLess::operator()(const Key& a, const Key& b) const {
    for (int i = 0; i < 3; ++i)
        if (auto c = forest_order(a[i], b[i]); c != 0) return c < 0;
    return false;
}

void Tensor3::add_term(const Forest& a, const Forest& b, const Forest& c,
                       const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(Key{a, b, c}, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

}  // namespace foresthopf
