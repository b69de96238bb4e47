#pragma once

#include <array>
#include <map>
#include <utility>

#include "foresthopf/forest.hpp"
#include "foresthopf/rational.hpp"

namespace foresthopf {

// Finite formal sum of basis forests with exact rational coefficients.
// Zero coefficients are never stored, so map equality is algebra equality.
class LinComb {
public:
    using Terms = std::map<Forest, Rational, ForestLess>;

    LinComb() = default;
    explicit LinComb(Forest f, Rational c = 1);

    static LinComb unit() { return LinComb(Forest()); }  // the empty forest 1

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Forest& f, const Rational& c);

    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    LinComb& operator*=(const Rational& c);

    bool operator==(const LinComb&) const = default;

private:
    Terms terms_;
};

LinComb operator+(LinComb a, const LinComb& b);
LinComb operator-(LinComb a, const LinComb& b);
LinComb operator*(const Rational& c, LinComb v);
LinComb operator-(LinComb v);

// Bilinear extension of concatenation; unit is the empty forest.
LinComb operator*(const LinComb& a, const LinComb& b);

struct ForestPairLess {
    bool operator()(const std::pair<Forest, Forest>& a,
                    const std::pair<Forest, Forest>& b) const;
};

// Element of H (x) H: formal sum of ordered forest pairs.
class Tensor2 {
public:
    using Key = std::pair<Forest, Forest>;
    using Terms = std::map<Key, Rational, ForestPairLess>;

    Tensor2() = default;
    Tensor2(Forest left, Forest right, Rational c = 1);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Forest& l, const Forest& r, const Rational& c);

    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    Tensor2& operator*=(const Rational& c);

    bool operator==(const Tensor2&) const = default;

private:
    Terms terms_;
};

Tensor2 operator+(Tensor2 a, const Tensor2& b);
Tensor2 operator-(Tensor2 a, const Tensor2& b);
Tensor2 operator*(const Rational& c, Tensor2 t);

// The H-bimodule dot actions on H (x) H: a.(b (x) c) = ab (x) c and
// (b (x) c).a = b (x) ca, extended bilinearly.
Tensor2 act_left(const LinComb& a, const Tensor2& t);
Tensor2 act_right(const Tensor2& t, const LinComb& a);

// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
Tensor2 operator*(const Tensor2& s, const Tensor2& t);

// Triple tensors, used by the coassociativity checks.
class Tensor3 {
public:
    using Key = std::array<Forest, 3>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using Terms = std::map<Key, Rational, KeyLess>;

    Tensor3() = default;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Forest& a, const Forest& b, const Forest& c,
                  const Rational& coeff);

    bool operator==(const Tensor3&) const = default;

private:
    Terms terms_;
};

}  // namespace foresthopf
