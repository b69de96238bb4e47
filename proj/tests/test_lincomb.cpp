#include <doctest.h>

#include <random>

#include "foresthopf/enumerator.hpp"
#include "foresthopf/lincomb.hpp"
#include "foresthopf/textio.hpp"

using namespace foresthopf;

namespace {

// deterministic sampler over small decorated forests
struct Sampler {
    std::mt19937 rng{20250809};
    std::vector<Forest> pool;

    Sampler() {
        for (std::size_t n = 0; n <= 3; ++n) {
            ForestEnumerator en(n, {"x", "y"});
            while (auto f = en.next()) pool.push_back(*f);
        }
    }

    Forest forest() { return pool[rng() % pool.size()]; }

    Rational coeff() {
        static const int nums[] = {-3, -1, 1, 2, 5};
        return Rational(nums[rng() % 5], 1 + static_cast<int>(rng() % 3));
    }

    LinComb lincomb() {
        LinComb v;
        const std::size_t terms = 1 + rng() % 3;
        for (std::size_t i = 0; i < terms; ++i) v += LinComb(forest(), coeff());
        return v;
    }

    Tensor2 tensor() {
        Tensor2 t;
        const std::size_t terms = 1 + rng() % 3;
        for (std::size_t i = 0; i < terms; ++i)
            t += Tensor2(forest(), forest(), coeff());
        return t;
    }
};

}  // namespace

TEST_CASE("module laws") {
    const Forest x = parse_forest("x");
    CHECK((LinComb(x) + LinComb(x, -1)).is_zero());
    CHECK((Rational(0) * LinComb(x, 7)).is_zero());
    CHECK(LinComb(x, 2) + LinComb(x, 3) == LinComb(x, 5));
}

TEST_CASE("concatenation product") {
    const LinComb v = parse_lincomb("x + y");
    CHECK(LinComb::unit() * v == v);
    CHECK(v * LinComb::unit() == v);
    CHECK(parse_lincomb("x + y") * LinComb(parse_forest("@")) ==
          parse_lincomb("x @ + y @"));
    // canonical print order is descending in (vertex count, text)
    CHECK(serialize_lincomb(parse_lincomb("x + y") * LinComb(parse_forest("@"))) ==
          "y @ + x @");
    CHECK(LinComb(parse_forest("x")) * LinComb(parse_forest("y")) ==
          LinComb(parse_forest("x y")));
}

TEST_CASE("bimodule actions") {
    const LinComb x(parse_forest("x"));
    const LinComb at(parse_forest("@"));
    CHECK(act_left(x, Tensor2(Forest(), Forest())) == Tensor2(parse_forest("x"), Forest()));
    CHECK(act_right(Tensor2(parse_forest("x"), Forest()), at) ==
          Tensor2(parse_forest("x"), parse_forest("@")));
    CHECK(act_left(at, Tensor2(parse_forest("x"), parse_forest("y"))) ==
          Tensor2(parse_forest("@ x"), parse_forest("y")));
}

TEST_CASE("componentwise tensor product") {
    const Tensor2 unit{Forest(), Forest()};
    const Tensor2 fg{parse_forest("@[x]"), parse_forest("y")};
    CHECK(unit * fg == fg);
    CHECK(Tensor2(parse_forest("x"), Forest()) * Tensor2(Forest(), parse_forest("y")) ==
          Tensor2(parse_forest("x"), parse_forest("y")));
    CHECK(Tensor2(parse_forest("x"), parse_forest("y")) *
              Tensor2(parse_forest("z"), Forest()) ==
          Tensor2(parse_forest("x z"), parse_forest("y")));
}

TEST_CASE("sampled algebra laws") {
    Sampler s;
    for (int i = 0; i < 60; ++i) {
        const LinComb a = s.lincomb(), b = s.lincomb(), c = s.lincomb();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        const Tensor2 t = s.tensor();
        CHECK(act_left(a, act_right(t, b)) == act_right(act_left(a, t), b));
    }
}

TEST_CASE("normalization never stores zeros") {
    Sampler s;
    for (int i = 0; i < 40; ++i) {
        LinComb v = s.lincomb();
        v += Rational(-1) * v + s.lincomb();
        for (const auto& [f, c] : v.terms()) {
            (void)f;
            CHECK(c != 0);
        }
        Tensor2 t = s.tensor();
        t -= t;
        CHECK(t.is_zero());
    }
}
