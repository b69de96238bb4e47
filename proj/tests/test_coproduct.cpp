#include <doctest.h>

#include "foresthopf/coproduct.hpp"
#include "foresthopf/enumerator.hpp"
#include "foresthopf/textio.hpp"
#include "oracles.hpp"

using namespace foresthopf;

namespace {
Tensor2 T(const char* s) { return parse_tensor2(s); }
Forest F(const char* s) { return parse_forest(s); }
}  // namespace

TEST_CASE("delta_eps golden values") {
    CHECK(delta_eps(Forest()).is_zero());
    CHECK(delta_eps(F("x")) == T("1 (x) 1"));
    CHECK(delta_eps(F("@[x]")) == T("x (x) 1 + 1 (x) @"));
    CHECK(delta_eps(F("@[@ x]")) == T("@ x (x) 1 + @ (x) @ + 1 (x) @[x]"));
    CHECK(delta_eps(F("@[@[x] @]")) ==
          T("@[x] @ (x) 1 + @[x] (x) @ + x (x) @[@] + 1 (x) @[@ @]"));
    // Lemma on products of generator leaves, m = 2
    CHECK(delta_eps(F("x y")) == T("1 (x) y + x (x) 1"));
}

TEST_CASE("combinatorial description matches the worked examples") {
    CHECK(delta_eps_comb(F("@[y @[x]]")) ==
          T("y @[x] (x) 1 + 1 (x) @[@[x]] + y x (x) @ + y (x) @[@]"));
    CHECK(delta_eps_comb(F("@[@ x] @[y @[z]] @[w]")) ==
          T("@ x (x) @[y @[z]] @[w]"
            " + 1 (x) @[x] @[y @[z]] @[w]"
            " + @ (x) @ @[y @[z]] @[w]"
            " + @[@ x] y @[z] (x) @[w]"
            " + @[@ x] (x) @[@[z]] @[w]"
            " + @[@ x] y z (x) @ @[w]"
            " + @[@ x] y (x) @[@] @[w]"
            " + @[@ x] @[y @[z]] w (x) 1"
            " + @[@ x] @[y @[z]] (x) @"));
    CHECK(delta_eps_comb(Forest()).is_zero());
}

TEST_CASE("recursive and combinatorial coproducts agree") {
    for (std::size_t n = 0; n <= 4; ++n) {
        ForestEnumerator en(n, {"x"});
        while (auto f = en.next()) CHECK(delta_eps(*f) == delta_eps_comb(*f));
    }
}

TEST_CASE("linear extension") {
    CHECK(delta_eps_lin(LinComb()).is_zero());
    CHECK(delta_eps_lin(LinComb(F("x"), 2)) == Rational(2) * T("1 (x) 1"));
    CHECK(delta_eps_lin(LinComb(F("x")) + LinComb(F("@[x]"))) ==
          T("1 (x) 1 + x (x) 1 + 1 (x) @"));
}

TEST_CASE("delta_foissy golden values") {
    CHECK(delta_foissy(Forest()) == T("1 (x) 1"));
    CHECK(delta_foissy(F("@[@]")) == T("@[@] (x) 1 + 1 (x) @[@] + @ (x) @"));
    CHECK(delta_foissy(F("@[@ @]")) ==
          T("@[@ @] (x) 1 + 1 (x) @[@ @] + @ @ (x) @ + @ (x) @[@]"));
    CHECK(delta_foissy(F("@[@[@] @]")) ==
          T("@[@[@] @] (x) 1 + 1 (x) @[@[@] @] + @[@] @ (x) @ + @ (x) @[@ @]"
            " + @[@] (x) @[@]"));
    CHECK_THROWS_AS(delta_foissy(F("@[x]")), std::domain_error);
    CHECK_THROWS_AS(delta_foissy(F("@ y")), std::domain_error);
}

TEST_CASE("delta_rt golden values") {
    CHECK(delta_rt(Forest()) == T("1 (x) 1"));
    CHECK(delta_rt(F("x")) == T("x (x) 1 + 1 (x) x"));
    CHECK(delta_rt(F("@[y @[x]]")) ==
          T("@[y @[x]] (x) 1 + x (x) @[y @] + y (x) @[@[x]] + @[x] (x) @[y]"
            " + y x (x) @[@] + y @[x] (x) @ + 1 (x) @[y @[x]]"));
}

TEST_CASE("delta_rt agrees with the admissible-cut oracle on trees") {
    // single trees up to 5 vertices over {x, y}
    for (std::size_t n = 1; n <= 5; ++n) {
        ForestEnumerator en(n, {"x", "y"});
        while (auto f = en.next()) {
            if (f->breadth() != 1) continue;
            const Tree& t = f->trees().front();
            CHECK(delta_rt(*f) == oracles::delta_rt_cut_oracle(t));
        }
    }
}

TEST_CASE("delta_rt is multiplicative by construction") {
    const Forest a = F("@[x]"), b = F("y @");
    CHECK(delta_rt(concat(a, b)) == delta_rt(a) * delta_rt(b));
}
