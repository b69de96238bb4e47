#include "foresthopf/hopf.hpp"

#include <stdexcept>

namespace foresthopf {

Endo Endo::zero() {
    return Endo([](const Forest&) { return LinComb(); });
}

Endo Endo::identity() {
    return Endo([](const Forest& f) { return LinComb(f); });
}

LinComb Endo::operator()(const LinComb& v) const {
    LinComb out;
    for (const auto& [f, c] : v.terms()) out += c * action_(f);
    return out;
}

LinComb d_eps(const Forest& f) {
    LinComb out;
    const Tensor2 t = delta_eps(f);
    for (const auto& [k, c] : t.terms())
        out.add_term(concat(k.first, k.second), c);
    return out;
}

LinComb d_eps(const LinComb& v) {
    LinComb out;
    for (const auto& [f, c] : v.terms()) out += c * d_eps(f);
    return out;
}

Endo d_eps_endo() {
    return Endo([](const Forest& f) { return d_eps(f); });
}

Endo convolve(const Endo& f, const Endo& g) {
    return Endo([f, g](const Forest& x) {
        LinComb out;
        const Tensor2 t = delta_eps(x);
        for (const auto& [k, c] : t.terms())
            out += c * (f(k.first) * g(k.second));
        return out;
    });
}

Endo conv_power(const Endo& f, unsigned k) {
    if (k == 0)
        throw std::invalid_argument(
            "conv_power requires k >= 1: convolution has no unit");
    Endo acc = f;
    for (unsigned i = 1; i < k; ++i) acc = convolve(acc, f);
    return acc;
}

Endo circ_convolve(const Endo& f, const Endo& g) {
    Endo conv = convolve(f, g);
    return Endo([conv, f, g](const Forest& x) { return conv(x) + f(x) + g(x); });
}

std::size_t nilpotency_witness(const Forest& f) {
    const std::size_t bound = f.vertex_count() + 1;
    Endo power = d_eps_endo();
    for (std::size_t k = 1;; ++k) {
        if (power(f).is_zero()) return k;
        if (k >= bound)
            throw std::logic_error("nilpotency bound exceeded on " + f.text());
        power = convolve(power, d_eps_endo());
    }
}

LinComb antipode(const Forest& f) {
    LinComb acc;
    LinComb power(f);  // D_eps^{(compose k)}(f), starting at k = 0
    BigInt fact = 1;
    for (std::size_t k = 0; k <= f.vertex_count(); ++k) {
        if (k > 0) {
            power = d_eps(power);
            fact *= k;
        }
        if (power.is_zero()) break;
        const Rational coeff((k % 2 == 0) ? BigInt(1) : BigInt(-1), fact);
        acc += coeff * power;
    }
    return -acc;
}

LinComb antipode(const LinComb& v) {
    LinComb out;
    for (const auto& [f, c] : v.terms()) out += c * antipode(f);
    return out;
}

Endo antipode_endo() {
    return Endo([](const Forest& f) { return antipode(f); });
}

bool antipode_check(const Forest& f) {
    const LinComb s = antipode(f);
    const Tensor2 delta = delta_eps(f);
    LinComb left = s + LinComb(f);
    LinComb right = left;
    for (const auto& [k, c] : delta.terms()) {
        left += c * (antipode(k.first) * LinComb(k.second));
        right += c * (LinComb(k.first) * antipode(k.second));
    }
    return left.is_zero() && right.is_zero();
}

}  // namespace foresthopf
