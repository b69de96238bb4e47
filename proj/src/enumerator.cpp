#include "foresthopf/enumerator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace foresthopf {

namespace {

struct Counts {
    std::vector<BigInt> f, t;
};

Counts build_counts(std::size_t n, std::size_t alphabet_size) {
    Counts c;
    c.f.assign(n + 1, BigInt(0));
    c.t.assign(n + 1, BigInt(0));
    c.f[0] = 1;
    if (n >= 1) c.t[1] = BigInt(alphabet_size) + 1;
    for (std::size_t m = 1; m <= n; ++m) {
        if (m >= 2) c.t[m] = c.f[m - 1];
        BigInt total = 0;
        for (std::size_t k = 1; k <= m; ++k) total += c.t[k] * c.f[m - k];
        c.f[m] = total;
    }
    return c;
}

std::uint64_t to_index(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::overflow_error("enumeration space does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

}  // namespace

BigInt count_forests(std::size_t n, std::size_t alphabet_size) {
    return build_counts(n, alphabet_size).f[n];
}

ForestEnumerator::ForestEnumerator(std::size_t n, std::vector<std::string> alphabet)
    : n_(n) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    letters_.push_back(Decoration::sigma());
    for (const std::string& name : alphabet)
        letters_.push_back(Decoration::generator(name));

    const Counts c = build_counts(n, alphabet.size());
    forests_.resize(n + 1);
    trees_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        forests_[i] = to_index(c.f[i]);
        trees_[i] = to_index(c.t[i]);
    }
}

Tree ForestEnumerator::tree_at(std::size_t k, std::uint64_t idx) const {
    if (k == 1) return Tree(letters_[idx]);
    return bplus(forest_at(k - 1, idx));
}

Forest ForestEnumerator::forest_at(std::size_t m, std::uint64_t idx) const {
    std::vector<Tree> trees;
    while (m > 0) {
        // first tree takes k vertices, largest k first
        std::size_t k = m;
        for (;; --k) {
            const std::uint64_t block = trees_[k] * forests_[m - k];
            if (idx < block) break;
            idx -= block;
        }
        const std::uint64_t rest = forests_[m - k];
        trees.push_back(tree_at(k, idx / rest));
        idx %= rest;
        m -= k;
    }
    return Forest(std::move(trees));
}

Forest ForestEnumerator::at(std::uint64_t idx) const {
    if (idx >= total()) throw std::out_of_range("forest index out of range");
    return forest_at(n_, idx);
}

std::optional<Forest> ForestEnumerator::next() {
    if (next_ >= total()) return std::nullopt;
    return at(next_++);
}

}  // namespace foresthopf
