#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foresthopf/forest.hpp"
#include "foresthopf/rational.hpp"

namespace foresthopf {

// Number of decorated planar rooted forests with exactly n vertices over an
// alphabet of the given size, by the convolution recurrence
//   t(1) = |alphabet| + 1,  t(k) = f(k-1) for k >= 2,
//   f(0) = 1,               f(n) = sum_{k=1..n} t(k) f(n-k).
BigInt count_forests(std::size_t n, std::size_t alphabet_size);

// Streams every forest with exactly n vertices, each exactly once, in a fixed
// order: the first tree takes k = n down to 1 vertices, trees of a given size
// enumerate as leaves (sigma first, then the alphabet) or as B+ of smaller
// forests, and the remaining forest recurses. Generation is by index
// decoding, so nothing is materialized and at() is safe to call from
// multiple threads.
class ForestEnumerator {
public:
    ForestEnumerator(std::size_t n, std::vector<std::string> alphabet);

    std::uint64_t total() const { return forests_[n_]; }
    Forest at(std::uint64_t idx) const;

    // Single-consumer streaming interface.
    std::optional<Forest> next();
    void reset() { next_ = 0; }

private:
    Tree tree_at(std::size_t k, std::uint64_t idx) const;
    Forest forest_at(std::size_t m, std::uint64_t idx) const;

    std::size_t n_;
    std::vector<Decoration> letters_;
    std::vector<std::uint64_t> forests_;  // f(0..n)
    std::vector<std::uint64_t> trees_;    // t(0..n); t(0) unused
    std::uint64_t next_ = 0;
};

}  // namespace foresthopf
