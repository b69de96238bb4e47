#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "foresthopf/errors.hpp"

namespace foresthopf {

// Vertex label: the grafting symbol sigma (written "@") or a named generator.
// Generators are identifiers and may decorate leaves only; "@" and "1" are
// reserved tokens of the text format and are not legal generator names.
class Decoration {
public:
    static Decoration sigma() { return Decoration(std::string()); }
    static Decoration generator(const std::string& name);

    bool is_sigma() const { return name_.empty(); }
    const std::string& name() const { return name_; }
    std::string text() const { return is_sigma() ? "@" : name_; }

    bool operator==(const Decoration&) const = default;

private:
    explicit Decoration(std::string name) : name_(std::move(name)) {}
    std::string name_;  // empty means sigma
};

bool valid_generator_name(const std::string& name);

// Planar rooted tree with ordered children. Construction enforces the
// leaf-decoration rule: a vertex with children must carry sigma.
class Tree {
public:
    explicit Tree(Decoration label);
    Tree(Decoration label, std::vector<Tree> children);

    const Decoration& label() const { return label_; }
    const std::vector<Tree>& children() const { return children_; }
    std::size_t vertex_count() const { return count_; }
    std::size_t depth() const;

    // Canonical text ("x", "@", "@[y @[x]]", ...). Injective on trees, so it
    // doubles as the structural identity.
    const std::string& text() const { return text_; }

    bool operator==(const Tree& o) const { return text_ == o.text_; }

private:
    Decoration label_;
    std::vector<Tree> children_;
    std::size_t count_;
    std::string text_;
};

// Ordered sequence of trees; the empty forest is the multiplicative unit 1.
class Forest {
public:
    Forest() = default;
    explicit Forest(Tree t);
    explicit Forest(std::vector<Tree> trees);

    const std::vector<Tree>& trees() const { return trees_; }
    bool empty() const { return trees_.empty(); }
    std::size_t breadth() const { return trees_.size(); }
    std::size_t vertex_count() const { return count_; }
    std::size_t depth() const;

    const std::string& text() const { return text_; }

    bool operator==(const Forest& o) const { return text_ == o.text_; }

private:
    std::vector<Tree> trees_;
    std::size_t count_ = 0;
    std::string text_ = "1";
};

// Vertices are ranked by the <=_{h,l} linear order; a VertexRef is the rank.
using VertexRef = std::size_t;

// Structural address of one vertex: tree index, then child indices downward.
struct VertexPath {
    std::size_t tree = 0;
    std::vector<std::size_t> path;
    bool operator==(const VertexPath&) const = default;
};

Tree leaf(const Decoration& d);
Tree bplus(const Forest& f);
Forest concat(const Forest& a, const Forest& b);

// All vertices in strictly ascending <=_{h,l} order: trees scanned right to
// left, each tree root first, then its children right to left. Index in the
// returned sequence is the VertexRef.
std::vector<VertexPath> hl_order(const Forest& f);

const Decoration& label_at(const Forest& f, const VertexPath& v);

// (B_a, R_a): induced subforests on the vertices strictly above / strictly
// below rank a. Components keep the planar order of their roots in f.
std::pair<Forest, Forest> split_at(const Forest& f, VertexRef a);

// Total order shared by term maps and canonical printing:
// vertex count first, then canonical text.
std::strong_ordering forest_order(const Forest& a, const Forest& b);

struct ForestLess {
    bool operator()(const Forest& a, const Forest& b) const {
        return forest_order(a, b) < 0;
    }
};

}  // namespace foresthopf
