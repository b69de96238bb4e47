#include "foresthopf/forest.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace foresthopf {

bool valid_generator_name(const std::string& name) {
    if (name.empty() || name == "1" || name == "@") return false;
    auto head = name[0];
    if (!(std::isalpha(static_cast<unsigned char>(head)) || head == '_')) return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

Decoration Decoration::generator(const std::string& name) {
    if (!valid_generator_name(name))
        throw FormatError("invalid generator name '" + name + "'");
    return Decoration(name);
}

namespace {

std::string tree_text(const Decoration& label, const std::vector<Tree>& children) {
    std::string s = label.text();
    if (!children.empty()) {
        s += '[';
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) s += ' ';
            s += children[i].text();
        }
        s += ']';
    }
    return s;
}

}  // namespace

Tree::Tree(Decoration label) : label_(std::move(label)), count_(1) {
    text_ = tree_text(label_, children_);
}

Tree::Tree(Decoration label, std::vector<Tree> children)
    : label_(std::move(label)), children_(std::move(children)) {
    if (!children_.empty() && !label_.is_sigma())
        throw std::domain_error("generator label '" + label_.name() +
                                "' on internal vertex");
    count_ = 1;
    for (const Tree& c : children_) count_ += c.vertex_count();
    text_ = tree_text(label_, children_);
}

std::size_t Tree::depth() const {
    if (label_.is_sigma()) {
        std::size_t d = 0;
        for (const Tree& c : children_) d = std::max(d, c.depth());
        return d + 1;  // the whole tree is a B+ image
    }
    return 0;  // generator leaf
}

Forest::Forest(Tree t) : trees_{std::move(t)} {
    count_ = trees_[0].vertex_count();
    text_ = trees_[0].text();
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    if (trees_.empty()) return;
    text_.clear();
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        count_ += trees_[i].vertex_count();
        if (i) text_ += ' ';
        text_ += trees_[i].text();
    }
}

std::size_t Forest::depth() const {
    std::size_t d = 0;
    for (const Tree& t : trees_) d = std::max(d, t.depth());
    return d;
}

Tree leaf(const Decoration& d) { return Tree(d); }

Tree bplus(const Forest& f) { return Tree(Decoration::sigma(), f.trees()); }

Forest concat(const Forest& a, const Forest& b) {
    std::vector<Tree> trees = a.trees();
    trees.insert(trees.end(), b.trees().begin(), b.trees().end());
    return Forest(std::move(trees));
}

namespace {

void hl_visit(const Tree& t, VertexPath at, std::vector<VertexPath>& out) {
    out.push_back(at);
    const auto& kids = t.children();
    for (std::size_t i = kids.size(); i-- > 0;) {
        VertexPath next = at;
        next.path.push_back(i);
        hl_visit(kids[i], std::move(next), out);
    }
}

}  // namespace

std::vector<VertexPath> hl_order(const Forest& f) {
    std::vector<VertexPath> out;
    out.reserve(f.vertex_count());
    const auto& trees = f.trees();
    for (std::size_t i = trees.size(); i-- > 0;)
        hl_visit(trees[i], VertexPath{i, {}}, out);
    return out;
}

const Decoration& label_at(const Forest& f, const VertexPath& v) {
    const Tree* t = &f.trees().at(v.tree);
    for (std::size_t step : v.path) t = &t->children().at(step);
    return t->label();
}

namespace {

// Rank of every vertex under <=_{h,l}, in a structure mirroring the forest.
struct RankNode {
    std::size_t rank;
    std::vector<RankNode> kids;
};

std::size_t rank_visit(const Tree& t, std::size_t counter, RankNode& out) {
    out.rank = counter++;
    out.kids.resize(t.children().size());
    for (std::size_t i = t.children().size(); i-- > 0;)
        counter = rank_visit(t.children()[i], counter, out.kids[i]);
    return counter;
}

std::vector<RankNode> assign_ranks(const Forest& f) {
    std::vector<RankNode> nodes(f.trees().size());
    std::size_t counter = 0;
    for (std::size_t i = f.trees().size(); i-- > 0;)
        counter = rank_visit(f.trees()[i], counter, nodes[i]);
    return nodes;
}

// Induced subforest on the vertices selected by keep(rank). A kept vertex
// keeps the induced children below it; dropped vertices let their surviving
// subtrees float up, preserving planar order.
template <typename Keep>
void induce(const Tree& t, const RankNode& r, const Keep& keep,
            std::vector<Tree>& out) {
    std::vector<Tree> kids;
    for (std::size_t i = 0; i < t.children().size(); ++i)
        induce(t.children()[i], r.kids[i], keep, kids);
    if (keep(r.rank))
        out.push_back(kids.empty() ? Tree(t.label())
                                   : Tree(t.label(), std::move(kids)));
    else
        for (Tree& k : kids) out.push_back(std::move(k));
}

template <typename Keep>
Forest induced_subforest(const Forest& f, const std::vector<RankNode>& ranks,
                         const Keep& keep) {
    std::vector<Tree> trees;
    for (std::size_t i = 0; i < f.trees().size(); ++i)
        induce(f.trees()[i], ranks[i], keep, trees);
    return Forest(std::move(trees));
}

}  // namespace

std::pair<Forest, Forest> split_at(const Forest& f, VertexRef a) {
    if (a >= f.vertex_count())
        throw std::out_of_range("vertex rank " + std::to_string(a) +
                                " out of range for forest with " +
                                std::to_string(f.vertex_count()) + " vertices");
    const auto ranks = assign_ranks(f);
    Forest above = induced_subforest(f, ranks, [a](std::size_t r) { return r > a; });
    Forest below = induced_subforest(f, ranks, [a](std::size_t r) { return r < a; });
    return {std::move(above), std::move(below)};
}

std::strong_ordering forest_order(const Forest& a, const Forest& b) {
    if (a.vertex_count() != b.vertex_count())
        return a.vertex_count() <=> b.vertex_count();
    return a.text() <=> b.text();
}

}  // namespace foresthopf
