#include "foresthopf/textio.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include <json.hpp>

namespace foresthopf {

namespace {

enum class Tok { End, At, Ident, Number, LBracket, RBracket, Plus, Minus, Star, TensorSep };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& cur() const { return cur_; }

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        cur_.pos = pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::End, "", pos_};
            return;
        }
        char c = src_[pos_];
        switch (c) {
            case '@': cur_ = {Tok::At, "@", pos_++}; return;
            case '[': cur_ = {Tok::LBracket, "[", pos_++}; return;
            case ']': cur_ = {Tok::RBracket, "]", pos_++}; return;
            case '+': cur_ = {Tok::Plus, "+", pos_++}; return;
            case '-': cur_ = {Tok::Minus, "-", pos_++}; return;
            case '*': cur_ = {Tok::Star, "*", pos_++}; return;
            case '(':
                if (src_.substr(pos_, 3) == "(x)") {
                    cur_ = {Tok::TensorSep, "(x)", pos_};
                    pos_ += 3;
                    return;
                }
                throw ParseError("unexpected '('", pos_);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '/') {
                ++pos_;
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw ParseError("expected digits after '/'", pos_);
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
            cur_ = {Tok::Number, std::string(src_.substr(start, pos_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            cur_ = {Tok::Ident, std::string(src_.substr(start, pos_ - start)), start};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    Token cur_;
};

bool starts_tree(const Token& t) { return t.kind == Tok::At || t.kind == Tok::Ident; }

Tree parse_tree(Lexer& lx) {
    const Token label_tok = lx.cur();
    Decoration label = Decoration::sigma();
    if (label_tok.kind == Tok::At) {
        // sigma
    } else if (label_tok.kind == Tok::Ident) {
        if (!valid_generator_name(label_tok.text))
            throw ParseError("reserved or invalid label '" + label_tok.text + "'",
                             label_tok.pos);
        label = Decoration::generator(label_tok.text);
    } else {
        throw ParseError("expected a vertex label", label_tok.pos);
    }
    lx.advance();

    std::vector<Tree> children;
    if (lx.cur().kind == Tok::LBracket) {
        lx.advance();
        while (starts_tree(lx.cur())) children.push_back(parse_tree(lx));
        if (lx.cur().kind != Tok::RBracket)
            throw ParseError("expected ']'", lx.cur().pos);
        lx.advance();
        if (!children.empty() && !label.is_sigma())
            throw ParseError("generator label '" + label.name() + "' on internal vertex",
                             label_tok.pos);
    }
    return children.empty() ? Tree(label) : Tree(label, std::move(children));
}

// A forest inside a larger expression: "1" or a run of trees.
Forest parse_forest_part(Lexer& lx) {
    if (lx.cur().kind == Tok::Number && lx.cur().text == "1") {
        lx.advance();
        return Forest();
    }
    if (!starts_tree(lx.cur()))
        throw ParseError("expected a forest", lx.cur().pos);
    std::vector<Tree> trees;
    while (starts_tree(lx.cur())) trees.push_back(parse_tree(lx));
    return Forest(std::move(trees));
}

void expect_end(const Lexer& lx) {
    if (lx.cur().kind != Tok::End)
        throw ParseError("unexpected trailing input", lx.cur().pos);
}

// Shared term scanner for lincomb and tensor text: sign, optional "coeff *",
// then the payload parsed by the callback.
template <typename Payload>
void parse_terms(Lexer& lx, const Payload& payload) {
    if (lx.cur().kind == Tok::Number && lx.cur().text == "0") {
        lx.advance();
        expect_end(lx);
        return;
    }
    bool first = true;
    for (;;) {
        Rational sign = 1;
        if (lx.cur().kind == Tok::Plus || lx.cur().kind == Tok::Minus) {
            if (lx.cur().kind == Tok::Minus) sign = -1;
            lx.advance();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", lx.cur().pos);
        }
        Rational coeff = sign;
        if (lx.cur().kind == Tok::Number) {
            const Token num = lx.cur();
            Lexer ahead = lx;
            ahead.advance();
            if (ahead.cur().kind == Tok::Star) {
                coeff = sign * parse_rational(num.text);
                lx = ahead;
                lx.advance();
            }
        }
        payload(coeff);
        first = false;
        if (lx.cur().kind == Tok::End) return;
    }
}

struct TensorDisplayKey {
    std::size_t total;
    std::size_t left_count;
    std::string left_text;
    std::string right_text;
};

// Canonical printing order for tensors: descending by total vertex count,
// then left leg size, then the two leg texts.
bool tensor_display_before(const Tensor2::Key& a, const Tensor2::Key& b) {
    auto key = [](const Tensor2::Key& k) {
        return std::tuple(k.first.vertex_count() + k.second.vertex_count(),
                          k.first.vertex_count(), k.first.text(), k.second.text());
    };
    return key(a) > key(b);
}

void append_term(std::string& out, bool first, const Rational& c,
                 const std::string& payload) {
    const bool neg = c < 0;
    if (first) {
        if (neg) out += "- ";
    } else {
        out += neg ? " - " : " + ";
    }
    Rational mag = neg ? Rational(-c) : c;
    if (mag != 1) {
        out += rational_to_string(mag);
        out += " * ";
    }
    out += payload;
}

}  // namespace

Forest parse_forest(std::string_view s) {
    Lexer lx(s);
    Forest f = parse_forest_part(lx);
    expect_end(lx);
    return f;
}

std::string serialize_forest(const Forest& f) { return f.text(); }

LinComb parse_lincomb(std::string_view s) {
    Lexer lx(s);
    LinComb out;
    parse_terms(lx, [&](const Rational& coeff) {
        Forest f = parse_forest_part(lx);
        out.add_term(f, coeff);
    });
    return out;
}

std::string serialize_lincomb(const LinComb& v) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    // map order is ascending (vertex count, text); print descending
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        append_term(out, first, it->second, it->first.text());
        first = false;
    }
    return out;
}

Tensor2 parse_tensor2(std::string_view s) {
    Lexer lx(s);
    Tensor2 out;
    parse_terms(lx, [&](const Rational& coeff) {
        Forest left = parse_forest_part(lx);
        if (lx.cur().kind != Tok::TensorSep)
            throw ParseError("expected '(x)'", lx.cur().pos);
        lx.advance();
        Forest right = parse_forest_part(lx);
        out.add_term(left, right, coeff);
    });
    return out;
}

std::string serialize_tensor2(const Tensor2& t) {
    if (t.is_zero()) return "0";
    std::vector<const Tensor2::Terms::value_type*> terms;
    terms.reserve(t.terms().size());
    for (const auto& kv : t.terms()) terms.push_back(&kv);
    std::sort(terms.begin(), terms.end(),
              [](auto* a, auto* b) { return tensor_display_before(a->first, b->first); });
    std::string out;
    bool first = true;
    for (auto* kv : terms) {
        append_term(out, first, kv->second,
                    kv->first.first.text() + " (x) " + kv->first.second.text());
        first = false;
    }
    return out;
}

namespace {

using Json = nlohmann::ordered_json;

Json tree_to_json(const Tree& t) {
    Json j;
    j["label"] = t.label().text();
    Json kids = Json::array();
    for (const Tree& c : t.children()) kids.push_back(tree_to_json(c));
    j["children"] = std::move(kids);
    return j;
}

Json forest_to_json_value(const Forest& f) {
    Json j = Json::array();
    for (const Tree& t : f.trees()) j.push_back(tree_to_json(t));
    return j;
}

Tree tree_from_json_value(const Json& j) {
    if (!j.is_object() || !j.contains("label") || !j.contains("children"))
        throw FormatError("tree must be an object with 'label' and 'children'");
    if (!j["label"].is_string()) throw FormatError("tree label must be a string");
    if (!j["children"].is_array()) throw FormatError("tree children must be an array");
    const std::string label = j["label"].get<std::string>();
    std::vector<Tree> children;
    for (const Json& c : j["children"]) children.push_back(tree_from_json_value(c));
    Decoration d = Decoration::sigma();
    if (label != "@") {
        if (!valid_generator_name(label))
            throw FormatError("invalid tree label '" + label + "'");
        d = Decoration::generator(label);
        if (!children.empty())
            throw FormatError("generator label '" + label + "' on internal vertex");
    }
    return children.empty() ? Tree(d) : Tree(d, std::move(children));
}

Forest forest_from_json_value(const Json& j) {
    if (!j.is_array()) throw FormatError("forest must be an array of trees");
    std::vector<Tree> trees;
    for (const Json& t : j) trees.push_back(tree_from_json_value(t));
    return Forest(std::move(trees));
}

Json parse_json(std::string_view s) {
    try {
        return Json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
}

const Json& terms_array(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw FormatError("expected an object with a 'terms' array");
    return j["terms"];
}

Rational coeff_from_json(const Json& term) {
    if (!term.contains("coeff") || !term["coeff"].is_string())
        throw FormatError("term coefficient must be a string");
    return parse_rational(term["coeff"].get<std::string>());
}

}  // namespace

std::string to_json(const Forest& f) { return forest_to_json_value(f).dump(); }

std::string to_json(const LinComb& v) {
    Json j;
    Json terms = Json::array();
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        Json term;
        term["coeff"] = rational_to_string(it->second);
        term["forest"] = forest_to_json_value(it->first);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

std::string to_json(const Tensor2& t) {
    std::vector<const Tensor2::Terms::value_type*> sorted;
    for (const auto& kv : t.terms()) sorted.push_back(&kv);
    std::sort(sorted.begin(), sorted.end(),
              [](auto* a, auto* b) { return tensor_display_before(a->first, b->first); });
    Json j;
    Json terms = Json::array();
    for (auto* kv : sorted) {
        Json term;
        term["coeff"] = rational_to_string(kv->second);
        term["left"] = forest_to_json_value(kv->first.first);
        term["right"] = forest_to_json_value(kv->first.second);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

Forest forest_from_json(std::string_view s) {
    return forest_from_json_value(parse_json(s));
}

LinComb lincomb_from_json(std::string_view s) {
    const Json j = parse_json(s);
    LinComb out;
    for (const Json& term : terms_array(j)) {
        if (!term.is_object() || !term.contains("forest"))
            throw FormatError("lincomb term must have 'coeff' and 'forest'");
        out.add_term(forest_from_json_value(term["forest"]), coeff_from_json(term));
    }
    return out;
}

Tensor2 tensor2_from_json(std::string_view s) {
    const Json j = parse_json(s);
    Tensor2 out;
    for (const Json& term : terms_array(j)) {
        if (!term.is_object() || !term.contains("left") || !term.contains("right"))
            throw FormatError("tensor term must have 'coeff', 'left' and 'right'");
        out.add_term(forest_from_json_value(term["left"]),
                     forest_from_json_value(term["right"]), coeff_from_json(term));
    }
    return out;
}

}  // namespace foresthopf
