#include "slicecheck/knots/expression.hpp"

#include <cctype>
#include <numeric>

namespace slicecheck::knots {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_cable_parameters(int p, int q) {
    if (p < 2) throw InputError("cable/torus parameter p must be at least 2");
    if (std::gcd(p, q) != 1) throw InputError("cable/torus parameters must be coprime");
}

bool is_compound(const KnotExpression& e) {
    return std::holds_alternative<node::Sum>(e.node().value);
}

}  // namespace

KnotExpression KnotExpression::unknot() {
    return KnotExpression(std::make_shared<const KnotNode>(KnotNode{node::Unknot{}}));
}

KnotExpression KnotExpression::atom(std::string name, std::optional<SeifertMatrix> seifert) {
    if (name.empty()) throw InputError("atom name must not be empty");
    return KnotExpression(std::make_shared<const KnotNode>(KnotNode{node::Atom{std::move(name), std::move(seifert)}}));
}

KnotExpression KnotExpression::mirror(KnotExpression e) {
    return KnotExpression(std::make_shared<const KnotNode>(KnotNode{node::Mirror{std::move(e)}}));
}

KnotExpression KnotExpression::reverse(KnotExpression e) {
    return KnotExpression(std::make_shared<const KnotNode>(KnotNode{node::Reverse{std::move(e)}}));
}

KnotExpression KnotExpression::sum(KnotExpression a, KnotExpression b) {
    return KnotExpression(std::make_shared<const KnotNode>(KnotNode{node::Sum{std::move(a), std::move(b)}}));
}

KnotExpression KnotExpression::cable(KnotExpression e, int p, int q) {
    check_cable_parameters(p, q);
    return KnotExpression(std::make_shared<const KnotNode>(KnotNode{node::Cable{std::move(e), p, q}}));
}

KnotExpression KnotExpression::torus(int p, int q) {
    check_cable_parameters(p, q);
    return KnotExpression(std::make_shared<const KnotNode>(KnotNode{node::Torus{p, q}}));
}

std::string KnotExpression::to_string() const {
    return std::visit(
        overloaded{
            [](const node::Unknot&) -> std::string { return "unknot"; },
            [](const node::Atom& a) { return "atom(" + a.name + ")"; },
            [](const node::Mirror& m) { return "mirror(" + m.inner.to_string() + ")"; },
            [](const node::Reverse& r) { return "reverse(" + r.inner.to_string() + ")"; },
            [](const node::Sum& s) { return "sum(" + s.left.to_string() + "," + s.right.to_string() + ")"; },
            [](const node::Cable& c) {
                return "cable(" + c.companion.to_string() + "," + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
            },
            [](const node::Torus& t) { return "torus(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")"; },
        },
        node_->value);
}

std::string KnotExpression::pretty() const {
    auto wrapped = [](const KnotExpression& e) {
        return is_compound(e) ? "(" + e.pretty() + ")" : e.pretty();
    };
    return std::visit(
        overloaded{
            [](const node::Unknot&) -> std::string { return "U"; },
            [](const node::Atom& a) { return a.name; },
            [](const node::Mirror& m) { return "m(" + m.inner.pretty() + ")"; },
            [&](const node::Reverse& r) { return wrapped(r.inner) + "^r"; },
            [](const node::Sum& s) { return s.left.pretty() + " # " + s.right.pretty(); },
            [&](const node::Cable& c) {
                return wrapped(c.companion) + "_(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
            },
            [](const node::Torus& t) { return "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")"; },
        },
        node_->value);
}

}  // namespace slicecheck::knots

namespace slicecheck::knots {

namespace {

class Parser {
public:
    Parser(const std::string& text, const AtomLookup& lookup) : s_(text), lookup_(lookup) {}

    KnotExpression parse() {
        KnotExpression e = expression();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("knot expression '" + s_ + "', position " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word() {
        skip();
        const auto start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                    s_[pos_] == '.' || s_[pos_] == '-'))
            ++pos_;
        if (start == pos_) fail("expected a name");
        return s_.substr(start, pos_ - start);
    }

    int integer() {
        skip();
        const auto start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string digits = s_.substr(start, pos_ - start);
        try {
            std::size_t used = 0;
            const int v = std::stoi(digits, &used);
            if (used == digits.size()) return v;
        } catch (const std::exception&) {
        }
        pos_ = start;
        fail("expected an integer");
    }

    KnotExpression expression() {
        skip();
        const auto start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string head = s_.substr(start, pos_ - start);
        if (head == "unknot") return KnotExpression::unknot();
        if (head == "atom") {
            expect('(');
            const std::string name = word();
            expect(')');
            std::optional<SeifertMatrix> v;
            if (lookup_) v = lookup_(name);
            return KnotExpression::atom(name, std::move(v));
        }
        if (head == "mirror" || head == "reverse") {
            expect('(');
            KnotExpression inner = expression();
            expect(')');
            return head == "mirror" ? KnotExpression::mirror(inner) : KnotExpression::reverse(inner);
        }
        if (head == "sum") {
            expect('(');
            KnotExpression a = expression();
            expect(',');
            KnotExpression b = expression();
            expect(')');
            return KnotExpression::sum(a, b);
        }
        if (head == "cable") {
            expect('(');
            KnotExpression inner = expression();
            expect(',');
            const int p = integer();
            expect(',');
            const int q = integer();
            expect(')');
            return KnotExpression::cable(inner, p, q);
        }
        if (head == "torus") {
            expect('(');
            const int p = integer();
            expect(',');
            const int q = integer();
            expect(')');
            return KnotExpression::torus(p, q);
        }
        pos_ = start;
        fail(head.empty() ? "expected a knot expression" : "unknown constructor '" + head + "'");
    }

    const std::string& s_;
    const AtomLookup& lookup_;
    std::size_t pos_ = 0;
};

}  // namespace

KnotExpression parse_expression(const std::string& text, const AtomLookup& lookup) {
    return Parser(text, lookup).parse();
}

}  // namespace slicecheck::knots
