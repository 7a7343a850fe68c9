#include "ainfty/diagrams.hpp"

#include <algorithm>
#include <cctype>

namespace ainfty {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("diagram expression: " + what + " at position " +
                                    std::to_string(pos) + " in '" + text + "'");
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected a label");
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    // arg := label | m INT ( arg, ... )
    Tree arg(std::vector<std::string>& leaves) {
        skip_ws();
        std::size_t mark = pos;
        std::string name = ident();
        skip_ws();
        if (pos < text.size() && text[pos] == '(') {
            // multiplication node: "m3" or "m_3"
            std::string digits = name.substr(1);
            if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
            bool numeric = !digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            });
            if (name[0] != 'm' || !numeric) {
                pos = mark;
                fail("labels cannot be applied; multiplications look like m2(...)");
            }
            int arity = std::stoi(digits);
            expect('(');
            Tree node;
            node.children.push_back(arg(leaves));
            while (eat(',')) node.children.push_back(arg(leaves));
            expect(')');
            if (static_cast<int>(node.children.size()) != arity) {
                pos = mark;
                fail("m" + digits + " applied to " + std::to_string(node.children.size()) +
                     " arguments");
            }
            return node;
        }
        leaves.push_back(name);
        return Tree::leaf();
    }
};

// Natural label order: alphabetic prefix, then numeric suffix ("a2" < "a10").
bool natural_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        long long num = -1;
        if (i < s.size()) num = std::stoll(s.substr(i));
        return std::make_pair(s.substr(0, i), num);
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na != nb) return na < nb;
    return a < b;
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
    Parser p(text);
    p.expect('<');
    std::vector<Tree> args;
    std::vector<std::vector<std::string>> arg_leaves;
    std::vector<std::string> flat;
    {
        std::vector<std::string> leaves;
        args.push_back(p.arg(leaves));
        arg_leaves.push_back(leaves);
        flat.insert(flat.end(), leaves.begin(), leaves.end());
    }
    while (p.eat(',')) {
        std::vector<std::string> leaves;
        args.push_back(p.arg(leaves));
        arg_leaves.push_back(leaves);
        flat.insert(flat.end(), leaves.begin(), leaves.end());
    }
    p.expect('>');
    p.expect('_');
    p.expect('{');
    int k = p.integer();
    p.expect(',');
    int l = p.integer();
    p.expect('}');
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");

    if (static_cast<int>(args.size()) != k + l + 2)
        p.fail("a (" + std::to_string(k) + "," + std::to_string(l) + ") pairing takes " +
               std::to_string(k + l + 2) + " arguments, got " + std::to_string(args.size()));

    // Rank the leaf labels in natural order; they must read as one
    // counterclockwise cycle, wrapping only inside the right slot.
    const std::size_t N = flat.size();
    std::vector<std::string> sorted = flat;
    std::sort(sorted.begin(), sorted.end(), natural_less);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        p.fail("leaf labels must be distinct");
    std::map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < N; ++i) rank.emplace(sorted[i], i + 1);

    for (std::size_t i = 0; i + 1 < N; ++i) {
        std::size_t a = rank.at(flat[i]), b = rank.at(flat[i + 1]);
        if (b != (a % N) + 1)
            p.fail("labels must run counterclockwise; '" + flat[i + 1] + "' does not follow '" +
                   flat[i] + "'");
    }

    const std::vector<std::string>& right_leaves = arg_leaves.back();
    int wrap = -1;
    for (std::size_t j = 0; j < right_leaves.size(); ++j)
        if (rank.at(right_leaves[j]) == N) wrap = static_cast<int>(j) + 1;
    if (wrap < 0) p.fail("the last input must sit in the far right slot");

    std::vector<Tree> top(args.begin(), args.begin() + k);
    Tree left = args[k];
    std::vector<Tree> bottom(args.begin() + k + 1, args.begin() + k + 1 + l);
    Tree right = args.back();
    return Diagram::assemble(std::move(top), std::move(left), std::move(bottom), std::move(right),
                             wrap);
}

}  // namespace ainfty
