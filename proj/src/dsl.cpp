#include "arthur/dsl.hpp"

#include <cctype>

namespace arthur {

namespace {

// Tiny cursor over the input with whitespace skipping.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

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
    bool eat_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
};

std::optional<long long> parse_int(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    bool neg = false;
    if (c.pos < c.text.size() && (c.text[c.pos] == '-' || c.text[c.pos] == '+')) {
        neg = c.text[c.pos] == '-';
        ++c.pos;
    }
    if (c.pos >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
        c.pos = start;
        return std::nullopt;
    }
    long long v = 0;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
        v = v * 10 + (c.text[c.pos++] - '0');
    return neg ? -v : v;
}

std::optional<Rat> parse_rational(Cursor& c) {
    auto num = parse_int(c);
    if (!num) return std::nullopt;
    if (c.pos < c.text.size() && c.text[c.pos] == '/') {
        ++c.pos;
        auto den = parse_int(c);
        if (!den || *den == 0) return std::nullopt;
        return Rat(*num, *den);
    }
    return Rat(*num);
}

std::optional<GaussRat> parse_s(Cursor& c) {
    auto r = parse_rational(c);
    if (!r) return std::nullopt;
    if (c.pos < c.text.size() && c.text[c.pos] == 'i') {
        ++c.pos;
        return GaussRat{Rat(0), *r};
    }
    return GaussRat{*r, Rat(0)};
}

}  // namespace

ParseResult<GroupDescriptor> parse_group(std::string_view text) {
    Cursor c{text};
    auto fail = [&](const std::string& msg) { return ParseError{c.pos, msg}; };

    if (c.eat_word("Sp")) {
        if (!c.eat('(')) return fail("expected '('");
        auto v = parse_int(c);
        if (!v) return fail("expected integer");
        if (!c.eat(')')) return fail("expected ')'");
        if (!c.at_end()) return fail("trailing input");
        if (*v < 0 || *v % 2 != 0) return fail("Sp argument must be a nonnegative even integer");
        if (*v == 0) return fail("group must have positive rank");
        return GroupDescriptor::symplectic(static_cast<int>(*v / 2));
    }
    bool isSO = c.eat_word("SO");
    bool isU = !isSO && c.eat_word("U");
    if (!isSO && !isU) return fail("expected Sp, SO or U");
    if (!c.eat('(')) return fail("expected '('");
    auto p = parse_int(c);
    if (!p) return fail("expected integer");
    if (!c.eat(',')) return fail("expected ','");
    auto q = parse_int(c);
    if (!q) return fail("expected integer");
    if (!c.eat(')')) return fail("expected ')'");
    if (!c.at_end()) return fail("trailing input");
    if (*p < 0 || *q < 0) return fail("signature entries must be nonnegative");
    if (*p + *q == 0) return fail("group must have positive rank");
    if (isU) return GroupDescriptor::unitary(static_cast<int>(*p), static_cast<int>(*q));
    if (isSO && *p + *q < 2) return fail("group must have positive rank");
    return GroupDescriptor::so(static_cast<int>(*p), static_cast<int>(*q));
}

std::variant<ArthurParameter, ParamError> parse_param(std::string_view text,
                                                      const GroupDescriptor& group) {
    Cursor c{text};
    ArthurParameter psi;
    psi.group = group;
    auto fail = [&](const std::string& msg) { return ParamError{true, c.pos, msg}; };

    for (;;) {
        bool isV = c.eat_word("V");
        bool isW = !isV && c.eat_word("W");
        if (!isV && !isW) return fail("expected summand V(...) or W(...)");
        if (!c.eat('(')) return fail("expected '('");
        c.skip_ws();
        auto s = parse_s(c);
        if (!s) return fail("expected rational s");
        if (!c.eat(',')) return fail("expected ','");
        auto second = parse_int(c);
        if (!second) return fail("expected integer");
        if (!c.eat(')')) return fail("expected ')'");
        c.skip_ws();
        if (!(c.eat('x') || c.eat('*'))) return fail("expected 'x' or '*' before R[...]");
        if (!c.eat_word("R")) return fail("expected R[...]");
        if (!c.eat('[')) return fail("expected '['");
        auto a = parse_int(c);
        if (!a) return fail("expected integer SL2 dimension");
        if (!c.eat(']')) return fail("expected ']'");
        if (*a < 1) return fail("SL2 dimension must be >= 1");

        if (isV) {
            if (*second < 1) return fail("V(s,t) requires t >= 1");
            psi.summands.push_back(Summand::v(*s, static_cast<int>(*second), static_cast<int>(*a)));
        } else {
            if (*second != 0 && *second != 1) return fail("W(s,eps) requires eps in {0,1}");
            psi.summands.push_back(Summand::w(*s, static_cast<int>(*second), static_cast<int>(*a)));
        }
        if (c.at_end()) break;
        if (!c.eat('+')) return fail("expected '+' between terms");
    }
    if (auto v = validate(psi)) return ParamError{false, 0, v->message};
    return psi.canonical();
}

std::string render_param(const ArthurParameter& psi) {
    ArthurParameter canon = psi.canonical();
    std::string out;
    for (std::size_t k = 0; k < canon.summands.size(); ++k) {
        if (k > 0) out += " + ";
        out += canon.summands[k].to_string();
    }
    return out;
}

}  // namespace arthur
