#include "charp/parse.hpp"

#include <cctype>

#include "charp/error.hpp"

namespace charp {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
    }

    std::int64_t integer(std::int64_t modulo) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (modulo > 0) value %= modulo;
            if (modulo == 0 && value > (std::int64_t{1} << 40))
                fail("integer literal out of range");
            ++pos_;
        }
        return value;
    }

    std::string identifier() {
        skip_ws();
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected a name");
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    bool looks_like_ident() {
        skip_ws();
        return pos_ < text_.size() && is_ident_start(text_[pos_]);
    }

    std::size_t position() const { return pos_; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

private:
    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

/// One product of variable powers: name('^'k)? joined by '*'.
Monomial parse_mono(Cursor& cur, const RingCtx& ring) {
    Monomial m(ring.nvars());
    for (;;) {
        std::size_t name_pos = cur.position();
        std::string name = cur.identifier();
        auto idx = ring.var_index(name);
        if (!idx) throw ParseError("unknown variable '" + name + "'", name_pos);
        std::int64_t k = 1;
        if (cur.accept('^')) k = cur.integer(0);
        if (k > ring.limits().max_degree) cur.fail("exponent exceeds the degree cap");
        m[*idx] = static_cast<std::int32_t>(m[*idx] + k);
        if (!cur.accept('*')) break;
        if (!cur.looks_like_ident())
            throw ParseError("expected a variable after '*'", cur.position());
    }
    return m;
}

Polynomial::Term parse_term(Cursor& cur, const RingCtx& ring) {
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coeff = cur.integer(ring.p());
        have_coeff = true;
    }
    Monomial m(ring.nvars());
    if (have_coeff) {
        if (cur.accept('*')) m = parse_mono(cur, ring);
    } else {
        m = parse_mono(cur, ring);
    }
    return {std::move(m), coeff % ring.p()};
}

Polynomial parse_poly_impl(Cursor& cur, const RingPtr& ring) {
    std::vector<Polynomial::Term> terms;
    bool negate = cur.accept('-');
    for (;;) {
        Polynomial::Term t = parse_term(cur, *ring);
        if (negate) t.coeff = (ring->p() - t.coeff) % ring->p();
        terms.push_back(std::move(t));
        if (cur.accept('+'))
            negate = false;
        else if (cur.accept('-'))
            negate = true;
        else
            break;
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

RingPtr parse_ring(const std::string& text, MonomialOrder order, Limits limits) {
    Cursor cur(text);
    std::size_t head = cur.position();
    if (cur.identifier() != "GF") throw ParseError("expected 'GF'", head);
    cur.expect('(', "after 'GF'");
    std::int64_t p = cur.integer(0);
    cur.expect(')', "after the characteristic");
    cur.expect('[', "before the variable list");
    std::vector<std::string> vars;
    for (;;) {
        vars.push_back(cur.identifier());
        if (!cur.accept(',')) break;
    }
    cur.expect(']', "after the variable list");
    if (!cur.at_end()) cur.fail("trailing input after the ring descriptor");
    return RingCtx::make(p, std::move(vars), order, limits);
}

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
    Cursor cur(text);
    Polynomial f = parse_poly_impl(cur, ring);
    if (!cur.at_end()) cur.fail("trailing input after the polynomial");
    return f;
}

std::vector<Polynomial> parse_poly_list(const std::string& text, const RingPtr& ring) {
    std::vector<Polynomial> polys;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
        Cursor cur(piece);
        try {
            polys.push_back(parse_poly_impl(cur, ring));
            if (!cur.at_end()) cur.fail("trailing input after the polynomial");
        } catch (const ParseError& e) {
            throw ParseError(e.what() + std::string(" in list entry ") +
                                 std::to_string(polys.size() + 1),
                             start + e.position());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return polys;
}

PerfElement parse_perf(const std::string& text, const RingPtr& ring) {
    Cursor cur(text);
    if (cur.looks_like_ident()) {
        std::string head = cur.identifier();
        if (head == "root" && cur.accept('(')) {
            // find the matching closing parenthesis from the right:
            // the grammar has no nested parentheses
            std::size_t close = text.rfind(')');
            std::size_t comma = text.rfind(',', close == std::string::npos ? close : close - 1);
            if (close == std::string::npos || comma == std::string::npos || comma < cur.position())
                throw ParseError("malformed root(poly,level) form", text.size());
            std::string body = text.substr(cur.position(), comma - cur.position());
            std::string level_text = text.substr(comma + 1, close - comma - 1);
            for (std::size_t i = close + 1; i < text.size(); ++i)
                if (!std::isspace(static_cast<unsigned char>(text[i])))
                    throw ParseError("trailing input after root(...)", i);
            Cursor body_cur(body);
            Polynomial f = parse_poly_impl(body_cur, ring);
            if (!body_cur.at_end()) body_cur.fail("trailing input after the polynomial");
            Cursor level_cur(level_text);
            std::int64_t level = level_cur.integer(0);
            if (!level_cur.at_end()) level_cur.fail("trailing input after the level");
            return PerfElement(std::move(f), static_cast<int>(level));
        }
    }
    // not the root form: parse the whole text as a level-0 polynomial
    return PerfElement(parse_poly(text, ring), 0);
}

}  // namespace charp
