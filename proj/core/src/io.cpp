#include "fermat/io.hpp"

#include "fermat/errors.hpp"

#include <cctype>

namespace fermat {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eof() {
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

    bool accept_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Int integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            ++digits;
        }
        if (digits == 0) fail("expected an integer");
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + why +
                         " in \"" + std::string(text_) + "\"");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Rat parse_rat(Scanner& sc) {
    const bool paren = sc.accept('(');
    Int n = sc.integer();
    Int d = 1;
    if (sc.accept('/')) {
        d = sc.integer();
        if (d == 0) sc.fail("zero denominator");
    }
    if (paren) sc.expect(')');
    return Rat(n, d);
}

// sqrt '(' INT ')'; returns the radicand.
Int parse_sqrt(Scanner& sc) {
    sc.expect('(');
    Int arg = sc.integer();
    sc.expect(')');
    return arg;
}

struct Term {
    Rat coeff;
    bool has_sqrt = false;
};

Term parse_term(Scanner& sc, const QuadField& field) {
    Term t{Rat(1), false};
    int sgn = 1;
    if (sc.accept('-'))
        sgn = -1;
    else
        (void)sc.accept('+');

    if (sc.accept_word("sqrt")) {
        t.has_sqrt = true;
    } else {
        t.coeff = parse_rat(sc);
        if (sc.accept('*')) {
            if (!sc.accept_word("sqrt")) sc.fail("expected sqrt after '*'");
            t.has_sqrt = true;
        }
    }
    t.coeff *= sgn;
    if (t.has_sqrt) {
        const Int arg = parse_sqrt(sc);
        if (arg != field.d())
            sc.fail("sqrt argument " + arg.str() + " does not match the field (d = " +
                    std::to_string(field.d()) + ")");
    }
    return t;
}

} // namespace

FieldElem parse_field_elem(std::string_view text, const QuadField& field) {
    Scanner sc(text);
    Rat x(0), y(0);
    Term first = parse_term(sc, field);
    (first.has_sqrt ? y : x) += first.coeff;

    if (!sc.eof()) {
        int sign = 0;
        if (sc.accept('+'))
            sign = 1;
        else if (sc.accept('-'))
            sign = -1;
        else
            sc.fail("expected '+' or '-' between terms");
        Term second = parse_term(sc, field);
        if (second.has_sqrt == first.has_sqrt) sc.fail("duplicate term kind");
        (second.has_sqrt ? y : x) += sign * second.coeff;
        if (!sc.eof()) sc.fail("trailing input");
    }
    return field.element(x, y);
}

std::string format_field_elem(const FieldElem& e) {
    if (e.is_rational()) return rat_to_string(e.x());
    return "(" + rat_to_string(e.x()) + ")+(" + rat_to_string(e.y()) + ")*sqrt(" +
           std::to_string(e.d()) + ")";
}

} // namespace fermat
