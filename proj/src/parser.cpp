#include "folocal/parser.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace folocal {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_keyword(std::string_view s) {
    return s == "exists" || s == "forall" || s == "and" || s == "or" || s == "not" ||
           s == "dist";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FormulaPtr run() {
        FormulaPtr f = parse_implies();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_).starts_with(token)) {
            // Keyword tokens must not run into a longer identifier.
            if (ident_start(token.front())) {
                std::size_t after = pos_ + token.size();
                if (after < text_.size() && ident_char(text_[after]))
                    return false;
            }
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!eat(token))
            fail("expected '" + std::string(token) + "'");
    }

    std::string parse_ident() {
        skip_ws();
        if (pos_ >= text_.size() || !ident_start(text_[pos_]))
            fail("expected an identifier");
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (is_keyword(name)) {
            pos_ = start;
            fail("keyword '" + name + "' used as an identifier");
        }
        return name;
    }

    int parse_number() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000)
                fail("number too large");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    FormulaPtr parse_implies() {
        FormulaPtr lhs = parse_or();
        if (eat("->"))
            return f_implies(std::move(lhs), parse_implies());
        return lhs;
    }

    FormulaPtr parse_or() {
        FormulaPtr lhs = parse_and();
        while (eat("or"))
            lhs = f_or(std::move(lhs), parse_and());
        return lhs;
    }

    FormulaPtr parse_and() {
        FormulaPtr lhs = parse_unary();
        while (eat("and"))
            lhs = f_and(std::move(lhs), parse_unary());
        return lhs;
    }

    FormulaPtr parse_unary() {
        if (eat("not"))
            return f_not(parse_unary());
        skip_ws();
        if (peek_keyword("exists") || peek_keyword("forall"))
            return parse_quantifier();
        return parse_primary();
    }

    bool peek_keyword(std::string_view kw) {
        skip_ws();
        if (!text_.substr(pos_).starts_with(kw))
            return false;
        std::size_t after = pos_ + kw.size();
        return after >= text_.size() || !ident_char(text_[after]);
    }

    FormulaPtr parse_quantifier() {
        bool is_exists = eat("exists");
        if (!is_exists)
            expect("forall");
        std::size_t var_pos = pos_;
        std::string var = parse_ident();
        if (std::find(scope_.begin(), scope_.end(), var) != scope_.end()) {
            pos_ = var_pos;
            fail("variable '" + var + "' is already bound");
        }
        scope_.push_back(var);
        FormulaPtr body;
        skip_ws();
        if (peek_keyword("exists") || peek_keyword("forall")) {
            body = parse_quantifier();
        } else {
            expect("(");
            body = parse_implies();
            expect(")");
        }
        scope_.pop_back();
        return is_exists ? exists(std::move(var), std::move(body))
                         : forall(std::move(var), std::move(body));
    }

    FormulaPtr parse_primary() {
        skip_ws();
        if (eat("(")) {
            FormulaPtr f = parse_implies();
            expect(")");
            return f;
        }
        if (peek_keyword("dist")) {
            expect("dist");
            expect("(");
            std::string x = parse_ident();
            expect(",");
            std::string y = parse_ident();
            expect(")");
            bool le = eat("<=");
            if (!le)
                expect(">");
            int r = parse_number();
            return le ? dist_le(std::move(x), std::move(y), r)
                      : dist_gt(std::move(x), std::move(y), r);
        }
        std::string name = parse_ident();
        skip_ws();
        if (eat("(")) {
            std::vector<std::string> args;
            args.push_back(parse_ident());
            while (eat(","))
                args.push_back(parse_ident());
            expect(")");
            return rel_atom(std::move(name), std::move(args));
        }
        expect("=");
        std::string rhs = parse_ident();
        return equal(std::move(name), std::move(rhs));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::string> scope_;
};

} // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).run(); }

} // namespace folocal
