#include "qheun/parser.hpp"

#include "qheun/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qheun {

namespace {

class Parser {
public:
    Parser(std::string_view s, const std::vector<std::string>* universe) : s_(s), universe_(universe) {}

    RatFun run() {
        skip();
        if (pos_ == s_.size())
            throw SyntaxError("empty expression", pos_);
        RatFun r = expr();
        skip();
        if (pos_ != s_.size())
            throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    std::string_view s_;
    const std::vector<std::string>* universe_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFun expr() {
        RatFun r = term();
        for (;;) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }

    RatFun term() {
        RatFun r = factor();
        for (;;) {
            if (accept('*'))
                r = r * factor();
            else if (accept('/')) {
                std::size_t at = pos_;
                RatFun d = factor();
                if (d.is_zero())
                    throw SyntaxError("division by zero", at);
                r = r / d;
            } else
                return r;
        }
    }

    RatFun factor() {
        RatFun b = base();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                throw SyntaxError("expected nonnegative integer exponent", start);
            if (pos_ - start > 6)
                throw SyntaxError("exponent too large", start);
            long e = std::stol(std::string(s_.substr(start, pos_ - start)));
            b = b.pow(e);
        }
        return b;
    }

    RatFun base() {
        skip();
        if (pos_ == s_.size())
            throw SyntaxError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            return -base();
        }
        if (c == '(') {
            ++pos_;
            RatFun r = expr();
            if (!accept(')'))
                throw SyntaxError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return RatFun(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (universe_ && std::find(universe_->begin(), universe_->end(), name) == universe_->end())
                throw UnknownParameter(name);
            return RatFun(Symbol(name));
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }
};

}  // namespace

RatFun parse_expr(std::string_view text, const std::vector<std::string>& universe) {
    return Parser(text, &universe).run();
}

RatFun parse_expr(std::string_view text) { return Parser(text, nullptr).run(); }

}  // namespace qheun
