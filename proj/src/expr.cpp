#include "qgalois/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "qgalois/errors.hpp"

namespace qgalois {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const AlgebraSpec& spec) : text_(text), spec_(spec) {}

    Element parse() {
        Element value = parse_expr();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected trailing input", pos_);
        return value;
    }

  private:
    const std::string& text_;
    const AlgebraSpec& spec_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    Element unit_element() const { return Element::term(NormalWord::unit(spec_.rank()), Scalar(1)); }

    Element parse_expr() {
        skip_ws();
        int sign = 1;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos_;
        }
        Element value = parse_product();
        if (sign < 0) value = Scalar(-1) * value;
        while (true) {
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) break;
            const bool minus = peek() == '-';
            ++pos_;
            const Element rhs = parse_product();
            value = minus ? value - rhs : value + rhs;
        }
        return value;
    }

    Element parse_product() {
        Element value = parse_power();
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c == '*') {
                ++pos_;
            } else if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '(')) {
                break;
            }
            value = multiply(value, parse_power(), spec_);
        }
        return value;
    }

    Element parse_power() {
        Element base = parse_atom();
        skip_ws();
        if (at_end() || peek() != '^') return base;
        const std::size_t caret = pos_;
        ++pos_;
        skip_ws();
        long sign = 1;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos_;
        }
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected an integer exponent after '^'", pos_);
        }
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
        if (digits.size() > 6) throw ParseError("exponent too large", caret);
        const long exp = sign * std::stol(digits);

        if (exp == 0) return unit_element();
        const Element factor = exp > 0 ? base : invert(std::move(base), caret);
        Element value = factor;
        for (long k = 1; k < (exp > 0 ? exp : -exp); ++k) value = multiply(value, factor, spec_);
        return value;
    }

    // Inverse of a single torus term: letters reversed with negated
    // exponents, coefficient inverted.
    Element invert(Element base, std::size_t caret) const {
        const auto& terms = base.terms();
        if (terms.size() != 1) {
            throw ParseError("negative power of a sum is not invertible here", caret);
        }
        const auto& [w, c] = *terms.begin();
        if (!w.torus_only()) {
            throw ParseError("negative power of a non-invertible generator word", caret);
        }
        Element inv = Element::term(NormalWord::unit(spec_.rank()), c.inverse());
        const std::vector<Letter> letters = w.letters();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            inv = append_letter(inv, Letter{it->block, it->index, -it->exponent}, spec_);
        }
        return inv;
    }

    Element parse_atom() {
        skip_ws();
        if (at_end()) throw ParseError("expected an expression atom", pos_);
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (c == '(') {
            ++pos_;
            Element value = parse_expr();
            skip_ws();
            if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return value;
        }
        if (c == 'q') {
            ++pos_;
            return Element::term(NormalWord::unit(spec_.rank()), spec_.params().q());
        }
        if (c == 'l') return parse_lambda();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_generator();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Element parse_number() {
        const std::size_t start = pos_;
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
        Scalar value = Scalar::from_string(digits);
        const std::size_t save = pos_;
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError("expected digits after '/'", pos_);
            }
            std::string den;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) den.push_back(text_[pos_++]);
            const Scalar d = Scalar::from_string(den);
            if (d.is_zero()) throw ParseError("rational literal with zero denominator", start);
            value /= d;
        } else {
            pos_ = save;
        }
        return Element::term(NormalWord::unit(spec_.rank()), value);
    }

    int parse_index_digits(const char* what) {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError(std::string("expected ") + what, pos_);
        }
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
        if (digits.size() > 3) throw ParseError(std::string(what) + " out of range", pos_);
        return std::stoi(digits);
    }

    int check_rank(int index, std::size_t at) const {
        if (index < 1 || index > spec_.rank()) {
            throw IndexOutOfRankError("generator index " + std::to_string(index) +
                                          " outside rank " + std::to_string(spec_.rank()),
                                      at);
        }
        return index;
    }

    Element parse_lambda() {
        const std::size_t start = pos_;
        ++pos_;  // 'l'
        int i = 0;
        int j = 0;
        if (!at_end() && peek() == '{') {
            ++pos_;
            i = parse_index_digits("lambda row index");
            skip_ws();
            if (at_end() || peek() != ',') throw ParseError("expected ',' in lambda symbol", pos_);
            ++pos_;
            j = parse_index_digits("lambda column index");
            skip_ws();
            if (at_end() || peek() != '}') throw ParseError("expected '}' in lambda symbol", pos_);
            ++pos_;
        } else {
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError("lambda symbol needs two indices", pos_);
            }
            i = peek() - '0';
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError("lambda symbol needs two indices", pos_);
            }
            j = peek() - '0';
            ++pos_;
        }
        check_rank(i, start);
        check_rank(j, start);
        return Element::term(NormalWord::unit(spec_.rank()), spec_.params().lam(i, j));
    }

    Element parse_generator() {
        const std::size_t start = pos_;
        const char letter = text_[pos_++];
        Block block;
        switch (letter) {
            case 'E':
            case 'X':
                block = Block::Upper;
                break;
            case 'F':
            case 'Y':
                block = Block::Lower;
                break;
            case 'K':
            case 'Z':
                block = Block::Torus;
                break;
            default:
                throw UnknownGeneratorError(std::string("unknown generator letter '") + letter + "'", start);
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("generator letter needs an index digit", pos_);
        }
        const int index = check_rank(peek() - '0', pos_);
        ++pos_;
        const RawElement raw{{Scalar(1), {Letter{block, index, 1}}}};
        return normal_form(raw, spec_);
    }
};

}  // namespace

Element parse_expression(const std::string& text, const AlgebraSpec& spec) {
    return Parser(text, spec).parse();
}

std::string print_canonical(const Element& e, AlgebraKind kind) {
    if (e.is_zero()) return "0";
    const bool enveloping = kind == AlgebraKind::U || kind == AlgebraKind::GrU;
    const char lower_name = enveloping ? 'F' : 'Y';
    const char upper_name = enveloping ? 'E' : 'X';
    const char torus_name = enveloping ? 'K' : 'Z';

    std::string out;
    bool first = true;
    const auto& terms = e.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [w, c] = *it;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::vector<std::string> parts;
        for (int i : w.lower) parts.push_back(std::string(1, lower_name) + std::to_string(i));
        for (int i : w.upper) parts.push_back(std::string(1, upper_name) + std::to_string(i));
        for (int i = 0; i < w.rank(); ++i) {
            const int exp = w.torus[static_cast<std::size_t>(i)];
            if (exp == 0) continue;
            std::string piece = std::string(1, torus_name) + std::to_string(i + 1);
            if (exp != 1) piece += "^" + std::to_string(exp);
            parts.push_back(std::move(piece));
        }
        const Scalar magnitude = negative ? -c : c;
        std::string body;
        if (parts.empty()) {
            body = magnitude.str();
        } else {
            if (!magnitude.is_one()) body = magnitude.str() + " ";
            for (std::size_t k = 0; k < parts.size(); ++k) {
                if (k > 0) body += ' ';
                body += parts[k];
            }
        }
        out += body;
    }
    return out;
}

}  // namespace qgalois
