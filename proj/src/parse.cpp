#include "supersplit/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace supersplit::cli {

using algebra::RingSignature;
using algebra::SuperPolynomial;

namespace {

struct Token {
    enum class Kind { Number, XVar, TVar, Lambda, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    Rational value;  // Number
    int index = 0;   // XVar / TVar
    int column = 1;
};

class Lexer {
  public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }
    int line() const { return line_; }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        current_.column = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = Token::Kind::Plus; ++pos_; return;
            case '-': current_.kind = Token::Kind::Minus; ++pos_; return;
            case '*': current_.kind = Token::Kind::Star; ++pos_; return;
            case '^': current_.kind = Token::Kind::Caret; ++pos_; return;
            case '(': current_.kind = Token::Kind::LParen; ++pos_; return;
            case ')': current_.kind = Token::Kind::RParen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string digits = text_.substr(start, pos_ - start);
            // A '/' directly between integer literals makes a rational.
            if (pos_ < text_.size() && text_[pos_] == '/') {
                std::size_t den_start = pos_ + 1;
                std::size_t p = den_start;
                while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
                if (p == den_start)
                    throw ParseError(line_, static_cast<int>(pos_) + 2,
                                     "expected digits after '/'");
                std::string den = text_.substr(den_start, p - den_start);
                pos_ = p;
                auto r = parse_rational(digits + "/" + den);
                if (!r) throw ParseError(line_, current_.column, "zero denominator");
                current_.kind = Token::Kind::Number;
                current_.value = *r;
                return;
            }
            current_.kind = Token::Kind::Number;
            current_.value = Rational(Int(digits));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string word = text_.substr(start, pos_ - start);
            if (word == "lambda") {
                current_.kind = Token::Kind::Lambda;
                return;
            }
            if ((word[0] == 'x' || word[0] == 't') && word.size() > 1) {
                bool digits_only = true;
                for (std::size_t i = 1; i < word.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(word[i]))) digits_only = false;
                if (digits_only) {
                    current_.kind = word[0] == 'x' ? Token::Kind::XVar : Token::Kind::TVar;
                    current_.index = std::stoi(word.substr(1));
                    return;
                }
            }
            throw ParseError(line_, current_.column, "unknown symbol '" + word + "'");
        }
        throw ParseError(line_, current_.column,
                         std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_;
    Token current_;
};

class ExpressionParser {
  public:
    ExpressionParser(const std::string& text, const RingSignature& ring,
                     std::optional<Rational> lambda, int line)
        : lexer_(text, line), ring_(ring), lambda_(std::move(lambda)) {}

    SuperPolynomial parse() {
        SuperPolynomial p = parse_expr();
        if (lexer_.peek().kind != Token::Kind::End)
            throw ParseError(lexer_.line(), lexer_.peek().column, "unexpected trailing input");
        return p;
    }

  private:
    SuperPolynomial parse_expr() {
        SuperPolynomial acc = parse_term();
        while (true) {
            Token::Kind k = lexer_.peek().kind;
            if (k == Token::Kind::Plus) {
                lexer_.take();
                acc = acc + parse_term();
            } else if (k == Token::Kind::Minus) {
                lexer_.take();
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    SuperPolynomial parse_term() {
        SuperPolynomial acc = parse_factor();
        while (lexer_.peek().kind == Token::Kind::Star) {
            lexer_.take();
            acc = acc * parse_factor();
        }
        return acc;
    }

    SuperPolynomial parse_factor() {
        if (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.take();
            return -parse_factor();
        }
        return parse_power();
    }

    SuperPolynomial parse_power() {
        Token base_token = lexer_.peek();
        bool exponent_ok = base_token.kind == Token::Kind::XVar ||
                           base_token.kind == Token::Kind::LParen;
        SuperPolynomial base = parse_primary();
        if (lexer_.peek().kind != Token::Kind::Caret) return base;
        Token caret = lexer_.take();
        if (!exponent_ok)
            throw ParseError(lexer_.line(), caret.column,
                             "'^' is allowed only on even variables and parenthesized "
                             "even subexpressions");
        if (base_token.kind == Token::Kind::LParen &&
            !base.is_parity_homogeneous(algebra::Parity::Even))
            throw ParseError(lexer_.line(), caret.column,
                             "'^' base must be parity-even");
        Token exp = lexer_.take();
        if (exp.kind != Token::Kind::Number || denominator(exp.value) != 1 ||
            numerator(exp.value) < 0)
            throw ParseError(lexer_.line(), exp.column,
                             "exponent must be a non-negative integer");
        unsigned long e = numerator(exp.value).convert_to<unsigned long>();
        SuperPolynomial out = SuperPolynomial::constant(ring_, 1);
        for (unsigned long i = 0; i < e; ++i) out = out * base;
        return out;
    }

    SuperPolynomial parse_primary() {
        Token t = lexer_.take();
        switch (t.kind) {
            case Token::Kind::Number:
                return SuperPolynomial::constant(ring_, t.value);
            case Token::Kind::XVar:
                if (t.index >= ring_.even_count)
                    throw ParseError(lexer_.line(), t.column,
                                     "x" + std::to_string(t.index) + " is outside the ring");
                return SuperPolynomial::variable_x(ring_, t.index);
            case Token::Kind::TVar:
                if (t.index < 1 || t.index > ring_.odd_count)
                    throw ParseError(lexer_.line(), t.column,
                                     "t" + std::to_string(t.index) + " is outside the ring");
                return SuperPolynomial::variable_theta(ring_, t.index);
            case Token::Kind::Lambda:
                if (!lambda_)
                    throw ParseError(lexer_.line(), t.column,
                                     "'lambda' used without a lambda declaration");
                return SuperPolynomial::constant(ring_, *lambda_);
            case Token::Kind::LParen: {
                SuperPolynomial inner = parse_expr();
                Token close = lexer_.take();
                if (close.kind != Token::Kind::RParen)
                    throw ParseError(lexer_.line(), close.column, "expected ')'");
                return inner;
            }
            default:
                throw ParseError(lexer_.line(), t.column, "expected a value");
        }
    }

    Lexer lexer_;
    const RingSignature& ring_;
    std::optional<Rational> lambda_;
};

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

SuperPolynomial parse_expression(const std::string& text, const RingSignature& ring,
                                 std::optional<Rational> lambda, int line_number) {
    return ExpressionParser(text, ring, std::move(lambda), line_number).parse();
}

IdealFileData parse_ideal_file(const std::string& contents, int max_odd_variables) {
    IdealFileData data;
    std::optional<RingSignature> ring;
    std::optional<int> degree;
    std::optional<Rational> lambda;
    bool in_header = true;

    std::istringstream in(contents);
    std::string raw;
    int line_number = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        if (in_header) {
            std::istringstream ls(line);
            std::string word;
            ls >> word;
            if (word == "ring") {
                int m = -1, n = -1;
                std::string extra;
                if (!(ls >> m >> n) || (ls >> extra) || m < 0 || n < 0)
                    throw ParseError(line_number, 1, "expected 'ring m n'");
                if (n > max_odd_variables)
                    throw ParseError(line_number, 1,
                                     "odd variable count exceeds the cap of " +
                                         std::to_string(max_odd_variables) +
                                         " (set SUPERSPLIT_MAX_N to raise it)");
                if (n > algebra::kMaxOddVariables)
                    throw ParseError(line_number, 1, "odd variable count too large");
                ring = RingSignature{m + 1, n};
                continue;
            }
            if (word == "degree") {
                int d = 0;
                std::string extra;
                if (!(ls >> d) || (ls >> extra) || d < 0)
                    throw ParseError(line_number, 1, "expected 'degree d'");
                degree = d;
                continue;
            }
            if (word == "lambda") {
                std::string value, extra;
                std::istringstream retry(line);
                retry >> word;
                if ((retry >> value) && !(retry >> extra)) {
                    if (auto r = parse_rational(value)) {
                        lambda = *r;
                        continue;
                    }
                }
                // Not a well-formed directive; treat the line as a generator
                // expression (e.g. one starting with `lambda*`).
            }
            in_header = false;  // first generator line
        }
        if (!ring)
            throw ParseError(line_number, 1, "a 'ring m n' directive must precede generators");
        data.ideal.generators.push_back(parse_expression(line, *ring, lambda, line_number));
    }
    if (!ring) throw ParseError(line_number == 0 ? 1 : line_number, 1, "missing 'ring m n' directive");
    data.ideal.ring = *ring;
    data.ideal.declared_degree = degree;
    data.lambda = lambda;
    return data;
}

std::string render_ideal_file(const IdealFileData& data) {
    std::ostringstream os;
    os << "ring " << (data.ideal.ring.even_count - 1) << " " << data.ideal.ring.odd_count
       << "\n";
    if (data.ideal.declared_degree) os << "degree " << *data.ideal.declared_degree << "\n";
    for (const auto& g : data.ideal.generators) os << g.to_string() << "\n";
    return os.str();
}

}  // namespace supersplit::cli
