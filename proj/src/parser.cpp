#include "tor3/parser.hpp"

#include <algorithm>
#include <cctype>

namespace tor3 {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && is_space(s[a])) ++a;
    while (b > a && is_space(s[b - 1])) --b;
    return s.substr(a, b - a);
}

class PolynomialParser {
  public:
    PolynomialParser(const PrimeField& field, const MonomialOrder& order,
                     const std::vector<std::string>& variables, const std::string& text)
        : fld_(field), ord_(order), vars_(variables), text_(text) {}

    Polynomial run() {
        skip_ws();
        if (at_end()) throw SyntaxError("empty polynomial", pos_);
        Polynomial f = expression();
        skip_ws();
        if (!at_end())
            throw SyntaxError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return f;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!at_end() && is_space(text_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression() {
        bool negate = eat('-');
        if (!negate) eat('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (eat('*')) {
                acc = acc * factor();
                continue;
            }
            skip_ws();
            if (!at_end() && (is_word(text_[pos_]) || text_[pos_] == '(')) {
                acc = acc * factor();
                continue;
            }
            break;
        }
        return acc;
    }

    Polynomial factor() {
        skip_ws();
        if (at_end()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            Polynomial inner = expression();
            if (!eat(')')) throw SyntaxError("unmatched '('", open);
            return inner;
        }
        if (is_digit(c)) {
            long long value = 0;
            while (!at_end() && is_digit(text_[pos_])) {
                value = (value * 10 + (text_[pos_] - '0')) % fld_.modulus();
                ++pos_;
            }
            return monomial_poly(fld_, ord_, Monomial::one(nvars()), Fp(value, fld_.modulus()));
        }
        if (is_alpha(c) || c == '_') return variable_power();
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    Polynomial variable_power() {
        // Longest variable name wins, so multi-letter names never shadow a
        // juxtaposed product of shorter ones by accident.
        int index = -1;
        std::size_t best = 0;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            const std::string& name = vars_[v];
            if (name.size() > best && text_.compare(pos_, name.size(), name) == 0) {
                index = static_cast<int>(v);
                best = name.size();
            }
        }
        if (index < 0) {
            std::size_t end = pos_;
            while (end < text_.size() && is_word(text_[end])) ++end;
            throw UnknownVariable("unknown variable '" + text_.substr(pos_, end - pos_) + "'",
                                  pos_);
        }
        pos_ += best;
        int power = 1;
        if (eat('^')) {
            skip_ws();
            if (at_end() || !is_digit(text_[pos_])) throw SyntaxError("expected exponent", pos_);
            long long e = 0;
            while (!at_end() && is_digit(text_[pos_])) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > 1000000) throw SyntaxError("exponent too large", pos_);
                ++pos_;
            }
            power = static_cast<int>(e);
        }
        return monomial_poly(fld_, ord_, Monomial::variable(nvars(), index, power), fld_.one());
    }

    int nvars() const { return static_cast<int>(vars_.size()); }

    const PrimeField& fld_;
    const MonomialOrder& ord_;
    const std::vector<std::string>& vars_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const PrimeField& field, const MonomialOrder& order,
                            const std::vector<std::string>& variables, const std::string& text) {
    return PolynomialParser(field, order, variables, text).run();
}

std::vector<std::string> split_generators(const std::string& text) {
    std::string s = trim(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        // Strip the parentheses only if the opening one closes at the very end.
        int depth = 0;
        bool wraps = true;
        for (std::size_t k = 0; k + 1 < s.size(); ++k) {
            if (s[k] == '(') ++depth;
            if (s[k] == ')') --depth;
            if (depth == 0) {
                wraps = false;
                break;
            }
        }
        if (wraps) s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<std::string> out;
    if (s.empty()) return out;
    int depth = 0;
    std::string current;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(trim(current));
    return out;
}

std::vector<Polynomial> parse_generators(const PrimeField& field, const MonomialOrder& order,
                                         const std::vector<std::string>& variables,
                                         const std::string& text) {
    return parse_generator_list(field, order, variables, split_generators(text));
}

std::vector<Polynomial> parse_generator_list(const PrimeField& field, const MonomialOrder& order,
                                             const std::vector<std::string>& variables,
                                             const std::vector<std::string>& pieces) {
    std::vector<Polynomial> out;
    for (const std::string& g : pieces) {
        Polynomial f = parse_polynomial(field, order, variables, g);
        if (!f.is_homogeneous()) throw NotHomogeneous("generator '" + g + "' is not homogeneous");
        out.push_back(std::move(f));
    }
    return out;
}

IdealSpec parse_ideal_file(const std::string& content) {
    IdealSpec spec;
    bool saw_ring = false, saw_char = false, saw_ideal = false;
    std::size_t line_start = 0;
    while (line_start <= content.size()) {
        std::size_t line_end = content.find('\n', line_start);
        if (line_end == std::string::npos) line_end = content.size();
        std::string line = content.substr(line_start, line_end - line_start);
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string stripped = trim(line);
        if (!stripped.empty()) {
            std::size_t colon = stripped.find(':');
            if (colon == std::string::npos)
                throw SyntaxError("expected 'key: value'", line_start);
            std::string key = trim(stripped.substr(0, colon));
            std::string value = trim(stripped.substr(colon + 1));
            if (key == "ring") {
                if (saw_ring) throw SyntaxError("duplicate 'ring:' line", line_start);
                saw_ring = true;
                spec.variables.clear();
                for (const std::string& name : split_generators(value)) {
                    if (name.empty() || !is_alpha(name.front()) ||
                        !std::all_of(name.begin(), name.end(), is_word))
                        throw SyntaxError("bad variable name '" + name + "'", line_start);
                    if (std::find(spec.variables.begin(), spec.variables.end(), name) !=
                        spec.variables.end())
                        throw SyntaxError("repeated variable name '" + name + "'", line_start);
                    spec.variables.push_back(name);
                }
                if (spec.variables.size() != 3)
                    throw SyntaxError("the ring line must name exactly 3 variables", line_start);
            } else if (key == "char") {
                if (saw_char) throw SyntaxError("duplicate 'char:' line", line_start);
                saw_char = true;
                long long p = 0;
                if (value.empty() || !std::all_of(value.begin(), value.end(), is_digit))
                    throw SyntaxError("bad characteristic '" + value + "'", line_start);
                for (char c : value) {
                    p = p * 10 + (c - '0');
                    if (p > 2000000000) throw SyntaxError("characteristic too large", line_start);
                }
                if (!PrimeField::is_prime(p))
                    throw BadCharacteristic("characteristic " + std::to_string(p) +
                                            " is not prime");
                spec.characteristic = p;
            } else if (key == "ideal") {
                if (saw_ideal) throw SyntaxError("duplicate 'ideal:' line", line_start);
                saw_ideal = true;
                spec.generator_text = split_generators(value);
            } else {
                throw SyntaxError("unknown key '" + key + "'", line_start);
            }
        }
        if (line_end == content.size()) break;
        line_start = line_end + 1;
    }
    if (!saw_ideal) throw SyntaxError("missing 'ideal:' line", content.size());
    return spec;
}

}  // namespace tor3
