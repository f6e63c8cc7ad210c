#include "cdgamma/parse.hpp"

#include "cdgamma/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

namespace cdgamma {

namespace {

struct Term {
    double coefficient;
    std::size_t index; // 0 for the real unit
    char alias;        // 'i', 'j', 'k' or 0
    std::size_t position;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Term> terms() {
        std::vector<Term> out;
        skip_space();
        if (at_end()) throw ParseError(pos_, "empty Cayley-Dickson number");
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
            sign = take() == '-' ? -1.0 : 1.0;
            skip_space();
        }
        out.push_back(term(sign));
        skip_space();
        while (!at_end()) {
            const char op = peek();
            if (op != '+' && op != '-') throw ParseError(pos_, std::string("expected '+' or '-', found '") + op + "'");
            take();
            skip_space();
            out.push_back(term(op == '-' ? -1.0 : 1.0));
            skip_space();
        }
        return out;
    }

private:
    Term term(double sign) {
        const std::size_t start = pos_;
        double coefficient = 1.0;
        bool have_number = false;
        if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
            coefficient = number();
            have_number = true;
        }
        skip_space();
        if (!at_end() && peek() == 'e') {
            take();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError(pos_, "expected basis index after 'e'");
            }
            const std::size_t index_pos = pos_;
            std::size_t index = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                index = index * 10 + static_cast<std::size_t>(take() - '0');
                if (index > (std::size_t{1} << kMaxLevel)) throw ParseError(index_pos, "basis index too large");
            }
            if (index == 0) throw ParseError(index_pos, "basis index must be at least 1");
            return {sign * coefficient, index, 0, start};
        }
        if (!at_end() && (peek() == 'i' || peek() == 'j' || peek() == 'k')) {
            const char alias = take();
            return {sign * coefficient, static_cast<std::size_t>(alias - 'i' + 1), alias, start};
        }
        if (!have_number) throw ParseError(pos_, "expected a number or basis unit");
        return {sign * coefficient, 0, 0, start};
    }

    double number() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) take();
        // exponent: 'E' followed by optional sign, or 'e' followed by an explicit sign
        if (!at_end() && (peek() == 'E' || (peek() == 'e' && pos_ + 1 < text_.size() &&
                                            (text_[pos_ + 1] == '+' || text_[pos_ + 1] == '-')))) {
            take();
            if (!at_end() && (peek() == '+' || peek() == '-')) take();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError(pos_, "malformed exponent");
            }
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) take();
        }
        std::string literal(text_.substr(start, pos_ - start));
        for (char& c : literal) {
            if (c == 'E') c = 'e';
        }
        double value = 0.0;
        const auto [end, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
        if (ec != std::errc() || end != literal.data() + literal.size()) {
            throw ParseError(start, "malformed number '" + literal + "'");
        }
        return value;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string shortest(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, end);
    for (char& c : s) {
        if (c == 'e') c = 'E';
    }
    return s;
}

} // namespace

CDNumber parse_cd(std::string_view text, std::optional<int> level) {
    const std::vector<Term> terms = Parser(text).terms();
    std::size_t max_index = 0;
    bool aliases = false;
    for (const Term& t : terms) {
        max_index = std::max(max_index, t.index);
        aliases = aliases || t.alias != 0;
    }
    int v = 2;
    if (level) {
        v = *level;
    } else {
        while ((std::size_t{1} << v) <= max_index) ++v;
    }
    if (aliases && v != 2) throw ParseError(0, "aliases i, j, k are only accepted at level 2");
    CDNumber z(v);
    for (const Term& t : terms) {
        if (t.index >= z.dim()) {
            throw ParseError(t.position, "basis index e" + std::to_string(t.index) + " exceeds level " +
                                             std::to_string(v));
        }
        z[t.index] += t.coefficient;
    }
    return z;
}

std::string format_cd(const CDNumber& z) {
    std::string out;
    for (std::size_t i = 0; i < z.dim(); ++i) {
        const double c = z[i];
        if (c == 0.0 && !(i == 0 && z.norm_sq() == 0.0)) continue;
        if (std::isnan(c) || std::isinf(c)) throw Error(ErrorKind::invalid_input, "cannot format non-finite coordinate");
        std::string mag = shortest(std::abs(c));
        if (out.empty()) {
            if (std::signbit(c)) out += "-";
        } else {
            out += std::signbit(c) ? " - " : " + ";
        }
        out += mag;
        if (i > 0) out += "e" + std::to_string(i);
    }
    return out;
}

} // namespace cdgamma
