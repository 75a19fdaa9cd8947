#include "tridec/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tridec {

VariableOrder::VariableOrder(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name: " + names_[i]);
}

VariableOrder VariableOrder::standard(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return VariableOrder(std::move(names));
}

std::string VariableOrder::name(Var v) const {
    if (v < names_.size()) return names_[v];
    return "x" + std::to_string(v + 1);
}

std::size_t VariableOrder::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return npos;
}

Var VariableOrder::add(const std::string& name) {
    auto i = find(name);
    if (i != npos) return i;
    names_.push_back(name);
    return names_.size() - 1;
}

namespace {

class Parser {
public:
    Parser(std::string_view s, VariableOrder& order, bool fixed, std::size_t line)
        : s_(s), order_(order), fixed_(fixed), line_(line) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) + ": " + what,
                         line_);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            Integer e = integer();
            if (e > 10000) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer();
            if (accept('/')) {
                Integer den = integer();
                if (den == 0) fail("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return Polynomial(q);
            }
            return Polynomial(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto idx = order_.find(name);
            if (idx == VariableOrder::npos) {
                if (fixed_) {
                    pos_ = start;
                    fail("unknown variable '" + name + "'");
                }
                idx = order_.add(name);
            }
            return Polynomial::variable(idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    VariableOrder& order_;
    bool fixed_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

bool is_x_name(const std::string& s, std::size_t& index) {
    if (s.size() < 2 || s[0] != 'x') return false;
    if (!std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return false;
    index = std::stoul(s.substr(1));
    return index >= 1;
}

std::string strip_comment(std::string_view line) {
    std::string s(line);
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    if (s[first] == '#') return {};
    return s;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, VariableOrder& order, bool fixed, std::size_t line) {
    return Parser(text, order, fixed, line).parse();
}

std::vector<Polynomial> PolynomialFile::all() const {
    std::vector<Polynomial> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

PolynomialFile parse_polynomial_file(std::string_view text, const std::vector<std::string>& order_names) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::size_t lineno = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++lineno;
            lines.emplace_back(lineno, std::string(text.substr(start, end - start)));
            start = end + 1;
        }
    }

    PolynomialFile out;
    bool fixed = !order_names.empty();
    if (fixed) {
        out.order = VariableOrder(order_names);
        out.n = 0;
        for (const auto& nm : order_names)
            if (nm != "y" && nm != "z" && nm != "w") ++out.n;
    } else {
        // Scan for x-variable names so x1..xN come first in index order.
        std::size_t max_index = 0;
        for (const auto& [no, raw] : lines) {
            std::string s = strip_comment(raw);
            for (std::size_t i = 0; i < s.size();) {
                if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
                    std::size_t j = i;
                    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
                    std::size_t idx = 0;
                    if (is_x_name(s.substr(i, j - i), idx)) max_index = std::max(max_index, idx);
                    i = j;
                } else {
                    ++i;
                }
            }
        }
        out.order = VariableOrder::standard(max_index);
        out.n = max_index;
        out.order.add("y");
        out.order.add("z");
        out.order.add("w");
    }

    std::vector<Polynomial> current;
    for (const auto& [no, raw] : lines) {
        std::string s = strip_comment(raw);
        bool blank = s.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) {
            bool is_comment = raw.find('#') != std::string::npos;
            if (!is_comment && !current.empty()) {
                out.groups.push_back(std::move(current));
                current.clear();
            }
            continue;
        }
        current.push_back(parse_polynomial(s, out.order, true, no));
    }
    if (!current.empty()) out.groups.push_back(std::move(current));
    return out;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Polynomial& p, const VariableOrder& order) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (m.is_one() || a != 1) {
            os << a.get_str();
            wrote = true;
        }
        const auto& ex = m.exponents();
        for (std::size_t v = ex.size(); v-- > 0;) {
            if (ex[v] == 0) continue;
            if (wrote) os << "*";
            os << order.name(v);
            if (ex[v] > 1) os << "^" << ex[v];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace tridec
