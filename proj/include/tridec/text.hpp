#ifndef TRIDEC_TEXT_HPP
#define TRIDEC_TEXT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tridec/polynomial.hpp"

namespace tridec {

/// Names for the variables x_1 < x_2 < ... < x_n followed by any auxiliaries.
class VariableOrder {
public:
    VariableOrder() = default;
    explicit VariableOrder(std::vector<std::string> names);
    /// x1, ..., xn.
    static VariableOrder standard(std::size_t n);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    /// Name of variable v; variables past the named range print as x<v+1>.
    std::string name(Var v) const;
    /// Index of a name, or npos.
    std::size_t find(std::string_view name) const;
    Var add(const std::string& name);

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::string> names_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line) : std::runtime_error(msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses one polynomial. With a fixed order unknown names are rejected;
/// otherwise (fixed = false) new names are appended to the order.
Polynomial parse_polynomial(std::string_view text, VariableOrder& order, bool fixed = false,
                            std::size_t line = 0);

/// Parsed lines of a polynomial file. Blank lines separate groups (used by
/// the chain-family format); '#' lines are comments.
struct PolynomialFile {
    VariableOrder order;
    std::size_t n = 0;  // number of x-variables
    std::vector<std::vector<Polynomial>> groups;
    std::vector<Polynomial> all() const;
};

/// Reads the polynomial text grammar. When `order_names` is non-empty it fixes
/// the variable order; otherwise x-variables are ordered by index and the
/// auxiliaries y, z, w follow them.
PolynomialFile parse_polynomial_file(std::string_view text, const std::vector<std::string>& order_names = {});

std::string to_string(const Polynomial& p, const VariableOrder& order);
std::string to_string(const Rational& q);

}  // namespace tridec

#endif
