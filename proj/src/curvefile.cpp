#include "alexpoly/curvefile.hpp"

#include <cctype>
#include <sstream>

#include "alexpoly/errors.hpp"

namespace alexpoly {

namespace {

struct cursor {
    const std::string& s;
    size_t pos = 0;
    int line;

    [[noreturn]] void fail(errc kind, const std::string& msg) const {
        throw error(kind, "line " + std::to_string(line) + ", col " +
                              std::to_string(pos + 1) + ": " + msg);
    }

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c)) fail(errc::syntax_error, "expected '" + std::string(1, c) + "' " + what);
    }

    std::string read_word() {
        size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                           s[pos] == '-'))
            ++pos;
        return s.substr(start, pos - start);
    }

    std::string read_digits() {
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(errc::syntax_error, "expected a number");
        return s.substr(start, pos - start);
    }
};

// term := coefficient ['*' tpart] | tpart ; tpart := 't' ['^' digits]
void parse_term(cursor& c, uni_poly& p, int sign) {
    c.skip_ws();
    rational coeff(sign);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        const std::string num = c.read_digits();
        std::string text = num;
        if (c.eat('/')) {
            const size_t den_col = c.pos;
            const std::string den = c.read_digits();
            if (den.find_first_not_of('0') == std::string::npos) {
                c.pos = den_col;
                c.fail(errc::zero_denominator, "zero denominator in coefficient");
            }
            text += "/" + den;
        }
        coeff = rational(sign) * rational::from_decimal_string(text);
        have_coeff = true;
    }
    int exp = 0;
    bool have_t = false;
    c.skip_ws();
    if (have_coeff && c.eat('*')) {
        c.skip_ws();
        if (c.peek() != 't') c.fail(errc::syntax_error, "expected 't' after '*'");
    }
    if (c.peek() == 't') {
        ++c.pos;
        have_t = true;
        exp = 1;
        if (c.eat('^')) {
            if (c.peek() == '-') c.fail(errc::negative_exponent, "negative exponent on t");
            exp = std::stoi(c.read_digits());
        }
    }
    if (!have_coeff && !have_t) c.fail(errc::syntax_error, "expected a term");
    if (!have_t && !coeff.is_zero())
        c.fail(errc::negative_exponent,
               "constant term in a parametrization (orders must be >= 1)");
    if (have_t) p.add_term(exp, coeff);
}

uni_poly parse_poly(cursor& c) {
    uni_poly p;
    c.skip_ws();
    int sign = 1;
    if (c.eat('-')) sign = -1;
    parse_term(c, p, sign);
    for (;;) {
        c.skip_ws();
        if (c.eat('+'))
            sign = 1;
        else if (c.eat('-'))
            sign = -1;
        else
            break;
        parse_term(c, p, sign);
    }
    if (!p.is_zero() && p.order() == 0)
        c.fail(errc::negative_exponent,
               "constant term in a parametrization (orders must be >= 1)");
    return p;
}

} // namespace

std::vector<branch_param> parse_curve(const std::string& text) {
    std::vector<branch_param> branches;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        cursor c{raw, 0, lineno};
        c.skip_ws();
        if (c.done() || c.peek() == '#') continue;

        const std::string kw = c.read_word();
        if (kw != "branch") c.fail(errc::syntax_error, "expected 'branch', got '" + kw + "'");
        c.skip_ws();
        const std::string name = c.read_word();
        if (name.empty()) c.fail(errc::syntax_error, "expected a branch name");
        for (const auto& b : branches)
            if (b.name == name) c.fail(errc::syntax_error, "duplicate branch name '" + name + "'");
        c.skip_ws();
        c.expect(':', "after the branch name");
        c.skip_ws();
        if (c.read_word() != "x") c.fail(errc::syntax_error, "expected 'x ='");
        c.skip_ws();
        c.expect('=', "after 'x'");
        uni_poly x = parse_poly(c);
        c.skip_ws();
        c.expect(',', "between the two components");
        c.skip_ws();
        if (c.read_word() != "y") c.fail(errc::syntax_error, "expected 'y ='");
        c.skip_ws();
        c.expect('=', "after 'y'");
        uni_poly y = parse_poly(c);
        c.skip_ws();
        if (!c.done() && c.peek() != '#')
            c.fail(errc::syntax_error, "unexpected trailing input");

        branches.push_back(branch_param{std::move(x), std::move(y), name});
    }
    return branches;
}

std::string render_poly(const uni_poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (!a.is_one()) os << a.str() << "*";
        os << "t";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string render_curve(const std::vector<branch_param>& branches) {
    std::ostringstream os;
    for (size_t i = 0; i < branches.size(); ++i) {
        const auto& b = branches[i];
        const std::string name = b.name.empty() ? "b" + std::to_string(i + 1) : b.name;
        os << "branch " << name << ": x = " << render_poly(b.x) << ", y = " << render_poly(b.y)
           << "\n";
    }
    return os.str();
}

const std::vector<std::pair<std::string, std::string>>& builtin_examples() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"smooth", "# smooth branch: the x-axis\n"
                   "branch a: x = t, y = 0\n"},
        {"node", "# node: two transverse lines\n"
                 "branch a: x = t, y = 0\n"
                 "branch b: x = 0, y = t\n"},
        {"cusp", "# cusp: y^2 = x^3\n"
                 "branch a: x = t^2, y = t^3\n"},
        {"tacnode", "# tacnode: two smooth branches tangent to order 2\n"
                    "branch a: x = t, y = t^2\n"
                    "branch b: x = t, y = -t^2\n"},
        {"e8", "# y^3 = x^5\n"
               "branch a: x = t^3, y = t^5\n"},
        {"two46", "# one branch with value semigroup <4, 6, 13>\n"
                  "branch a: x = t^4, y = t^6 + t^7\n"},
        {"cusp-plus-line", "# cusp together with its tangent line\n"
                           "branch cusp: x = t^2, y = t^3\n"
                           "branch line: x = t, y = 0\n"},
    };
    return table;
}

std::string builtin_example(const std::string& name) {
    for (const auto& [n, text] : builtin_examples())
        if (n == name) return text;
    std::string known;
    for (const auto& [n, text] : builtin_examples()) known += (known.empty() ? "" : ", ") + n;
    throw error(errc::syntax_error, "unknown example '" + name + "' (known: " + known + ")");
}

} // namespace alexpoly
