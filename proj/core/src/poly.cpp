#include "pkorder/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pkorder {

Counters& counters() {
    thread_local Counters c;
    return c;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(Int coef, int degree) {
    Poly p;
    if (coef == 0) return p;
    p.c_.assign(degree + 1, Int(0));
    p.c_.back() = std::move(coef);
    return p;
}

Poly Poly::from_coeffs(std::vector<Int> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

const Int& Poly::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Int& Poly::as_int() const {
    static const Int zero(0);
    return c_.empty() ? zero : c_[0];
}

Poly Poly::shifted(int by) const {
    if (is_zero() || by == 0) {
        if (by >= 0) {
            Poly p = *this;
            if (!p.is_zero() && by > 0) p.c_.insert(p.c_.begin(), by, Int(0));
            return p;
        }
    }
    if (by > 0) {
        Poly p = *this;
        p.c_.insert(p.c_.begin(), by, Int(0));
        return p;
    }
    // negative shift only valid when low coefficients vanish
    Poly p;
    p.c_.assign(c_.begin() - by, c_.end());
    return p;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Int> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return from_coeffs(std::move(d));
}

Int Poly::content() const {
    Int g = 0;
    for (const Int& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int Poly::height() const {
    Int h = 0;
    for (const Int& a : c_) {
        Int v = abs(a);
        if (v > h) h = v;
    }
    return h;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly::from_coeffs(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly::from_coeffs(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Int> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return from_coeffs(std::move(c));
}

Poly operator*(const Int& k, const Poly& a) {
    if (k == 0) return Poly();
    std::vector<Int> c(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = k * a.c_[i];
    return Poly::from_coeffs(std::move(c));
}

std::strong_ordering canonical_cmp(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() <=> b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c <=> 0;
    }
    return std::strong_ordering::equal;
}

bool try_divexact_z(const Poly& a, const Poly& b, Poly& quot) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        quot = Poly();
        return true;
    }
    if (a.deg() < b.deg()) return false;
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> q(a.deg() - b.deg() + 1, Int(0));
    const Int& lb = b.lc();
    for (int d = a.deg(); d >= b.deg(); --d) {
        Int& top = rem[d];
        if (top == 0) continue;
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        if (r != 0) return false;
        q[d - b.deg()] = c;
        for (int i = 0; i <= b.deg(); ++i) rem[d - b.deg() + i] -= c * b.coeff(i);
    }
    for (const Int& c : rem)
        if (c != 0) return false;
    quot = Poly::from_coeffs(std::move(q));
    return true;
}

Poly pseudo_rem(const Poly& a, const Poly& b) {
    Poly r = a;
    const int db = b.deg();
    const Int& lb = b.lc();
    while (!r.is_zero() && r.deg() >= db) {
        Poly t = Poly::monomial(r.lc(), r.deg() - db);
        r = lb * r - t * b;
    }
    return r;
}

// ---- printing ----

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.deg(); i >= 0; --i) {
        const Int& c = p.coeff(i);
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// ---- parsing ----
// grammar: expr = term (('+'|'-') term)*; term = factor ('*' factor)*;
// factor = base ('^' nat)?; base = int | 'x' | '(' expr ')' | '-' factor

namespace {

struct Parser {
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    Poly parse_expr() {
        Poly acc = parse_term();
        for (;;) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (eat('*')) acc *= parse_factor();
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (eat('^')) {
            long e = parse_nat();
            Poly acc = Poly(1);
            for (long k = 0; k < e; ++k) acc *= base;
            return acc;
        }
        return base;
    }

    Poly parse_base() {
        char c = peek();
        if (c == '-') {
            ++i;
            return -parse_factor();
        }
        if (c == '+') {
            ++i;
            return parse_factor();
        }
        if (c == '(') {
            ++i;
            Poly e = parse_expr();
            if (!eat(')')) throw InputError("expected ')' in element expression");
            return e;
        }
        if (c == 'x') {
            ++i;
            return Poly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(parse_int());
        throw InputError("unexpected character in element expression: '" + std::string(1, c) + "'");
    }

    Int parse_int() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw InputError("expected integer literal");
        Int v(std::string(s.substr(i, j - i)), 10);
        i = j;
        return v;
    }

    long parse_nat() {
        Int v = parse_int();
        if (v < 0 || v > 4096) throw InputError("exponent out of range");
        return v.get_si();
    }
};

}  // namespace

Poly parse_poly(std::string_view text) {
    Parser p{text};
    Poly r = p.parse_expr();
    p.skip();
    if (p.i != text.size()) throw InputError("trailing characters in element expression");
    return r;
}

}  // namespace pkorder
