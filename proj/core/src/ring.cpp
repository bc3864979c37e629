#include "pkorder/ring.hpp"

#include <sstream>

namespace pkorder {

bool BaseRing::is_valid(const Poly& a) const {
    if (kind == Kind::Z) return a.is_constant();
    if (kind == Kind::FpX) {
        for (const Int& c : a.coeffs())
            if (c < 0 || c >= p) return false;
    }
    return true;
}

Poly BaseRing::normalize(Poly a) const {
    if (kind != Kind::FpX) return a;
    std::vector<Int> c = a.coeffs();
    for (Int& v : c) {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    }
    return Poly::from_coeffs(std::move(c));
}

bool BaseRing::is_unit(const Poly& a) const {
    switch (kind) {
        case Kind::Z:
            return a.is_constant() && (a.as_int() == 1 || a.as_int() == -1);
        case Kind::FpX:
            return a.deg() == 0;
        case Kind::ZX:
            return a.is_constant() && (a.as_int() == 1 || a.as_int() == -1);
    }
    return false;
}

std::pair<Poly, Poly> BaseRing::normalize_assoc(const Poly& a) const {
    if (a.is_zero()) return {Poly(), Poly(1)};
    switch (kind) {
        case Kind::Z:
        case Kind::ZX:
            if (a.lc() < 0) return {-a, Poly(-1)};
            return {a, Poly(1)};
        case Kind::FpX: {
            Int u = inv_mod_p(a.lc());
            return {mul(Poly(u), a), Poly(u)};
        }
    }
    return {a, Poly(1)};
}

Int BaseRing::inv_mod_p(const Int& a) const {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InputError("non-invertible residue mod " + p.get_str());
    return r;
}

void BaseRing::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) const {
    if (b.is_zero()) throw InputError("division by zero");
    if (kind == Kind::Z) {
        Int qq, rr;
        mpz_fdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), a.as_int().get_mpz_t(),
                    b.as_int().get_mpz_t());
        if (rr < 0) {  // canonical 0 <= r < |b|
            rr += abs(b.as_int());
            qq += (b.as_int() > 0) ? -1 : 1;
        }
        q = Poly(qq);
        r = Poly(rr);
        return;
    }
    if (kind == Kind::FpX) {
        Poly rem = normalize(a);
        std::vector<Int> qc(std::max(0, a.deg() - b.deg() + 1), Int(0));
        Int linv = inv_mod_p(b.lc());
        while (!rem.is_zero() && rem.deg() >= b.deg()) {
            Int c = (rem.lc() * linv) % p;
            int d = rem.deg() - b.deg();
            qc[d] = c;
            rem = normalize(rem - Poly::monomial(c, d) * b);
        }
        q = Poly::from_coeffs(std::move(qc));
        r = rem;
        return;
    }
    throw InputError("euclidean division unavailable over Z[x]");
}

bool BaseRing::divides(const Poly& b, const Poly& a) const {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    switch (kind) {
        case Kind::Z:
            return mpz_divisible_p(a.as_int().get_mpz_t(), b.as_int().get_mpz_t()) != 0;
        case Kind::FpX: {
            Poly q, r;
            divmod(a, b, q, r);
            return r.is_zero();
        }
        case Kind::ZX: {
            Poly q;
            return try_divexact_z(a, b, q);
        }
    }
    return false;
}

Poly BaseRing::divexact(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw InputError("division by zero");
    if (a.is_zero()) return Poly();
    switch (kind) {
        case Kind::Z: {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.as_int().get_mpz_t(),
                        b.as_int().get_mpz_t());
            if (r != 0) throw InputError("inexact division over Z");
            return Poly(q);
        }
        case Kind::FpX: {
            Poly q, r;
            divmod(a, b, q, r);
            if (!r.is_zero()) throw InputError("inexact division over FpX");
            return q;
        }
        case Kind::ZX: {
            Poly q;
            if (!try_divexact_z(a, b, q)) throw InputError("inexact division over Z[x]");
            return q;
        }
    }
    return Poly();
}

namespace {

// primitive PRS gcd of primitive polynomials over Z
Poly pp_gcd_zx(Poly a, Poly b) {
    auto primitive = [](Poly f) {
        if (f.is_zero()) return f;
        Int c = f.content();
        if (f.lc() < 0) c = -c;
        Poly q;
        try_divexact_z(f, Poly(c), q);
        return q;
    };
    a = primitive(a);
    b = primitive(b);
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = pseudo_rem(a, b);
        a = b;
        b = primitive(r);
    }
    return a;
}

}  // namespace

Poly BaseRing::gcd(const Poly& a, const Poly& b) const {
    if (a.is_zero()) return normalize_assoc(b).first;
    if (b.is_zero()) return normalize_assoc(a).first;
    switch (kind) {
        case Kind::Z: {
            Int g;
            mpz_gcd(g.get_mpz_t(), a.as_int().get_mpz_t(), b.as_int().get_mpz_t());
            return Poly(g);
        }
        case Kind::FpX: {
            Poly x = normalize(a), y = normalize(b), q, r;
            while (!y.is_zero()) {
                divmod(x, y, q, r);
                x = y;
                y = r;
            }
            return normalize_assoc(x).first;
        }
        case Kind::ZX: {
            Int cg;
            mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
            Poly g = Poly(cg) * pp_gcd_zx(a, b);
            return normalize_assoc(g).first;
        }
    }
    return Poly();
}

std::string BaseRing::describe() const {
    switch (kind) {
        case Kind::Z:
            return "Z";
        case Kind::FpX:
            return "F" + p.get_str() + "[x]";
        case Kind::ZX:
            return "Z[x]";
    }
    return "?";
}

const BaseRing& Ring::base() const {
    if (is_product()) throw InputError("operation requires a non-product backend");
    return factors[0];
}

bool Elem::is_zero() const {
    for (const Poly& c : comp)
        if (!c.is_zero()) return false;
    return true;
}

Elem make_elem(const Ring& r, std::vector<Poly> parts) {
    if (parts.size() != r.ncomp()) throw InputError("element has wrong number of components");
    Elem e;
    e.comp.resize(parts.size());
    for (size_t j = 0; j < parts.size(); ++j) {
        if (!r.factors[j].is_valid(parts[j]))
            parts[j] = r.factors[j].normalize(std::move(parts[j]));
        if (!r.factors[j].is_valid(parts[j]))
            throw InputError("element invalid in component " + std::to_string(j));
        e.comp[j] = std::move(parts[j]);
    }
    return e;
}

Elem elem_from_base(const Ring& r, Poly a) {
    std::vector<Poly> parts(r.ncomp(), a);
    return make_elem(r, std::move(parts));
}

bool elem_is_nonzerodivisor(const Ring& r, const Elem& a) {
    if (a.comp.size() != r.ncomp()) throw InputError("element/ring mismatch");
    for (const Poly& c : a.comp)
        if (c.is_zero()) return false;
    return true;
}

std::string to_string(const Ring& r, const Elem& a) {
    if (!r.is_product()) return to_string(a.comp.at(0));
    std::string s = "(";
    for (size_t j = 0; j < a.comp.size(); ++j) {
        if (j) s += ",";
        s += to_string(a.comp[j]);
    }
    return s + ")";
}

std::strong_ordering compare(const Height1Prime& a, const Height1Prime& b) {
    if (a.component != b.component) return a.component <=> b.component;
    return canonical_cmp(a.gen, b.gen);
}

std::string label(const Ring& r, const Height1Prime& P) {
    std::string inner = P.gen.deg() == 0 ? "int:" + P.gen.as_int().get_str()
                                         : "poly:" + to_string(P.gen);
    if (!r.is_product()) return inner;
    return "c" + std::to_string(P.component) + ":" + inner;
}

Height1Prime parse_prime_label(const Ring& r, std::string_view text) {
    Height1Prime P;
    std::string_view rest = text;
    if (rest.size() > 1 && rest[0] == 'c') {
        size_t colon = rest.find(':');
        bool digits = colon != std::string_view::npos && colon > 1;
        for (size_t i = 1; digits && i < colon; ++i)
            digits = std::isdigit(static_cast<unsigned char>(rest[i]));
        if (digits) {
            P.component = std::stoi(std::string(rest.substr(1, colon - 1)));
            rest = rest.substr(colon + 1);
        }
    }
    if (P.component < 0 || static_cast<size_t>(P.component) >= r.ncomp())
        throw InputError("prime component index out of range");
    if (rest.rfind("int:", 0) == 0)
        P.gen = parse_poly(rest.substr(4));
    else if (rest.rfind("poly:", 0) == 0)
        P.gen = parse_poly(rest.substr(5));
    else
        P.gen = parse_poly(rest);
    if (P.gen.is_zero()) throw InputError("zero is not a prime generator");
    return P;
}

Divisor divisor_add(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [P, v] : b) {
        long nv = (out.count(P) ? out[P] : 0) + v;
        if (nv == 0)
            out.erase(P);
        else
            out[P] = nv;
    }
    return out;
}

std::vector<QComponent> components(const Ring& r) {
    std::vector<QComponent> out;
    for (size_t j = 0; j < r.ncomp(); ++j) {
        const BaseRing& b = r.factors[j];
        std::string d;
        switch (b.kind) {
            case Kind::Z:
                d = "Q";
                break;
            case Kind::FpX:
                d = "F" + b.p.get_str() + "(x)";
                break;
            case Kind::ZX:
                d = "Q(x)";
                break;
        }
        out.push_back({static_cast<int>(j), d});
    }
    return out;
}

long val_base(const BaseRing& ring, const Poly& a, const Poly& gen) {
    if (a.is_zero()) throw InputError("valuation of zero");
    switch (ring.kind) {
        case Kind::Z: {
            Int rest;
            return static_cast<long>(mpz_remove(rest.get_mpz_t(), a.as_int().get_mpz_t(),
                                                gen.as_int().get_mpz_t()));
        }
        case Kind::FpX: {
            long v = 0;
            Poly cur = ring.normalize(a), q, r;
            for (;;) {
                ring.divmod(cur, gen, q, r);
                if (!r.is_zero()) return v;
                cur = q;
                ++v;
            }
        }
        case Kind::ZX: {
            if (gen.deg() == 0) {  // prime integer: valuation of the content
                Int rest;
                return static_cast<long>(mpz_remove(rest.get_mpz_t(), a.content().get_mpz_t(),
                                                    gen.as_int().get_mpz_t()));
            }
            long v = 0;
            Poly cur = a, q;
            while (try_divexact_z(cur, gen, q)) {
                cur = q;
                ++v;
            }
            return v;
        }
    }
    return 0;
}

std::optional<long> valuation(const Ring& r, const Elem& num, const Elem& den,
                              const Height1Prime& P) {
    if (!elem_is_nonzerodivisor(r, den)) throw InputError("denominator is a zero divisor");
    if (static_cast<size_t>(P.component) >= r.ncomp()) throw InputError("bad prime component");
    const BaseRing& b = r.factors[P.component];
    const Poly& n = num.comp.at(P.component);
    if (n.is_zero()) return std::nullopt;
    return val_base(b, n, P.gen) - val_base(b, den.comp.at(P.component), P.gen);
}

}  // namespace pkorder
