#include "pkorder/factor.hpp"

#include <algorithm>
#include <map>

namespace pkorder {

namespace {

// deterministic stream for randomized splitting
struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Int below(const Int& bound) {  // uniform-ish in [0, bound)
        size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        Int v = 0;
        for (size_t got = 0; got < bits + 64; got += 64) {
            v <<= 64;
            v += Int(static_cast<unsigned long>(next() >> 32));
            v <<= 32;
            v += Int(static_cast<unsigned long>(next() & 0xffffffffULL));
        }
        return v % bound;
    }
};

std::uint64_t hash_poly(const Poly& f) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.deg() + 1);
    for (const Int& c : f.coeffs()) {
        std::uint64_t w = static_cast<std::uint64_t>(mpz_get_ui(c.get_mpz_t()));
        if (c < 0) w = ~w;
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ---- integers ----

const std::vector<long>& small_primes() {
    static const std::vector<long> primes = [] {
        const long N = 10000;
        std::vector<bool> comp(N + 1, false);
        std::vector<long> ps;
        for (long i = 2; i <= N; ++i) {
            if (!comp[i]) {
                ps.push_back(i);
                for (long j = 2 * i; j <= N; j += i) comp[j] = true;
            }
        }
        return ps;
    }();
    return primes;
}

Int pollard_brent(const Int& n, SplitMix& rng) {
    // Brent's cycle variant; n odd composite, not a small prime power of 2
    for (int attempt = 0; attempt < 64; ++attempt) {
        Int c = rng.below(n - 1) + 1;
        Int x = rng.below(n);
        Int y = x, d = 1, q = 1, ys = 0;
        long r = 1;
        const long m = 128;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && d == 1) {
                ys = y;
                long lim = std::min(m, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (d == n) {  // backtrack
            do {
                ys = (ys * ys + c) % n;
                Int diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
    throw LimitExceeded("pollard rho failed to split " + n.get_str());
}

void factor_int_into(Int n, std::map<Int, int>& out, const Limits& lim, SplitMix& rng) {
    for (long p : small_primes()) {
        if (n == 1) return;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
        if (Int(p) * Int(p) > n) break;
    }
    if (n == 1) return;
    if (is_prime_int(n)) {
        ++out[n];
        return;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > static_cast<size_t>(lim.max_factor_bits))
        throw LimitExceeded("integer factor search beyond " +
                            std::to_string(lim.max_factor_bits) + " bits");
    Int d = pollard_brent(n, rng);
    factor_int_into(d, out, lim, rng);
    factor_int_into(n / d, out, lim, rng);
}

Factorization factor_z(const Poly& a, const Limits& lim) {
    Int n = a.as_int();
    Factorization f;
    f.unit = Poly(n < 0 ? -1 : 1);
    std::map<Int, int> parts;
    SplitMix rng(lim.seed ^ 0x5eedf00dULL ^ hash_poly(a));
    factor_int_into(abs(n), parts, lim, rng);
    for (auto& [p, e] : parts) f.factors.emplace_back(Poly(p), e);
    return f;
}

// ---- F_p[x] ----

Poly fpx_mulmod(const BaseRing& R, const Poly& a, const Poly& b, const Poly& mod) {
    Poly q, r;
    R.divmod(R.mul(a, b), mod, q, r);
    return r;
}

Poly fpx_powmod(const BaseRing& R, Poly base, Int e, const Poly& mod) {
    Poly acc = R.normalize(Poly(1));
    Poly q, r;
    R.divmod(base, mod, q, base);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = fpx_mulmod(R, acc, base, mod);
        base = fpx_mulmod(R, base, base, mod);
        e >>= 1;
    }
    return acc;
}

// squarefree decomposition in characteristic p
void fpx_squarefree(const BaseRing& R, Poly f, int mult,
                    std::vector<std::pair<Poly, int>>& out) {
    if (f.deg() < 1) return;
    Poly d = R.normalize(f.derivative());
    if (d.is_zero()) {  // f = g(x^p); over the prime field g has the same coefficients
        long pl = R.p.get_si();
        std::vector<Int> cs;
        for (int i = 0; i <= f.deg(); i += pl) cs.push_back(f.coeff(i));
        fpx_squarefree(R, Poly::from_coeffs(std::move(cs)), mult * static_cast<int>(pl), out);
        return;
    }
    Poly c = R.gcd(f, d);
    Poly w = R.divexact(f, c);
    int i = 1;
    while (w.deg() >= 1) {
        Poly y = R.gcd(w, c);
        Poly z = R.divexact(w, y);
        if (z.deg() >= 1) out.emplace_back(z, mult * i);
        ++i;
        w = y;
        c = R.divexact(c, y);
    }
    if (c.deg() >= 1) fpx_squarefree(R, c, mult * static_cast<int>(R.p.get_si()), out);
}

Poly fpx_random(const BaseRing& R, int deg_below, SplitMix& rng) {
    std::vector<Int> cs(deg_below);
    for (auto& c : cs) c = rng.below(R.p);
    return Poly::from_coeffs(std::move(cs));
}

// equal-degree splitting (Cantor–Zassenhaus / GF(2) trace)
void fpx_edf(const BaseRing& R, const Poly& f, int d, std::vector<Poly>& out, SplitMix& rng) {
    if (f.deg() == d) {
        out.push_back(R.normalize_assoc(f).first);
        return;
    }
    Poly g;
    for (;;) {
        Poly r = fpx_random(R, f.deg(), rng);
        if (r.deg() < 1) continue;
        Poly t;
        if (R.p == 2) {
            t = r;
            Poly pw = r;
            for (int i = 1; i < d; ++i) {
                pw = fpx_mulmod(R, pw, pw, f);
                t = R.add(t, pw);
            }
        } else {
            Int e = 1;
            for (int i = 0; i < d; ++i) e *= R.p;
            e = (e - 1) / 2;
            t = R.sub(fpx_powmod(R, r, e, f), Poly(1));
        }
        g = R.gcd(t, f);
        if (g.deg() > 0 && g.deg() < f.deg()) break;
    }
    fpx_edf(R, g, d, out, rng);
    fpx_edf(R, R.divexact(f, g), d, out, rng);
}

Factorization factor_fpx(const BaseRing& R, const Poly& a, const Limits& lim) {
    Factorization out;
    auto [mon, unit] = R.normalize_assoc(a);
    out.unit = Poly(R.inv_mod_p(unit.as_int()));
    if (mon.deg() < 1) {
        out.unit = a;
        return out;
    }
    SplitMix rng(lim.seed ^ 0xedf5eedULL ^ hash_poly(a));
    std::vector<std::pair<Poly, int>> sqf;
    fpx_squarefree(R, mon, 1, sqf);
    for (auto& [part, mult] : sqf) {
        // distinct-degree then equal-degree
        Poly rest = part;
        Poly h = Poly::x();
        for (int d = 1; rest.deg() >= 2 * d; ++d) {
            h = fpx_powmod(R, h, R.p, rest);
            Poly g = R.gcd(R.sub(h, Poly::x()), rest);
            if (g.deg() > 0) {
                std::vector<Poly> eq;
                fpx_edf(R, g, d, eq, rng);
                for (auto& irr : eq) out.factors.emplace_back(irr, mult);
                rest = R.divexact(rest, g);
                Poly q;
                R.divmod(h, rest, q, h);
            }
        }
        if (rest.deg() >= 1) out.factors.emplace_back(R.normalize_assoc(rest).first, mult);
    }
    return out;
}

// ---- Z[x] ----

Poly pp_positive(const Poly& f) {
    if (f.is_zero()) return f;
    Int c = f.content();
    if (f.lc() < 0) c = -c;
    Poly q;
    try_divexact_z(f, Poly(c), q);
    return q;
}

// Yun's squarefree decomposition of a primitive polynomial
void zx_squarefree(const BaseRing& R, const Poly& f, std::vector<std::pair<Poly, int>>& out) {
    Poly d = f.derivative();
    Poly g = R.gcd(f, d);
    if (g.is_constant()) {
        out.emplace_back(f, 1);
        return;
    }
    Poly w = R.divexact(f, g);
    Poly y = R.divexact(d, g);
    Poly z = y - w.derivative();
    int i = 1;
    while (!w.is_constant()) {
        Poly h = R.gcd(w, z);
        if (h.deg() >= 1) out.emplace_back(pp_positive(h), i);
        w = R.divexact(w, h);
        y = R.divexact(z, h);
        z = y - w.derivative();
        ++i;
    }
}

Poly symmetric_mod(const Poly& f, const Int& m) {
    std::vector<Int> cs(f.coeffs());
    Int half = m / 2;
    for (Int& c : cs) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    return Poly::from_coeffs(std::move(cs));
}

// one linear Hensel step: refine h_i so that g == L*prod(h) mod p^(j+1)
struct HenselState {
    BaseRing fp;                // F_p
    Int p;
    std::vector<Poly> h;        // monic lifts, integer coefficients
    std::vector<Poly> w;        // w_i = (L*prod_{k!=i} h_k)^{-1} mod (h_i mod p)
};

Poly fpx_inverse_mod(const BaseRing& R, const Poly& a, const Poly& mod) {
    // extended Euclid in F_p[x]
    Poly r0 = mod, r1 = R.normalize(a), t0, t1 = Poly(1), q, r;
    while (!r1.is_zero()) {
        R.divmod(r0, r1, q, r);
        Poly t2 = R.sub(t0, R.mul(q, t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if (r0.deg() != 0) throw InputError("inverse does not exist in F_p[x]");
    return R.mul(Poly(R.inv_mod_p(r0.as_int())), t0);
}

Factorization factor_zx(const BaseRing& R, const Poly& a, const Limits& lim) {
    if (a.deg() > lim.max_degree)
        throw LimitExceeded("degree beyond factorization budget");
    Factorization out;
    out.unit = Poly(a.lc() < 0 ? -1 : 1);
    Int c = a.content();
    Poly prim = pp_positive(a);
    if (c != 1) {
        Factorization cf = factor_z(Poly(c), lim);
        for (auto& pe : cf.factors) out.factors.push_back(pe);
    }
    if (prim.deg() < 1) {
        std::sort(out.factors.begin(), out.factors.end(),
                  [](auto& x, auto& y) { return canonical_cmp(x.first, y.first) < 0; });
        return out;
    }
    std::vector<std::pair<Poly, int>> sqf;
    zx_squarefree(R, prim, sqf);

    for (auto& [g0, mult] : sqf) {
        Poly g = g0;
        if (g.deg() == 1) {
            out.factors.emplace_back(g, mult);
            continue;
        }
        // choose a good prime: p coprime to lc, g squarefree mod p
        BaseRing fp{Kind::FpX, 0};
        Poly gbar;
        bool good = false;
        for (long pc : small_primes()) {
            Int P(pc);
            if (mpz_divisible_p(g.lc().get_mpz_t(), P.get_mpz_t())) continue;
            fp.p = P;
            gbar = fp.normalize(g);
            if (gbar.deg() != g.deg()) continue;
            Poly d = fp.normalize(gbar.derivative());
            if (d.is_zero()) continue;
            if (fp.gcd(gbar, d).deg() == 0) {
                good = true;
                break;
            }
        }
        if (!good) throw LimitExceeded("no good reduction prime found");

        Factorization modular = factor_fpx(fp, gbar, lim);
        if (modular.factors.size() == 1) {
            out.factors.emplace_back(g, mult);
            continue;
        }

        // lift bound: coefficients of L*h for any true factor h
        Int L = g.lc();
        Int bound = (Int(g.deg()) + 1) * g.height() * abs(L);
        mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), g.deg() + 1);
        Int pk = fp.p;
        int steps = 1;
        while (pk <= 2 * bound) {
            pk *= fp.p;
            ++steps;
        }

        // linear multifactor Hensel lift of the monic modular factors
        std::vector<Poly> h;
        for (auto& [f, e] : modular.factors) h.push_back(f);  // e == 1: squarefree
        std::vector<Poly> w(h.size());
        for (size_t i = 0; i < h.size(); ++i) {
            Poly prodothers = fp.normalize(Poly(L));
            for (size_t k = 0; k < h.size(); ++k)
                if (k != i) prodothers = fpx_mulmod(fp, prodothers, h[k], h[i]);
            w[i] = fpx_inverse_mod(fp, prodothers, h[i]);
        }
        Int pj = fp.p;
        for (int s = 1; s < steps; ++s) {
            Poly prod = Poly(L);
            for (auto& hi : h) prod *= hi;
            Poly err = g - prod;  // divisible by p^j
            Poly e;
            try_divexact_z(err, Poly(pj), e);
            e = fp.normalize(e);
            for (size_t i = 0; i < h.size(); ++i) {
                Poly q, delta;
                fp.divmod(fp.mul(e, w[i]), fp.normalize(h[i]), q, delta);
                h[i] = h[i] + Int(pj) * symmetric_mod(delta, fp.p);
            }
            pj *= fp.p;
        }

        // recombination by subset size
        std::vector<size_t> live(h.size());
        for (size_t i = 0; i < live.size(); ++i) live[i] = i;
        Poly rest = g;
        long tests = 0;
        bool done = false;
        for (size_t card = 1; !done && !live.empty() && 2 * card <= live.size();) {
            std::vector<size_t> pick(card);
            for (size_t i = 0; i < card; ++i) pick[i] = i;
            bool found = false;
            for (;;) {
                if (++tests > 1000000) throw LimitExceeded("factor recombination budget");
                Poly cand = Poly(rest.lc());
                for (size_t i : pick) cand = symmetric_mod(cand * h[live[i]], pk);
                cand = pp_positive(cand);
                Poly quot;
                if (!cand.is_constant() && try_divexact_z(rest, cand, quot)) {
                    out.factors.emplace_back(cand, mult);
                    rest = pp_positive(quot);
                    std::vector<size_t> nx;
                    for (size_t i = 0, k = 0; i < live.size(); ++i) {
                        if (k < pick.size() && pick[k] == i)
                            ++k;
                        else
                            nx.push_back(live[i]);
                    }
                    live = nx;
                    found = true;
                    break;
                }
                // next combination
                int pos = static_cast<int>(card) - 1;
                while (pos >= 0 && pick[pos] == live.size() - card + pos) --pos;
                if (pos < 0) break;
                ++pick[pos];
                for (size_t i = pos + 1; i < card; ++i) pick[i] = pick[i - 1] + 1;
            }
            if (!found) ++card;
            if (rest.is_constant()) done = true;
        }
        if (rest.deg() >= 1) out.factors.emplace_back(rest, mult);
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](auto& x, auto& y) { return canonical_cmp(x.first, y.first) < 0; });
    return out;
}

}  // namespace

bool is_prime_int(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factor(const BaseRing& ring, const Poly& a, const Limits& lim) {
    if (a.is_zero()) throw InputError("factor(0) is undefined");
    ++counters().factorizations;
    switch (ring.kind) {
        case Kind::Z:
            return factor_z(a, lim);
        case Kind::FpX: {
            Factorization f = factor_fpx(ring, a, lim);
            std::sort(f.factors.begin(), f.factors.end(),
                      [](auto& x, auto& y) { return canonical_cmp(x.first, y.first) < 0; });
            return f;
        }
        case Kind::ZX:
            return factor_zx(ring, a, lim);
    }
    throw InputError("unknown ring kind");
}

bool is_irreducible(const BaseRing& ring, const Poly& a, const Limits& lim) {
    if (a.is_zero() || ring.is_unit(a)) return false;
    Factorization f = factor(ring, a, lim);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

VMin v_min(const Ring& r, const Elem& a, const Limits& lim) {
    if (a.comp.size() != r.ncomp()) throw InputError("element/ring mismatch");
    VMin out;
    for (size_t j = 0; j < r.ncomp(); ++j) {
        const Poly& c = a.comp[j];
        if (c.is_zero()) {
            out.vanishing_components.push_back(static_cast<int>(j));
            continue;
        }
        if (r.factors[j].is_unit(c)) continue;
        Factorization f = factor(r.factors[j], c, lim);
        for (auto& [irr, e] : f.factors)
            out.primes.push_back({static_cast<int>(j), irr});
    }
    std::sort(out.primes.begin(), out.primes.end(),
              [](const Height1Prime& x, const Height1Prime& y) { return x < y; });
    return out;
}

Divisor divisor_of(const Ring& r, const Elem& num, const Elem& den, const Limits& lim) {
    if (!elem_is_nonzerodivisor(r, num) || !elem_is_nonzerodivisor(r, den))
        throw InputError("divisor requires a non-zero-divisor of Q");
    Divisor d;
    for (size_t j = 0; j < r.ncomp(); ++j) {
        for (int sign : {1, -1}) {
            const Poly& c = sign > 0 ? num.comp[j] : den.comp[j];
            if (r.factors[j].is_unit(c)) continue;
            Factorization f = factor(r.factors[j], c, lim);
            for (auto& [irr, e] : f.factors) {
                Height1Prime P{static_cast<int>(j), irr};
                long nv = (d.count(P) ? d[P] : 0) + sign * e;
                if (nv == 0)
                    d.erase(P);
                else
                    d[P] = nv;
            }
        }
    }
    return d;
}

}  // namespace pkorder
