#include "pkorder/gb.hpp"

#include <algorithm>
#include <set>

namespace pkorder {

namespace {

struct Term {
    int pos = -1;  // -1: zero vector
    int deg = -1;

    bool is_none() const { return pos < 0; }
    friend bool operator==(const Term&, const Term&) = default;
};

// position-over-term: smaller position wins, then higher degree
bool term_greater(const Term& a, const Term& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.deg > b.deg;
}

Term lead_term(const std::vector<Poly>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return {static_cast<int>(i), v[i].deg()};
    return {};
}

struct Engine {
    const BaseRing& R;
    int width;  // rank + ninputs
    const Limits& lim;
    long steps = 0;
    bool field;

    Engine(const BaseRing& r, int w, const Limits& l)
        : R(r), width(w), lim(l), field(r.kind == Kind::FpX) {}

    void tick(long n = 1) {
        steps += n;
        counters().gb_steps += n;
        if (steps > lim.gb_step_limit)
            throw LimitExceeded("strong basis step budget exhausted");
    }

    // dst += c * x^shift * src
    void addmul(PolyVec& dst, const PolyVec& src, const Int& c, int shift) {
        tick();
        Poly scale = Poly::monomial(c, shift);
        for (int i = 0; i < width; ++i) {
            if (src[i].is_zero()) continue;
            dst[i] = R.add(dst[i], scale * src[i]);
        }
    }

    void scale_row(PolyVec& v, const Int& c) {
        for (int i = 0; i < width; ++i)
            if (!v[i].is_zero()) v[i] = R.mul(Poly(c), v[i]);
    }

    // one full downward normal-form pass of v against basis (by lead terms)
    PolyVec normal_form(PolyVec v, const std::vector<PolyVec>& basis,
                        bool heads_only_width = false, int head_width = 0) const {
        Engine* self = const_cast<Engine*>(this);
        Term t = lead_term(v);
        while (!t.is_none()) {
            if (heads_only_width && t.pos >= head_width) break;
            bool changed = true;
            while (changed) {
                changed = false;
                const Int& c = v[t.pos].coeff(t.deg);
                if (c == 0) break;
                // applicable reducer with smallest |lead coefficient|
                const PolyVec* best = nullptr;
                Int bestc;
                for (const PolyVec& b : basis) {
                    Term bt = lead_term(b);
                    if (bt.is_none() || bt.pos != t.pos || bt.deg > t.deg) continue;
                    const Int& bc = b[bt.pos].coeff(bt.deg);
                    if (field) {
                        best = &b;
                        bestc = bc;
                        break;
                    }
                    if (best == nullptr || abs(bc) < abs(bestc)) {
                        best = &b;
                        bestc = bc;
                    }
                }
                if (!best) break;
                Term bt = lead_term(*best);
                Int q;
                if (field) {
                    q = c * R.inv_mod_p(bestc) % R.p;
                } else {
                    mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(), bestc.get_mpz_t());
                }
                if (q == 0) break;
                self->addmul(v, *best, -q, t.deg - bt.deg);
                changed = !field && v[t.pos].coeff(t.deg) != 0;
            }
            // advance to the next smaller nonzero term
            Term next{};
            for (int i = t.pos; i < width; ++i) {
                if (v[i].is_zero()) continue;
                int start = (i == t.pos) ? std::min(t.deg - 1, v[i].deg()) : v[i].deg();
                for (int d = start; d >= 0; --d) {
                    if (v[i].coeff(d) != 0) {
                        next = {i, d};
                        break;
                    }
                }
                if (!next.is_none()) break;
            }
            t = next;
        }
        return v;
    }
};

struct PairKey {
    int pos;
    int deg;  // lcm degree
    int i, j;
    friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

}  // namespace

GbBasis strong_basis(const BaseRing& ring, int rank, const std::vector<PolyVec>& input,
                     const Limits& lim) {
    const int k = static_cast<int>(input.size());
    const int width = rank + k;
    Engine eng(ring, width, lim);

    std::vector<PolyVec> basis;
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(input[i].size()) != rank)
            throw InputError("vector rank mismatch in strong_basis");
        PolyVec row(width, Poly());
        for (int j = 0; j < rank; ++j) row[j] = ring.normalize(input[i][j]);
        row[rank + i] = Poly(1);
        basis.push_back(std::move(row));
    }

    std::set<PairKey> queue;
    auto push_pairs = [&](int idx) {
        Term ti = lead_term(basis[idx]);
        if (ti.is_none()) return;
        for (int j = 0; j < idx; ++j) {
            Term tj = lead_term(basis[j]);
            if (tj.is_none() || tj.pos != ti.pos) continue;
            queue.insert({ti.pos, std::max(ti.deg, tj.deg), j, idx});
        }
    };
    for (int i = 0; i < k; ++i) push_pairs(i);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        const PolyVec& f = basis[pk.i];
        const PolyVec& g = basis[pk.j];
        Term tf = lead_term(f), tg = lead_term(g);
        if (tf.is_none() || tg.is_none() || tf.pos != tg.pos) continue;
        int m = std::max(tf.deg, tg.deg);
        const Int cf = f[tf.pos].coeff(tf.deg);
        const Int cg = g[tg.pos].coeff(tg.deg);

        std::vector<PolyVec> candidates;
        {   // S-vector
            PolyVec s(width, Poly());
            if (eng.field) {
                eng.addmul(s, f, cg, m - tf.deg);
                eng.addmul(s, g, -cf, m - tg.deg);
            } else {
                Int l;
                mpz_lcm(l.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
                eng.addmul(s, f, l / cf, m - tf.deg);
                eng.addmul(s, g, -(l / cg), m - tg.deg);
            }
            candidates.push_back(std::move(s));
        }
        if (!eng.field) {  // gcd-vector unless one lead coefficient divides the other
            bool divides = mpz_divisible_p(cg.get_mpz_t(), cf.get_mpz_t()) ||
                           mpz_divisible_p(cf.get_mpz_t(), cg.get_mpz_t());
            if (!divides) {
                Int gc, u, v;
                mpz_gcdext(gc.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), cf.get_mpz_t(),
                           cg.get_mpz_t());
                PolyVec gv(width, Poly());
                eng.addmul(gv, f, u, m - tf.deg);
                eng.addmul(gv, g, v, m - tg.deg);
                candidates.push_back(std::move(gv));
            }
        }
        for (PolyVec& c : candidates) {
            PolyVec nf = eng.normal_form(std::move(c), basis);
            if (lead_term(nf).is_none()) continue;
            basis.push_back(std::move(nf));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // inter-reduce to the canonical basis
    bool changed = true;
    int guard = 0;
    while (changed && ++guard < 200) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            PolyVec take = std::move(basis[i]);
            std::vector<PolyVec> others;
            others.reserve(basis.size() - 1);
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            PolyVec nf = eng.normal_form(take, others);
            if (lead_term(nf).is_none()) {
                basis.erase(basis.begin() + i);
                --i;
                changed = true;
                continue;
            }
            if (!(nf == basis[i])) changed = true;
            basis[i] = std::move(nf);
        }
    }

    // canonical unit normalization and ordering
    for (PolyVec& row : basis) {
        Term t = lead_term(row);
        const Int& lc = row[t.pos].coeff(t.deg);
        if (eng.field) {
            Int inv = ring.inv_mod_p(lc);
            if (inv != 1) eng.scale_row(row, inv);
        } else if (lc < 0) {
            eng.scale_row(row, Int(-1));
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const PolyVec& a, const PolyVec& b) {
        Term ta = lead_term(a), tb = lead_term(b);
        if (!(ta == tb)) return term_greater(ta, tb);
        for (int i = 0; i < width; ++i) {
            auto c = canonical_cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });

    GbBasis out;
    out.ring = ring;
    out.rank = rank;
    out.ninputs = k;
    out.aug = std::move(basis);
    return out;
}

std::vector<PolyVec> GbBasis::rows() const {
    std::vector<PolyVec> r;
    for (const PolyVec& v : aug) {
        Term t = lead_term(v);
        if (!t.is_none() && t.pos < rank) r.emplace_back(v.begin(), v.begin() + rank);
    }
    return r;
}

std::vector<PolyVec> GbBasis::row_certs() const {
    std::vector<PolyVec> r;
    for (const PolyVec& v : aug) {
        Term t = lead_term(v);
        if (!t.is_none() && t.pos < rank) r.emplace_back(v.begin() + rank, v.end());
    }
    return r;
}

std::vector<PolyVec> GbBasis::syzygies() const {
    std::vector<PolyVec> r;
    for (const PolyVec& v : aug) {
        Term t = lead_term(v);
        if (!t.is_none() && t.pos >= rank) r.emplace_back(v.begin() + rank, v.end());
    }
    return r;
}

PolyVec GbBasis::normal_form(const PolyVec& v) const {
    if (static_cast<int>(v.size()) != rank) throw InputError("vector rank mismatch");
    Limits lim;
    lim.gb_step_limit = 1L << 60;  // reduction always terminates
    Engine eng(ring, rank + ninputs, lim);
    PolyVec w(rank + ninputs, Poly());
    for (int i = 0; i < rank; ++i) w[i] = ring.normalize(v[i]);
    w = eng.normal_form(std::move(w), aug, true, rank);
    return PolyVec(w.begin(), w.begin() + rank);
}

Membership GbBasis::reduce(const PolyVec& v) const {
    if (static_cast<int>(v.size()) != rank) throw InputError("vector rank mismatch");
    Limits lim;
    lim.gb_step_limit = 1L << 60;
    Engine eng(ring, rank + ninputs, lim);
    PolyVec w(rank + ninputs, Poly());
    for (int i = 0; i < rank; ++i) w[i] = ring.normalize(v[i]);
    w = eng.normal_form(std::move(w), aug);
    Membership m;
    for (int i = 0; i < rank; ++i)
        if (!w[i].is_zero()) return m;
    m.contains = true;
    m.certificate.resize(ninputs);
    for (int i = 0; i < ninputs; ++i) m.certificate[i] = ring.neg(w[rank + i]);
    return m;
}

std::vector<PolyVec> syzygies_of(const BaseRing& ring, int rank,
                                 const std::vector<PolyVec>& input, const Limits& lim) {
    return strong_basis(ring, rank, input, lim).syzygies();
}

std::vector<PolyVec> split_syzygies(const BaseRing& ring, int rank,
                                    const std::vector<PolyVec>& a,
                                    const std::vector<PolyVec>& b, const Limits& lim) {
    std::vector<PolyVec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return syzygies_of(ring, rank, both, lim);
}

}  // namespace pkorder
