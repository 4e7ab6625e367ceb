#include "taufan/poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace taufan {

namespace {

void strip(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

QPoly::QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { strip(c); }

QPoly qp_x() { return QPoly({Rat(0), Rat(1)}); }

QPoly qp_const(const Rat& a) { return QPoly({a}); }

QPoly qp_add(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return QPoly(std::move(c));
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return QPoly(std::move(c));
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    }
    return QPoly(std::move(c));
}

QPoly qp_scale(const QPoly& a, const Rat& s) {
    if (s == 0) return QPoly();
    std::vector<Rat> c = a.c;
    for (auto& x : c) x *= s;
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
    assert(!b.is_zero());
    std::vector<Rat> rem = a.c;
    const int db = b.deg();
    if (a.deg() < db) return {QPoly(), a};
    std::vector<Rat> quot(static_cast<size_t>(a.deg() - db) + 1, Rat(0));
    for (int i = a.deg(); i >= db; --i) {
        Rat lead = rem[static_cast<size_t>(i)];
        if (lead == 0) continue;
        Rat q = lead / b.lc();
        quot[static_cast<size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<size_t>(i - db + j)] -= q * b.c[static_cast<size_t>(j)];
        }
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly qp_monic(const QPoly& a) {
    if (a.is_zero()) return a;
    return qp_scale(a, Rat(1) / a.lc());
}

QPoly qp_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = qp_divmod(x, y).second;
        x = y;
        y = r;
    }
    return qp_monic(x);
}

QPolyExtGcd qp_ext_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly u0 = qp_const(1), u1;
    QPoly v0, v1 = qp_const(1);
    while (!r1.is_zero()) {
        auto [q, r] = qp_divmod(r0, r1);
        QPoly u2 = qp_sub(u0, qp_mul(q, u1));
        QPoly v2 = qp_sub(v0, qp_mul(q, v1));
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.is_zero()) {
        Rat s = Rat(1) / r0.lc();
        r0 = qp_scale(r0, s);
        u0 = qp_scale(u0, s);
        v0 = qp_scale(v0, s);
    }
    return {r0, u0, v0};
}

QPoly qp_derivative(const QPoly& a) {
    if (a.deg() <= 0) return QPoly();
    std::vector<Rat> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = a.c[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(c));
}

QPoly qp_pow(const QPoly& a, int k) {
    QPoly r = qp_const(Rat(1));
    for (int i = 0; i < k; ++i) r = qp_mul(r, a);
    return r;
}

std::string qp_to_string(const QPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.deg(); i >= 0; --i) {
        const Rat& ci = a.c[static_cast<size_t>(i)];
        if (ci == 0) continue;
        if (!first) os << (ci > 0 ? " + " : " - ");
        else if (ci < 0) os << "-";
        Rat absc = ci > 0 ? ci : Rat(-ci);
        if (absc != 1 || i == 0) os << rat_to_string(absc);
        if (i > 0) {
            if (absc != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

QPoly squarefree_part(const QPoly& f) {
    if (f.deg() <= 0) return qp_monic(f);
    QPoly g = qp_gcd(f, qp_derivative(f));
    return qp_monic(qp_divmod(f, g).first);
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers for the factorization kernel.

namespace {

struct ZPoly {
    std::vector<Int> c;  // no trailing zeros

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Int lc() const { return c.back(); }
};

void zstrip(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly z_from_q(const QPoly& f, Int* content_den = nullptr) {
    Int l(1);
    for (const auto& q : f.c) l = lcm(l, denom(q));
    std::vector<Int> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = Int(numer(f.c[i]) * (l / denom(f.c[i])));
    Int g(0);
    for (const auto& x : c) g = gcd(g, x);
    if (g != 0) {
        for (auto& x : c) x /= g;
    }
    if (!c.empty() && c.back() < 0) {
        for (auto& x : c) x = -x;
    }
    if (content_den) *content_den = l;
    ZPoly z;
    z.c = std::move(c);
    zstrip(z.c);
    return z;
}

QPoly q_from_z(const ZPoly& f) {
    std::vector<Rat> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = Rat(f.c[i]);
    return QPoly(std::move(c));
}

// Exact division over Z; nullopt when b does not divide a.
std::optional<ZPoly> z_divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return ZPoly{};
    if (a.deg() < b.deg()) return std::nullopt;
    std::vector<Int> rem = a.c;
    std::vector<Int> quot(static_cast<size_t>(a.deg() - b.deg()) + 1, Int(0));
    for (int i = a.deg(); i >= b.deg(); --i) {
        Int lead = rem[static_cast<size_t>(i)];
        if (lead == 0) continue;
        if (lead % b.lc() != 0) return std::nullopt;
        Int q = lead / b.lc();
        quot[static_cast<size_t>(i - b.deg())] = q;
        for (int j = 0; j <= b.deg(); ++j) {
            rem[static_cast<size_t>(i - b.deg() + j)] -= q * b.c[static_cast<size_t>(j)];
        }
    }
    for (const auto& r : rem) {
        if (r != 0) return std::nullopt;
    }
    ZPoly z;
    z.c = std::move(quot);
    zstrip(z.c);
    return z;
}

// ---- arithmetic mod a small prime ----------------------------------------

using PPoly = std::vector<long>;  // coefficient i of x^i, values in [0, p)

void pstrip(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly p_from_z(const ZPoly& f, long p) {
    PPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        Int m = f.c[i] % p;
        if (m < 0) m += p;
        r[i] = m.convert_to<long>();
    }
    pstrip(r);
    return r;
}

int p_deg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

long p_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

PPoly p_mul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        }
    }
    pstrip(c);
    return c;
}

std::pair<PPoly, PPoly> p_divmod(const PPoly& a, const PPoly& b, long p) {
    PPoly rem = a;
    if (p_deg(a) < p_deg(b)) return {{}, rem};
    PPoly quot(static_cast<size_t>(p_deg(a) - p_deg(b)) + 1, 0);
    long binv = p_inv(b.back(), p);
    for (int i = p_deg(a); i >= p_deg(b); --i) {
        long lead = rem[static_cast<size_t>(i)];
        if (lead == 0) continue;
        long q = lead * binv % p;
        quot[static_cast<size_t>(i - p_deg(b))] = q;
        for (int j = 0; j <= p_deg(b); ++j) {
            long& r = rem[static_cast<size_t>(i - p_deg(b) + j)];
            r = ((r - q * b[static_cast<size_t>(j)]) % p + p) % p;
        }
    }
    pstrip(rem);
    pstrip(quot);
    return {quot, rem};
}

PPoly p_mod(const PPoly& a, const PPoly& b, long p) { return p_divmod(a, b, p).second; }

PPoly p_gcd(PPoly a, PPoly b, long p) {
    while (!b.empty()) {
        PPoly r = p_mod(a, b, p);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        long inv = p_inv(a.back(), p);
        for (auto& x : a) x = x * inv % p;
    }
    return a;
}

PPoly p_monic(PPoly f, long p) {
    if (f.empty()) return f;
    long inv = p_inv(f.back(), p);
    for (auto& x : f) x = x * inv % p;
    return f;
}

PPoly p_derivative(const PPoly& f, long p) {
    if (f.size() <= 1) return {};
    PPoly d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = (static_cast<long>(i) % p) * f[i] % p;
    pstrip(d);
    return d;
}

PPoly p_powmod(PPoly base, Int e, const PPoly& mod, long p) {
    PPoly r = {1};
    base = p_mod(base, mod, p);
    while (e > 0) {
        if ((e & 1) != 0) r = p_mod(p_mul(r, base, p), mod, p);
        base = p_mod(p_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

// Berlekamp on a monic squarefree f mod p. Deterministic: p is small, so the
// splitting loop over s in F_p is exhaustive.
std::vector<PPoly> berlekamp(const PPoly& f, long p) {
    const int n = p_deg(f);
    if (n <= 1) return {f};
    // rows of (Q - I): Q row i = x^{i p} mod f
    std::vector<std::vector<long>> m(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        PPoly xi(static_cast<size_t>(i) + 1, 0);
        xi[static_cast<size_t>(i)] = 1;
        PPoly qi = p_powmod(xi, Int(p), f, p);
        for (size_t j = 0; j < qi.size(); ++j) m[static_cast<size_t>(i)][j] = qi[j];
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            ((m[static_cast<size_t>(i)][static_cast<size_t>(i)] - 1) % p + p) % p;
    }
    // kernel of m^T (we built rows as images; solve v M = 0 i.e. M^T v = 0)
    std::vector<std::vector<long>> a(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(j)][static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r) {
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(row)]);
        long inv = p_inv(a[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
        for (auto& x : a[static_cast<size_t>(row)]) x = x * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            long c = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j) {
                long& x = a[static_cast<size_t>(r)][static_cast<size_t>(j)];
                x = ((x - c * a[static_cast<size_t>(row)][static_cast<size_t>(j)]) % p + p) % p;
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<PPoly> basis;
    {
        size_t pi = 0;
        for (int col = 0; col < n; ++col) {
            if (pi < pivot_col.size() && pivot_col[pi] == col) { ++pi; continue; }
            PPoly v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(col)] = 1;
            for (size_t r = 0; r < pivot_col.size(); ++r) {
                long val = a[r][static_cast<size_t>(col)];
                v[static_cast<size_t>(pivot_col[r])] = ((-val) % p + p) % p;
            }
            pstrip(v);
            basis.push_back(v);
        }
    }
    const size_t target = basis.size();  // number of irreducible factors
    std::vector<PPoly> factors = {f};
    if (target <= 1) return factors;
    for (const auto& v : basis) {
        if (p_deg(v) < 1) continue;  // constant kernel vector splits nothing
        if (factors.size() >= target) break;
        std::vector<PPoly> next;
        for (const auto& u : factors) {
            if (p_deg(u) <= 1) {
                next.push_back(u);
                continue;
            }
            PPoly residue = u;
            std::vector<PPoly> parts;
            for (long s = 0; s < p && p_deg(residue) > 0; ++s) {
                PPoly vs = v;  // v - s
                if (vs.empty()) vs = {(p - s) % p};
                else vs[0] = ((vs[0] - s) % p + p) % p;
                pstrip(vs);
                PPoly g = p_gcd(residue, vs, p);
                if (p_deg(g) > 0 && p_deg(g) < p_deg(residue)) {
                    parts.push_back(g);
                    residue = p_monic(p_divmod(residue, g, p).first, p);
                }
            }
            if (p_deg(residue) > 0) parts.push_back(residue);
            for (auto& q : parts) next.push_back(p_monic(q, p));
        }
        factors = next;
    }
    return factors;
}

// ---- arithmetic mod p^k ----------------------------------------------------

using KPoly = std::vector<Int>;  // coefficients in [0, pk)

void kstrip(KPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

KPoly k_from_p(const PPoly& f) {
    KPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

KPoly k_reduce(const KPoly& f, const Int& pk) {
    KPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        r[i] = f[i] % pk;
        if (r[i] < 0) r[i] += pk;
    }
    kstrip(r);
    return r;
}

KPoly k_mul(const KPoly& a, const KPoly& b, const Int& pk) {
    if (a.empty() || b.empty()) return {};
    KPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % pk;
    }
    kstrip(c);
    return c;
}

KPoly k_sub(const KPoly& a, const KPoly& b, const Int& pk) {
    KPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) {
        c[i] = (c[i] - b[i]) % pk;
        if (c[i] < 0) c[i] += pk;
    }
    kstrip(c);
    return c;
}

KPoly k_add(const KPoly& a, const KPoly& b, const Int& pk) {
    KPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % pk;
    kstrip(c);
    return c;
}

// divmod by a monic divisor
std::pair<KPoly, KPoly> k_divmod_monic(const KPoly& a, const KPoly& b, const Int& pk) {
    KPoly rem = a;
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 < db) return {{}, rem};
    KPoly quot(rem.size() - b.size() + 1, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        Int lead = rem[static_cast<size_t>(i)] % pk;
        if (lead == 0) continue;
        quot[static_cast<size_t>(i - db)] = lead;
        for (int j = 0; j <= db; ++j) {
            Int& r = rem[static_cast<size_t>(i - db + j)];
            r = (r - lead * b[static_cast<size_t>(j)]) % pk;
            if (r < 0) r += pk;
        }
    }
    kstrip(rem);
    kstrip(quot);
    return {quot, rem};
}

struct HenselNode {
    PPoly g0, h0;  // mod p split
    PPoly s, t;    // Bezout: s g0 + t h0 = 1 mod p
};

// extended euclid mod p for polynomials
void p_bezout(const PPoly& a, const PPoly& b, long p, PPoly& s, PPoly& t) {
    PPoly r0 = a, r1 = b;
    PPoly s0 = {1}, s1 = {};
    PPoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = p_divmod(r0, r1, p);
        PPoly ns = s0, nt = t0;
        PPoly qs = p_mul(q, s1, p), qt = p_mul(q, t1, p);
        // ns = s0 - q s1, nt = t0 - q t1
        PPoly s2(std::max(ns.size(), qs.size()), 0);
        for (size_t i = 0; i < ns.size(); ++i) s2[i] = ns[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
        pstrip(s2);
        PPoly t2(std::max(nt.size(), qt.size()), 0);
        for (size_t i = 0; i < nt.size(); ++i) t2[i] = nt[i];
        for (size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % p + p) % p;
        pstrip(t2);
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    // r0 = gcd (a unit for coprime inputs); normalize to 1
    long inv = p_inv(r0.empty() ? 1 : r0.back(), p);
    for (auto& x : s0) x = x * inv % p;
    for (auto& x : t0) x = x * inv % p;
    s = s0;
    t = t0;
}

// Lift the monic split fm = g*h from mod p^j to mod p^{j+1}, linearly, with
// fixed Bezout data mod p.
void hensel_step(const KPoly& fm, KPoly& g, KPoly& h, const HenselNode& nd,
                 long p, const Int& pj, const Int& pj1) {
    KPoly gh = k_mul(g, h, pj1);
    KPoly e = k_sub(fm, gh, pj1);
    // all coefficients of e are divisible by pj
    PPoly delta(e.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
        Int d = (e[i] / pj) % p;
        delta[i] = d.convert_to<long>();
    }
    pstrip(delta);
    if (delta.empty()) return;
    // a = (t*delta) rem g0, b = s*delta + q*h0 with q the quotient
    auto [q, a] = p_divmod(p_mul(nd.t, delta, p), nd.g0, p);
    PPoly b = p_mul(nd.s, delta, p);
    PPoly qh = p_mul(q, nd.h0, p);
    PPoly b2(std::max(b.size(), qh.size()), 0);
    for (size_t i = 0; i < b.size(); ++i) b2[i] = b[i];
    for (size_t i = 0; i < qh.size(); ++i) b2[i] = (b2[i] + qh[i]) % p;
    pstrip(b2);
    KPoly ga(std::max(g.size(), a.size()), Int(0));
    for (size_t i = 0; i < g.size(); ++i) ga[i] = g[i];
    for (size_t i = 0; i < a.size(); ++i) ga[i] = (ga[i] + pj * a[i]) % pj1;
    kstrip(ga);
    KPoly hb(std::max(h.size(), b2.size()), Int(0));
    for (size_t i = 0; i < h.size(); ++i) hb[i] = h[i];
    for (size_t i = 0; i < b2.size(); ++i) hb[i] = (hb[i] + pj * b2[i]) % pj1;
    kstrip(hb);
    g = ga;
    h = hb;
}

// Lift a list of pairwise coprime monic factors of the monic fm from mod p
// to mod p^K, recursively splitting the list in two.
void lift_list(const KPoly& fm, const std::vector<PPoly>& parts, long p, int bigk,
               const Int& pK, std::vector<KPoly>& out) {
    if (parts.size() == 1) {
        out.push_back(k_reduce(fm, pK));
        return;
    }
    size_t half = parts.size() / 2;
    PPoly g0 = {1}, h0 = {1};
    for (size_t i = 0; i < half; ++i) g0 = p_mul(g0, parts[i], p);
    for (size_t i = half; i < parts.size(); ++i) h0 = p_mul(h0, parts[i], p);
    HenselNode nd;
    nd.g0 = g0;
    nd.h0 = h0;
    p_bezout(g0, h0, p, nd.s, nd.t);
    KPoly g = k_from_p(g0), h = k_from_p(h0);
    Int pj(p);
    for (int j = 1; j < bigk; ++j) {
        Int pj1 = pj * p;
        hensel_step(k_reduce(fm, pj1), g, h, nd, p, pj, pj1);
        pj = pj1;
    }
    std::vector<PPoly> left(parts.begin(), parts.begin() + static_cast<long>(half));
    std::vector<PPoly> right(parts.begin() + static_cast<long>(half), parts.end());
    lift_list(g, left, p, bigk, pK, out);
    lift_list(h, right, p, bigk, pK, out);
}

Int symmetric_rep(const Int& a, const Int& pk) {
    Int r = a % pk;
    if (r < 0) r += pk;
    if (2 * r > pk) r -= pk;
    return r;
}

ZPoly z_primitive(ZPoly f) {
    Int g(0);
    for (const auto& x : f.c) g = gcd(g, x);
    if (g != 0) {
        for (auto& x : f.c) x /= g;
    }
    if (!f.c.empty() && f.c.back() < 0) {
        for (auto& x : f.c) x = -x;
    }
    return f;
}

// Factor a primitive squarefree integer polynomial of degree >= 1 into
// irreducible primitive integer polynomials (Zassenhaus).
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f0) {
    if (f0.deg() == 1) return {f0};
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                                  101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    long p = 0;
    PPoly fp;
    for (long cand : primes) {
        if (f0.lc() % cand == 0) continue;
        PPoly r = p_from_z(f0, cand);
        if (p_deg(r) != f0.deg()) continue;
        PPoly d = p_derivative(r, cand);
        PPoly g = p_gcd(r, d, cand);
        if (p_deg(g) == 0) {
            p = cand;
            fp = p_monic(r, cand);
            break;
        }
    }
    assert(p != 0 && "no usable small prime for a squarefree integer polynomial");
    std::vector<PPoly> modular = berlekamp(fp, p);
    std::sort(modular.begin(), modular.end());
    if (modular.size() == 1) return {f0};

    // coefficient bound: factors of f (and lc-scaled candidates) stay below
    // 2^n * |f|_2 * |lc|
    Int norm2(0);
    for (const auto& c : f0.c) norm2 += c * c;
    Int bound = sqrt(norm2) + 1;
    bound *= Int(1) << static_cast<unsigned>(f0.deg() + 1);
    bound *= abs(f0.lc());
    int bigk = 1;
    Int pK(p);
    while (pK <= 2 * bound) {
        pK *= p;
        ++bigk;
    }
    KPoly fm = k_reduce(k_from_p(fp), pK);
    {
        // recompute f0 monic mod pK (fp was mod p only)
        KPoly raw(f0.c.size());
        for (size_t i = 0; i < f0.c.size(); ++i) {
            raw[i] = f0.c[i] % pK;
            if (raw[i] < 0) raw[i] += pK;
        }
        Int lcinv;
        {
            // modular inverse of lc mod pK via extended euclid on Int
            Int a = f0.lc() % pK, b = pK, x0 = 1, x1 = 0;
            if (a < 0) a += pK;
            Int aa = a, bb = b;
            while (bb != 0) {
                Int q = aa / bb;
                Int tmp = aa - q * bb; aa = bb; bb = tmp;
                tmp = x0 - q * x1; x0 = x1; x1 = tmp;
            }
            lcinv = x0 % pK;
            if (lcinv < 0) lcinv += pK;
        }
        for (auto& x : raw) x = x * lcinv % pK;
        kstrip(raw);
        fm = raw;
    }
    std::vector<KPoly> lifted;
    lift_list(fm, modular, p, bigk, pK, lifted);

    // subset recombination: whenever no subset of size <= pool/2 yields a
    // true divisor, what remains of f0 is irreducible
    std::vector<ZPoly> result;
    ZPoly rest = f0;
    std::vector<KPoly> pool = lifted;
    size_t take = 1;
    while (2 * take <= pool.size()) {
        std::vector<size_t> idx(take);
        std::iota(idx.begin(), idx.end(), 0);
        bool found = false;
        while (true) {
            KPoly candk = {rest.lc() % pK};
            for (size_t i : idx) candk = k_mul(candk, pool[i], pK);
            ZPoly cand;
            cand.c.resize(candk.size());
            for (size_t i = 0; i < candk.size(); ++i) cand.c[i] = symmetric_rep(candk[i], pK);
            zstrip(cand.c);
            cand = z_primitive(cand);
            if (cand.deg() >= 1) {
                auto quot = z_divide_exact(rest, cand);
                if (quot) {
                    result.push_back(cand);
                    rest = z_primitive(*quot);
                    std::vector<KPoly> np;
                    for (size_t i = 0, k = 0; i < pool.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) { ++k; continue; }
                        np.push_back(pool[i]);
                    }
                    pool = np;
                    found = true;
                    break;  // restart at this subset size with the reduced pool
                }
            }
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 &&
                   idx[static_cast<size_t>(pos)] == pool.size() - take + static_cast<size_t>(pos)) {
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (size_t j = static_cast<size_t>(pos) + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++take;
    }
    if (rest.deg() >= 1) result.push_back(rest);
    return result;
}

}  // namespace

QFactorization factor(const QPoly& f) {
    QFactorization out;
    out.unit = f.is_zero() ? Rat(0) : f.lc();
    if (f.deg() <= 0) return out;
    QPoly work = qp_monic(f);

    // Yun squarefree decomposition: work = prod a_i^i with a_i squarefree
    std::vector<std::pair<QPoly, int>> squarefree;
    {
        QPoly fprime = qp_derivative(work);
        QPoly g = qp_gcd(work, fprime);
        QPoly w = qp_divmod(work, g).first;
        QPoly y = qp_divmod(fprime, g).first;
        int i = 1;
        while (w.deg() > 0) {
            QPoly z = qp_sub(y, qp_derivative(w));
            QPoly a = qp_gcd(w, z);
            if (a.deg() > 0) squarefree.emplace_back(a, i);
            w = qp_divmod(w, a).first;
            y = qp_divmod(z, a).first;
            ++i;
        }
    }
    for (auto& [sf, mult] : squarefree) {
        ZPoly z = z_from_q(sf);
        for (const auto& zf : factor_squarefree_z(z)) {
            out.factors.emplace_back(qp_monic(q_from_z(zf)), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
                  if (a.first.c != b.first.c) {
                      return std::lexicographical_compare(a.first.c.begin(), a.first.c.end(),
                                                          b.first.c.begin(), b.first.c.end());
                  }
                  return a.second < b.second;
              });
    return out;
}

bool is_irreducible(const QPoly& f) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

QPoly charpoly(const QMat& m) {
    assert(m.rows() == m.cols());
    const Eigen::Index n = m.rows();
    std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
    coeffs[static_cast<size_t>(n)] = 1;
    QMat ak = QMat::Zero(n, n);
    Rat ck(1);
    for (Eigen::Index k = 1; k <= n; ++k) {
        ak = m * (ak + ck * QMat::Identity(n, n));
        ck = -ak.trace() / Rat(static_cast<long>(k));
        coeffs[static_cast<size_t>(n - k)] = ck;
    }
    return QPoly(std::move(coeffs));
}

QPoly minpoly(const QMat& m) {
    assert(m.rows() == m.cols());
    const Eigen::Index n = m.rows();
    if (n == 0) return QPoly({Rat(1)});
    QMat power = QMat::Identity(n, n);
    QMat stack(n * n, 1);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) stack(i * n + j, 0) = power(i, j);
    for (int d = 1; d <= n; ++d) {
        power = power * m;
        QVec v(n * n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = power(i, j);
        auto sol = solve(stack, v);
        if (sol) {
            std::vector<Rat> c(static_cast<size_t>(d) + 1);
            for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = -(*sol)(i);
            c[static_cast<size_t>(d)] = 1;
            return QPoly(std::move(c));
        }
        stack = hstack(stack, QMat(v));
    }
    assert(false && "minimal polynomial must divide the characteristic polynomial");
    return charpoly(m);
}

QMat qp_eval_matrix(const QPoly& f, const QMat& m) {
    const Eigen::Index n = m.rows();
    QMat r = QMat::Zero(n, n);
    for (int i = f.deg(); i >= 0; --i) {
        r = r * m;
        r += f.coeff(i) * QMat::Identity(n, n);
    }
    return r;
}

}  // namespace taufan
