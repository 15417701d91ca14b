#include "meadowlab/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace meadowlab {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace polyp {

std::vector<int> trim(std::vector<int> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long>(a[i]) * b[j]) % p);
    return trim(std::move(r));
}

std::vector<int> mod(std::vector<int> a, const std::vector<int>& m, int p) {
    // m must be monic
    a = trim(std::move(a));
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        const int lead = a[da];
        if (lead != 0) {
            for (int i = 0; i <= dm; ++i) {
                int& c = a[da - dm + i];
                c = static_cast<int>(((c - static_cast<long>(lead) * m[i]) % p + p) % p);
            }
        }
        a.pop_back();
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

// Exhaustive factor search: f (monic) is irreducible iff no monic divisor of
// degree 1..deg(f)/2 divides it. Desk-scale fields only.
bool is_irreducible(const std::vector<int>& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    for (int d = 1; d <= n / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long k = 0; k < count; ++k) {
            std::vector<int> g(d + 1, 0);
            long kk = k;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(kk % p);
                kk /= p;
            }
            g[d] = 1;
            if (mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace polyp

FieldRef make_field(int p, int n) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "field characteristic must be prime, got " + std::to_string(p));
    if (n < 1) throw Error(ErrorCode::BadDegree, "extension degree must be >= 1, got " + std::to_string(n));

    static std::map<std::pair<int, int>, FieldRef> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find({p, n});
    if (it != registry.end()) return it->second;

    // Lexicographically smallest monic irreducible of degree n, comparing the
    // coefficient tuple (c_0, ..., c_{n-1}) low-degree-first.
    long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    std::vector<int> modulus;
    for (long k = 0; k < total; ++k) {
        std::vector<int> f(n + 1, 0);
        long kk = k;
        for (int i = n - 1; i >= 0; --i) {
            f[i] = static_cast<int>(kk % p);
            kk /= p;
        }
        f[n] = 1;
        if (polyp::is_irreducible(f, p)) {
            modulus = std::move(f);
            break;
        }
    }
    if (modulus.empty()) throw Error(ErrorCode::Internal, "no irreducible polynomial found");

    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->n = n;
    spec->modulus = std::move(modulus);
    spec->size = total;
    registry[{p, n}] = spec;
    return spec;
}

bool FFElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

long index_of(const FFElement& a) {
    long idx = 0;
    for (int c : a.coeffs) idx = idx * a.spec->p + c;
    return idx;
}

FFElement element_at(const FieldRef& f, long idx) {
    std::vector<int> coeffs(f->n, 0);
    for (int i = f->n - 1; i >= 0; --i) {
        coeffs[i] = static_cast<int>(idx % f->p);
        idx /= f->p;
    }
    return {f, std::move(coeffs)};
}

FFElement ff_zero(const FieldRef& f) { return {f, std::vector<int>(f->n, 0)}; }

FFElement ff_one(const FieldRef& f) {
    std::vector<int> c(f->n, 0);
    c[0] = 1;
    return {f, std::move(c)};
}

FFElement ff_scalar(const FieldRef& f, long k) {
    std::vector<int> c(f->n, 0);
    c[0] = static_cast<int>(((k % f->p) + f->p) % f->p);
    return {f, std::move(c)};
}

static void check_same_spec(const FFElement& a, const FFElement& b) {
    if (!(*a.spec == *b.spec))
        throw Error(ErrorCode::SpecMismatch, "operands live in different fields");
}

FFElement ff_add(const FFElement& a, const FFElement& b) {
    check_same_spec(a, b);
    FFElement r = a;
    for (int i = 0; i < a.spec->n; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % a.spec->p;
    return r;
}

FFElement ff_neg(const FFElement& a) {
    FFElement r = a;
    for (int i = 0; i < a.spec->n; ++i) r.coeffs[i] = (a.spec->p - a.coeffs[i]) % a.spec->p;
    return r;
}

FFElement ff_sub(const FFElement& a, const FFElement& b) { return ff_add(a, ff_neg(b)); }

FFElement ff_mul(const FFElement& a, const FFElement& b) {
    check_same_spec(a, b);
    auto prod = polyp::mul(polyp::trim(a.coeffs), polyp::trim(b.coeffs), a.spec->p);
    auto red = polyp::mod(std::move(prod), a.spec->modulus, a.spec->p);
    red.resize(a.spec->n, 0);
    return {a.spec, std::move(red)};
}

FFElement ff_pow(const FFElement& a, long e) {
    FFElement r = ff_one(a.spec);
    FFElement base = a;
    while (e > 0) {
        if (e & 1) r = ff_mul(r, base);
        base = ff_mul(base, base);
        e >>= 1;
    }
    return r;
}

FFElement ff_weak_inverse(const FFElement& a) {
    if (a.is_zero()) return a;
    return ff_pow(a, a.spec->size - 2);
}

FFElement ff_frobenius(const FFElement& a) { return ff_pow(a, a.spec->p); }

FFElement ff_weak_root(int q, const FFElement& a) {
    if (!is_prime(q)) throw Error(ErrorCode::NotPrime, "root index must be prime, got " + std::to_string(q));
    if (q != a.spec->p) return ff_zero(a.spec);
    long e = 1;
    for (int i = 0; i < a.spec->n - 1; ++i) e *= a.spec->p;
    return ff_pow(a, e);
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw Error(ErrorCode::Internal, "zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational rat_add(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational rat_sub(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational rat_mul(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}
Rational rat_neg(const Rational& a) { return Rational(-a.num, a.den); }
Rational rat_weak_inverse(const Rational& a) {
    if (a.num == 0) return a;
    return Rational(a.den, a.num);
}

bool Polynomial::operator==(const Polynomial& o) const {
    return *base == *o.base && coeffs == o.coeffs;
}

static Polynomial poly_trim(Polynomial f) {
    while (!f.coeffs.empty() && f.coeffs.back().is_zero()) f.coeffs.pop_back();
    return f;
}

static Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {a.base, {}};
    std::vector<FFElement> r(a.coeffs.size() + b.coeffs.size() - 1, ff_zero(a.base));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            r[i + j] = ff_add(r[i + j], ff_mul(a.coeffs[i], b.coeffs[j]));
    return poly_trim({a.base, std::move(r)});
}

static Polynomial poly_mod(Polynomial a, const Polynomial& m) {
    a = poly_trim(std::move(a));
    const int dm = m.degree();
    const FFElement lead_inv = ff_weak_inverse(m.coeffs.back());
    while (a.degree() >= dm && !a.coeffs.empty()) {
        const int da = a.degree();
        FFElement q = ff_mul(a.coeffs.back(), lead_inv);
        for (int i = 0; i <= dm; ++i)
            a.coeffs[da - dm + i] = ff_sub(a.coeffs[da - dm + i], ff_mul(q, m.coeffs[i]));
        a = poly_trim(std::move(a));
    }
    return a;
}

bool poly_is_irreducible(const Polynomial& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const long q = f.base->size;
    for (int d = 1; d <= n / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (long k = 0; k < count; ++k) {
            Polynomial g{f.base, {}};
            g.coeffs.reserve(d + 1);
            long kk = k;
            for (int i = 0; i < d; ++i) {
                g.coeffs.push_back(element_at(f.base, kk % q));
                kk /= q;
            }
            g.coeffs.push_back(ff_one(f.base));
            if (poly_mod(f, g).coeffs.empty()) return false;
        }
    }
    return true;
}

FFElement FieldEmbedding::apply(const FFElement& a) const {
    if (!(*a.spec == *src)) throw Error(ErrorCode::SpecMismatch, "element not in embedding source");
    FFElement r = ff_zero(dst);
    FFElement xp = ff_one(dst);
    for (int i = 0; i < src->n; ++i) {
        r = ff_add(r, ff_mul(ff_scalar(dst, a.coeffs[i]), xp));
        xp = ff_mul(xp, image);
    }
    return r;
}

bool FieldEmbedding::operator==(const FieldEmbedding& o) const {
    return *src == *o.src && *dst == *o.dst && image == o.image;
}

std::vector<FieldEmbedding> enumerate_embeddings(const FieldRef& src, const FieldRef& dst) {
    if (src->p != dst->p)
        throw Error(ErrorCode::CharMismatch, "no homomorphisms between fields of different characteristic");
    std::vector<FieldEmbedding> out;
    for (long i = 0; i < dst->size; ++i) {
        FFElement cand = element_at(dst, i);
        // is cand a root of src->modulus in dst?
        FFElement acc = ff_zero(dst);
        FFElement xp = ff_one(dst);
        for (int k = 0; k <= src->n; ++k) {
            acc = ff_add(acc, ff_mul(ff_scalar(dst, src->modulus[k]), xp));
            xp = ff_mul(xp, cand);
        }
        if (acc.is_zero()) out.push_back({src, dst, cand});
    }
    return out;
}

FieldEmbedding compose(const FieldEmbedding& first, const FieldEmbedding& then) {
    if (!(*first.dst == *then.src)) throw Error(ErrorCode::SpecMismatch, "embeddings not composable");
    return {first.src, then.dst, then.apply(first.image)};
}

Polynomial minimal_polynomial(const FFElement& a, int d) {
    const FieldRef& big = a.spec;
    if (d < 1 || big->n % d != 0)
        throw Error(ErrorCode::BadSubfield, "subfield degree must divide the extension degree");
    FieldRef sub = make_field(big->p, d);

    // Frobenius^d orbit of a.
    long qd = 1;
    for (int i = 0; i < d; ++i) qd *= big->p;
    std::vector<FFElement> orbit{a};
    FFElement cur = ff_pow(a, qd);
    while (!(cur == a)) {
        orbit.push_back(cur);
        cur = ff_pow(cur, qd);
    }

    // mu = prod (x - c) over the orbit, with coefficients in the big field.
    std::vector<FFElement> mu{ff_one(big)};
    for (const FFElement& c : orbit) {
        std::vector<FFElement> next(mu.size() + 1, ff_zero(big));
        for (size_t i = 0; i < mu.size(); ++i) {
            next[i + 1] = ff_add(next[i + 1], mu[i]);
            next[i] = ff_sub(next[i], ff_mul(c, mu[i]));
        }
        mu = std::move(next);
    }

    // Coefficients are Frobenius^d-fixed, so they lie in the image of the
    // first embedding GF(p^d) -> GF(p^n); pull them back.
    auto embs = enumerate_embeddings(sub, big);
    if (embs.empty()) throw Error(ErrorCode::Internal, "subfield embedding must exist");
    const FieldEmbedding& e = embs.front();
    Polynomial out{sub, {}};
    out.coeffs.reserve(mu.size());
    for (const FFElement& c : mu) {
        bool found = false;
        for (long i = 0; i < sub->size; ++i) {
            FFElement s = element_at(sub, i);
            if (e.apply(s) == c) {
                out.coeffs.push_back(s);
                found = true;
                break;
            }
        }
        if (!found) throw Error(ErrorCode::Internal, "minimal polynomial coefficient outside subfield");
    }
    return out;
}

} // namespace meadowlab
