#include "meadowlab/algebra.hpp"

#include <algorithm>
#include <deque>

namespace meadowlab {

bool elem_eq(const Elem& a, const Elem& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return x == std::get<T>(b);
        },
        a);
}

std::string elem_str(const Elem& e) {
    if (std::holds_alternative<FFElement>(e)) {
        const auto& f = std::get<FFElement>(e);
        std::string s = "[";
        for (size_t i = 0; i < f.coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(f.coeffs[i]);
        return s + "]";
    }
    if (std::holds_alternative<Rational>(e)) {
        const auto& r = std::get<Rational>(e);
        return std::to_string(r.num) + "/" + std::to_string(r.den);
    }
    if (std::holds_alternative<Tuple>(e)) {
        const auto& t = std::get<Tuple>(e);
        std::string s = "(";
        for (size_t i = 0; i < t.comps.size(); ++i) s += (i ? "," : "") + elem_str(Elem{t.comps[i]});
        return s + ")";
    }
    return std::to_string(std::get<TableIdx>(e).i);
}

long Tables::numeral(long k) const {
    bool negate = k < 0;
    if (negate) k = -k;
    long acc = zero;
    for (long i = 0; i < k; ++i) acc = add_i(acc, one);
    return negate ? neg[acc] : acc;
}

int Algebra::characteristic() const {
    if (size() == 0) return 0;
    Elem z = zero();
    Elem acc = one();
    int k = 1;
    while (!elem_eq(acc, z)) {
        acc = add(acc, one());
        ++k;
        if (k > size() + 1) throw Error(ErrorCode::Internal, "additive order of 1 exceeds carrier size");
    }
    return k;
}

const Tables& Algebra::tables() const {
    std::lock_guard<std::mutex> lock(tables_mtx_);
    if (tables_) return *tables_;
    const long n = size();
    if (n == 0) throw Error(ErrorCode::InfiniteCarrier, "operation tables require a finite carrier");
    auto t = std::make_unique<Tables>();
    t->n = n;
    std::vector<Elem> elems;
    elems.reserve(n);
    for (long i = 0; i < n; ++i) elems.push_back(element(i));
    t->zero = index_of_elem(zero());
    t->one = index_of_elem(one());
    t->add.resize(n * n);
    t->mul.resize(n * n);
    t->neg.resize(n);
    t->star.resize(n);
    for (long i = 0; i < n; ++i) {
        t->neg[i] = index_of_elem(neg(elems[i]));
        t->star[i] = index_of_elem(star(elems[i]));
        for (long j = 0; j < n; ++j) {
            t->add[i * n + j] = index_of_elem(add(elems[i], elems[j]));
            t->mul[i * n + j] = index_of_elem(mul(elems[i], elems[j]));
        }
    }
    for (int p : primes_) {
        std::vector<long> rt(n);
        for (long i = 0; i < n; ++i) rt[i] = index_of_elem(root(p, elems[i]));
        t->root[p] = std::move(rt);
    }
    tables_ = std::move(t);
    return *tables_;
}

// ---------------------------------------------------------------------------
// IcfFieldAlg

IcfFieldAlg::IcfFieldAlg(FieldRef f, std::set<int> primes) : field_(std::move(f)) {
    if (primes.empty()) primes.insert(field_->p);
    for (int p : primes)
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "signature prime " + std::to_string(p) + " is not prime");
    if (!primes.count(field_->p))
        throw Error(ErrorCode::MissingPrime, "signature primes must contain the characteristic");
    primes_ = std::move(primes);
}

static const FFElement& as_ff(const Elem& e) {
    if (!std::holds_alternative<FFElement>(e)) throw Error(ErrorCode::SpecMismatch, "expected a field element");
    return std::get<FFElement>(e);
}

long IcfFieldAlg::index_of_elem(const Elem& e) const {
    const FFElement& a = as_ff(e);
    if (!(*a.spec == *field_)) throw Error(ErrorCode::SpecMismatch, "element of a different field");
    return index_of(a);
}
Elem IcfFieldAlg::add(const Elem& a, const Elem& b) const { return ff_add(as_ff(a), as_ff(b)); }
Elem IcfFieldAlg::mul(const Elem& a, const Elem& b) const { return ff_mul(as_ff(a), as_ff(b)); }
Elem IcfFieldAlg::neg(const Elem& a) const { return ff_neg(as_ff(a)); }
Elem IcfFieldAlg::star(const Elem& a) const { return ff_weak_inverse(as_ff(a)); }
Elem IcfFieldAlg::root(int p, const Elem& a) const {
    if (!primes_.count(p)) return zero();
    return ff_weak_root(p, as_ff(a));
}

// ---------------------------------------------------------------------------
// ProductAlg

ProductAlg::ProductAlg(std::vector<FieldRef> comps, std::set<int> primes) : comps_(std::move(comps)) {
    for (int p : primes)
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "signature prime " + std::to_string(p) + " is not prime");
    for (const auto& c : comps_)
        if (!primes.count(c->p))
            throw Error(ErrorCode::MissingPrime,
                        "signature primes must contain characteristic " + std::to_string(c->p));
    primes_ = std::move(primes);
    size_ = 1;
    for (const auto& c : comps_) size_ *= c->size;
}

static const Tuple& as_tup(const Elem& e) {
    if (!std::holds_alternative<Tuple>(e)) throw Error(ErrorCode::SpecMismatch, "expected a product tuple");
    return std::get<Tuple>(e);
}

Elem ProductAlg::element(long idx) const {
    Tuple t;
    t.comps.resize(comps_.size(), FFElement{});
    for (int i = static_cast<int>(comps_.size()) - 1; i >= 0; --i) {
        t.comps[i] = element_at(comps_[i], idx % comps_[i]->size);
        idx /= comps_[i]->size;
    }
    return t;
}

long ProductAlg::index_of_elem(const Elem& e) const {
    const Tuple& t = as_tup(e);
    if (t.comps.size() != comps_.size()) throw Error(ErrorCode::SpecMismatch, "tuple arity mismatch");
    long idx = 0;
    for (size_t i = 0; i < comps_.size(); ++i) idx = idx * comps_[i]->size + index_of(t.comps[i]);
    return idx;
}

Elem ProductAlg::add(const Elem& a, const Elem& b) const {
    const Tuple &x = as_tup(a), &y = as_tup(b);
    Tuple r;
    r.comps.reserve(comps_.size());
    for (size_t i = 0; i < comps_.size(); ++i) r.comps.push_back(ff_add(x.comps[i], y.comps[i]));
    return r;
}
Elem ProductAlg::mul(const Elem& a, const Elem& b) const {
    const Tuple &x = as_tup(a), &y = as_tup(b);
    Tuple r;
    r.comps.reserve(comps_.size());
    for (size_t i = 0; i < comps_.size(); ++i) r.comps.push_back(ff_mul(x.comps[i], y.comps[i]));
    return r;
}
Elem ProductAlg::neg(const Elem& a) const {
    Tuple r;
    for (const auto& c : as_tup(a).comps) r.comps.push_back(ff_neg(c));
    return r;
}
Elem ProductAlg::star(const Elem& a) const {
    Tuple r;
    for (const auto& c : as_tup(a).comps) r.comps.push_back(ff_weak_inverse(c));
    return r;
}
Elem ProductAlg::root(int p, const Elem& a) const {
    if (!primes_.count(p)) return zero();
    Tuple r;
    for (const auto& c : as_tup(a).comps) r.comps.push_back(ff_weak_root(p, c));
    return r;
}
Elem ProductAlg::zero() const {
    Tuple r;
    for (const auto& f : comps_) r.comps.push_back(ff_zero(f));
    return r;
}
Elem ProductAlg::one() const {
    Tuple r;
    for (const auto& f : comps_) r.comps.push_back(ff_one(f));
    return r;
}

// ---------------------------------------------------------------------------
// SubalgebraAlg

SubalgebraAlg::SubalgebraAlg(AlgebraPtr ambient, std::vector<long> carrier, std::vector<long> generators,
                             std::map<long, TermPtr> witnesses)
    : ambient_(std::move(ambient)), carrier_(std::move(carrier)), generators_(std::move(generators)),
      witnesses_(std::move(witnesses)) {
    primes_ = ambient_->signature_primes();
}

long SubalgebraAlg::index_of_elem(const Elem& e) const {
    long ai = ambient_->index_of_elem(e);
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), ai);
    if (it == carrier_.end() || *it != ai)
        throw Error(ErrorCode::SpecMismatch, "element outside the subalgebra carrier");
    return static_cast<long>(it - carrier_.begin());
}

bool SubalgebraAlg::contains(long ambient_idx) const {
    return std::binary_search(carrier_.begin(), carrier_.end(), ambient_idx);
}

const TermPtr& SubalgebraAlg::witness(long ambient_idx) const {
    auto it = witnesses_.find(ambient_idx);
    if (it == witnesses_.end()) throw Error(ErrorCode::Internal, "no witness recorded for element");
    return it->second;
}

// ---------------------------------------------------------------------------
// TableRingAlg

TableRingAlg::TableRingAlg(long n, std::vector<long> add, std::vector<long> mul, std::vector<long> neg, long zero,
                           long one, std::optional<std::vector<long>> star, std::map<int, std::vector<long>> roots)
    : n_(n), add_(std::move(add)), mul_(std::move(mul)), neg_(std::move(neg)), zero_(zero), one_(one),
      star_(std::move(star)), roots_(std::move(roots)) {
    auto check_unary = [&](const std::vector<long>& t, const char* what) {
        if (static_cast<long>(t.size()) != n_) throw Error(ErrorCode::BadTable, std::string(what) + " table size mismatch");
        for (long v : t)
            if (v < 0 || v >= n_) throw Error(ErrorCode::BadTable, std::string(what) + " table entry out of range");
    };
    auto check_binary = [&](const std::vector<long>& t, const char* what) {
        if (static_cast<long>(t.size()) != n_ * n_)
            throw Error(ErrorCode::BadTable, std::string(what) + " table size mismatch");
        for (long v : t)
            if (v < 0 || v >= n_) throw Error(ErrorCode::BadTable, std::string(what) + " table entry out of range");
    };
    if (n_ < 1) throw Error(ErrorCode::BadTable, "carrier must be nonempty");
    check_binary(add_, "add");
    check_binary(mul_, "mul");
    check_unary(neg_, "neg");
    if (zero_ < 0 || zero_ >= n_ || one_ < 0 || one_ >= n_)
        throw Error(ErrorCode::BadTable, "constant out of range");
    if (star_) check_unary(*star_, "star");
    for (auto& [p, t] : roots_) {
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "root table index must be prime");
        check_unary(t, "root");
        primes_.insert(p);
    }
}

static long as_ti(const Elem& e, long n) {
    if (!std::holds_alternative<TableIdx>(e)) throw Error(ErrorCode::SpecMismatch, "expected a table-ring element");
    long i = std::get<TableIdx>(e).i;
    if (i < 0 || i >= n) throw Error(ErrorCode::SpecMismatch, "table-ring index out of range");
    return i;
}

long TableRingAlg::index_of_elem(const Elem& e) const { return as_ti(e, n_); }
Elem TableRingAlg::add(const Elem& a, const Elem& b) const { return TableIdx{add_[as_ti(a, n_) * n_ + as_ti(b, n_)]}; }
Elem TableRingAlg::mul(const Elem& a, const Elem& b) const { return TableIdx{mul_[as_ti(a, n_) * n_ + as_ti(b, n_)]}; }
Elem TableRingAlg::neg(const Elem& a) const { return TableIdx{neg_[as_ti(a, n_)]}; }
Elem TableRingAlg::star(const Elem& a) const {
    if (!star_) return TableIdx{zero_};
    return TableIdx{(*star_)[as_ti(a, n_)]};
}
Elem TableRingAlg::root(int p, const Elem& a) const {
    auto it = roots_.find(p);
    if (it == roots_.end()) return TableIdx{zero_};
    return TableIdx{it->second[as_ti(a, n_)]};
}

// ---------------------------------------------------------------------------
// RationalsAlg

static const Rational& as_rat(const Elem& e) {
    if (!std::holds_alternative<Rational>(e)) throw Error(ErrorCode::SpecMismatch, "expected a rational");
    return std::get<Rational>(e);
}

Elem RationalsAlg::add(const Elem& a, const Elem& b) const { return rat_add(as_rat(a), as_rat(b)); }
Elem RationalsAlg::mul(const Elem& a, const Elem& b) const { return rat_mul(as_rat(a), as_rat(b)); }
Elem RationalsAlg::neg(const Elem& a) const { return rat_neg(as_rat(a)); }
Elem RationalsAlg::star(const Elem& a) const { return rat_weak_inverse(as_rat(a)); }
Elem RationalsAlg::root(int p, const Elem& a) const {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "root index must be prime");
    (void)a;
    return Rational(0, 1); // characteristic 0: every r_p is the zero map
}

// ---------------------------------------------------------------------------
// Factories

AlgebraPtr make_icf_field(const FieldRef& f, std::set<int> primes) {
    return std::make_shared<IcfFieldAlg>(f, std::move(primes));
}

AlgebraPtr make_icf_field(int p, int n) { return make_icf_field(make_field(p, n)); }

AlgebraPtr make_product(std::vector<FieldRef> comps, std::set<int> primes) {
    return std::make_shared<ProductAlg>(std::move(comps), std::move(primes));
}

AlgebraPtr make_rationals() { return std::make_shared<RationalsAlg>(); }

AlgebraPtr make_table_ring(long n, std::vector<long> add, std::vector<long> mul, std::vector<long> neg, long zero,
                           long one, std::optional<std::vector<long>> star, std::map<int, std::vector<long>> roots) {
    return std::make_shared<TableRingAlg>(n, std::move(add), std::move(mul), std::move(neg), zero, one,
                                          std::move(star), std::move(roots));
}

AlgebraPtr make_zn_ring(long n, std::optional<std::vector<long>> star, std::map<int, std::vector<long>> roots) {
    if (n < 1) throw Error(ErrorCode::BadTable, "Z/n requires n >= 1");
    std::vector<long> add(n * n), mul(n * n), neg(n);
    for (long i = 0; i < n; ++i) {
        neg[i] = (n - i) % n;
        for (long j = 0; j < n; ++j) {
            add[i * n + j] = (i + j) % n;
            mul[i * n + j] = (i * j) % n;
        }
    }
    return make_table_ring(n, std::move(add), std::move(mul), std::move(neg), 0, 1 % n, std::move(star),
                           std::move(roots));
}

AlgebraPtr as_table_ring(const Algebra& a) {
    const Tables& t = a.tables();
    std::map<int, std::vector<long>> roots;
    for (const auto& [p, rt] : t.root) roots[p] = rt;
    return make_table_ring(t.n, t.add, t.mul, t.neg, t.zero, t.one, t.star, std::move(roots));
}

std::optional<std::vector<long>> zn_canonical_star(long n) {
    std::vector<long> star(n);
    for (long a = 0; a < n; ++a) {
        long found = -1;
        for (long b = 0; b < n; ++b) {
            if ((a * a % n) * b % n == a && (b * b % n) * a % n == b) {
                if (found >= 0) return std::nullopt;
                found = b;
            }
        }
        if (found < 0) return std::nullopt;
        star[a] = found;
    }
    return star;
}

std::optional<std::vector<long>> zn_canonical_root(long n, int p) {
    auto star = zn_canonical_star(n);
    if (!star) return std::nullopt;
    long ps = (*star)[p % n];
    long coef = ((1 - ps * p) % n + n) % n;
    std::vector<long> rt(n);
    for (long a = 0; a < n; ++a) {
        long rhs = coef * a % n;
        long found = -1;
        for (long b = 0; b < n; ++b) {
            long bp = 1;
            for (int k = 0; k < p; ++k) bp = bp * b % n;
            if (bp == rhs) {
                if (found >= 0) return std::nullopt;
                found = b;
            }
        }
        if (found < 0) return std::nullopt;
        rt[a] = found;
    }
    return rt;
}

// ---------------------------------------------------------------------------
// Component views

std::vector<FieldRef> components_copy(const AlgebraPtr& a) {
    switch (a->kind()) {
    case Algebra::Kind::IcfField: return {static_cast<const IcfFieldAlg&>(*a).field()};
    case Algebra::Kind::Product: return static_cast<const ProductAlg&>(*a).comps();
    case Algebra::Kind::Subalgebra: return components_copy(static_cast<const SubalgebraAlg&>(*a).ambient());
    default: throw Error(ErrorCode::NotProduct, "handle is not a product of fields");
    }
}

std::vector<FFElement> as_component_vector(const Algebra& a, const Elem& e) {
    switch (a.kind()) {
    case Algebra::Kind::IcfField: return {std::get<FFElement>(e)};
    case Algebra::Kind::Product: return std::get<Tuple>(e).comps;
    case Algebra::Kind::Subalgebra:
        return as_component_vector(*static_cast<const SubalgebraAlg&>(a).ambient(), e);
    default: throw Error(ErrorCode::NotProduct, "handle is not a product of fields");
    }
}

Elem from_component_vector(const Algebra& a, const std::vector<FFElement>& v) {
    switch (a.kind()) {
    case Algebra::Kind::IcfField:
        if (v.size() != 1) throw Error(ErrorCode::SpecMismatch, "expected one component");
        return v[0];
    case Algebra::Kind::Product: return Tuple{v};
    default: throw Error(ErrorCode::NotProduct, "handle is not a product of fields");
    }
}

// ---------------------------------------------------------------------------
// Prime ideals, quotients

std::vector<PrimeIdeal> prime_ideals(const AlgebraPtr& b) {
    if (b->kind() != Algebra::Kind::IcfField && b->kind() != Algebra::Kind::Product)
        throw Error(ErrorCode::NotProduct, "prime ideals are available for explicit products of fields only");
    std::vector<PrimeIdeal> out;
    const auto comps = components_copy(b);
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) out.push_back({b, i});
    return out;
}

FFElement Quotient::apply(const Algebra& b, const Elem& e) const {
    return as_component_vector(b, e)[component];
}

Quotient quotient(const AlgebraPtr& b, const PrimeIdeal& ideal) {
    if (ideal.of.get() != b.get()) throw Error(ErrorCode::SpecMismatch, "ideal belongs to a different algebra");
    const auto comps = components_copy(b);
    if (ideal.component < 0 || ideal.component >= static_cast<int>(comps.size()))
        throw Error(ErrorCode::SpecMismatch, "ideal component out of range");
    return {comps[ideal.component], ideal.component};
}

// ---------------------------------------------------------------------------
// Subalgebra generation

std::shared_ptr<const SubalgebraAlg> sg_closure(const AlgebraPtr& ambient, const std::vector<Elem>& gens, long cap) {
    const long n = ambient->size();
    if (n == 0) throw Error(ErrorCode::InfiniteCarrier, "subalgebra generation requires a finite ambient");
    if (n > cap)
        throw Error(ErrorCode::CapExceeded,
                    "ambient carrier " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const Tables& t = ambient->tables();

    std::map<long, TermPtr> wit;
    std::deque<long> work;
    auto push = [&](long idx, TermPtr w) {
        if (wit.count(idx)) return;
        wit[idx] = std::move(w);
        work.push_back(idx);
    };
    push(t.zero, t_zero());
    push(t.one, t_one());
    for (size_t k = 0; k < gens.size(); ++k)
        push(ambient->index_of_elem(gens[k]), t_var("g" + std::to_string(k + 1)));

    std::vector<long> done;
    while (!work.empty()) {
        long a = work.front();
        work.pop_front();
        const TermPtr& wa = wit[a];
        push(t.neg[a], t_neg(wa));
        push(t.star[a], t_star(wa));
        for (int p : ambient->signature_primes()) push(t.root_i(p, a), t_root(p, wa));
        for (long b : done) {
            push(t.add_i(a, b), t_add(wa, wit[b]));
            push(t.mul_i(a, b), t_mul(wa, wit[b]));
            push(t.add_i(b, a), t_add(wit[b], wa));
            push(t.mul_i(b, a), t_mul(wit[b], wa));
        }
        push(t.add_i(a, a), t_add(wa, wa));
        push(t.mul_i(a, a), t_mul(wa, wa));
        done.push_back(a);
    }

    std::vector<long> carrier;
    carrier.reserve(wit.size());
    for (const auto& [idx, w] : wit) carrier.push_back(idx);
    std::sort(carrier.begin(), carrier.end());
    std::vector<long> gidx;
    for (const auto& g : gens) gidx.push_back(ambient->index_of_elem(g));
    return std::make_shared<SubalgebraAlg>(ambient, std::move(carrier), std::move(gidx), std::move(wit));
}

} // namespace meadowlab
