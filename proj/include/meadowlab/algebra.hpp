#ifndef MEADOWLAB_ALGEBRA_HPP
#define MEADOWLAB_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "meadowlab/gf.hpp"
#include "meadowlab/term.hpp"

namespace meadowlab {

/// A tuple in a finite product of fields. The empty tuple is the single
/// element of the trivial ring.
struct Tuple {
    std::vector<FFElement> comps;
    bool operator==(const Tuple& o) const { return comps == o.comps; }
};

/// An element of a table-presented ring, by carrier index.
struct TableIdx {
    long i = 0;
    bool operator==(const TableIdx& o) const { return i == o.i; }
};

using Elem = std::variant<FFElement, Rational, Tuple, TableIdx>;

bool elem_eq(const Elem& a, const Elem& b);
std::string elem_str(const Elem& e);

/// Flattened operation tables of a finite algebra, for exhaustive loops.
/// Operations act on element indices; r_p for p outside the table is the
/// constant-zero map.
struct Tables {
    long n = 0;
    long zero = 0, one = 0;
    std::vector<long> add, mul; // n*n, row-major
    std::vector<long> neg, star;
    std::map<int, std::vector<long>> root;

    long add_i(long a, long b) const { return add[a * n + b]; }
    long mul_i(long a, long b) const { return mul[a * n + b]; }
    long root_i(int p, long a) const {
        auto it = root.find(p);
        return it == root.end() ? zero : it->second[a];
    }
    long numeral(long k) const;
};

/// An algebra over the ICM signature {+, *, -, 0, 1, star, r_p (p in P)}.
/// All handles are immutable after construction and every operation is pure.
class Algebra {
public:
    enum class Kind { IcfField, Product, Subalgebra, TableRing, Rationals };

    virtual ~Algebra() = default;
    virtual Kind kind() const = 0;
    virtual long size() const = 0; // 0 means infinite
    virtual Elem element(long idx) const = 0;
    virtual long index_of_elem(const Elem& e) const = 0;

    virtual Elem add(const Elem& a, const Elem& b) const = 0;
    virtual Elem mul(const Elem& a, const Elem& b) const = 0;
    virtual Elem neg(const Elem& a) const = 0;
    virtual Elem star(const Elem& a) const = 0;
    virtual Elem root(int p, const Elem& a) const = 0;
    virtual Elem zero() const = 0;
    virtual Elem one() const = 0;

    /// Additive order of 1, or 0 when infinite.
    int characteristic() const;

    const std::set<int>& signature_primes() const { return primes_; }

    /// Lazily built operation tables; throws InfiniteCarrier for rationals.
    const Tables& tables() const;

protected:
    std::set<int> primes_;

private:
    mutable std::unique_ptr<Tables> tables_;
    mutable std::mutex tables_mtx_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

class IcfFieldAlg : public Algebra {
public:
    explicit IcfFieldAlg(FieldRef f, std::set<int> primes = {});

    Kind kind() const override { return Kind::IcfField; }
    long size() const override { return field_->size; }
    Elem element(long idx) const override { return element_at(field_, idx); }
    long index_of_elem(const Elem& e) const override;
    Elem add(const Elem& a, const Elem& b) const override;
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem neg(const Elem& a) const override;
    Elem star(const Elem& a) const override;
    Elem root(int p, const Elem& a) const override;
    Elem zero() const override { return ff_zero(field_); }
    Elem one() const override { return ff_one(field_); }

    const FieldRef& field() const { return field_; }

private:
    FieldRef field_;
};

class ProductAlg : public Algebra {
public:
    ProductAlg(std::vector<FieldRef> comps, std::set<int> primes);

    Kind kind() const override { return Kind::Product; }
    long size() const override { return size_; }
    Elem element(long idx) const override;
    long index_of_elem(const Elem& e) const override;
    Elem add(const Elem& a, const Elem& b) const override;
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem neg(const Elem& a) const override;
    Elem star(const Elem& a) const override;
    Elem root(int p, const Elem& a) const override;
    Elem zero() const override;
    Elem one() const override;

    const std::vector<FieldRef>& comps() const { return comps_; }

private:
    std::vector<FieldRef> comps_;
    long size_;
};

class SubalgebraAlg : public Algebra {
public:
    /// Constructed by sg_closure; carrier is a sorted list of ambient indices
    /// and every carrier element records one witnessing term over the
    /// generators (named g1, g2, ...).
    SubalgebraAlg(AlgebraPtr ambient, std::vector<long> carrier, std::vector<long> generators,
                  std::map<long, TermPtr> witnesses);

    Kind kind() const override { return Kind::Subalgebra; }
    long size() const override { return static_cast<long>(carrier_.size()); }
    Elem element(long idx) const override { return ambient_->element(carrier_[idx]); }
    long index_of_elem(const Elem& e) const override;
    Elem add(const Elem& a, const Elem& b) const override { return ambient_->add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const override { return ambient_->mul(a, b); }
    Elem neg(const Elem& a) const override { return ambient_->neg(a); }
    Elem star(const Elem& a) const override { return ambient_->star(a); }
    Elem root(int p, const Elem& a) const override { return ambient_->root(p, a); }
    Elem zero() const override { return ambient_->zero(); }
    Elem one() const override { return ambient_->one(); }

    const AlgebraPtr& ambient() const { return ambient_; }
    const std::vector<long>& carrier() const { return carrier_; }
    const std::vector<long>& generators() const { return generators_; }
    bool contains(long ambient_idx) const;
    /// Witness term over g1..gk for a carrier element, by ambient index.
    const TermPtr& witness(long ambient_idx) const;

private:
    AlgebraPtr ambient_;
    std::vector<long> carrier_;
    std::vector<long> generators_;
    std::map<long, TermPtr> witnesses_;
};

class TableRingAlg : public Algebra {
public:
    TableRingAlg(long n, std::vector<long> add, std::vector<long> mul, std::vector<long> neg, long zero, long one,
                 std::optional<std::vector<long>> star, std::map<int, std::vector<long>> roots);

    Kind kind() const override { return Kind::TableRing; }
    long size() const override { return n_; }
    Elem element(long idx) const override { return TableIdx{idx}; }
    long index_of_elem(const Elem& e) const override;
    Elem add(const Elem& a, const Elem& b) const override;
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem neg(const Elem& a) const override;
    Elem star(const Elem& a) const override;
    Elem root(int p, const Elem& a) const override;
    Elem zero() const override { return TableIdx{zero_}; }
    Elem one() const override { return TableIdx{one_}; }

    bool has_star() const { return star_.has_value(); }

private:
    long n_;
    std::vector<long> add_, mul_, neg_;
    long zero_, one_;
    std::optional<std::vector<long>> star_;
    std::map<int, std::vector<long>> roots_;
};

class RationalsAlg : public Algebra {
public:
    RationalsAlg() = default;

    Kind kind() const override { return Kind::Rationals; }
    long size() const override { return 0; }
    Elem element(long) const override { throw Error(ErrorCode::InfiniteCarrier, "cannot enumerate the rationals"); }
    long index_of_elem(const Elem&) const override {
        throw Error(ErrorCode::InfiniteCarrier, "cannot index the rationals");
    }
    Elem add(const Elem& a, const Elem& b) const override;
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem neg(const Elem& a) const override;
    Elem star(const Elem& a) const override;
    Elem root(int p, const Elem& a) const override;
    Elem zero() const override { return Rational(0, 1); }
    Elem one() const override { return Rational(1, 1); }
};

AlgebraPtr make_icf_field(const FieldRef& f, std::set<int> primes = {});
AlgebraPtr make_icf_field(int p, int n);
/// Product of ICF fields; P must contain every component characteristic.
/// The empty product is the trivial (one element) ring.
AlgebraPtr make_product(std::vector<FieldRef> comps, std::set<int> primes);
AlgebraPtr make_rationals();

/// Z/n with addition, multiplication, negation tables; optional star and
/// weak-root tables allow building both examples and non-examples.
AlgebraPtr make_zn_ring(long n, std::optional<std::vector<long>> star = std::nullopt,
                        std::map<int, std::vector<long>> roots = {});

/// Arbitrary table-presented ring; tables must be total and size-consistent.
AlgebraPtr make_table_ring(long n, std::vector<long> add, std::vector<long> mul, std::vector<long> neg, long zero,
                           long one, std::optional<std::vector<long>> star = std::nullopt,
                           std::map<int, std::vector<long>> roots = {});

/// Any finite algebra re-presented by its operation tables.
AlgebraPtr as_table_ring(const Algebra& a);

/// Canonical star table of Z/n where one exists (squarefree n): for each a
/// the unique b with a*a*b = a and b*b*a = b.
std::optional<std::vector<long>> zn_canonical_star(long n);
/// Canonical r_p table of Z/n (requires a star table to exist): for each a
/// the unique b with b^p = (1 - star(p) * p) * a.
std::optional<std::vector<long>> zn_canonical_root(long n, int p);

/// The fields of a componentized handle (IcfField counts as a unary product).
std::vector<FieldRef> components_copy(const AlgebraPtr& a);
/// Component view of an element of a componentized handle.
std::vector<FFElement> as_component_vector(const Algebra& a, const Elem& e);
Elem from_component_vector(const Algebra& a, const std::vector<FFElement>& v);

/// I_i = {x : x_i = 0}, the kernel of the i-th projection.
struct PrimeIdeal {
    AlgebraPtr of;
    int component;
};

/// One ideal per component of a finite product of fields (a single field has
/// exactly its zero ideal). NotProduct for table rings or rationals.
std::vector<PrimeIdeal> prime_ideals(const AlgebraPtr& b);

/// B/I identified with component i; the projection map b -> b_i.
struct Quotient {
    FieldRef field;
    int component;
    FFElement apply(const Algebra& b, const Elem& e) const;
};
Quotient quotient(const AlgebraPtr& b, const PrimeIdeal& ideal);

/// Least subset of the ambient containing gens and {0, 1} closed under every
/// signature operation, computed by worklist fixpoint. Witness terms are
/// recorded during closure.
std::shared_ptr<const SubalgebraAlg> sg_closure(const AlgebraPtr& ambient, const std::vector<Elem>& gens,
                                                long cap = kDefaultCap * kDefaultCap);

} // namespace meadowlab

#endif
