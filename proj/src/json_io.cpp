#include "meadowlab/json_io.hpp"

#include <algorithm>

namespace meadowlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadDescriptor, what); }

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

Json ff_to_json(const FFElement& e) {
    if (e.spec->n == 1) return e.coeffs[0];
    return Json(e.coeffs);
}

FFElement ff_from_json(const FieldRef& f, const Json& j) {
    std::vector<int> coeffs(f->n, 0);
    if (j.is_number_integer()) {
        long v = j.get<long>();
        v %= f->p;
        if (v < 0) v += f->p;
        coeffs[0] = static_cast<int>(v);
        if (f->n != 1 && j.get<long>() >= f->p) bad("scalar element out of range for extension field");
    } else if (j.is_array()) {
        if (j.size() > static_cast<size_t>(f->n)) bad("coefficient list longer than the field degree");
        for (size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number_integer()) bad("coefficients must be integers");
            long v = j[i].get<long>() % f->p;
            if (v < 0) v += f->p;
            coeffs[i] = static_cast<int>(v);
        }
    } else {
        bad("field element must be an integer or a coefficient list");
    }
    return FFElement{f, coeffs};
}

Json field_ref_to_json(const FieldRef& f) { return Json{{"p", f->p}, {"n", f->n}}; }

FieldRef field_ref_from_json(const Json& j) { return make_field(get_int(j, "p"), get_int(j, "n")); }

std::string rat_str(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>(), 1);
    if (!j.is_string()) bad("rational must be an integer or a \"num/den\" string");
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s), 1);
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        bad("malformed rational literal '" + s + "'");
    }
}

} // namespace

AlgebraPtr algebra_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("algebra descriptor must have a kind");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "field") {
        int p = get_int(j, "p"), n = get_int(j, "n");
        std::set<int> primes;
        if (j.contains("primes"))
            for (const auto& q : j["primes"]) primes.insert(q.get<int>());
        return primes.empty() ? make_icf_field(p, n) : make_icf_field(make_field(p, n), primes);
    }
    if (kind == "product") {
        if (!j.contains("components") || !j["components"].is_array()) bad("product needs a components array");
        std::vector<FieldRef> comps;
        for (const auto& c : j["components"]) comps.push_back(field_ref_from_json(c));
        std::set<int> primes;
        if (j.contains("primes"))
            for (const auto& q : j["primes"]) primes.insert(q.get<int>());
        else
            for (const auto& f : comps) primes.insert(f->p);
        return make_product(std::move(comps), std::move(primes));
    }
    if (kind == "subalgebra") {
        if (!j.contains("ambient")) bad("subalgebra needs an ambient descriptor");
        AlgebraPtr ambient = algebra_from_json(j["ambient"]);
        if (!j.contains("generators") || !j["generators"].is_array()) bad("subalgebra needs a generators array");
        std::vector<Elem> gens;
        for (const auto& g : j["generators"]) gens.push_back(elem_from_json(*ambient, g));
        return sg_closure(ambient, gens);
    }
    if (kind == "znring") {
        int n = get_int(j, "n");
        std::optional<std::vector<long>> star;
        if (j.contains("star") && !j["star"].is_null()) {
            if (j["star"].is_string()) {
                const std::string s = j["star"].get<std::string>();
                if (s == "identity") {
                    star.emplace(n);
                    for (long i = 0; i < n; ++i) (*star)[i] = i;
                } else if (s == "canonical") {
                    star = zn_canonical_star(n);
                    if (!star) bad("no canonical star table exists for this modulus");
                } else {
                    bad("unknown star mode '" + s + "'");
                }
            } else if (j["star"].is_array()) {
                star.emplace();
                for (const auto& v : j["star"]) star->push_back(v.get<long>());
            } else {
                bad("star must be \"identity\", \"canonical\", a table, or null");
            }
        }
        std::map<int, std::vector<long>> roots;
        if (j.contains("roots") && j["roots"].is_object()) {
            for (auto it = j["roots"].begin(); it != j["roots"].end(); ++it) {
                int p = std::stoi(it.key());
                roots[p] = it.value().get<std::vector<long>>();
            }
        }
        return make_zn_ring(n, std::move(star), std::move(roots));
    }
    if (kind == "rationals") return make_rationals();
    if (kind == "tablering") {
        long n = get_int(j, "n");
        auto vec = [&](const char* key) {
            if (!j.contains(key)) bad(std::string("table ring needs '") + key + "'");
            return j[key].get<std::vector<long>>();
        };
        std::optional<std::vector<long>> star;
        if (j.contains("star") && !j["star"].is_null()) star = j["star"].get<std::vector<long>>();
        std::map<int, std::vector<long>> roots;
        if (j.contains("roots") && j["roots"].is_object())
            for (auto it = j["roots"].begin(); it != j["roots"].end(); ++it)
                roots[std::stoi(it.key())] = it.value().get<std::vector<long>>();
        return make_table_ring(n, vec("add"), vec("mul"), vec("neg"), get_int(j, "zero"), get_int(j, "one"),
                               std::move(star), std::move(roots));
    }
    bad("unknown algebra kind '" + kind + "'");
}

Json algebra_to_json(const AlgebraPtr& a) {
    switch (a->kind()) {
    case Algebra::Kind::IcfField: {
        const auto& f = static_cast<const IcfFieldAlg&>(*a).field();
        Json j{{"kind", "field"}, {"p", f->p}, {"n", f->n}};
        j["primes"] = a->signature_primes();
        return j;
    }
    case Algebra::Kind::Product: {
        Json comps = Json::array();
        for (const auto& f : components_copy(a)) comps.push_back(field_ref_to_json(f));
        return Json{{"kind", "product"}, {"components", comps}, {"primes", a->signature_primes()}};
    }
    case Algebra::Kind::Subalgebra: {
        const auto& s = static_cast<const SubalgebraAlg&>(*a);
        Json gens = Json::array();
        for (long g : s.generators()) gens.push_back(elem_to_json(*s.ambient(), s.ambient()->element(g)));
        return Json{{"kind", "subalgebra"}, {"ambient", algebra_to_json(s.ambient())}, {"generators", gens}};
    }
    case Algebra::Kind::TableRing: {
        const Tables& t = a->tables();
        Json j{{"kind", "tablering"}, {"n", t.n},   {"add", t.add}, {"mul", t.mul},
               {"neg", t.neg},        {"star", t.star}, {"zero", t.zero}, {"one", t.one}};
        Json roots = Json::object();
        for (const auto& [p, tab] : t.root) roots[std::to_string(p)] = tab;
        j["roots"] = roots;
        return j;
    }
    case Algebra::Kind::Rationals: return Json{{"kind", "rationals"}};
    }
    throw Error(ErrorCode::Internal, "unreachable");
}

Json elem_to_json(const Algebra&, const Elem& e) {
    if (const auto* f = std::get_if<FFElement>(&e)) return ff_to_json(*f);
    if (const auto* r = std::get_if<Rational>(&e)) return rat_str(*r);
    if (const auto* t = std::get_if<Tuple>(&e)) {
        Json arr = Json::array();
        for (const auto& c : t->comps) arr.push_back(ff_to_json(c));
        return arr;
    }
    return std::get<TableIdx>(e).i;
}

Elem elem_from_json(const Algebra& a, const Json& j) {
    switch (a.kind()) {
    case Algebra::Kind::IcfField: return ff_from_json(static_cast<const IcfFieldAlg&>(a).field(), j);
    case Algebra::Kind::Product: {
        const auto& comps = static_cast<const ProductAlg&>(a).comps();
        if (!j.is_array() || j.size() != comps.size()) bad("product element must list one value per component");
        Tuple t;
        for (size_t i = 0; i < comps.size(); ++i) t.comps.push_back(ff_from_json(comps[i], j[i]));
        return t;
    }
    case Algebra::Kind::Subalgebra: {
        const auto& s = static_cast<const SubalgebraAlg&>(a);
        Elem e = elem_from_json(*s.ambient(), j);
        s.index_of_elem(e); // membership check
        return e;
    }
    case Algebra::Kind::TableRing: {
        if (!j.is_number_integer()) bad("table ring element must be a carrier index");
        long i = j.get<long>();
        if (i < 0 || i >= a.size()) bad("carrier index out of range");
        return TableIdx{i};
    }
    case Algebra::Kind::Rationals: return rat_from_json(j);
    }
    throw Error(ErrorCode::Internal, "unreachable");
}

Json law_report_to_json(const Algebra& a, const LawReport& r) {
    Json j{{"law", r.law}, {"verdict", r.pass ? "pass" : "fail"}, {"elapsed_ms", r.elapsed_ms}};
    if (r.counterexample) {
        Json env = Json::object();
        for (const auto& [v, e] : *r.counterexample) env[v] = elem_to_json(a, e);
        j["counterexample"] = env;
    }
    if (r.failed_axiom) j["failed_axiom"] = *r.failed_axiom;
    return j;
}

Json hom_to_json(const Hom& h) {
    Json images = Json::array();
    for (const auto& e : h.embs) images.push_back(Json(e.image.coeffs));
    return Json{{"src", algebra_to_json(h.src)}, {"dst", algebra_to_json(h.dst)}, {"tau", h.tau}, {"images", images}};
}

Hom hom_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("src") || !j.contains("dst") || !j.contains("tau") || !j.contains("images"))
        bad("hom needs src, dst, tau, images");
    AlgebraPtr src = algebra_from_json(j["src"]);
    AlgebraPtr dst = algebra_from_json(j["dst"]);
    auto tau = j["tau"].get<std::vector<int>>();
    const auto scomps = components_copy(src);
    const auto dcomps = components_copy(dst);
    if (j["images"].size() != dcomps.size() || tau.size() != dcomps.size()) bad("hom arity mismatch");
    std::vector<FieldEmbedding> embs;
    for (size_t k = 0; k < dcomps.size(); ++k) {
        if (tau[k] < 0 || tau[k] >= static_cast<int>(scomps.size())) bad("tau index out of range");
        FFElement img = ff_from_json(dcomps[k], j["images"][k]);
        embs.push_back(FieldEmbedding{scomps[tau[k]], dcomps[k], img});
    }
    return make_hom(std::move(src), std::move(dst), std::move(tau), std::move(embs), true);
}

Json dominion_result_to_json(const DominionResult& r) {
    Json j{{"method", r.method}, {"b", algebra_to_json(r.b)}};
    if (!r.codomain_class.empty()) j["codomain_class"] = r.codomain_class;
    Json acar = Json::array();
    for (long i : r.a->carrier()) acar.push_back(elem_to_json(*r.b, r.b->element(i)));
    j["a_carrier"] = acar;
    Json members = Json::array();
    for (long e : r.members) members.push_back(elem_to_json(*r.b, r.b->element(e)));
    j["members"] = members;
    Json mcerts = Json::array();
    for (const auto& c : r.member_certs) {
        Json w = Json::object();
        for (const auto& [pr, t] : c.pair_witnesses)
            w[std::to_string(pr.first) + "," + std::to_string(pr.second)] = render(t);
        mcerts.push_back(Json{{"elem", elem_to_json(*r.b, r.b->element(c.elem))}, {"witnesses", w}});
    }
    j["member_certificates"] = mcerts;
    Json ncerts = Json::array();
    for (const auto& c : r.nonmember_certs)
        ncerts.push_back(Json{{"elem", elem_to_json(*r.b, r.b->element(c.elem))},
                              {"g", hom_to_json(c.g)},
                              {"h", hom_to_json(c.h)}});
    j["nonmember_certificates"] = ncerts;
    return j;
}

Json span_to_json(const Span& s) {
    return Json{{"a", algebra_to_json(s.a)},
                {"b", algebra_to_json(s.b)},
                {"c", algebra_to_json(s.c)},
                {"h1", hom_to_json(s.h1)},
                {"h2", hom_to_json(s.h2)}};
}

Span span_from_json(const Json& j) {
    for (const char* key : {"a", "b", "c", "h1", "h2"})
        if (!j.contains(key)) bad(std::string("span needs '") + key + "'");
    Span s;
    s.a = algebra_from_json(j["a"]);
    s.b = algebra_from_json(j["b"]);
    s.c = algebra_from_json(j["c"]);
    s.h1 = hom_from_json(j["h1"]);
    s.h2 = hom_from_json(j["h2"]);
    return s;
}

Json amalgam_to_json(const Amalgam& am) {
    return Json{{"d", algebra_to_json(am.d)}, {"g1", hom_to_json(am.g1)}, {"g2", hom_to_json(am.g2)}};
}

} // namespace meadowlab
