// meadowlab: build finite-field algebras from JSON descriptors, evaluate
// terms, run axiom suites, compute dominions, amalgamate spans, and run the
// cross-check matrix. All output is UTF-8 JSON lines.
//
// Exit codes: 0 success, 1 domain failure (error object on stderr or a
// failing verdict where a pass was asserted), 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "meadowlab/json_io.hpp"

using namespace meadowlab;

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadDescriptor, "cannot open file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::BadDescriptor, "malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

int emit_error(const Error& e) {
    Json j{{"error", error_code_name(e.code())}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return e.code() == ErrorCode::SyntaxError ? 2 : 1;
}

long default_cap() {
    if (const char* env = std::getenv("MEADOWLAB_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultCap;
}

LawReport run_suite(const AlgebraPtr& a, const std::string& suite, long cap) {
    if (suite == "ring") return check_commutative_ring(a, cap);
    if (suite == "meadow") return check_meadow(a, cap);
    if (suite == "icm") return check_icm(a, a->signature_primes(), cap);
    if (suite == "reduced") return check_reduced(a, cap);
    if (suite == "regular") return check_regular(a, cap);
    if (suite == "weakly-rooted") return check_weakly_rooted(a, cap);
    if (suite == "discriminator") return check_discriminator(a, cap);
    throw Error(ErrorCode::BadDescriptor, "unknown suite '" + suite + "'");
}

// ---- crosscheck matrix ----

std::vector<FieldRef> small_fields(long bound) {
    std::vector<FieldRef> out;
    for (int p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        long sz = p;
        for (int n = 1; sz <= bound; ++n, sz *= p) out.push_back(make_field(p, n));
    }
    std::sort(out.begin(), out.end(), [](const FieldRef& a, const FieldRef& b) {
        return a->size < b->size || (a->size == b->size && a->p < b->p);
    });
    return out;
}

int cmd_crosscheck(long max_carrier, long cap) {
    if (max_carrier > kDefaultCap)
        throw Error(ErrorCode::CapExceeded, "crosscheck refuses max-carrier above " + std::to_string(kDefaultCap));
    Json summary;
    summary["max_carrier"] = max_carrier;
    bool all_pass = true;

    long field_suites = 0;
    auto fields = small_fields(max_carrier);
    for (const auto& f : fields) {
        AlgebraPtr a = make_icf_field(f);
        for (const char* suite : {"ring", "meadow", "icm", "reduced", "regular", "weakly-rooted", "discriminator"}) {
            LawReport r = run_suite(a, suite, cap);
            if (!r.pass) all_pass = false;
            ++field_suites;
        }
    }
    summary["field_suite_runs"] = field_suites;

    long product_suites = 0;
    for (size_t i = 0; i < fields.size(); ++i) {
        for (size_t j = i; j < fields.size(); ++j) {
            if (fields[i]->size * fields[j]->size > max_carrier) continue;
            std::set<int> primes{fields[i]->p, fields[j]->p};
            AlgebraPtr prod = make_product({fields[i], fields[j]}, primes);
            for (const char* suite : {"icm", "regular", "reduced"}) {
                LawReport r = run_suite(prod, suite, cap);
                if (!r.pass) all_pass = false;
                ++product_suites;
            }
        }
    }
    summary["product_suite_runs"] = product_suites;

    long towers = 0;
    for (const auto& f : fields) {
        AlgebraPtr b = make_icf_field(f);
        for (int a_deg = 1; a_deg < f->n; ++a_deg) {
            if (f->n % a_deg != 0) continue;
            FieldRef sub = make_field(f->p, a_deg);
            auto emb = enumerate_embeddings(sub, f).front();
            std::vector<Elem> gens;
            for (long i = 0; i < sub->size; ++i) gens.push_back(emb.apply(element_at(sub, i)));
            auto r1 = dominion_sg(gens, b, cap);
            auto r2 = dominion_field_case(gens, b, cap);
            auto r3 = dominion_oracle(gens, b, kDefaultCap, true, cap);
            if (r1.members != r2.members || r2.members != r3.members || r1.members != r1.a->carrier())
                all_pass = false;
            ++towers;
        }
    }
    summary["dominion_towers"] = towers;

    long spans = 0;
    for (const auto& f : fields) {
        if (f->n != 1) continue;
        for (int nb = 1; nb <= 2; ++nb) {
            for (int nc = 1; nc <= 3; ++nc) {
                FieldRef fb = make_field(f->p, nb), fc = make_field(f->p, nc);
                if (fb->size > max_carrier || fc->size > max_carrier) continue;
                AlgebraPtr a = make_icf_field(f), b = make_icf_field(fb), c = make_icf_field(fc);
                Span s{a, b, c,
                       make_hom(a, b, {0}, {enumerate_embeddings(f, fb).front()}, false),
                       make_hom(a, c, {0}, {enumerate_embeddings(f, fc).front()}, false)};
                Amalgam am = amalgamate(s);
                if (!verify_amalgam(s, am)) all_pass = false;
                ++spans;
            }
        }
    }
    summary["amalgamated_spans"] = spans;

    summary["all_pass"] = all_pass;
    std::cout << summary.dump() << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field meadow workbench"};
    app.require_subcommand(1);
    long cap = default_cap();
    app.add_option("--cap", cap, "carrier cap for exhaustive routines");

    // eval
    std::string eval_algebra, eval_term;
    std::vector<std::string> eval_binds;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a term in an algebra");
    eval_cmd->add_option("algebra", eval_algebra, "algebra descriptor file")->required();
    eval_cmd->add_option("term", eval_term, "term in s-expression syntax")->required();
    eval_cmd->add_option("--bind", eval_binds, "variable binding var=ELEMENT_JSON (repeatable)");

    // check
    std::string check_algebra, check_suite;
    auto* check_cmd = app.add_subcommand("check", "run an axiom suite");
    check_cmd->add_option("algebra", check_algebra, "algebra descriptor file")->required();
    check_cmd
        ->add_option("suite", check_suite,
                     "one of ring, meadow, icm, reduced, regular, weakly-rooted, discriminator, all")
        ->required();

    // dominion
    std::string dom_algebra, dom_gens, dom_method = "sg";
    long dom_bound = kDefaultCap;
    auto* dom_cmd = app.add_subcommand("dominion", "compute a dominion");
    dom_cmd->add_option("algebra", dom_algebra, "descriptor file for B")->required();
    dom_cmd->add_option("generators", dom_gens, "JSON array file of generators of A")->required();
    dom_cmd->add_option("--method", dom_method, "sg, field, oracle, or icm");
    dom_cmd->add_option("--bound", dom_bound, "oracle codomain carrier bound");

    // amalgamate
    std::string am_span;
    auto* am_cmd = app.add_subcommand("amalgamate", "complete a span of embeddings");
    am_cmd->add_option("span", am_span, "span descriptor file")->required();

    // crosscheck
    long cc_max = 16;
    auto* cc_cmd = app.add_subcommand("crosscheck", "run the verification matrix");
    cc_cmd->add_option("--max-carrier", cc_max, "largest carrier exercised");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) {
            AlgebraPtr a = algebra_from_json(read_json_file(eval_algebra));
            TermPtr t = parse_term(eval_term);
            Env env;
            for (const auto& b : eval_binds) {
                auto eq = b.find('=');
                if (eq == std::string::npos)
                    throw Error(ErrorCode::BadDescriptor, "binding must look like var=ELEMENT_JSON");
                env[b.substr(0, eq)] = elem_from_json(*a, Json::parse(b.substr(eq + 1)));
            }
            std::cout << elem_to_json(*a, eval(t, *a, env)).dump() << "\n";
            return 0;
        }
        if (check_cmd->parsed()) {
            AlgebraPtr a = algebra_from_json(read_json_file(check_algebra));
            bool all_pass = true;
            if (check_suite == "all") {
                Json arr = Json::array();
                for (const char* suite : {"ring", "meadow", "icm", "reduced", "regular"}) {
                    LawReport r = run_suite(a, suite, cap);
                    all_pass = all_pass && r.pass;
                    arr.push_back(law_report_to_json(*a, r));
                }
                std::cout << arr.dump() << "\n";
            } else {
                LawReport r = run_suite(a, check_suite, cap);
                all_pass = r.pass;
                std::cout << law_report_to_json(*a, r).dump() << "\n";
            }
            return all_pass ? 0 : 1;
        }
        if (dom_cmd->parsed()) {
            AlgebraPtr b = algebra_from_json(read_json_file(dom_algebra));
            Json gj = read_json_file(dom_gens);
            if (!gj.is_array()) throw Error(ErrorCode::BadDescriptor, "generators file must hold a JSON array");
            std::vector<Elem> gens;
            for (const auto& g : gj) gens.push_back(elem_from_json(*b, g));
            DominionResult r;
            if (dom_method == "sg")
                r = dominion_sg(gens, b, cap);
            else if (dom_method == "field")
                r = dominion_field_case(gens, b, cap);
            else if (dom_method == "oracle")
                r = dominion_oracle(gens, b, dom_bound, true, cap);
            else if (dom_method == "icm")
                r = dominion_icm(gens, b, cap);
            else
                throw Error(ErrorCode::BadDescriptor, "unknown method '" + dom_method + "'");
            std::cout << dominion_result_to_json(r).dump() << "\n";
            return 0;
        }
        if (am_cmd->parsed()) {
            Span s = span_from_json(read_json_file(am_span));
            Amalgam am = amalgamate(s, cap * cap);
            std::cout << amalgam_to_json(am).dump() << "\n";
            return 0;
        }
        if (cc_cmd->parsed()) return cmd_crosscheck(cc_max, cap);
    } catch (const Error& e) {
        return emit_error(e);
    } catch (const std::exception& e) {
        Json j{{"error", "Internal"}, {"message", e.what()}};
        std::cerr << j.dump() << "\n";
        return 1;
    }
    return 2;
}
