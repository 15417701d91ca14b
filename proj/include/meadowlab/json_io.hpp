#ifndef MEADOWLAB_JSON_IO_HPP
#define MEADOWLAB_JSON_IO_HPP

#include "json.hpp"

#include "meadowlab/amalgam.hpp"
#include "meadowlab/dominion.hpp"
#include "meadowlab/laws.hpp"

namespace meadowlab {

using Json = nlohmann::json;

/// Algebra wire format:
///   {"kind":"field","p":2,"n":3}
///   {"kind":"product","components":[{"p":2,"n":1},...],"primes":[2,3]}
///   {"kind":"subalgebra","ambient":<descriptor>,"generators":[<element>,...]}
///   {"kind":"znring","n":4,"star":"identity"|<table>|null}
///   {"kind":"rationals"}
/// BadDescriptor on schema violations.
AlgebraPtr algebra_from_json(const Json& j);
Json algebra_to_json(const AlgebraPtr& a);

/// Element wire format: field elements are coefficient lists (constant term
/// first), collapsed to a bare integer for prime fields; tuples are lists of
/// component values; table-ring elements are carrier indices; rationals are
/// "num/den" strings (bare "num" when integral).
Json elem_to_json(const Algebra& a, const Elem& e);
Elem elem_from_json(const Algebra& a, const Json& j);

Json law_report_to_json(const Algebra& a, const LawReport& r);

/// {"src":…,"dst":…,"tau":[…],"images":[<element of dst component>,…]}
Json hom_to_json(const Hom& h);
Hom hom_from_json(const Json& j);

Json dominion_result_to_json(const DominionResult& r);

Json span_to_json(const Span& s);
Span span_from_json(const Json& j);
Json amalgam_to_json(const Amalgam& am);

} // namespace meadowlab

#endif
