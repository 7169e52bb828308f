#pragma once

#include <string>

#include "json.hpp"
#include "matchmonoid/endo.hpp"
#include "matchmonoid/idempotent_analysis.hpp"
#include "matchmonoid/integer.hpp"
#include "matchmonoid/matching.hpp"
#include "matchmonoid/poset.hpp"

namespace matchmonoid {

using ojson = nlohmann::ordered_json;

// Arbitrary-size integers render as JSON numbers when they fit in 64 bits,
// as decimal strings otherwise.
ojson integer_json(const Integer& v);

// {"n": int, "covers": [[lo,hi],...], "labels": [...]}; covers on input may
// be any relation whose closure is the order (the builder reduces them).
ojson poset_to_json(const Poset& p);
PosetPtr poset_from_json(const ojson& j);
PosetPtr load_poset_file(const std::string& path);  // IoError / ParseError

// {"image": [...], "word": [...]}; with_poset inlines the carrier.
ojson endo_to_json(const Endo& e, bool with_poset = false);

ojson matching_to_json(const Matching& m);
ojson matching_to_json(const PartialMatching& m);

// Sizes, idempotent count, idempotent-order Hasse edges, and per-idempotent
// image/fiber summaries.
ojson closure_report_json(const MonoidClosure& closure);

ojson idempotent_report_json(const IdempotentReport& report);

std::string dump_json(const ojson& j, bool pretty);

}  // namespace matchmonoid
