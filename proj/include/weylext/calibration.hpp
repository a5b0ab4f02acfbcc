#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylext/upsilon.hpp"

namespace weylext::cal {

/// Persisted outcome of the convention search. The record is an inspectable
/// artifact: every later run loads it and asserts it instead of re-searching.
struct Record {
    model::Conventions conv;
    std::vector<std::pair<int, int>> validated;  // (p, i) oracle-equivalence checks
    std::string reference_file;                  // golden data used for the product rule

    std::string to_json() const;
    static Record from_json(const std::string& text);
};

/// Default record location: $WEYLEXT_CACHE_DIR/calibration.json if the
/// environment variable is set, otherwise ./calibration.json.
std::string default_record_path();

std::optional<Record> load_record(const std::string& path);
void save_record(const Record& r, const std::string& path);

struct Options {
    std::vector<int> ps = {2, 3};
    FieldMode mode = FieldMode::Both;
    std::string reference_csv;  // empty = shipped default
    // forced conventions for negative-control runs; key names as in the JSON
    std::map<std::string, std::string> overrides;
};

/// Search the finite candidate conventions. A candidate must (a) make the
/// degree -1 chain carry the generator word e_p (x) e_1 as a nonzero homology
/// class, (b) reproduce the oracle dims at every (p,i) in the validation list,
/// and (c) reproduce the golden quiver of the p=3, q=2 block, which separates
/// the two product-match readings. Exactly one candidate may survive.
Record calibrate(const Options& opt);

/// Apply overrides to a conventions struct; throws on unknown keys/values.
model::Conventions apply_overrides(model::Conventions base,
                                   const std::map<std::string, std::string>& ov);

/// Diagnostic: evaluate one candidate, returning an empty string if it passes
/// all calibration checks and a failure description otherwise.
std::string evaluate_candidate(const model::Conventions& conv, const Options& opt);

}  // namespace weylext::cal
