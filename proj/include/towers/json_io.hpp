#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "towers/algebra.hpp"
#include "towers/asymptotics.hpp"
#include "towers/core_model.hpp"
#include "towers/enumerator.hpp"
#include "towers/holonomic.hpp"
#include "towers/series.hpp"

namespace towers {

using Json = nlohmann::ordered_json;

// Big integers always travel as decimal strings. Readers also accept
// plain JSON integers.

BigInt bigint_from_json(const Json& j);

std::string_view to_string(BoundKind kind);

/// [[[l, r], ...], ...] floor by floor.
Json tower_to_json(const Tower& tower);
RawFloors raw_floors_from_json(const Json& j);

Json counts_to_json(const EnumerationQuery& query, const std::map<int, BigInt>& counts);
Json weights_to_json(const EnumerationQuery& query, const std::map<int, ZPolynomial>& weights);

/// Exponent-key map {"e1,...,em": "c"} over `slots` markers.
Json zpolynomial_to_json(const ZPolynomial& p, std::size_t slots);
ZPolynomial zpolynomial_from_json(const Json& j);

Json series_to_json(const IntegerSeries& s);
IntegerSeries series_from_json(const Json& j);
Json weighted_series_to_json(const WeightedSeries& s, const std::vector<int>& marker_labels);

Json sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const Json& j);

Json recurrence_to_json(const Recurrence& rec);
Recurrence recurrence_from_json(const Json& j);

Json polynomial_to_json(const BivariatePolynomial& q);
BivariatePolynomial polynomial_from_json(const Json& j);

Json asymptotics_to_json(const AsymptoticEstimate& est);

/// Reads and parses a JSON file; InputError on failure.
Json read_json_file(const std::string& path);

/// Writes a sequence document term by term. The output is byte-identical to
/// sequence_to_json(...).dump(2) plus a trailing newline.
class SequenceWriter {
public:
    SequenceWriter(std::ostream& out, long long offset, std::string label);
    void push(const BigInt& value);
    void finish();

private:
    std::ostream& out_;
    std::string label_;
    bool first_ = true;
    bool finished_ = false;
};

}  // namespace towers
