#pragma once

#include <nlohmann/json.hpp>

#include "iprn/constructions.hpp"
#include "iprn/ipr.hpp"
#include "iprn/matrix.hpp"
#include "iprn/near.hpp"
#include "iprn/sequence.hpp"

namespace iprn {

// Stable key order everywhere so certificates diff cleanly.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json rationals_to_json(const std::vector<Rational>& xs);
std::vector<Rational> rationals_from_json(const Json& j);

Json certificate_to_json(const ColoringCertificate& cert);
Json coloring_to_json(const Coloring& chi);
Coloring coloring_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Json falsification_to_json(const FalsificationWitness& w);
Json near_witness_to_json(const NearWitness& w);
Json combined_witness_to_json(const CombinedWitness& w);

Json validation_to_json(const ValidationReport& rep);
Json first_entries_to_json(const FirstEntriesReport& rep);
Json segmented_to_json(const SegmentedReport& rep);

InsertionSpec insertion_spec_from_json(const Json& j);
BlockStructure block_structure_from_json(const Json& j);

}  // namespace iprn
