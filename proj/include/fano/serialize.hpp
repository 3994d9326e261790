#ifndef FANO_SERIALIZE_HPP
#define FANO_SERIALIZE_HPP

#include <json.hpp>

#include "fano/invariants.hpp"
#include "fano/jumping.hpp"
#include "fano/monads.hpp"
#include "fano/pencil.hpp"

namespace fano {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

// matrices as row-major arrays of field values
Json mat_to_json(const FMat& m);
FMat mat_from_json(const Json& j, const PrimeField& K);

// {geometry, prime, seed, B_gram_matrices, seeded_points}
Json quadric_model_to_json(const QuadricModel& m, std::uint64_t seed);
Json v5_model_to_json(const V5Model& m, std::uint64_t seed);
Json v22_model_to_json(const V22Model& m);
V5Model v5_model_from_json(const Json& j);
V22Model v22_model_from_json(const Json& j);

// {geometry, k, prime, dimI, dimW, D (row-major), A (dimI x dimW x dimU)}
Json monad_to_json(const MonadData& m);
MonadData monad_from_json(const Json& j);

// {geometry, k, prime, B_gram, coefficients c[i][j][b]}
Json net_to_json(const Net& n, std::uint64_t prime);
Net net_from_json(const Json& j);

// {nvars, degree, terms: [[exponents...], coeff]} with terms in descending
// graded-lex order
Json curve_to_json(const FPoly& p);
FPoly curve_from_json(const Json& j, const PrimeField& K);

Json validation_to_json(const ValidationReport& r);
Json delta_to_json(const DeltaReport& r);
Json witness_to_json(const SemistabilityWitness& w);

} // namespace fano

#endif
