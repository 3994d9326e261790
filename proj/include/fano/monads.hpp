#ifndef FANO_MONADS_HPP
#define FANO_MONADS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fano/models.hpp"

namespace fano {

struct MonadData {
    GeometryTag tag;
    int k = 0;
    std::uint64_t prime = 0;
    Tensor3 a;
    Duality d;
};

// ---------------------------------------------------------------------------
// Samplers.  Every sampler certifies the generic rank values it relies on and
// resamples on failure; exhaustion throws.
// ---------------------------------------------------------------------------

// Quadric monads for 2 <= k <= 9 (row i of the greedy construction needs
// 4k - 5(i-1) > 0 free dimensions).  D = identity, project_condition = 0
// exactly, DD != 0 certified.
MonadData sample_quadric_monad(int k, const PrimeField& K, const SpinSplit& spin, Rng& rng);

// A solution of the quadric equations that fails surjectivity at the returned
// point: the first I-row is constrained to vanish on the fiber there.  DD
// must vanish on these.
std::pair<MonadData, QuadricPoint> sample_degenerate_quadric_monad(int k, const PrimeField& K, const SpinSplit& spin, Rng& rng);

// Pencil bookkeeping for the rank-targeting samplers: how many pencils were
// drawn and how many roots they offered before one was accepted.
struct PencilStats {
    int pencils = 0;
    int roots_seen = 0;
    int rejected_pencils = 0;
};

// Nets with ambient rank exactly 4k+2 (V5, k in 2..4) resp. 3k+1 (V22, k in 1..2).
// k = 4 (V5) and k = 2 (V22) walk a pencil of nets to a root of the pfaffian
// resp. determinant.
Net sample_v5_net(int k, const V5Model& model, Rng& rng, PencilStats* stats = nullptr);
Net sample_v22_net(int k, const V22Model& model, Rng& rng, PencilStats* stats = nullptr);

// Builds a model and samples a rank-certified net from it, resampling the
// model when the net sampler exhausts (over tiny fields a model's rank
// stratum can be empty).
std::pair<V22Model, Net> sample_v22_model_net(int k, const PrimeField& K, Rng& rng, int model_retries = 10);

// Column-space factorization ambient = C G C^t; A = C^t as a tensor, D = G.
// Checks the rank target and the exact reassembly identity.
MonadData net_to_monad(const PrimeField& K, const Net& n);

// Reassemble A D A^t as the big (k dimU) x (k dimU) bilinear form.
FMat reassemble_ambient(const PrimeField& K, const MonadData& m);

// Recover the net from a monad whose reassembly lies blockwise in span(B):
// nullopt when it does not (structural failure).
std::optional<Net> net_from_monad(const PrimeField& K, const MonadData& m, Geometry geom, const std::vector<FMat>& b_gram);

// ---------------------------------------------------------------------------
// Fiberwise monad data at a sampled point.
// ---------------------------------------------------------------------------

struct MonadFibers {
    FMat a_x;   // fiber of A;     surjective on a valid monad
    FMat dat_x; // fiber of D A^t; injective on a valid monad
};

MonadFibers monad_fibers_quadric(const PrimeField& K, const MonadData& m, const SpinSplit& spin, const QuadricPoint& pt);
MonadFibers monad_fibers_v5(const PrimeField& K, const MonadData& m, const V5Point& pt);
MonadFibers monad_fibers_v22(const PrimeField& K, const MonadData& m, const CubicPoint& pt);

struct ValidationReport {
    Geometry geom = Geometry::Quadric;
    int k = 0;
    bool structural_zero = false; // quadric equations resp. net reassembly
    int points_checked = 0;
    int distinct_points = 0;
    bool best_effort = false; // V22: only the seeded cubics are available
    int expected_cohomology = 2;
    bool all_fibers_ok = false;
    int first_failure = -1;
    std::string failure_reason;

    bool passed() const { return structural_zero && all_fibers_ok; }
};

ValidationReport validate_monad(const MonadData& m, const QuadricModel& model, int npoints, Rng& rng);
ValidationReport validate_monad(const MonadData& m, const V5Model& model, int npoints, Rng& rng);
ValidationReport validate_monad(const MonadData& m, const V22Model& model, int npoints, Rng& rng);

// ---------------------------------------------------------------------------
// Group action of GL(I) x G(W, D).
// ---------------------------------------------------------------------------

// A |-> xi^-1 A eta^t; throws unless eta^t D eta = D exactly.
MonadData group_act(const PrimeField& K, const MonadData& m, const FMat& xi, const FMat& eta);

// Random element of G(W, D) by the Cayley transform of a random Lie algebra
// element (plus an optional fixed reflection for the orthogonal case).
FMat random_group_eta(const PrimeField& K, const Duality& d, Rng& rng);

// Basis of the Lie algebra { eta : eta^t D + D eta = 0 }.
std::vector<FMat> duality_lie_algebra(const PrimeField& K, const Duality& d);

// ---------------------------------------------------------------------------
// Tangent / orbit dimensions and the delta table.
// ---------------------------------------------------------------------------

// Cross-check of the hyperdeterminant against point sampling.  DD != 0 must
// imply surjectivity at every sampled point (hard assertion: a failure is an
// inconsistency).  DD = 0 predicts a failure somewhere, but point sampling
// may miss it, which is reported as inconclusive rather than asserted.
enum class DDCrossCheck {
    NonzeroAllPass,
    NonzeroFailureFound, // inconsistent: must not happen
    ZeroWitnessFound,
    ZeroInconclusive,
};

DDCrossCheck dd_surjectivity_cross_check(const PrimeField& K, const MonadData& m, const QuadricModel& model, int npoints, Rng& rng);

struct DimPair {
    long tangent = 0;
    long orbit = 0;
    bool certified = false; // all rank values hit their generic maxima
    long delta() const { return tangent - orbit; }
};

DimPair monad_dimensions_quadric(const PrimeField& K, const MonadData& m, const SpinSplit& spin);
DimPair net_dimensions(const PrimeField& K, const Net& n);

long expected_delta(Geometry g, int k);

struct DeltaTrial {
    int index = 0;
    bool certified = false;
    long tangent = 0, orbit = 0, delta = 0;
    int resamples = 0;
};

struct DeltaReport {
    Geometry geom = Geometry::Quadric;
    int k = 0;
    std::uint64_t prime = 0, seed = 0;
    long expected = 0;
    std::vector<DeltaTrial> trials;
    int certified_trials = 0;
    bool all_certified_match = false;
};

// Runs `trials` independent trials (in parallel), each sampling a fresh
// monad/net and measuring tangent - orbit.
DeltaReport delta_check(Geometry g, int k, int trials, const PrimeField& K, std::uint64_t seed);

// supported sampling ranges per geometry
int max_sample_k(Geometry g);
int min_sample_k(Geometry g);

} // namespace fano

#endif
