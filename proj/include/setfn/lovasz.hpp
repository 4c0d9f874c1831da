#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setfn/set_function.hpp"
#include "setfn/submod_check.hpp"

namespace setfn {

/// A point in R^m; coordinate i-1 belongs to element i.
using ExtensionPoint = std::vector<double>;

ExtensionPoint indicator_vector(const SubsetMask& s);

/// One step of the sorted-threshold trace: after processing `element`, the
/// prefix set is `prefix` and f(prefix) is `prefix_value` (kept exact).
struct ChainStep {
    int element;
    SubsetMask prefix;
    Rational prefix_value;
};

/// Result of evaluating the extension at a point. `value` reproduces from
/// the chain as sum_i w[chain[i].element] * (value_i - value_{i-1}) with
/// value_0 = 0; every difference is formed exactly and only the final dot
/// product runs in doubles.
struct ExtensionEvaluation {
    double value;
    std::vector<ChainStep> chain;
};

/// Greedy/telescoping evaluation: sort coordinates descending (ties by
/// ascending element index), grow nested prefixes S_1 c ... c S_m, and
/// accumulate w_{pi(i)} (f(S_i) - f(S_{i-1})). Agrees with f on indicator
/// vectors. Requires f({}) = 0 and finite coordinates.
ExtensionEvaluation lovasz_evaluate(const SetFunction& f, const ExtensionPoint& w);

enum class WitnessSource { Random, IndicatorSweep, LatticeBridge };

/// A midpoint-convexity failure: LE((u+v)/2) exceeds the chord midpoint.
struct ConvexityWitness {
    ExtensionPoint u;
    ExtensionPoint v;
    double le_u;
    double le_v;
    double le_mid;
    double deficit; // le_mid - (le_u + le_v)/2
    WitnessSource source = WitnessSource::Random;
    long long sample_index = -1; // position in the probe sequence, -1 if not sampled
};

/// Witness iff LE((u+v)/2) > (LE(u)+LE(v))/2 + tol.
std::optional<ConvexityWitness> midpoint_probe(const SetFunction& f, const ExtensionPoint& u,
                                               const ExtensionPoint& v, double tol);

struct ProbeOptions {
    long long samples = 10000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    int workers = 1;
};

/// Runs midpoint probes over the deterministic all-indicator-pairs sweep
/// (for m <= 8) followed by `samples` seeded-random pairs in [0,1]^m, and
/// returns the witness with the largest deficit (ties broken by sample
/// index), or nullopt. Sample coordinates are derived per-index from the
/// seed, so results do not depend on the worker count.
std::optional<ConvexityWitness> probe_convexity(const SetFunction& f, const ProbeOptions& options);

/// Converts a verified Lattice violation into a convexity witness with
/// u = indicator(A), v = indicator(B); then LE((u+v)/2) = (f(AuB)+f(AnB))/2
/// and (LE(u)+LE(v))/2 = (f(A)+f(B))/2, so deficit = gap/2 up to the float
/// representation of the rationals. Throws if the certificate does not
/// verify against f.
ConvexityWitness witness_from_lattice_violation(const SetFunction& f,
                                                const ViolationCertificate& cert);

} // namespace setfn
