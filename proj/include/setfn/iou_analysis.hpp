#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "setfn/set_function.hpp"
#include "setfn/submod_check.hpp"

namespace setfn {

/// The integer shape of an IoU counterexample with x outside Y u B:
/// ab_n = |A n Y| = |B n Y|, a_d = |A u Y|, b_d = |B u Y|.
/// Requires 0 < ab_n <= a_d < b_d. The closed forms below are purely
/// arithmetic in these integers; realizability on a concrete ground set is
/// a separate question (see realizable_outside).
struct CaseOutsideParams {
    long long ab_n;
    long long a_d;
    long long b_d;
};

/// R = ab_n * (1/((b_d+1) b_d) - 1/((a_d+1) a_d)); always < 0.
Rational closed_form_r_outside(const CaseOutsideParams& params);

/// R = 1/a_d - 1/b_d for the x-in-Y case; requires 0 < a_d < b_d; always > 0.
Rational closed_form_r_inside(long long a_d, long long b_d);

/// R = (IoU_Y(A u {x}) - IoU_Y(A)) - (IoU_Y(B u {x}) - IoU_Y(B)) by four
/// exact evaluations. Requires A subset of B, x outside A, and x outside B
/// unless allow_x_in_b opts into the x-not-in-A reading (then B u {x} = B
/// when x is in B).
Rational direct_r(const SubsetMask& y, const SubsetMask& a, const SubsetMask& b, int x,
                  bool allow_x_in_b = false);

enum class CounterexampleCase {
    OutsideYB, // x outside Y u B: R < 0, IoU not submodular
    InsideY,   // x in Y \ B:      R > 0, -IoU not submodular
};

/// A concrete (Y, A, B, x) with A strictly contained in B,
/// |A n Y| = |B n Y| > 0, x placed per `kind`, and r the exact gap.
struct CounterexampleConfig {
    SubsetMask y;
    SubsetMask a;
    SubsetMask b;
    int x;
    CounterexampleCase kind;
    Rational r;
};

/// Streams every configuration on {1..m} for the given case, in canonical
/// order (Y ascending by mask, then B, then A, then x). The visitor returns
/// false to stop early. Returns the number of configurations visited.
/// Requires 3 <= m <= 12: the construction needs three distinct roles (an
/// element of A n Y, an element of B \ A, and x), so m >= 3 is minimal.
unsigned long long enumerate_counterexamples(
    int m, CounterexampleCase kind, const std::function<bool(const CounterexampleConfig&)>& visit);

/// First `limit` configurations, materialized.
std::vector<CounterexampleConfig> collect_counterexamples(int m, CounterexampleCase kind,
                                                          std::size_t limit = SIZE_MAX);

/// An OutsideYB parameter triple is realizable on {1..m} iff its invariants
/// hold and m >= b_d + 1 (the sets consume b_d elements and x needs one more).
bool realizable_outside(const CaseOutsideParams& params, int m);

/// Canonical realization: Y = {1..a_d}, A = {1..ab_n},
/// B = A u {a_d+1..b_d}, x = b_d + 1.
CounterexampleConfig realize_outside(const CaseOutsideParams& params, int m);

/// The Standard-mode certificate a configuration induces: for OutsideYB the
/// violated function is IoU_Y, for InsideY it is -IoU_Y.
std::pair<SetFunction, ViolationCertificate> to_violation_certificate(
    const CounterexampleConfig& config);

/// Counterexample to the claim that B strictly inside A forces
/// |Y \ B| < |Y \ A|: a configuration with n_B > n_A.
struct PropertyRefutation {
    SubsetMask y;
    SubsetMask a;
    SubsetMask b;
    long long n_a; // |Y \ A|
    long long n_b; // |Y \ B|
};

/// Smallest witness (Y ascending by mask, then A, then B) with B strictly
/// inside A and n_B > n_A. Exists for every m >= 1.
PropertyRefutation refute_property11(int m);

} // namespace setfn
