#pragma once

#include <optional>

#include "setfn/set_function.hpp"

namespace setfn {

/// Exhaustive checks enumerate all of 2^m x 2^m; beyond this they refuse.
/// O(m 3^m) makes m <= 12 the practical interactive range.
inline constexpr int kMaxExhaustiveM = 20;

/// Which submodularity condition is enforced.
///   Standard:     A subset B, x outside B:  f(A+x)-f(A) >= f(B+x)-f(B)
///   PaperLiteral: A subset B, x outside A (x in B\A allowed, where the
///                 right side degenerates to 0); equivalent to
///                 submodular-and-monotone
///   Lattice:      all pairs:  f(AuB) + f(AnB) <= f(A) + f(B)
enum class CheckMode { Standard, PaperLiteral, Lattice };

/// A concrete witness that the selected inequality fails. Re-evaluating the
/// function reproduces lhs/rhs/gap exactly.
///   Standard/PaperLiteral: lhs = f(A+x)-f(A), rhs = f(B+x)-f(B), gap < 0
///   Lattice:               lhs = f(AuB)+f(AnB), rhs = f(A)+f(B), gap > 0
struct ViolationCertificate {
    CheckMode mode;
    SubsetMask a;
    SubsetMask b;
    std::optional<int> x; // absent for Lattice
    Rational lhs;
    Rational rhs;
    Rational gap; // lhs - rhs
};

struct MonotoneViolation {
    SubsetMask a;
    int x;
    Rational gap; // f(A+x) - f(A) < 0
};

struct CheckOptions {
    int workers = 1;
};

/// Decides submodularity by exhaustive search. Returns the lexicographically
/// smallest violation (ordered by B mask, then A mask, then x; for Lattice
/// the pair is canonicalized to A mask <= B mask), or nullopt if the
/// function is submodular under the selected mode. The verdict and the
/// certificate are identical for every worker count.
std::optional<ViolationCertificate> check_submodular(const SetFunction& f, CheckMode mode,
                                                     const CheckOptions& options = {});

/// Recomputes every function value named by the certificate. True iff the
/// stored lhs/rhs/gap match exactly and the mode's inequality is indeed
/// violated. Structurally malformed certificates (ground-set mismatch,
/// A not a subset of B, x misplaced) throw.
bool verify_certificate(const SetFunction& f, const ViolationCertificate& cert);

/// Tests f(A+x) >= f(A) for all A and x outside A; smallest violation
/// (ordered by A mask, then x) or nullopt if monotone.
std::optional<MonotoneViolation> check_monotone(const SetFunction& f);

} // namespace setfn
