#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "setfn/ground_set.hpp"
#include "setfn/rational.hpp"

namespace setfn {

class SetFunction;

/// Explicit table of all 2^m values, indexed by subset bitmask
/// (element i <-> bit i-1, little-endian).
struct DenseTable {
    std::vector<Rational> values;
};

/// IoU_Y(A) = |A n Y| / |A u Y| for a fixed nonempty reference set Y.
struct IouFamily {
    SubsetMask y;
};

/// -IoU_Y.
struct NegIouFamily {
    SubsetMask y;
};

/// f(A) = |A|.
struct CardinalityFamily {};

/// f(A) = min(|A|, cap).
struct TruncationFamily {
    long long cap;
};

/// f(A) = size of the union of the items covered by the elements of A.
/// covers[i-1] lists the item ids covered by element i.
struct CoverageFamily {
    std::vector<std::vector<long long>> covers;
    // Compiled form: item ids deduplicated and packed into words.
    std::vector<std::vector<std::uint64_t>> element_words;
    std::size_t word_count = 0;
};

/// f(A) = number of edges with exactly one endpoint in A.
struct GraphCutFamily {
    std::vector<std::pair<int, int>> edges;
};

/// factor * inner.
struct ScaledFamily {
    std::shared_ptr<const SetFunction> inner;
    Rational factor;
};

/// -inner.
struct NegatedFamily {
    std::shared_ptr<const SetFunction> inner;
};

/// An evaluatable set function f : 2^{1..m} -> Q. Evaluation is pure and
/// the object is immutable after construction, so instances can be shared
/// read-only across concurrent workers.
class SetFunction {
public:
    using Family = std::variant<DenseTable, IouFamily, NegIouFamily, CardinalityFamily,
                                TruncationFamily, CoverageFamily, GraphCutFamily, ScaledFamily,
                                NegatedFamily>;

    SetFunction(GroundSet ground, Family family);

    static SetFunction dense_table(GroundSet ground, std::vector<Rational> values);
    static SetFunction iou(GroundSet ground, SubsetMask y);
    static SetFunction neg_iou(GroundSet ground, SubsetMask y);
    static SetFunction cardinality(GroundSet ground);
    static SetFunction truncation(GroundSet ground, long long cap);
    static SetFunction coverage(GroundSet ground, std::vector<std::vector<long long>> covers);
    static SetFunction graph_cut(GroundSet ground, std::vector<std::pair<int, int>> edges);
    static SetFunction scaled(SetFunction inner, Rational factor);
    static SetFunction negated(SetFunction inner);

    GroundSet ground() const noexcept { return ground_; }
    const Family& family() const noexcept { return family_; }
    const char* kind_name() const noexcept;

    Rational evaluate(const SubsetMask& a) const;
    Rational operator()(const SubsetMask& a) const { return evaluate(a); }

private:
    GroundSet ground_;
    Family family_;
};

/// f(A u {x}) - f(A). Requires x in 1..m and x not in A.
Rational marginal_gain(const SetFunction& f, const SubsetMask& a, int x);

} // namespace setfn
