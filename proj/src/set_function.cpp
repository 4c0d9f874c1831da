#include "setfn/set_function.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "setfn/error.hpp"

namespace setfn {

namespace {

struct Validator {
    GroundSet ground;

    void operator()(const DenseTable& t) const {
        if (t.values.size() != ground.subset_count())
            throw Error("dense table needs exactly 2^m = " + std::to_string(ground.subset_count()) +
                        " values, got " + std::to_string(t.values.size()));
    }
    void operator()(const IouFamily& f) const {
        require_y(f.y);
    }
    void operator()(const NegIouFamily& f) const {
        require_y(f.y);
    }
    void operator()(const CardinalityFamily&) const {}
    void operator()(const TruncationFamily& f) const {
        if (f.cap < 0) throw Error("truncation cap must be nonnegative");
    }
    void operator()(const CoverageFamily& f) const {
        if (f.covers.size() != static_cast<std::size_t>(ground.size()))
            throw Error("coverage needs one cover list per element, expected " +
                        std::to_string(ground.size()) + " lists");
    }
    void operator()(const GraphCutFamily& f) const {
        for (auto [u, v] : f.edges) {
            if (!ground.contains_element(u) || !ground.contains_element(v))
                throw Error("graph-cut edge endpoint outside ground set");
            if (u == v) throw Error("graph-cut edge endpoints must differ");
        }
    }
    void operator()(const ScaledFamily& f) const {
        require_inner(f.inner.get());
    }
    void operator()(const NegatedFamily& f) const {
        require_inner(f.inner.get());
    }

    void require_y(const SubsetMask& y) const {
        if (!(y.ground() == ground)) throw Error("ground-set mismatch between function and Y");
        if (y.is_empty()) throw Error("IoU requires a nonempty reference set Y");
    }
    void require_inner(const SetFunction* inner) const {
        if (inner == nullptr) throw Error("wrapped function is missing");
        if (!(inner->ground() == ground)) throw Error("ground-set mismatch with wrapped function");
    }
};

// Deduplicates covered item ids and packs membership into words so that
// evaluation is a few ORs and popcounts.
void compile_coverage(CoverageFamily& f) {
    std::map<long long, std::size_t> index_of;
    for (const auto& list : f.covers)
        for (long long item : list) index_of.emplace(item, 0);
    std::size_t next = 0;
    for (auto& [item, idx] : index_of) idx = next++;
    f.word_count = (index_of.size() + 63) / 64;
    f.element_words.assign(f.covers.size(), std::vector<std::uint64_t>(f.word_count, 0));
    for (std::size_t e = 0; e < f.covers.size(); ++e)
        for (long long item : f.covers[e]) {
            std::size_t idx = index_of.at(item);
            f.element_words[e][idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
}

struct Evaluator {
    const SubsetMask& a;

    Rational operator()(const DenseTable& t) const { return t.values[a.bits()]; }
    Rational operator()(const IouFamily& f) const {
        int inter = std::popcount(a.bits() & f.y.bits());
        int uni = std::popcount(a.bits() | f.y.bits());
        return make_rational(inter, uni);
    }
    Rational operator()(const NegIouFamily& f) const {
        int inter = std::popcount(a.bits() & f.y.bits());
        int uni = std::popcount(a.bits() | f.y.bits());
        return make_rational(-inter, uni);
    }
    Rational operator()(const CardinalityFamily&) const { return Rational(a.cardinality()); }
    Rational operator()(const TruncationFamily& f) const {
        return Rational(std::min<long long>(a.cardinality(), f.cap));
    }
    Rational operator()(const CoverageFamily& f) const {
        if (f.word_count == 0) return Rational(0);
        std::uint64_t small = 0; // common case: everything fits one word
        if (f.word_count == 1) {
            for (std::uint64_t rest = a.bits(); rest != 0; rest &= rest - 1)
                small |= f.element_words[std::countr_zero(rest)][0];
            return Rational(std::popcount(small));
        }
        std::vector<std::uint64_t> acc(f.word_count, 0);
        for (std::uint64_t rest = a.bits(); rest != 0; rest &= rest - 1) {
            const auto& words = f.element_words[std::countr_zero(rest)];
            for (std::size_t w = 0; w < f.word_count; ++w) acc[w] |= words[w];
        }
        long long covered = 0;
        for (std::uint64_t w : acc) covered += std::popcount(w);
        return Rational(covered);
    }
    Rational operator()(const GraphCutFamily& f) const {
        long long crossing = 0;
        for (auto [u, v] : f.edges) {
            bool in_u = a.bits() & element_bit(u);
            bool in_v = a.bits() & element_bit(v);
            crossing += (in_u != in_v) ? 1 : 0;
        }
        return Rational(crossing);
    }
    Rational operator()(const ScaledFamily& f) const { return f.factor * f.inner->evaluate(a); }
    Rational operator()(const NegatedFamily& f) const { return -f.inner->evaluate(a); }
};

} // namespace

SetFunction::SetFunction(GroundSet ground, Family family)
    : ground_(ground), family_(std::move(family)) {
    if (auto* cov = std::get_if<CoverageFamily>(&family_); cov && cov->element_words.empty())
        compile_coverage(*cov);
    std::visit(Validator{ground_}, family_);
}

SetFunction SetFunction::dense_table(GroundSet ground, std::vector<Rational> values) {
    return SetFunction(ground, DenseTable{std::move(values)});
}
SetFunction SetFunction::iou(GroundSet ground, SubsetMask y) {
    return SetFunction(ground, IouFamily{std::move(y)});
}
SetFunction SetFunction::neg_iou(GroundSet ground, SubsetMask y) {
    return SetFunction(ground, NegIouFamily{std::move(y)});
}
SetFunction SetFunction::cardinality(GroundSet ground) {
    return SetFunction(ground, CardinalityFamily{});
}
SetFunction SetFunction::truncation(GroundSet ground, long long cap) {
    return SetFunction(ground, TruncationFamily{cap});
}
SetFunction SetFunction::coverage(GroundSet ground, std::vector<std::vector<long long>> covers) {
    return SetFunction(ground, CoverageFamily{std::move(covers), {}, 0});
}
SetFunction SetFunction::graph_cut(GroundSet ground, std::vector<std::pair<int, int>> edges) {
    return SetFunction(ground, GraphCutFamily{std::move(edges)});
}
SetFunction SetFunction::scaled(SetFunction inner, Rational factor) {
    GroundSet ground = inner.ground();
    return SetFunction(ground,
                       ScaledFamily{std::make_shared<SetFunction>(std::move(inner)), std::move(factor)});
}
SetFunction SetFunction::negated(SetFunction inner) {
    GroundSet ground = inner.ground();
    return SetFunction(ground, NegatedFamily{std::make_shared<SetFunction>(std::move(inner))});
}

const char* SetFunction::kind_name() const noexcept {
    struct Namer {
        const char* operator()(const DenseTable&) const { return "table"; }
        const char* operator()(const IouFamily&) const { return "iou"; }
        const char* operator()(const NegIouFamily&) const { return "neg_iou"; }
        const char* operator()(const CardinalityFamily&) const { return "cardinality"; }
        const char* operator()(const TruncationFamily&) const { return "truncation"; }
        const char* operator()(const CoverageFamily&) const { return "coverage"; }
        const char* operator()(const GraphCutFamily&) const { return "graph_cut"; }
        const char* operator()(const ScaledFamily&) const { return "scaled"; }
        const char* operator()(const NegatedFamily&) const { return "negated"; }
    };
    return std::visit(Namer{}, family_);
}

Rational SetFunction::evaluate(const SubsetMask& a) const {
    if (!(a.ground() == ground_))
        throw Error("ground-set mismatch: function on m=" + std::to_string(ground_.size()) +
                    ", argument on m=" + std::to_string(a.ground().size()));
    return std::visit(Evaluator{a}, family_);
}

Rational marginal_gain(const SetFunction& f, const SubsetMask& a, int x) {
    if (!f.ground().contains_element(x))
        throw Error("marginal gain: element " + std::to_string(x) + " outside ground set");
    if (a.contains(x))
        throw Error("marginal gain: element " + std::to_string(x) + " already in the set");
    return f.evaluate(a.with(x)) - f.evaluate(a);
}

} // namespace setfn
