#include "setfn/iou_analysis.hpp"

#include "setfn/error.hpp"

namespace setfn {

namespace {

void require_outside_params(const CaseOutsideParams& p) {
    if (p.ab_n <= 0) throw Error("ab_n must be positive");
    if (p.ab_n > p.a_d) throw Error("ab_n cannot exceed a_d (A n Y is inside A u Y)");
    if (p.a_d >= p.b_d) throw Error("a_d must be strictly smaller than b_d");
}

Rational marginal_difference(const SetFunction& f, const SubsetMask& a, const SubsetMask& b,
                             int x) {
    const std::uint64_t xbit = element_bit(x);
    const GroundSet ground = f.ground();
    Rational at_a = f.evaluate(SubsetMask(ground, a.bits() | xbit)) - f.evaluate(a);
    Rational at_b = f.evaluate(SubsetMask(ground, b.bits() | xbit)) - f.evaluate(b);
    return at_a - at_b;
}

} // namespace

Rational closed_form_r_outside(const CaseOutsideParams& p) {
    require_outside_params(p);
    Rational b_term(BigInt(1), BigInt(p.b_d) * (p.b_d + 1));
    Rational a_term(BigInt(1), BigInt(p.a_d) * (p.a_d + 1));
    return Rational(p.ab_n) * (b_term - a_term);
}

Rational closed_form_r_inside(long long a_d, long long b_d) {
    if (a_d <= 0) throw Error("a_d must be positive");
    if (a_d >= b_d) throw Error("a_d must be strictly smaller than b_d");
    return Rational(BigInt(1), BigInt(a_d)) - Rational(BigInt(1), BigInt(b_d));
}

Rational direct_r(const SubsetMask& y, const SubsetMask& a, const SubsetMask& b, int x,
                  bool allow_x_in_b) {
    if (!a.subset_of(b)) throw Error("direct R requires A to be a subset of B");
    if (!y.ground().contains_element(x))
        throw Error("element " + std::to_string(x) + " outside ground set");
    if (a.contains(x)) throw Error("direct R requires x outside A");
    if (!allow_x_in_b && b.contains(x)) throw Error("direct R requires x outside B");
    SetFunction f = SetFunction::iou(y.ground(), y);
    return marginal_difference(f, a, b, x);
}

unsigned long long enumerate_counterexamples(
    int m, CounterexampleCase kind, const std::function<bool(const CounterexampleConfig&)>& visit) {
    if (m < 3)
        throw Error("counterexample enumeration needs m >= 3: an element of A n Y, an element of "
                    "B \\ A, and x must be distinct");
    if (m > 12) throw Error("counterexample enumeration limited to m <= 12");
    const GroundSet ground(m);
    const std::uint64_t limit = ground.subset_count();
    unsigned long long visited = 0;

    for (std::uint64_t y = 1; y < limit; ++y) {
        const SetFunction f = SetFunction::iou(ground, SubsetMask(ground, y));
        for (std::uint64_t b = 0; b < limit; ++b) {
            const std::uint64_t shared = b & y; // forced A n Y
            if (shared == 0) continue;
            const std::uint64_t free_bits = b & ~y; // A may take any part of B \ Y
            const std::uint64_t x_pool = kind == CounterexampleCase::OutsideYB
                                             ? ~(y | b) & ground.universe_bits()
                                             : y & ~b;
            if (x_pool == 0) continue;
            const SubsetMask b_mask(ground, b);
            // Submasks of free_bits ascending; A = shared | c ascends with c.
            std::uint64_t c = 0;
            while (true) {
                if (c == free_bits) break; // A == B is not strict containment
                const std::uint64_t a = shared | c;
                const SubsetMask a_mask(ground, a);
                for (std::uint64_t rest = x_pool; rest != 0; rest &= rest - 1) {
                    const int x = std::countr_zero(rest) + 1;
                    CounterexampleConfig config{SubsetMask(ground, y),
                                                a_mask,
                                                b_mask,
                                                x,
                                                kind,
                                                marginal_difference(f, a_mask, b_mask, x)};
                    ++visited;
                    if (!visit(config)) return visited;
                }
                c = (c - free_bits) & free_bits;
            }
        }
    }
    return visited;
}

std::vector<CounterexampleConfig> collect_counterexamples(int m, CounterexampleCase kind,
                                                          std::size_t limit) {
    std::vector<CounterexampleConfig> out;
    if (limit == 0) return out;
    enumerate_counterexamples(m, kind, [&](const CounterexampleConfig& config) {
        out.push_back(config);
        return out.size() < limit;
    });
    return out;
}

bool realizable_outside(const CaseOutsideParams& p, int m) {
    require_outside_params(p);
    return m >= p.b_d + 1;
}

CounterexampleConfig realize_outside(const CaseOutsideParams& p, int m) {
    if (!realizable_outside(p, m))
        throw Error("parameters need a ground set with at least " + std::to_string(p.b_d + 1) +
                    " elements");
    const GroundSet ground(m);
    auto range_mask = [](long long lo, long long hi) { // {lo..hi}, 1-based inclusive
        std::uint64_t bits = 0;
        for (long long e = lo; e <= hi; ++e) bits |= element_bit(static_cast<int>(e));
        return bits;
    };
    SubsetMask y(ground, range_mask(1, p.a_d));
    SubsetMask a(ground, range_mask(1, p.ab_n));
    SubsetMask b(ground, a.bits() | range_mask(p.a_d + 1, p.b_d));
    const int x = static_cast<int>(p.b_d + 1);
    return CounterexampleConfig{y, a, b, x, CounterexampleCase::OutsideYB, direct_r(y, a, b, x)};
}

std::pair<SetFunction, ViolationCertificate> to_violation_certificate(
    const CounterexampleConfig& config) {
    const GroundSet ground = config.y.ground();
    SetFunction f = config.kind == CounterexampleCase::OutsideYB
                        ? SetFunction::iou(ground, config.y)
                        : SetFunction::neg_iou(ground, config.y);
    Rational lhs = marginal_gain(f, config.a, config.x);
    Rational rhs = marginal_gain(f, config.b, config.x);
    ViolationCertificate cert{CheckMode::Standard, config.a, config.b, config.x,
                              lhs,                 rhs,      lhs - rhs};
    return {std::move(f), std::move(cert)};
}

PropertyRefutation refute_property11(int m) {
    const GroundSet ground(m);
    const std::uint64_t limit = ground.subset_count();
    for (std::uint64_t y = 0; y < limit; ++y) {
        for (std::uint64_t a = 0; a < limit; ++a) {
            const long long n_a = std::popcount(y & ~a);
            // B strict submask of A, ascending.
            for (std::uint64_t b = 0; b != a; b = (b - a) & a) {
                const long long n_b = std::popcount(y & ~b);
                if (n_b > n_a)
                    return PropertyRefutation{SubsetMask(ground, y), SubsetMask(ground, a),
                                              SubsetMask(ground, b), n_a, n_b};
            }
        }
    }
    throw Error("no refutation witness found"); // unreachable for m >= 1
}

} // namespace setfn
