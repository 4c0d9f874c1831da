#include "setfn/submod_check.hpp"

#include <atomic>
#include <thread>
#include <tuple>

#include "setfn/error.hpp"

namespace setfn {

namespace {

// Evaluate through a precomputed table when it fits comfortably in memory;
// the exhaustive scans revisit the same masks many times.
class ValueCache {
public:
    explicit ValueCache(const SetFunction& f) : f_(f), ground_(f.ground()) {
        if (ground_.size() <= 16) {
            table_.reserve(ground_.subset_count());
            for (std::uint64_t mask = 0; mask < ground_.subset_count(); ++mask)
                table_.push_back(f_.evaluate(SubsetMask(ground_, mask)));
        }
    }

    Rational operator()(std::uint64_t mask) const {
        if (!table_.empty()) return table_[mask];
        return f_.evaluate(SubsetMask(ground_, mask));
    }

private:
    const SetFunction& f_;
    GroundSet ground_;
    std::vector<Rational> table_;
};

struct RawViolation {
    std::uint64_t b = 0;
    std::uint64_t a = 0;
    int x = 0; // 0 means absent (Lattice)
    Rational lhs;
    Rational rhs;
};

std::tuple<std::uint64_t, std::uint64_t, int> order_key(const RawViolation& v) {
    return {v.b, v.a, v.x};
}

// Scans B = first, first+stride, ... in ascending order and returns the first
// violation, which is the smallest one within this worker's residue class.
// `bound` lets workers skip outer masks that can no longer win.
std::optional<RawViolation> scan_marginal(const ValueCache& value, int m, bool x_in_b_allowed,
                                          std::uint64_t first, std::uint64_t stride,
                                          std::atomic<std::uint64_t>& bound) {
    const std::uint64_t limit = std::uint64_t{1} << m;
    std::vector<Rational> gain_at_b(static_cast<std::size_t>(m) + 1);
    for (std::uint64_t b = first; b < limit; b += stride) {
        if (b >= bound.load(std::memory_order_relaxed)) break;
        const Rational fb = value(b);
        for (int x = 1; x <= m; ++x) {
            const std::uint64_t xbit = element_bit(x);
            if (x_in_b_allowed || !(b & xbit)) gain_at_b[x] = value(b | xbit) - fb;
        }
        // Submasks of b in increasing numeric order.
        std::uint64_t a = 0;
        while (true) {
            const Rational fa = value(a);
            for (int x = 1; x <= m; ++x) {
                const std::uint64_t xbit = element_bit(x);
                if (a & xbit) continue;
                if (!x_in_b_allowed && (b & xbit)) continue;
                Rational lhs = value(a | xbit) - fa;
                if (lhs < gain_at_b[x]) {
                    bound.store(b, std::memory_order_relaxed);
                    return RawViolation{b, a, x, std::move(lhs), gain_at_b[x]};
                }
            }
            if (a == b) break;
            a = (a - b) & b;
        }
    }
    return std::nullopt;
}

std::optional<RawViolation> scan_lattice(const ValueCache& value, int m, std::uint64_t first,
                                         std::uint64_t stride, std::atomic<std::uint64_t>& bound) {
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t b = first; b < limit; b += stride) {
        if (b >= bound.load(std::memory_order_relaxed)) break;
        const Rational fb = value(b);
        for (std::uint64_t a = 0; a < b; ++a) {
            Rational lhs = value(a | b) + value(a & b);
            Rational rhs = value(a) + fb;
            if (lhs > rhs) {
                bound.store(b, std::memory_order_relaxed);
                return RawViolation{b, a, 0, std::move(lhs), std::move(rhs)};
            }
        }
    }
    return std::nullopt;
}

std::optional<RawViolation> run_workers(const ValueCache& value, int m, CheckMode mode,
                                        int workers) {
    std::atomic<std::uint64_t> bound{std::uint64_t{1} << m};
    auto scan_one = [&](std::uint64_t first, std::uint64_t stride) {
        if (mode == CheckMode::Lattice) return scan_lattice(value, m, first, stride, bound);
        return scan_marginal(value, m, mode == CheckMode::PaperLiteral, first, stride, bound);
    };
    if (workers == 1) return scan_one(0, 1);

    std::vector<std::optional<RawViolation>> found(static_cast<std::size_t>(workers));
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                found[static_cast<std::size_t>(w)] =
                    scan_one(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(workers));
            });
    }
    std::optional<RawViolation> best;
    for (auto& candidate : found)
        if (candidate && (!best || order_key(*candidate) < order_key(*best))) best = candidate;
    return best;
}

void require_checkable(const SetFunction& f, int workers) {
    if (f.ground().size() > kMaxExhaustiveM)
        throw Error("exhaustive check limited to m <= " + std::to_string(kMaxExhaustiveM) +
                    ", got m = " + std::to_string(f.ground().size()));
    if (workers < 1) throw Error("worker count must be at least 1");
}

} // namespace

std::optional<ViolationCertificate> check_submodular(const SetFunction& f, CheckMode mode,
                                                     const CheckOptions& options) {
    require_checkable(f, options.workers);
    const GroundSet ground = f.ground();
    const ValueCache value(f);
    auto raw = run_workers(value, ground.size(), mode, options.workers);
    if (!raw) return std::nullopt;
    ViolationCertificate cert{mode,
                              SubsetMask(ground, raw->a),
                              SubsetMask(ground, raw->b),
                              mode == CheckMode::Lattice ? std::nullopt : std::optional<int>(raw->x),
                              raw->lhs,
                              raw->rhs,
                              raw->lhs - raw->rhs};
    return cert;
}

bool verify_certificate(const SetFunction& f, const ViolationCertificate& cert) {
    const GroundSet ground = f.ground();
    if (!(cert.a.ground() == ground) || !(cert.b.ground() == ground))
        throw Error("certificate ground set does not match the function");

    Rational lhs, rhs;
    if (cert.mode == CheckMode::Lattice) {
        if (cert.x.has_value()) throw Error("lattice certificate must not carry an element x");
        lhs = f.evaluate(cert.a | cert.b) + f.evaluate(cert.a & cert.b);
        rhs = f.evaluate(cert.a) + f.evaluate(cert.b);
        if (!(lhs == cert.lhs && rhs == cert.rhs && cert.gap == cert.lhs - cert.rhs)) return false;
        return lhs > rhs;
    }

    if (!cert.x.has_value()) throw Error("marginal certificate requires an element x");
    const int x = *cert.x;
    if (!ground.contains_element(x)) throw Error("certificate element x outside ground set");
    if (!cert.a.subset_of(cert.b)) throw Error("certificate requires A to be a subset of B");
    if (cert.a.contains(x)) throw Error("certificate element x must lie outside A");
    if (cert.mode == CheckMode::Standard && cert.b.contains(x))
        throw Error("standard-mode certificate element x must lie outside B");

    lhs = f.evaluate(cert.a.with(x)) - f.evaluate(cert.a);
    const SubsetMask b_with_x = cert.b.contains(x) ? cert.b : cert.b.with(x);
    rhs = f.evaluate(b_with_x) - f.evaluate(cert.b);
    if (!(lhs == cert.lhs && rhs == cert.rhs && cert.gap == cert.lhs - cert.rhs)) return false;
    return lhs < rhs;
}

std::optional<MonotoneViolation> check_monotone(const SetFunction& f) {
    require_checkable(f, 1);
    const GroundSet ground = f.ground();
    const ValueCache value(f);
    const int m = ground.size();
    for (std::uint64_t a = 0; a < ground.subset_count(); ++a) {
        const Rational fa = value(a);
        for (int x = 1; x <= m; ++x) {
            const std::uint64_t xbit = element_bit(x);
            if (a & xbit) continue;
            Rational gap = value(a | xbit) - fa;
            if (gap < 0) return MonotoneViolation{SubsetMask(ground, a), x, std::move(gap)};
        }
    }
    return std::nullopt;
}

} // namespace setfn
