#include "setfn/lovasz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "setfn/error.hpp"

namespace setfn {

namespace {

void require_point(const SetFunction& f, const ExtensionPoint& w) {
    if (w.size() != static_cast<std::size_t>(f.ground().size()))
        throw Error("extension point has " + std::to_string(w.size()) + " coordinates, expected " +
                    std::to_string(f.ground().size()));
    for (double c : w)
        if (!std::isfinite(c)) throw Error("extension point has a non-finite coordinate");
}

void require_zero_at_empty(const SetFunction& f) {
    if (f.evaluate(SubsetMask::empty(f.ground())) != 0)
        throw Error("Lovasz extension requires f({}) = 0; normalize the table first");
}

std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based draw in [0,1): coordinate `coord` of side `side` (0 = u,
// 1 = v) of random pair `sample`. Independent of evaluation order.
double unit_coordinate(std::uint64_t seed, std::uint64_t sample, int side, int coord) {
    std::uint64_t h = splitmix(seed);
    h = splitmix(h ^ sample);
    h = splitmix(h ^ ((std::uint64_t{static_cast<std::uint64_t>(side)} << 32) |
                      static_cast<std::uint64_t>(coord)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct Deficit {
    double le_u;
    double le_v;
    double le_mid;
    double deficit;
};

Deficit midpoint_deficit(const SetFunction& f, const ExtensionPoint& u, const ExtensionPoint& v) {
    ExtensionPoint mid(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) mid[i] = (u[i] + v[i]) / 2.0;
    const double le_u = lovasz_evaluate(f, u).value;
    const double le_v = lovasz_evaluate(f, v).value;
    const double le_mid = lovasz_evaluate(f, mid).value;
    return {le_u, le_v, le_mid, le_mid - (le_u + le_v) / 2.0};
}

} // namespace

ExtensionPoint indicator_vector(const SubsetMask& s) {
    ExtensionPoint w(static_cast<std::size_t>(s.ground().size()), 0.0);
    for (int e : s.elements()) w[static_cast<std::size_t>(e - 1)] = 1.0;
    return w;
}

ExtensionEvaluation lovasz_evaluate(const SetFunction& f, const ExtensionPoint& w) {
    require_point(f, w);
    require_zero_at_empty(f);
    const GroundSet ground = f.ground();
    const int m = ground.size();

    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        double wl = w[static_cast<std::size_t>(lhs - 1)];
        double wr = w[static_cast<std::size_t>(rhs - 1)];
        if (wl != wr) return wl > wr;
        return lhs < rhs;
    });

    ExtensionEvaluation out;
    out.chain.reserve(static_cast<std::size_t>(m));
    out.value = 0.0;
    std::uint64_t prefix_bits = 0;
    Rational previous(0);
    for (int element : order) {
        prefix_bits |= element_bit(element);
        SubsetMask prefix(ground, prefix_bits);
        Rational current = f.evaluate(prefix);
        out.value += w[static_cast<std::size_t>(element - 1)] * to_double(current - previous);
        out.chain.push_back(ChainStep{element, prefix, current});
        previous = std::move(current);
    }
    return out;
}

std::optional<ConvexityWitness> midpoint_probe(const SetFunction& f, const ExtensionPoint& u,
                                               const ExtensionPoint& v, double tol) {
    require_point(f, u);
    require_point(f, v);
    Deficit d = midpoint_deficit(f, u, v);
    if (!(d.deficit > tol)) return std::nullopt;
    return ConvexityWitness{u, v, d.le_u, d.le_v, d.le_mid, d.deficit};
}

std::optional<ConvexityWitness> probe_convexity(const SetFunction& f, const ProbeOptions& options) {
    if (options.samples < 0) throw Error("sample count must be nonnegative");
    if (options.workers < 1) throw Error("worker count must be at least 1");
    require_zero_at_empty(f);
    const GroundSet ground = f.ground();
    const int m = ground.size();

    // Lattice violations surface exactly at indicator pairs, so sweep them
    // all while that is affordable.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sweep;
    if (m <= 8) {
        sweep.reserve((ground.subset_count() * (ground.subset_count() - 1)) / 2);
        for (std::uint64_t i = 0; i < ground.subset_count(); ++i)
            for (std::uint64_t j = i + 1; j < ground.subset_count(); ++j) sweep.emplace_back(i, j);
    }
    const long long sweep_count = static_cast<long long>(sweep.size());
    const long long total = sweep_count + options.samples;

    auto pair_at = [&](long long index) -> std::pair<ExtensionPoint, ExtensionPoint> {
        if (index < sweep_count) {
            const auto& [i, j] = sweep[static_cast<std::size_t>(index)];
            return {indicator_vector(SubsetMask(ground, i)), indicator_vector(SubsetMask(ground, j))};
        }
        const auto sample = static_cast<std::uint64_t>(index - sweep_count);
        ExtensionPoint u(static_cast<std::size_t>(m));
        ExtensionPoint v(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c) {
            u[static_cast<std::size_t>(c)] = unit_coordinate(options.seed, sample, 0, c);
            v[static_cast<std::size_t>(c)] = unit_coordinate(options.seed, sample, 1, c);
        }
        return {std::move(u), std::move(v)};
    };

    struct Best {
        double deficit = 0.0;
        long long index = -1;
    };
    auto scan = [&](long long first, long long stride) {
        Best best;
        for (long long g = first; g < total; g += stride) {
            auto [u, v] = pair_at(g);
            Deficit d = midpoint_deficit(f, u, v);
            if (d.deficit > options.tol && (best.index < 0 || d.deficit > best.deficit))
                best = Best{d.deficit, g};
        }
        return best;
    };

    Best best;
    if (options.workers == 1 || total <= 1) {
        best = scan(0, 1);
    } else {
        std::vector<Best> found(static_cast<std::size_t>(options.workers));
        {
            std::vector<std::jthread> pool;
            pool.reserve(found.size());
            for (int w = 0; w < options.workers; ++w)
                pool.emplace_back([&, w] { found[static_cast<std::size_t>(w)] = scan(w, options.workers); });
        }
        for (const Best& candidate : found) {
            if (candidate.index < 0) continue;
            if (best.index < 0 || candidate.deficit > best.deficit ||
                (candidate.deficit == best.deficit && candidate.index < best.index))
                best = candidate;
        }
    }

    if (best.index < 0) return std::nullopt;
    auto [u, v] = pair_at(best.index);
    Deficit d = midpoint_deficit(f, u, v);
    ConvexityWitness witness{std::move(u), std::move(v), d.le_u, d.le_v, d.le_mid, d.deficit};
    witness.source =
        best.index < sweep_count ? WitnessSource::IndicatorSweep : WitnessSource::Random;
    witness.sample_index = best.index;
    return witness;
}

ConvexityWitness witness_from_lattice_violation(const SetFunction& f,
                                                const ViolationCertificate& cert) {
    if (cert.mode != CheckMode::Lattice)
        throw Error("convexity bridge requires a lattice-mode certificate");
    if (!verify_certificate(f, cert))
        throw Error("certificate fails verification against the function");
    ExtensionPoint u = indicator_vector(cert.a);
    ExtensionPoint v = indicator_vector(cert.b);
    Deficit d = midpoint_deficit(f, u, v);
    ConvexityWitness witness{std::move(u), std::move(v), d.le_u, d.le_v, d.le_mid, d.deficit};
    witness.source = WitnessSource::LatticeBridge;
    return witness;
}

} // namespace setfn
