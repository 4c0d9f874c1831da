#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "setfn/error.hpp"

namespace setfn {

/// The ground set {1..m}. Subsets are single-word bitmasks, so m <= 63.
class GroundSet {
public:
    explicit GroundSet(int element_count) : m_(element_count) {
        if (m_ < 1 || m_ > 63)
            throw Error("ground set size must be in [1,63], got " + std::to_string(m_));
    }

    int size() const noexcept { return m_; }
    std::uint64_t universe_bits() const noexcept { return (std::uint64_t{1} << m_) - 1; }
    std::uint64_t subset_count() const noexcept { return std::uint64_t{1} << m_; }

    bool contains_element(int element) const noexcept { return element >= 1 && element <= m_; }

    friend bool operator==(GroundSet, GroundSet) = default;

private:
    int m_;
};

/// Element i is present iff bit i-1 is set.
inline std::uint64_t element_bit(int element) noexcept {
    return std::uint64_t{1} << (element - 1);
}

/// A subset of a ground set, as a bitmask plus the ground-set size it lives
/// in. Operations on masks from different ground sets throw.
class SubsetMask {
public:
    SubsetMask(GroundSet ground, std::uint64_t bits) : ground_(ground), bits_(bits) {
        if (bits & ~ground.universe_bits())
            throw Error("subset mask has bits outside the ground set");
    }

    static SubsetMask empty(GroundSet ground) { return SubsetMask(ground, 0); }
    static SubsetMask full(GroundSet ground) { return SubsetMask(ground, ground.universe_bits()); }

    static SubsetMask of_elements(GroundSet ground, std::span<const int> elements) {
        std::uint64_t bits = 0;
        for (int e : elements) {
            if (!ground.contains_element(e))
                throw Error("element " + std::to_string(e) + " outside ground set of size " +
                            std::to_string(ground.size()));
            bits |= element_bit(e);
        }
        return SubsetMask(ground, bits);
    }

    static SubsetMask of_elements(GroundSet ground, std::initializer_list<int> elements) {
        return of_elements(ground, std::span<const int>(elements.begin(), elements.size()));
    }

    GroundSet ground() const noexcept { return ground_; }
    std::uint64_t bits() const noexcept { return bits_; }
    int cardinality() const noexcept { return std::popcount(bits_); }
    bool is_empty() const noexcept { return bits_ == 0; }

    bool contains(int element) const {
        require_element(element);
        return bits_ & element_bit(element);
    }

    SubsetMask with(int element) const {
        require_element(element);
        return SubsetMask(ground_, bits_ | element_bit(element));
    }

    SubsetMask without(int element) const {
        require_element(element);
        return SubsetMask(ground_, bits_ & ~element_bit(element));
    }

    bool subset_of(const SubsetMask& other) const {
        require_same_ground(other);
        return (bits_ & ~other.bits_) == 0;
    }

    friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
        a.require_same_ground(b);
        return SubsetMask(a.ground_, a.bits_ | b.bits_);
    }
    friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
        a.require_same_ground(b);
        return SubsetMask(a.ground_, a.bits_ & b.bits_);
    }
    /// Set difference a \ b.
    friend SubsetMask operator-(const SubsetMask& a, const SubsetMask& b) {
        a.require_same_ground(b);
        return SubsetMask(a.ground_, a.bits_ & ~b.bits_);
    }
    SubsetMask complement() const { return SubsetMask(ground_, ~bits_ & ground_.universe_bits()); }

    friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
        return a.ground_ == b.ground_ && a.bits_ == b.bits_;
    }

    /// Elements in ascending order.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(cardinality()));
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
            out.push_back(std::countr_zero(rest) + 1);
        return out;
    }

    /// "{}" or "{1,3}".
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) out += ',';
            out += std::to_string(e);
            first = false;
        }
        out += '}';
        return out;
    }

private:
    void require_element(int element) const {
        if (!ground_.contains_element(element))
            throw Error("element " + std::to_string(element) + " outside ground set of size " +
                        std::to_string(ground_.size()));
    }
    void require_same_ground(const SubsetMask& other) const {
        if (!(ground_ == other.ground_)) throw Error("ground-set mismatch between subset masks");
    }

    GroundSet ground_;
    std::uint64_t bits_;
};

} // namespace setfn
