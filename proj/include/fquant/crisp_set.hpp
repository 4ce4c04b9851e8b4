#pragma once

#include "fquant/universe.hpp"

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fquant {

/// A crisp subset of a universe, stored as a packed bitmask. Value type:
/// copies are independent, comparisons are element-wise.
class CrispSet {
public:
    explicit CrispSet(Universe universe)
        : universe_(std::move(universe)), blocks_(block_count(universe_.size()), 0) {}

    /// Build from the low `universe.size()` bits of `mask` (universe size <= 64).
    static CrispSet from_mask(Universe universe, std::uint64_t mask) {
        if (universe.size() > 64) {
            throw std::invalid_argument("CrispSet::from_mask: universe larger than 64");
        }
        CrispSet s(std::move(universe));
        if (!s.blocks_.empty()) {
            s.blocks_[0] = mask & s.tail_mask();
        }
        return s;
    }

    static CrispSet full(Universe universe) {
        CrispSet s(std::move(universe));
        for (auto& b : s.blocks_) b = ~std::uint64_t{0};
        if (!s.blocks_.empty()) s.blocks_.back() &= s.last_block_mask();
        return s;
    }

    const Universe& universe() const { return universe_; }
    std::size_t universe_size() const { return universe_.size(); }

    bool contains(std::size_t i) const {
        check_index(i);
        return (blocks_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool on = true) {
        check_index(i);
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (on) {
            blocks_[i >> 6] |= bit;
        } else {
            blocks_[i >> 6] &= ~bit;
        }
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
        return c;
    }

    bool empty() const {
        for (auto b : blocks_) {
            if (b != 0) return false;
        }
        return true;
    }

    CrispSet complement() const {
        CrispSet r(universe_);
        for (std::size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = ~blocks_[k];
        if (!r.blocks_.empty()) r.blocks_.back() &= last_block_mask();
        return r;
    }

    friend CrispSet operator&(const CrispSet& a, const CrispSet& b) {
        require_same_universe(a.universe_, b.universe_, "CrispSet::operator&");
        CrispSet r(a.universe_);
        for (std::size_t k = 0; k < r.blocks_.size(); ++k) r.blocks_[k] = a.blocks_[k] & b.blocks_[k];
        return r;
    }

    friend CrispSet operator|(const CrispSet& a, const CrispSet& b) {
        require_same_universe(a.universe_, b.universe_, "CrispSet::operator|");
        CrispSet r(a.universe_);
        for (std::size_t k = 0; k < r.blocks_.size(); ++k) r.blocks_[k] = a.blocks_[k] | b.blocks_[k];
        return r;
    }

    static std::size_t intersection_count(const CrispSet& a, const CrispSet& b) {
        require_same_universe(a.universe_, b.universe_, "CrispSet::intersection_count");
        std::size_t c = 0;
        for (std::size_t k = 0; k < a.blocks_.size(); ++k) {
            c += static_cast<std::size_t>(std::popcount(a.blocks_[k] & b.blocks_[k]));
        }
        return c;
    }

    bool is_subset_of(const CrispSet& other) const {
        require_same_universe(universe_, other.universe_, "CrispSet::is_subset_of");
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            if (blocks_[k] & ~other.blocks_[k]) return false;
        }
        return true;
    }

    /// Packed bitmask (universe size <= 64).
    std::uint64_t to_mask() const {
        if (universe_.size() > 64) {
            throw std::logic_error("CrispSet::to_mask: universe larger than 64");
        }
        return blocks_.empty() ? 0 : blocks_[0];
    }

    friend bool operator==(const CrispSet& a, const CrispSet& b) {
        return a.universe_.size() == b.universe_.size() && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const CrispSet& a, const CrispSet& b) { return !(a == b); }

private:
    static std::size_t block_count(std::size_t m) { return (m + 63) / 64; }

    std::uint64_t last_block_mask() const {
        const std::size_t rem = universe_.size() & 63;
        return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
    }
    std::uint64_t tail_mask() const {
        return universe_.size() >= 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << universe_.size()) - 1;
    }

    void check_index(std::size_t i) const {
        if (i >= universe_.size()) {
            throw std::out_of_range("CrispSet: index " + std::to_string(i) +
                                    " out of range for universe of size " +
                                    std::to_string(universe_.size()));
        }
    }

    Universe universe_;
    std::vector<std::uint64_t> blocks_;
};

}  // namespace fquant
