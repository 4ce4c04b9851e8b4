#pragma once

#include "fquant/errors.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fquant {

/// A finite base set. Elements are identified by index 0..size-1 and may
/// carry optional display labels. Copies are cheap (labels are shared).
///
/// The empty universe (size 0) is permitted as a guarded degenerate input:
/// the representative of the empty fuzzy set is the empty set with
/// probability 1, so conventions like "1 if the restriction is empty"
/// stay expressible.
class Universe {
public:
    Universe() = default;

    explicit Universe(std::size_t size) : size_(size) {}

    Universe(std::size_t size, std::vector<std::string> labels) : size_(size) {
        if (labels.size() != size) {
            throw std::invalid_argument("Universe: expected " + std::to_string(size) +
                                        " labels, got " + std::to_string(labels.size()));
        }
        std::unordered_set<std::string> seen;
        for (const auto& l : labels) {
            if (!seen.insert(l).second) {
                throw std::invalid_argument("Universe: duplicate label \"" + l + "\"");
            }
        }
        labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    }

    std::size_t size() const { return size_; }
    bool has_labels() const { return labels_ != nullptr; }

    const std::string& label(std::size_t i) const {
        if (!labels_ || i >= size_) {
            throw std::out_of_range("Universe::label: index " + std::to_string(i));
        }
        return (*labels_)[i];
    }

    const std::vector<std::string>* labels() const { return labels_ ? labels_.get() : nullptr; }

    friend bool operator==(const Universe& a, const Universe& b) {
        if (a.size_ != b.size_) return false;
        if (a.labels_ == b.labels_) return true;
        if (!a.labels_ || !b.labels_) return true;  // unlabeled matches anything of equal size
        return *a.labels_ == *b.labels_;
    }
    friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

private:
    std::size_t size_ = 0;
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Throws UniverseMismatchError unless both universes have the same size.
inline void require_same_universe(const Universe& a, const Universe& b, const char* where) {
    if (a.size() != b.size()) {
        throw UniverseMismatchError(std::string(where) + ": universe sizes differ (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
}

}  // namespace fquant
