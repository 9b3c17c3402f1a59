#pragma once

#include <array>
#include <string>

namespace braidberry {

/// One of the three invariant 3-dim sectors of C^3 (x) C^3, which is also
/// the label of the matching coupled SU(3) realization.
///
///   k = 1: |00>, |11>, |22>
///   k = 2: |01>, |12>, |20>
///   k = 3: |02>, |10>, |21>
class SubsystemId {
public:
    /// Throws DomainError unless k is 1, 2 or 3.
    explicit SubsystemId(int k);

    int value() const { return k_; }
    std::size_t index() const { return static_cast<std::size_t>(k_ - 1); }

    /// Composite basis indices (3i + j) of the sector, in the listed order.
    std::array<int, 3> basis() const;

    static std::array<SubsystemId, 3> all();

    friend bool operator==(SubsystemId a, SubsystemId b) { return a.k_ == b.k_; }

private:
    int k_;
};

/// Composite index of |i j> for two qutrits.
constexpr int pair_index(int i, int j) { return 3 * i + j; }

std::string pair_label(int index);

}  // namespace braidberry
