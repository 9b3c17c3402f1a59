#include "braidberry/subsystem.hpp"

#include "braidberry/errors.hpp"

namespace braidberry {

SubsystemId::SubsystemId(int k) : k_(k) {
    if (k < 1 || k > 3) throw DomainError("subsystem index must be 1, 2 or 3, got " + std::to_string(k));
}

std::array<int, 3> SubsystemId::basis() const {
    switch (k_) {
        case 1: return {pair_index(0, 0), pair_index(1, 1), pair_index(2, 2)};
        case 2: return {pair_index(0, 1), pair_index(1, 2), pair_index(2, 0)};
        default: return {pair_index(0, 2), pair_index(1, 0), pair_index(2, 1)};
    }
}

std::array<SubsystemId, 3> SubsystemId::all() { return {SubsystemId(1), SubsystemId(2), SubsystemId(3)}; }

std::string pair_label(int index) {
    return "|" + std::to_string(index / 3) + std::to_string(index % 3) + ">";
}

}  // namespace braidberry
