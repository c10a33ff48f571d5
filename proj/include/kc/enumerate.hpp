#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kc/blocks.hpp"
#include "kc/bound.hpp"
#include "kc/diagram.hpp"

namespace kc {

// Bulk kernels. Each has a serial reference implementation and an OpenMP
// variant; results use order-independent reductions so the two agree
// exactly. The parallel variants fall back to the serial path when built
// without OpenMP.

struct RoundTripReport {
    std::uint64_t vectors = 0;     // vectors enumerated
    std::uint64_t admissible = 0;  // admissible among them
    std::uint64_t failures = 0;    // reconstruct(params(v)) != v
    std::uint64_t checksum = 0;
    bool operator==(const RoundTripReport&) const = default;
};

// Exhaustive round-trip over all vectors with entry sum <= max_sum.
RoundTripReport roundtrip_admissible_serial(int max_sum);
RoundTripReport roundtrip_admissible_parallel(int max_sum);

struct CollisionPair {
    BlockVector a, b;
    bool found = false;
};

// Finds two distinct vectors with equal parameters where at least one is
// non-admissible, and verifies no admissible pair collides.
struct CollisionReport {
    CollisionPair example;
    std::uint64_t collision_classes = 0;
    std::uint64_t admissible_collisions = 0;  // must stay 0
};
CollisionReport param_collision_search(int max_sum);

struct IdentityReport {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::uint64_t checksum = 0;
    bool operator==(const IdentityReport&) const = default;
};

// kappa = t1+t2, eta = -x+z+t2, sigma = -x+y+t2 and eta = a+ + a- - Iv0 on
// pseudorandom vectors with entries in [0, max_entry].
IdentityReport identity_suite_serial(std::uint64_t n, std::uint64_t seed, int max_entry);
IdentityReport identity_suite_parallel(std::uint64_t n, std::uint64_t seed, int max_entry);

struct SweepReport {
    std::uint64_t tuples = 0;
    std::uint64_t verdict_failures = 0;
    std::uint64_t crossing_sum_failures = 0;
    std::uint64_t face_identity_failures = 0;
    std::uint64_t checksum = 0;
    bool operator==(const SweepReport&) const = default;
};

// All unordered pairs (and optionally triples) over the fixture list:
// connected sums are built, the face identity checked, and the bound verdict
// evaluated with exact arithmetic.
struct SweepInput {
    std::vector<std::string> names;
    std::vector<int> crossing_numbers;
    std::vector<Diagram> diagrams;
};
SweepInput sweep_input_from_fixtures();

SweepReport bound_sweep_serial(const SweepInput& in, bool triples);
SweepReport bound_sweep_parallel(const SweepInput& in, bool triples);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace kc
