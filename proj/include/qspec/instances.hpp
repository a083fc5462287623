#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qspec/quantale.hpp"

namespace qspec {

/// Finite poset given by its points 0..n-1 and a list of below-relations;
/// consumers take the reflexive-transitive closure.
struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> below;
};

/// The ideals of Z/nZ: one element per divisor d of n (the ideal dZ_n),
/// ordered by reverse divisibility, with join gcd, meet lcm and product
/// gcd(d*e, n). The lattice-derived join/meet tables are cross-checked
/// against the divisor arithmetic. Throws ValidationError("BadModulus")
/// outside 2 <= n <= 10^6.
Quantale zn_ideals(long n);

/// Chain with k elements and multiplication = meet.
Quantale chain_frame(int k);

/// Powerset of k points, multiplication = intersection.
Quantale boolean_frame(int k);

/// Down-sets of a poset (at most 12 points) ordered by inclusion,
/// multiplication = intersection. Throws ValidationError("NotAPartialOrder")
/// when the closure of `below` has a two-way pair, "TooLarge" past 12 points.
Quantale downset_frame(const Poset& poset);

/// Componentwise order and multiplication on pairs. The prime elements of
/// the result are cross-checked against primes-in-one-slot-top-in-the-other.
/// Throws ValidationError("TooLarge") past kMaxElements.
Quantale product_quantale(const Quantale& a, const Quantale& b);

/// Seeded search for a quantale of the requested size: sample a random
/// bounded order, close it into a lattice, then rejection-sample
/// multiplication tables under the integrality envelope. Falls back to the
/// meet table on a distributive lattice; returns nullopt when the attempt
/// budget runs out. Deterministic per (seed, size).
std::optional<Quantale> random_quantale(std::uint64_t seed, int size);

/// All posets with 1..max_points points (max 5), one representative per
/// isomorphism class. The per-size class counts are checked against the
/// known census and any disagreement throws InternalCheckError.
std::vector<Poset> all_posets_up_to(int max_points);

}  // namespace qspec
