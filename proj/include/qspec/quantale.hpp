#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qspec/lattice.hpp"

namespace qspec {

/// Finite integral commutative quantale: a bounded lattice plus a
/// multiplication table. The constructor performs shape checks only;
/// validate_quantale runs the exhaustive law checks and is called by every
/// generator and by the document loader before an instance is used.
class Quantale {
public:
    Quantale(Lattice lat, std::vector<std::uint16_t> mul);

    const Lattice& lattice() const noexcept { return lat_; }
    int size() const noexcept { return lat_.size(); }

    Elem mul(Elem a, Elem b) const {
        return mul_[std::size_t(a) * lat_.size() + b];
    }

    /// a^k for k >= 1; throws ValidationError("InvalidExponent") otherwise.
    Elem power(Elem a, int k) const;

    /// The stable value of the descending chain a >= a^2 >= ...
    Elem power_limit(Elem a) const { return power_limit_[a]; }

    /// Least k with a^k == a^(k+1). Decides every "for some n >= 1" power
    /// quantifier: a^n hits a property for some n iff power_limit does, for
    /// upward-closed properties along the chain.
    int stabilization_index(Elem a) const { return stab_index_[a]; }

    /// a -> b, the largest x with a*x <= b. Certifies the adjunction
    /// c <= a->b iff a*c <= b on every call (InternalCheckError on failure;
    /// cannot fire on a validated quantale).
    Elem residual(Elem a, Elem b) const;

    /// a -> bottom, precomputed.
    Elem negation(Elem a) const { return negation_[a]; }

    bool is_frame() const;

    std::span<const std::uint16_t> mul_table() const noexcept {
        return {mul_.data(), mul_.size()};
    }

    // Lattice passthroughs.
    bool leq(Elem a, Elem b) const { return lat_.leq(a, b); }
    Elem join(Elem a, Elem b) const { return lat_.join(a, b); }
    Elem meet(Elem a, Elem b) const { return lat_.meet(a, b); }
    Elem bottom() const noexcept { return lat_.bottom(); }
    Elem top() const noexcept { return lat_.top(); }
    const std::string& label(Elem a) const { return lat_.label(a); }

private:
    Lattice lat_;
    std::vector<std::uint16_t> mul_;
    std::vector<Elem> power_limit_;
    std::vector<int> stab_index_;
    std::vector<Elem> negation_;
};

/// Exhaustive law check: commutativity, integrality, bottom annihilation,
/// join-distributivity, associativity. Throws ValidationError naming the
/// first violated law (NotCommutative, NotIntegral, NotJoinDistributive,
/// NotAssociative) with a witness tuple.
void validate_quantale(const Quantale& q);

/// Quick boolean form of the same checks, for rejection sampling.
bool satisfies_quantale_laws(const Lattice& lat,
                             const std::vector<std::uint16_t>& mul);

/// mul = meet on a distributive lattice; validated.
Quantale frame_quantale(Lattice lat);

/// Complemented elements, certified along two routes that must agree:
/// raw complement search in the lattice, and join(a, negation(a)) == top.
/// Disagreement throws InternalCheckError("BooleanTestMismatch").
ElemSet boolean_center(const Quantale& q);

/// The complement of a central element (it is unique and equals negation(e));
/// certified, InternalCheckError on failure.
Elem center_complement(const Quantale& q, Elem e);

/// Sub-quantale on {x : x >= floor} with product x*y rejoined above floor.
/// Carries both-way index maps for cross-quantale comparisons. Construction
/// validates the interval and certifies that x -> join(x, floor) is a
/// quantale morphism onto it (InternalCheckError("MorphismViolation")).
struct IntervalQuantale {
    Elem floor;
    ElemSet carrier;                // parent-index mask
    std::vector<Elem> to_parent;    // interval index -> parent index
    std::vector<Elem> from_parent;  // parent index -> interval index, -1 outside
    Quantale q;
};

IntervalQuantale interval_quantale(const Quantale& base, Elem a);

/// Image of a parent element under the canonical morphism onto the interval.
Elem raise_into(const Quantale& base, const IntervalQuantale& iv, Elem x);

// Per-instance law batteries. Each returns false and fills witness (when
// non-null) with the first failing tuple; used by the property-test harness.

/// Laws for comaximal pairs: a|b = top forces ab = a&b; stabilized powers of
/// a comaximal pair stay comaximal; two covers of a merge multiplicatively;
/// absorption join(a, bc) == c when a <= c and a|b = top.
bool check_comaximal_laws(const Quantale& q, std::string* witness = nullptr);

/// Residuation: a*b <= a&b everywhere, and (on instances small enough for the
/// cubic sweep) the adjunction on all pairs.
bool check_residuation_laws(const Quantale& q, std::string* witness = nullptr);

/// Boolean-center laws: central elements meet multiplicatively, residuals
/// from the center split as join(negation(e), a), orthogonal comaximal pairs
/// are central (directly and through stabilized powers), central elements
/// distribute over meets, and complements in the center are unique.
bool check_center_laws(const Quantale& q, const ElemSet& center,
                       std::string* witness = nullptr);

}  // namespace qspec
