#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace qspec {

/// Dense element index into a finite lattice.
using Elem = int;

/// Subset of lattice elements as a bitmask.
using ElemSet = boost::dynamic_bitset<>;

/// Hard size guard: exhaustive O(n^2)/O(n^3) checks stay at desk scale.
inline constexpr int kMaxElements = 4096;

inline constexpr std::size_t kNoElem = ElemSet::npos;

/// Finite bounded lattice. Immutable once built; all queries are table or
/// bitmask lookups. Construction goes through from_order, which validates the
/// order relation, locates the bounds, and derives the join/meet tables,
/// throwing ValidationError (NotAPartialOrder, NoBoundedStructure, JoinNotLUB,
/// MeetNotGLB, TooLarge) on the first violation.
class Lattice {
public:
    /// Build from an order relation given as up-set rows: leq[a].test(b) iff
    /// a <= b. Labels default to "e0", "e1", ...
    static Lattice from_order(std::vector<ElemSet> leq,
                              std::vector<std::string> labels = {});

    int size() const noexcept { return n_; }
    bool leq(Elem a, Elem b) const { return up_[a].test(b); }
    Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
    Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
    Elem bottom() const noexcept { return bottom_; }
    Elem top() const noexcept { return top_; }

    /// {x : x <= a}
    const ElemSet& down_set(Elem a) const { return down_[a]; }
    /// {x : a <= x}
    const ElemSet& up_set(Elem a) const { return up_[a]; }

    /// Least upper bound of a subset; bottom on the empty set.
    Elem join_of(const ElemSet& s) const;
    /// Greatest lower bound of a subset; top on the empty set.
    Elem meet_of(const ElemSet& s) const;

    const std::string& label(Elem a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Elements with exactly one lower cover (excludes bottom). Every element
    /// is a join of these; several exhaustive checks quantify over them only.
    const std::vector<Elem>& join_irreducibles() const noexcept { return ji_; }

    /// x&(y|z) == (x&y)|(x&z) for all triples. On failure and when witness is
    /// non-null, stores a violating triple description.
    bool distributive(std::string* witness = nullptr) const;

    /// Elements having some complement (x|y = top, x&y = bottom).
    ElemSet complemented() const;

    /// (lower, upper) covering pairs, for diagram output.
    std::vector<std::pair<Elem, Elem>> cover_pairs() const;

    /// All-elements mask / empty mask helpers.
    ElemSet full_set() const { return ElemSet(n_).set(); }
    ElemSet empty_set() const { return ElemSet(n_); }

    std::span<const std::uint16_t> meet_table() const noexcept {
        return {meet_.data(), meet_.size()};
    }

private:
    Lattice() = default;
    std::size_t idx(Elem a, Elem b) const { return std::size_t(a) * n_ + b; }

    int n_ = 0;
    Elem bottom_ = 0, top_ = 0;
    std::vector<ElemSet> up_, down_;
    std::vector<std::uint16_t> join_, meet_;
    std::vector<Elem> ji_;
    std::vector<std::string> labels_;
};

/// Elements p != top such that table[a][b] <= p forces a <= p or b <= p,
/// for a commutative monotone product given as an n*n index table.
/// With the meet table this yields the prime elements of the lattice.
std::vector<Elem> prime_elements(const Lattice& lat,
                                 std::span<const std::uint16_t> table);

/// Prime elements with respect to meet, i.e. generators of the prime ideals.
std::vector<Elem> meet_primes(const Lattice& lat);

/// Format helper for witnesses: "label(a), label(b), ...".
std::string describe_elems(const Lattice& lat, std::initializer_list<Elem> es);

}  // namespace qspec
