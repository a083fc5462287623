#include "qspec/lattice.hpp"

#include <algorithm>
#include <limits>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

std::string pair_str(const std::vector<std::string>& labels, Elem a, Elem b) {
    return labels[a] + ", " + labels[b];
}

}  // namespace

Lattice Lattice::from_order(std::vector<ElemSet> leq,
                            std::vector<std::string> labels) {
    const int n = static_cast<int>(leq.size());
    if (n < 1) throw ValidationError("NoBoundedStructure", "empty carrier");
    if (n > kMaxElements)
        throw ValidationError("TooLarge", std::to_string(n) + " elements exceeds the " +
                                              std::to_string(kMaxElements) + " cap");
    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != n)
        throw ValidationError("BadLabels", "label count does not match element count");

    for (const auto& row : leq)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("NotAPartialOrder", "relation rows are not n-wide");

    Lattice lat;
    lat.n_ = n;
    lat.up_ = std::move(leq);
    lat.labels_ = std::move(labels);
    lat.down_.assign(n, ElemSet(n));
    for (Elem a = 0; a < n; ++a)
        for (std::size_t b = lat.up_[a].find_first(); b != kNoElem;
             b = lat.up_[a].find_next(b))
            lat.down_[b].set(a);

    for (Elem a = 0; a < n; ++a) {
        if (!lat.up_[a].test(a))
            throw ValidationError("NotAPartialOrder", "not reflexive at " + lat.labels_[a]);
        ElemSet both = lat.up_[a] & lat.down_[a];
        if (both.count() != 1)
            throw ValidationError("NotAPartialOrder",
                                  "antisymmetry fails at " + lat.labels_[a]);
    }
    for (Elem a = 0; a < n; ++a)
        for (std::size_t b = lat.up_[a].find_first(); b != kNoElem;
             b = lat.up_[a].find_next(b))
            if (!lat.up_[b].is_subset_of(lat.up_[a]))
                throw ValidationError("NotAPartialOrder",
                                      "not transitive above " +
                                          pair_str(lat.labels_, a, static_cast<Elem>(b)));

    lat.bottom_ = lat.top_ = -1;
    for (Elem a = 0; a < n; ++a) {
        if (lat.up_[a].count() == static_cast<std::size_t>(n)) lat.bottom_ = a;
        if (lat.down_[a].count() == static_cast<std::size_t>(n)) lat.top_ = a;
    }
    if (lat.bottom_ < 0 || lat.top_ < 0)
        throw ValidationError("NoBoundedStructure", "missing bottom or top");

    std::vector<int> down_count(n), up_count(n);
    for (Elem a = 0; a < n; ++a) {
        down_count[a] = static_cast<int>(lat.down_[a].count());
        up_count[a] = static_cast<int>(lat.up_[a].count());
    }

    lat.join_.assign(std::size_t(n) * n, 0);
    lat.meet_.assign(std::size_t(n) * n, 0);
    ElemSet common(n);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = a; b < n; ++b) {
            common = lat.up_[a];
            common &= lat.up_[b];
            Elem cand = -1;
            int best = std::numeric_limits<int>::max();
            for (std::size_t x = common.find_first(); x != kNoElem;
                 x = common.find_next(x))
                if (down_count[x] < best) {
                    best = down_count[x];
                    cand = static_cast<Elem>(x);
                }
            if (cand < 0 || !common.is_subset_of(lat.up_[cand]))
                throw ValidationError("JoinNotLUB", pair_str(lat.labels_, a, b));
            lat.join_[lat.idx(a, b)] = lat.join_[lat.idx(b, a)] =
                static_cast<std::uint16_t>(cand);

            common = lat.down_[a];
            common &= lat.down_[b];
            cand = -1;
            best = std::numeric_limits<int>::max();
            for (std::size_t x = common.find_first(); x != kNoElem;
                 x = common.find_next(x))
                if (up_count[x] < best) {
                    best = up_count[x];
                    cand = static_cast<Elem>(x);
                }
            if (cand < 0 || !common.is_subset_of(lat.down_[cand]))
                throw ValidationError("MeetNotGLB", pair_str(lat.labels_, a, b));
            lat.meet_[lat.idx(a, b)] = lat.meet_[lat.idx(b, a)] =
                static_cast<std::uint16_t>(cand);
        }
    }

    ElemSet strict(n);
    for (Elem x = 0; x < n; ++x) {
        if (x == lat.bottom_) continue;
        strict = lat.down_[x];
        strict.reset(x);
        Elem t = -1;
        int best = -1;
        for (std::size_t y = strict.find_first(); y != kNoElem;
             y = strict.find_next(y))
            if (down_count[y] > best) {
                best = down_count[y];
                t = static_cast<Elem>(y);
            }
        if (t >= 0 && lat.down_[t] == strict) lat.ji_.push_back(x);
    }
    return lat;
}

Elem Lattice::join_of(const ElemSet& s) const {
    Elem r = bottom_;
    for (std::size_t x = s.find_first(); x != kNoElem; x = s.find_next(x))
        r = join(r, static_cast<Elem>(x));
    return r;
}

Elem Lattice::meet_of(const ElemSet& s) const {
    Elem r = top_;
    for (std::size_t x = s.find_first(); x != kNoElem; x = s.find_next(x))
        r = meet(r, static_cast<Elem>(x));
    return r;
}

bool Lattice::distributive(std::string* witness) const {
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            for (Elem j : ji_) {
                Elem lhs = meet(a, join(b, j));
                Elem rhs = join(meet(a, b), meet(a, j));
                if (lhs != rhs) {
                    if (witness)
                        *witness = "x=" + labels_[a] + ", y=" + labels_[b] +
                                   ", z=" + labels_[j];
                    return false;
                }
            }
    return true;
}

ElemSet Lattice::complemented() const {
    ElemSet out(n_);
    for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y)
            if (join(x, y) == top_ && meet(x, y) == bottom_) {
                out.set(x);
                break;
            }
    return out;
}

std::vector<std::pair<Elem, Elem>> Lattice::cover_pairs() const {
    std::vector<std::pair<Elem, Elem>> out;
    ElemSet strict(n_);
    for (Elem b = 0; b < n_; ++b) {
        strict = down_[b];
        strict.reset(b);
        for (std::size_t x = strict.find_first(); x != kNoElem;
             x = strict.find_next(x)) {
            ElemSet above = up_[x];
            above &= strict;
            if (above.count() == 1) out.emplace_back(static_cast<Elem>(x), b);
        }
    }
    return out;
}

std::vector<Elem> prime_elements(const Lattice& lat,
                                 std::span<const std::uint16_t> table) {
    const int n = lat.size();
    std::vector<Elem> out;
    ElemSet outside(n), scratch(n);
    std::vector<Elem> minimal;
    for (Elem p = 0; p < n; ++p) {
        if (p == lat.top()) continue;
        outside = lat.down_set(p);
        outside.flip();
        minimal.clear();
        for (std::size_t x = outside.find_first(); x != kNoElem;
             x = outside.find_next(x)) {
            scratch = lat.down_set(static_cast<Elem>(x));
            scratch &= outside;
            if (scratch.count() == 1) minimal.push_back(static_cast<Elem>(x));
        }
        // A product of elements outside the down-set of p can fall under p
        // only if some product of two minimal outside elements does.
        bool prime = true;
        for (std::size_t i = 0; i < minimal.size() && prime; ++i)
            for (std::size_t j = i; j < minimal.size(); ++j) {
                Elem prod = table[std::size_t(minimal[i]) * n + minimal[j]];
                if (!outside.test(prod)) {
                    prime = false;
                    break;
                }
            }
        if (prime) out.push_back(p);
    }
    return out;
}

std::vector<Elem> meet_primes(const Lattice& lat) {
    return prime_elements(lat, lat.meet_table());
}

std::string describe_elems(const Lattice& lat, std::initializer_list<Elem> es) {
    std::string out;
    for (Elem e : es) {
        if (!out.empty()) out += ", ";
        out += lat.label(e);
    }
    return out;
}

}  // namespace qspec
