#include "qspec/quantale.hpp"

#include <optional>
#include <utility>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

struct LawViolation {
    std::string law;
    std::string witness;
};

std::optional<LawViolation> find_law_violation(
    const Lattice& lat, std::span<const std::uint16_t> mul) {
    const int n = lat.size();
    auto prod = [&](Elem a, Elem b) -> Elem {
        return mul[std::size_t(a) * n + b];
    };

    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b)
            if (prod(a, b) != prod(b, a))
                return LawViolation{"NotCommutative",
                                    describe_elems(lat, {a, b})};
    for (Elem a = 0; a < n; ++a)
        if (prod(a, lat.top()) != a)
            return LawViolation{"NotIntegral", "a*top != a at a=" + lat.label(a)};
    for (Elem a = 0; a < n; ++a)
        if (prod(a, lat.bottom()) != lat.bottom())
            return LawViolation{"NotJoinDistributive",
                                "a*bottom != bottom (empty join) at a=" +
                                    lat.label(a)};

    // Binary distributivity over all pairs follows from the join-irreducible
    // slice by induction on join decompositions of the second argument.
    const auto& ji = lat.join_irreducibles();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem j : ji) {
                Elem lhs = prod(a, lat.join(b, j));
                Elem rhs = lat.join(prod(a, b), prod(a, j));
                if (lhs != rhs)
                    return LawViolation{"NotJoinDistributive",
                                        describe_elems(lat, {a, b, j})};
            }

    // With distributivity settled, c -> (ab)c and c -> a(bc) both preserve
    // joins, so agreement on join-irreducibles gives associativity outright.
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem j : ji)
                if (prod(prod(a, b), j) != prod(a, prod(b, j)))
                    return LawViolation{"NotAssociative",
                                        describe_elems(lat, {a, b, j})};
    return std::nullopt;
}

}  // namespace

Quantale::Quantale(Lattice lat, std::vector<std::uint16_t> mul)
    : lat_(std::move(lat)), mul_(std::move(mul)) {
    const int n = lat_.size();
    if (mul_.size() != std::size_t(n) * n)
        throw ValidationError("BadTable", "multiplication table is not n*n");
    for (std::uint16_t v : mul_)
        if (static_cast<int>(v) >= n)
            throw ValidationError("BadTable", "table entry out of range");

    power_limit_.resize(n);
    stab_index_.resize(n);
    negation_.resize(n);
    for (Elem a = 0; a < n; ++a) {
        Elem p = a;
        int k = 1;
        while (k <= n + 1) {
            Elem next = this->mul(p, a);
            if (next == p) break;
            p = next;
            ++k;
        }
        power_limit_[a] = p;
        stab_index_[a] = k;
    }
    for (Elem a = 0; a < n; ++a) {
        Elem r = lat_.bottom();
        for (Elem x = 0; x < n; ++x)
            if (this->mul(a, x) == lat_.bottom()) r = lat_.join(r, x);
        negation_[a] = r;
    }
}

Elem Quantale::power(Elem a, int k) const {
    if (k < 1)
        throw ValidationError("InvalidExponent", "exponent " + std::to_string(k));
    int steps = std::min(k, stab_index_[a]);
    Elem r = a;
    for (int i = 2; i <= steps; ++i) r = mul(r, a);
    return r;
}

Elem Quantale::residual(Elem a, Elem b) const {
    const int n = lat_.size();
    Elem r = lat_.bottom();
    for (Elem x = 0; x < n; ++x)
        if (lat_.leq(mul(a, x), b)) r = lat_.join(r, x);
    for (Elem c = 0; c < n; ++c)
        if (lat_.leq(c, r) != lat_.leq(mul(a, c), b))
            throw InternalCheckError(
                "AdjunctionFailure",
                "a=" + label(a) + ", b=" + label(b) + ", c=" + label(c));
    return r;
}

bool Quantale::is_frame() const {
    auto mt = lat_.meet_table();
    for (std::size_t i = 0; i < mul_.size(); ++i)
        if (mul_[i] != mt[i]) return false;
    return true;
}

void validate_quantale(const Quantale& q) {
    if (auto v = find_law_violation(q.lattice(), q.mul_table()))
        throw ValidationError(v->law, v->witness);
}

bool satisfies_quantale_laws(const Lattice& lat,
                             const std::vector<std::uint16_t>& mul) {
    return !find_law_violation(lat, mul).has_value();
}

Quantale frame_quantale(Lattice lat) {
    std::vector<std::uint16_t> mul(lat.meet_table().begin(),
                                   lat.meet_table().end());
    Quantale q(std::move(lat), std::move(mul));
    validate_quantale(q);
    return q;
}

ElemSet boolean_center(const Quantale& q) {
    ElemSet raw = q.lattice().complemented();
    ElemSet via_negation(q.size());
    for (Elem a = 0; a < q.size(); ++a)
        if (q.join(a, q.negation(a)) == q.top()) via_negation.set(a);
    if (raw != via_negation) {
        ElemSet diff = raw ^ via_negation;
        throw InternalCheckError(
            "BooleanTestMismatch",
            "at " + q.label(static_cast<Elem>(diff.find_first())));
    }
    return raw;
}

Elem center_complement(const Quantale& q, Elem e) {
    Elem f = q.negation(e);
    if (q.join(e, f) != q.top() || q.meet(e, f) != q.bottom())
        throw InternalCheckError("ComplementFailure", "at e=" + q.label(e));
    return f;
}

IntervalQuantale interval_quantale(const Quantale& base, Elem a) {
    const int n = base.size();
    const ElemSet& carrier = base.lattice().up_set(a);
    std::vector<Elem> to_parent;
    std::vector<Elem> from_parent(n, -1);
    for (std::size_t x = carrier.find_first(); x != kNoElem;
         x = carrier.find_next(x)) {
        from_parent[x] = static_cast<Elem>(to_parent.size());
        to_parent.push_back(static_cast<Elem>(x));
    }
    const int m = static_cast<int>(to_parent.size());

    std::vector<ElemSet> leq(m, ElemSet(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = base.label(to_parent[i]);
        for (int j = 0; j < m; ++j)
            if (base.leq(to_parent[i], to_parent[j])) leq[i].set(j);
    }
    std::vector<std::uint16_t> mul(std::size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Elem p = base.join(base.mul(to_parent[i], to_parent[j]), a);
            mul[std::size_t(i) * m + j] =
                static_cast<std::uint16_t>(from_parent[p]);
        }

    IntervalQuantale iv{a, carrier, std::move(to_parent), std::move(from_parent),
                        Quantale(Lattice::from_order(std::move(leq), std::move(labels)),
                                 std::move(mul))};
    validate_quantale(iv.q);

    auto u = [&](Elem x) { return iv.from_parent[base.join(x, a)]; };
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (u(base.join(x, y)) != iv.q.join(u(x), u(y)) ||
                u(base.mul(x, y)) != iv.q.mul(u(x), u(y)))
                throw InternalCheckError(
                    "MorphismViolation",
                    "x=" + base.label(x) + ", y=" + base.label(y) +
                        " into interval above " + base.label(a));
    if (u(base.top()) != iv.q.top() || u(base.bottom()) != iv.q.bottom())
        throw InternalCheckError("MorphismViolation",
                                 "bounds into interval above " + base.label(a));
    return iv;
}

Elem raise_into(const Quantale& base, const IntervalQuantale& iv, Elem x) {
    return iv.from_parent[base.join(x, iv.floor)];
}

bool check_comaximal_laws(const Quantale& q, std::string* witness) {
    const int n = q.size();
    auto fail = [&](const std::string& law, const std::string& w) {
        if (witness) *witness = law + " at " + w;
        return false;
    };
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a; b < n; ++b) {
            if (q.join(a, b) != q.top()) continue;
            if (q.mul(a, b) != q.meet(a, b))
                return fail("comaximal-product",
                            describe_elems(q.lattice(), {a, b}));
            int kmax =
                std::max(q.stabilization_index(a), q.stabilization_index(b));
            Elem pa = a, pb = b;
            for (int k = 1; k <= kmax; ++k) {
                if (k > 1) {
                    pa = q.mul(pa, a);
                    pb = q.mul(pb, b);
                }
                if (q.join(pa, pb) != q.top())
                    return fail("comaximal-powers",
                                describe_elems(q.lattice(), {a, b}) +
                                    ", k=" + std::to_string(k));
            }
        }
    // absorption join(a, b*c) == c for comaximal a, b and any c above a;
    // not symmetric in (a, b), so run over ordered pairs
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (q.join(a, b) != q.top()) continue;
            const ElemSet& above = q.lattice().up_set(a);
            for (std::size_t c = above.find_first(); c != kNoElem;
                 c = above.find_next(c))
                if (q.join(a, q.mul(b, static_cast<Elem>(c))) !=
                    static_cast<Elem>(c))
                    return fail("comaximal-absorption",
                                describe_elems(q.lattice(),
                                               {a, b, static_cast<Elem>(c)}));
        }
    // elements comaximal with the same a stay comaximal after merging
    std::vector<Elem> comax;
    for (Elem a = 0; a < n; ++a) {
        comax.clear();
        for (Elem b = 0; b < n; ++b)
            if (q.join(a, b) == q.top()) comax.push_back(b);
        for (Elem b : comax)
            for (Elem c : comax)
                if (q.join(a, q.mul(b, c)) != q.top() ||
                    q.join(a, q.meet(b, c)) != q.top())
                    return fail("comaximal-merge",
                                describe_elems(q.lattice(), {a, b, c}));
    }
    return true;
}

bool check_residuation_laws(const Quantale& q, std::string* witness) {
    const int n = q.size();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a; b < n; ++b)
            if (!q.leq(q.mul(a, b), q.meet(a, b))) {
                if (witness)
                    *witness = "product-below-meet at " +
                               describe_elems(q.lattice(), {a, b});
                return false;
            }
    if (n <= 128) {
        // residual() certifies the adjunction on each call
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) q.residual(a, b);
    }
    return true;
}

bool check_center_laws(const Quantale& q, const ElemSet& center,
                       std::string* witness) {
    const int n = q.size();
    auto fail = [&](const std::string& law, const std::string& w) {
        if (witness) *witness = law + " at " + w;
        return false;
    };
    std::vector<Elem> bs;
    for (std::size_t e = center.find_first(); e != kNoElem;
         e = center.find_next(e))
        bs.push_back(static_cast<Elem>(e));

    for (Elem e : bs) {
        for (Elem a = 0; a < n; ++a)
            if (q.meet(a, e) != q.mul(a, e))
                return fail("center-meet", describe_elems(q.lattice(), {e, a}));
        for (Elem f = 0; f < n; ++f)
            if (q.join(e, f) == q.top() && q.meet(e, f) == q.bottom() &&
                f != q.negation(e))
                return fail("center-complement-unique",
                            describe_elems(q.lattice(), {e, f}));
    }
    for (Elem e : bs) {
        Elem ne = q.negation(e);
        for (Elem a = 0; a < n; ++a) {
            Elem r = q.bottom();
            for (Elem x = 0; x < n; ++x)
                if (q.leq(q.mul(e, x), a)) r = q.join(r, x);
            if (r != q.join(ne, a))
                return fail("center-residual",
                            describe_elems(q.lattice(), {e, a}));
        }
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a; b < n; ++b) {
            if (q.join(a, b) == q.top()) {
                // orthogonal comaximal powers are central, at every exponent
                int kmax =
                    std::max(q.stabilization_index(a), q.stabilization_index(b));
                Elem pa = a, pb = b;
                for (int k = 1; k <= kmax; ++k) {
                    if (k > 1) {
                        pa = q.mul(pa, a);
                        pb = q.mul(pb, b);
                    }
                    if (q.mul(pa, pb) == q.bottom() &&
                        (!center.test(pa) || !center.test(pb)))
                        return fail(k == 1 ? "orthogonal-cover-central"
                                           : "orthogonal-powers-central",
                                    describe_elems(q.lattice(), {a, b}) +
                                        ", k=" + std::to_string(k));
                }
            }
            for (Elem e : bs)
                if (q.join(q.meet(a, b), e) !=
                    q.meet(q.join(a, e), q.join(b, e)))
                    return fail("center-join-distribution",
                                describe_elems(q.lattice(), {a, b, e}));
        }
    return true;
}

}  // namespace qspec
