#include "qspec/instances.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "qspec/errors.hpp"
#include "qspec/spectra.hpp"

namespace qspec {
namespace {

std::string brace_label(std::uint32_t mask, int n) {
    std::string s = "{";
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) {
            if (s.size() > 1) s += ',';
            s += std::to_string(i);
        }
    return s + "}";
}

/// Reflexive-transitive closure of `below` as up-set rows.
std::vector<ElemSet> closed_order(const Poset& p) {
    const int n = p.n;
    std::vector<ElemSet> up(n, ElemSet(n));
    for (int i = 0; i < n; ++i) up[i].set(i);
    for (auto [a, b] : p.below) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ValidationError("NotAPartialOrder",
                                  "pair (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") out of range");
        up[a].set(b);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (up[i].test(k)) up[i] |= up[k];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (up[i].test(j) && up[j].test(i))
                throw ValidationError("NotAPartialOrder",
                                      "points " + std::to_string(i) + " and " +
                                          std::to_string(j) +
                                          " are below each other");
    return up;
}

}  // namespace

Quantale zn_ideals(long n) {
    if (n < 2 || n > 1000000)
        throw ValidationError("BadModulus", std::to_string(n));

    std::vector<long> divs;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    std::sort(divs.begin(), divs.end());
    const int m = static_cast<int>(divs.size());
    auto index_of = [&divs](long d) {
        return static_cast<Elem>(
            std::lower_bound(divs.begin(), divs.end(), d) - divs.begin());
    };

    // dZ <= eZ iff e | d; the whole ring 1Z is the top, nZ = (0) the bottom.
    std::vector<ElemSet> up(m, ElemSet(m));
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) {
        labels[a] = std::to_string(divs[a]) + "Z";
        for (int b = 0; b < m; ++b)
            if (divs[a] % divs[b] == 0) up[a].set(b);
    }
    Lattice lat = Lattice::from_order(std::move(up), std::move(labels));

    std::vector<std::uint16_t> mul(std::size_t(m) * m);
    for (Elem a = 0; a < m; ++a)
        for (Elem b = 0; b < m; ++b) {
            const long da = divs[a], db = divs[b];
            const long g = std::gcd(da, db);
            if (lat.join(a, b) != index_of(g) ||
                lat.meet(a, b) != index_of(da / g * db))
                throw InternalCheckError(
                    "DivisorArithmetic",
                    "order-derived join/meet of " + lat.label(a) + ", " +
                        lat.label(b) + " disagree with gcd/lcm at n = " +
                        std::to_string(n));
            mul[std::size_t(a) * m + b] =
                static_cast<std::uint16_t>(index_of(std::gcd(da * db, n)));
        }

    Quantale q(std::move(lat), std::move(mul));
    validate_quantale(q);
    return q;
}

Quantale chain_frame(int k) {
    if (k < 2 || k > kMaxElements)
        throw ValidationError("BadSize", "chain of " + std::to_string(k));
    std::vector<ElemSet> up(k, ElemSet(k));
    std::vector<std::string> labels(k);
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) up[a].set(b);
        labels[a] = a == 0 ? "0" : a == k - 1 ? "1" : "m" + std::to_string(a);
    }
    return frame_quantale(Lattice::from_order(std::move(up), std::move(labels)));
}

Quantale boolean_frame(int k) {
    if (k < 1 || k > 12)
        throw ValidationError("TooLarge", std::to_string(k) + " atoms");
    return downset_frame(Poset{k, {}});
}

Quantale downset_frame(const Poset& poset) {
    if (poset.n < 1 || poset.n > 12)
        throw ValidationError("TooLarge", std::to_string(poset.n) + " points");
    const int n = poset.n;
    std::vector<ElemSet> up = closed_order(poset);

    std::vector<std::uint32_t> principal(n, 0);  // {i : i <= j} per point j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (up[i].test(j)) principal[j] |= 1u << i;

    std::vector<std::uint32_t> sets;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool down_closed = true;
        for (int j = 0; j < n && down_closed; ++j)
            if (s >> j & 1u) down_closed = (s & principal[j]) == principal[j];
        if (down_closed) sets.push_back(s);
    }

    const int m = static_cast<int>(sets.size());
    std::vector<ElemSet> leq(m, ElemSet(m));
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) {
        labels[a] = brace_label(sets[a], n);
        for (int b = 0; b < m; ++b)
            if ((sets[a] & ~sets[b]) == 0) leq[a].set(b);
    }
    return frame_quantale(Lattice::from_order(std::move(leq), std::move(labels)));
}

Quantale product_quantale(const Quantale& a, const Quantale& b) {
    const int na = a.size(), nb = b.size();
    if (na * nb > kMaxElements)
        throw ValidationError("TooLarge", std::to_string(na) + " * " +
                                              std::to_string(nb) + " elements");
    const int m = na * nb;
    auto at = [nb](Elem i, Elem j) { return i * nb + j; };

    std::vector<ElemSet> up(m, ElemSet(m));
    std::vector<std::string> labels(m);
    for (Elem i = 0; i < na; ++i)
        for (Elem j = 0; j < nb; ++j) {
            labels[at(i, j)] = "(" + a.label(i) + "," + b.label(j) + ")";
            for (Elem k = 0; k < na; ++k)
                for (Elem l = 0; l < nb; ++l)
                    if (a.leq(i, k) && b.leq(j, l)) up[at(i, j)].set(at(k, l));
        }
    std::vector<std::uint16_t> mul(std::size_t(m) * m);
    for (Elem i = 0; i < na; ++i)
        for (Elem j = 0; j < nb; ++j)
            for (Elem k = 0; k < na; ++k)
                for (Elem l = 0; l < nb; ++l)
                    mul[std::size_t(at(i, j)) * m + at(k, l)] =
                        static_cast<std::uint16_t>(at(a.mul(i, k), b.mul(j, l)));

    Quantale q(Lattice::from_order(std::move(up), std::move(labels)),
               std::move(mul));
    validate_quantale(q);

    // Primes of a product sit in one slot with top in the other: the pair
    // bottom-in-one, bottom-in-the-other multiplies to bottom, so any prime
    // is above one of them.
    std::set<Elem> expected;
    for (Elem p : m_primes(a)) expected.insert(at(p, b.top()));
    for (Elem p : m_primes(b)) expected.insert(at(a.top(), p));
    std::vector<Elem> got = m_primes(q);
    if (std::set<Elem>(got.begin(), got.end()) != expected)
        throw InternalCheckError("ProductSpectrum",
                                 std::to_string(got.size()) +
                                     " primes found, expected " +
                                     std::to_string(expected.size()));
    return q;
}

std::optional<Quantale> random_quantale(std::uint64_t seed, int size) {
    if (size < 2 || size > 8)
        throw ValidationError("BadSize", std::to_string(size) + " elements");

    std::mt19937_64 rng(seed);
    constexpr int kLatticeTries = 1000;
    constexpr int kTableBudget = 100000;
    const int n = size;

    // Random bounded order: coin-flip the index-increasing pairs of middle
    // elements, close transitively, pin bottom and top. Most draws already
    // have all joins and meets; retry the rest.
    std::optional<Lattice> lat;
    for (int t = 0; t < kLatticeTries && !lat; ++t) {
        bool rel[8][8] = {};
        for (int i = 1; i + 1 < n; ++i)
            for (int j = i + 1; j + 1 < n; ++j)
                if (rng() & 1u) rel[i][j] = true;
        for (int k = 1; k + 1 < n; ++k)
            for (int i = 1; i + 1 < n; ++i)
                if (rel[i][k])
                    for (int j = 1; j + 1 < n; ++j)
                        if (rel[k][j]) rel[i][j] = true;
        std::vector<ElemSet> up(n, ElemSet(n));
        for (int i = 0; i < n; ++i) {
            up[i].set(i);
            up[i].set(n - 1);
            up[0].set(i);
        }
        for (int i = 1; i + 1 < n; ++i)
            for (int j = 1; j + 1 < n; ++j)
                if (rel[i][j]) up[i].set(j);
        try {
            lat = Lattice::from_order(std::move(up));
        } catch (const ValidationError&) {
        }
    }
    if (!lat) return std::nullopt;

    const Elem bot = lat->bottom(), top = lat->top();

    // Unit row and annihilator row are forced; every other unordered pair
    // ranges over the integrality envelope down(a /\ b).
    struct FreePair {
        Elem a, b;
        std::vector<Elem> choices;
    };
    std::vector<FreePair> free_pairs;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x; y < n; ++y) {
            if (x == bot || y == bot || x == top || y == top) continue;
            std::vector<Elem> choices;
            const ElemSet& d = lat->down_set(lat->meet(x, y));
            for (std::size_t v = d.find_first(); v != kNoElem;
                 v = d.find_next(v))
                choices.push_back(static_cast<Elem>(v));
            free_pairs.push_back({x, y, std::move(choices)});
        }

    std::vector<std::uint16_t> mul(std::size_t(n) * n);
    auto put = [&mul, n](Elem x, Elem y, Elem v) {
        mul[std::size_t(x) * n + y] = mul[std::size_t(y) * n + x] =
            static_cast<std::uint16_t>(v);
    };
    for (Elem x = 0; x < n; ++x) {
        put(x, top, x);
        put(x, bot, bot);
    }

    for (int attempt = 0; attempt < kTableBudget; ++attempt) {
        for (const auto& f : free_pairs)
            put(f.a, f.b, f.choices[rng() % f.choices.size()]);
        if (satisfies_quantale_laws(*lat, mul)) {
            Quantale q(*std::move(lat), std::move(mul));
            validate_quantale(q);
            return q;
        }
    }
    if (lat->distributive()) return frame_quantale(*std::move(lat));
    return std::nullopt;
}

std::vector<Poset> all_posets_up_to(int max_points) {
    if (max_points < 1 || max_points > 5)
        throw ValidationError("TooLarge", std::to_string(max_points) + " points");
    static constexpr int kCensus[6] = {0, 1, 2, 5, 16, 63};

    std::vector<Poset> out;
    for (int n = 1; n <= max_points; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        long total = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) total *= 3;

        std::set<std::uint32_t> seen;
        for (long code = 0; code < total; ++code) {
            // Each pair is incomparable, up, or down; close and keep the
            // acyclic draws. Every poset is the closure of itself, so each
            // isomorphism class is hit.
            bool rel[5][5] = {};
            long c = code;
            for (auto [i, j] : slots) {
                const int digit = static_cast<int>(c % 3);
                c /= 3;
                if (digit == 1) rel[i][j] = true;
                if (digit == 2) rel[j][i] = true;
            }
            for (int k = 0; k < n; ++k)
                for (int i = 0; i < n; ++i)
                    if (rel[i][k])
                        for (int j = 0; j < n; ++j)
                            if (rel[k][j]) rel[i][j] = true;
            bool cyclic = false;
            for (int i = 0; i < n; ++i) cyclic = cyclic || rel[i][i];
            if (cyclic) continue;

            std::array<int, 5> perm{};
            std::iota(perm.begin(), perm.begin() + n, 0);
            std::uint32_t best = ~0u;
            do {
                std::uint32_t bits = 0;
                int pos = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (i == j) continue;
                        if (rel[perm[i]][perm[j]]) bits |= 1u << pos;
                        ++pos;
                    }
                best = std::min(best, bits);
            } while (std::next_permutation(perm.begin(), perm.begin() + n));
            if (!seen.insert(best).second) continue;

            Poset p;
            p.n = n;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rel[i][j]) p.below.emplace_back(i, j);
            out.push_back(std::move(p));
        }
        if (static_cast<int>(seen.size()) != kCensus[n])
            throw InternalCheckError(
                "PosetCensus", std::to_string(seen.size()) + " classes on " +
                                   std::to_string(n) + " points, expected " +
                                   std::to_string(kCensus[n]));
    }
    return out;
}

}  // namespace qspec
