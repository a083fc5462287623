#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qspec/spectra.hpp"

namespace qspec {

/// Spectrum points are packed into one machine word.
using PointSet = std::uint64_t;
inline constexpr int kMaxSpectrumPoints = 64;
/// Full open-set families are enumerated only below this many points; every
/// predicate works off minimal neighborhoods, so larger grounds lose nothing
/// but the printed family.
inline constexpr int kMaxMaterializedPoints = 20;

/// Finite topological space. A finite topology is determined by the minimal
/// open neighborhood of each point; closures and all separation axioms reduce
/// to set algebra on those.
struct FiniteSpace {
    int n_points = 0;    ///< size of the ambient index range
    PointSet ground = 0; ///< live points (subspaces keep ambient indices)
    std::vector<PointSet> min_nbhd;      ///< per point: smallest open around it
    std::vector<PointSet> point_closure; ///< per point: closure of the singleton
    bool materialized = false;
    std::vector<PointSet> opens; ///< full family, ascending, when materialized
};

/// Build the space generated by a family of basic opens. The basis must cover
/// the ground and be stable under intersection within the generated family;
/// violations throw InternalCheckError — they always indicate an engine bug.
FiniteSpace make_space(int n_points, PointSet ground,
                       const std::vector<PointSet>& basis);

/// Restriction to a subset of the ground, same ambient indices.
FiniteSpace subspace(const FiniteSpace& t, PointSet keep);

bool is_open(const FiniteSpace& t, PointSet s);
bool is_closed(const FiniteSpace& t, PointSet s);
bool is_clopen(const FiniteSpace& t, PointSet s);
PointSet closure(const FiniteSpace& t, PointSet s);

/// Equality / refinement of topologies over the same ground.
bool same_topology(const FiniteSpace& a, const FiniteSpace& b);
bool finer(const FiniteSpace& fine, const FiniteSpace& coarse);

/// All clopen subsets; requires a ground small enough to enumerate.
std::vector<PointSet> clopen_sets(const FiniteSpace& t);

/// pmap sends live points of a onto live points of b; true when it is a
/// homeomorphism (bijective, bicontinuous).
bool homeomorphic_by(const FiniteSpace& a, const FiniteSpace& b,
                     const std::vector<int>& pmap, std::string* witness);

struct SpaceProperties {
    bool t0 = false;
    bool t1 = false;
    bool hausdorff = false;
    bool discrete = false;
    bool zero_dimensional = false;
    bool normal_space = false;
    bool compact = true;  ///< finite spaces: reported as vacuously true
    bool boolean_space = false;
};

SpaceProperties space_properties(const FiniteSpace& t);

/// The three topologies on the spectrum plus their maximal/minimal subspaces.
/// Points are positions into `points`; d_mask/v_mask index by quantale element.
struct SpectralTopologies {
    std::vector<Elem> points;       ///< = spectrum elements, ascending
    std::vector<int> point_index;   ///< quantale element -> point or -1
    std::vector<PointSet> d_mask;   ///< per element c: {p : c not<= p}
    std::vector<PointSet> v_mask;   ///< per element a: {p : a <= p}
    std::vector<PointSet> lambda_mask;  ///< per point: primes below it
    PointSet max_mask = 0;
    PointSet min_mask = 0;
    FiniteSpace zariski, flat, patch;
    FiniteSpace max_z, max_f, min_z, min_f;
};

/// Construct all spectrum topologies. Certifies the basis identities
/// (D(c)∩D(d) = D(cd), V(c)∩V(d) = V(c∨d), V(c)∪V(d) = V(cd)), that the
/// Zariski closed sets are exactly the V(a), that flat point closures match
/// the down-sets of the spectrum order, and that the patch topology refines
/// the other two and is discrete.
SpectralTopologies build_topologies(const Quantale& q,
                                    const SpectrumReport& sr);

/// Per-instance topological fact battery: flat closures of arbitrary subsets
/// against down-set unions, Zariski closures against V(meet), clopenness of
/// V(c) on the maximal flat subspace, and the separation profile of the
/// maximal/minimal subspaces.
bool check_topology_facts(const Quantale& q, const SpectrumReport& sr,
                          const SpectralTopologies& top, std::string* witness);

/// Boolean-center spectrum: regular elements (joins of central ones), the
/// maximal proper regulars as points, their U(e) topology, and the canonical
/// map from the prime spectrum.
struct PierceSpectrum {
    std::vector<Elem> regular;  ///< ascending quantale elements
    std::vector<Elem> points;   ///< maximal proper regular elements
    FiniteSpace space;          ///< over positions in `points`
    std::vector<int> s_map;     ///< spectrum point -> position in `points`
};

/// Certifies that each canonical image is a maximal proper regular element,
/// that the map is onto, that preimages of the U(e) agree with D(e) and with
/// V(¬e) and are open in both spectrum topologies, and that the resulting
/// space is Boolean.
PierceSpectrum build_pierce(const Quantale& q, const SpectrumReport& sr,
                            const ElemSet& center,
                            const SpectralTopologies& top);

}  // namespace qspec
