#pragma once

#include <string>
#include <vector>

#include "qspec/quantale.hpp"

namespace qspec {

/// Prime-spectrum summary of a quantale: the m-prime elements together with
/// the maximal and minimal layers, the radical closure, and the Jacobson
/// element. Computed once per instance and shared by the downstream passes.
struct SpectrumReport {
    std::vector<Elem> spec;       ///< m-prime elements, ascending
    std::vector<Elem> max_elems;  ///< maximal elements (coatoms)
    std::vector<Elem> min_elems;  ///< minimal members of spec
    ElemSet spec_mask;
    ElemSet max_mask;
    ElemSet min_mask;
    std::vector<Elem> radical_map;  ///< a -> meet of primes above a
    ElemSet radical_elements;       ///< fixed points of radical_map
    Elem jacobson = 0;              ///< meet of max_elems
    bool semiprime = false;         ///< radical_map[bottom] == bottom
};

/// Elements p < top with ab <= p implying a <= p or b <= p.
std::vector<Elem> m_primes(const Quantale& q);

/// Elements covered by top.
std::vector<Elem> max_elements(const Lattice& lat);

/// Full spectrum pass. The radical is computed as a meet of primes and
/// cross-checked against the power formula (sup of elements with some power
/// below the argument); the minimal primes are cross-checked against the
/// annihilator-style characterization over the radical of bottom. Disagreement
/// on either route throws InternalCheckError.
SpectrumReport compute_spectra(const Quantale& q);

/// The radical elements as a frame in their own right: join of a and b is the
/// radical of their lattice join, multiplication is meet. Indices are local to
/// the carrier; to_parent/from_parent translate.
struct RadicalFrame {
    ElemSet carrier;
    std::vector<Elem> to_parent;
    std::vector<Elem> from_parent;  ///< -1 off the carrier
    Quantale q;
};

RadicalFrame radical_frame(const Quantale& base);
RadicalFrame radical_frame(const Quantale& base, const SpectrumReport& sr);

/// Law battery over the radical: closure-operator shape, the product/meet and
/// join/power identities, interaction with comaximality, and existence of a
/// maximal element above every non-top element.
bool check_radical_laws(const Quantale& q, const SpectrumReport& sr,
                        std::string* witness);

}  // namespace qspec
