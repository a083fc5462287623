#pragma once

#include <string>

#include "qspec/reticulation.hpp"
#include "qspec/spectra.hpp"

namespace qspec {

/// Membership flags for the quantale classes under study, with a witness for
/// each failing predicate. b_normal_verbatim evaluates the printed form of the
/// separation condition (whose conclusion ignores the separators) and is
/// reported alongside the corrected reading.
struct ClassReport {
    bool hyperarchimedean = false;
    bool normal = false;
    bool b_normal = false;
    bool b_normal_verbatim = false;
    bool mp = false;
    bool pf = false;
    bool semiprime = false;
    std::string hyper_witness;
    std::string normal_witness;
    std::string b_normal_witness;
    std::string mp_witness;
    std::string pf_witness;
};

/// Every element has a stabilized power inside the center.
bool is_hyperarchimedean(const Quantale& q, const ElemSet& center,
                         std::string* witness);

/// Every pair covering the top splits by an orthogonal pair: a∨b = 1 gives
/// e, f with a∨e = b∨f = 1 and ef = 0.
bool is_normal(const Quantale& q, std::string* witness);

/// As is_normal, with the separators drawn from the center.
bool is_b_normal(const Quantale& q, const ElemSet& center,
                 std::string* witness);

/// The condition exactly as printed: for all c, d there exist central e, f
/// with c∨e = d∨f = 1 and cd = 0. The separators are unconstrained by the
/// conclusion, so this collapses to cd = 0 for every pair.
bool is_b_normal_verbatim(const Quantale& q, const ElemSet& center,
                          std::string* witness);

/// Every prime has exactly one minimal prime below it.
bool is_mp(const Quantale& q, const SpectrumReport& sr, std::string* witness);

/// Every annihilator c⊥ is pure.
bool is_pf(const Quantale& q, std::string* witness);

/// Lattice-level separation: x∨y = 1 gives u, v with x∨u = y∨v = 1, u∧v = 0.
bool is_normal_lattice(const Lattice& lat, std::string* witness);

/// As is_normal_lattice with separators drawn from the complemented elements.
bool is_b_normal_lattice(const Lattice& lat, std::string* witness);

/// Dual separation: x∧y = 0 gives u, v with x∧u = y∧v = 0 and u∨v = 1.
bool is_conormal_lattice(const Lattice& lat, std::string* witness);

/// Evaluate all class predicates.
ClassReport classify_basic(const Quantale& q, const SpectrumReport& sr,
                           const ElemSet& center);

}  // namespace qspec
