#pragma once

#include <string>
#include <vector>

#include "qspec/spectra.hpp"

namespace qspec {

/// Ideal of the reticulation lattice, stored by its generator (a local lattice
/// index). Finite distributive lattices make every ideal principal.
struct PrincipalIdeal {
    Elem generator;
};

/// Reticulation of a quantale: a bounded distributive lattice L carried by the
/// radical elements, together with the quotient map collapsing each element
/// onto its radical class. L uses local indices; lambda and carrier translate.
struct Reticulation {
    Lattice lat;                ///< the lattice L
    std::vector<Elem> lambda;   ///< quantale index -> class in L
    std::vector<Elem> carrier;  ///< class in L -> its radical representative
};

/// Construct the reticulation and certify the quotient-map axioms: the map
/// turns joins into joins, products into meets, reflects order up to powers,
/// and is onto. Failures throw InternalCheckError("AxiomFailure", ...).
Reticulation build_reticulation(const Quantale& q);
Reticulation build_reticulation(const Quantale& q, const SpectrumReport& sr);

/// Image ideal a* generated by the classes of elements below a. Each call
/// certifies the generator equals lambda(a) and that star/lower_star invert
/// through the radical.
PrincipalIdeal star(const Quantale& q, const Reticulation& ret, Elem a);

/// Contraction I_*: join in the quantale of elements whose class lies in I.
/// Each call certifies the result is radical and maps back onto I.
Elem lower_star(const Quantale& q, const Reticulation& ret, PrincipalIdeal I);

/// Mutually inverse order-isomorphisms between the spectrum of the quantale
/// and the meet-primes of the reticulation. Positions index into sr.spec and
/// lattice_primes respectively.
struct SpecTransfer {
    std::vector<Elem> lattice_primes;  ///< meet-primes of ret.lat, ascending
    std::vector<Elem> u;  ///< spec position -> lattice_primes position
    std::vector<Elem> v;  ///< lattice_primes position -> spec position
};

/// Throws InternalCheckError("BijectionFailure", ...) if the two maps fail to
/// be inverse order-isomorphisms.
SpecTransfer spec_transfer_maps(const Quantale& q, const SpectrumReport& sr,
                                const Reticulation& ret);

/// Largest ideal meeting I trivially: generator = join of x with x ∧ gen = 0.
PrincipalIdeal annihilator(const Reticulation& ret, PrincipalIdeal I);

/// a is pure when every c below it is killed jointly: a ∨ c⊥ = top.
bool is_pure(const Quantale& q, Elem a);

/// I is a sigma-ideal when I ∨ Ann(x) exhausts the lattice for every x in I.
bool is_sigma_ideal(const Reticulation& ret, PrincipalIdeal I);

/// Quotient-map law battery: monotonicity, join/product exchange, top/bottom
/// detection, power collapse, kernel equality, nilpotence tests (plus the
/// semiprime-only faithfulness clause).
bool check_reticulation_map_laws(const Quantale& q, const SpectrumReport& sr,
                                 const Reticulation& ret, std::string* witness);

/// Transfer battery across star/lower_star: unit and counit laws, membership
/// reflection, join formula for contractions, annihilator exchange with the
/// residual into rho(0), and purity vs sigma-ideals (semiprime converse).
bool check_transfer_laws(const Quantale& q, const SpectrumReport& sr,
                         const Reticulation& ret, std::string* witness);

/// The quotient map restricted to the center is a Boolean isomorphism onto the
/// complemented classes; membership is decided by stabilized powers.
bool verify_center_isomorphism(const Quantale& q, const ElemSet& center,
                               const Reticulation& ret, std::string* witness);

}  // namespace qspec
