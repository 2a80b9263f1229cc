#pragma once

// Selection of the invariant module for a (geometry, flavor, n) triple.

#include <string>

#include "sympinv/geometry.hpp"
#include "sympinv/invariants.hpp"

namespace sympinv {

// Throws InvalidArgument (naming the flavor) when no invariant module covers
// the combination.
void require_supported(const GeometryInfo& info, Flavor flavor);
bool is_supported(const GeometryInfo& info, Flavor flavor);

// The generating invariants and invariant derivations of the geometry under
// the flavor, at a graph jet (submanifolds) or a function jet (functions).
template <class S>
InvariantSet<S> invariants_of(const GeometryInfo& info, Flavor flavor, const GraphJet<S>& g);

template <class S>
InvariantSet<S> invariants_of(const GeometryInfo& info, Flavor flavor, const FunctionJet<S>& f);

// Names "I", "nabla(I)", "nabla2(nabla1(I))", ... of the invariants and their
// derivatives along derivation words of length <= depth.
template <class S>
std::vector<std::string> derived_names(const InvariantSet<S>& set, int depth);

// Values at the basepoint, in the order of derived_names.
template <class S>
std::vector<S> derived_values(const InvariantSet<S>& set, int depth);

// Jets of the derived invariants, in the order of derived_names.
template <class S>
std::vector<MultiJet<S>> derived_jets(const InvariantSet<S>& set, int depth);

// Smallest singular value of the image chart block of g(N), relative to the
// smallest singular value of the whole image tangent. Pushforward of graph
// jets loses accuracy as this tends to zero.
double pushforward_conditioning(const GraphJet<double>& jet, const GroupElement<double>& g);

}  // namespace sympinv
