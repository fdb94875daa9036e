#pragma once

// Umbrella header: exact computations in the level-k fusion ring of SU(2),
// quantizations of the standard q-Hamiltonian example spaces, and Verlinde
// numbers for moduli of flat SU(2)- and SO(3)-bundles.

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "fusion_element.hpp"
#include "fusion_ring.hpp"
#include "moduli.hpp"
#include "polytope.hpp"
#include "quantize.hpp"
#include "rational.hpp"
#include "rep_ring.hpp"
