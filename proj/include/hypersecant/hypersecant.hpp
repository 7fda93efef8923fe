#pragma once

#include "hypersecant/circular_order.hpp"
#include "hypersecant/groebner.hpp"
#include "hypersecant/hypersimplex.hpp"
#include "hypersecant/master.hpp"
#include "hypersecant/monomial_ideal.hpp"
#include "hypersecant/noncrossing.hpp"
#include "hypersecant/poly.hpp"
#include "hypersecant/printed_examples.hpp"
#include "hypersecant/serialize.hpp"
