#pragma once

// Umbrella header.

#include "ehrkit/characterize.hpp"
#include "ehrkit/corpus.hpp"
#include "ehrkit/errors.hpp"
#include "ehrkit/lattice_count.hpp"
#include "ehrkit/normal_form.hpp"
#include "ehrkit/polynomial.hpp"
#include "ehrkit/polytope.hpp"
#include "ehrkit/quasi_polynomial.hpp"
#include "ehrkit/rational.hpp"
#include "ehrkit/reproduce.hpp"
#include "ehrkit/serialize.hpp"
#include "ehrkit/zonotope.hpp"
