#ifndef BOHR_BOHR_HPP
#define BOHR_BOHR_HPP

#include "bohr/rational.hpp"
#include "bohr/matrix.hpp"
#include "bohr/spectral.hpp"
#include "bohr/young.hpp"
#include "bohr/context.hpp"
#include "bohr/poset.hpp"
#include "bohr/gelfand.hpp"
#include "bohr/sigma.hpp"
#include "bohr/bohrified.hpp"
#include "bohr/states.hpp"
#include "bohr/kochen_specker.hpp"

#endif  // BOHR_BOHR_HPP
