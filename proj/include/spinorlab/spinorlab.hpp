#ifndef SPINORLAB_SPINORLAB_HPP
#define SPINORLAB_SPINORLAB_HPP

#include "spinorlab/csv.hpp"
#include "spinorlab/density.hpp"
#include "spinorlab/dirac_algebra.hpp"
#include "spinorlab/error.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/lorentz.hpp"
#include "spinorlab/matrix.hpp"
#include "spinorlab/matrix_functions.hpp"
#include "spinorlab/measurement.hpp"
#include "spinorlab/scenario.hpp"
#include "spinorlab/spinor.hpp"

#endif  // SPINORLAB_SPINORLAB_HPP
