#ifndef ENTANGLE_ENTANGLE_HPP
#define ENTANGLE_ENTANGLE_HPP

#include "entangle/classifier.hpp"
#include "entangle/dephasing.hpp"
#include "entangle/dynamics.hpp"
#include "entangle/geometry.hpp"
#include "entangle/ghzw.hpp"
#include "entangle/measures.hpp"
#include "entangle/multiqubit.hpp"
#include "entangle/state_space.hpp"
#include "entangle/sweep.hpp"

#endif  // ENTANGLE_ENTANGLE_HPP
