// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_QES_HPP_
#define QES_QES_HPP_

#include "qes/algebra.hpp"
#include "qes/closed_forms.hpp"
#include "qes/discrepancy.hpp"
#include "qes/error.hpp"
#include "qes/model.hpp"
#include "qes/oracle.hpp"
#include "qes/polynomial.hpp"
#include "qes/recurrence.hpp"
#include "qes/roots.hpp"
#include "qes/separable2d.hpp"
#include "qes/spectra.hpp"
#include "qes/wavefunction.hpp"

#endif  // QES_QES_HPP_
