// SPDX-License-Identifier: Apache-2.0
//
// ris-ntn-sim: RIS-assisted non-terrestrial downlink simulator
// Copyright (C) 2026 The ris-ntn-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef risntn_phase_optimizer_H
#define risntn_phase_optimizer_H

#include <cstddef>

#include "risntn/ris_core.hpp"

namespace risntn
{
    struct OptimizeResult
    {
        PhaseShiftMatrix phi;
        double objective = 0.0; // |h_eff| achieved by phi
        Architecture architecture;
        // Set when g or h (or, for group connected, every block pair) is all-zero: Phi = I and
        // the objective collapses to |h_d|.
        bool degenerate = false;
    };

    // Global optimum over diagonal unit-modulus matrices:
    //   phi_m = e^{j(arg h_d - arg(g_m h_m))},  objective = |h_d| + sum_m |g_m| |h_m|
    OptimizeResult optimize_sc(const ChannelSet &ch);

    // Global optimum over unitary matrices:
    //   Phi = e^{j arg h_d} u v^H + U_perp V_perp^H,  u = conj(g)/|g|, v = h/|h|
    //   objective = |h_d| + |g| |h|
    OptimizeResult optimize_fc(const ChannelSet &ch);

    // Fully connected construction per group on (g_u, h_u) with the common reference phase
    // arg h_d; objective = |h_d| + sum_u |g_u| |h_u|. Throws DimensionMismatch unless U | M.
    OptimizeResult optimize_gc(const ChannelSet &ch, std::size_t group_count);

    // Dispatches on the architecture
    OptimizeResult optimize(const ChannelSet &ch, const Architecture &arch);

    // Unitary matrix whose first column is the unit vector x (Householder reflector scaled by
    // a phase). Columns 2..n are an orthonormal basis of the complement of x.
    arma::cx_mat unitary_with_first_column(const arma::cx_vec &x);

    // Test oracles -----------------------------------------------------------

    // Exhaustive search over phi_m in {e^{j 2 pi k / grid}}. Throws TooLarge for M > 4 and
    // ConstraintError for grid < 4.
    OptimizeResult brute_force_sc(const ChannelSet &ch, std::size_t grid);

    // Grid search over U(2) parametrized as
    //   e^{j a} [[ e^{j b} cos c,  e^{j d} sin c], [-e^{-j d} sin c, e^{-j b} cos c]]
    // with a, b, d on [0, 2 pi) and c on [0, pi/2], `grid` points per angle.
    // Throws WrongDimension unless M = 2.
    OptimizeResult brute_force_fc2(const ChannelSet &ch, std::size_t grid);
}

#endif
