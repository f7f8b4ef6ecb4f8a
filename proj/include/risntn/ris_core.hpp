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

#ifndef risntn_ris_core_H
#define risntn_ris_core_H

#include <armadillo>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "risntn/error.hpp"

namespace risntn
{
    using cx = std::complex<double>;

    // Feasibility tolerance for all constraint checks, in max-norm
    inline constexpr double unit_tolerance = 1e-10;

    // Interconnection architecture of the RIS elements.
    //   single connected: diagonal Phi, |phi_m| = 1
    //   fully connected:  Phi^H Phi = I_M
    //   group connected:  Phi = blkdiag(Phi_1, ..., Phi_U), Phi_u^H Phi_u = I_{M/U}
    class Architecture
    {
    public:
        enum class Kind
        {
            SingleConnected,
            FullyConnected,
            GroupConnected
        };

        static Architecture single_connected() { return Architecture(Kind::SingleConnected, 0); }
        static Architecture fully_connected() { return Architecture(Kind::FullyConnected, 0); }
        static Architecture group_connected(std::size_t group_count); // throws DimensionMismatch if 0

        // Parses "sc", "fc" or "gc:U"
        static Architecture parse(std::string_view label);

        Kind kind() const noexcept { return kind_; }

        // Number of unitary blocks for an M-element surface (M for SC, 1 for FC, U for GC)
        std::size_t groups(std::size_t elements) const noexcept;

        // Side length of each block, M / groups(M)
        std::size_t block_size(std::size_t elements) const noexcept;

        // True iff the architecture can be paired with an M-element surface
        bool supports(std::size_t elements) const noexcept;

        // Throws DimensionMismatch unless supports(elements)
        void check_elements(std::size_t elements) const;

        std::string label() const; // "sc", "fc", "gc:U"

        bool operator==(const Architecture &) const = default;

    private:
        Architecture(Kind kind, std::size_t group_count) : kind_(kind), group_count_(group_count) {}

        Kind kind_;
        std::size_t group_count_; // only meaningful for GroupConnected
    };

    // A dense M x M phase-shift matrix tagged with its architecture. Construction checks
    // shape only; feasibility is checked by validate().
    class PhaseShiftMatrix
    {
    public:
        // Throws DimensionMismatch if the matrix is not square, empty, or the
        // architecture cannot be paired with its size.
        PhaseShiftMatrix(arma::cx_mat matrix, Architecture arch);

        // M x M identity, feasible for every architecture
        static PhaseShiftMatrix identity(std::size_t elements, Architecture arch);

        // Single-connected matrix diag(e^{j theta_m})
        static PhaseShiftMatrix from_phases(const arma::vec &phases_rad);

        // Group-connected matrix from U equally sized square blocks
        static PhaseShiftMatrix block_diagonal(const std::vector<arma::cx_mat> &blocks);

        const arma::cx_mat &matrix() const noexcept { return matrix_; }
        const Architecture &architecture() const noexcept { return arch_; }
        std::size_t elements() const noexcept { return matrix_.n_rows; }

    private:
        arma::cx_mat matrix_;
        Architecture arch_;
    };

    // One channel realization. Amplitude gains are dimensionless.
    struct ChannelSet
    {
        arma::cx_vec h; // LEO -> RIS, one entry per element
        arma::cx_vec g; // RIS -> UT, one entry per element
        cx h_d{0.0, 0.0}; // direct LEO -> UT

        std::size_t elements() const noexcept { return h.n_elem; }
    };

    // Throws DimensionMismatch if h and g differ in length or are empty, ConstraintError
    // if any entry is not finite.
    void check_channel(const ChannelSet &ch);

    // Largest constraint residual of phi for its architecture: | |phi_m| - 1 | for unit-modulus
    // entries, max |(Phi_u^H Phi_u - I)_ij| for unitary blocks of size > 1, and |entry| for
    // entries outside the sparsity pattern. 1 x 1 blocks always use the modulus residual, so
    // group connected with U = M accepts exactly the single-connected set.
    double constraint_residual(const PhaseShiftMatrix &phi);

    // Throws ConstraintViolated for the first violated constraint (entries are scanned in
    // column-major order within each block, off-pattern entries last). Indices are 0-based.
    void validate(const PhaseShiftMatrix &phi);

    // h_eff = g^T Phi h + h_d (plain transpose, no conjugation on g)
    cx effective_channel(const PhaseShiftMatrix &phi, const ChannelSet &ch);

    // Unitary factor W V^H of the SVD A = W S V^H, the closest unitary matrix to A in
    // Frobenius norm. Throws SingularInput for non-square or numerically singular A.
    arma::cx_mat project_to_unitary(const arma::cx_mat &a);
}

#endif
