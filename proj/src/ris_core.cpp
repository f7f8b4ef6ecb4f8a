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

#include "risntn/ris_core.hpp"

#include <charconv>
#include <cmath>
#include <optional>

namespace risntn
{
    Architecture Architecture::group_connected(std::size_t group_count)
    {
        if (group_count == 0)
            throw Error(ErrorKind::DimensionMismatch, "group count must be at least 1");
        return Architecture(Kind::GroupConnected, group_count);
    }

    Architecture Architecture::parse(std::string_view label)
    {
        if (label == "sc")
            return single_connected();
        if (label == "fc")
            return fully_connected();
        if (label.starts_with("gc:"))
        {
            auto digits = label.substr(3);
            std::size_t groups = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), groups);
            if (ec == std::errc() && ptr == digits.data() + digits.size() && groups > 0)
                return group_connected(groups);
        }
        throw Error(ErrorKind::TypeError, "invalid architecture '" + std::string(label) +
                                              "' (expected sc, fc or gc:U with U >= 1)");
    }

    std::size_t Architecture::groups(std::size_t elements) const noexcept
    {
        switch (kind_)
        {
        case Kind::SingleConnected:
            return elements;
        case Kind::FullyConnected:
            return 1;
        case Kind::GroupConnected:
            return group_count_;
        }
        return 1;
    }

    std::size_t Architecture::block_size(std::size_t elements) const noexcept
    {
        const auto u = groups(elements);
        return u == 0 ? 0 : elements / u;
    }

    bool Architecture::supports(std::size_t elements) const noexcept
    {
        if (elements == 0)
            return false;
        return kind_ != Kind::GroupConnected || elements % group_count_ == 0;
    }

    void Architecture::check_elements(std::size_t elements) const
    {
        if (elements == 0)
            throw Error(ErrorKind::DimensionMismatch, "RIS needs at least one element");
        if (!supports(elements))
            throw Error(ErrorKind::DimensionMismatch, "group count " + std::to_string(group_count_) +
                                                          " does not divide element count " +
                                                          std::to_string(elements));
    }

    std::string Architecture::label() const
    {
        switch (kind_)
        {
        case Kind::SingleConnected:
            return "sc";
        case Kind::FullyConnected:
            return "fc";
        case Kind::GroupConnected:
            return "gc:" + std::to_string(group_count_);
        }
        return "?";
    }

    PhaseShiftMatrix::PhaseShiftMatrix(arma::cx_mat matrix, Architecture arch)
        : matrix_(std::move(matrix)), arch_(arch)
    {
        if (matrix_.n_rows != matrix_.n_cols)
            throw Error(ErrorKind::DimensionMismatch, "phase-shift matrix must be square, got " +
                                                          std::to_string(matrix_.n_rows) + " x " +
                                                          std::to_string(matrix_.n_cols));
        arch_.check_elements(matrix_.n_rows);
    }

    PhaseShiftMatrix PhaseShiftMatrix::identity(std::size_t elements, Architecture arch)
    {
        return PhaseShiftMatrix(arma::cx_mat(elements, elements, arma::fill::eye), arch);
    }

    PhaseShiftMatrix PhaseShiftMatrix::from_phases(const arma::vec &phases_rad)
    {
        arma::cx_vec d(phases_rad.n_elem);
        for (arma::uword m = 0; m < phases_rad.n_elem; ++m)
            d(m) = std::polar(1.0, phases_rad(m));
        return PhaseShiftMatrix(arma::diagmat(d), Architecture::single_connected());
    }

    PhaseShiftMatrix PhaseShiftMatrix::block_diagonal(const std::vector<arma::cx_mat> &blocks)
    {
        if (blocks.empty())
            throw Error(ErrorKind::DimensionMismatch, "block-diagonal matrix needs at least one block");
        const arma::uword b = blocks.front().n_rows;
        arma::cx_mat out(b * blocks.size(), b * blocks.size(), arma::fill::zeros);
        for (std::size_t u = 0; u < blocks.size(); ++u)
        {
            if (blocks[u].n_rows != b || blocks[u].n_cols != b)
                throw Error(ErrorKind::DimensionMismatch, "all blocks must be square and equally sized");
            out.submat(u * b, u * b, (u + 1) * b - 1, (u + 1) * b - 1) = blocks[u];
        }
        return PhaseShiftMatrix(std::move(out), Architecture::group_connected(blocks.size()));
    }

    void check_channel(const ChannelSet &ch)
    {
        if (ch.h.n_elem == 0 || ch.h.n_elem != ch.g.n_elem)
            throw Error(ErrorKind::DimensionMismatch, "channel vectors must be non-empty and equally long (h: " +
                                                          std::to_string(ch.h.n_elem) +
                                                          ", g: " + std::to_string(ch.g.n_elem) + ")");
        if (!ch.h.is_finite() || !ch.g.is_finite() || !std::isfinite(ch.h_d.real()) ||
            !std::isfinite(ch.h_d.imag()))
            throw Error(ErrorKind::ConstraintError, "channel contains non-finite entries");
    }

    namespace
    {
        // First entry whose residual exceeds the tolerance, and the largest residual seen
        struct Scan
        {
            std::optional<ConstraintViolated> first;
            double worst = 0.0;

            void record(ConstraintKind kind, std::size_t block, std::size_t row, std::size_t col, double residual)
            {
                if (!(residual <= worst)) // also catches NaN
                    worst = std::isnan(residual) ? INFINITY : residual;
                if (!first && !(residual <= unit_tolerance))
                    first.emplace(kind, block, row, col, residual);
            }
        };

        Scan scan(const PhaseShiftMatrix &phi)
        {
            const arma::cx_mat &a = phi.matrix();
            const std::size_t m = phi.elements();
            const std::size_t b = phi.architecture().block_size(m);
            const std::size_t u_count = phi.architecture().groups(m);

            Scan s;
            for (std::size_t u = 0; u < u_count; ++u)
            {
                const std::size_t o = u * b;
                if (b == 1)
                {
                    s.record(ConstraintKind::NonUnitModulus, u, o, o, std::abs(std::abs(a(o, o)) - 1.0));
                    continue;
                }
                const arma::cx_mat block = a.submat(o, o, o + b - 1, o + b - 1);
                const arma::cx_mat gram = block.t() * block - arma::cx_mat(b, b, arma::fill::eye);
                for (std::size_t j = 0; j < b; ++j)
                    for (std::size_t i = 0; i < b; ++i)
                        s.record(ConstraintKind::NonUnitaryBlock, u, o + i, o + j, std::abs(gram(i, j)));
            }

            // Entries outside the blocks must be exactly zero
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t i = 0; i < m; ++i)
                {
                    if (i / b == j / b)
                        continue;
                    const double mag = std::abs(a(i, j));
                    if (mag != 0.0)
                    {
                        s.worst = std::max(s.worst, std::isnan(mag) ? INFINITY : mag);
                        if (!s.first)
                            s.first.emplace(ConstraintKind::NonzeroOffPattern, i / b, i, j, mag);
                    }
                }
            return s;
        }
    }

    double constraint_residual(const PhaseShiftMatrix &phi)
    {
        return scan(phi).worst;
    }

    void validate(const PhaseShiftMatrix &phi)
    {
        auto s = scan(phi);
        if (s.first)
            throw *s.first;
    }

    cx effective_channel(const PhaseShiftMatrix &phi, const ChannelSet &ch)
    {
        if (ch.h.n_elem != phi.elements() || ch.g.n_elem != phi.elements())
            throw Error(ErrorKind::DimensionMismatch,
                        "channel length " + std::to_string(ch.h.n_elem) + "/" + std::to_string(ch.g.n_elem) +
                            " does not match " + std::to_string(phi.elements()) + " RIS elements");
        const arma::cx_vec phi_h = phi.matrix() * ch.h;
        return arma::dot(ch.g, phi_h) + ch.h_d; // arma::dot does not conjugate
    }

    arma::cx_mat project_to_unitary(const arma::cx_mat &a)
    {
        if (a.n_rows != a.n_cols || a.n_rows == 0)
            throw Error(ErrorKind::SingularInput, "polar projection needs a non-empty square matrix");
        if (!a.is_finite())
            throw Error(ErrorKind::SingularInput, "polar projection input contains non-finite entries");

        arma::cx_mat w, v;
        arma::vec s;
        if (!arma::svd(w, s, v, a))
            throw Error(ErrorKind::SingularInput, "SVD did not converge");

        // Singular values come sorted in descending order
        const double cutoff = static_cast<double>(a.n_rows) * std::numeric_limits<double>::epsilon() * s(0);
        if (!(s(s.n_elem - 1) > cutoff))
            throw Error(ErrorKind::SingularInput, "matrix is numerically singular");
        return w * v.t();
    }
}
