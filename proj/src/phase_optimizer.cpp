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

#include "risntn/phase_optimizer.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace risntn
{
    namespace
    {
        // Reference phase shared by every RIS contribution; zero when there is no direct link
        double reference_phase(const ChannelSet &ch)
        {
            return ch.h_d == cx(0.0, 0.0) ? 0.0 : std::arg(ch.h_d);
        }

        OptimizeResult finish(PhaseShiftMatrix phi, const ChannelSet &ch, bool degenerate = false)
        {
            const double objective = std::abs(effective_channel(phi, ch));
            Architecture arch = phi.architecture();
            return OptimizeResult{std::move(phi), objective, arch, degenerate};
        }

        // Unitary block sending h/|h| to e^{j theta} conj(g)/|g|. Falls back to the identity and
        // returns false when either vector vanishes.
        bool aligned_block(const arma::cx_vec &g, const arma::cx_vec &h, double theta, arma::cx_mat &block)
        {
            const double g_norm = arma::norm(g);
            const double h_norm = arma::norm(h);
            if (g_norm == 0.0 || h_norm == 0.0)
            {
                block = arma::cx_mat(g.n_elem, g.n_elem, arma::fill::eye);
                return false;
            }
            arma::cx_mat q_u = unitary_with_first_column(arma::conj(g) / g_norm);
            const arma::cx_mat q_v = unitary_with_first_column(h / h_norm);
            q_u.col(0) *= std::polar(1.0, theta);
            block = q_u * q_v.t();
            return true;
        }
    }

    arma::cx_mat unitary_with_first_column(const arma::cx_vec &x)
    {
        const arma::uword n = x.n_elem;
        if (n == 0)
            throw Error(ErrorKind::DimensionMismatch, "empty vector");
        const double x0_abs = std::abs(x(0));
        const cx alpha = x0_abs > 0.0 ? x(0) / x0_abs : cx(1.0, 0.0);
        if (n == 1)
            return arma::cx_mat(1, 1, arma::fill::value(x(0)));

        // H = I - 2 w w^H / (w^H w) with w = x + alpha e1 maps x to -alpha e1, so Q = -alpha H
        // has Q e1 = x. w^H w = 2 (1 + |x0|) for unit x, bounded away from zero.
        arma::cx_vec w = x;
        w(0) += alpha;
        const double w_norm2 = 2.0 * (1.0 + x0_abs);
        arma::cx_mat q = (2.0 / w_norm2) * (w * w.t());
        q.diag() -= 1.0;
        q *= alpha; // -alpha (I - 2 w w^H / w_norm2)
        return q;
    }

    OptimizeResult optimize_sc(const ChannelSet &ch)
    {
        check_channel(ch);
        const double theta = reference_phase(ch);
        arma::vec phases(ch.elements());
        for (arma::uword m = 0; m < ch.elements(); ++m)
        {
            const cx t = ch.g(m) * ch.h(m);
            phases(m) = theta - (t == cx(0.0, 0.0) ? 0.0 : std::arg(t));
        }
        return finish(PhaseShiftMatrix::from_phases(phases), ch);
    }

    OptimizeResult optimize_fc(const ChannelSet &ch)
    {
        check_channel(ch);
        arma::cx_mat phi;
        const bool ok = aligned_block(ch.g, ch.h, reference_phase(ch), phi);
        return finish(PhaseShiftMatrix(std::move(phi), Architecture::fully_connected()), ch, !ok);
    }

    OptimizeResult optimize_gc(const ChannelSet &ch, std::size_t group_count)
    {
        check_channel(ch);
        const auto arch = Architecture::group_connected(group_count);
        arch.check_elements(ch.elements());

        const double theta = reference_phase(ch);
        const arma::uword b = arch.block_size(ch.elements());
        std::vector<arma::cx_mat> blocks(group_count);
        bool any_aligned = false;
        for (std::size_t u = 0; u < group_count; ++u)
        {
            const arma::uword first = u * b, last = (u + 1) * b - 1;
            any_aligned |= aligned_block(ch.g.subvec(first, last), ch.h.subvec(first, last), theta, blocks[u]);
        }
        return finish(PhaseShiftMatrix::block_diagonal(blocks), ch, !any_aligned);
    }

    OptimizeResult optimize(const ChannelSet &ch, const Architecture &arch)
    {
        switch (arch.kind())
        {
        case Architecture::Kind::SingleConnected:
            return optimize_sc(ch);
        case Architecture::Kind::FullyConnected:
            return optimize_fc(ch);
        case Architecture::Kind::GroupConnected:
            return optimize_gc(ch, arch.groups(ch.elements()));
        }
        throw Error(ErrorKind::ConstraintError, "unknown architecture");
    }

    OptimizeResult brute_force_sc(const ChannelSet &ch, std::size_t grid)
    {
        check_channel(ch);
        const std::size_t m_count = ch.elements();
        if (m_count > 4)
            throw Error(ErrorKind::TooLarge, "brute-force search supports at most 4 elements");
        if (grid < 4)
            throw Error(ErrorKind::ConstraintError, "brute-force grid needs at least 4 points");

        std::vector<cx> rot(grid);
        for (std::size_t k = 0; k < grid; ++k)
            rot[k] = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(grid));
        std::vector<cx> terms(m_count);
        for (std::size_t m = 0; m < m_count; ++m)
            terms[m] = ch.g(m) * ch.h(m);

        std::vector<std::size_t> idx(m_count, 0), best_idx(m_count, 0);
        double best = -1.0;
        while (true)
        {
            cx acc = ch.h_d;
            for (std::size_t m = 0; m < m_count; ++m)
                acc += terms[m] * rot[idx[m]];
            const double v = std::abs(acc);
            if (v > best)
            {
                best = v;
                best_idx = idx;
            }
            std::size_t m = 0;
            while (m < m_count && ++idx[m] == grid)
                idx[m++] = 0;
            if (m == m_count)
                break;
        }

        arma::vec phases(m_count);
        for (std::size_t m = 0; m < m_count; ++m)
            phases(m) = 2.0 * std::numbers::pi * double(best_idx[m]) / double(grid);
        return finish(PhaseShiftMatrix::from_phases(phases), ch);
    }

    namespace
    {
        arma::cx_mat su2_times_phase(double a, double b, double c, double d)
        {
            const double cc = std::cos(c), sc = std::sin(c);
            arma::cx_mat u(2, 2);
            u(0, 0) = std::polar(cc, b);
            u(0, 1) = std::polar(sc, d);
            u(1, 0) = -std::polar(sc, -d);
            u(1, 1) = std::polar(cc, -b);
            return std::polar(1.0, a) * u;
        }
    }

    OptimizeResult brute_force_fc2(const ChannelSet &ch, std::size_t grid)
    {
        check_channel(ch);
        if (ch.elements() != 2)
            throw Error(ErrorKind::WrongDimension, "U(2) grid search needs exactly 2 elements");
        if (grid < 2)
            throw Error(ErrorKind::ConstraintError, "grid needs at least 2 points per angle");

        const double step = 2.0 * std::numbers::pi / double(grid);
        const double c_step = 0.5 * std::numbers::pi / double(grid - 1);
        std::vector<cx> rot(grid);
        for (std::size_t k = 0; k < grid; ++k)
            rot[k] = std::polar(1.0, step * double(k));

        const cx g0 = ch.g(0), g1 = ch.g(1), h0 = ch.h(0), h1 = ch.h(1);
        // g^T U h = e^{ja} [ e^{jb} c g0 h0 + e^{-jb} c g1 h1 + e^{jd} s g0 h1 - e^{-jd} s g1 h0 ]
        double best = -1.0;
        std::size_t best_a = 0, best_b = 0, best_c = 0, best_d = 0;
        for (std::size_t ic = 0; ic < grid; ++ic)
        {
            const double c = std::cos(c_step * double(ic)), s = std::sin(c_step * double(ic));
            for (std::size_t ib = 0; ib < grid; ++ib)
            {
                const cx diag_part = c * (rot[ib] * g0 * h0 + std::conj(rot[ib]) * g1 * h1);
                for (std::size_t id = 0; id < grid; ++id)
                {
                    const cx inner = diag_part + s * (rot[id] * g0 * h1 - std::conj(rot[id]) * g1 * h0);
                    for (std::size_t ia = 0; ia < grid; ++ia)
                    {
                        const double v = std::abs(ch.h_d + rot[ia] * inner);
                        if (v > best)
                        {
                            best = v;
                            best_a = ia, best_b = ib, best_c = ic, best_d = id;
                        }
                    }
                }
            }
        }

        auto phi = su2_times_phase(step * double(best_a), step * double(best_b), c_step * double(best_c),
                                   step * double(best_d));
        return finish(PhaseShiftMatrix(std::move(phi), Architecture::fully_connected()), ch);
    }
}
