// SPDX-License-Identifier: Apache-2.0
//
// mimo-gfdm: frequency-domain decoupled detection for MIMO-GFDM
// Copyright (C) 2026 The mimo-gfdm authors
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

#include <cmath>

#include "gfdm/detect.hpp"

namespace gfdm {

CMatrix SqrdFactorization::perm_matrix() const
{
    const auto n = static_cast<Eigen::Index>(perm.size());
    CMatrix p = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        p(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]), i) = 1.0;
    return p;
}

SqrdFactorization sqrd(const CMatrix& f)
{
    const Eigen::Index rows = f.rows();
    const Eigen::Index n = f.cols();
    if (rows < n)
        throw std::invalid_argument("sqrd: matrix must have at least as many rows as columns.");

    SqrdFactorization out;
    out.q = f;
    out.r = CMatrix::Zero(n, n);
    out.perm.resize(static_cast<std::size_t>(n));
    out.data_rows = static_cast<std::size_t>(rows);
    std::vector<double> norms(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        out.perm[static_cast<std::size_t>(j)] = static_cast<std::size_t>(j);
        norms[static_cast<std::size_t>(j)] = out.q.col(j).squaredNorm();
    }
    const double threshold = 1e-12 * f.norm();

    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index pick = i;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            const auto up = static_cast<std::size_t>(pick);
            if (norms[uj] < norms[up] || (norms[uj] == norms[up] && out.perm[uj] < out.perm[up]))
                pick = j;
        }
        if (pick != i) {
            out.q.col(i).swap(out.q.col(pick));
            out.r.col(i).swap(out.r.col(pick));
            std::swap(out.perm[static_cast<std::size_t>(i)], out.perm[static_cast<std::size_t>(pick)]);
            std::swap(norms[static_cast<std::size_t>(i)], norms[static_cast<std::size_t>(pick)]);
        }

        const double rii = out.q.col(i).norm();
        if (!(rii > threshold))
            throw SingularMatrixError("sqrd: matrix is rank deficient (column " +
                                      std::to_string(out.perm[static_cast<std::size_t>(i)]) + ").");
        out.r(i, i) = rii;
        out.q.col(i) /= rii;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const cd rij = out.q.col(i).dot(out.q.col(j)); // conjugates the first argument
            out.r(i, j) = rij;
            out.q.col(j) -= rij * out.q.col(i);
            norms[static_cast<std::size_t>(j)] = out.q.col(j).squaredNorm();
        }
    }
    return out;
}

SqrdFactorization mmse_sqrd(const CMatrix& h, double noise_var, double symbol_energy)
{
    if (noise_var < 0.0 || symbol_energy <= 0.0)
        throw std::invalid_argument("mmse_sqrd: noise variance must be >= 0 and symbol energy > 0.");
    const Eigen::Index m = h.rows();
    const Eigen::Index n = h.cols();
    CMatrix ext = CMatrix::Zero(m + n, n);
    ext.topRows(m) = h;
    ext.bottomRows(n).diagonal().setConstant(std::sqrt(noise_var / symbol_energy));
    SqrdFactorization out = sqrd(ext);
    out.data_rows = static_cast<std::size_t>(m);
    return out;
}

} // namespace gfdm
