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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gfdm/detect.hpp"

namespace gfdm {

namespace {

class DepthFirstSearch
{
  public:
    DepthFirstSearch(const CMatrix& r, const CVector& z, const Constellation& cs, DetectionStats& stats)
        : r_(r), z_(z), cs_(cs), stats_(stats), n_(r.cols()), current_(static_cast<std::size_t>(n_)),
          best_(static_cast<std::size_t>(n_)), metrics_(static_cast<std::size_t>(n_), std::vector<double>(cs.size())),
          order_(static_cast<std::size_t>(n_), std::vector<std::size_t>(cs.size()))
    {
    }

    SymbolIndices run()
    {
        if (n_ > 0)
            descend(n_ - 1, 0.0);
        return best_;
    }

  private:
    void descend(Eigen::Index level, double partial)
    {
        const auto lv = static_cast<std::size_t>(level);

        // Interference of the symbols already fixed below this level.
        cd b = z_[level];
        for (Eigen::Index j = level + 1; j < n_; ++j)
            b -= r_(level, j) * cs_[current_[static_cast<std::size_t>(j)]];
        stats_.sd_cm += static_cast<std::uint64_t>(n_ - 1 - level);

        const cd rii = r_(level, level);
        auto& metric = metrics_[lv];
        auto& order = order_[lv];
        for (std::size_t c = 0; c < cs_.size(); ++c)
            metric[c] = partial + std::norm(b - rii * cs_[c]);
        stats_.sd_cm += cs_.size();

        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return metric[a] < metric[c]; });

        for (std::size_t c : order) {
            if (metric[c] >= radius_)
                break; // children are sorted, the rest lie outside as well
            ++stats_.sd_nodes;
            current_[lv] = c;
            if (level == 0) {
                radius_ = metric[c];
                best_ = current_;
            } else {
                descend(level - 1, metric[c]);
            }
        }
    }

    const CMatrix& r_;
    const CVector& z_;
    const Constellation& cs_;
    DetectionStats& stats_;
    Eigen::Index n_;
    SymbolIndices current_;
    SymbolIndices best_;
    std::vector<std::vector<double>> metrics_;
    std::vector<std::vector<std::size_t>> order_;
    double radius_ = std::numeric_limits<double>::infinity();
};

} // namespace

SymbolIndices sphere_decode(const CMatrix& r, const CVector& z, const Constellation& cs, DetectionStats& stats)
{
    if (r.rows() != r.cols() || r.rows() != z.size())
        throw std::invalid_argument("sphere_decode: R must be square and match the length of z.");
    return DepthFirstSearch(r, z, cs, stats).run();
}

SymbolIndices exhaustive_ml(const CVector& y, const CMatrix& h, const Constellation& cs, std::uint64_t budget)
{
    if (h.rows() != y.size())
        throw std::invalid_argument("exhaustive_ml: channel rows do not match the received vector.");
    const auto n = static_cast<std::size_t>(h.cols());
    const std::uint64_t q = cs.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (count > budget / q)
            throw std::length_error("exhaustive_ml: candidate count exceeds the search budget.");
        count *= q;
    }
    if (count > budget)
        throw std::length_error("exhaustive_ml: candidate count exceeds the search budget.");

    SymbolIndices digits(n, 0);
    SymbolIndices best = digits;
    double best_metric = std::numeric_limits<double>::infinity();
    CVector s(static_cast<Eigen::Index>(n));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // digits[0] is the most significant
        std::uint64_t rest = idx;
        for (std::size_t i = n; i-- > 0;) {
            digits[i] = static_cast<std::size_t>(rest % q);
            rest /= q;
            s[static_cast<Eigen::Index>(i)] = cs[digits[i]];
        }
        const double metric = (y - h * s).squaredNorm();
        if (metric < best_metric) {
            best_metric = metric;
            best = digits;
        }
    }
    return best;
}

} // namespace gfdm
