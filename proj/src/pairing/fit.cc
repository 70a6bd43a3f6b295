// Copyright 2026 <project authors>
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqc/pairing/fit.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace fqc {

namespace {

struct Linear {
    Eigen::VectorXd beta;
    Eigen::VectorXd err;
    double rms = 0;
};

Linear least_squares(const Eigen::MatrixXd &x, const Eigen::VectorXd &y) {
    Linear out;
    out.beta = x.colPivHouseholderQr().solve(y);
    Eigen::VectorXd r = y - x * out.beta;
    const auto m = static_cast<double>(y.size());
    out.rms = std::sqrt(r.squaredNorm() / m);
    double dof = m - static_cast<double>(x.cols());
    Eigen::MatrixXd cov = (x.transpose() * x).inverse();
    double var = dof > 0 ? r.squaredNorm() / dof : 0;
    out.err = (var * cov.diagonal()).cwiseSqrt();
    return out;
}

}  // namespace

nlohmann::json FringeFit::to_json() const {
    return {{"C", contrast}, {"D", offset}, {"residual", residual}, {"C_err", contrast_err}, {"D_err", offset_err}};
}

FringeFit fit_fringe(const std::vector<double> &theta, const std::vector<double> &p) {
    if (theta.size() != p.size() || theta.size() < 3) throw std::invalid_argument("fit_fringe: need >= 3 points");
    const auto m = static_cast<Eigen::Index>(theta.size());
    Eigen::MatrixXd x(m, 2);
    Eigen::VectorXd y(m);
    for (Eigen::Index k = 0; k < m; k++) {
        x(k, 0) = 0.5 * std::cos(theta[k]);
        x(k, 1) = -0.5;
        y(k) = p[k] - 0.5;
    }
    Linear l = least_squares(x, y);
    FringeFit f;
    f.contrast = l.beta(0);
    f.offset = l.beta(1);
    f.residual = l.rms;
    f.contrast_err = l.err(0);
    f.offset_err = l.err(1);
    return f;
}

nlohmann::json PowerLaw::to_json() const {
    return {{"exponent", exponent}, {"prefactor", prefactor}, {"exponent_err", exponent_err}, {"residual", residual}};
}

PowerLaw fit_power_law(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_power_law: need >= 2 points");
    const auto m = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd a(m, 2);
    Eigen::VectorXd b(m);
    for (Eigen::Index k = 0; k < m; k++) {
        if (x[k] <= 0 || y[k] <= 0) throw std::invalid_argument("fit_power_law: values must be positive");
        a(k, 0) = std::log(x[k]);
        a(k, 1) = 1;
        b(k) = std::log(y[k]);
    }
    Linear l = least_squares(a, b);
    return {l.beta(0), std::exp(l.beta(1)), l.err(0), l.rms};
}

}  // namespace fqc
