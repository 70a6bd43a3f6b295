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


#include "fqc/gadgets/scaling.h"

#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fqc/circuit/resources.h"
#include "fqc/gadgets/baselines.h"
#include "fqc/gadgets/ffft.h"

namespace fqc {

std::string scaling_model_name(ScalingModel m) {
    switch (m) {
        case ScalingModel::Linear: return "c*N";
        case ScalingModel::Quadratic: return "c*N^2";
        case ScalingModel::Log: return "c*log2(N)";
        case ScalingModel::NLogN: return "c*N*log2(N)";
    }
    return "?";
}

double scaling_model_value(ScalingModel m, double n) {
    switch (m) {
        case ScalingModel::Linear: return n;
        case ScalingModel::Quadratic: return n * n;
        case ScalingModel::Log: return std::log2(n);
        case ScalingModel::NLogN: return n * std::log2(n);
    }
    return 0;
}

nlohmann::json ScalingFit::to_json() const {
    return {{"method", method},     {"metric", metric},     {"model", scaling_model_name(model)},
            {"constant", constant}, {"residual", residual}, {"best", best}};
}

ScalingFit fit_scaling(ScalingModel m, const std::vector<double> &ns, const std::vector<double> &ys) {
    if (ns.size() != ys.size() || ns.size() < 2) throw std::invalid_argument("fit needs at least two points");
    double fy = 0, ff = 0, mean = 0;
    for (size_t k = 0; k < ns.size(); k++) {
        double f = scaling_model_value(m, ns[k]);
        fy += f * ys[k];
        ff += f * f;
        mean += ys[k];
    }
    mean /= static_cast<double>(ys.size());
    ScalingFit fit;
    fit.model = m;
    fit.constant = ff > 0 ? fy / ff : 0;
    double ss = 0;
    for (size_t k = 0; k < ns.size(); k++) {
        double e = ys[k] - fit.constant * scaling_model_value(m, ns[k]);
        ss += e * e;
    }
    double rms = std::sqrt(ss / static_cast<double>(ns.size()));
    fit.residual = mean > 0 ? rms / mean : rms;
    return fit;
}

const ScalingFit &ResourceTable::fit(const std::string &method, const std::string &metric, ScalingModel m) const {
    for (const auto &f : fits)
        if (f.method == method && f.metric == metric && f.model == m) return f;
    throw std::out_of_range("no fit for " + method + "/" + metric);
}

const ScalingFit &ResourceTable::best(const std::string &method, const std::string &metric) const {
    for (const auto &f : fits)
        if (f.method == method && f.metric == metric && f.best) return f;
    throw std::out_of_range("no fit for " + method + "/" + metric);
}

std::string ResourceTable::to_csv() const {
    std::ostringstream out;
    out << "method,N,depth,cliffords,rotations,swaps\n";
    for (const auto &r : rows)
        out << r.method << ',' << r.n << ',' << r.depth << ',' << r.cliffords << ',' << r.rotations << ',' << r.swaps
            << '\n';
    return out.str();
}

nlohmann::json ResourceTable::to_json() const {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto &r : rows) {
        j["rows"].push_back({{"method", r.method},
                             {"N", r.n},
                             {"depth", r.depth},
                             {"cliffords", r.cliffords},
                             {"rotations", r.rotations},
                             {"swaps", r.swaps}});
    }
    j["fits"] = nlohmann::json::array();
    for (const auto &f : fits) j["fits"].push_back(f.to_json());
    return j;
}

namespace {

ResourceRow row_of(const std::string &method, uint32_t n, const ResourceReport &r) {
    auto swaps = r.counts.find("SWAP");
    return {method, n, r.depth, r.cliffords, r.rotations, r.swaps + (swaps == r.counts.end() ? 0 : swaps->second)};
}

const char *const kMethods[] = {"fswap_network", "qubit_fft", "qubit_fft_local", "fermion_ffft"};

}  // namespace

ResourceTable resource_table(const std::vector<uint32_t> &ns) {
    if (ns.size() < 2) throw std::invalid_argument("resource table needs at least two sizes");
    for (uint32_t n : ns)
        if (n < 2 || !is_power_of_two(n)) throw std::invalid_argument("sizes must be powers of two >= 2");

    std::vector<std::future<std::vector<ResourceRow>>> jobs;
    for (uint32_t n : ns) {
        jobs.push_back(std::async(std::launch::async, [n] {
            return std::vector<ResourceRow>{
                row_of(kMethods[0], n, fswap_network(n)),
                row_of(kMethods[1], n, count_resources(qubit_fft_fswap(n, FftRouting::Shuffle))),
                row_of(kMethods[2], n, count_resources(qubit_fft_fswap(n, FftRouting::Local))),
                row_of(kMethods[3], n, count_resources(ffft(n)))};
        }));
    }
    ResourceTable t;
    std::vector<std::vector<ResourceRow>> per_n;
    for (auto &j : jobs) per_n.push_back(j.get());
    for (int m = 0; m < 4; m++)
        for (const auto &rows : per_n) t.rows.push_back(rows[m]);

    for (const char *method : kMethods) {
        for (const char *metric : {"depth", "cliffords"}) {
            std::vector<double> xs, ys;
            for (const auto &r : t.rows) {
                if (r.method != method) continue;
                xs.push_back(r.n);
                ys.push_back(std::string(metric) == "depth" ? static_cast<double>(r.depth)
                                                            : static_cast<double>(r.cliffords));
            }
            size_t first = t.fits.size();
            double lowest = std::numeric_limits<double>::infinity();
            size_t best = first;
            for (ScalingModel m : {ScalingModel::Linear, ScalingModel::Quadratic, ScalingModel::Log, ScalingModel::NLogN}) {
                ScalingFit f = fit_scaling(m, xs, ys);
                f.method = method;
                f.metric = metric;
                if (f.residual < lowest - 1e-12) {
                    lowest = f.residual;
                    best = t.fits.size();
                }
                t.fits.push_back(f);
            }
            t.fits[best].best = true;
        }
    }
    return t;
}

}  // namespace fqc
