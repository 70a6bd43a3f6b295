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

#include "fqc/codes/memory.h"

#include <cmath>
#include <future>
#include <stdexcept>

#include "fqc/codes/decoder.h"
#include "fqc/sim/measure.h"

namespace fqc {

namespace {

using MQS = MajoranaQubitString;

struct Tally {
    uint64_t shots = 0, failures = 0, detected = 0, undecodable = 0;
};

Tally run_shard(const StabilizerCode &code, const ErrorModel &model, uint32_t rounds, uint64_t shots, Rng rng) {
    Tally t;
    for (uint64_t s = 0; s < shots; s++) {
        MQS err;
        bool det = false, stuck = false;
        for (uint32_t r = 0; r < rounds; r++) {
            for (uint32_t i = 0; i < code.n_sites; i++) {
                if (model.phase_rate > 0 && rng.uniform() < model.phase_rate) err = err * MQS::parity(i);
                if (model.loss_rate > 0 && rng.uniform() < model.loss_rate) {
                    err = err * (rng.uniform() < 0.5 ? MQS::gamma(i) : MQS::gamma_tilde(i));
                }
            }
            Syndrome syn = syndrome_of(code.generators, err);
            bool trivial = true;
            for (int b : syn) trivial = trivial && !b;
            if (trivial) continue;
            det = true;
            Correction c = decode(code, syn);
            if (!c.correctable) {
                stuck = true;
                continue;
            }
            err = err * c.op;
        }
        bool fail = commutation_class(err, code.logical_gamma) == Commutation::Anticommutes ||
                    commutation_class(err, code.logical_gamma_tilde) == Commutation::Anticommutes;
        t.shots++;
        t.failures += fail;
        t.detected += det;
        t.undecodable += stuck;
    }
    return t;
}

}  // namespace

nlohmann::json MemoryResult::to_json() const {
    return {{"shots", shots},     {"failures", failures}, {"detected", detected}, {"undecodable", undecodable},
            {"rate", rate},       {"ci_low", ci_low},     {"ci_high", ci_high}};
}

MemoryResult memory_experiment(const StabilizerCode &code, const ErrorModel &model, const MemoryConfig &cfg) {
    for (double p : {model.phase_rate, model.loss_rate}) {
        if (!(p >= 0 && p <= 1)) throw std::invalid_argument("error rates must lie in [0, 1]");
    }
    const uint32_t shards = std::max<uint32_t>(1, cfg.shards);
    std::vector<std::future<Tally>> jobs;
    for (uint32_t k = 0; k < shards; k++) {
        uint64_t n = cfg.shots / shards + (k < cfg.shots % shards ? 1 : 0);
        jobs.push_back(std::async(std::launch::async, run_shard, std::cref(code), model, cfg.rounds, n,
                                  Rng::stream(cfg.seed, k)));
    }
    MemoryResult r;
    for (auto &j : jobs) {
        Tally t = j.get();
        r.shots += t.shots;
        r.failures += t.failures;
        r.detected += t.detected;
        r.undecodable += t.undecodable;
    }
    if (r.shots) {
        const double n = static_cast<double>(r.shots), z = 1.959963984540054;
        const double ph = r.failures / n;
        r.rate = ph;
        double denom = 1 + z * z / n;
        double centre = (ph + z * z / (2 * n)) / denom;
        double half = z * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n)) / denom;
        r.ci_low = std::max(0.0, centre - half);
        r.ci_high = std::min(1.0, centre + half);
    }
    return r;
}

double repetition_failure_probability(uint32_t n, double p) {
    // Enumerate error patterns; the decoder fails when it picks the complement chain.
    double total = 0;
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        Syndrome s(n - 1);
        int w = 0;
        for (uint32_t i = 0; i < n; i++) w += (x >> i) & 1;
        for (uint32_t k = 0; k + 1 < n; k++) s[k] = ((x >> k) ^ (x >> (k + 1))) & 1;
        std::vector<uint32_t> fix = decode_repetition(s);
        uint64_t y = 0;
        for (uint32_t i : fix) y |= uint64_t{1} << i;
        if ((x ^ y) != 0) total += std::pow(p, w) * std::pow(1 - p, static_cast<int>(n) - w);
    }
    return total;
}

}  // namespace fqc
