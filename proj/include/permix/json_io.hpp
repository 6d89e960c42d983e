#pragma once

#include <json.hpp>
#include <string>

#include "permix/blocks.hpp"
#include "permix/census.hpp"
#include "permix/classify.hpp"
#include "permix/common.hpp"
#include "permix/permutation.hpp"
#include "permix/rates.hpp"
#include "permix/spectrum.hpp"

namespace permix {

using Json = nlohmann::ordered_json;

inline Json to_json(const Permutation& p) { return Json(p.images()); }

inline Json to_json(const BlockDecomposition& b) {
    Json arr = Json::array();
    for (const auto& blk : b.blocks()) arr.push_back(blk);
    return arr;
}

inline Json to_json(const MixingVerdict& v) {
    Json j;
    j["status"] = v.mixing() ? "mixing" : "non_mixing";
    if (v.witness) j["witness"] = to_json(*v.witness);
    if (v.ergodic) j["ergodic"] = *v.ergodic;
    return j;
}

// Eigenvalues clustered to multiplicity entries for display.
inline Json to_json(const Spectrum& s, double cluster_tol = 1e-9) {
    Json j;
    Json eigs = Json::array();
    size_t i = 0;
    while (i < s.eigenvalues.size()) {
        size_t k = i + 1;
        while (k < s.eigenvalues.size() && std::abs(s.eigenvalues[k] - s.eigenvalues[i]) < cluster_tol)
            ++k;
        eigs.push_back(Json{{"re", s.eigenvalues[i].real()},
                            {"im", s.eigenvalues[i].imag()},
                            {"mult", k - i}});
        i = k;
    }
    j["eigenvalues"] = eigs;
    j["unit_circle_count"] = s.unit_circle_count;
    j["tolerance"] = s.tolerance;
    return j;
}

inline Json to_json(const RateReport& r) {
    Json j;
    j["lambda_sigma"] = r.lambda_sigma;
    j["spectral_mixing"] = r.spectral_mixing;
    j["r_ess"] = r.r_ess;
    j["eigenvalue_1_multiplicity"] = r.eigenvalue_1_multiplicity;
    j["unit_circle_count"] = r.unit_circle_count;
    j["decelerating"] = r.decelerating;
    j["exact_path"] = r.exact_path;
    return j;
}

inline Json to_json(const CensusRow& row) {
    Json j;
    j["m"] = row.m;
    j["N"] = row.N;
    j["total"] = row.total.str();
    j["nonmixing_count"] = row.nonmixing_count.str();
    j["slow_count"] = row.slow_count.str();
    switch (row.method) {
        case CensusRow::Method::Exhaustive: j["method"] = "exhaustive"; break;
        case CensusRow::Method::ClosedForm: j["method"] = "closed_form"; break;
        case CensusRow::Method::MonteCarlo: j["method"] = "monte_carlo"; break;
    }
    return j;
}

inline Json to_json(const MCEstimate& e) {
    Json j;
    j["samples"] = e.samples;
    j["hits"] = e.hits;
    j["proportion"] = e.proportion;
    j["std_error"] = e.std_error;
    j["seed"] = e.seed;
    return j;
}

inline Permutation permutation_from_json(const Json& j) {
    std::vector<int> v = j.get<std::vector<int>>();
    return Permutation(std::move(v));
}

}  // namespace permix
