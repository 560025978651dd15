#pragma once

// File formats:
//   samples   CSV, header "a,b,c,d", one draw per row, 17 significant digits, LF endings
//   metadata  JSON sidecar {seed, class, label, axes{mu1,mu2,mu3}, params, n}
//   covariance JSON 4×4 arrays: real → numbers, complex → [re, im], quaternion → [a, b, c, d]
//   report    JSON {candidates[{class, label, axes, residual, frobenius_residual, passed}],
//                   chosen, alias, tolerance, c, n, sigma2_hat}

#include "qprop/covariance.hpp"
#include "qprop/estimation.hpp"
#include "qprop/sampling.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace qprop {

/// %.17g formatting used for every number written to CSV.
std::string format_double(double x);

void write_samples_csv(std::ostream& os, const std::vector<Quaternion>& draws);

/// Throws DataError naming the 1-based line of the first malformed row.
std::vector<Quaternion> read_samples_csv(std::istream& is);

nlohmann::json axes_json(const QuaternionBasis& basis);
nlohmann::json params_json(const ClassParams& params);
nlohmann::json metadata_json(const SampleMetadata& meta);

nlohmann::json covariance_json(const CovarianceR& g);
nlohmann::json covariance_json(const CovarianceC& g);
nlohmann::json covariance_json(const CovarianceH& g);
/// {"real": ..., "complex": ..., "quaternion": ...}
nlohmann::json covariance_json(const CovarianceFaces& faces);

nlohmann::json report_json(const PropernessReport& report);

}  // namespace qprop
