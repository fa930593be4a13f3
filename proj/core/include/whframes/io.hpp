#pragma once

#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "whframes/algebra.hpp"
#include "whframes/exact_linalg.hpp"
#include "whframes/group.hpp"
#include "whframes/mub.hpp"
#include "whframes/sic.hpp"

namespace whframes::io {

using nlohmann::json;

/// {"tower": id, "coords": ["p/q", ...]}
json to_json(const algebra::AlgebraicNumber& x);
algebra::AlgebraicNumber algebraic_from_json(const json& j);

/// [re, im]
json to_json(std::complex<double> z);

/// {"d": d, "scalar": tower id | "complex64", "entries": [[...], ...]} row-major.
json to_json(const algebra::ExactMatrix& m);
json to_json(const Eigen::MatrixXcd& m);

/// {"d":, "a":, "b":, "c":}
json to_json(const group::HeisenbergElement& g);
group::HeisenbergElement heisenberg_from_json(const json& j);

/// A JSON array of scalars, exact objects or [re, im] pairs.
json to_json(const sic::Fiducial& f);
/// Accepts the array form or {"vector": [...]}.  Throws std::invalid_argument
/// on malformed input.
sic::Fiducial fiducial_from_json(const json& j, double tol = 1e-10);
sic::Fiducial load_fiducial(const std::string& path, double tol = 1e-10);

/// {"d":, "mode": "exact"|"float", "pass":, "worst_deviation":, "target": "1/(d+1)", "pairs":}
json to_json(const sic::SicReport& r);
json to_json(const mub::MubReport& r);
json to_json(const mub::Dim6Analysis& a);
/// node,neighbors rows for the nodes with large neighborhoods.
std::string neighborhoods_csv(const mub::Dim6Analysis& a);

}  // namespace whframes::io
