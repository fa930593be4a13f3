#include "whframes/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace whframes::io {

json to_json(const algebra::AlgebraicNumber& x) {
  json coords = json::array();
  for (const auto& q : x.coords()) coords.push_back(algebra::to_string(q));
  return {{"tower", x.tower().id()}, {"coords", coords}};
}

algebra::AlgebraicNumber algebraic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tower") || !j.contains("coords") || !j["coords"].is_array()) {
    throw std::invalid_argument("algebraic number needs \"tower\" and \"coords\"");
  }
  const auto tower = algebra::tower_by_id(j["tower"].get<std::string>());
  if (j["coords"].size() != tower->total_degree()) {
    throw std::invalid_argument("coords length does not match the degree of " + tower->id());
  }
  std::vector<algebra::Rational> coords;
  for (const auto& c : j["coords"]) {
    if (!c.is_string()) throw std::invalid_argument("coords entries must be \"p/q\" strings");
    coords.push_back(algebra::parse_rational(c.get<std::string>()));
  }
  return {tower, std::move(coords)};
}

json to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json to_json(const algebra::ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"d", m.rows()}, {"scalar", m.tower()->id()}, {"entries", rows}};
}

json to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"d", m.rows()}, {"scalar", "complex64"}, {"entries", rows}};
}

json to_json(const group::HeisenbergElement& g) { return {{"d", g.d}, {"a", g.a}, {"b", g.b}, {"c", g.c}}; }

group::HeisenbergElement heisenberg_from_json(const json& j) {
  return group::make_heisenberg(j.at("d").get<int>(), j.at("a").get<long long>(), j.at("b").get<long long>(),
                                j.value("c", 0LL));
}

json to_json(const sic::Fiducial& f) {
  json out = json::array();
  if (f.is_exact()) {
    for (const auto& x : f.exact()) out.push_back(to_json(x));
  } else {
    const auto v = f.numeric();
    for (Eigen::Index j = 0; j < v.size(); ++j) out.push_back(to_json(v(j)));
  }
  return out;
}

sic::Fiducial fiducial_from_json(const json& j, double tol) {
  const json& arr = j.is_object() && j.contains("vector") ? j["vector"] : j;
  if (!arr.is_array() || arr.size() < 2) throw std::invalid_argument("fiducial must be an array of at least 2 scalars");
  if (arr.front().is_object()) {
    algebra::ExactVector v;
    for (const auto& e : arr) v.push_back(algebraic_from_json(e));
    for (const auto& x : v)
      if (!x.tower().same_as(v.front().tower())) throw std::invalid_argument("fiducial entries from different towers");
    return sic::make_fiducial(std::move(v));
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& e = arr[k];
    if (e.is_number()) {
      v(static_cast<Eigen::Index>(k)) = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      v(static_cast<Eigen::Index>(k)) = {e[0].get<double>(), e[1].get<double>()};
    } else {
      throw std::invalid_argument("float fiducial entries must be [re, im]");
    }
  }
  return sic::make_fiducial(std::move(v), tol);
}

sic::Fiducial load_fiducial(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read fiducial file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed fiducial file " + path + ": " + e.what());
  }
  return fiducial_from_json(j, tol);
}

json to_json(const sic::SicReport& r) {
  json j{{"d", r.d},
         {"mode", r.exact ? "exact" : "float"},
         {"pass", r.pass},
         {"worst_deviation", r.worst_deviation},
         {"target", "1/" + std::to_string(r.d + 1)},
         {"pairs", r.pair_count},
         {"scalar", r.scalar_domain}};
  if (r.first_failure) j["first_failure"] = {r.first_failure->first, r.first_failure->second};
  return j;
}

json to_json(const mub::MubReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures) {
    if (fails.size() >= 16) break;
    fails.push_back({f[0], f[1], f[2], f[3]});
  }
  return {{"mode", r.exact ? "exact" : "float"}, {"pass", r.pass},           {"worst_deviation", r.worst_deviation},
          {"pairs", r.pair_count},               {"failure_count", r.failures.size()}, {"failures", fails}};
}

json to_json(const mub::Dim6Analysis& a) {
  json hist = json::object();
  for (const auto& [deg, count] : a.degree_histogram) hist[std::to_string(deg)] = count;
  json maximal = json::object();
  for (std::size_t i = 0; i < a.maximality.maximal.size(); ++i) maximal["B_" + std::to_string(i + 1)] = a.maximality.maximal[i];
  json nbrs = json::object();
  for (const auto& [v, nb] : a.maximality.large_neighborhoods) nbrs[std::to_string(v)] = nb;
  return {{"d", 6},
          {"n_unbiased_vectors", a.n_vectors},
          {"degree_histogram", hist},
          {"bases", a.bases},
          {"maximality", maximal},
          {"large_neighborhoods", nbrs},
          {"checks",
           {{"unbiased_to_reference", a.unbiased_to_reference},
            {"bases_match_reference", a.bases_match_reference},
            {"neighborhoods_match_reference", a.neighborhoods_match_reference}}},
          {"pass", a.pass()}};
}

std::string neighborhoods_csv(const mub::Dim6Analysis& a) {
  std::ostringstream os;
  os << "node,neighbors\n";
  for (const auto& [v, nb] : a.maximality.large_neighborhoods) {
    os << v << ",\"";
    for (std::size_t k = 0; k < nb.size(); ++k) os << (k ? " " : "") << nb[k];
    os << "\"\n";
  }
  return os.str();
}

}  // namespace whframes::io
