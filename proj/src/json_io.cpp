#include "latticeforge/json_io.hpp"

#include <limits>

#include "latticeforge/errors.hpp"

namespace lf {

namespace {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) {
    long x = v.get_si();
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max()) {
      return Json(static_cast<std::int64_t>(x));
    }
  }
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  fail("SyntaxError", "expected an integer or a decimal string");
}

}  // namespace

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail("SyntaxError", "malformed rational: " + s);
  }
}

Json lattice_to_json(const IntegerLattice& lattice) {
  Json rows = Json::array();
  for (Index i = 0; i < lattice.rank(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < lattice.rank(); ++j) row.push_back(int_to_json(lattice.gram()(i, j)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["gram"] = std::move(rows);
  return out;
}

IntegerLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram") || !j["gram"].is_array()) {
    fail("SyntaxError", "lattice JSON must be an object with a \"gram\" array");
  }
  const Json& rows = j["gram"];
  const Index n = static_cast<Index>(rows.size());
  IntMat g(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      fail("SyntaxError", "\"gram\" must be a square matrix");
    }
    for (Index c = 0; c < n; ++c) g(i, c) = int_from_json(row[static_cast<size_t>(c)]);
  }
  return IntegerLattice::from_gram(g);
}

Json form_to_json(const FiniteQuadraticForm& q) {
  Json orders = Json::array();
  for (const Int& n : q.orders()) orders.push_back(int_to_json(n));
  Json qvals = Json::array();
  for (const Rat& v : q.q_diag()) qvals.push_back(rat_to_string(v));
  Json b = Json::array();
  for (Index i = 0; i < q.b_matrix().rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < q.b_matrix().cols(); ++j) row.push_back(rat_to_string(q.b_matrix()(i, j)));
    b.push_back(std::move(row));
  }
  Json out;
  out["orders"] = std::move(orders);
  out["q"] = std::move(qvals);
  out["b"] = std::move(b);
  return out;
}

Json report_to_json(const ClassificationReport& report, bool explain) {
  Json out;
  out["rho"] = report.rho;
  out["ell"] = report.ell;
  out["d"] = int_to_json(report.d);
  out["kappa"] = rat_to_string(report.kappa);
  out["verdict"] = to_string(report.verdict);
  if (explain) {
    Json reasons = Json::array();
    for (const std::string& r : report.reasons) reasons.push_back(r);
    out["reasons"] = std::move(reasons);
  }
  return out;
}

}  // namespace lf
