#include "json_io.hpp"

#include <sstream>

namespace higgslab {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw HlError(Errc::bad_input, "config schema: " + what);
}

const Json& expect_array(const Json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  return j;
}

std::string expect_string(const Json& j, const char* what) {
  if (!j.is_string()) schema_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<int> int_vector(const Json& j, const char* what) {
  expect_array(j, what);
  std::vector<int> out;
  for (const Json& e : j) {
    if (!e.is_number_integer()) schema_error(std::string(what) + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    schema_error(std::string("missing key '") + key + "'");
  return j.at(key);
}

long long require_int(const Json& j, const char* key) {
  const Json& v = require_key(j, key);
  if (!v.is_number_integer()) schema_error(std::string(key) + " must be an integer");
  return v.get<long long>();
}

Json field_to_json(Field f) {
  Json j;
  if (f.is_prime_field()) {
    j["type"] = "prime";
    j["modulus"] = std::to_string(f.modulus);
  } else {
    j["type"] = "rationals";
  }
  return j;
}

Field field_from_json(const Json& j) {
  std::string type = expect_string(require_key(j, "type"), "field type");
  if (type == "rationals") return Field::rationals();
  if (type != "prime") schema_error("field type must be 'prime' or 'rationals'");
  std::string mod = expect_string(require_key(j, "modulus"), "modulus");
  try {
    return Field::prime(std::stoull(mod));
  } catch (const HlError&) {
    throw;
  } catch (const std::exception&) {
    schema_error("modulus must be a decimal prime");
  }
}

Json poly_to_json(const Poly& p) {
  Json j = Json::array();
  for (int i = 0; i <= p.deg(); ++i) j.push_back(p.coeff(i).str());
  return j;
}

Poly poly_from_json(Field f, const Json& j) {
  expect_array(j, "polynomial");
  std::vector<Scalar> cs;
  for (const Json& e : j) cs.push_back(Scalar::parse(f, expect_string(e, "coefficient")));
  return Poly(f, std::move(cs));
}

Json mat_poly_to_json(const MatPoly& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(poly_to_json(m.at(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

MatPoly mat_poly_from_json(Field f, const Json& j) {
  expect_array(j, "matrix");
  int rows = (int)j.size();
  int cols = rows ? (int)expect_array(j.at(0), "matrix row").size() : 0;
  MatPoly m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = expect_array(j.at(i), "matrix row");
    if ((int)row.size() != cols) schema_error("ragged matrix rows");
    for (int k = 0; k < cols; ++k) m.at(i, k) = poly_from_json(f, row.at(k));
  }
  return m;
}

Json mat_scalar_to_json(const MatScalar& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    j.push_back(std::move(row));
  }
  return j;
}

MatScalar mat_scalar_from_json(Field f, const Json& j) {
  expect_array(j, "matrix");
  int rows = (int)j.size();
  int cols = rows ? (int)expect_array(j.at(0), "matrix row").size() : 0;
  MatScalar m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = expect_array(j.at(i), "matrix row");
    if ((int)row.size() != cols) schema_error("ragged matrix rows");
    for (int k = 0; k < cols; ++k)
      m.at(i, k) = Scalar::parse(f, expect_string(row.at(k), "matrix entry"));
  }
  return m;
}

Json bipoly_to_json(const BiPoly& b) {
  Json j = Json::array();
  for (int i = 0; i <= b.deg(); ++i) j.push_back(poly_to_json(b.coeff(i)));
  return j;
}

Json sc_to_json(const SpectralCoeffs& sc) {
  Json j;
  j["p"] = sc.p;
  j["q"] = sc.q;
  j["g"] = sc.g;
  Json a = Json::array();
  for (const Poly& ai : sc.a) a.push_back(poly_to_json(ai));
  j["a"] = std::move(a);
  return j;
}

SpectralCoeffs sc_from_json(Field f, const Json& j) {
  SpectralCoeffs sc;
  sc.p = (int)require_int(j, "p");
  sc.q = (int)require_int(j, "q");
  sc.g = (int)require_int(j, "g");
  const Json& a = expect_array(require_key(j, "a"), "a");
  for (const Json& ai : a) sc.a.push_back(poly_from_json(f, ai));
  sc.validate();
  return sc;
}

Json chart_to_json(const OrthHiggsChart& c) {
  Json j;
  j["v_weights"] = c.v_weights;
  j["w_weights"] = c.w_weights;
  j["v0_weights"] = c.v0_weights;
  j["qv"] = mat_poly_to_json(c.qv);
  j["qw"] = mat_poly_to_json(c.qw);
  j["beta"] = mat_poly_to_json(c.beta);
  j["gamma"] = mat_poly_to_json(c.gamma);
  return j;
}

OrthHiggsChart chart_from_json(Field f, const Json& j) {
  OrthHiggsChart c;
  c.v_weights = int_vector(require_key(j, "v_weights"), "v_weights");
  c.w_weights = int_vector(require_key(j, "w_weights"), "w_weights");
  c.v0_weights = int_vector(require_key(j, "v0_weights"), "v0_weights");
  c.qv = mat_poly_from_json(f, require_key(j, "qv"));
  c.qw = mat_poly_from_json(f, require_key(j, "qw"));
  c.beta = mat_poly_from_json(f, require_key(j, "beta"));
  c.gamma = mat_poly_from_json(f, require_key(j, "gamma"));
  c.validate_shapes();
  return c;
}

Json quadratic_bundle_to_json(const QuadraticBundle& v0) {
  Json j;
  j["weights"] = v0.weights;
  j["q0"] = mat_poly_to_json(v0.q0);
  j["basis"] = mat_poly_to_json(v0.basis);
  return j;
}

QuadraticBundle quadratic_bundle_from_json(Field f, const Json& j) {
  QuadraticBundle v0;
  v0.weights = int_vector(require_key(j, "weights"), "weights");
  v0.q0 = mat_poly_from_json(f, require_key(j, "q0"));
  if (j.contains("basis"))
    v0.basis = mat_poly_from_json(f, j.at("basis"));
  else
    v0.basis = MatPoly::identity(f, v0.q0.rows());
  return v0;
}

Json extension_to_json(const ExtensionData& e) {
  Json j;
  Json d = Json::array();
  for (const Scalar& x : e.points) d.push_back(x.str());
  j["D"] = std::move(d);
  Json vs = Json::array();
  for (const auto& v : e.vectors) {
    Json row = Json::array();
    for (const Scalar& s : v) row.push_back(s.str());
    vs.push_back(std::move(row));
  }
  j["i"] = std::move(vs);
  return j;
}

ExtensionData extension_from_json(Field f, const Json& j) {
  ExtensionData e;
  for (const Json& x : expect_array(require_key(j, "D"), "D"))
    e.points.push_back(Scalar::parse(f, expect_string(x, "branch point")));
  for (const Json& v : expect_array(require_key(j, "i"), "i")) {
    std::vector<Scalar> row;
    for (const Json& s : expect_array(v, "i entry"))
      row.push_back(Scalar::parse(f, expect_string(s, "i coefficient")));
    e.vectors.push_back(std::move(row));
  }
  return e;
}

Json split_signs_to_json(const SplitSpec& spec) {
  Json j;
  std::vector<Scalar> pts = spec.points();
  for (size_t k = 0; k < pts.size(); ++k)
    j[pts[k].str()] = spec.signs[k] == 1 ? "+1" : "-1";
  return j;
}

std::vector<int> split_signs_from_json(const SpectralCoeffs& sc, const Json& j) {
  if (!j.is_object()) schema_error("signs must map branch points to +1/-1");
  std::vector<Scalar> pts = branch_points(sc);
  if (j.size() != pts.size()) schema_error("one sign per branch point expected");
  std::vector<int> signs;
  for (const Scalar& x : pts) {
    std::string key = x.str();
    if (!j.contains(key)) schema_error("missing sign for branch point " + key);
    std::string v = expect_string(j.at(key), "sign");
    if (v == "+1" || v == "1")
      signs.push_back(1);
    else if (v == "-1")
      signs.push_back(-1);
    else
      schema_error("signs must be '+1' or '-1'");
  }
  return signs;
}

Json bundle_to_json(const EquivariantBundle& m) {
  Json j;
  j["degrees"] = m.summand_degrees;
  j["qm"] = mat_scalar_to_json(m.qm);
  Json sig = Json::array();
  for (const MatScalar& s : m.sigma) sig.push_back(mat_scalar_to_json(s));
  j["sigma"] = std::move(sig);
  j["orientation"] = m.orientation;
  j["decomposable"] = m.decomposable;
  return j;
}

EquivariantBundle bundle_from_json(Field f, const Json& j) {
  EquivariantBundle m;
  m.summand_degrees = int_vector(require_key(j, "degrees"), "degrees");
  m.qm = mat_scalar_from_json(f, require_key(j, "qm"));
  for (const Json& s : expect_array(require_key(j, "sigma"), "sigma"))
    m.sigma.push_back(mat_scalar_from_json(f, s));
  if (j.contains("orientation")) m.orientation = (int)require_int(j, "orientation");
  if (j.contains("decomposable")) {
    if (!j.at("decomposable").is_boolean()) schema_error("decomposable must be a bool");
    m.decomposable = j.at("decomposable").get<bool>();
  }
  return m;
}

Json checks_to_json(const CheckList& cl) {
  Json j = Json::array();
  for (const CheckResult& c : cl.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    j.push_back(std::move(e));
  }
  return j;
}

Json z2vec_to_json(const Z2Vec& v) {
  Json j = Json::array();
  for (int b : v) j.push_back(b);
  return j;
}

Z2Vec z2vec_from_json(const Json& j) {
  expect_array(j, "bit vector");
  Z2Vec v;
  for (const Json& e : j) {
    if (!e.is_number_integer()) schema_error("bits must be integers");
    int b = e.get<int>();
    if (b != 0 && b != 1) schema_error("bits must be 0 or 1");
    v.push_back(b);
  }
  return v;
}

Json census_rows_to_json(const std::vector<CensusRow>& rows) {
  Json j = Json::array();
  for (const CensusRow& r : rows) {
    Json e;
    e["p"] = r.p;
    e["q"] = r.q;
    e["g"] = r.g;
    e["g_spectral"] = r.genera.g_spectral;
    e["g_quotient"] = r.genera.g_quotient;
    e["g_auxiliary"] = r.genera.g_auxiliary;
    e["half_degree"] = r.genera.half_degree;
    e["torsor_order"] = r.torsor.str();
    e["fiber_exponent"] = r.fiber_exp;
    e["prym_dim"] = r.prym_dim;
    e["stack_dim"] = r.stack_dim;
    e["rh_ok"] = r.rh_ok;
    e["exponent_ok"] = r.exponent_ok;
    j.push_back(std::move(e));
  }
  return j;
}

std::string census_rows_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "p,q,g,g_spectral,g_quotient,g_auxiliary,half_degree,torsor_order,"
        "fiber_exponent,prym_dim,stack_dim,rh_ok,exponent_ok\n";
  for (const CensusRow& r : rows) {
    os << r.p << ',' << r.q << ',' << r.g << ',' << r.genera.g_spectral << ','
       << r.genera.g_quotient << ',' << r.genera.g_auxiliary << ','
       << r.genera.half_degree << ',' << r.torsor.str() << ',' << r.fiber_exp
       << ',' << r.prym_dim << ',' << r.stack_dim << ',' << (r.rh_ok ? 1 : 0)
       << ',' << (r.exponent_ok ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace higgslab
