#include "ty/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

namespace ty {

namespace {

Json rational_json(const Rational& q) {
  auto part = [](const mpz_class& z) -> Json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return Json::array({part(q.get_num()), part(q.get_den())});
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw JsonError("bad integer \"" + j.get<std::string>() + "\"");
    return z;
  }
  throw JsonError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw JsonError("rational must be [num, den], got " + j.dump());
  const mpz_class num = integer_from_json(j[0]), den = integer_from_json(j[1]);
  if (den == 0) throw JsonError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw JsonError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

void require_square(const Json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw JsonError(std::string(what) + " must have " + std::to_string(n) + " rows");
}

}  // namespace

Json to_json(const Cyclo& s) {
  const Cyclo m = s.minimal();
  Json c = Json::array();
  for (const auto& q : m.coeffs()) c.push_back(rational_json(q));
  return Json{{"M", m.modulus()}, {"c", c}};
}

Cyclo cyclo_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyclo(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_cyclo(j.get<std::string>());
    } catch (const ScalarError& e) {
      throw JsonError(std::string("bad scalar text: ") + e.what());
    }
  }
  if (!j.is_object()) throw JsonError("scalar must be an object, integer or string, got " + j.dump());
  const int M = int_field(j, "M");
  if (M < 1) throw JsonError("scalar modulus must be positive");
  const Json& c = field(j, "c");
  const size_t phi = Cyclo(Rational(0), M).coeffs().size();
  if (!c.is_array() || c.size() != phi)
    throw JsonError("scalar with M = " + std::to_string(M) + " needs " + std::to_string(phi) + " coefficients");
  Cyclo out(Rational(0), M);
  for (size_t k = 0; k < phi; ++k) {
    const Rational q = rational_from_json(c[k]);
    if (sgn(q) != 0) out += Cyclo(q) * Cyclo::zeta(M, static_cast<long>(k));
  }
  return out;
}

Json to_json(const Group& G) {
  if (G.from_raw_table()) {
    const int n = G.size();
    Json table = Json::array(), deg = Json::array();
    for (int a = 0; a < n; ++a) {
      Json row = Json::array();
      for (int b = 0; b < n; ++b) row.push_back(G.mul(a, b));
      table.push_back(row);
      deg.push_back(G.deg(a));
    }
    return Json{{"table", table}, {"deg", deg}};
  }
  return Json{{"cyclic", G.cyclic_orders()}, {"dihedral", G.is_dihedral()}};
}

Group group_from_json(const Json& j) {
  if (!j.is_object()) throw JsonError("group must be an object");
  try {
    if (j.contains("table")) {
      auto mul = j.at("table").get<std::vector<std::vector<int>>>();
      std::vector<int> deg;
      if (j.contains("deg")) deg = j.at("deg").get<std::vector<int>>();
      return Group::from_table(std::move(mul), std::move(deg));
    }
    std::vector<int> orders;
    if (j.contains("cyclic")) orders = j.at("cyclic").get<std::vector<int>>();
    for (int n : orders)
      if (n < 1) throw JsonError("cyclic orders must be positive");
    const bool dihedral = j.contains("dihedral") && j.at("dihedral").get<bool>();
    return dihedral ? Group::dihedral(orders) : Group::abelian(orders);
  } catch (const Json::exception& e) {
    throw JsonError(std::string("bad group: ") + e.what());
  } catch (const GroupError& e) {
    throw JsonError(std::string("bad group: ") + e.what());
  }
}

Json to_json(const Fn1& f) {
  Json out = Json::array();
  for (const auto& v : f) out.push_back(to_json(v));
  return out;
}

Json to_json(const Fn2& f) {
  Json out = Json::array();
  for (int a = 0; a < f.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < f.size(); ++b) row.push_back(to_json(f(a, b)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const Fn3& f) {
  Json out = Json::array();
  for (int a = 0; a < f.size(); ++a) {
    Json plane = Json::array();
    for (int b = 0; b < f.size(); ++b) {
      Json row = Json::array();
      for (int c = 0; c < f.size(); ++c) row.push_back(to_json(f(a, b, c)));
      plane.push_back(row);
    }
    out.push_back(plane);
  }
  return out;
}

Fn1 fn1_from_json(const Json& j, int n) {
  require_square(j, n, "function on G");
  Fn1 out;
  for (const auto& v : j) out.push_back(cyclo_from_json(v));
  return out;
}

Fn2 fn2_from_json(const Json& j, int n) {
  require_square(j, n, "table");
  Fn2 out(n);
  for (int a = 0; a < n; ++a) {
    require_square(j[a], n, "table row");
    for (int b = 0; b < n; ++b) out(a, b) = cyclo_from_json(j[a][b]);
  }
  return out;
}

Fn3 fn3_from_json(const Json& j, int n) {
  require_square(j, n, "alpha");
  Fn3 out(n);
  for (int a = 0; a < n; ++a) {
    require_square(j[a], n, "alpha plane");
    for (int b = 0; b < n; ++b) {
      require_square(j[a][b], n, "alpha row");
      for (int c = 0; c < n; ++c) out(a, b, c) = cyclo_from_json(j[a][b][c]);
    }
  }
  return out;
}

namespace {

Case case_from_json(const Json& j) {
  const Json& c = field(j, "case");
  if (!c.is_string()) throw JsonError("\"case\" must be a string");
  try {
    return parse_case(c.get<std::string>());
  } catch (const std::exception& e) {
    throw JsonError(e.what());
  }
}

bool g_from_json(const Json& j) {
  if (!j.contains("g")) return false;
  const Json& g = j.at("g");
  if (g == "id") return false;
  if (g == "conj") return true;
  throw JsonError("\"g\" must be \"id\" or \"conj\"");
}

}  // namespace

Json to_json(const TYData& d) {
  Json j{{"case", case_name(d.kase)}, {"group", to_json(d.group)}, {"chi", to_json(d.chi)}};
  if (d.kase == Case::RealComplex) j["g"] = d.g_conj ? "conj" : "id";
  if (d.tau) j["tau"] = to_json(*d.tau);
  return j;
}

TYData data_from_json(const Json& j) {
  if (!j.is_object()) throw JsonError("data must be an object");
  TYData d;
  d.kase = case_from_json(j);
  d.group = group_from_json(field(j, "group"));
  d.g_conj = g_from_json(j);
  d.chi = fn2_from_json(field(j, "chi"), d.group.size());
  if (j.contains("tau") && !j.at("tau").is_null()) d.tau = cyclo_from_json(j.at("tau"));
  return d;
}

Json to_json(const CoeffTable& t) {
  Json tables{{"alpha", to_json(t.alpha)}};
  for (const auto& name : table_names())
    if (name != "alpha") tables[name] = to_json(t.table(name));
  if (t.kase == Case::RealComplex) tables["gamma_i"] = to_json(t.gamma_i);
  Json j{{"case", case_name(t.kase)}, {"group", to_json(t.group)}, {"tables", tables}};
  if (t.kase == Case::RealComplex) j["g"] = t.g_conj ? "conj" : "id";
  return j;
}

CoeffTable table_from_json(const Json& j) {
  if (!j.is_object()) throw JsonError("table must be an object");
  const Case c = case_from_json(j);
  const Group G = group_from_json(field(j, "group"));
  CoeffTable t = trivial_table(c, G, g_from_json(j));
  const Json& tables = field(j, "tables");
  const int n = G.size();
  t.alpha = fn3_from_json(field(tables, "alpha"), n);
  for (const auto& name : table_names())
    if (name != "alpha") t.table(name) = fn2_from_json(field(tables, name.c_str()), n);
  if (c == Case::RealComplex && tables.contains("gamma_i")) t.gamma_i = fn2_from_json(tables.at("gamma_i"), n);
  return t;
}

Json to_json(const PentagonReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"eq", x.eq}, {"args", x.args}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  return Json{{"pass", r.pass()}, {"case", case_name(r.kase)}, {"violations", v}};
}

Json to_json(const CheckReport& r) { return Json{{"pass", r.ok()}, {"failures", r.failures}}; }

Json to_json(const GaugeTuple& g) {
  return Json{{"case", case_name(g.kase)}, {"theta", to_json(g.theta)}, {"phi", to_json(g.phi)},
              {"psi", to_json(g.psi)}, {"omega", to_json(g.omega)}};
}

GaugeTuple gauge_from_json(const Json& j, Case c, int n) {
  GaugeTuple g = identity_gauge(c, n);
  if (j.contains("theta")) g.theta = fn2_from_json(j.at("theta"), n);
  if (j.contains("phi")) g.phi = fn1_from_json(j.at("phi"), n);
  if (j.contains("psi")) g.psi = fn1_from_json(j.at("psi"), n);
  if (j.contains("omega")) g.omega = fn1_from_json(j.at("omega"), n);
  return g;
}

Json to_json(const EquivWitness& w) {
  return Json{{"f", w.f}, {"h", w.h_conj ? "conj" : "id"}, {"lambda", to_json(w.lambda)}, {"tensorator", to_json(w.tensorator)}};
}

Json to_json(const Bicharacter& b) {
  return Json{{"group", to_json(b.group)}, {"flavor", flavor_name(b.flavor)}, {"chi", to_json(b.chi)}};
}

Json to_json(const Classification& c) {
  Json classes = Json::array();
  for (const auto& e : c.classes) classes.push_back(Json{{"representative", to_json(e.representative)}, {"members", e.members}});
  return Json{{"admissible", c.admissible.size()}, {"count", c.classes.size()}, {"classes", classes}};
}

Json tetrahedral_dump(const RealizedCategory& rc) {
  const int r = rc.m() + 1;
  Json dims = Json::array();
  for (int x = 0; x < r; ++x) dims.push_back(rc.end_dim(x));
  Json entries = Json::array();
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z) {
        const Morphism& f = rc.tetrahedral(x, y, z);
        Json blocks = Json::array();
        for (const auto& [k, m] : f.blocks) {
          Json rows = Json::array();
          for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index jj = 0; jj < m.cols(); ++jj) row.push_back(to_json(m(i, jj)));
            rows.push_back(row);
          }
          blocks.push_back(Json{{"tgt", k.first}, {"src", k.second}, {"matrix", rows}});
        }
        entries.push_back(Json{{"xyz", {x, y, z}}, {"src", f.src}, {"tgt", f.tgt}, {"blocks", blocks}});
      }
  return Json{{"case", case_name(rc.kase())}, {"m", rc.m()}, {"end_dims", dims}, {"tetrahedral", entries}};
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw JsonError("cannot write " + path);
  out << text;
}

}  // namespace ty
