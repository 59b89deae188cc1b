// tycli: construct, verify, classify and compare Tambara-Yamagami data.
// Exit codes: 0 pass / equivalent, 1 fail / inequivalent, 2 input error.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ty/fusion.hpp"
#include "ty/gauge_equiv.hpp"
#include "ty/json_io.hpp"
#include "ty/pentagon.hpp"
#include "ty/realization.hpp"

using namespace ty;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Flavor parse_flavor(const std::string& s) {
  for (Flavor f : {Flavor::RealSymmetric, Flavor::ComplexSymmetric, Flavor::SkewSymmetric, Flavor::Hermitian})
    if (flavor_name(f) == s) return f;
  throw InputError("unknown flavor '" + s + "' (real-symmetric, complex-symmetric, skew-symmetric, hermitian)");
}

bool parse_g(const std::string& s) {
  if (s == "id") return false;
  if (s == "conj") return true;
  throw InputError("g must be id or conj");
}

int cmd_construct(const std::string& in, const std::string& out) {
  const TYData d = data_from_json(read_json_file(in));
  const CoeffTable t = build(d);
  Json j = to_json(t);
  j["data"] = to_json(d);
  write_json_file(out, j);
  return kPass;
}

struct VerifyOpts {
  bool oracle = false, rigidity = false;
  int eq19_factor = 4;
  std::string data, dump;
};

int cmd_verify(const std::string& in, const std::string& out, const VerifyOpts& o) {
  const Json j = read_json_file(in);
  const CoeffTable t = table_from_json(j);
  const PentagonReport rep = t.kase == Case::Quaternionic ? check_quaternionic(t, o.eq19_factor) : check_pentagon(t);
  Json res = to_json(rep);
  bool pass = rep.pass();
  if (o.oracle || o.rigidity || !o.dump.empty()) {
    const RealizedCategory rc(t);
    if (o.oracle) {
      const PentagonReport m = pentagon_matrix_check(rc);
      res["oracle"] = to_json(m);
      res["oracle_agrees"] = m.pass() == rep.pass();
      pass = pass && m.pass();
    }
    if (o.rigidity) {
      std::optional<TYData> d;
      if (!o.data.empty()) d = data_from_json(read_json_file(o.data));
      else if (j.contains("data")) d = data_from_json(j.at("data"));
      if (!d) throw InputError("--rigidity needs classification data: pass --data or use a table written by construct");
      CheckReport r = rigidity_check(rc, *d);
      const CheckReport adj = adjoint_check(rc);
      r.failures.insert(r.failures.end(), adj.failures.begin(), adj.failures.end());
      res["rigidity"] = to_json(r);
      pass = pass && r.ok();
    }
    if (!o.dump.empty()) write_json_file(o.dump, tetrahedral_dump(rc));
  }
  res["pass"] = pass;
  write_json_file(out, res);
  return pass ? kPass : kFail;
}

int cmd_classify(const std::string& kase, const std::vector<int>& orders, const std::string& g, const std::string& out) {
  std::optional<bool> gf;
  if (!g.empty()) gf = parse_g(g);
  const Case c = parse_case(kase);
  if (gf && c != Case::RealComplex) throw InputError("--g applies to the realcomplex case only");
  const Classification cl = classify(c, orders, gf);
  Json j = to_json(cl);
  j["case"] = case_name(c);
  j["orders"] = orders;
  if (gf) j["g"] = *gf ? "conj" : "id";
  write_json_file(out, j);
  return kPass;
}

int cmd_equiv(const std::string& a, const std::string& b, const std::string& out) {
  const TYData d = data_from_json(read_json_file(a)), d2 = data_from_json(read_json_file(b));
  validate(d);
  validate(d2);
  const auto w = decide_equiv(d, d2);
  if (!w) {
    write_json_file(out, Json{{"equivalent", false}, {"result", "inequivalent"}});
    return kFail;
  }
  Json j{{"equivalent", true}, {"witness", to_json(*w)}};
  const CheckReport hex = check_hexagons(d, d2, *w);
  j["hexagons"] = to_json(hex);
  write_json_file(out, j);
  return hex.ok() ? kPass : kFail;
}

int cmd_enumerate(const std::vector<int>& orders, const std::string& flavor, bool dihedral, const std::string& g,
                  const std::string& out) {
  Json list = Json::array();
  if (!dihedral) {
    for (const auto& b : enumerate_bichars(Group::abelian(orders), parse_flavor(flavor))) list.push_back(to_json(b));
  } else {
    // Bicocycles on A x| Z/2 extending each nondegenerate symmetric chi on A.
    const Group G = Group::dihedral(orders);
    const bool gc = parse_g(g.empty() ? "id" : g);
    for (const auto& b : enumerate_bichars(Group::abelian(orders), Flavor::ComplexSymmetric))
      for (const auto& bc : extend_to_bicocycle(G, b.chi, gc))
        list.push_back(Json{{"group", to_json(bc.group)}, {"g", bc.g_conj ? "conj" : "id"}, {"chi", to_json(bc.chi)}});
  }
  write_json_file(out, Json{{"count", list.size()}, {"items", list}});
  return kPass;
}

int cmd_perturb(const std::string& in, const std::string& which, const std::vector<int>& idx, const std::string& factor,
                const std::string& out) {
  const Json j = read_json_file(in);
  const CoeffTable t = table_from_json(j);
  const int n = t.n();
  for (int x : idx)
    if (x < 0 || x >= n) throw InputError("index out of range for a group of order " + std::to_string(n));
  CoeffTable p;
  try {
    p = perturb(t, which, idx, parse_cyclo(factor));
  } catch (const ScalarError& e) {
    throw InputError(std::string("bad factor: ") + e.what());
  }
  // The perturbed table no longer comes from the data, so the data is dropped.
  write_json_file(out, to_json(p));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tambara-Yamagami categories over the reals: construct, verify, classify"};
  app.require_subcommand(1);
  std::string out = "-";

  std::string in;
  auto* construct = app.add_subcommand("construct", "build the coefficient table of classification data");
  construct->add_option("data", in, "data JSON ('-' for stdin)")->required();
  construct->add_option("-o,--output", out, "output file");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "check the pentagon equations of a table");
  verify->add_option("table", in, "table JSON ('-' for stdin)")->required();
  verify->add_option("-o,--output", out, "report file");
  verify->add_flag("--oracle", vo.oracle, "also run the matrix-level pentagon check");
  verify->add_flag("--rigidity", vo.rigidity, "check snake identities and the inverse associator");
  verify->add_option("--data", vo.data, "classification data for --rigidity");
  verify->add_option("--eq19-factor", vo.eq19_factor, "factor in the last quaternionic equation")->capture_default_str();
  verify->add_option("--dump", vo.dump, "write all tetrahedral matrices to this file");

  std::string kase, g, flavor = "complex-symmetric";
  std::vector<int> orders;
  auto* cls = app.add_subcommand("classify", "enumerate admissible data and count equivalence classes");
  cls->add_option("--case", kase, "split, quaternionic, realcomplex or galois")->required();
  cls->add_option("--cyclic", orders, "cyclic orders of A")->delimiter(',');
  cls->add_option("--g", g, "realcomplex only: id or conj (both when absent)");
  cls->add_option("-o,--output", out, "output file");

  std::string a, b;
  auto* eq = app.add_subcommand("equiv", "decide monoidal equivalence of two data files");
  eq->add_option("a", a, "first data JSON")->required();
  eq->add_option("b", b, "second data JSON")->required();
  eq->add_option("-o,--output", out, "output file");

  bool dihedral = false;
  auto* en = app.add_subcommand("enumerate-bichar", "list nondegenerate bicharacters or bicocycles");
  en->add_option("--cyclic", orders, "cyclic orders of A")->delimiter(',');
  en->add_option("--flavor", flavor, "real-symmetric, complex-symmetric, skew-symmetric or hermitian")->capture_default_str();
  en->add_flag("--dihedral", dihedral, "bicocycles on A x| Z/2 instead");
  en->add_option("--g", g, "with --dihedral: id or conj");
  en->add_option("-o,--output", out, "output file");

  std::string which, factor = "2";
  std::vector<int> idx;
  auto* pert = app.add_subcommand("perturb", "multiply one table entry by a factor");
  pert->add_option("table", in, "table JSON")->required();
  pert->add_option("--which", which, "alpha, alpha1..3, beta1..3 or gamma")->required();
  pert->add_option("--idx", idx, "entry indices")->delimiter(',')->required();
  pert->add_option("--factor", factor, "scalar text, e.g. 2 or z(4)")->capture_default_str();
  pert->add_option("-o,--output", out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*construct) return cmd_construct(in, out);
    if (*verify) return cmd_verify(in, out, vo);
    if (*cls) return cmd_classify(kase, orders, g, out);
    if (*eq) return cmd_equiv(a, b, out);
    if (*en) return cmd_enumerate(orders, flavor, dihedral, g, out);
    if (*pert) return cmd_perturb(in, which, idx, factor, out);
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const DataError& e) {
    std::cerr << "invalid data: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const RealizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
