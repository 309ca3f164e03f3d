#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qflat/barcode.hpp"
#include "qflat/certify.hpp"
#include "qflat/geodesics.hpp"
#include "qflat/harness.hpp"
#include "qflat/spectral.hpp"
#include "qflat/sublevel_grid.hpp"
#include "qflat/wrapped_s1.hpp"

namespace {

using qflat::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open " + out_path);
    out << text;
  }
}

std::vector<double> parse_coeffs(const std::string& text) {
  json j = json::parse(text);
  return j.get<std::vector<double>>();
}

bool parse_res(const std::string& text, int& nq, int& np) {
  auto x = text.find('x');
  if (x == std::string::npos) return false;
  nq = std::stoi(text.substr(0, x));
  np = std::stoi(text.substr(x + 1));
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filtered-complex persistence toolkit"};
  app.require_subcommand(1);

  std::string complex_path, out_path, coeffs_text, res_text = "256x256";
  std::string samples_path, csv_path, emit_complex, emit_barcode, emit_field;
  std::string manifold = "sphere", offset_text = "[]", basis_text = "", class_text = "";
  std::string suite_name;
  double delta = 0.05, dist = 1.0, cutoff = 12.0, eps = 1e-3;
  int dim = 3, k = 0, trials = 100, workers = 1;
  std::uint64_t seed = 0;
  bool want_gamma = false;

  auto* cmd_barcode = app.add_subcommand("barcode", "Barcode of a filtered complex");
  cmd_barcode->add_option("complex", complex_path)->required();
  cmd_barcode->add_option("--out", out_path);

  auto* cmd_beta = app.add_subcommand("beta", "Boundary depth of a filtered complex");
  cmd_beta->add_option("complex", complex_path)->required();

  auto* cmd_s1 = app.add_subcommand("s1", "Wrapped complex of the circle fiber");
  cmd_s1->add_option("--coeffs", coeffs_text)->required();
  cmd_s1->add_option("--delta", delta);
  cmd_s1->add_option("--emit-complex", emit_complex);
  cmd_s1->add_flag("--gamma-proxy", want_gamma);
  cmd_s1->add_option("--out", out_path);

  auto* cmd_annulus = app.add_subcommand("annulus", "Annulus sublevel persistence estimate");
  cmd_annulus->add_option("--coeffs", coeffs_text)->required();
  cmd_annulus->add_option("--delta", delta);
  cmd_annulus->add_option("--res", res_text);
  cmd_annulus->add_option("--eps", eps);
  cmd_annulus->add_option("--seed", seed);
  cmd_annulus->add_option("--emit-barcode", emit_barcode);
  cmd_annulus->add_option("--emit-field", emit_field);
  cmd_annulus->add_option("--out", out_path);

  auto* cmd_geo = app.add_subcommand("geodesics", "Geodesic census and assumption check");
  cmd_geo->add_option("--manifold", manifold)->check(CLI::IsMember({"sphere", "torus"}));
  cmd_geo->add_option("--dim", dim);
  cmd_geo->add_option("--dist", dist);
  cmd_geo->add_option("--offset", offset_text);
  cmd_geo->add_option("--basis", basis_text);
  cmd_geo->add_option("--cutoff", cutoff);
  cmd_geo->add_option("--k", k);
  cmd_geo->add_option("--class", class_text);
  cmd_geo->add_option("--out", out_path);

  auto* cmd_cert = app.add_subcommand("certify", "Batch lower/upper bound certification");
  cmd_cert->add_option("--samples", samples_path)->required();
  cmd_cert->add_option("--out", out_path);
  cmd_cert->add_option("--csv", csv_path);
  cmd_cert->add_option("--workers", workers);

  auto* cmd_prop = app.add_subcommand("proptest", "Randomized property suites");
  cmd_prop->add_option("--suite", suite_name)->required();
  cmd_prop->add_option("--seed", seed);
  cmd_prop->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_barcode) {
      emit(qflat::barcode_to_json(qflat::barcode(qflat::complex_from_json(load_json(complex_path)))),
           out_path);
    } else if (*cmd_beta) {
      std::cout << json(qflat::boundary_depth(qflat::complex_from_json(load_json(complex_path))))
                       .dump()
                << "\n";
    } else if (*cmd_s1) {
      std::vector<double> a = parse_coeffs(coeffs_text);
      qflat::S1Result r = qflat::s1_beta(a, delta);
      json out = {{"coeffs", a},
                  {"delta", delta},
                  {"chords", qflat::chords_to_json(r.chords)},
                  {"barcode", qflat::barcode_to_json(r.bc)},
                  {"beta", r.beta}};
      if (want_gamma) out["gamma_proxy"] = qflat::gamma_proxy_to_json(qflat::gamma_proxy(a, delta));
      if (!emit_complex.empty()) emit(qflat::complex_to_json(r.complex), emit_complex);
      emit(out, out_path);
    } else if (*cmd_annulus) {
      int nq = 0, np = 0;
      if (!parse_res(res_text, nq, np))
        throw std::invalid_argument("--res expects <n_q>x<n_p>");
      std::vector<double> a = parse_coeffs(coeffs_text);
      qflat::MorseBetaResult r = qflat::morse_beta_estimate(a, delta, nq, np, eps, seed);
      if (!emit_barcode.empty()) emit(qflat::barcode_to_json(r.bc), emit_barcode);
      if (!emit_field.empty())
        qflat::write_field(qflat::annulus_field(a, delta, nq, np, eps, seed), emit_field);
      emit({{"coeffs", a},
            {"delta", delta},
            {"nq", nq},
            {"np", np},
            {"eps", eps},
            {"seed", seed},
            {"beta_hat", r.beta_hat},
            {"target", r.target},
            {"tol", r.tol},
            {"pass", r.pass}},
           out_path);
      if (!r.pass) return 1;
    } else if (*cmd_geo) {
      qflat::ModelManifold m;
      m.kind = manifold == "sphere" ? qflat::ModelManifold::Kind::sphere
                                    : qflat::ModelManifold::Kind::torus;
      m.dim = dim;
      m.dist = dist;
      m.cutoff = cutoff;
      if (m.kind == qflat::ModelManifold::Kind::torus) {
        m.offset = json::parse(offset_text).get<std::vector<double>>();
        m.dim = static_cast<int>(m.offset.size());
        if (basis_text.empty()) {
          m.basis.assign(m.dim, std::vector<double>(m.dim, 0.0));
          for (int i = 0; i < m.dim; ++i) m.basis[i][i] = 1.0;
        } else {
          m.basis = json::parse(basis_text).get<std::vector<std::vector<double>>>();
        }
      }
      std::vector<qflat::GeodesicRecord> records = qflat::enumerate_geodesics(m);
      std::vector<long long> cls;
      if (!class_text.empty()) cls = json::parse(class_text).get<std::vector<long long>>();
      else if (m.kind == qflat::ModelManifold::Kind::sphere) cls = {0};
      else cls.assign(m.dim, 0);
      qflat::AssumptionEntry entry = qflat::check_assumption(m, records, cls, k);
      emit({{"records", qflat::records_to_json(records)},
            {"assumption", qflat::assumption_to_json(entry)}},
           out_path);
    } else if (*cmd_cert) {
      std::vector<qflat::CertSample> samples = qflat::samples_from_json(load_json(samples_path));
      qflat::CertReport report = qflat::run_certify(samples, workers);
      if (!csv_path.empty()) qflat::write_report_csv(report, csv_path);
      emit(qflat::report_to_json(report), out_path);
      if (!report.all_pass) return 1;
    } else if (*cmd_prop) {
      qflat::SuiteResult r = qflat::run_suite(suite_name, seed, trials);
      emit(qflat::suite_to_json(r), "");
      if (!r.pass()) return 1;
    }
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
