// Command-line front end: validation, construction, verification sweeps,
// spectra, cohomology and oracle dumps. Exit codes: 0 all-pass, 1 any
// residual or mismatch beyond tolerance, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "kmnil/cohomology.hpp"
#include "kmnil/construct.hpp"
#include "kmnil/json_io.hpp"
#include "kmnil/oracles.hpp"
#include "kmnil/spectrum.hpp"

using nlohmann::json;
using namespace kmnil;

namespace {

std::vector<std::vector<long long>> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open matrix file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::IoError, "cannot parse '" + path + "': " + e.what());
  }
  if (!j.contains("matrix")) fail(Errc::IoError, "'" + path + "' has no \"matrix\" field");
  return j.at("matrix").get<std::vector<std::vector<long long>>>();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::IoError, "cannot write '" + out_path + "'");
  out << text << "\n";
}

json records_to_json(const std::vector<DegreeRecord>& records) {
  json rows = json::array();
  for (const auto& rec : records) {
    rows.push_back({{"k", rec.k},
                    {"E", rec.energy},
                    {"dim", rec.dim},
                    {"gram_residual", rec.gram_residual},
                    {"jacobi_residual", rec.jacobi_residual},
                    {"complement_leak", rec.complement_leak},
                    {"forced_zero", rec.forced_zero}});
  }
  return rows;
}

json table_to_json(const SpectrumTable& table) {
  json rows = json::array();
  for (const auto& [value, mult] : table.entries) rows.push_back({value, mult});
  return rows;
}

struct BoundFlags {
  long long total = -1;
  std::vector<int> box;

  DegreeBound resolve(const char* who) const {
    if (total >= 1 && !box.empty())
      fail(Errc::IoError, std::string(who) + ": give either --total-bound or "
                                             "--componentwise-bound, not both");
    if (total >= 1) return DegreeBound::total_bound(total);
    if (!box.empty()) return DegreeBound::box_bound(MultiDegree(box.begin(), box.end()));
    fail(Errc::IoError, std::string(who) + ": a bound is required");
  }
};

void add_bound_flags(CLI::App* cmd, BoundFlags& flags) {
  cmd->add_option("--total-bound", flags.total, "total-degree bound on |k|");
  cmd->add_option("--componentwise-bound", flags.box,
                  "componentwise bound k1,k2,... (alternative to --total-bound)")
      ->delimiter(',');
}

int run_verify(const CartanMatrix& cm, const DegreeBound& bound, const Tolerances& tol,
               const std::string& out_path) {
  BuildOptions options;
  options.bound = bound;
  options.tol = tol;
  BuildResult built = build(cm, options);

  bool pass = true;
  json scal_rows = json::array();
  for (const MultiDegree& k : degree_order(cm.n, bound)) {
    const double lambda = static_cast<double>(energy(cm, k));
    const double limit = tol.scalarity * std::max(1.0, std::abs(lambda));
    for (int q = 1; q <= total_degree(k); ++q) {
      ChainBasis basis = wedge_basis(built.algebra, k, q);
      if (basis.dim() == 0) continue;
      const double residual = check_scalarity(built.algebra, k, q, lambda);
      const bool ok = residual < limit;
      pass = pass && ok;
      scal_rows.push_back({{"k", k},
                           {"q", q},
                           {"dim", basis.dim()},
                           {"E", energy(cm, k)},
                           {"residual", residual},
                           {"pass", ok}});
    }
  }

  json serre_rows = json::array();
  for (const SerreEntry& entry : serre_check(built.algebra, cm)) {
    const bool ok = entry.in_bound && entry.energy == 0 && entry.dim == 0;
    pass = pass && ok;
    serre_rows.push_back({{"i", entry.i + 1},
                          {"j", entry.j + 1},
                          {"k", entry.k},
                          {"E", entry.energy},
                          {"dim", entry.dim},
                          {"in_bound", entry.in_bound},
                          {"pass", ok}});
  }

  for (const auto& rec : built.records) {
    const double scale = std::max(1.0, std::abs(static_cast<double>(rec.energy)));
    pass = pass && rec.gram_residual < tol.gram * scale &&
           rec.jacobi_residual < tol.jacobi && rec.complement_leak < tol.leak;
  }

  json report;
  report["scalarity"] = std::move(scal_rows);
  report["serre"] = std::move(serre_rows);
  report["degrees"] = records_to_json(built.records);
  report["pass"] = pass;
  emit(report.dump(2), out_path);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical-metric nilpotent Lie algebra toolkit"};
  app.require_subcommand(1);

  Tolerances tol;
  long long max_chain_dim = -1;
  bool seedless = false;
  app.add_option("--tol-gram", tol.gram, "orthogonality tolerance (relative)");
  app.add_option("--tol-jacobi", tol.jacobi, "Jacobi residual tolerance");
  app.add_option("--tol-scalarity", tol.scalarity, "scalarity tolerance (relative)");
  app.add_option("--tol-eigencluster", tol.eigencluster,
                 "absolute eigenvalue clustering tolerance");
  app.add_option("--max-chain-dim", max_chain_dim, "cap on chain-space dimensions");
  app.add_flag("--seedless", seedless,
               "reserved; the pipeline is deterministic and uses no randomness");

  std::string matrix_path, out_path, format = "json";

  auto* validate_cmd = app.add_subcommand("validate", "validate a generalized Cartan matrix");
  validate_cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  validate_cmd->add_option("--out", out_path, "output file (default stdout)");

  std::vector<int> energy_k;
  auto* energy_cmd = app.add_subcommand("energy", "evaluate E(k)");
  energy_cmd->add_option("--matrix", matrix_path)->required();
  energy_cmd->add_option("--k", energy_k, "multidegree k1,k2,...")->required()->delimiter(',');

  BoundFlags build_bound;
  auto* build_cmd = app.add_subcommand("build", "construct the algebra with its metric");
  build_cmd->add_option("--matrix", matrix_path)->required();
  add_bound_flags(build_cmd, build_bound);
  build_cmd->add_option("--out", out_path);

  BoundFlags verify_bound;
  auto* verify_cmd =
      app.add_subcommand("verify", "build, then sweep the scalar-Laplacian property");
  verify_cmd->add_option("--matrix", matrix_path)->required();
  add_bound_flags(verify_cmd, verify_bound);
  verify_cmd->add_option("--out", out_path);

  int max_degree = 12;
  auto* spectrum_cmd =
      app.add_subcommand("spectrum-l1", "predicted vs numeric spectra on the line algebra");
  spectrum_cmd->add_option("--max-degree", max_degree)->required();
  spectrum_cmd->add_option("--out", out_path);
  spectrum_cmd->add_option("--format", format, "json or csv");

  int rank = 0;
  BoundFlags tplus_bound;
  auto* tplus_cmd = app.add_subcommand("tplus-check", "scalarity sweep on the current algebra");
  tplus_cmd->add_option("--rank", rank, "matrix size n")->required();
  add_bound_flags(tplus_cmd, tplus_bound);
  tplus_cmd->add_option("--out", out_path);

  BoundFlags coho_bound;
  bool probe_products = false;
  auto* coho_cmd = app.add_subcommand("cohomology", "harmonic classes of a built algebra");
  coho_cmd->add_option("--matrix", matrix_path)->required();
  add_bound_flags(coho_cmd, coho_bound);
  coho_cmd->add_option("--out", out_path);
  coho_cmd->add_flag("--probe-products", probe_products,
                     "wedge all pairs of classes and report nonzero products");

  int orbit_n = 0;
  auto* orbit_cmd = app.add_subcommand("weyl-orbit", "orbit of the origin with decompositions");
  orbit_cmd->add_option("--n", orbit_n)->required();
  orbit_cmd->add_option("--out", out_path);

  std::string oracle_name;
  BoundFlags oracle_bound;
  auto* oracle_cmd = app.add_subcommand("oracle", "dump a reference algebra");
  oracle_cmd->add_option("--name", oracle_name, "l1 | tplus | nn | g2 | a22")->required();
  oracle_cmd->add_option("--rank", rank, "n for tplus and nn");
  add_bound_flags(oracle_cmd, oracle_bound);
  oracle_cmd->add_option("--out", out_path);

  std::string compare_a, compare_b;
  auto* compare_cmd = app.add_subcommand("compare", "dimension-by-degree diff of two dumps");
  compare_cmd->add_option("a", compare_a, "first dump")->required();
  compare_cmd->add_option("b", compare_b, "second dump")->required();
  compare_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (max_chain_dim > 0) set_enumeration_budget(max_chain_dim);

    if (*validate_cmd) {
      CartanMatrix cm = validate_gcm(read_matrix_file(matrix_path));
      json j;
      j["d"] = cm.d;
      j["irreducible"] = is_irreducible(cm);
      emit(j.dump(2), out_path);
      return 0;
    }

    if (*energy_cmd) {
      CartanMatrix cm = validate_gcm(read_matrix_file(matrix_path));
      if (static_cast<int>(energy_k.size()) != cm.n) {
        std::cerr << "error: --k has " << energy_k.size() << " entries, matrix has rank "
                  << cm.n << "\n";
        return 2;
      }
      MultiDegree k(energy_k.begin(), energy_k.end());
      json j;
      j["k"] = k;
      j["E"] = energy(cm, k);
      emit(j.dump(2), out_path);
      return 0;
    }

    if (*build_cmd) {
      CartanMatrix cm = validate_gcm(read_matrix_file(matrix_path));
      BuildOptions options;
      options.bound = build_bound.resolve("build");
      options.tol = tol;
      BuildResult built = build(cm, options);
      json dump = algebra_to_json(built.algebra);
      dump["provenance"] = records_to_json(built.records);
      emit(dump.dump(2), out_path);
      return 0;
    }

    if (*verify_cmd) {
      CartanMatrix cm = validate_gcm(read_matrix_file(matrix_path));
      return run_verify(cm, verify_bound.resolve("verify"), tol, out_path);
    }

    if (*spectrum_cmd) {
      GradedAlgebra l1 = l1_algebra(max_degree);
      bool pass = true;
      json rows = json::array();
      std::string csv = "degree,eigenvalue,predicted_multiplicity,numeric_multiplicity\n";
      for (int d = 1; d <= max_degree; ++d) {
        SpectrumTable predicted = predicted_spectrum(d);
        SpectrumTable numeric = numeric_spectrum(l1, {d}, tol.eigencluster);
        SpectrumDiff diff = compare_spectra(predicted, numeric, tol.eigencluster);
        pass = pass && diff.equal;
        rows.push_back({{"degree", d},
                        {"predicted", table_to_json(predicted)},
                        {"numeric", table_to_json(numeric)},
                        {"match", diff.equal}});
        for (size_t i = 0; i < predicted.entries.size(); ++i) {
          long long numeric_mult =
              i < numeric.entries.size() ? numeric.entries[i].second : 0;
          csv += std::to_string(d) + "," + std::to_string(predicted.entries[i].first) + "," +
                 std::to_string(predicted.entries[i].second) + "," +
                 std::to_string(numeric_mult) + "\n";
        }
      }
      if (format == "csv") {
        emit(csv, out_path);
      } else {
        json j;
        j["rows"] = std::move(rows);
        j["pass"] = pass;
        emit(j.dump(2), out_path);
      }
      return pass ? 0 : 1;
    }

    if (*tplus_cmd) {
      DegreeBound bound = tplus_bound.resolve("tplus-check");
      if (bound.kind != DegreeBound::Kind::Total)
        fail(Errc::IoError, "tplus-check needs --total-bound");
      GradedAlgebra alg = tplus_algebra(rank, bound.total);
      bool pass = true;
      json rows = json::array();
      for (const MultiDegree& k : degree_order(rank, bound)) {
        const double lambda = static_cast<double>(tplus_scalar(k));
        const double limit = tol.scalarity * std::max(1.0, std::abs(lambda));
        for (int q = 1; q <= total_degree(k); ++q) {
          ChainBasis basis = wedge_basis(alg, k, q);
          if (basis.dim() == 0) continue;
          const double residual = check_scalarity(alg, k, q, lambda);
          const bool ok = residual < limit;
          pass = pass && ok;
          rows.push_back({{"k", k},
                          {"q", q},
                          {"dim", basis.dim()},
                          {"lambda", tplus_scalar(k)},
                          {"residual", residual},
                          {"pass", ok}});
        }
      }
      json j;
      j["rows"] = std::move(rows);
      j["pass"] = pass;
      emit(j.dump(2), out_path);
      return pass ? 0 : 1;
    }

    if (*coho_cmd) {
      CartanMatrix cm = validate_gcm(read_matrix_file(matrix_path));
      BuildOptions options;
      options.bound = coho_bound.resolve("cohomology");
      options.tol = tol;
      BuildResult built = build(cm, options);

      json classes = json::array();
      std::vector<CohomologyClass> all;
      for (const MultiDegree& k : harmonic_degrees(cm, options.bound))
        for (int q = 1; q <= total_degree(k); ++q) {
          auto kernel = harmonic_basis(built.algebra, k, q, tol.eigencluster);
          if (kernel.empty()) continue;
          classes.push_back({{"k", k}, {"q", q}, {"count", kernel.size()}});
          all.insert(all.end(), kernel.begin(), kernel.end());
        }

      json j;
      j["harmonic_classes"] = std::move(classes);
      if (probe_products) {
        json products = json::array();
        long long nonzero = 0;
        for (size_t a = 0; a < all.size(); ++a)
          for (size_t b = a; b < all.size(); ++b) {
            MultiDegree sum = degree_add(all[a].k, all[b].k);
            if (!built.algebra.covers(sum)) continue;
            CohomologyClass prod = cup_product(built.algebra, cm, all[a], all[b]);
            if (prod.is_zero()) continue;
            ++nonzero;
            products.push_back({{"a", {{"k", all[a].k}, {"q", all[a].q}}},
                                {"b", {{"k", all[b].k}, {"q", all[b].q}}},
                                {"k", sum},
                                {"q", prod.q},
                                {"projected", prod.projected}});
          }
        j["nonzero_products"] = nonzero;
        j["products"] = std::move(products);
      }
      emit(j.dump(2), out_path);
      return 0;
    }

    if (*orbit_cmd) {
      auto orbit = weyl_orbit(orbit_n, orbit_n * (orbit_n + 1) / 2);
      json rows = json::array();
      for (const auto& p : orbit) {
        json intervals = json::array();
        for (const auto& [i, j] : p.intervals) intervals.push_back({i, j});
        rows.push_back({{"x", p.x}, {"length", p.length}, {"intervals", intervals}});
      }
      json j;
      j["n"] = orbit_n;
      j["size"] = orbit.size();
      j["points"] = std::move(rows);
      emit(j.dump(2), out_path);
      return 0;
    }

    if (*oracle_cmd) {
      GradedAlgebra alg = [&]() -> GradedAlgebra {
        if (oracle_name == "l1") {
          DegreeBound b = oracle_bound.resolve("oracle l1");
          if (b.kind != DegreeBound::Kind::Total) fail(Errc::IoError, "l1 needs --total-bound");
          return l1_algebra(static_cast<int>(b.total));
        }
        if (oracle_name == "tplus") {
          if (rank < 2) fail(Errc::IoError, "oracle tplus needs --rank");
          DegreeBound b = oracle_bound.resolve("oracle tplus");
          if (b.kind != DegreeBound::Kind::Total)
            fail(Errc::IoError, "tplus needs --total-bound");
          return tplus_algebra(rank, b.total);
        }
        if (oracle_name == "nn") {
          if (rank < 2) fail(Errc::IoError, "oracle nn needs --rank");
          return upper_triangular(rank);
        }
        if (oracle_name == "g2") return g2_canonical().algebra;
        if (oracle_name == "a22") {
          DegreeBound b = oracle_bound.resolve("oracle a22");
          if (b.kind != DegreeBound::Kind::Total) fail(Errc::IoError, "a22 needs --total-bound");
          return a22_canonical(b.total).algebra;
        }
        fail(Errc::IoError, "unknown oracle '" + oracle_name + "'");
      }();
      emit(algebra_to_json(alg).dump(2), out_path);
      return 0;
    }

    if (*compare_cmd) {
      auto load = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) fail(Errc::IoError, "cannot open '" + path + "'");
        json j;
        try {
          in >> j;
        } catch (const json::exception& e) {
          fail(Errc::IoError, "cannot parse '" + path + "': " + e.what());
        }
        return algebra_from_json(j);
      };
      GradedAlgebra a = load(compare_a);
      GradedAlgebra b = load(compare_b);
      json diffs = json::array();
      std::map<MultiDegree, std::pair<int, int>, GradedLexLess> dims;
      for (int i = 0; i < a.num_components(); ++i)
        dims[a.component(i).degree].first = a.component(i).dim;
      for (int i = 0; i < b.num_components(); ++i)
        dims[b.component(i).degree].second = b.component(i).dim;
      for (const auto& [k, pair] : dims)
        if (pair.first != pair.second)
          diffs.push_back({{"k", k}, {"a", pair.first}, {"b", pair.second}});
      json j;
      j["differences"] = diffs;
      j["equal"] = diffs.empty();
      emit(j.dump(2), out_path);
      return diffs.empty() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::IoError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
