#include "polyball/combinatorics.hpp"
#include "polyball/face_lattice.hpp"
#include "polyball/norms.hpp"
#include "polyball/oracle.hpp"
#include "polyball/verify.hpp"
#include "polyball/volume.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace polyball;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POLYBALL_SEED")) {
    try {
      return static_cast<std::uint64_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable POLYBALL_SEED\n";
    }
  }
  return 20240809;
}

nlohmann::json quantity_json(const Params& p, bool dual, const std::string& quantity,
                             const std::string& exact, const std::string& decimal,
                             const std::string& method,
                             const std::optional<std::string>& erratum = std::nullopt) {
  nlohmann::json doc;
  doc["d"] = p.d();
  doc["k"] = to_string(p.k());
  doc["family"] = dual ? "dual" : "primal";
  doc["quantity"] = quantity;
  doc["exact"] = exact;
  doc["decimal"] = decimal;
  doc["method"] = method;
  doc["erratum_note"] = erratum ? nlohmann::json(*erratum) : nlohmann::json(nullptr);
  return doc;
}

std::string surd_decimal(const SurdValue& v) {
  std::ostringstream out;
  out.precision(12);
  out << v.to_double();
  return out.str();
}

struct NormArgs {
  std::string k_text;
  std::string vector_text;
  int d = 0;
  bool dual = false;
  bool variational = false;
  bool json = false;
};

int run_norm(const NormArgs& args) {
  const VectorQ x = parse_vector(args.vector_text);
  const int d = args.d > 0 ? args.d : static_cast<int>(x.size());
  if (d != static_cast<int>(x.size()))
    throw CLI::ValidationError("--d does not match the vector length");
  const Params p(d, parse_rational(args.k_text));

  BigRational value;
  std::string method;
  if (args.dual) {
    value = dual_norm(x, p);
    method = "closed";
  } else if (args.variational) {
    value = knorm_variational(x, p);
    method = "variational";
  } else {
    value = knorm(x, p);
    method = "closed";
  }
  const Region region = args.dual ? member_rho_star(x, p) : member_rho(x, p);
  const std::string ball = std::string(args.dual ? "rho*(" : "rho(") + std::to_string(d) + "," +
                           to_string(p.k()) + ")";
  if (args.json) {
    std::cout << quantity_json(p, args.dual, args.dual ? "dual_norm" : "knorm", to_string(value),
                               decimal_string(value), method)
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << to_string(value) << "\n";
  std::cout << "decimal: " << decimal_string(value) << "\n";
  std::cout << "membership: " << region_name(region) << " of " << ball << "\n";
  return kExitOk;
}

struct FvectorArgs {
  int d = 0;
  std::string k_text;
  bool dual = false;
  bool oracle = false;
  std::string dump_path;
  bool json = false;
};

FaceLattice oracle_lattice(const Params& p, bool dual) {
  if (!dual) return enumerate_faces(rep_rho(p));
  if (p.k_is_integer()) return enumerate_faces(rep_rho_star(p));
  return enumerate_faces(rep_rho_star_enumerated(p));
}

int run_fvector(const FvectorArgs& args) {
  const Params p(args.d, parse_rational(args.k_text));

  if (!p.k_is_integer() && !args.oracle) {
    const BigInt facets = facet_count(p);
    const BigInt shown = args.dual ? vertex_count(p, Family::primal) : facets;
    std::cout << "facets: " << shown.str() << "\n";
    std::cout << "note: for non-integer k the closed form covers only the facet count"
              << " (f_{d-1}(rho) = 2^(floor(k)+1) C(d, floor(k)+1) (floor(k)+1));"
              << " rerun with --oracle for the full face-lattice enumeration (d <= 6).\n";
    return kExitOk;
  }

  FVector closed;
  bool have_closed = false;
  if (p.k_is_integer()) {
    closed = f_vector(p, args.dual ? Family::dual : Family::primal);
    have_closed = true;
  }

  std::string oracle_status;
  FVector shown = closed;
  if (args.oracle) {
    const FaceLattice lattice = oracle_lattice(p, args.dual);
    if (!args.dump_path.empty()) {
      std::ofstream out(args.dump_path);
      if (!out) {
        std::cerr << "error: cannot write " << args.dump_path << "\n";
        return kExitIo;
      }
      out << face_lattice_json(lattice) << "\n";
    }
    if (have_closed) {
      oracle_status = lattice.f == closed ? "VERIFIED" : "MISMATCH (oracle " +
                                                             lattice.f.to_string() + ")";
    } else {
      shown = lattice.f;
      oracle_status = "ENUMERATED";
    }
  }

  const auto [total, kalai_ok] =
      p.k_is_integer() ? total_faces_and_kalai(p)
                       : std::pair<BigInt, bool>{1 + shown.total_proper(),
                                                 1 + shown.total_proper() >=
                                                     int_pow(3, static_cast<unsigned>(p.d()))};
  if (args.json) {
    nlohmann::json doc;
    doc["d"] = p.d();
    doc["k"] = to_string(p.k());
    doc["family"] = args.dual ? "dual" : "primal";
    doc["f_vector"] = nlohmann::json::array();
    for (const BigInt& f : shown.counts) doc["f_vector"].push_back(f.str());
    doc["total_faces"] = total.str();
    doc["kalai_satisfied"] = kalai_ok;
    if (!oracle_status.empty()) doc["oracle"] = oracle_status;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << shown.to_string() << "\n";
    std::cout << "total faces (polytope itself included): " << total.str() << "\n";
    std::cout << "kalai bound 3^d = " << int_pow(3, static_cast<unsigned>(p.d())).str() << ": "
              << (kalai_ok ? "satisfied" : "VIOLATED") << "\n";
    if (!oracle_status.empty()) std::cout << "oracle: " << oracle_status << "\n";
  }
  if (!oracle_status.empty() && oracle_status.rfind("MISMATCH", 0) == 0) return kExitMismatch;
  return kExitOk;
}

struct VolumeArgs {
  int d = 0;
  std::string k_text;
  bool dual = false;
  std::string method = "closed";
  long long samples = 1000000;
  std::uint64_t seed = 0;
  bool json = false;
  bool boundary = false;
};

PolytopeRep body_rep(const Params& p, bool dual) {
  if (!dual) return rep_rho(p);
  if (p.k_is_integer()) return rep_rho_star(p);
  return rep_rho_star_enumerated(p);
}

int run_volume(const VolumeArgs& args) {
  const Params p(args.d, parse_rational(args.k_text));
  const std::string quantity = args.boundary ? "boundary_volume" : "volume";

  if (args.method == "montecarlo") {
    if (args.boundary) throw CLI::ValidationError("montecarlo applies to volumes, not boundaries");
    const bool dual = args.dual;
    const MembershipFn member = dual ? MembershipFn([p](const VectorD& x) {
      return is_member(member_rho_star(x, p));
    })
                                     : MembershipFn([p](const VectorD& x) {
                                         return is_member(member_rho(x, p));
                                       });
    const auto estimate = monte_carlo_volume(member, p.d(), BigRational(1), args.samples, args.seed);
    std::ostringstream decimal;
    decimal.precision(12);
    decimal << estimate.volume;
    if (args.json) {
      auto doc = quantity_json(p, args.dual, quantity, "", decimal.str(), "montecarlo");
      doc["std_error"] = estimate.std_error;
      doc["samples"] = estimate.samples;
      doc["seed"] = args.seed;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << decimal.str() << "\n";
      std::cout << "std_error: " << estimate.std_error << " (samples " << estimate.samples
                << ", seed " << args.seed << ")\n";
    }
    return kExitOk;
  }

  if (args.method == "triangulate") {
    const PolytopeRep rep = body_rep(p, args.dual);
    if (args.boundary) {
      const SurdValue measure = boundary_triangulation_measure(rep);
      if (args.json) {
        std::cout << quantity_json(p, args.dual, quantity, measure.to_string(),
                                   surd_decimal(measure), "triangulate")
                         .dump(2)
                  << "\n";
      } else {
        std::cout << measure.to_string() << "\n";
        std::cout << "decimal: " << surd_decimal(measure) << "\n";
      }
      return kExitOk;
    }
    const BigRational volume = triangulation_volume(rep);
    if (args.json) {
      std::cout << quantity_json(p, args.dual, quantity, to_string(volume),
                                 decimal_string(volume), "triangulate")
                       .dump(2)
                << "\n";
    } else {
      std::cout << to_string(volume) << "\n";
      std::cout << "decimal: " << decimal_string(volume) << "\n";
    }
    return kExitOk;
  }

  if (args.method != "closed")
    throw CLI::ValidationError("unknown method '" + args.method + "'");

  if (!args.boundary) {
    const BigRational volume = args.dual ? volume_rho_star(p) : volume_rho(p);
    if (args.json) {
      std::cout << quantity_json(p, args.dual, quantity, to_string(volume),
                                 decimal_string(volume), "closed")
                       .dump(2)
                << "\n";
    } else {
      std::cout << to_string(volume) << "\n";
      std::cout << "decimal: " << decimal_string(volume) << "\n";
    }
    return kExitOk;
  }

  if (args.dual) {
    const SurdValue measure = boundary_volume_rho_star(p);
    if (args.json) {
      std::cout << quantity_json(p, true, quantity, measure.to_string(), surd_decimal(measure),
                                 "closed")
                       .dump(2)
                << "\n";
    } else {
      std::cout << measure.to_string() << "\n";
      std::cout << "decimal: " << surd_decimal(measure) << "\n";
    }
    return kExitOk;
  }

  const BoundaryVolumeRho boundary = boundary_volume_rho(p);
  std::optional<std::string> erratum;
  if (!(boundary.corrected == boundary.as_printed)) {
    erratum = "the published closed form (" + boundary.as_printed.to_string() +
              ") is short by a factor of d = " + std::to_string(p.d()) +
              "; the corrected value matches exact facet triangulation";
  }
  if (args.json) {
    std::cout << quantity_json(p, false, quantity, boundary.corrected.to_string(),
                               surd_decimal(boundary.corrected), "closed", erratum)
                     .dump(2)
              << "\n";
  } else {
    std::cout << boundary.corrected.to_string() << "\n";
    std::cout << "decimal: " << surd_decimal(boundary.corrected) << "\n";
    if (erratum) std::cout << "ERRATUM: " << *erratum << "\n";
  }
  return kExitOk;
}

struct MahlerArgs {
  int dmax = 0;
  std::string format = "csv";
  std::string out_path;
};

std::string mahler_csv(const MahlerReport& report) {
  std::string csv = "d,k,mahler,bound,ratio,satisfied\n";
  for (const MahlerRow& row : report.rows) {
    csv += std::to_string(row.d) + "," + std::to_string(row.k) + "," + to_string(row.mahler) +
           "," + to_string(row.bound) + "," + decimal_string(row.mahler / row.bound) + "," +
           (row.satisfied ? "true" : "false") + "\n";
  }
  return csv;
}

std::string mahler_json(const MahlerReport& report) {
  nlohmann::json doc;
  doc["d_max"] = report.d_max;
  doc["violations"] = report.violations;
  doc["rows"] = nlohmann::json::array();
  for (const MahlerRow& row : report.rows) {
    nlohmann::json entry;
    entry["d"] = row.d;
    entry["k"] = row.k;
    entry["mahler"] = to_string(row.mahler);
    entry["bound"] = to_string(row.bound);
    entry["ratio"] = decimal_string(row.mahler / row.bound);
    entry["satisfied"] = row.satisfied;
    entry["equality"] = row.equality;
    doc["rows"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

int run_mahler(const MahlerArgs& args) {
  const MahlerReport report = mahler_sweep(args.dmax);
  const std::string payload = args.format == "json" ? mahler_json(report) : mahler_csv(report);
  std::ostringstream summary;
  summary << "mahler sweep d <= " << report.d_max << ": " << report.rows.size() << " rows, "
          << report.violations << " violations";
  if (args.out_path.empty()) {
    std::cout << payload;
    std::cerr << summary.str() << "\n";
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << args.out_path << "\n";
      return kExitIo;
    }
    out << payload;
    if (!out) {
      std::cerr << "error: short write to " << args.out_path << "\n";
      return kExitIo;
    }
    std::cout << summary.str() << "\n";
  }
  return report.violations == 0 ? kExitOk : kExitMismatch;
}

struct ExportArgs {
  int d = 3;
  std::string k_text;
  bool dual = false;
  std::string out_path;
};

int run_export_off(const ExportArgs& args) {
  if (args.d != 3) throw CLI::ValidationError("export-off supports --d 3 only");
  const Params p(3, parse_rational(args.k_text));
  const PolytopeRep rep = body_rep(p, args.dual);
  const FaceLattice lattice = enumerate_faces(rep);

  std::vector<std::vector<int>> polygons;
  for (std::size_t f = 0; f < rep.facets.size(); ++f) {
    const FaceRecord& face = facet_record(lattice, static_cast<int>(f));
    // Order the polygon by angle around its centroid inside the facet plane.
    const std::vector<int>& ids = face.vertex_set;
    VectorD centroid(3, 0.0);
    std::vector<VectorD> pts;
    for (int v : ids) {
      const VectorD pt = to_double_vector(rep.vertices[static_cast<std::size_t>(v)]);
      for (int i = 0; i < 3; ++i) centroid[static_cast<std::size_t>(i)] += pt[static_cast<std::size_t>(i)];
      pts.push_back(pt);
    }
    for (double& c : centroid) c /= static_cast<double>(ids.size());
    const VectorD normal = to_double_vector(rep.facets[f].normal);
    VectorD u(3), w(3);
    for (int i = 0; i < 3; ++i) u[static_cast<std::size_t>(i)] = pts[0][static_cast<std::size_t>(i)] - centroid[static_cast<std::size_t>(i)];
    w[0] = normal[1] * u[2] - normal[2] * u[1];
    w[1] = normal[2] * u[0] - normal[0] * u[2];
    w[2] = normal[0] * u[1] - normal[1] * u[0];
    std::vector<std::pair<double, int>> order;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      VectorD r(3);
      for (int j = 0; j < 3; ++j) r[static_cast<std::size_t>(j)] = pts[i][static_cast<std::size_t>(j)] - centroid[static_cast<std::size_t>(j)];
      order.emplace_back(std::atan2(dot(r, w), dot(r, u)), ids[i]);
    }
    std::sort(order.begin(), order.end());
    std::vector<int> polygon;
    for (const auto& [angle, id] : order) polygon.push_back(id);
    polygons.push_back(std::move(polygon));
  }

  std::ostringstream off;
  off << "OFF\n";
  off << rep.vertices.size() << " " << polygons.size() << " " << lattice.f.counts[1].str() << "\n";
  off.precision(17);
  for (const VectorQ& v : rep.vertices) {
    off << to_double(v[0]) << " " << to_double(v[1]) << " " << to_double(v[2]) << "\n";
  }
  for (const std::vector<int>& polygon : polygons) {
    off << polygon.size();
    for (int id : polygon) off << " " << id;
    off << "\n";
  }

  if (args.out_path.empty()) {
    std::cout << off.str();
    return kExitOk;
  }
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << args.out_path << "\n";
    return kExitIo;
  }
  out << off.str();
  return out ? kExitOk : kExitIo;
}

struct VerifyArgs {
  std::string suite = "all";
  int dmax = 6;
  int mc_dmax = 4;
  long long samples = 1000000;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& args) {
  std::vector<Report> reports;
  if (args.suite == "all") {
    reports = verify_all(args.dmax, args.samples, args.seed);
  } else if (args.suite == "fvector") {
    reports.push_back(verify_fvector(args.dmax));
  } else if (args.suite == "volume") {
    reports.push_back(verify_volume(args.samples, args.seed, args.mc_dmax));
  } else if (args.suite == "boundary") {
    reports.push_back(verify_boundary());
  } else if (args.suite == "norm") {
    reports.push_back(verify_norm(args.seed));
  } else {
    throw CLI::ValidationError("unknown suite '" + args.suite + "'");
  }
  std::cout << report_json(reports) << "\n";
  int failed = 0;
  for (const Report& report : reports) {
    failed += report.failures();
    std::cerr << "suite " << report.suite << ": " << report.checks.size() - report.failures()
              << " passed, " << report.failures() << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact geometry of the polytopal norm balls rho(d,k) and rho*(d,k)"};
  app.require_subcommand(1);

  NormArgs norm_args;
  auto* norm_cmd = app.add_subcommand("norm", "evaluate the k-norm or its dual at a vector");
  norm_cmd->add_option("--k", norm_args.k_text, "k as a rational ('5/2') or decimal")->required();
  norm_cmd->add_option("--vector", norm_args.vector_text, "comma-separated coordinates")->required();
  norm_cmd->add_option("--d", norm_args.d, "dimension (defaults to the vector length)");
  norm_cmd->add_flag("--dual", norm_args.dual, "evaluate the dual norm max(linf, l1/k)");
  norm_cmd->add_flag("--variational", norm_args.variational,
                     "evaluate through the variational scan instead of the closed form");
  norm_cmd->add_flag("--json", norm_args.json, "machine-readable output");

  FvectorArgs fvector_args;
  auto* fvector_cmd = app.add_subcommand("fvector", "face counts of rho(d,k) or rho*(d,k)");
  fvector_cmd->add_option("--d", fvector_args.d, "dimension")->required();
  fvector_cmd->add_option("--k", fvector_args.k_text, "k as a rational or decimal")->required();
  fvector_cmd->add_flag("--dual", fvector_args.dual, "report the polar dual");
  fvector_cmd->add_flag("--oracle", fvector_args.oracle,
                        "cross-check against full face-lattice enumeration (d <= 6)");
  fvector_cmd->add_option("--dump-lattice", fvector_args.dump_path,
                          "write the enumerated face lattice as JSON (needs --oracle)");
  fvector_cmd->add_flag("--json", fvector_args.json, "machine-readable output");

  VolumeArgs volume_args;
  auto* volume_cmd = app.add_subcommand("volume", "volume of rho(d,k) or rho*(d,k)");
  volume_cmd->add_option("--d", volume_args.d, "dimension")->required();
  volume_cmd->add_option("--k", volume_args.k_text, "k as a rational or decimal")->required();
  volume_cmd->add_flag("--dual", volume_args.dual, "use the polar dual");
  volume_cmd->add_option("--method", volume_args.method, "closed | montecarlo | triangulate");
  volume_cmd->add_option("--samples", volume_args.samples, "Monte Carlo sample count");
  volume_cmd->add_option("--seed", volume_args.seed, "Monte Carlo seed (default POLYBALL_SEED)");
  volume_cmd->add_flag("--json", volume_args.json, "machine-readable output");

  VolumeArgs boundary_args;
  boundary_args.boundary = true;
  auto* boundary_cmd = app.add_subcommand("boundary", "boundary volume of rho(d,k) or rho*(d,k)");
  boundary_cmd->add_option("--d", boundary_args.d, "dimension")->required();
  boundary_cmd->add_option("--k", boundary_args.k_text, "k as a rational or decimal")->required();
  boundary_cmd->add_flag("--dual", boundary_args.dual, "use the polar dual");
  boundary_cmd->add_option("--method", boundary_args.method, "closed | triangulate");
  boundary_cmd->add_flag("--json", boundary_args.json, "machine-readable output");

  MahlerArgs mahler_args;
  auto* mahler_cmd = app.add_subcommand("mahler", "exact Mahler volumes against the 4^d/d! bound");
  mahler_cmd->add_option("--dmax", mahler_args.dmax, "largest dimension")->required();
  mahler_cmd->add_option("--format", mahler_args.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  mahler_cmd->add_option("--out", mahler_args.out_path, "output file (stdout when omitted)");

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export-off", "write an OFF mesh of rho(3,k) or rho*(3,k)");
  export_cmd->add_option("--d", export_args.d, "dimension (must be 3)");
  export_cmd->add_option("--k", export_args.k_text, "k as a rational or decimal")->required();
  export_cmd->add_flag("--dual", export_args.dual, "use the polar dual");
  export_cmd->add_option("--out", export_args.out_path, "output file (stdout when omitted)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run closed-form vs oracle invariant suites");
  verify_cmd->add_option("--suite", verify_args.suite, "fvector | volume | boundary | norm | all")
      ->check(CLI::IsMember({"fvector", "volume", "boundary", "norm", "all"}));
  verify_cmd->add_option("--dmax", verify_args.dmax, "lattice enumeration bound (<= 6)");
  verify_cmd->add_option("--mc-dmax", verify_args.mc_dmax,
                         "largest dimension for the Monte Carlo agreement sweep (<= 6)");
  verify_cmd->add_option("--samples", verify_args.samples, "Monte Carlo sample count");
  verify_cmd->add_option("--seed", verify_args.seed, "random seed (default POLYBALL_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::uint64_t seed = default_seed();
  if (volume_cmd->count("--seed") == 0) volume_args.seed = seed;
  if (verify_cmd->count("--seed") == 0) verify_args.seed = seed;

  try {
    if (*norm_cmd) return run_norm(norm_args);
    if (*fvector_cmd) return run_fvector(fvector_args);
    if (*volume_cmd) return run_volume(volume_args);
    if (*boundary_cmd) return run_volume(boundary_args);
    if (*mahler_cmd) return run_mahler(mahler_args);
    if (*export_cmd) return run_export_off(export_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
