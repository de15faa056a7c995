// torbiv: command-line front end for equivariant bi-vector fields on smooth
// toric varieties.
//
// Exit codes: 0 success, 1 domain failure (invalid fan, irregular bivector,
// failed certificate), 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torbiv/degeneracy.hpp"
#include "torbiv/documents.hpp"

using namespace torbiv;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::ParseError:
  case ErrorCode::UnknownName:
  case ErrorCode::BadParams:
  case ErrorCode::BadBound:
    return kUsage;
  default:
    return kDomainFailure;
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fan load_fan(const std::string &path) {
  return Fan::from_description(parse_fan_document(read_file(path)));
}

EquivariantBivector load_bivector(const std::string &path) {
  return to_bivector(parse_bivector_document(read_file(path)));
}

std::uint64_t oracle_seed() {
  const char *env = std::getenv("TORBIV_SEED");
  if (!env || !*env)
    return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception &) {
    throw Error(ErrorCode::BadParams, std::string("TORBIV_SEED is not an integer: ") + env);
  }
}

std::vector<std::size_t> parse_index_list(const std::string &text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    if (item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad ray index '" + item + "' in --orbit");
    out.push_back(std::stoul(item));
  }
  return out;
}

std::string matrix_rows(const IntMatrix &m, const std::string &indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

std::string matrix_rows(const RatMatrix &m, const std::string &indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

// Numeric rank at sampled points; must match the closed-form rank.
std::size_t checked_oracle(const EquivariantBivector &bv, const Fan &fan,
                           const OrbitRef &t, std::size_t rank, std::uint64_t seed) {
  const std::size_t oracle = numeric_rank_oracle(bv, fan, t, {seed});
  if (oracle != rank)
    throw Error(ErrorCode::OracleDisagreement,
                "orbit " + to_string(t) + ": closed form gives rank " +
                    std::to_string(rank) + ", sampled points give " +
                    std::to_string(oracle));
  return oracle;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string &fan_file, bool json) {
  const FanDescription desc = parse_fan_document(read_file(fan_file));
  const ValidationReport report = validate_fan(desc);
  std::optional<bool> complete;
  if (report.valid())
    complete = is_complete(Fan::from_description(desc));

  if (json) {
    std::cout << validation_json(desc, report, complete).dump(2) << "\n";
  } else {
    std::cout << "fan: " << (desc.name.empty() ? "(unnamed)" : desc.name)
              << ", dim " << desc.dim << ", " << desc.rays.size() << " rays, "
              << desc.max_cones.size() << " maximal cones\n";
    for (const auto &c : report.cones)
      std::cout << "  cone " << c.index << ": "
                << (c.smooth ? "smooth" : "not smooth") << "\n";
    std::cout << "pairwise intersections checked: " << report.pairs_checked << "\n";
    for (const auto &w : report.warnings)
      std::cout << "warning: " << w << "\n";
    for (const auto &v : report.violations)
      std::cout << "violation " << violation_kind_name(v.kind) << ": " << v.message
                << "\n";
    std::cout << "valid: " << (report.valid() ? "true" : "false") << "\n";
    if (complete)
      std::cout << "complete: " << (*complete ? "true" : "false") << "\n";
  }
  return report.valid() ? kOk : kDomainFailure;
}

int cmd_strata(const std::string &fan_file, const std::string &biv_file, bool json,
               const std::string &orbit) {
  const Fan fan = load_fan(fan_file);
  const EquivariantBivector bv = load_bivector(biv_file);
  const std::uint64_t seed = oracle_seed();
  const Stratification s = stratify(bv, fan);

  if (!orbit.empty()) {
    const OrbitRef t = make_orbit(fan, parse_index_list(orbit));
    if (!is_cone_of(t, fan))
      throw Error(ErrorCode::ConeNotInFan, to_string(t) + " is not a cone of the fan");
    const std::size_t rank = s.rank_of(t);
    const std::size_t oracle = checked_oracle(bv, fan, t, rank, seed);
    std::vector<std::size_t> bounds;
    for (const auto &[bound, cones] : s.by_bound)
      if (std::find(cones.begin(), cones.end(), t) != cones.end())
        bounds.push_back(bound);
    if (json) {
      Json out;
      out["cone"] = orbit_json(t);
      out["orbit_dim"] = t.dim;
      out["rank"] = rank;
      out["bounds"] = bounds;
      out["oracle"] = {{"seed", seed}, {"rank", oracle}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "orbit " << to_string(t) << ": dim " << t.dim << ", rank " << rank
                << "\n";
      for (std::size_t b : bounds)
        std::cout << "in X_{<=" << b << "}\n";
      std::cout << "oracle (seed " << seed << "): rank " << oracle << "\n";
    }
    return kOk;
  }

  for (const auto &r : s.ranks)
    checked_oracle(bv, fan, r.orbit, r.rank, seed);

  if (json) {
    Json out = stratification_json(s);
    out["oracle"] = {{"seed", seed}, {"orbits_checked", s.ranks.size()}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "orbits (cone: orbit dim, rank):\n";
  for (const auto &r : s.ranks)
    std::cout << "  " << to_string(r.orbit) << ": dim " << r.orbit.dim << ", rank "
              << r.rank << "\n";
  for (const auto &[bound, cones] : s.by_bound) {
    const auto comps = components(s, bound / 2);
    if (comps.empty()) {
      std::cout << "bound " << bound << ": empty\n";
      continue;
    }
    std::cout << "bound " << bound << ": " << cones.size() << " orbit(s), "
              << comps.size() << " component(s)\n";
    for (const auto &c : comps)
      std::cout << "  closure of O(" << to_string(c.cone) << "), dim " << c.dim << "\n";
  }
  std::cout << "oracle (seed " << seed << "): agrees on " << s.ranks.size()
            << " orbit(s)\n";
  return kOk;
}

int cmd_certify(const std::string &fan_file, const std::string &biv_file, bool json) {
  const Fan fan = load_fan(fan_file);
  const EquivariantBivector bv = load_bivector(biv_file);
  const TheoremCertificate cert = certify_main_theorem(bv, fan);

  if (json) {
    std::cout << certificate_json(cert).dump(2) << "\n";
    return cert.passed() ? kOk : kDomainFailure;
  }
  std::cout << "dimension " << cert.ambient_dim << ", fan complete: "
            << (cert.fan_complete ? "true" : "false") << ", bivector regular: "
            << (cert.regular ? "true" : "false") << "\n";
  for (const auto &c : cert.clauses) {
    const std::string status(clause_status_name(c.status));
    switch (c.kind) {
    case ClauseKind::DegeneracyBound:
      std::cout << "k=" << c.k << ": " << status;
      if (c.witness)
        std::cout << ", witness " << to_string(*c.witness) << ", component dim "
                  << c.component_dim << " (needs >= " << 2 * c.k + 1 << ")";
      if (!c.note.empty())
        std::cout << ", " << c.note;
      std::cout << "\n";
      break;
    case ClauseKind::ZeroLocusCurve:
      if (c.nonempty)
        std::cout << "k=0: " << status << ", witness " << to_string(*c.witness)
                  << ", component dim " << c.component_dim << " (needs >= 1)\n";
      break;
    case ClauseKind::CompactNonempty:
      if (!c.nonempty && !cert.fan_complete)
        std::cout << "k=0: stratum empty, fan not complete — clause vacuous\n";
      else if (!c.nonempty)
        std::cout << "k=0: " << status << ", stratum empty on a complete fan\n";
      else if (cert.fan_complete)
        std::cout << "k=0 (compact): " << status << ", X_{<=0} nonempty\n";
      else
        std::cout << "k=0 (compact): fan not complete — clause vacuous\n";
      break;
    }
  }
  std::cout << "certificate: " << (cert.passed() ? "pass" : "FAIL") << "\n";
  return cert.passed() ? kOk : kDomainFailure;
}

int cmd_poisson(const std::string &biv_file, bool json) {
  const EquivariantBivector bv = load_bivector(biv_file);
  const PoissonResult p = poisson_check(bv);
  if (json) {
    std::cout << poisson_json(p).dump(2) << "\n";
  } else {
    std::cout << "poisson: " << (p.poisson ? "true" : "false") << "\n";
    if (p.triple)
      std::cout << "violating triple (" << (*p.triple)[0] + 1 << ","
                << (*p.triple)[1] + 1 << "," << (*p.triple)[2] + 1
                << "): " << p.value.get_str() << "\n";
  }
  return kOk;
}

int cmd_gallery(const std::string &name, const std::vector<long> &params) {
  const Fan fan = builtin_fan(name, params);
  std::cout << serialize_fan_document(fan.description());
  // stdout stays a clean document; the summary goes to stderr
  std::cerr << fan.name() << ": complete: " << (is_complete(fan) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_sample(const std::string &fan_file, std::uint64_t seed) {
  const Fan fan = load_fan(fan_file);
  std::cout << serialize_bivector_document(to_document(sample_regular_bivector(fan, seed)));
  return kOk;
}

int cmd_transition(const std::string &fan_file, const std::string &biv_file,
                   std::size_t chart, bool json) {
  const Fan fan = load_fan(fan_file);
  const EquivariantBivector bv = load_bivector(biv_file);
  const ChartPresentation cp = present_in_chart(bv, fan, chart);
  const IntMatrix r = unimodular_inverse(base_frame(bv, fan)) * fan.frame(chart);
  if (json) {
    std::cout << presentation_json(cp, r).dump(2) << "\n";
    return kOk;
  }
  std::cout << "chart " << chart << " (cone " << to_string(make_orbit(fan, fan.max_cones()[chart]))
            << ")\nR =\n"
            << matrix_rows(r, "  ") << "S = R^-1 =\n"
            << matrix_rows(unimodular_inverse(r), "  ") << "B = S A S^t =\n"
            << matrix_rows(cp.b, "  ") << "beta = R^t alpha = " << to_string(cp.beta)
            << "\nregular on chart: " << (is_regular_on_chart(cp) ? "true" : "false")
            << "\n";
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Equivariant bi-vector fields on smooth toric varieties"};
  app.require_subcommand(1);

  bool json = false;
  std::string fan_file, biv_file, orbit, gallery_name;
  std::vector<long> params;
  std::size_t chart = 0;
  std::uint64_t seed = 0;

  auto *validate = app.add_subcommand("validate", "Check the smooth-fan axioms");
  validate->add_option("fan", fan_file, "fan document")->required();
  validate->add_flag("--json", json, "machine-readable output");

  auto *strata = app.add_subcommand("strata", "Rank on every orbit and degeneracy loci");
  strata->add_option("fan", fan_file, "fan document")->required();
  strata->add_option("bivector", biv_file, "bivector document")->required();
  strata->add_flag("--json", json, "machine-readable output");
  strata->add_option("--orbit", orbit, "restrict to one orbit, e.g. 0,2");

  auto *certify = app.add_subcommand("certify", "Check the degeneracy theorem's clauses");
  certify->add_option("fan", fan_file, "fan document")->required();
  certify->add_option("bivector", biv_file, "bivector document")->required();
  certify->add_flag("--json", json, "machine-readable output");

  auto *poisson = app.add_subcommand("poisson", "Test the Poisson condition");
  poisson->add_option("bivector", biv_file, "bivector document")->required();
  poisson->add_flag("--json", json, "machine-readable output");

  auto *gallery = app.add_subcommand("gallery", "Print a built-in fan document");
  gallery->add_option("name", gallery_name,
                      "projective_space | affine_space | product_p1_p1 | hirzebruch | blowup_c2")
      ->required();
  gallery->add_option("params", params, "integer parameters");

  auto *trans = app.add_subcommand("transition", "Write a bivector in another chart");
  trans->add_option("fan", fan_file, "fan document")->required();
  trans->add_option("bivector", biv_file, "bivector document")->required();
  trans->add_option("--chart", chart, "maximal cone index")->required();
  trans->add_flag("--json", json, "machine-readable output");

  auto *sample = app.add_subcommand("sample", "Print a random regular bivector document");
  sample->add_option("fan", fan_file, "fan document")->required();
  sample->add_option("--seed", seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate)
      return cmd_validate(fan_file, json);
    if (*strata)
      return cmd_strata(fan_file, biv_file, json, orbit);
    if (*certify)
      return cmd_certify(fan_file, biv_file, json);
    if (*poisson)
      return cmd_poisson(biv_file, json);
    if (*gallery)
      return cmd_gallery(gallery_name, params);
    if (*trans)
      return cmd_transition(fan_file, biv_file, chart, json);
    if (*sample)
      return cmd_sample(fan_file, seed);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}
