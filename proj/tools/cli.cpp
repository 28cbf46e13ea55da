#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "famio.hpp"
#include "framekit/analysis.hpp"
#include "framekit/errors.hpp"
#include "framekit/generators.hpp"
#include "framekit/operators.hpp"
#include "framekit/topology.hpp"

namespace framekit::cli {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// CSV of n reals, or of 2n interleaved re,im pairs for a complex family.
std::vector<Scalar> parse_vector_csv(const std::string& csv, const WeightedFamily& fam) {
  std::vector<double> reals;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t pos = 0;
      const double x = std::stod(token, &pos);
      while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
      if (pos != token.size()) throw std::invalid_argument(token);
      if (!std::isfinite(x)) throw InputError("--vector entries must be finite");
      reals.push_back(x);
    } catch (const std::invalid_argument&) {
      throw InputError("--vector entry '" + token + "' is not a number");
    } catch (const std::out_of_range&) {
      throw InputError("--vector entry '" + token + "' is out of range");
    }
  }
  const std::size_t n = fam.dim();
  std::vector<Scalar> v(n);
  if (reals.size() == n) {
    for (std::size_t k = 0; k < n; ++k) v[k] = Scalar{reals[k], 0.0};
  } else if (fam.field() == Field::Complex && reals.size() == 2 * n) {
    for (std::size_t k = 0; k < n; ++k) v[k] = Scalar{reals[2 * k], reals[2 * k + 1]};
  } else {
    throw InputError("--vector needs " + std::to_string(n) +
                     (fam.field() == Field::Complex
                          ? " entries (or " + std::to_string(2 * n) + " as re,im pairs), got "
                          : " entries, got ") +
                     std::to_string(reals.size()));
  }
  return v;
}

void print_verdict_plain(std::ostream& out, const std::string& file,
                         const WeightedFamily& fam, const FrameVerdict& v) {
  out << "file: " << file << "\n";
  if (!fam.meta().label.empty()) out << "label: " << fam.meta().label << "\n";
  out << "field: " << (fam.field() == Field::Complex ? "C" : "R") << "\n";
  out << "n: " << fam.dim() << "\n";
  out << "points: " << fam.size() << "\n";
  out << "effective_dimension: " << effective_dimension(fam) << "\n";
  out << "energy: " << num(v.energy) << "\n";
  out << "tail_bound: " << num(v.tail_bound) << "\n";
  out << "lower_bound: " << num(v.lower_bound) << "\n";
  out << "upper_bound: " << num(v.upper_bound) << "\n";
  out << "det_u: " << num(v.det_u) << "\n";
  out << "frame: " << yesno(v.frame) << "  (tol_frame: " << num(v.tol_frame) << ")\n";
  out << "parseval: " << yesno(v.parseval) << "  (tol_parseval: " << num(v.tol_parseval)
      << ", deviation: " << num(v.parseval_deviation) << ")\n";
  if (v.f2)
    out << "f2_sufficient: " << yesno(v.f2->holds)
        << "  (guaranteed_lower_bound: " << num(v.f2->guaranteed_lower_bound) << ")\n";
}

void print_verdict_structured(std::ostream& out, const std::string& file,
                              const WeightedFamily& fam, const FrameVerdict& v) {
  nlohmann::json j{{"file", file},
                   {"label", fam.meta().label},
                   {"field", fam.field() == Field::Complex ? "C" : "R"},
                   {"n", fam.dim()},
                   {"points", fam.size()},
                   {"effective_dimension", effective_dimension(fam)},
                   {"energy", v.energy},
                   {"tail_bound", v.tail_bound},
                   {"lower_bound", v.lower_bound},
                   {"upper_bound", v.upper_bound},
                   {"det_u", v.det_u},
                   {"frame", v.frame},
                   {"tol_frame", v.tol_frame},
                   {"parseval", v.parseval},
                   {"tol_parseval", v.tol_parseval},
                   {"parseval_deviation", v.parseval_deviation}};
  if (v.f2)
    j["f2"] = nlohmann::json{{"holds", v.f2->holds},
                             {"guaranteed_lower_bound", v.f2->guaranteed_lower_bound}};
  out << j.dump(1) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"weighted-family frame analysis"};
  app.require_subcommand(1);

  std::string file, file_v, output, format = "plain", mode, form = "direct", vector_csv;
  std::string gen_field = "R";
  double tol_parseval = kDefaultParsevalTol;
  double tol_frame = 0.0;
  double eps = 0.0, gen_a = 0.0, gen_b = 0.0, gen_scale = 1.0;
  std::uint64_t seed = 1;
  std::size_t blocks = 2, trials = 100, samples = 21, terms = 0, nodes = 0, points = 0,
              dim = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "full diagnosis of a family file");
  analyze->add_option("file", file, "family file")->required();
  analyze->add_option("--format", format, "plain or structured (JSON)")
      ->check(CLI::IsMember({"plain", "structured"}));
  CLI::Option* opt_tol_frame =
      analyze->add_option("--tol-frame", tol_frame, "frame decision threshold");
  analyze->add_option("--tol-parseval", tol_parseval, "Parseval decision threshold");

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "optimal frame bounds A and B");
  bounds_cmd->add_option("file", file, "family file")->required();

  CLI::App* parseval_cmd =
      app.add_subcommand("check-parseval", "is the Gramian the identity");
  parseval_cmd->add_option("file", file, "family file")->required();
  parseval_cmd->add_option("--tol", tol_parseval, "entrywise deviation threshold");

  CLI::App* quotient_cmd = app.add_subcommand("quotient", "quotient N(v) for a test vector");
  quotient_cmd->add_option("file", file, "family file")->required();
  quotient_cmd
      ->add_option("--vector", vector_csv,
                   "CSV test vector: n reals, or 2n interleaved re,im for field C")
      ->required();
  quotient_cmd->add_option("--form", form, "computation route")
      ->check(CLI::IsMember({"direct", "trace", "synth", "all"}));

  CLI::App* extend_cmd =
      app.add_subcommand("extend-check", "randomized extension consistency report");
  extend_cmd->add_option("file", file, "family file")->required();
  extend_cmd->add_option("--blocks", blocks, "test-family points per trial (default 2)");
  extend_cmd->add_option("--trials", trials, "number of random trials (default 100)");
  extend_cmd->add_option("--seed", seed, "RNG seed (default 1)");

  CLI::App* path_cmd = app.add_subcommand("path", "certify a two-leg family path");
  path_cmd->add_option("u_file", file, "first endpoint family")->required();
  path_cmd->add_option("v_file", file_v, "second endpoint family")->required();
  path_cmd->add_option("--mode", mode, "frame or parseval")
      ->required()
      ->check(CLI::IsMember({"frame", "parseval"}));
  path_cmd->add_option("--samples", samples, "samples per leg (default 21)");
  path_cmd->add_option("--seed", seed, "RNG seed for the auxiliary (default 1)");

  CLI::App* perturb_cmd =
      app.add_subcommand("perturb", "nearby frame within eps of the input family");
  perturb_cmd->add_option("file", file, "family file")->required();
  perturb_cmd->add_option("--eps", eps, "perturbation radius")->required();
  perturb_cmd->add_option("--seed", seed, "RNG seed (default 1)");
  perturb_cmd->add_option("-o,--output", output, "output family file")->required();

  CLI::App* gen = app.add_subcommand("generate", "write a generated family file");
  gen->require_subcommand(1);
  CLI::App* gen_dirichlet = gen->add_subcommand("dirichlet", "truncated Dirichlet family");
  gen_dirichlet->add_option("--a", gen_a, "first exponent")->required();
  gen_dirichlet->add_option("--b", gen_b, "second exponent")->required();
  gen_dirichlet->add_option("--terms", terms, "series truncation length")->required();
  gen_dirichlet->add_option("-o,--output", output, "output family file")->required();
  CLI::App* gen_circle = gen->add_subcommand("circle", "equispaced circle family");
  gen_circle->add_option("--nodes", nodes, "quadrature nodes")->required();
  gen_circle->add_option("--scale", gen_scale, "vector scale (default 1)");
  gen_circle->add_option("-o,--output", output, "output family file")->required();
  CLI::App* gen_random = gen->add_subcommand("random", "unit-weight Gaussian family");
  gen_random->add_option("--points", points, "number of points")->required();
  gen_random->add_option("--dim", dim, "ambient dimension")->required();
  gen_random->add_option("--seed", seed, "RNG seed (default 1)");
  gen_random->add_option("--field", gen_field, "R or C (default R)")
      ->check(CLI::IsMember({"R", "C"}));
  gen_random->add_option("-o,--output", output, "output family file")->required();

  std::vector<const char*> argv;
  argv.push_back("framekit");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      const WeightedFamily fam = io::read_family(file);
      const std::optional<double> tf =
          opt_tol_frame->count() > 0 ? std::optional<double>(tol_frame) : std::nullopt;
      const FrameVerdict v = verdict(fam, tf, tol_parseval);
      if (format == "structured")
        print_verdict_structured(out, file, fam, v);
      else
        print_verdict_plain(out, file, fam, v);
      return 0;
    }

    if (*bounds_cmd) {
      const auto [a, b] = frame_bounds(io::read_family(file));
      out << "A=" << num(a) << " B=" << num(b) << "\n";
      return 0;
    }

    if (*parseval_cmd) {
      const WeightedFamily fam = io::read_family(file);
      const bool ok = is_parseval(fam, tol_parseval);
      out << "parseval: " << yesno(ok) << "  (tol: " << num(tol_parseval)
          << ", deviation: " << num(parseval_deviation(fam)) << ")\n";
      return ok ? 0 : 1;
    }

    if (*quotient_cmd) {
      const WeightedFamily fam = io::read_family(file);
      const std::vector<Scalar> v = parse_vector_csv(vector_csv, fam);
      if (form == "all") {
        out << "N_direct=" << num(quotient_N(v, fam, QuotientForm::Direct))
            << " N_trace=" << num(quotient_N(v, fam, QuotientForm::Trace))
            << " N_synth=" << num(quotient_N(v, fam, QuotientForm::Synth)) << "\n";
      } else {
        const QuotientForm qf = form == "trace"   ? QuotientForm::Trace
                                : form == "synth" ? QuotientForm::Synth
                                                  : QuotientForm::Direct;
        out << "N=" << num(quotient_N(v, fam, qf)) << "  (form: " << form << ")\n";
      }
      return 0;
    }

    if (*extend_cmd) {
      const WeightedFamily fam = io::read_family(file);
      const ExtensionCheckReport r = extension_equivalence_check(fam, trials, blocks, seed);
      out << "blocks: " << r.blocks << "  trials: " << r.trials << "  seed: " << seed << "\n";
      out << "bounds: A=" << num(r.lower_bound) << " B=" << num(r.upper_bound) << "\n";
      out << "extended bounds: A=" << num(r.extended_lower)
          << " B=" << num(r.extended_upper) << "\n";
      out << "max bound violation: " << num(r.max_bound_violation)
          << "  (tol: " << num(r.tol_bounds) << ")\n";
      out << "max delta mismatch: " << num(r.max_delta_mismatch)
          << "  (tol: " << num(r.tol_reduction) << ")\n";
      out << "max indicator mismatch: " << num(r.max_indicator_mismatch)
          << "  (tol: " << num(r.tol_reduction) << ")\n";
      out << "max spectrum mismatch: " << num(r.max_spectrum_mismatch)
          << "  (tol: " << num(r.tol_spectrum) << ")\n";
      out << "equivalence: " << (r.passed() ? "confirmed" : "violated") << "\n";
      return r.passed() ? 0 : 1;
    }

    if (*path_cmd) {
      const WeightedFamily u = io::read_family(file);
      const WeightedFamily v = io::read_family(file_v);
      const PathMode m = mode == "frame" ? PathMode::Frame : PathMode::Parseval;
      const PathSpec spec = make_path(u, v, m, seed);
      const PathCertification cert = certify_path(spec, samples);
      out << "mode: " << mode << "  samples per leg: " << cert.samples << "  seed: " << seed
          << "\n";
      if (m == PathMode::Frame)
        out << "min lower bound: " << num(cert.min_lower_bound)
            << "  (tol: " << num(cert.tol) << ")\n";
      else
        out << "max parseval deviation: " << num(cert.max_parseval_deviation)
            << "  (tol: " << num(cert.tol) << ")\n";
      for (const PathSampleFailure& f : cert.failures)
        out << "failure: leg=" << (f.leg == PathLeg::U ? "u" : "v") << " t=" << num(f.t)
            << " metric=" << num(f.metric) << "\n";
      out << "certified: " << yesno(cert.certified) << "\n";
      return cert.certified ? 0 : 1;
    }

    if (*perturb_cmd) {
      const WeightedFamily u = io::read_family(file);
      const WeightedFamily aux = auxiliary_family(u.weights(), u.dim(), u.field(), {},
                                                  AuxiliaryMode::Independent, seed);
      const WeightedFamily moved = density_perturb(u, aux, eps, seed);
      io::write_family(moved, output);
      const auto [a, b] = frame_bounds(moved);
      out << "wrote: " << output << "\n";
      out << "distance: " << num(weighted_distance(moved, u)) << "  (eps: " << num(eps)
          << ")\n";
      out << "lower bound: " << num(a) << "  upper bound: " << num(b) << "\n";
      return 0;
    }

    if (*gen) {
      if (*gen_dirichlet) {
        const DirichletFamily d = dirichlet_family(gen_a, gen_b, terms);
        if (d.degenerate)
          err << "warning: a - b is within 1e-12 of an integer; the two components "
                 "coincide up to a constant phase and the family cannot be a frame\n";
        io::write_family(d.family, output);
        out << "wrote: " << output << "  (" << d.family.meta().label << ")\n";
      } else if (*gen_circle) {
        const WeightedFamily fam = circle_frame(nodes, gen_scale);
        io::write_family(fam, output);
        out << "wrote: " << output << "  (" << fam.meta().label << ")\n";
      } else {
        const WeightedFamily fam = random_family(
            points, dim, gen_field == "C" ? Field::Complex : Field::Real, seed);
        io::write_family(fam, output);
        out << "wrote: " << output << "  (" << fam.meta().label << ")\n";
      }
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no command\n";
  return 2;
}

}  // namespace framekit::cli
