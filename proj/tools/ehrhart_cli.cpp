// Command-line front end: lattice-point counts, triangulations, Ehrhart
// (quasi-)polynomials, reciprocity tables, Pick reports, solid-angle
// sums, covering verification, and a self-check over the built-in
// corpus.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ehrhart/corpus.hpp"
#include "ehrhart/ehrhart.hpp"
#include "ehrhart/io.hpp"
#include "ehrhart/solid_angle.hpp"

namespace {

using namespace ehrhart;

struct Options {
  std::string input;
  long t_min = 1;
  long t_max = 4;
  std::string format = "structured";
  unsigned long seed = 20240915;
};

int check(bool ok, const std::string& name) {
  std::cout << (ok ? "ok " : "FAIL ") << name << "\n";
  return ok ? 0 : 1;
}

int run_count(const Options& opt) {
  const Polytope p = parse_polytope_file(opt.input);
  for (long t = opt.t_min; t <= opt.t_max; ++t) {
    const CountReport r = count_report(p, t);
    std::cout << "t=" << r.t << " closed=" << r.closed
              << " interior=" << r.interior << " boundary=" << r.boundary
              << " method=" << to_string(r.method) << "\n";
  }
  return 0;
}

int run_triangulate(const Options& opt) {
  const Polytope p = parse_polytope_file(opt.input);
  const Triangulation tri = pulling_triangulation(p);
  for (const Simplex& cell : tri.cells) {
    for (size_t i = 0; i < cell.vertex_ids.size(); ++i)
      std::cout << (i ? " " : "") << cell.vertex_ids[i];
    std::cout << "\n";
  }
  return 0;
}

int run_ehrhart(const Options& opt) {
  const Polytope p = parse_polytope_file(opt.input);
  const Polynomial l = ehrhart_polynomial(p);
  const HStarNumerator h = hstar_numerator(l);
  std::cout << "degree=" << l.degree() << "\n";
  std::cout << "coefficients=" << l.str() << "\n";
  std::cout << "hstar=";
  for (size_t i = 0; i < h.coeffs.size(); ++i)
    std::cout << (i ? "," : "") << h.coeffs[i];
  std::cout << "\n";
  return 0;
}

int run_quasi(const Options& opt) {
  const Polytope p = parse_polytope_file(opt.input);
  const QuasiPolynomial q = quasi_polynomial(p);
  std::cout << "period=" << q.period << "\n";
  for (long i = 0; i < q.period; ++i)
    std::cout << "constituent_" << i << "=" << q.constituents[i].str() << "\n";
  std::cout << "minimal_period=" << q.minimal_period << "\n";
  return 0;
}

int run_reciprocity(const Options& opt) {
  const Polytope p = parse_polytope_file(opt.input);
  const Polynomial l = ehrhart_polynomial(p);
  const int d = static_cast<int>(p.dim);
  int status = 0;
  for (long t = 1; t <= opt.t_max; ++t) {
    Rational lhs = l(-t);
    if (d % 2 != 0) lhs = -lhs;
    const Integer interior = count(p, t, Containment::RelativeInterior);
    const bool match = lhs == Rational(interior);
    if (!match) status = 1;
    std::cout << "t=" << t << " signed_L_at_-t=" << lhs
              << " interior=" << interior << " match=" << (match ? "yes" : "no")
              << "\n";
  }
  return status;
}

int run_pick(const Options& opt) {
  const Polytope p = parse_polytope_file(opt.input);
  const PickReport r = pick_report(p);
  std::cout << "A=" << r.area << "\n"
            << "B=" << r.boundary_points << "\n"
            << "I=" << r.interior_points << "\n"
            << "pick_holds=" << (r.pick_holds ? "yes" : "no") << "\n"
            << "polynomial_matches=" << (r.polynomial_matches ? "yes" : "no")
            << "\n";
  return (r.pick_holds && r.polynomial_matches) ? 0 : 1;
}

int run_solid_angle(const Options& opt) {
  const Polytope p = parse_polytope_file(opt.input);
  for (long t = opt.t_min; t <= opt.t_max; ++t) {
    const SolidAngleReport r = solid_angle_sum(p, t);
    std::cout << "t=" << r.t << " sum=" << r.weighted_sum
              << " expected=" << r.expected << " error=" << r.abs_error << "\n";
  }
  return 0;
}

int run_covering(const Options& opt) {
  const Polytope p = parse_polytope_file(opt.input);
  int status = 0;
  for (long t = opt.t_min; t <= opt.t_max; ++t) {
    const CoveringReport r = verify_covering(p, t);
    const bool ok = r.recurrence_lhs == r.recurrence_rhs &&
                    (t >= 0 ? r.covering_exact && r.intersections_match
                            : r.deficiency_matches);
    if (!ok) status = 1;
    std::cout << "t=" << r.t << " union=" << r.q_union_count
              << " deficiency=" << r.deficiency_points.size()
              << " recurrence_lhs=" << r.recurrence_lhs
              << " recurrence_rhs=" << r.recurrence_rhs
              << " ok=" << (ok ? "yes" : "no") << "\n";
  }
  return status;
}

int run_verify_all(const Options& opt) {
  int failures = 0;
  const auto corpus = integral_corpus();

  for (const auto& [name, p] : corpus) {
    failures += check(reciprocity_check(p, 4), "reciprocity " + name);
    const CoefficientReport cr = coefficient_report(p);
    failures += check(cr.boundary_identity_holds, "boundary_identity " + name);
    const Polynomial l = ehrhart_polynomial(p);
    const HStarNumerator h = hstar_numerator(l);
    failures += check(h.coeffs[0] == 1, "hstar_leading " + name);

    std::vector<Integer> seq;
    const int d = static_cast<int>(p.dim);
    for (long t = -(d + 3); t <= d + 3; ++t) seq.push_back(ell(p, t));
    failures += check(recurrence_check(seq, d), "recurrence " + name);

    const Triangulation tri = pulling_triangulation(p);
    failures += check(count(p, 2, Containment::Closed) == count_triangulation(tri, 2),
                      "triangulation_count " + name);
  }

  for (const auto& [name, p] : rational_corpus()) {
    const QuasiPolynomial q = quasi_polynomial(p);
    failures += check(p.denominator % Integer(q.minimal_period) == 0,
                      "quasi_period " + name);
  }

  std::mt19937_64 rng(opt.seed);
  bool pick_ok = true;
  for (int i = 0; i < 25; ++i) {
    const PickReport r = pick_report(random_convex_lattice_polygon(rng));
    pick_ok = pick_ok && r.pick_holds && r.polynomial_matches;
  }
  failures += check(pick_ok, "pick_random_polygons");

  bool solid_ok = true;
  for (int i = 0; i < 5; ++i) {
    const Polytope p = random_convex_lattice_polygon(rng);
    solid_ok = solid_ok && solid_angle_parity_check(p, 6);
  }
  failures += check(solid_ok, "solid_angle_random_polygons");

  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-point counting and Ehrhart polynomials"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("EHRHART_SEED")) opt.seed = std::strtoul(env, nullptr, 10);

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("input", opt.input, "polytope file")->required();
    sub->add_option("--t-min", opt.t_min, "smallest dilate");
    sub->add_option("--t-max", opt.t_max, "largest dilate");
    sub->add_option("--format", opt.format, "human|structured")
        ->check(CLI::IsMember({"human", "structured"}));
    sub->add_option("--seed", opt.seed, "corpus seed");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> dispatch;
  auto reg = [&](const std::string& name, const std::string& desc,
                 int (*fn)(const Options&), bool needs_input = true) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common(sub, needs_input);
    dispatch.emplace_back(sub, fn);
  };
  reg("count", "lattice-point counts of dilates", run_count);
  reg("triangulate", "pulling triangulation cells", run_triangulate);
  reg("ehrhart", "Ehrhart polynomial and h* numerator", run_ehrhart);
  reg("quasi", "Ehrhart quasi-polynomial", run_quasi);
  reg("reciprocity", "interior counts vs the polynomial at -t", run_reciprocity);
  reg("pick", "Pick's identity on a lattice polygon", run_pick);
  reg("solid-angle", "solid-angle weighted sums", run_solid_angle);
  reg("covering", "simplex covering verification", run_covering);
  reg("verify-all", "property suite over the built-in corpus", run_verify_all,
      false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (opt.t_min > opt.t_max) {
    std::cerr << "error: t-min exceeds t-max\n";
    return 2;
  }
  try {
    for (const auto& [sub, fn] : dispatch) {
      if (sub->parsed()) return fn(opt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
