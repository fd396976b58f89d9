#include "tropgeom/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <iostream>
#include <sstream>

namespace {

using namespace tropgeom;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot open output file: " + path);
  out << text;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON input");
  return j;
}

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string convention = "max";
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
  std::uint64_t skip = 0;

  Semiring semiring() const {
    return Semiring(convention == "min" ? Flavor::MinPlus : Flavor::MaxPlus);
  }
};

Json cmd_line(const Semiring& sr, const Json& in) {
  TropLine line = line_from_json(sr, in);
  return Json{{"line", line_to_json(sr, line)}};
}

Json cmd_incidence(const Semiring& sr, const Json& in) {
  TropLine line = line_from_json(sr, in.at("line"));
  PlanePoint p = point_from_json(in.at("point"));
  IncidenceResult r = incidence(sr, p, line);
  Json out{{"incident", r.incident}};
  if (r.incident) out["label"] = ray_label_name(r.label);
  return out;
}

Json cmd_stable_line(const Semiring& sr, const Json& in) {
  TropLine line = stable_line(sr, point_from_json(in.at("p")),
                              point_from_json(in.at("q")));
  return Json{{"line", line_to_json(sr, line)}};
}

Json cmd_intersect(const Semiring& sr, const Json& in) {
  PlanePoint p = stable_intersect(sr, line_from_json(sr, in.at("l1")),
                                  line_from_json(sr, in.at("l2")));
  return Json{{"point", point_to_json(p)}};
}

Json cmd_coaxial(const Semiring& sr, const Json& in) {
  if (in.contains("p"))
    return Json{{"coaxial", is_coaxial_points(point_from_json(in.at("p")),
                                              point_from_json(in.at("q")))}};
  return Json{{"coaxial",
               is_coaxial_lines(line_from_json(sr, in.at("l1")),
                                line_from_json(sr, in.at("l2")))}};
}

Json cmd_pencil(const Semiring& sr, const Json& in) {
  Pencil pencil = pencil_from_json(sr, in);
  return Json{{"pencil", pencil_to_json(sr, pencil)},
              {"reduced", reduced_pencil_to_json(
                              sr, reduce_pencil(sr, pencil))}};
}

Json cmd_perspectivity(const Semiring& sr, const Json& in) {
  PlanePoint center = point_from_json(in.at("center"));
  TropLine src = line_from_json(sr, in.at("src"));
  TropLine dst = line_from_json(sr, in.at("dst"));
  Json images = Json::array();
  if (in.contains("points"))
    for (const Json& pt : in.at("points"))
      images.push_back(point_to_json(perspectivity_apply(
          sr, center, src, dst, point_from_json(pt))));
  return Json{{"images", std::move(images)}};
}

Json cmd_projectivity(const Semiring& sr, const Json& in, std::uint64_t skip) {
  ReducedPencil rp1 = reduced_pencil_from_json(sr, in.at("rp1"));
  ReducedPencil rp2 = reduced_pencil_from_json(sr, in.at("rp2"));
  ProjectivityConstruction built =
      construct_projectivity(sr, rp1, rp2, static_cast<std::size_t>(skip));
  Json out{{"projectivity", projectivity_to_json(sr, built.projectivity)},
           {"construction",
            Json{{"stage1_center", point_to_json(built.stage1_center)},
                 {"intermediate_line",
                  line_to_json(sr, built.intermediate_line)},
                 {"transported_down", point_to_json(built.transported_down)},
                 {"stage2_center", point_to_json(built.stage2_center)}}}};
  if (in.contains("points")) {
    Json images = Json::array();
    for (const Json& pt : in.at("points"))
      images.push_back(point_to_json(apply_projectivity(
          sr, built.projectivity, point_from_json(pt))));
    out["images"] = std::move(images);
  }
  return out;
}

Json cmd_tdet(const Semiring& sr, const Json& in) {
  TropMatrix m = matrix_from_json(sr, in.at("matrix"));
  return Json{{"tdet", scalar_to_json(sr, tdet(sr, m))},
              {"singular", is_tropically_singular(sr, m)}};
}

Json cmd_singular(const Semiring& sr, const Json& in) {
  return Json{{"singular", is_tropically_singular(
                               sr, matrix_from_json(sr, in.at("matrix")))}};
}

Json cmd_crossratio(const Semiring& sr, const Json& in) {
  TropVector a = vector_from_json(sr, in.at("a"));
  TropVector b = vector_from_json(sr, in.at("b"));
  TropVector c = vector_from_json(sr, in.at("c"));
  TropVector d = vector_from_json(sr, in.at("d"));
  CrossRatioResult r = cross_ratio(sr, a, b, c, d);
  Json out{{"value", scalar_to_json(sr, r.value)},
           {"numer", scalar_to_json(sr, r.numer)},
           {"denom", scalar_to_json(sr, r.denom)}};
  if (in.contains("lambda")) {
    const Json& l = in.at("lambda");
    InvarianceEvidence ev = check_scalar_invariance(
        sr, a, b, c, d, scalar_from_json(sr, l.at("a")),
        scalar_from_json(sr, l.at("b")), scalar_from_json(sr, l.at("c")),
        scalar_from_json(sr, l.at("d")));
    out["scaled_value"] = scalar_to_json(sr, ev.scaled);
    out["invariant"] = ev.invariant;
  }
  return out;
}

Json cmd_reconstruct(const Semiring& sr, const Json& in, std::uint64_t seed) {
  const Json& map_json = in.at("map");
  SemilinearMap f{matrix_from_json(sr, map_json.at("matrix")),
                  MuAutomorphism()};
  if (map_json.contains("mu_scale"))
    f.mu = MuAutomorphism(rat_from_json(map_json.at("mu_scale")));
  std::size_t n = f.matrix.rows;
  if (in.contains("dimension")) n = in.at("dimension").get<std::size_t>();
  std::vector<TropScalar> samples{TropScalar(1), TropScalar(2),
                                  TropScalar(-1), TropScalar(Rat(1, 2))};
  if (in.contains("samples")) {
    samples.clear();
    for (const Json& s : in.at("samples"))
      samples.push_back(scalar_from_json(sr, s));
  }
  // Seeded extra probes widen the sampled automorphism table.
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 4; ++i)
    samples.push_back(TropScalar(
        Rat(static_cast<int>(rng() % 41) - 20, 1 + static_cast<int>(rng() % 5))));
  CollineationOracle sigma = induced_collineation(sr, f);
  ReconstructionReport report = reconstruct_semilinear(sr, sigma, n, samples);
  return reconstruction_to_json(sr, report);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact tropical plane geometry and max-plus linear algebra"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--convention", opt.convention, "max or min")
      ->check(CLI::IsMember({"max", "min"}));

  auto add_io = [&](CLI::App* sub, bool with_input = true) {
    if (with_input)
      sub->add_option("--input", opt.input, "input JSON path or -");
    sub->add_option("--output", opt.output, "output path or -");
  };

  std::string command;
  auto make = [&](const std::string& name, const std::string& desc,
                  bool with_input = true) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_io(sub, with_input);
    sub->callback([&command, name]() { command = name; });
    return sub;
  };

  make("line", "coefficients -> canonical line with vertex");
  make("incidence", "point-on-line test with ray classification");
  make("stable-line", "stable line through two points");
  make("intersect", "stable intersection of two lines");
  make("coaxial", "coaxiality of two points or two lines");
  make("pencil", "classify marked points and reduce the pencil");
  make("perspectivity", "apply a perspectivity to marked points");
  CLI::App* proj = make("projectivity",
                        "construct the two-stage projectivity between "
                        "reduced pencils");
  proj->add_option("--skip", opt.skip,
                   "skip that many valid first-stage centers");
  make("tdet", "tropical determinant and singularity");
  make("singular", "tropical singularity test");
  make("crossratio", "tropical cross-ratio, optionally with a scaling check");
  CLI::App* wit = make("witness",
                       "search for a cross-ratio matrix non-invariance "
                       "witness", false);
  wit->add_option("--seed", opt.seed, "PRNG seed");
  wit->add_option("--budget", opt.budget, "maximum cases to try");
  CLI::App* rec = make(
      "reconstruct",
      "reconstruct a semi-linear map from the collineation it induces");
  rec->add_option("--seed", opt.seed, "extra probe sample seed");
  make("check-tp2", "verify the projective-plane automorphism permutations",
       false);
  make("render", "render a scene to SVG");

  CLI11_PARSE(app, argc, argv);

  Semiring sr = opt.semiring();
  try {
    Json out;
    if (command == "witness") {
      out = witness_to_json(
          sr, find_noninvariance_witness(sr, opt.seed, opt.budget));
    } else if (command == "check-tp2") {
      out = tp2_report_to_json(tp2_automorphism_suite(sr));
    } else if (command == "render") {
      Json in = parse_json(read_input(opt.input));
      Scene scene = scene_from_json(in);
      write_output(opt.output, render_svg(scene));
      return 0;
    } else {
      Json in = parse_json(read_input(opt.input));
      if (in.contains("convention")) sr = Semiring(flavor_from_json(in));
      if (command == "line") out = cmd_line(sr, in);
      else if (command == "incidence") out = cmd_incidence(sr, in);
      else if (command == "stable-line") out = cmd_stable_line(sr, in);
      else if (command == "intersect") out = cmd_intersect(sr, in);
      else if (command == "coaxial") out = cmd_coaxial(sr, in);
      else if (command == "pencil") out = cmd_pencil(sr, in);
      else if (command == "perspectivity") out = cmd_perspectivity(sr, in);
      else if (command == "projectivity")
        out = cmd_projectivity(sr, in, opt.skip);
      else if (command == "tdet") out = cmd_tdet(sr, in);
      else if (command == "singular") out = cmd_singular(sr, in);
      else if (command == "crossratio") out = cmd_crossratio(sr, in);
      else if (command == "reconstruct")
        out = cmd_reconstruct(sr, in, opt.seed);
    }
    write_output(opt.output, out.dump(2) + "\n");
    return 0;
  } catch (const TropError& e) {
    Json err{{"error", Json{{"code", e.code_name()}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return e.code() == Errc::ParseError ? 2 : 1;
  } catch (const Json::exception& e) {
    Json err{{"error",
              Json{{"code", "ParseError"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
