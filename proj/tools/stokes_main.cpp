#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "stokes/io.hpp"

namespace {

using namespace stokes;

CoherenceTensor tensor_from_document(const Document& doc) {
  if (std::holds_alternative<CoherenceTensor>(doc)) return std::get<CoherenceTensor>(doc);
  if (std::holds_alternative<ComplexMatrix>(doc))
    return density_to_tensor(std::get<ComplexMatrix>(doc), 1e-10, 1e-8);
  return compile(std::get<Mixture>(doc));
}

bool is_gadget_name(const std::string& s) {
  return s == "werner" || s == "gadget-a" || s == "gadget-b" || s == "upb-36";
}

struct GadgetArgs {
  std::string name;
  double x = 0.0;
  bool prime = false;
  std::optional<double> w1, w2, w4;
};

Mixture build_named_mixture(const GadgetArgs& a) {
  if (a.name == "werner") return werner_mixture(a.x, a.prime);
  if (a.name == "gadget-a") return gadget_a(a.x, a.w1.value_or(0.0715));
  if (a.name == "gadget-b")
    return gadget_b(a.x, a.w1.value_or(0.33), a.w2.value_or(0.17), a.w4.value_or(0.165));
  if (a.name == "upb-36") return upb_mixture_36(a.x);
  throw Error("unknown mixture '" + a.name +
              "' (expected werner, gadget-a, gadget-b or upb-36)");
}

FamilyPoint build_family(const std::string& name, std::optional<double> x,
                         std::optional<double> y) {
  auto need_x = [&](const char* range) {
    if (!x) throw Error(std::string("family requires --x in ") + range);
    return *x;
  };
  if (name == "bell") return bell();
  if (name == "werner") return werner(need_x("[0, 1]"));
  if (name == "werner-prime") return werner_prime(need_x("[0, 1]"));
  if (name == "tripartite") return tripartite(need_x("[-1/(2 sqrt 2), 1/(2 sqrt 2)]"));
  if (name == "upb") return upb_family(need_x("[-1/(8 sqrt 2), 1/(8 sqrt 2)]"));
  if (name == "npt-abc") {
    if (!x || !y) throw Error("family npt-abc requires --x and --y");
    return npt_family(*x, *y);
  }
  throw Error("unknown family '" + name +
              "' (expected bell, werner, werner-prime, tripartite, upb or npt-abc)");
}

std::string feasibility_text(const Feasibility& f, bool as_json) {
  if (as_json)
    return std::string("{\"feasible\": ") + (f.feasible ? "true" : "false") +
           ", \"worst_radius\": " + format_real(f.worst_radius) +
           ", \"term\": " + std::to_string(f.term) + ", \"qubit\": " + std::to_string(f.qubit) +
           "}\n";
  return std::string("feasible=") + (f.feasible ? "true" : "false") +
         " worst_radius=" + format_real(f.worst_radius) + " term=" + std::to_string(f.term) +
         " qubit=" + std::to_string(f.qubit) + "\n";
}

std::string scan_text(GadgetId id, const ScanResult& r, bool as_json) {
  const bool a = id == GadgetId::GadgetA;
  if (as_json) {
    std::string out = "{\"best_x\": " + format_real(r.best_x) + ", \"weights\": {\"w1\": " +
                      format_real(r.weights[0]);
    if (!a)
      out += ", \"w2\": " + format_real(r.weights[1]) + ", \"w4\": " + format_real(r.weights[2]);
    return out + "}}\n";
  }
  std::string out = "best_x=" + format_real(r.best_x) + "\nw1=" + format_real(r.weights[0]);
  if (!a) out += "\nw2=" + format_real(r.weights[1]) + "\nw4=" + format_real(r.weights[2]);
  return out + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tensor-of-coherences toolkit for few-qubit states"};
  app.require_subcommand(1);

  // convert
  auto* cmd_convert = app.add_subcommand("convert", "convert between matrix and tensor documents");
  std::string convert_input, convert_to;
  cmd_convert->add_option("input", convert_input, "input document path, or - for stdin")
      ->required();
  cmd_convert->add_option("--to", convert_to, "target representation")
      ->required()
      ->check(CLI::IsMember({"matrix", "tensor"}));
  cmd_convert->callback([&] {
    const Document doc = load_document(convert_input);
    if (std::holds_alternative<Mixture>(doc))
      throw Error("convert expects a density-matrix or coherence-tensor document");
    if (convert_to == "tensor")
      std::cout << tensor_document(tensor_from_document(doc));
    else
      std::cout << density_document(std::holds_alternative<ComplexMatrix>(doc)
                                        ? std::get<ComplexMatrix>(doc)
                                        : tensor_to_density(std::get<CoherenceTensor>(doc)));
  });

  // analyze
  auto* cmd_analyze = app.add_subcommand("analyze", "entanglement and correlation report");
  std::string analyze_input;
  double analyze_tol = kPsdTol;
  bool analyze_json = false;
  cmd_analyze->add_option("input", analyze_input, "input document path, or - for stdin")
      ->required();
  cmd_analyze->add_option("--tol", analyze_tol, "PSD tolerance");
  cmd_analyze->add_flag("--json", analyze_json, "emit JSON instead of text");
  cmd_analyze->callback([&] {
    const AnalysisReport rep = analyze(tensor_from_document(load_document(analyze_input)),
                                       analyze_tol);
    std::cout << (analyze_json ? analysis_report_json(rep) : analysis_report_text(rep));
  });

  // family
  auto* cmd_family = app.add_subcommand("family", "emit a named family state as a tensor");
  std::string family_name;
  double family_x = 0.0, family_y = 0.0;
  cmd_family->add_option("name", family_name, "bell, werner, werner-prime, tripartite, upb or npt-abc")
      ->required();
  auto* fx = cmd_family->add_option("--x", family_x, "family parameter");
  auto* fy = cmd_family->add_option("--y", family_y, "second parameter (npt-abc)");
  cmd_family->callback([&] {
    const FamilyPoint f = build_family(
        family_name, fx->count() ? std::optional<double>(family_x) : std::nullopt,
        fy->count() ? std::optional<double>(family_y) : std::nullopt);
    std::cout << tensor_document(f.tensor);
  });

  // mixture build|compile|check
  auto* cmd_mixture = app.add_subcommand("mixture", "product-state mixtures");
  cmd_mixture->require_subcommand(1);
  GadgetArgs margs;
  double w1_in = 0, w2_in = 0, w4_in = 0;

  auto* mix_build = cmd_mixture->add_subcommand("build", "emit a named mixture document");
  mix_build->add_option("gadget", margs.name, "werner, gadget-a, gadget-b or upb-36")->required();
  mix_build->add_option("--x", margs.x, "target correlation strength")->required();
  mix_build->add_flag("--prime", margs.prime, "werner sign variant");
  auto* b_w1 = mix_build->add_option("--w1", w1_in, "weight parameter");
  auto* b_w2 = mix_build->add_option("--w2", w2_in, "weight parameter (gadget-b)");
  auto* b_w4 = mix_build->add_option("--w4", w4_in, "weight parameter (gadget-b)");
  mix_build->callback([&] {
    if (b_w1->count()) margs.w1 = w1_in;
    if (b_w2->count()) margs.w2 = w2_in;
    if (b_w4->count()) margs.w4 = w4_in;
    std::cout << mixture_document(build_named_mixture(margs));
  });

  auto* mix_compile = cmd_mixture->add_subcommand("compile", "tensor of a mixture document");
  std::string compile_input;
  mix_compile->add_option("input", compile_input, "mixture document path, or - for stdin")
      ->required();
  mix_compile->callback([&] {
    const Document doc = load_document(compile_input);
    if (!std::holds_alternative<Mixture>(doc))
      throw Error("mixture compile expects a mixture document");
    std::cout << tensor_document(compile(std::get<Mixture>(doc)));
  });

  auto* mix_check = cmd_mixture->add_subcommand("check", "feasibility of a mixture");
  std::string check_input;
  bool check_json = false;
  mix_check->add_option("input", check_input, "mixture document path, -, or a gadget name")
      ->required();
  mix_check->add_option("--x", margs.x, "target correlation strength (gadget input)");
  mix_check->add_flag("--prime", margs.prime, "werner sign variant");
  auto* c_w1 = mix_check->add_option("--w1", w1_in, "weight parameter");
  auto* c_w2 = mix_check->add_option("--w2", w2_in, "weight parameter (gadget-b)");
  auto* c_w4 = mix_check->add_option("--w4", w4_in, "weight parameter (gadget-b)");
  mix_check->add_flag("--json", check_json, "emit JSON instead of text");
  mix_check->callback([&] {
    Mixture m;
    if (is_gadget_name(check_input)) {
      margs.name = check_input;
      if (c_w1->count()) margs.w1 = w1_in;
      if (c_w2->count()) margs.w2 = w2_in;
      if (c_w4->count()) margs.w4 = w4_in;
      m = build_named_mixture(margs);
    } else {
      const Document doc = load_document(check_input);
      if (!std::holds_alternative<Mixture>(doc))
        throw Error("mixture check expects a mixture document or gadget name");
      m = std::get<Mixture>(doc);
    }
    std::cout << feasibility_text(feasibility(m), check_json);
  });

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "widest feasible |x| over a weight grid");
  std::string scan_gadget;
  ScanGrid scan_grid;
  bool scan_serial = false, scan_json = false;
  cmd_scan->add_option("gadget", scan_gadget, "gadget-a or gadget-b")
      ->required()
      ->check(CLI::IsMember({"gadget-a", "gadget-b"}));
  cmd_scan->add_option("--x-step", scan_grid.x_step, "x grid step");
  cmd_scan->add_option("--x-max", scan_grid.x_max, "x grid upper end");
  cmd_scan->add_option("--w-step", scan_grid.w_step, "weight grid step");
  cmd_scan->add_flag("--serial", scan_serial, "run the serial reference kernel");
  cmd_scan->add_flag("--json", scan_json, "emit JSON instead of text");
  cmd_scan->callback([&] {
    const GadgetId id = scan_gadget == "gadget-a" ? GadgetId::GadgetA : GadgetId::GadgetB;
    const ScanResult r =
        scan_serial ? separability_scan_serial(id, scan_grid) : separability_scan(id, scan_grid);
    std::cout << scan_text(id, r, scan_json);
  });

  // region
  auto* cmd_region = app.add_subcommand("region", "PPT/NPT region map as CSV");
  RegionGrid region_grid;
  int region_n = 101;
  double region_range = 0.4, region_tol = kPsdTol;
  std::string region_out;
  bool region_serial = false;
  cmd_region->add_option("--grid", region_n, "points per axis")->check(CLI::PositiveNumber);
  cmd_region->add_option("--range", region_range, "half-width of the square grid");
  cmd_region->add_option("--tol", region_tol, "PSD tolerance");
  cmd_region->add_option("--out", region_out, "output CSV path")->required();
  cmd_region->add_flag("--serial", region_serial, "run the serial reference kernel");
  cmd_region->callback([&] {
    region_grid.nx = region_grid.ny = region_n;
    region_grid.x_min = region_grid.y_min = -region_range;
    region_grid.x_max = region_grid.y_max = region_range;
    const auto samples = region_serial ? npt_region_map_serial(region_grid, region_tol)
                                       : npt_region_map(region_grid, region_tol);
    std::ofstream out(region_out);
    if (!out) throw Error("cannot open '" + region_out + "' for writing");
    out << region_csv(samples);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help exits 0; every usage problem maps to the documented exit 1.
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const NotHermitian& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BadTrace& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotADensity& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConstraintViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const WeightNotNormalized& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
