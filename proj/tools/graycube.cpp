// Command-line front end: construction, verification, and export of Gray
// cubes, theta shapes, and their splittings.
//
// Exit codes: 0 all checks passed, 1 checks found violations, 2 malformed
// input or usage error.

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "graycube/graycube.hpp"

namespace {

using namespace graycube;

int require_in_cap(int d, const std::string& what) {
  if (d < 0) throw std::invalid_argument(what + " must be nonnegative");
  if (d > max_dim())
    throw std::invalid_argument(what + " " + std::to_string(d) +
                                " exceeds the configured cap " +
                                std::to_string(max_dim()) +
                                " (set GRAYCUBE_MAX_DIM to raise it)");
  return d;
}

int run_cube_axioms(int d, const std::string& format) {
  require_in_cap(d, "dimension");
  const Report rep = check_axioms(build_cube(d));
  if (format == "json") {
    json out = report_to_json(rep);
    out["dim"] = d;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_axioms_report("cube dimension " + std::to_string(d), rep);
  }
  return rep.ok() ? 0 : 1;
}

int run_cube_hom(int d, const std::string& src, const std::string& dst,
                 const std::string& format) {
  require_in_cap(d, "dimension");
  const FinitePoset p = cube_hom(d, src, dst);
  if (format == "json") {
    json out = poset_to_json(p);
    out["dim"] = d;
    out["src"] = src;
    out["dst"] = dst;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_hom_table(d, src, dst, p);
  }
  return 0;
}

int run_theta_build(const std::string& literal, const std::string& format) {
  const ThetaShape shape = parse_shape(literal);
  const TwoCategory theta = build_theta(shape);
  const Report rep = check_axioms(theta);
  if (format == "json") {
    json out;
    out["shape"] = shape.to_string();
    out["dim"] = shape.dim();
    out["axioms"] = report_to_json(rep);
    out["category"] = category_to_json(theta);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_theta(shape, theta, rep);
  }
  return rep.ok() ? 0 : 1;
}

int run_retract_verify(const std::string& literal, const std::string& format) {
  const ThetaShape shape = parse_shape(literal);
  require_in_cap(shape.dim(), "cube dimension of the shape");
  const RetractReport rep = verify_retract(shape);
  if (format == "json")
    std::cout << retract_report_to_json(rep).dump(2) << "\n";
  else
    std::cout << render_retract_table(rep);
  return rep.ok() ? 0 : 1;
}

int run_retract_sweep(int cap, const std::string& format) {
  require_in_cap(cap, "sweep dimension cap");
  const std::vector<RetractReport> reports = sweep_retracts(cap);
  bool all_ok = true;
  for (const auto& rep : reports) all_ok = all_ok && rep.ok();
  if (format == "json") {
    json out = json::array();
    for (const auto& rep : reports)
      out.push_back({{"shape", rep.shape.to_string()},
                     {"dim", rep.d},
                     {"ok", rep.ok()},
                     {"witnesses", report_to_json(Report{rep.witnesses})["violations"]}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_sweep(cap, reports);
  }
  return all_ok ? 0 : 1;
}

int run_gray_verify(int m, int n, const std::string& format) {
  require_in_cap(m, "first block dimension");
  require_in_cap(n, "second block dimension");
  require_in_cap(m + n, "total dimension");
  const GrayReport rep = verify_gray_relations(BlockSplit{m, n});
  if (format == "json")
    std::cout << gray_report_to_json(rep).dump(2) << "\n";
  else
    std::cout << render_gray_report(rep);
  return rep.ok() ? 0 : 1;
}

int run_export_dot_hom(int d, const std::string& src, const std::string& dst) {
  require_in_cap(d, "dimension");
  std::cout << poset_to_dot(cube_hom(d, src, dst));
  return 0;
}

int run_export_dot_skeleton(int d) {
  require_in_cap(d, "dimension");
  std::cout << cube_skeleton_to_dot(d);
  return 0;
}

int run_export_json_cube(int d) {
  require_in_cap(d, "dimension");
  if (d > 4)
    throw std::invalid_argument(
        "full-category export materializes every composite and is limited to "
        "dimension 4; use `export json hom` for larger cubes");
  std::cout << category_to_json(build_cube(d)).dump(2) << "\n";
  return 0;
}

int run_export_json_hom(int d, const std::string& src, const std::string& dst) {
  require_in_cap(d, "dimension");
  std::cout << poset_to_json(cube_hom(d, src, dst)).dump(2) << "\n";
  return 0;
}

int run_export_json_theta(const std::string& literal) {
  const ThetaShape shape = parse_shape(literal);
  std::cout << category_to_json(build_theta(shape)).dump(2) << "\n";
  return 0;
}

int run_export_json_section(const std::string& literal) {
  const ThetaShape shape = parse_shape(literal);
  require_in_cap(shape.dim(), "cube dimension of the shape");
  std::cout << functor_to_json(section(shape)).dump(2) << "\n";
  return 0;
}

int run_export_json_retraction(const std::string& literal) {
  const ThetaShape shape = parse_shape(literal);
  require_in_cap(shape.dim(), "cube dimension of the shape");
  std::cout << functor_to_json(retraction(shape)).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "graycube: build and verify Gray cubes, theta shapes, and the "
      "section/retraction splittings between them"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));

  std::function<int()> action;

  // cube axioms <d> | cube hom <d> <src> <dst>
  auto* cube_cmd = app.add_subcommand("cube", "Gray cube construction");
  cube_cmd->require_subcommand(1);
  {
    auto* axioms = cube_cmd->add_subcommand("axioms", "check the 2-category axioms");
    auto d = std::make_shared<int>(0);
    axioms->add_option("d", *d, "cube dimension")->required();
    axioms->callback([&action, d, &format] {
      action = [d, &format] { return run_cube_axioms(*d, format); };
    });

    auto* hom = cube_cmd->add_subcommand("hom", "print one hom poset");
    auto hd = std::make_shared<int>(0);
    auto src = std::make_shared<std::string>();
    auto dst = std::make_shared<std::string>();
    hom->add_option("d", *hd, "cube dimension")->required();
    hom->add_option("src", *src, "source bit string")->required();
    hom->add_option("dst", *dst, "target bit string")->required();
    hom->callback([&action, hd, src, dst, &format] {
      action = [hd, src, dst, &format] {
        return run_cube_hom(*hd, *src, *dst, format);
      };
    });
  }

  // theta build "[n;q...]"
  auto* theta_cmd = app.add_subcommand("theta", "theta shape construction");
  theta_cmd->require_subcommand(1);
  {
    auto* build = theta_cmd->add_subcommand("build", "build a shape and check axioms");
    auto literal = std::make_shared<std::string>();
    build->add_option("shape", *literal, "shape literal, e.g. \"[2;0,1]\"")
        ->required();
    build->callback([&action, literal, &format] {
      action = [literal, &format] { return run_theta_build(*literal, format); };
    });
  }

  // retract verify "[n;q...]" | retract sweep --max-dim <d>
  auto* retract_cmd = app.add_subcommand("retract", "section/retraction checks");
  retract_cmd->require_subcommand(1);
  {
    auto* verify = retract_cmd->add_subcommand(
        "verify", "verify the splitting for one shape and print the S/R tables");
    auto literal = std::make_shared<std::string>();
    verify->add_option("shape", *literal, "shape literal, e.g. \"[1;2]\"")
        ->required();
    verify->callback([&action, literal, &format] {
      action = [literal, &format] { return run_retract_verify(*literal, format); };
    });

    auto* sweep = retract_cmd->add_subcommand(
        "sweep", "verify every shape up to a dimension cap");
    auto cap = std::make_shared<int>(0);
    sweep->add_option("--max-dim", *cap, "largest cube dimension to cover")
        ->required();
    sweep->callback([&action, cap, &format] {
      action = [cap, &format] { return run_retract_sweep(*cap, format); };
    });
  }

  // gray verify <m> <n>
  auto* gray_cmd = app.add_subcommand("gray", "Gray tensor relation checks");
  gray_cmd->require_subcommand(1);
  {
    auto* verify = gray_cmd->add_subcommand(
        "verify", "check the interchange relations for a block split");
    auto m = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    verify->add_option("m", *m, "first block dimension")->required();
    verify->add_option("n", *n, "second block dimension")->required();
    verify->callback([&action, m, n, &format] {
      action = [m, n, &format] { return run_gray_verify(*m, *n, format); };
    });
  }

  // export dot hom|skeleton ... | export json cube|hom|theta|section|retraction ...
  auto* export_cmd = app.add_subcommand("export", "DOT and JSON export");
  export_cmd->require_subcommand(1);
  {
    auto* dot = export_cmd->add_subcommand("dot", "Graphviz output");
    dot->require_subcommand(1);

    auto* dot_hom = dot->add_subcommand("hom", "Hasse diagram of a hom poset");
    auto d1 = std::make_shared<int>(0);
    auto src = std::make_shared<std::string>();
    auto dst = std::make_shared<std::string>();
    dot_hom->add_option("d", *d1, "cube dimension")->required();
    dot_hom->add_option("src", *src, "source bit string")->required();
    dot_hom->add_option("dst", *dst, "target bit string")->required();
    dot_hom->callback([&action, d1, src, dst] {
      action = [d1, src, dst] { return run_export_dot_hom(*d1, *src, *dst); };
    });

    auto* dot_skel = dot->add_subcommand("skeleton", "atom graph of a cube");
    auto d2 = std::make_shared<int>(0);
    dot_skel->add_option("d", *d2, "cube dimension")->required();
    dot_skel->callback([&action, d2] {
      action = [d2] { return run_export_dot_skeleton(*d2); };
    });

    auto* js = export_cmd->add_subcommand("json", "JSON output");
    js->require_subcommand(1);

    auto* js_cube = js->add_subcommand("cube", "full cube category (d <= 4)");
    auto d3 = std::make_shared<int>(0);
    js_cube->add_option("d", *d3, "cube dimension")->required();
    js_cube->callback([&action, d3] {
      action = [d3] { return run_export_json_cube(*d3); };
    });

    auto* js_hom = js->add_subcommand("hom", "one hom poset");
    auto d4 = std::make_shared<int>(0);
    auto src2 = std::make_shared<std::string>();
    auto dst2 = std::make_shared<std::string>();
    js_hom->add_option("d", *d4, "cube dimension")->required();
    js_hom->add_option("src", *src2, "source bit string")->required();
    js_hom->add_option("dst", *dst2, "target bit string")->required();
    js_hom->callback([&action, d4, src2, dst2] {
      action = [d4, src2, dst2] {
        return run_export_json_hom(*d4, *src2, *dst2);
      };
    });

    auto* js_theta = js->add_subcommand("theta", "full theta category");
    auto lit1 = std::make_shared<std::string>();
    js_theta->add_option("shape", *lit1, "shape literal")->required();
    js_theta->callback([&action, lit1] {
      action = [lit1] { return run_export_json_theta(*lit1); };
    });

    auto* js_sec = js->add_subcommand("section", "the section functor S");
    auto lit2 = std::make_shared<std::string>();
    js_sec->add_option("shape", *lit2, "shape literal")->required();
    js_sec->callback([&action, lit2] {
      action = [lit2] { return run_export_json_section(*lit2); };
    });

    auto* js_ret = js->add_subcommand("retraction", "the retraction functor R");
    auto lit3 = std::make_shared<std::string>();
    js_ret->add_option("shape", *lit3, "shape literal")->required();
    js_ret->callback([&action, lit3] {
      action = [lit3] { return run_export_json_retraction(*lit3); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!action) {
    std::cerr << "error: no action selected\n";
    return 2;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  }
}
