// Command-line front end for the lrcones library.
//
// Exit status: 0 success, 1 validation failure (report on stdout),
// 2 usage or parse error (message on stderr).

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "lrcones/lrcones.hpp"

namespace {

using namespace lrcones;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct Options {
  std::string model;
  std::string from;
  std::string to;
  std::string input = "-";
  std::string output;
  std::string lambda, mu, nu;
  std::size_t k = 0;
  std::optional<std::uint64_t> limit;
  std::optional<std::string> s, t;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const Options& opt, const std::string& doc) {
  if (opt.output.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw usage_error("cannot write '" + opt.output + "'");
  out << doc;
}

json report_json(const ValidationReport& r) {
  json j{{"valid", r.ok}};
  if (!r.ok) j["violation"] = json{{"condition", r.condition}, {"i", r.i}, {"j", r.j}, {"detail", r.detail}};
  return j;
}

int fail_validation(const Options& opt, const std::string& model, const ValidationReport& r) {
  auto j = report_json(r);
  j["model"] = model;
  write_output(opt, format_json(j));
  return kInvalid;
}

IntegralType type_from_options(const Options& opt) {
  return make_type(parse_partition(opt.lambda), parse_partition(opt.mu), parse_partition(opt.nu), opt.k);
}

TriangleType<Rational> rational_type_from_options(const Options& opt, std::size_t k) {
  auto t = make_type(parse_partition(opt.lambda), parse_partition(opt.mu), parse_partition(opt.nu), k);
  return convert_type<Rational>(t);
}

int run_validate(const Options& opt) {
  auto text = read_input(opt.input);
  ValidationReport r;
  switch (parse_model(opt.model)) {
    case Model::tableau: r = lr_tableau_check(tableau_from_json(parse_json_document(text))); break;
    case Model::lr: r = lr_validate(parse_triangle(text)); break;
    case Model::hive: r = hive_validate(parse_triangle(text)); break;
    case Model::bz: r = bz_validate(bz_from_json(parse_json_document(text))); break;
  }
  auto j = report_json(r);
  j["model"] = opt.model;
  write_output(opt, format_json(j));
  return r.ok ? kOk : kInvalid;
}

int run_convert(const Options& opt) {
  const Model from = parse_model(opt.from);
  const Model to = parse_model(opt.to);
  auto text = read_input(opt.input);
  if ((opt.s || opt.t) && !(from == Model::bz && to == Model::lr))
    throw usage_error("--s/--t only apply to bz -> lr");

  if (from == Model::tableau && to == Model::lr) {
    auto tab = tableau_from_json(parse_json_document(text));
    if (auto r = lr_tableau_check(tab); !r) return fail_validation(opt, "tableau", r);
    write_output(opt, format_triangle(tableau_to_triangle(tab, tab.shape().rows())));
    return kOk;
  }
  if (from == Model::lr && to == Model::tableau) {
    auto a = parse_triangle(text);
    if (auto r = lr_validate(a); !r) return fail_validation(opt, "lr", r);
    try {
      write_output(opt, format_json(tableau_to_json(triangle_to_tableau(a))));
    } catch (const usage_error& e) {
      return fail_validation(opt, "lr", ValidationReport::fail("integral partition type", 0, 0, e.what()));
    }
    return kOk;
  }
  if (from == Model::lr && to == Model::hive) {
    write_output(opt, format_triangle(phi(parse_triangle(text))));
    return kOk;
  }
  if (from == Model::hive && to == Model::lr) {
    write_output(opt, format_triangle(phi_inv(parse_triangle(text))));
    return kOk;
  }
  if (from == Model::lr && to == Model::bz) {
    write_output(opt, format_json(bz_to_json(psi_phi(parse_triangle(text)))));
    return kOk;
  }
  if (from == Model::hive && to == Model::bz) {
    write_output(opt, format_json(bz_to_json(psi(parse_triangle(text)))));
    return kOk;
  }
  if (from == Model::bz && to == Model::lr) {
    auto x = bz_from_json(parse_json_document(text));
    if (auto r = in_Wk(x); !r) return fail_validation(opt, "bz", r);
    FiberParams<Rational> p;
    if (opt.s) p.s = parse_rational(*opt.s);
    if (opt.t) p.t = parse_rational(*opt.t);
    if (!opt.s && !opt.t) std::cerr << "note: no --s/--t given, using the section omega (s = t = 0)\n";
    write_output(opt, format_triangle(fiber_element(x, p)));
    return kOk;
  }
  throw usage_error("no conversion from " + opt.from + " to " + opt.to);
}

int run_type(const Options& opt) {
  auto text = read_input(opt.input);
  switch (parse_model(opt.model)) {
    case Model::tableau: {
      auto tab = tableau_from_json(parse_json_document(text));
      if (auto r = lr_tableau_check(tab); !r) return fail_validation(opt, "tableau", r);
      auto a = tableau_to_triangle(tab, tab.shape().rows());
      write_output(opt, format_json(type_to_json(lr_boundary_sums(a))));
      return kOk;
    }
    case Model::lr: {
      auto a = parse_triangle(text);
      if (auto r = lr_validate(a); !r) return fail_validation(opt, "lr", r);
      write_output(opt, format_json(type_to_json(lr_boundary_sums(a))));
      return kOk;
    }
    case Model::hive: {
      auto h = parse_triangle(text);
      if (auto r = hive_validate(h); !r) return fail_validation(opt, "hive", r);
      write_output(opt, format_json(type_to_json(hive_boundary_differences(h))));
      return kOk;
    }
    case Model::bz: {
      auto x = bz_from_json(parse_json_document(text));
      if (opt.lambda.empty() && opt.mu.empty() && opt.nu.empty())
        throw usage_error("a BZ triangle matches a two-parameter family of types; "
                          "pass --lambda/--mu/--nu to test a candidate");
      if (auto r = bz_validate(x); !r) return fail_validation(opt, "bz", r);
      auto t = rational_type_from_options(opt, x.k() + 1);
      bool match = bz_type_match(x, t);
      json j{{"match", match}, {"balanced", type_sum_check(t)}, {"type", type_to_json(t)}};
      write_output(opt, format_json(j));
      return match ? kOk : kInvalid;
    }
  }
  return kUsage;
}

int run_count(const Options& opt) {
  CountRequest req;
  req.model = parse_model(opt.model);
  req.type = type_from_options(opt);
  req.limit = opt.limit;
  req.threads = default_thread_count();
  auto result = count_points(req);
  write_output(opt, format_json(json{{"model", opt.model}, {"count", result.count}, {"truncated", result.truncated}}));
  return kOk;
}

int run_fiber(const Options& opt) {
  auto x = bz_from_json(parse_json_document(read_input(opt.input)));
  if (auto r = in_Wk(x); !r) return fail_validation(opt, "bz", r);
  FiberParams<Rational> p;
  if (opt.s) p.s = parse_rational(*opt.s);
  if (opt.t) p.t = parse_rational(*opt.t);
  write_output(opt, format_triangle(fiber_element(x, p)));
  return kOk;
}

int run_verify(const Options& opt) {
  auto report = verify_cross_model(type_from_options(opt));
  json j{{"counts", {{"tableau", report.tableau_count}, {"lr", report.lr_count},
                     {"hive", report.hive_count}, {"bz", report.bz_count}}},
         {"mismatches", report.mismatches},
         {"ok", report.ok()}};
  write_output(opt, format_json(j));
  return report.ok() ? kOk : kInvalid;
}

int run_symmetry(const Options& opt) {
  auto report = check_mu_nu_symmetry(type_from_options(opt));
  json j{{"applicable", report.applicable}, {"symmetric", report.symmetric()}};
  if (report.applicable) {
    j["c_mu_nu"] = report.forward;
    j["c_nu_mu"] = report.backward;
  }
  write_output(opt, format_json(j));
  return report.symmetric() ? kOk : kInvalid;
}

void add_type_options(CLI::App* cmd, Options& opt, bool required) {
  auto* l = cmd->add_option("--lambda", opt.lambda, "lambda as comma-separated parts, e.g. 23,18,15,11,8");
  auto* m = cmd->add_option("--mu", opt.mu, "mu as comma-separated parts");
  auto* n = cmd->add_option("--nu", opt.nu, "nu as comma-separated parts");
  if (required) {
    l->required();
    m->required();
    n->required();
  }
  cmd->add_option("--k", opt.k, "number of rows k (default: longest partition)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact LR-triangle, hive and BZ-triangle models of Littlewood-Richardson coefficients"};
  app.require_subcommand(1);
  Options opt;

  const std::string models = "tableau, lr, hive or bz";
  auto* validate = app.add_subcommand("validate", "check cone membership of a document");
  validate->add_option("--model", opt.model, models)->required();
  validate->add_option("file", opt.input, "input document ('-' for stdin)");

  auto* convert = app.add_subcommand("convert", "apply one of the linear maps or the tableau coding");
  convert->add_option("--from", opt.from, models)->required();
  convert->add_option("--to", opt.to, models)->required();
  convert->add_option("--s", opt.s, "fiber parameter s (bz -> lr)");
  convert->add_option("--t", opt.t, "fiber parameter t (bz -> lr)");
  convert->add_option("file", opt.input, "input document ('-' for stdin)");

  auto* type = app.add_subcommand("type", "print the type (lambda, mu, nu) of a document");
  type->add_option("--model", opt.model, models)->required();
  type->add_option("file", opt.input, "input document ('-' for stdin)");
  add_type_options(type, opt, false);

  auto* count = app.add_subcommand("count", "count integer points of a typed polytope");
  count->add_option("--model", opt.model, models)->required();
  count->add_option("--limit", opt.limit, "stop after this many points (result flagged truncated)");
  add_type_options(count, opt, true);

  auto* fiber = app.add_subcommand("fiber", "LR triangle A_{s,t} over a BZ labeling");
  fiber->add_option("--s", opt.s, "fiber parameter s (default 0)");
  fiber->add_option("--t", opt.t, "fiber parameter t (default 0)");
  fiber->add_option("file", opt.input, "BZ document ('-' for stdin)");

  auto* verify = app.add_subcommand("verify", "cross-check all four models on one type");
  add_type_options(verify, opt, true);

  auto* symmetry = app.add_subcommand("symmetry", "compare c^lambda_{mu nu} with c^lambda_{nu mu}");
  add_type_options(symmetry, opt, true);

  for (auto* cmd : {validate, convert, type, count, fiber, verify, symmetry})
    cmd->add_option("-o,--output", opt.output, "write the result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return run_validate(opt);
    if (*convert) return run_convert(opt);
    if (*type) return run_type(opt);
    if (*count) return run_count(opt);
    if (*fiber) return run_fiber(opt);
    if (*verify) return run_verify(opt);
    if (*symmetry) return run_symmetry(opt);
  } catch (const validation_error& e) {
    std::cout << format_json(report_json(e.report));
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
