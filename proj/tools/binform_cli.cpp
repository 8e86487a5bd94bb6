// Command-line front end: ad-hoc transvectants, Cayley-Sylvester dimension
// counts, catalog covariants, the Hermite invariant, and the full
// verification suite with cached heavy covariants.

#include <CLI11.hpp>
#include <iostream>

#include "binform/verify.hpp"

namespace {

using namespace binform;

Form form_from_text(const std::string& text) {
  Poly p = parse_poly(text);
  int order = p.degree_if([](Var v) { return v == Var::x1 || v == Var::x2; });
  int adeg = a_degree(p);
  return Form(p, order, adeg);  // constructor validates homogeneity
}

int run_transvect(const std::string& a_text, const std::string& b_text, int r) {
  Form a = form_from_text(a_text);
  Form b = form_from_text(b_text);
  std::cout << poly_to_string(transvectant(a, b, r).body) << "\n";
  return 0;
}

Covariant covariant_by_name(std::string name) {
  if (name.rfind("theta", 0) == 0) name = name.substr(5);
  if (name == "hermite" || name == "H") return hermite_invariant();
  for (int n : theta_names())
    if (name == std::to_string(n)) return theta(n);
  throw std::invalid_argument(
      "unknown covariant '" + name +
      "' (expected one of 22, 26, 33, 39, 40, 44, 51, 80, 82, hermite)");
}

int run_covariant(const std::string& name, const std::string& at_text) {
  Covariant c = covariant_by_name(name);
  if (at_text.empty()) {
    std::cout << poly_to_string(c.form.body) << "\n";
  } else {
    Form f = form_from_text(at_text);
    if (f.order != c.d)
      throw std::invalid_argument("--at form must have order " +
                                  std::to_string(c.d));
    std::cout << poly_to_string(covariant_at(c, f).body) << "\n";
  }
  return 0;
}

int run_verify(const std::string& only, int jobs, const std::string& format) {
  std::vector<std::string> selection;
  std::size_t pos = 0;
  while (pos < only.size()) {
    std::size_t comma = only.find(',', pos);
    if (comma == std::string::npos) comma = only.size();
    if (comma > pos) selection.push_back(only.substr(pos, comma - pos));
    pos = comma + 1;
  }
  std::vector<CheckRecord> records = run_checks(selection, jobs);
  if (format == "structured")
    std::cout << format_structured(records);
  else
    std::cout << format_table(records);
  for (const CheckRecord& r : records)
    if (r.status != "pass") return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant theory of binary quintics"};
  app.require_subcommand(1);

  std::string cache_dir_opt;
  app.add_option("--cache-dir", cache_dir_opt,
                 "cache directory for heavy covariants (default: platform "
                 "cache dir, or BINFORM_CACHE_DIR)");

  auto* tv = app.add_subcommand("transvect", "r-th transvectant of two forms");
  std::string a_text, b_text;
  int r = 0;
  tv->add_option("A", a_text, "first form, e.g. \"x1^5+x2^5\"")->required();
  tv->add_option("B", b_text, "second form")->required();
  tv->add_option("r", r, "transvection index")->required();

  auto* dim = app.add_subcommand(
      "dim", "dimension of the space of degree-order (m,q) covariants of d-ics");
  int dd = 0, dm = 0, dq = 0;
  dim->add_option("d", dd)->required();
  dim->add_option("m", dm)->required();
  dim->add_option("q", dq)->required();

  auto* cov = app.add_subcommand("covariant", "a catalog covariant of quintics");
  std::string cov_name, cov_at;
  cov->add_option("name", cov_name, "22, 26, 33, 39, 40, 44, 51, 80, 82, or hermite")
      ->required();
  cov->add_option("--at", cov_at, "evaluate at this quintic");

  auto* herm = app.add_subcommand("hermite", "the degree-18 Hermite invariant");
  std::string herm_at;
  herm->add_option("--at", herm_at, "evaluate at this quintic");

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  std::string only, format = "text";
  int jobs = 1;
  ver->add_option("--only", only, "comma-separated check ids");
  ver->add_option("--jobs", jobs, "worker threads");
  ver->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* ls = app.add_subcommand("checks", "list verification check ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!cache_dir_opt.empty()) binform::set_cache_dir(cache_dir_opt);
    if (tv->parsed()) return run_transvect(a_text, b_text, r);
    if (dim->parsed()) {
      std::cout << binform::cayley_sylvester(dd, dm, dq) << "\n";
      return 0;
    }
    if (cov->parsed()) return run_covariant(cov_name, cov_at);
    if (herm->parsed()) return run_covariant("hermite", herm_at);
    if (ls->parsed()) {
      for (const binform::Check& c : binform::all_checks())
        std::cout << c.id << "\n";
      return 0;
    }
    if (ver->parsed()) return run_verify(only, jobs, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
