#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cases.hpp"
#include "coeff.hpp"
#include "json_io.hpp"
#include "leibcoh/catalog.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/spectral.hpp"
#include "report.hpp"

namespace leibcoh::cli {

namespace {

struct Output {
  bool csv = false;
  bool json = false;
  bool timing = false;

  void add(CLI::App* app) {
    auto* c = app->add_flag("--csv", csv, "CSV output");
    auto* j = app->add_flag("--json", json, "JSON output");
    c->excludes(j);
    app->add_flag("--timing", timing, "Record wall time in the report");
  }
  Format format() const { return json ? Format::json : csv ? Format::csv : Format::text; }
};

struct Inputs {
  std::string catalog_name;
  std::string field = "Q";
  std::string algebra_path;
  std::string coeff = "trivial";
  std::string module_path;
  std::size_t n_max = 0;

  void add(CLI::App* app) {
    auto* cat = app->add_option("--catalog", catalog_name, "Built-in algebra, e.g. a, N, sl2, hemi_sl2_L(2)");
    auto* alg = app->add_option("--algebra", algebra_path, "Algebra JSON file");
    cat->excludes(alg);
    app->add_option("--field", field, "Field for --catalog: Q, F<p> or Fp:<p>")->capture_default_str();
    auto* co = app->add_option("--coeff", coeff, "Coefficient expression")->capture_default_str();
    auto* mod = app->add_option("--module", module_path, "Bimodule JSON file");
    co->excludes(mod);
    app->add_option("--max", n_max, "Highest degree")->required();
  }

  LeibnizAlgebra algebra() const {
    if (!algebra_path.empty()) return LeibnizAlgebra(parse_algebra(read_json_file(algebra_path)));
    if (catalog_name.empty()) throw ParseError("one of --catalog and --algebra is required");
    return catalog(catalog_name, FieldSpec::parse(field));
  }
  Bimodule module(const LeibnizAlgebra& l) const {
    if (module_path.empty()) return build_coeff(parse_coeff(coeff), l);
    BimoduleData d = parse_bimodule(read_json_file(module_path), l.constants());
    return Bimodule(l, d.dim, d.left, d.right);
  }
  void echo(Report& r) const {
    if (!algebra_path.empty())
      r.job.emplace_back("algebra", algebra_path);
    else
      r.job.emplace_back("catalog", catalog_name);
    if (!module_path.empty())
      r.job.emplace_back("module", module_path);
    else
      r.job.emplace_back("coeff", coeff);
    r.job.emplace_back("max", std::to_string(n_max));
  }
};

Table cohomology_table(const std::string& name, const CohomologyTable& t) {
  Table out{name, {"n", "dim_H", "dim_C", "rank_d"}, {}};
  for (std::size_t n = 0; n < t.dims.size(); ++n)
    out.rows.push_back({static_cast<long long>(n), static_cast<long long>(t.dims[n]),
                        static_cast<long long>(t.cochain_dims[n]), static_cast<long long>(t.ranks[n])});
  return out;
}

std::vector<std::string> names(const LeibnizAlgebra& l, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(l.basis_names()[i]);
  return out;
}

std::string tuple(const std::vector<std::string>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + ")";
}

Report cmd_check(const std::string& path, const std::string& module_path) {
  Report r;
  r.command = "check";
  r.job.emplace_back("algebra", path);
  if (!module_path.empty()) r.job.emplace_back("module", module_path);
  StructureConstants c = parse_algebra(read_json_file(path));
  r.field = c.field().name();
  auto bad = check_left_leibniz(c);
  r.checks.push_back({"left Leibniz identity", "0 violations", std::to_string(bad.size()) + " violations", "", bad.empty()});
  for (const auto& v : bad) {
    const auto& n = c.basis_names();
    r.notes.push_back("x(yz) != (xy)z + y(xz) at (x, y, z) = " + tuple({n[v.i], n[v.j], n[v.k]}));
  }
  if (!bad.empty() || module_path.empty()) return r;
  LeibnizAlgebra l(c);
  BimoduleData d = parse_bimodule(read_json_file(module_path), c);
  auto mv = check_bimodule(l, d.left, d.right);
  r.checks.push_back({"bimodule axioms", "0 violations", std::to_string(mv.size()) + " violations", "", mv.empty()});
  for (const auto& v : mv)
    r.notes.push_back(std::string(to_string(v.axiom)) + " axiom fails at " + tuple(names(l, {v.i, v.j})));
  return r;
}

Report cmd_cohomology(const Inputs& in, const std::string& variant, const Budget& budget) {
  Report r;
  r.command = "cohomology";
  in.echo(r);
  r.job.emplace_back("variant", variant);
  LeibnizAlgebra l = in.algebra();
  r.field = l.field().name();
  r.degrees = in.n_max;
  if (variant == "cr") {
    r.tables.push_back(cohomology_table("HR(g)", cr_complex(l, in.n_max, budget).table));
    return r;
  }
  Bimodule m = in.module(l);
  if (variant == "leibniz")
    r.tables.push_back(cohomology_table("HL(L,M)", cohomology(m, in.n_max, Variant::leibniz_bimodule, budget)));
  else if (variant == "left")
    r.tables.push_back(cohomology_table("HL(L,M) left action", cohomology(m, in.n_max, Variant::leibniz_left, budget)));
  else if (variant == "ce")
    r.tables.push_back(cohomology_table("H(g,M)", cohomology(m, in.n_max, Variant::chevalley_eilenberg, budget)));
  else if (variant == "rel")
    r.tables.push_back(cohomology_table("H_rel(g,M)", rel_complex(m.left_module(), in.n_max, budget).table));
  else {  // lie_relative
    QuotientAlgebra q = canonical_lie(l);
    r.tables.push_back(cohomology_table(
        "HL(L|L_Lie,M)", relative_epi_complex(q.projection, descend_bimodule(m, q), in.n_max, budget).table));
  }
  return r;
}

Subspace ideal_from(const LeibnizAlgebra& l, const std::string& spec) {
  if (spec == "kernel") return leibniz_kernel(l);
  std::vector<SparseMatrix::Triplet> t;
  std::size_t col = 0;
  std::string rest = spec;
  while (!rest.empty()) {
    std::size_t comma = rest.find(',');
    std::string name = rest.substr(0, comma);
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    try {
      t.push_back({l.index_of(name), col++, Scalar::one(l.field())});
    } catch (const std::out_of_range&) {
      throw ParseError("--ideal: unknown basis element \"" + name + "\"");
    }
  }
  return Subspace::span(SparseMatrix::from_triplets(l.field(), l.dim(), col, t));
}

Report cmd_spectral(const Inputs& in, const std::string& kind, const std::string& ideal, std::size_t r_max, bool e2,
                    const Budget& budget) {
  Report r;
  r.command = "spectral";
  in.echo(r);
  r.job.emplace_back("case", kind);
  if (kind == "ideal") r.job.emplace_back("ideal", ideal);
  r.job.emplace_back("pages", std::to_string(r_max));
  LeibnizAlgebra l = in.algebra();
  Bimodule m = in.module(l);
  r.field = l.field().name();
  r.degrees = in.n_max;

  FilteredComplex fc;
  CohomologyTable target;
  E2Report e2r;
  if (kind == "rel") {
    fc = filtration_rel(m.left_module(), in.n_max, budget);
    target = rel_complex(m.left_module(), in.n_max, budget).table;
    if (e2) e2r = e2_check_rel(m.left_module(), in.n_max, budget);
  } else {
    Subspace i = ideal_from(l, ideal);
    fc = filtration_ideal(m, i, in.n_max, budget);
    QuotientAlgebra q = quotient_algebra(l, i);
    target = relative_epi_complex(q.projection, descend_bimodule(m, q), in.n_max, budget).table;
    if (e2) e2r = e2_check_ideal(m, i, in.n_max, budget);
  }
  for (const PageTable& page : pages(fc, r_max, in.n_max)) {
    Table t{"E_" + std::to_string(page.r), {"p", "q", "dim", "d_rank"}, {}};
    for (const PageEntry& e : page.entries)
      if (e.q >= 0) t.rows.push_back({e.p, e.q, static_cast<long long>(e.dim), static_cast<long long>(e.d_rank)});
    r.tables.push_back(std::move(t));
  }
  Table inf{"E_inf", {"p", "q", "dim"}, {}};
  for (const PageEntry& e : infinity_page(fc, in.n_max).entries)
    if (e.q >= 0) inf.rows.push_back({e.p, e.q, static_cast<long long>(e.dim)});
  r.tables.push_back(std::move(inf));
  ConvergenceReport conv = convergence_check(fc, target, in.n_max);
  Table ct{"convergence", {"n", "sum_E_inf", "target"}, {}};
  for (std::size_t n = 0; n < conv.sums.size(); ++n)
    ct.rows.push_back({static_cast<long long>(n), static_cast<long long>(conv.sums[n]),
                       static_cast<long long>(conv.target[n])});
  r.tables.push_back(std::move(ct));
  r.checks.push_back({"convergence", "sums equal target", conv.ok ? "equal" : "differ", "", conv.ok});
  if (e2) {
    Table et{"E_2 formula", {"p", "q", "computed", "formula"}, {}};
    for (const E2Entry& e : e2r.entries)
      et.rows.push_back({e.p, e.q, static_cast<long long>(e.computed), static_cast<long long>(e.formula)});
    r.tables.push_back(std::move(et));
    r.checks.push_back({"E_2 product formula", "agreement", e2r.ok ? "agreement" : "differs", "", e2r.ok});
  }
  return r;
}

Report cmd_catalog_list() {
  Report r;
  r.command = "catalog";
  for (const CatalogInfo& c : catalog_list()) {
    std::string line = c.name;
    if (!c.parameters.empty()) line += "(" + c.parameters + ")";
    r.notes.push_back(line + "  basis " + c.basis + "; " + c.products + "; " + c.notes);
  }
  for (const char* m : {"trivial, trivial(n)", "F_lambda:l (h acts by l)", "weights(w_1, ..., w_d)", "adjoint_left",
                        "dual", "L(n) over sl2", "weyl over heisenberg (F_p)", "companion over a",
                        "hom(X, Y), hom_L(X), tensor(X, Y), left(B)", "adjoint, symmetrize(X), antisymmetrize(X)"})
    r.notes.push_back(std::string("coefficient ") + m);
  for (const CaseInfo& c : case_list()) r.notes.push_back("reproduce " + c.id + ": " + c.summary);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leibniz algebra cohomology", "leibcoh"};
  app.require_subcommand(1);

  std::string path, module_path;
  Output out_check;
  auto* check = app.add_subcommand("check", "Validate an algebra file and, optionally, a bimodule over it");
  check->add_option("path", path, "Algebra JSON file")->required();
  check->add_option("--module", module_path, "Bimodule JSON file");
  out_check.add(check);

  Inputs coh_in;
  Output coh_out;
  std::string variant = "leibniz";
  auto* coh = app.add_subcommand("cohomology", "Cohomology dimensions per degree");
  coh_in.add(coh);
  coh->add_option("--variant", variant, "leibniz, left, ce, cr, rel or lie_relative")
      ->check(CLI::IsMember({"leibniz", "left", "ce", "cr", "rel", "lie_relative"}))
      ->capture_default_str();
  coh_out.add(coh);

  Inputs sp_in;
  Output sp_out;
  std::string kind, ideal = "kernel";
  std::size_t r_max = 2;
  bool e2 = false;
  auto* sp = app.add_subcommand("spectral", "Spectral sequence pages of a filtered complex");
  sp->add_option("--case", kind, "rel or ideal")->required()->check(CLI::IsMember({"rel", "ideal"}));
  sp->add_option("--ideal", ideal, "kernel, or comma-separated basis names spanning the ideal")->capture_default_str();
  sp->add_option("--pages", r_max, "Last page r")->capture_default_str();
  sp->add_flag("--e2", e2, "Compare E_2 with the product formula");
  sp_in.add(sp);
  sp_out.add(sp);

  std::string case_id;
  bool all = false, list_cases = false;
  Output rep_out;
  auto* rep = app.add_subcommand("reproduce", "Run a named case against embedded golden values");
  auto* id_opt = rep->add_option("id", case_id, "Case id");
  auto* all_opt = rep->add_flag("--all", all, "Run every case");
  auto* lst = rep->add_flag("--list", list_cases, "List case ids");
  id_opt->excludes(all_opt)->excludes(lst);
  all_opt->excludes(lst);
  rep_out.add(rep);

  bool list = false;
  std::string show;
  std::string show_field = "Q";
  auto* cat = app.add_subcommand("catalog", "Built-in algebras, modules and cases");
  auto* l1 = cat->add_flag("--list", list, "Print the inventory");
  auto* s1 = cat->add_option("--show", show, "Print a catalog algebra as JSON");
  cat->add_option("--field", show_field, "Field for --show")->capture_default_str();
  l1->excludes(s1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  auto emit = [&](Report r, const Output& o, std::chrono::steady_clock::time_point t0) {
    if (o.timing)
      r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    write_report(out, r, o.format());
    return r.passed() ? int{exit_ok} : int{exit_identity};
  };
  auto t0 = std::chrono::steady_clock::now();
  try {
    Budget budget;
    if (check->parsed()) return emit(cmd_check(path, module_path), out_check, t0);
    if (coh->parsed()) return emit(cmd_cohomology(coh_in, variant, budget), coh_out, t0);
    if (sp->parsed()) return emit(cmd_spectral(sp_in, kind, ideal, r_max, e2, budget), sp_out, t0);
    if (rep->parsed()) {
      if (list_cases) {
        for (const CaseInfo& c : case_list()) out << c.id << "  " << c.summary << "\n";
        return exit_ok;
      }
      std::vector<std::string> ids;
      if (all)
        for (const CaseInfo& c : case_list()) ids.push_back(c.id);
      else if (!case_id.empty())
        ids.push_back(case_id);
      else
        throw ParseError("reproduce: give a case id, --all or --list");
      int code = exit_ok;
      for (const auto& id : ids) code = std::max(code, emit(run_case(id, budget), rep_out, std::chrono::steady_clock::now()));
      return code;
    }
    if (!show.empty()) {
      out << algebra_to_json(catalog(show, FieldSpec::parse(show_field)).constants()).dump(2) << "\n";
      return exit_ok;
    }
    if (!list) throw ParseError("catalog: give --list or --show");
    write_report(out, cmd_catalog_list(), Format::text);
    return exit_ok;
  } catch (const ResourceLimitExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return exit_resource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return exit_parse;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return exit_identity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_identity;
  }
}

}  // namespace leibcoh::cli
