#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicsurf/acm.hpp"
#include "cubicsurf/catalog.hpp"
#include "cubicsurf/census.hpp"
#include "cubicsurf/cohomology.hpp"
#include "cubicsurf/divisor.hpp"
#include "cubicsurf/expr.hpp"
#include "cubicsurf/weyl.hpp"

namespace cubicsurf::cli {

namespace {

using json = nlohmann::ordered_json;

json hilbert_json(const std::array<long long, 3>& p) { return json{p[0], p[1], p[2]}; }

void emit_tsv(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "\t" : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
    out << "\n";
  }
}

struct TwistRange {
  int lo = 0, hi = 0;
};

TwistRange parse_twists(const std::string& s) {
  const auto pos = s.find("..");
  TwistRange r;
  if (pos == std::string::npos) {
    r.lo = r.hi = std::stoi(s);
    return r;
  }
  r.lo = std::stoi(s.substr(0, pos));
  r.hi = std::stoi(s.substr(pos + 2));
  if (r.hi < r.lo) throw CLI::ValidationError("--twists", "empty twist range");
  return r;
}

int cmd_info(const std::string& expr, const std::string& format, std::ostream& out) {
  const DivisorClass d = parse_class(expr);
  const Positivity p = positivity(d);
  json j{{"expr", expr},
         {"canonical", print_class(d)},
         {"coords", d.c},
         {"degree", degree(d)},
         {"self_intersection", self_int(d)},
         {"genus", genus(d)},
         {"chi", euler_char(d)},
         {"effective", p.effective},
         {"nef", p.nef},
         {"ample", p.ample},
         {"family", family_name(classify_membership(d))}};
  (void)format;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_cohomology(const std::string& expr, const std::string& twists, const std::string& format,
                   std::ostream& out) {
  const DivisorClass d = parse_class(expr);
  const TwistRange r = parse_twists(twists);
  const auto H = hyperplane_class();
  if (format == "tsv") {
    std::vector<std::vector<std::string>> rows;
    for (int t = r.lo; t <= r.hi; ++t) {
      const auto hv = h_vector(d + t * H);
      rows.push_back({std::to_string(t), std::to_string(hv.h0), std::to_string(hv.h1),
                      std::to_string(hv.h2)});
    }
    emit_tsv(out, {"t", "h0", "h1", "h2"}, rows);
    return 0;
  }
  json twist_rows = json::array();
  for (int t = r.lo; t <= r.hi; ++t) {
    const auto hv = h_vector(d + t * H);
    twist_rows.push_back(json{{"t", t}, {"h0", hv.h0}, {"h1", hv.h1}, {"h2", hv.h2}});
  }
  json j{{"class", print_class(d)}, {"twists", twist_rows}};
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_acm(const std::string& expr, std::ostream& out) {
  const DivisorClass d = parse_class(expr);
  const auto [lo, hi] = acm_window(d);
  const auto H = hyperplane_class();
  json nonzero = json::array();
  for (int t = lo; t <= hi; ++t) {
    const long long h1 = h_vector(d + t * H).h1;
    if (h1 != 0) nonzero.push_back(json{{"t", t}, {"h1", h1}});
  }
  json j{{"class", print_class(d)},
         {"acm", nonzero.empty()},
         {"window", {{"low", lo}, {"high", hi}}},
         {"nonzero_h1", nonzero}};
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& c1_expr, long long c2, std::ostream& out) {
  const DivisorClass c1 = parse_class(c1_expr);
  const auto res = rank2_type_with_twist(c1, c2);
  if (!res) {
    out << json{{"c1", print_class(c1)}, {"c2", c2}, {"type", nullptr}}.dump(2) << "\n";
    return 0;
  }
  const ResolutionType* t = res->first;
  const auto [nc1, nc2] = twist_chern(c1, c2, res->second);
  json j{{"c1", print_class(c1)},
         {"c2", c2},
         {"type", t->label},
         {"normalizing_twist", res->second},
         {"normalized_c1", print_class(nc1)},
         {"normalized_c2", nc2},
         {"gen_twists", t->gen_twists},
         {"syz_twists", t->syz_twists},
         {"hilbert", hilbert_json(t->hilbert)},
         {"dual", {{"label", t->dual_label}, {"shift", t->dual_shift}}}};
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_extension(const std::string& m_expr, const std::string& n_expr, int t, std::ostream& out,
                  std::ostream& err) {
  const DivisorClass m = parse_class(m_expr);
  const DivisorClass n = parse_class(n_expr);
  if (ext_dim(m, n, t) == 0) {
    err << "no nonsplit extension: Ext^1(N, M(t)) = 0\n";
    return 1;
  }
  const ExtensionRecord rec = extension_profile(m, n, t);
  json j{{"m", print_class(rec.m)},
         {"n", print_class(rec.n)},
         {"t", rec.t},
         {"ext_dim", rec.ext_dim},
         {"c1", print_class(rec.c1)},
         {"c2", rec.c2},
         {"type", rec.type},
         {"simple_sufficient", rec.simple_sufficient},
         {"unobstructed", rec.unobstructed},
         {"stability", rec.stability},
         {"hilbert_pair",
          hilbert_json(hilbert_poly_pair(rec.m + rec.t * hyperplane_class(), rec.n))}};
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_census(const std::string& table, const std::string& format, std::ostream& out) {
  if (table == "families") {
    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    for (const auto& rec : family_census()) {
      rows.push_back({rec.type_label, rec.c1_pattern, std::to_string(rec.c2),
                      std::to_string(rec.family_count), std::to_string(rec.family_dim),
                      std::to_string(rec.expected_dim), rec.stability});
      jrows.push_back(json{{"type", rec.type_label},
                           {"c1_pattern", rec.c1_pattern},
                           {"c2", rec.c2},
                           {"count", rec.family_count},
                           {"dim", rec.family_dim},
                           {"expected_dim", rec.expected_dim},
                           {"dim_formula_applies", rec.dim_formula_applies},
                           {"stability", rec.stability}});
    }
    if (format == "tsv")
      emit_tsv(out, {"type", "c1", "c2", "count", "dim", "expected_dim", "stability"}, rows);
    else
      out << json{{"families", jrows}}.dump(2) << "\n";
    return 0;
  }
  if (table == "extensions") {
    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    for (const auto& rec : family_census())
      for (const auto& ext : rec.extensions) {
        const auto& r = *ext.row;
        auto pat = [](Family f, int tw) {
          std::string s = f == Family::line ? "L" : f == Family::conic ? "C" : "T";
          if (tw == -1) s += "-H";
          if (tw == 1) s += "+H";
          return s;
        };
        rows.push_back({rec.type_label, pat(r.m_family, r.m_twist), pat(r.n_family, r.n_twist),
                        std::to_string(r.mn), std::to_string(r.h1),
                        std::to_string(ext.computed_ordered), std::to_string(r.printed_num),
                        r.stability, r.simple ? "yes" : "no"});
        jrows.push_back(json{{"type", rec.type_label},
                             {"m", pat(r.m_family, r.m_twist)},
                             {"n", pat(r.n_family, r.n_twist)},
                             {"mn", r.mn},
                             {"ext_dim", r.h1},
                             {"ordered_pairs_per_family", ext.computed_ordered},
                             {"published_num", r.printed_num},
                             {"stability", r.stability},
                             {"simple", r.simple}});
      }
    if (format == "tsv")
      emit_tsv(out, {"type", "m", "n", "mn", "ext_dim", "ordered", "published", "stability",
                     "simple"},
               rows);
    else
      out << json{{"extensions", jrows}}.dump(2) << "\n";
    return 0;
  }
  if (table == "appendix") {
    const std::vector<std::pair<std::string, std::pair<Family, Family>>> tables = {
        {"L.L", {Family::line, Family::line}},   {"L.C", {Family::line, Family::conic}},
        {"L.T", {Family::line, Family::cubic}},  {"C.L", {Family::conic, Family::line}},
        {"C.C", {Family::conic, Family::conic}}, {"C.T", {Family::conic, Family::cubic}},
        {"T.L", {Family::cubic, Family::line}},  {"T.C", {Family::cubic, Family::conic}},
        {"T.T", {Family::cubic, Family::cubic}},
    };
    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    for (const auto& [id, kinds] : tables) {
      const DivisorClass fixed = kinds.first == Family::line    ? b(1)
                                 : kinds.first == Family::conic ? ell() - b(1)
                                                                : ell();
      for (const auto& [iv, buckets] : intersection_distribution_detailed(fixed, kinds.second))
        for (const auto& [key, num] : buckets) {
          rows.push_back({id, std::to_string(iv), key, std::to_string(num)});
          jrows.push_back(
              json{{"table", id}, {"intersection", iv}, {"bucket", key}, {"count", num}});
        }
    }
    if (format == "tsv")
      emit_tsv(out, {"table", "intersection", "bucket", "count"}, rows);
    else
      out << json{{"appendix", jrows}}.dump(2) << "\n";
    return 0;
  }
  if (table == "maps") {
    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    for (const auto& id : registered_map_ids()) {
      const MapReport rep = fiber_check(id);
      rows.push_back({rep.id, std::to_string(rep.domain_size), std::to_string(rep.codomain_size),
                      std::to_string(rep.fiber), rep.constant_fiber ? "yes" : "no",
                      rep.surjective ? "yes" : "no", std::to_string(expected_fiber(id))});
      jrows.push_back(json{{"id", rep.id},
                           {"domain", rep.domain_size},
                           {"codomain", rep.codomain_size},
                           {"fiber", rep.fiber},
                           {"constant_fiber", rep.constant_fiber},
                           {"surjective", rep.surjective},
                           {"expected_fiber", expected_fiber(id)}});
    }
    if (format == "tsv")
      emit_tsv(out, {"id", "domain", "codomain", "fiber", "constant", "surjective", "expected"},
               rows);
    else
      out << json{{"maps", jrows}}.dump(2) << "\n";
    return 0;
  }
  throw CLI::ValidationError("--table", "unknown table " + table);
}

int cmd_orbit(const std::string& expr, bool list, std::ostream& out) {
  const DivisorClass d = parse_class(expr);
  const auto orb = orbit(d);
  json j{{"class", print_class(d)}, {"size", orb.size()}};
  if (list) {
    json elems = json::array();
    for (const auto& e : orb) elems.push_back(print_class(e));
    j["elements"] = elems;
  }
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& check, bool corrupt_gram, const std::string& format,
               std::ostream& out, std::ostream& err) {
  // text lines by default; --format json gives the structured report
  VerifyOptions opts;
  if (!check.empty()) opts.only_check = check;
  if (corrupt_gram) opts.form.gram[6][6] = 1;  // negative control: break the signature
  const Report rep = verify_all(opts);
  if (!check.empty() && rep.checks.empty()) {
    err << "unknown check id: " << check << "\n";
    return 2;
  }
  if (format == "json") {
    json jrows = json::array();
    for (const auto& c : rep.checks) {
      json j{{"id", c.id}, {"pass", c.pass}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      if (!c.note.empty()) j["note"] = c.note;
      jrows.push_back(j);
    }
    json disc = json::array();
    for (const auto& d : published_discrepancies())
      disc.push_back(json{
          {"id", d.id}, {"printed", d.printed}, {"computed", d.computed}, {"note", d.note}});
    out << json{{"checks", jrows},
                {"failures", rep.failures()},
                {"known_discrepancies", disc}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& c : rep.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.id;
      if (!c.pass) out << ": " << c.detail;
      if (!c.note.empty()) out << "  # " << c.note;
      out << "\n";
    }
    out << rep.checks.size() - static_cast<std::size_t>(rep.failures()) << "/" << rep.checks.size()
        << " checks passed\n";
  }
  return rep.failures() == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picard-lattice calculator for the smooth cubic surface"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format / --cache-dir after the subcommand

  // default JSON everywhere except `verify`, which prints PASS/FAIL lines
  std::string format;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir,
                 "Directory for the Weyl-group closure cache (optional)");

  std::string expr, twists = "0..0", c1_expr, m_expr, n_expr, table = "families", check;
  long long c2 = 0;
  int t = 0;
  bool list = false, corrupt_gram = false;

  auto* info = app.add_subcommand("info", "Degree, square, genus, chi, positivity, family");
  info->add_option("expr", expr, "Divisor-class expression")->required();

  auto* coh = app.add_subcommand("cohomology", "(h0,h1,h2) across a twist range");
  coh->add_option("expr", expr)->required();
  coh->add_option("--twists", twists, "Range a..b (default 0..0)");

  auto* acm = app.add_subcommand("acm", "Vanishing of intermediate cohomology in all twists");
  acm->add_option("expr", expr)->required();

  auto* classify = app.add_subcommand("classify", "Resolution type of a rank-2 Chern pair");
  classify->add_option("--c1", c1_expr)->required();
  classify->add_option("--c2", c2)->required();

  auto* extension = app.add_subcommand("extension", "Profile of an extension of line bundles");
  extension->add_option("--m", m_expr)->required();
  extension->add_option("--n", n_expr)->required();
  extension->add_option("--t", t, "Twist applied to M (default 0)");

  auto* census = app.add_subcommand("census", "Dump the classification tables");
  census->add_option("--table", table)
      ->check(CLI::IsMember({"families", "extensions", "appendix", "maps"}));

  auto* orbit_cmd = app.add_subcommand("orbit", "Weyl-group orbit of a class");
  orbit_cmd->add_option("expr", expr)->required();
  orbit_cmd->add_flag("--list", list, "Print the orbit elements");

  auto* verify = app.add_subcommand("verify", "Run every registered table check");
  verify->add_option("--check", check, "Run a single check by id");
  verify->add_flag("--corrupt-gram", corrupt_gram,
                   "Negative control: run against a corrupted intersection form");

  std::vector<const char*> argv;
  argv.push_back("cubicsurf");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (!cache_dir.empty()) set_group_cache_dir(cache_dir);

  const std::string fmt = format.empty() ? "json" : format;
  try {
    if (*info) return cmd_info(expr, fmt, out);
    if (*coh) return cmd_cohomology(expr, twists, fmt, out);
    if (*acm) return cmd_acm(expr, out);
    if (*classify) return cmd_classify(c1_expr, c2, out);
    if (*extension) return cmd_extension(m_expr, n_expr, t, out, err);
    if (*census) return cmd_census(table, fmt, out);
    if (*orbit_cmd) return cmd_orbit(expr, list, out);
    if (*verify) return cmd_verify(check, corrupt_gram, format, out, err);
  } catch (const ParseError& e) {
    err << "class expression error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cubicsurf::cli
