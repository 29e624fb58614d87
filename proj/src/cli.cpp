#include "klc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "klc/cache.hpp"
#include "klc/double_parabolic.hpp"
#include "klc/ext_tables.hpp"
#include "klc/serialize.hpp"

namespace klc::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string type;
  std::string matrix_file;
  std::string I_labels, J_labels;
  std::string x_text;
  std::string flavor = "antispherical";
  std::string side = "right";
  std::string kase = "finite";
  std::string format = "text";
  std::string cache_path;
  int max_length = 12;
};

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json subset_json(const SubsetSpec& I) {
  json a = json::array();
  for (Gen s : I.gens()) a.push_back(I.system().label(s));
  return a;
}

// All elements the named finite system can reach; for affine systems the
// length ball of the configured bound.
int full_length(const CoxeterSystem& sys, int max_length) {
  if (!sys.finite()) return max_length;
  std::vector<Gen> all(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) all[i] = i;
  return longest_element(sys, SubsetSpec(sys, all)).length();
}

void emit_column(const Options& o, std::ostream& out,
                 const std::string& command, const Element& x,
                 const std::vector<std::pair<Element, Laurent>>& entries) {
  if (o.format == "json") {
    json body = json::object();
    for (const auto& [y, p] : entries) body[y.str()] = laurent_to_json(p);
    out << json{{"command", command}, {"x", x.str()}, {"entries", body}}.dump(2)
        << "\n";
  } else if (o.format == "csv") {
    out << "element,polynomial\n";
    for (const auto& [y, p] : entries) out << y.str() << "," << p.str() << "\n";
  } else {
    for (const auto& [y, p] : entries) out << y.str() << ": " << p.str() << "\n";
  }
}

int emit_check(const Options& o, std::ostream& out, const std::string& command,
               const CheckReport& report, const std::string& description) {
  if (o.format == "json") {
    out << json{{"command", command},
                {"pass", report.pass},
                {"detail", report.detail}}
               .dump(2)
        << "\n";
  } else if (report.pass) {
    out << "PASS: " << description << "\n";
  } else {
    out << "FAIL: " << report.detail << "\n";
  }
  return report.pass ? 0 : 2;
}

void emit_ext(const Options& o, std::ostream& out, const ExtTable& t) {
  if (o.format == "json") {
    json index = json::array();
    for (const auto& x : t.index) index.push_back(element_to_json(x));
    json entries = json::array();
    for (const auto& row : t.entries) {
      json r = json::array();
      for (const auto& p : row) r.push_back(laurent_to_json(p));
      entries.push_back(std::move(r));
    }
    out << json{{"command", "ext"},
                {"rows", "simple"},
                {"columns", "costandard"},
                {"case", block_case_name(t.spec.kase)},
                {"I", subset_json(t.spec.I)},
                {"J", subset_json(t.spec.J)},
                {"max_length", t.spec.max_length},
                {"index", index},
                {"entries", entries}}
               .dump(2)
        << "\n";
  } else if (o.format == "csv") {
    out << "simple\\costandard";
    for (const auto& z : t.index) out << "," << z.str();
    out << "\n";
    for (size_t i = 0; i < t.index.size(); ++i) {
      out << t.index[i].str();
      for (const auto& p : t.entries[i]) out << "," << p.str();
      out << "\n";
    }
  } else {
    out << "block: case=" << block_case_name(t.spec.kase)
        << " I=" << t.spec.I.str() << " J=" << t.spec.J.str();
    if (t.spec.kase != BlockCase::finite)
      out << " max-length=" << t.spec.max_length;
    out << "\n";
    out << "index:";
    for (const auto& x : t.index) out << " " << x.str();
    out << "\n";
    out << "entries are ext[simple, costandard]:\n";
    for (size_t i = 0; i < t.index.size(); ++i)
      for (size_t j = 0; j < t.index.size(); ++j)
        out << "ext[" << t.index[i].str() << ", " << t.index[j].str()
            << "] = " << t.entries[i][j].str() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact Kazhdan-Lusztig combinatorics for Coxeter systems"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_J) {
    auto* type = sub->add_option("--type", o.type,
                                 "named preset (A1..A4, B2, B3, C3, G2, "
                                 "A1~, A2~, C2~, G2~)");
    auto* matrix =
        sub->add_option("--matrix", o.matrix_file, "Coxeter matrix JSON file");
    type->excludes(matrix);
    sub->add_option("--I", o.I_labels, "subset I as comma-separated labels");
    if (with_J)
      sub->add_option("--J", o.J_labels, "subset J as comma-separated labels");
    sub->add_option("--max-length", o.max_length,
                    "length bound for infinite systems")
        ->capture_default_str();
    sub->add_option("--format", o.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--cache", o.cache_path, "polynomial cache file");
  };

  auto* kl = app.add_subcommand("kl", "KL polynomials h_{y,x} for y <= x");
  add_common(kl, false);
  kl->add_option("--x", o.x_text, "element word, e.g. s2,s1,s3,s2")
      ->required();

  auto* ikl = app.add_subcommand("ikl", "inverse KL polynomials h^{y,x}");
  add_common(ikl, false);
  ikl->add_option("--x", o.x_text, "element word")->required();

  auto* pkl =
      app.add_subcommand("pkl", "parabolic KL polynomials m_{y,x} / n_{y,x}");
  add_common(pkl, false);
  pkl->add_option("--x", o.x_text, "element word")->required();
  pkl->add_option("--flavor", o.flavor, "spherical or antispherical")
      ->check(CLI::IsMember({"spherical", "antispherical"}))
      ->capture_default_str();

  auto* pkl_inv = app.add_subcommand(
      "pkl-inv", "inverse parabolic KL polynomials m^{y,x} / n^{y,x}");
  add_common(pkl_inv, false);
  pkl_inv->add_option("--x", o.x_text, "element word")->required();
  pkl_inv->add_option("--flavor", o.flavor, "spherical or antispherical")
      ->check(CLI::IsMember({"spherical", "antispherical"}))
      ->capture_default_str();

  auto* inv_check = app.add_subcommand(
      "inv-check", "verify the parabolic inversion identities for I");
  add_common(inv_check, false);

  auto* double_check = app.add_subcommand(
      "double-check", "verify the double parabolic inversion identity");
  add_common(double_check, true);

  auto* ext = app.add_subcommand(
      "ext",
      "Ext dimension table for a block (rows: simple parameter, "
      "columns: costandard parameter)");
  add_common(ext, true);
  ext->add_option("--case", o.kase, "finite, affine-neg or affine-pos")
      ->check(CLI::IsMember({"finite", "affine-neg", "affine-pos"}))
      ->capture_default_str();

  auto* quot = app.add_subcommand("quotient", "minimal coset representatives");
  add_common(quot, false);
  quot->add_option("--side", o.side, "left (^I W) or right (W^I)")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();

  auto* cosets = app.add_subcommand(
      "double-cosets", "minimal double coset representatives and regularity");
  add_common(cosets, true);

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (o.type.empty() == o.matrix_file.empty())
      throw Error("exactly one of --type or --matrix is required");
    const CoxeterSystem sys = o.type.empty()
                                  ? system_from_file(o.matrix_file)
                                  : CoxeterSystem::preset(o.type);
    const SubsetSpec I = SubsetSpec::from_labels(sys, split_labels(o.I_labels));
    const SubsetSpec J = SubsetSpec::from_labels(sys, split_labels(o.J_labels));
    HeckeContext hecke(sys);
    if (!o.cache_path.empty()) cache_load(hecke, o.cache_path, err);

    int rc = 0;
    if (*kl) {
      const Element x = element_from_str(sys, o.x_text);
      std::vector<std::pair<Element, Laurent>> entries(
          hecke.kl_basis(x).terms().begin(), hecke.kl_basis(x).terms().end());
      emit_column(o, out, "kl", x, entries);
    } else if (*ikl) {
      const Element x = element_from_str(sys, o.x_text);
      const int bound = std::max(full_length(sys, o.max_length), x.length());
      InverseKLTable table(hecke, sys.elements_up_to_length(bound));
      std::vector<std::pair<Element, Laurent>> entries;
      for (const auto& y : table.ambient()) {
        const Laurent p = table.h_inverse(y, x);
        if (!p.is_zero()) entries.emplace_back(y, p);
      }
      emit_column(o, out, "ikl", x, entries);
    } else if (*pkl) {
      const Element x = element_from_str(sys, o.x_text);
      const Flavor f = o.flavor == "spherical" ? Flavor::spherical
                                               : Flavor::antispherical;
      ModuleContext ctx(hecke, f, I);
      std::vector<std::pair<Element, Laurent>> entries(
          ctx.kl_elt(x).terms().begin(), ctx.kl_elt(x).terms().end());
      emit_column(o, out, "pkl", x, entries);
    } else if (*pkl_inv) {
      const Element x = element_from_str(sys, o.x_text);
      const Flavor f = o.flavor == "spherical" ? Flavor::spherical
                                               : Flavor::antispherical;
      ModuleContext ctx(hecke, f, I);
      const int bound = std::max(full_length(sys, o.max_length), x.length());
      ModuleInverseTable table(ctx, quotient(sys, I, Side::left, bound));
      std::vector<std::pair<Element, Laurent>> entries;
      for (const auto& y : table.ambient()) {
        const Laurent p = table.inverse_poly(y, x);
        if (!p.is_zero()) entries.emplace_back(y, p);
      }
      emit_column(o, out, "pkl-inv", x, entries);
    } else if (*inv_check) {
      const int bound = full_length(sys, o.max_length);
      const auto ambient = quotient(sys, I, Side::left, bound);
      const CheckReport report = check_parabolic_inversion(hecke, I, ambient);
      rc = emit_check(o, out, "inv-check", report,
                      "parabolic inversion identities hold for I = " +
                          I.str() + " over " +
                          std::to_string(ambient.size()) + " elements");
    } else if (*double_check) {
      const int bound = full_length(sys, o.max_length);
      DoubleParabolic dp(hecke, J, I);
      const auto ambient = regular_double_reps(sys, J, I, bound);
      const CheckReport report = dp.check_inversion(ambient);
      rc = emit_check(o, out, "double-check", report,
                      "double parabolic inversion holds for J = " + J.str() +
                          ", I = " + I.str() + " over " +
                          std::to_string(ambient.size()) + " elements");
    } else if (*ext) {
      const BlockCase kase = o.kase == "finite" ? BlockCase::finite
                             : o.kase == "affine-neg"
                                 ? BlockCase::affine_negative
                                 : BlockCase::affine_positive;
      ExtEvaluator ev(hecke, {kase, I, J, o.max_length});
      emit_ext(o, out, ev.table());
    } else if (*quot) {
      const Side side = o.side == "left" ? Side::left : Side::right;
      const auto elements =
          quotient(sys, I, side, full_length(sys, o.max_length));
      if (o.format == "json") {
        json a = json::array();
        for (const auto& x : elements) a.push_back(element_to_json(x));
        out << json{{"command", "quotient"},
                    {"side", o.side},
                    {"I", subset_json(I)},
                    {"elements", a}}
                   .dump(2)
            << "\n";
      } else if (o.format == "csv") {
        out << "element,length\n";
        for (const auto& x : elements)
          out << x.str() << "," << x.length() << "\n";
      } else {
        for (const auto& x : elements) out << x.str() << "\n";
      }
    } else if (*cosets) {
      const auto reps =
          double_min_reps(sys, J, I, full_length(sys, o.max_length));
      if (o.format == "json") {
        json a = json::array();
        for (const auto& z : reps)
          a.push_back(json{{"rep", element_to_json(z)},
                           {"regular", is_regular(z, J, I)}});
        out << json{{"command", "double-cosets"},
                    {"I", subset_json(I)},
                    {"J", subset_json(J)},
                    {"cosets", a}}
                   .dump(2)
            << "\n";
      } else if (o.format == "csv") {
        out << "element,regular\n";
        for (const auto& z : reps)
          out << z.str() << "," << (is_regular(z, J, I) ? "yes" : "no") << "\n";
      } else {
        for (const auto& z : reps)
          out << z.str() << ": "
              << (is_regular(z, J, I) ? "regular" : "non-regular") << "\n";
      }
    }

    if (!o.cache_path.empty()) cache_store(hecke, o.cache_path, err);
    return rc;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace klc::cli
