#include "liealg/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/enumerate.hpp"
#include "liealg/invariants.hpp"
#include "liealg/io.hpp"
#include "liealg/verify.hpp"

namespace liealg::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Source {
  std::string key;
  std::string file;
  std::string field;
  std::vector<std::string> params;
  bool json = false;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("key", src.key, "catalog key, e.g. L5_7, H2, A3, F4");
  cmd->add_option("--file", src.file, "JSON algebra document");
  cmd->add_option("--field", src.field, "q or gf:P (keys only; default q, gf:2 for L2_6_*)");
  cmd->add_option("--param", src.params, "epsilon or eta for parameterized keys");
  cmd->add_flag("--json", src.json, "machine-readable output");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class S>
LieAlgebra<S> from_key(const Source& src, const FieldSpec& field) {
  std::vector<S> params;
  for (const auto& text : src.params) params.push_back(parse_scalar<S>(text, field));
  return get<S>(src.key, field, params);
}

AnyAlgebra load(const Source& src) {
  if (src.key.empty() == src.file.empty()) throw UsageError("give exactly one of <key> or --file");
  if (!src.file.empty()) {
    if (!src.field.empty() || !src.params.empty()) {
      throw UsageError("--field and --param apply to catalog keys only");
    }
    try {
      return parse_document(read_file(src.file));
    } catch (const ParseError& e) {
      throw ParseError(src.file + ": " + e.what());
    }
  }
  FieldSpec field = FieldSpec::rationals();
  if (!src.field.empty()) {
    field = FieldSpec::parse(src.field);
  } else if (src.key.rfind("L2_", 0) == 0) {
    field = FieldSpec::prime(2);
  }
  if (field.is_rational()) return from_key<Rational>(src, field);
  return from_key<Zp>(src, field);
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

ordered_json optional_json(const std::optional<int>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json report_json(const InvariantReport& r) {
  ordered_json j;
  j["dim"] = r.dim;
  j["dim_derived"] = r.dim_derived;
  j["dim_center"] = r.dim_center;
  j["dim_second_center"] = r.dim_second_center;
  j["dim_central_quotient"] = r.quotient_dim();
  j["d_central_quotient"] = optional_json(r.d_central_quotient);
  j["t"] = optional_json(r.t);
  j["nilpotency_class"] = optional_json(r.nilpotency_class);
  j["lcs_dims"] = r.lcs_dims;
  j["ucs_dims"] = r.ucs_dims;
  j["dim_centralizer_derived"] = r.dim_centralizer_derived;
  return j;
}

void print_report(std::ostream& out, const std::string& name, const FieldSpec& field,
                  const InvariantReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  const std::vector<std::pair<std::string, std::string>> lines{
      {"name", name.empty() ? "-" : name},
      {"field", field.to_string()},
      {"dim", std::to_string(r.dim)},
      {"dim L^2", std::to_string(r.dim_derived)},
      {"dim Z", std::to_string(r.dim_center)},
      {"dim Z_2", std::to_string(r.dim_second_center)},
      {"dim L/Z", std::to_string(r.quotient_dim())},
      {"d(L/Z)", opt(r.d_central_quotient)},
      {"t", opt(r.t)},
      {"class", opt(r.nilpotency_class)},
      {"lcs dims", join(r.lcs_dims)},
      {"ucs dims", join(r.ucs_dims)},
      {"dim C(L^2)", std::to_string(r.dim_centralizer_derived)},
  };
  for (const auto& [k, v] : lines) out << std::left << std::setw(12) << k << v << "\n";
}

int cmd_catalog(const std::string& field_text, bool json, std::ostream& out) {
  const FieldSpec field = field_text.empty() ? FieldSpec::rationals() : FieldSpec::parse(field_text);
  ordered_json list = ordered_json::array();
  for (const auto& entry : list_all(field)) {
    const int dim = field.is_rational() ? build<Rational>(entry, field).dim()
                                        : build<Zp>(entry, field).dim();
    const char* constraint = entry.constraint == FieldConstraint::Any        ? "any"
                             : entry.constraint == FieldConstraint::CharNot2 ? "char!=2"
                                                                             : "char=2";
    if (json) {
      ordered_json j;
      j["label"] = entry.label();
      j["key"] = entry.key;
      j["param"] = entry.param ? ordered_json(*entry.param) : ordered_json(nullptr);
      j["dim"] = dim;
      j["constraint"] = constraint;
      j["row"] = {entry.expected_row.quotient_dim, entry.expected_row.d,
                  entry.expected_row.derived_dim};
      list.push_back(j);
    } else {
      out << std::left << std::setw(12) << entry.label() << std::setw(4) << dim << std::setw(9)
          << constraint << entry.expected_row.to_string() << "\n";
    }
  }
  if (json) out << list.dump(2) << "\n";
  return 0;
}

int cmd_invariants(const Source& src, std::ostream& out) {
  const AnyAlgebra lie = load(src);
  std::visit(
      [&](const auto& a) {
        const InvariantReport r = report(a);
        if (src.json) {
          ordered_json j;
          if (!a.name().empty()) j["name"] = a.name();
          j["field"] = a.field().descriptor();
          j.update(report_json(r));
          out << j.dump(2) << "\n";
        } else {
          print_report(out, a.name(), a.field(), r);
        }
      },
      lie);
  return 0;
}

int cmd_t(const Source& src, std::ostream& out) {
  const AnyAlgebra lie = load(src);
  const int t = std::visit([](const auto& a) { return t_invariant(a); }, lie);
  if (src.json) {
    out << ordered_json{{"t", t}}.dump() << "\n";
  } else {
    out << t << "\n";
  }
  return 0;
}

int cmd_classify(const Source& src, std::ostream& out) {
  const AnyAlgebra lie = load(src);
  return std::visit(
      [&](const auto& a) {
        const auto result = classify_t012(a);
        const bool bad = result.verdict.kind == Verdict::Kind::Counterexample;
        if (src.json) {
          ordered_json j;
          j["verdict"] = result.verdict.to_string();
          j["t"] = result.t;
          if (bad) j["reason"] = result.reason;
          j["report"] = report_json(result.report);
          out << j.dump(2) << "\n";
        } else {
          out << result.verdict.to_string() << "\n";
          if (bad) out << "reason: " << result.reason << "\n";
        }
        return bad ? 1 : 0;
      },
      lie);
}

int cmd_verify(const std::string& what, bool json, std::ostream& out) {
  const auto checks = what == "table1" ? table1_checks() : theorem_checks();
  int failed = 0;
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    if (!c.ok) ++failed;
    if (json) {
      list.push_back({{"check", c.label}, {"ok", c.ok}, {"detail", c.detail}});
    } else if (!c.ok) {
      out << "FAIL " << c.label << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    } else {
      out << "PASS " << c.label << "\n";
    }
  }
  if (json) {
    out << ordered_json{{"checks", list}, {"failed", failed}}.dump(2) << "\n";
  } else {
    out << checks.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

struct EnumerateArgs {
  int dim = 0;
  std::string field;
  bool verify = false;
  std::string out_path;
  int jobs = 1;
  bool force = false;
  bool json = false;
};

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out) {
  const FieldSpec field = FieldSpec::parse(args.field);
  if (field.is_rational()) throw UsageError("enumerate needs a prime field gf:P");
  if (args.jobs < 1) throw UsageError("--jobs must be at least 1");
  CensusOptions options;
  options.jobs = args.jobs;
  options.force = args.force;
  const CensusSummary census = enumerate_algebras(args.dim, field, options);
  if (!args.out_path.empty()) {
    std::ofstream csv(args.out_path, std::ios::binary);
    if (!csv) throw UsageError("cannot write " + args.out_path);
    census.write_csv(csv);
  }
  BoundsVerdict verdict;
  if (args.verify) verdict = verify_bounds(census);
  if (args.json) {
    ordered_json j;
    j["field"] = field.descriptor();
    j["dim"] = census.n;
    j["candidates"] = census.candidates;
    j["lie_algebras"] = census.lie_algebras;
    j["nilpotent"] = census.nilpotent;
    ordered_json tally = ordered_json::object();
    for (const auto& [t, count] : census.t_tally) tally[std::to_string(t)] = count;
    j["t_tally"] = tally;
    if (args.verify) {
      j["verify"] = {{"passed", verdict.passed}, {"failures", verdict.failures}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << census.summary_text();
    if (args.verify) {
      for (const auto& f : verdict.failures) out << "FAIL " << f << "\n";
      out << "verify " << (verdict.passed ? "PASS" : "FAIL") << "\n";
    }
  }
  return verdict.passed ? 0 : 1;
}

int cmd_filiform(int t, const std::string& field_text, bool emit, bool json, std::ostream& out) {
  const FieldSpec field = field_text.empty() ? FieldSpec::rationals() : FieldSpec::parse(field_text);
  auto emit_or_report = [&](const auto& lie) {
    if (emit) {
      out << render_document(lie);
      return;
    }
    const InvariantReport r = report(lie);
    if (json) {
      ordered_json j;
      j["name"] = lie.name();
      j["field"] = field.descriptor();
      j.update(report_json(r));
      out << j.dump(2) << "\n";
    } else {
      print_report(out, lie.name(), field, r);
    }
  };
  if (field.is_rational()) {
    emit_or_report(filiform<Rational>(t, field));
  } else {
    emit_or_report(filiform<Zp>(t, field));
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent Lie algebras: invariants, the defect t, and low-defect classification"};
  app.name("liealg");
  app.require_subcommand(1);

  std::string catalog_field;
  bool catalog_json = false;
  auto* catalog = app.add_subcommand("catalog", "list the named algebras with tabulated rows");
  catalog->add_option("--field", catalog_field, "q or gf:P (default q)");
  catalog->add_flag("--json", catalog_json, "machine-readable output");

  Source inv_src, t_src, cls_src;
  auto* invariants = app.add_subcommand("invariants", "invariant report of an algebra");
  add_source(invariants, inv_src);
  auto* t_cmd = app.add_subcommand("t", "the defect t(L)");
  add_source(t_cmd, t_src);
  auto* classify = app.add_subcommand("classify", "classification for t(L) <= 2");
  add_source(classify, cls_src);

  std::string verify_what;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "reproduce the tabulated rows or check the theorems");
  verify->add_option("what", verify_what, "table1 or theorems")
      ->required()
      ->check(CLI::IsMember({"table1", "theorems"}));
  verify->add_flag("--json", verify_json, "machine-readable output");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive census over a prime field");
  enumerate->add_option("--dim", en.dim, "dimension")->required();
  enumerate->add_option("--field", en.field, "gf:P")->required();
  enumerate->add_flag("--verify", en.verify, "check the bounds on every nilpotent row");
  enumerate->add_option("--out", en.out_path, "write the CSV census here");
  enumerate->add_option("--jobs", en.jobs, "worker threads");
  enumerate->add_flag("--force", en.force, "allow runs beyond the candidate budget");
  enumerate->add_flag("--json", en.json, "machine-readable output");

  int fil_t = 0;
  bool fil_emit = false;
  bool fil_json = false;
  std::string fil_field;
  auto* fil = app.add_subcommand("filiform", "the algebra F(t) with defect t");
  fil->add_option("T", fil_t, "defect t >= 1")->required();
  fil->add_flag("--emit", fil_emit, "print the JSON algebra document");
  fil->add_option("--field", fil_field, "q or gf:P (default q)");
  fil->add_flag("--json", fil_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*catalog) return cmd_catalog(catalog_field, catalog_json, out);
    if (*invariants) return cmd_invariants(inv_src, out);
    if (*t_cmd) return cmd_t(t_src, out);
    if (*classify) return cmd_classify(cls_src, out);
    if (*verify) return cmd_verify(verify_what, verify_json, out);
    if (*enumerate) return cmd_enumerate(en, out);
    if (*fil) return cmd_filiform(fil_t, fil_field, fil_emit, fil_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace liealg::cli
