#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ksphere/clifford.hpp"
#include "ksphere/config.hpp"
#include "ksphere/errors.hpp"
#include "ksphere/generators.hpp"
#include "ksphere/invariants.hpp"
#include "ksphere/json_io.hpp"
#include "ksphere/k_groups.hpp"
#include "ksphere/sphere_pencil.hpp"

using namespace ksphere;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(out_path, text.back() == '\n' ? text : text + "\n");
  }
}

std::string family_text(const CliffordFamily& f) {
  std::ostringstream os;
  os << "k = " << f.k << ", n = " << f.n << ", provenance " << to_string(f.provenance);
  if (f.phase) os << ", phase " << to_string(*f.phase);
  os << "\n";
  for (int i = 1; i <= f.k; ++i) os << "G_" << i << " =\n" << f.at(i) << "\n";
  return os.str();
}

std::string join_labels(const std::vector<RowLabel>& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : ", ") + to_string(l);
  return s;
}

std::vector<std::string> label_strings(const std::vector<RowLabel>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(to_string(l));
  return out;
}

std::pair<RowLabel, RowLabel> expected_rows(int k) {
  switch (((k % 8) + 8) % 8) {
    case 7: return {ko(0), ko(1)};
    case 1: return {ko(2), ko(3, RowVariant::Alt)};
    case 3: return {ko(4), ko(5)};
    default: return {ko(6), ko(-1, RowVariant::Alt)};
  }
}

struct VerifyRow {
  int k = 0;
  std::vector<std::pair<std::string, bool>> checks;
  std::string rows;
  std::string first_failure;
};

VerifyRow verify_k(int k, const Config& cfg) {
  VerifyRow row{k, {}, {}, {}};
  auto record = [&](const std::string& name, bool ok, const std::string& why) {
    row.checks.emplace_back(name, ok);
    if (!ok && row.first_failure.empty()) row.first_failure = "k=" + std::to_string(k) + ", " + name + ": " + why;
  };

  const CliffordFamily g = standard_gamma(k, cfg.k_cap);
  const VerificationReport gr = verify_clifford(g);
  record("standard family is Clifford", gr.all_pass(), gr.first_failure().value_or(""));
  bool signs = true;
  std::string why;
  for (int i = 1; i <= k && signs; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    if (gr.audit.tr[idx] != standard_tr_sign(i) || (g.n % 2 == 0 && gr.audit.sharp_tr[idx] != standard_sharp_tr_sign(i))) {
      signs = false;
      why = "generator " + std::to_string(i) + " has transpose sign " + to_string(gr.audit.tr[idx]) +
            " and quaternionic sign " + to_string(gr.audit.sharp_tr[idx]);
    }
  }
  record("standard transpose/quaternionic signs", signs, why);

  const CliffordFamily u1 = upsilon(k, PhaseConvention::PerFactorI, cfg.k_cap);
  const CliffordFamily u2 = upsilon(k, PhaseConvention::SingleI, cfg.k_cap);
  const VerificationReport r1 = verify_clifford(u1);
  const VerificationReport r2 = verify_clifford(u2);
  record("adapted family is Clifford", r1.all_pass() && r2.all_pass(),
         r1.first_failure().value_or(r2.first_failure().value_or("")));
  const ResidueSymmetry want = upsilon_symmetry(k);
  const auto& signs_of = want.involution == Involution::Tr ? r1.audit.tr : r1.audit.sharp_tr;
  const bool uniform = std::all_of(signs_of.begin(), signs_of.end(), [&](Sign s) { return s == want.sign; });
  record("adapted family has the uniform residue sign", uniform,
         "expected every generator to have sign " + to_string(want.sign) + " under " + std::string(to_string(want.involution)));
  record("phase conventions give equal audits", r1.audit == r2.audit, "audits differ");

  const ClassifyResult q = classify(build_Q(k, true, cfg.phase, cfg.k_cap));
  const ClassifyResult u = classify(build_U(k, true, cfg.phase, cfg.k_cap));
  const auto [eq, eu] = expected_rows(k);
  const bool rows_ok = q.most_specific == std::vector<RowLabel>{eq} && u.most_specific == std::vector<RowLabel>{eu};
  row.rows = "Q∈" + join_labels(q.most_specific) + ", U∈" + join_labels(u.most_specific);
  record("real Q/U symmetry rows", rows_ok, "got " + row.rows + ", expected Q in " + to_string(eq) + ", U in " + to_string(eu));
  return row;
}

int cmd_verify_family(const std::string& path, bool json) {
  const CliffordFamily f = family_from_json(parse_json_text(read_text_file(path), path));
  const VerificationReport r = verify_clifford(f);
  if (json) {
    Json out = Json::object();
    out["k"] = f.k;
    out["pass"] = r.all_pass();
    out["first_failure"] = r.first_failure() ? Json(*r.first_failure()) : Json(nullptr);
    Json tr = Json::array(), sh = Json::array();
    for (Sign s : r.audit.tr) tr.push_back(to_string(s));
    for (Sign s : r.audit.sharp_tr) sh.push_back(to_string(s));
    out["transpose_signs"] = tr;
    out["quaternionic_signs"] = sh;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "k=" << f.k << "  clifford relations " << (r.all_pass() ? "ok" : "FAIL") << "\n";
    std::cout << "transpose signs:";
    for (Sign s : r.audit.tr) std::cout << " " << to_string(s);
    std::cout << "\nquaternionic signs:";
    for (Sign s : r.audit.sharp_tr) std::cout << " " << to_string(s);
    std::cout << "\n";
    if (!r.all_pass()) std::cout << "first failure: " << *r.first_failure() << "\n";
  }
  return r.all_pass() ? kExitOk : kExitVerification;
}

int cmd_verify(int k_max, const Config& cfg, bool json) {
  if (k_max < 1) throw DomainError("--k-max must be at least 1");
  if (k_max > cfg.k_cap)
    throw ResourceError("--k-max " + std::to_string(k_max) + " exceeds the configured cap " + std::to_string(cfg.k_cap));
  std::vector<VerifyRow> rows;
  for (int k = 1; k <= k_max; k += 2) rows.push_back(verify_k(k, cfg));
  bool all = true;
  std::string first;
  for (const auto& r : rows)
    for (const auto& c : r.checks)
      if (!c.second) {
        all = false;
        if (first.empty()) first = r.first_failure;
      }
  if (json) {
    Json out = Json::object();
    out["pass"] = all;
    out["first_failure"] = first.empty() ? Json(nullptr) : Json(first);
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j = Json::object();
      j["k"] = r.k;
      for (const auto& c : r.checks) j[c.first] = c.second;
      j["rows"] = r.rows;
      arr.push_back(j);
    }
    out["results"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << "k=" << r.k << ": " << r.rows << "\n";
      for (const auto& c : r.checks) std::cout << "    [" << (c.second ? "ok" : "FAIL") << "] " << c.first << "\n";
    }
    std::cout << (all ? "all checks passed" : "FAILED: " + first) << "\n";
  }
  return all ? kExitOk : kExitVerification;
}

SpherePencil load_pencil(const std::string& path) {
  return pencil_from_json(parse_json_text(read_text_file(path), path));
}

int cmd_classify(const std::string& path, bool all, bool json) {
  const SpherePencil p = load_pencil(path);
  ClassifyResult r;
  try {
    r = classify(p);
  } catch (const ContractError& e) {
    std::cerr << "not unitary: " << e.what() << "\n";
    return kExitVerification;
  }
  if (json) {
    Json out = Json::object();
    out["most_specific"] = label_strings(r.most_specific);
    Json sat = Json::array();
    for (std::size_t i = 0; i < r.satisfied.size(); ++i)
      sat.push_back({{"row", to_string(r.satisfied[i])}, {"size_divisible", bool(r.size_divisible[i])}});
    out["satisfied"] = sat;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (all) {
    for (std::size_t i = 0; i < r.satisfied.size(); ++i) {
      std::cout << to_string(r.satisfied[i]);
      if (!r.size_divisible[i])
        std::cout << "  (size " << p.n << " is not a multiple of " << symmetry_row(r.satisfied[i]).block_quantum << ")";
      std::cout << "\n";
    }
  } else {
    for (const auto& l : r.most_specific) std::cout << to_string(l) << "\n";
  }
  return kExitOk;
}

int cmd_invariant(const std::string& path, const std::string& type, int grid, bool json, const Config& cfg) {
  const InvariantKind kind = invariant_kind_from_string(type);
  if (grid <= 0) {
    switch (kind) {
      case InvariantKind::Winding1: grid = cfg.winding1_points; break;
      case InvariantKind::Chern2: grid = cfg.chern2_theta; break;
      case InvariantKind::Winding3: grid = cfg.winding3_points; break;
    }
  }
  const InvariantValue v = compute_invariant(SampledUnitary::from_pencil(load_pencil(path)), kind, grid);
  if (json) {
    Json out = Json::object();
    out["type"] = to_string(kind);
    out["grid"] = grid;
    out["value"] = v.value;
    out["nearest"] = v.nearest;
    out["residual"] = v.residual;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << std::fixed << std::setprecision(9) << to_string(kind) << " = " << v.value << "  nearest " << v.nearest
              << "  residual " << std::scientific << std::setprecision(3) << v.residual << "\n";
  }
  return kExitOk;
}

int cmd_groups(int d, std::optional<int> n, bool json) {
  std::vector<int> degrees;
  if (n) degrees.push_back(*n);
  else
    for (int i = 0; i < 8; ++i) degrees.push_back(i);
  if (json) {
    Json arr = Json::array();
    for (int i : degrees) {
      const AbelianGroup o = ko_group(d, i), u = ku_group(d, i);
      arr.push_back({{"d", d},
                     {"n", i},
                     {"KO", {{"free_rank", o.free_rank}, {"z2", o.torsion2}, {"text", o.to_ascii()}}},
                     {"KU", {{"free_rank", u.free_rank}, {"z2", u.torsion2}, {"text", u.to_ascii()}}}});
    }
    std::cout << arr.dump(2) << "\n";
    return kExitOk;
  }
  for (int i : degrees) std::cout << "KO_" << i << "(S^" << d << ") = " << ko_group(d, i).to_string() << "\n";
  for (int i : degrees) std::cout << "KU_" << i << "(S^" << d << ") = " << ku_group(d, i).to_string() << "\n";
  return kExitOk;
}

int cmd_tables(int d, bool json) {
  const auto checks = table_checks(d);
  bool all = true;
  for (const auto& c : checks) all &= c.pass;
  if (json) {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cout << Json{{"d", d}, {"pass", all}, {"checks", arr}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
  }
  return all ? kExitOk : kExitVerification;
}

int cmd_convert(const std::string& path, const std::string& to, const std::string& out) {
  PictureDirection dir;
  if (to == "sharp") dir = PictureDirection::ToSharpPicture;
  else if (to == "tr") dir = PictureDirection::ToTrPicture;
  else throw DomainError("--to must be sharp or tr");
  const Json in = parse_json_text(read_text_file(path), path);
  if (in.is_object() && in.contains("coefficients")) {
    Json meta = in.contains("meta") ? in["meta"] : Json::object();
    meta["picture"] = to;
    emit(pencil_to_json(picture_convert(pencil_from_json(in), dir), meta).dump(2), out);
  } else {
    emit(matrix_to_json(picture_convert(matrix_from_json(in), dir)).dump(2), out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford generators, symmetry classes and invariants for real K-theory of spheres"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Config cfg;
  int result = kExitOk;
  std::string phase_name = "per-factor-i";
  std::string format = "json";
  std::string out_path;
  std::string input;
  bool json = false;
  int k = 0;

  auto add_phase = [&](CLI::App* c) {
    c->add_option("--phase", phase_name, "per-factor-i (default) or single-i")
        ->check(CLI::IsMember({"per-factor-i", "single-i"}));
  };

  auto* gamma = app.add_subcommand("gamma", "standard Clifford generators for odd k");
  gamma->add_option("--k", k, "number of generators (odd)")->required();
  gamma->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  gamma->add_option("--out", out_path, "write to file instead of stdout");

  auto* ups = app.add_subcommand("upsilon", "symmetry-adapted Clifford generators for odd k");
  ups->add_option("--k", k, "number of generators (odd)")->required();
  ups->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  ups->add_option("--out", out_path, "write to file instead of stdout");
  add_phase(ups);

  int k_max = 0;
  auto* verify = app.add_subcommand("verify", "check Clifford relations, signs and symmetry rows for all odd k <= k-max");
  verify->add_option("--k-max", k_max, "largest k to check");
  verify->add_option("--input", input, "verify a family from a JSON file instead");
  verify->add_flag("--json", json, "machine-readable output");

  std::string which = "Q";
  bool real = false, complex_flag = false;
  auto* build = app.add_subcommand("build-generator", "write the Q or U pencil for k as JSON");
  build->add_option("--k", k, "odd k")->required();
  build->add_option("--which", which, "Q or U")->check(CLI::IsMember({"Q", "U"}));
  auto* real_flag = build->add_flag("--real", real, "use the symmetry-adapted generators");
  build->add_flag("--complex", complex_flag, "use the standard generators")->excludes(real_flag);
  build->add_option("--out", out_path, "write to file instead of stdout");
  add_phase(build);

  bool all_rows = false;
  auto* cls = app.add_subcommand("classify", "list the symmetry rows a unitary pencil satisfies");
  cls->add_option("--input", input, "pencil JSON")->required();
  cls->add_flag("--all", all_rows, "print every satisfied row, not only the most specific");
  cls->add_flag("--json", json, "machine-readable output");

  std::string row_name;
  auto* stab = app.add_subcommand("stabilize", "append the neutral element of a row");
  stab->add_option("--input", input, "pencil JSON")->required();
  stab->add_option("--row", row_name, "row label such as KO_4 or \"KO_-1 (alt)\"")->required();
  stab->add_option("--out", out_path, "write to file instead of stdout");

  std::string type;
  int grid = 0;
  auto* inv = app.add_subcommand("invariant", "numeric winding or Chern number of a pencil");
  inv->add_option("--input", input, "pencil JSON")->required();
  inv->add_option("--type", type, "winding1, chern2 or winding3")->required();
  inv->add_option("--grid", grid, "points (winding1), theta cells (chern2) or nodes per angle (winding3)");
  inv->add_flag("--json", json, "machine-readable output");

  int d = 0;
  std::optional<int> n;
  auto* groups = app.add_subcommand("groups", "KO and KU groups of the sphere algebra");
  groups->add_option("--d", d, "sphere dimension")->required();
  groups->add_option("--n", n, "single degree");
  groups->add_flag("--json", json, "machine-readable output");

  auto* tables = app.add_subcommand("tables", "check every listed low-dimensional generator on S^d");
  tables->add_option("--d", d, "1..4")->required();
  tables->add_flag("--json", json, "machine-readable output");

  std::string to;
  auto* conv = app.add_subcommand("convert-picture", "switch between the transpose and quaternionic pictures");
  conv->add_option("--input", input, "matrix or pencil JSON")->required();
  conv->add_option("--to", to, "sharp or tr")->required();
  conv->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg = Config::from_env();
    cfg.phase = phase_from_string(phase_name);
    if (*gamma || *ups) {
      const CliffordFamily f = *gamma ? standard_gamma(k, cfg.k_cap) : upsilon(k, cfg.phase, cfg.k_cap);
      emit(format == "text" ? family_text(f) : family_to_json(f).dump(2), out_path);
    } else if (*verify) {
      if (!input.empty()) result = cmd_verify_family(input, json);
      else result = cmd_verify(k_max > 0 ? k_max : cfg.k_cap, cfg, json);
    } else if (*build) {
      if (!real && !complex_flag) throw DomainError("build-generator needs --real or --complex");
      const bool use_real = real;
      const SpherePencil p = which == "Q" ? build_Q(k, use_real, cfg.phase, cfg.k_cap) : build_U(k, use_real, cfg.phase, cfg.k_cap);
      Json meta = Json::object();
      meta["which"] = which;
      meta["k"] = k;
      meta["real"] = use_real;
      if (use_real) meta["phase_convention"] = to_string(cfg.phase);
      emit(pencil_to_json(p, meta).dump(2), out_path);
    } else if (*cls) {
      result = cmd_classify(input, all_rows, json);
    } else if (*stab) {
      const SpherePencil p = load_pencil(input);
      const RowLabel label = row_label_from_string(row_name);
      emit(pencil_to_json(stabilize(p, symmetry_row(label)), Json{{"stabilized_in", to_string(label)}}).dump(2), out_path);
    } else if (*inv) {
      result = cmd_invariant(input, type, grid, json, cfg);
    } else if (*groups) {
      result = cmd_groups(d, n, json);
    } else if (*tables) {
      result = cmd_tables(d, json);
    } else if (*conv) {
      result = cmd_convert(input, to, out_path);
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return result;
}
