#include "ksphere/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "ksphere/errors.hpp"

namespace ksphere {
namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::int64_t as_int64(const Json& v, const char* what) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw ParseError(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(u);
  }
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::size_t as_size(const Json& v, const char* what) {
  const std::int64_t x = as_int64(v, what);
  if (x < 0) throw ParseError(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(x);
}

}  // namespace

Json matrix_to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      const DyadicGaussian& z = m(i, j);
      Json e = Json::array({z.re_num(), z.im_num()});
      if (z.shift() != 0) e.push_back(z.shift());
      row.push_back(std::move(e));
    }
    rows.push_back(std::move(row));
  }
  Json out = Json::object();
  out["n"] = m.size();
  out["rows"] = std::move(rows);
  return out;
}

ExactMatrix matrix_from_json(const Json& j) {
  const std::size_t n = as_size(field(j, "n", "matrix"), "matrix n");
  if (n == 0) throw ParseError("matrix n must be positive");
  const Json& rows = field(j, "rows", "matrix");
  if (!rows.is_array() || rows.size() != n) throw ParseError("matrix rows must be an array of n rows");
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("matrix row " + std::to_string(i) + " must have n entries");
    for (std::size_t k = 0; k < n; ++k) {
      const Json& e = rows[i][k];
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw ParseError("matrix entry must be [re, im] or [re, im, shift]");
      const std::int64_t re = as_int64(e[0], "entry re");
      const std::int64_t im = as_int64(e[1], "entry im");
      const std::int64_t shift = e.size() == 3 ? as_int64(e[2], "entry shift") : 0;
      if (shift < 0 || shift > DyadicGaussian::kMaxShift)
        throw ParseError("entry shift must lie in 0.." + std::to_string(DyadicGaussian::kMaxShift));
      m(i, k) = canonical(re, im, static_cast<int>(shift));
    }
  }
  return m;
}

Json family_to_json(const CliffordFamily& f) {
  Json meta = Json::object();
  meta["k"] = f.k;
  meta["n"] = f.n;
  meta["provenance"] = to_string(f.provenance);
  meta["phase_convention"] = f.phase ? Json(to_string(*f.phase)) : Json(nullptr);
  if (f.provenance == Provenance::Upsilon) {
    meta["note"] = f.k == 1 ? "k = 1 selects no generators; the standard family is returned unchanged"
                            : "per-factor-i puts one factor i on every selected generator; single-i uses one "
                              "leading i. The two differ by per-generator signs and give the same symmetry audit";
  }
  Json gens = Json::array();
  for (const auto& g : f.generators) gens.push_back(matrix_to_json(g));
  Json out = Json::object();
  out["meta"] = std::move(meta);
  out["generators"] = std::move(gens);
  return out;
}

CliffordFamily family_from_json(const Json& j) {
  const Json& gens = field(j, "generators", "family");
  if (!gens.is_array() || gens.empty()) throw ParseError("family generators must be a non-empty array");
  std::vector<ExactMatrix> mats;
  for (const auto& g : gens) mats.push_back(matrix_from_json(g));
  Provenance prov = Provenance::Custom;
  std::optional<PhaseConvention> phase;
  if (j.contains("meta")) {
    const Json& meta = j["meta"];
    if (!meta.is_object()) throw ParseError("family meta must be an object");
    if (meta.contains("k") && as_size(meta["k"], "meta k") != mats.size())
      throw ParseError("family meta k does not match the number of generators");
    if (meta.contains("provenance")) {
      if (!meta["provenance"].is_string()) throw ParseError("meta provenance must be a string");
      prov = provenance_from_string(meta["provenance"].get<std::string>());
    }
    if (meta.contains("phase_convention") && meta["phase_convention"].is_string())
      phase = phase_from_string(meta["phase_convention"].get<std::string>());
  }
  return CliffordFamily::make(std::move(mats), prov, phase);
}

Json pencil_to_json(const SpherePencil& p, const Json& meta) {
  Json out = Json::object();
  out["d"] = p.d;
  out["n"] = p.n;
  Json coeffs = Json::array();
  for (const auto& m : p.coefficients) coeffs.push_back(matrix_to_json(m));
  out["coefficients"] = std::move(coeffs);
  out["constant"] = p.constant ? matrix_to_json(*p.constant) : Json(nullptr);
  out["meta"] = meta;
  return out;
}

SpherePencil pencil_from_json(const Json& j) {
  const std::int64_t d = as_int64(field(j, "d", "pencil"), "pencil d");
  if (d < 0 || d > 1024) throw ParseError("pencil d out of range");
  const Json& coeffs = field(j, "coefficients", "pencil");
  if (!coeffs.is_array()) throw ParseError("pencil coefficients must be an array");
  std::vector<ExactMatrix> mats;
  for (const auto& c : coeffs) mats.push_back(matrix_from_json(c));
  std::optional<ExactMatrix> constant;
  if (j.contains("constant") && !j["constant"].is_null()) constant = matrix_from_json(j["constant"]);
  if (mats.size() != static_cast<std::size_t>(d) + 1)
    throw ParseError("pencil on S^" + std::to_string(d) + " needs " + std::to_string(d + 1) + " coefficients");
  SpherePencil p = SpherePencil::make(static_cast<int>(d), std::move(mats), std::move(constant));
  if (j.contains("n") && as_size(j["n"], "pencil n") != p.n) throw ParseError("pencil n does not match its matrices");
  return p;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << column << ": malformed JSON";
    throw ParseError(os.str());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
  if (!out) throw DomainError("failed writing " + path);
}

}  // namespace ksphere
