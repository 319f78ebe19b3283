#pragma once

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hgpf/gpf.hpp"

namespace hgpf {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

struct Catalog {
  std::string schema_version = kSchemaVersion;
  json params = json::object();
  std::vector<GpfSolution> solutions;
  std::string sha256;  // of the serialized solutions array
  bool checksum_ok = true;
};

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

namespace detail {

inline json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

inline Int json_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error(ErrorCode::Parse, "expected an integer in minpoly");
}

inline const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::string need_str(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string()) throw Error(ErrorCode::Parse, std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

inline json algreal_to_json(const AlgReal& x) {
  json mp = json::array();
  for (const Int& c : x.poly().coeffs()) mp.push_back(detail::int_json(c));
  return json{{"minpoly", mp}, {"lo", to_nd(x.lo())}, {"hi", to_nd(x.hi())}, {"approx", x.decimal(30)}};
}

inline AlgReal algreal_from_json(const json& j) {
  std::vector<Int> c;
  for (const auto& e : detail::need(j, "minpoly")) c.push_back(detail::json_int(e));
  IntPoly f(c);
  Rat lo = parse_rat(detail::need_str(j, "lo")), hi = parse_rat(detail::need_str(j, "hi"));
  AlgReal x(f, lo, hi, true);
  if (x.degree() > 1) {
    // recover the irreducibility flag from the factorization
    auto fac = factor_squarefree(f);
    x = AlgReal(f, lo, hi, fac.complete && fac.factors.size() == 1);
  }
  return x;
}

inline json radexpr_to_json(const RadExpr& d, const AlgReal& x) {
  json s = json::array();
  for (const auto& [b, e] : d.radicand) s.push_back(json{{"base", b.to_text()}, {"exp", e}});
  json out{{"rat", to_nd(d.factor)}, {"sqrt", s}};
  if (d.root != 2) out["root"] = d.root;
  mpfr_prec_t prec = bits_for_digits(40);
  out["approx"] = radexpr_value(d, to_bigf(x, prec)).to_decimal(30);
  return out;
}

inline RadExpr radexpr_from_json(const json& j) {
  RadExpr d;
  d.factor = parse_rat(detail::need_str(j, "rat"));
  for (const auto& e : detail::need(j, "sqrt"))
    d.radicand.push_back({parse_radbase(detail::need_str(e, "base")), detail::need(e, "exp").get<long>()});
  d.root = j.contains("root") ? j.at("root").get<long>() : 2;
  return d;
}

inline json solution_to_json(const GpfSolution& s) {
  const Lambda& l = s.lambda;
  json v = json::array();
  for (const Rat& x : s.v) v.push_back(to_nd(x));
  return json{{"p", to_nd(l.p)},
              {"q", to_nd(l.q)},
              {"r", to_nd(l.r)},
              {"a", to_nd(l.a)},
              {"b", to_nd(l.b)},
              {"x", algreal_to_json(l.xv())},
              {"kind", kind_name(s.kind)},
              {"d", radexpr_to_json(s.d, l.xv())},
              {"v", v},
              {"C", json{{"approx", s.C_approx}, {"digits", s.C_digits}}},
              {"provenance", s.provenance}};
}

// Structural parse only; invariants are left to check_solution so verify can report per entry.
inline GpfSolution solution_from_json(const json& j) {
  using detail::need;
  using detail::need_str;
  GpfSolution s;
  s.lambda = make_lambda(parse_rat(need_str(j, "p")), parse_rat(need_str(j, "q")), parse_rat(need_str(j, "r")),
                         parse_rat(need_str(j, "a")), parse_rat(need_str(j, "b")), algreal_from_json(need(j, "x")));
  s.kind = parse_kind(need_str(j, "kind"));
  s.d = radexpr_from_json(need(j, "d"));
  for (const auto& e : need(j, "v")) {
    if (!e.is_string()) throw Error(ErrorCode::Parse, "v entries must be strings");
    s.v.push_back(parse_rat(e.get<std::string>()));
  }
  if (!is_integer(s.lambda.r) || sgn(s.lambda.r) <= 0) throw Error(ErrorCode::Parse, "r must be a positive integer");
  s.numer_shifts = unit_shifts(to_long(s.lambda.r));
  if (j.contains("C")) {
    const json& c = j.at("C");
    if (c.contains("approx")) s.C_approx = c.at("approx").get<std::string>();
    if (c.contains("digits")) s.C_digits = c.at("digits").get<int>();
  }
  if (j.contains("provenance")) s.provenance = j.at("provenance").get<std::string>();
  return s;
}

inline json solutions_json(const std::vector<GpfSolution>& sols) {
  json arr = json::array();
  for (const auto& s : sols) arr.push_back(solution_to_json(s));
  return arr;
}

inline std::string serialize_catalog(Catalog& c) {
  json sols = solutions_json(c.solutions);
  c.sha256 = sha256_hex(sols.dump());
  json out{{"schema_version", c.schema_version},
           {"params", c.params},
           {"solutions", sols},
           {"checksums", json{{"sha256", c.sha256}}}};
  return out.dump(2) + "\n";
}

// A checksum mismatch is recorded, not thrown: hand-edited catalogs still load.
inline Catalog parse_catalog(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("catalog is not valid JSON: ") + e.what());
  }
  Catalog c;
  try {
    c.schema_version = detail::need_str(j, "schema_version");
    if (j.contains("params")) c.params = j.at("params");
    for (const auto& e : detail::need(j, "solutions")) c.solutions.push_back(solution_from_json(e));
    if (j.contains("checksums") && j.at("checksums").contains("sha256")) {
      c.sha256 = j.at("checksums").at("sha256").get<std::string>();
      c.checksum_ok = c.sha256 == sha256_hex(detail::need(j, "solutions").dump());
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed catalog: ") + e.what());
  }
  return c;
}

inline Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

// One row per solution, v joined by ';'. Lossy: no minimal polynomials.
inline std::string catalog_csv(const Catalog& c) {
  auto q = [](const std::string& s) {
    std::string o = "\"";
    for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return o + "\"";
  };
  std::ostringstream os;
  os << "# lossy export: x and d are decimal approximations; minimal polynomials omitted\n";
  os << "kind,p,q,r,a,b,x_approx,d_approx,v,C_approx,provenance\n";
  for (const auto& s : c.solutions) {
    json sj = solution_to_json(s);
    std::string v;
    for (size_t i = 0; i < s.v.size(); ++i) v += (i ? ";" : "") + to_nd(s.v[i]);
    os << kind_name(s.kind) << ',' << to_nd(s.lambda.p) << ',' << to_nd(s.lambda.q) << ',' << to_nd(s.lambda.r)
       << ',' << to_nd(s.lambda.a) << ',' << to_nd(s.lambda.b) << ',' << sj["x"]["approx"].get<std::string>()
       << ',' << sj["d"]["approx"].get<std::string>() << ',' << v << ',' << s.C_approx << ','
       << q(s.provenance) << '\n';
  }
  return os.str();
}

}  // namespace hgpf
