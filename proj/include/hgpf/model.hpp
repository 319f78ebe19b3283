#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hgpf/exactmath.hpp"

namespace hgpf {

struct Triple {
  long p = 0, q = 0, r = 0;

  long rcheck() const { return r - p - q; }
  bool in_domain() const { return p > 0 && q > 0 && rcheck() > 0 && rcheck() % 2 == 0; }
  auto operator<=>(const Triple&) const = default;

  std::string to_text() const {
    return std::to_string(p) + "," + std::to_string(q) + ";" + std::to_string(r);
  }
};

// Accepts "p,q;r", "p,q,r" or "p q r".
inline Triple parse_triple(const std::string& s) {
  std::string t;
  for (char c : s) t += (c == ',' || c == ';' || c == ' ') ? ' ' : c;
  std::istringstream is(t);
  Triple out;
  if (!(is >> out.p >> out.q >> out.r)) throw Error(ErrorCode::Parse, "bad triple '" + s + "'");
  std::string rest;
  if (is >> rest) throw Error(ErrorCode::Parse, "bad triple '" + s + "'");
  return out;
}

struct Lambda {
  Rat p, q, r, a, b;
  std::optional<AlgReal> x;  // empty while x is still unknown

  bool integral() const { return is_integer(p) && is_integer(q) && is_integer(r); }
  Rat rcheck() const { return r - p - q; }
  Triple triple() const { return {to_long(p), to_long(q), to_long(r)}; }
  const AlgReal& xv() const {
    if (!x) throw Error(ErrorCode::InvariantViolation, "lambda has no x");
    return *x;
  }

  std::string to_text() const {
    std::string s = to_string(p) + "," + to_string(q) + "," + to_string(r) + ";" + to_string(a) +
                    "," + to_string(b) + ";";
    if (!x) return s + "?";
    return s + (x->is_rational() ? to_string(x->rational()) : x->to_text());
  }

  friend bool operator==(const Lambda& u, const Lambda& v) {
    if (u.p != v.p || u.q != v.q || u.r != v.r || u.a != v.a || u.b != v.b) return false;
    if (u.x.has_value() != v.x.has_value()) return false;
    return !u.x || *u.x == *v.x;
  }
  friend bool operator!=(const Lambda& u, const Lambda& v) { return !(u == v); }
};

inline Lambda make_lambda(const Rat& p, const Rat& q, const Rat& r, const Rat& a, const Rat& b,
                          std::optional<AlgReal> x = std::nullopt) {
  if (sgn(r) <= 0) throw Error(ErrorCode::NotInDomain, "r must be positive");
  return Lambda{p, q, r, a, b, std::move(x)};
}

inline Lambda parse_lambda(const std::string& s) {
  auto semi1 = s.find(';');
  auto semi2 = s.find(';', semi1 == std::string::npos ? semi1 : semi1 + 1);
  if (semi1 == std::string::npos || semi2 == std::string::npos)
    throw Error(ErrorCode::Parse, "lambda must look like p,q,r;a,b;x: '" + s + "'");
  auto split = [&](const std::string& part) {
    std::vector<Rat> out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    return out;
  };
  auto pqr = split(s.substr(0, semi1));
  auto ab = split(s.substr(semi1 + 1, semi2 - semi1 - 1));
  if (pqr.size() != 3 || ab.size() != 2) throw Error(ErrorCode::Parse, "bad lambda '" + s + "'");
  std::string xs = s.substr(semi2 + 1);
  std::string trimmed;
  for (char c : xs)
    if (c != ' ') trimmed += c;
  std::optional<AlgReal> x;
  if (!trimmed.empty() && trimmed != "?") x = parse_algreal(xs);
  Lambda l = make_lambda(pqr[0], pqr[1], pqr[2], ab[0], ab[1], x);
  return l;
}

enum class Region {
  Dminus,
  Dzero,
  Dplus,
  EstarMinus,
  EstarPlus,
  EminusStar,
  EplusStar,
  IstarMinus,
  IstarPlus,
  IminusStar,
  IplusStar,
  Fminus,
  Fplus,
  Other,
};

inline const char* region_name(Region g) {
  switch (g) {
    case Region::Dminus: return "Dminus";
    case Region::Dzero: return "Dzero";
    case Region::Dplus: return "Dplus";
    case Region::EstarMinus: return "EstarMinus";
    case Region::EstarPlus: return "EstarPlus";
    case Region::EminusStar: return "EminusStar";
    case Region::EplusStar: return "EplusStar";
    case Region::IstarMinus: return "IstarMinus";
    case Region::IstarPlus: return "IstarPlus";
    case Region::IminusStar: return "IminusStar";
    case Region::IplusStar: return "IplusStar";
    case Region::Fminus: return "Fminus";
    case Region::Fplus: return "Fplus";
    case Region::Other: return "Other";
  }
  return "Other";
}

inline Region classify_pqr(const Rat& p, const Rat& q, const Rat& r) {
  auto inside = [&](const Rat& t) { return sgn(t) > 0 && t < r; };
  bool pin = inside(p), qin = inside(q);
  if (pin && qin) {
    int s = cmp(p + q, r);
    return s < 0 ? Region::Dminus : s > 0 ? Region::Dplus : Region::Dzero;
  }
  if (pin) {
    if (sgn(q) < 0) return Region::EstarMinus;
    if (q > r) return Region::EstarPlus;
    return sgn(q) == 0 ? Region::IstarMinus : Region::IstarPlus;
  }
  if (qin) {
    if (sgn(p) < 0) return Region::EminusStar;
    if (p > r) return Region::EplusStar;
    return sgn(p) == 0 ? Region::IminusStar : Region::IplusStar;
  }
  if (sgn(p) < 0 && sgn(q) < 0) return Region::Fminus;
  if (p > r && q > r) return Region::Fplus;
  return Region::Other;
}

inline Region classify_region(const Lambda& l) {
  if (sgn(l.r) <= 0) throw Error(ErrorCode::NotInDomain, "r must be positive");
  if (l.x) {
    if (l.x->compare(AlgReal(Rat(0))) <= 0 || l.x->compare(AlgReal(Rat(1))) >= 0)
      throw Error(ErrorCode::NotInDomain, "x must lie in (0,1)");
  }
  return classify_pqr(l.p, l.q, l.r);
}

enum class Classical { Swap, Euler, Pfaff1, Pfaff2 };

inline Lambda apply_classical(const Lambda& l, Classical s) {
  switch (s) {
    case Classical::Swap: return Lambda{l.q, l.p, l.r, l.b, l.a, l.x};
    case Classical::Euler: return Lambda{l.r - l.p, l.r - l.q, l.r, -l.a, -l.b, l.x};
    case Classical::Pfaff1: {
      std::optional<AlgReal> y;
      if (l.x) y = l.x->pfaff();
      return Lambda{l.p, l.r - l.q, l.r, l.a, -l.b, y};
    }
    case Classical::Pfaff2: {
      std::optional<AlgReal> y;
      if (l.x) y = l.x->pfaff();
      return Lambda{l.r - l.p, l.q, l.r, -l.a, l.b, y};
    }
  }
  return l;
}

inline Rat c_shift(const Lambda& l) {
  Rat d = l.rcheck();
  if (sgn(d) == 0) throw Error(ErrorCode::DegenerateShift, "r - p - q = 0");
  return (1 - l.a - l.b) / d;
}

}  // namespace hgpf
