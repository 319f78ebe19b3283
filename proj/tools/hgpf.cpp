// hgpf: enumerate, verify and transform gamma product formulas of 2F1 families.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "hgpf/hgpf.hpp"

using namespace hgpf;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int default_digits() {
  if (const char* env = std::getenv("HGPF_DIGITS")) {
    try {
      int d = std::stoi(env);
      if (d >= 10) return d;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring HGPF_DIGITS='" << env << "'\n";
  }
  return 60;
}

std::vector<Rat> parse_samples(const std::string& s) {
  if (s.empty()) return default_samples();
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rat w = parse_rat(item);
    if (sgn(w) <= 0) throw Error(ErrorCode::Parse, "sample points must be positive");
    out.push_back(w);
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty sample list");
  return out;
}

struct Op {
  std::string name;
  long k = 0;
};

Op parse_op(const std::string& s) {
  static const std::vector<std::string> plain{"dual", "reciprocal", "euler", "pfaff1", "pfaff2", "swap"};
  for (const auto& p : plain)
    if (s == p) return {s, 0};
  for (const char* p : {"mult", "div"}) {
    std::string pre = std::string(p) + ":";
    if (s.rfind(pre, 0) == 0) {
      long k = 0;
      try {
        k = std::stol(s.substr(pre.size()));
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad multiplier in '" + s + "'");
      }
      if (k < 1) throw Error(ErrorCode::Parse, "multiplier must be positive in '" + s + "'");
      return {p, k};
    }
  }
  throw Error(ErrorCode::Parse, "unknown op '" + s + "'");
}

Lambda transform_data(const Lambda& l, const Op& op) {
  if (op.name == "dual") return dual(l);
  if (op.name == "reciprocal") return reciprocal(l);
  if (op.name == "euler") return apply_classical(l, Classical::Euler);
  if (op.name == "pfaff1") return apply_classical(l, Classical::Pfaff1);
  if (op.name == "pfaff2") return apply_classical(l, Classical::Pfaff2);
  if (op.name == "swap") return apply_classical(l, Classical::Swap);
  if (op.name == "mult") return Lambda{op.k * l.p, op.k * l.q, op.k * l.r, l.a, l.b, l.x};
  // div
  if (!is_integer(l.r / op.k)) throw Error(ErrorCode::NotInDomain, "r is not divisible by " + std::to_string(op.k));
  return Lambda{l.p / op.k, l.q / op.k, l.r / op.k, l.a, l.b, l.x};
}

// nullopt when op has no GPF-level meaning for s.
std::optional<GpfSolution> transform_gpf(const GpfSolution& s, const Op& op) {
  if (op.name == "dual") {
    if (s.kind == SolutionKind::A) return dual_gpf(s);
    if (s.kind == SolutionKind::FIntegral) return reciprocal_gpf(dual_gpf(reciprocal_gpf(s)));
    throw Error(ErrorCode::UnsupportedRegion, "dual needs an (A)- or integral F- solution");
  }
  if (op.name == "reciprocal") return reciprocal_gpf(s);
  if (op.name == "mult") return multiply(s, op.k);
  if (op.name == "div") {
    if (op.k < 2) throw Error(ErrorCode::NotInDomain, "divisor must be at least 2");
    auto d = divide(s, op.k);
    if (!d) throw Error(ErrorCode::NotInDomain, s.lambda.to_text() + " is not divisible by " + std::to_string(op.k));
    return d;
  }
  if (op.name == "swap") {
    GpfSolution out = s;
    out.lambda = apply_classical(s.lambda, Classical::Swap);
    out.provenance = "swap of " + s.lambda.to_text();
    check_solution(out);
    return out;
  }
  return std::nullopt;
}

bool matches(const Lambda& l, const Lambda& sel) {
  return l.p == sel.p && l.q == sel.q && l.r == sel.r && l.a == sel.a && l.b == sel.b &&
         (!sel.x || (l.x && *l.x == *sel.x));
}

std::string describe(const GpfSolution& s) {
  std::ostringstream os;
  os << s.lambda.to_text() << "  kind " << kind_name(s.kind) << "\n  d = " << s.d.to_text() << "\n  v = {";
  for (size_t i = 0; i < s.v.size(); ++i) os << (i ? ", " : "") << to_string(s.v[i]);
  os << "}";
  if (!s.C_approx.empty()) os << "\n  C = " << s.C_approx;
  return os.str();
}

int cmd_enumerate(std::optional<long> rcheck, std::optional<long> r_max, const std::string& out_path,
                  const std::string& format, int digits, int jobs, bool quiet) {
  if (rcheck && (*rcheck < 2 || *rcheck % 2 != 0)) throw Error(ErrorCode::Parse, "--rcheck must be even and >= 2");
  if (r_max && *r_max < 4) throw Error(ErrorCode::Parse, "--r-max must be at least 4");
  EnumerateParams prm;
  prm.rcheck = rcheck;
  prm.r_max = r_max;
  prm.digits = digits;
  prm.jobs = std::max(1, jobs);
  EnumerateResult res = run_enumerate(prm);
  if (!quiet)
    for (const auto& o : res.outcomes)
      for (const auto& line : o.log) std::cerr << line << "\n";
  Catalog c;
  if (rcheck) c.params["rcheck"] = *rcheck;
  if (r_max) c.params["r_max"] = *r_max;
  c.params["digits"] = digits;
  c.solutions = res.solutions;
  std::string text = format == "csv" ? catalog_csv(c) : serialize_catalog(c);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Parse, "cannot write " + out_path);
    out << text;
  }
  std::cerr << res.outcomes.size() << " triples, " << res.a_count << " (A)-solutions, " << res.solutions.size()
            << " catalog entries\n";
  return 0;
}

int cmd_verify(const std::string& path, int digits, const std::string& samples_text) {
  Catalog c = load_catalog(path);
  auto samples = parse_samples(samples_text);
  if (!c.checksum_ok) std::cerr << "warning: catalog checksum does not match its solutions\n";
  size_t failed = 0;
  for (size_t i = 0; i < c.solutions.size(); ++i) {
    const GpfSolution& s = c.solutions[i];
    std::cout << "[" << i << "] " << s.lambda.to_text() << " " << kind_name(s.kind) << ": ";
    try {
      check_solution(s);
      VerifyReport rep = verify_gpf(s, samples, digits);
      VerifyReport rr = verify_ratio(s.lambda, RatioR{s.d, {}, s.numer_shifts, s.v}, samples, digits);
      bool ok = rep.pass && rr.pass;
      std::cout << (ok ? "PASS" : "FAIL") << "  worst log10 residual " << std::fixed << std::setprecision(1)
                << std::max(rep.worst(), rr.worst()) << "  C = " << rep.C_decimal << "\n";
      std::cout.unsetf(std::ios::fixed);
      for (const auto& e : rep.entries)
        std::cout << "    w=" << to_string(e.w) << "  "
                  << (e.note.empty() ? std::to_string(e.log10_residual) : e.note) << (e.pass ? "" : "  FAIL")
                  << "\n";
      if (!rep.message.empty()) std::cout << "    " << rep.message << "\n";
      if (!ok) ++failed;
    } catch (const Error& e) {
      std::cout << "FAIL  " << e.what() << "\n";
      ++failed;
    }
  }
  std::cout << c.solutions.size() << " checked, " << failed << " failed\n";
  return failed ? kExitFail : 0;
}

int cmd_transform(const std::string& op_text, const std::string& lambda_text, const std::string& catalog_path,
                  const std::string& select) {
  Op op = parse_op(op_text);
  if (lambda_text.empty() == catalog_path.empty()) throw Error(ErrorCode::Parse, "give exactly one of --lambda / --catalog");
  if (!lambda_text.empty()) {
    Lambda l = parse_lambda(lambda_text);
    try {
      std::cout << transform_data(l, op).to_text() << "\n";
    } catch (const Error& e) {
      std::cerr << "inapplicable: " << e.what() << "\n";
      return kExitFail;
    }
    return 0;
  }
  Catalog c = load_catalog(catalog_path);
  std::optional<Lambda> sel;
  if (!select.empty()) sel = parse_lambda(select.find(';') == select.rfind(';') ? select + ";?" : select);
  size_t picked = 0, done = 0;
  Catalog out;
  out.params["op"] = op_text;
  for (const auto& s : c.solutions) {
    if (sel && !matches(s.lambda, *sel)) continue;
    ++picked;
    try {
      auto t = transform_gpf(s, op);
      if (t) {
        std::cout << describe(*t) << "\n";
        out.solutions.push_back(*t);
      } else {
        std::cout << transform_data(s.lambda, op).to_text() << "  (data only; " << op.name
                  << " does not carry the GPF)\n";
      }
      ++done;
    } catch (const Error& e) {
      std::cerr << "inapplicable to " << s.lambda.to_text() << ": " << e.what() << "\n";
    }
  }
  if (picked == 0) {
    std::cerr << "no catalog entry matches\n";
    return kExitFail;
  }
  return done == picked ? 0 : kExitFail;
}

int cmd_ypoly(const std::string& triple_text) {
  Triple t = parse_triple(triple_text);
  if (!t.in_domain())
    throw Error(ErrorCode::NotInDomain, "triple " + t.to_text() + " is not in D-_A (need p,q >= 1, r-p-q even >= 2)");
  RadicalPair xy = build_XY(t);
  std::cout << "triple " << t.to_text() << "\n";
  std::cout << "Delta = " << poly_to_string(xy.Delta) << "\n";
  std::cout << "X = " << poly_to_string(xy.X) << "\n";
  std::cout << "Y = " << poly_to_string(xy.Y) << "\n";
  std::vector<AlgReal> roots;
  try {
    roots = x_candidates(t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyRootSet) throw;
  }
  std::cout << roots.size() << " root(s) in (0,1)\n";
  for (const auto& x : roots) {
    std::cout << "  minpoly " << poly_to_string(x.poly()) << "  in (" << to_string(x.lo()) << ", " << to_string(x.hi())
              << ")  ~ " << x.decimal(30) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gamma product formulas for Gauss hypergeometric families"};
  app.require_subcommand(1);
  int digits = default_digits();

  auto* en = app.add_subcommand("enumerate", "Enumerate solutions and write a catalog");
  std::optional<long> rcheck, r_max;
  std::string out_path = "-", format = "json";
  int jobs = 1;
  bool quiet = false;
  auto* o_rc = en->add_option("--rcheck", rcheck, "Enumerate triples with r-p-q up to N (even)");
  auto* o_rm = en->add_option("--r-max", r_max, "Enumerate triples with r up to N");
  o_rc->excludes(o_rm);
  en->add_option("--out", out_path, "Output path, '-' for stdout");
  en->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  en->add_option("--digits", digits, "Decimal digits for C")->check(CLI::Range(10, 10000));
  en->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 1024));
  en->add_flag("--quiet", quiet, "Suppress the per-triple log");

  auto* ve = app.add_subcommand("verify", "Numerically certify every catalog entry");
  std::string catalog_path, samples;
  ve->add_option("--catalog", catalog_path, "Catalog JSON")->required();
  ve->add_option("--digits", digits, "Working precision in decimal digits")->check(CLI::Range(10, 10000));
  ve->add_option("--samples", samples, "Comma-separated sample points w");

  auto* tr = app.add_subcommand("transform", "Apply a symmetry to data or to catalog entries");
  std::string op, lambda_text, select;
  tr->add_option("--op", op, "dual|reciprocal|euler|pfaff1|pfaff2|swap|mult:k|div:k")->required();
  tr->add_option("--lambda", lambda_text, "Data p,q,r;a,b;x");
  tr->add_option("--catalog", catalog_path, "Catalog JSON whose entries are transformed");
  tr->add_option("--select", select, "Only entries matching p,q,r;a,b[;x]");

  auto* yp = app.add_subcommand("ypoly", "Show X, Y and the roots of Y in (0,1) for a triple");
  std::string triple_text;
  yp->add_option("triple", triple_text, "p,q;r")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*en) {
      if (!rcheck && !r_max) throw Error(ErrorCode::Parse, "one of --rcheck / --r-max is required");
      return cmd_enumerate(rcheck, r_max, out_path, format, digits, jobs, quiet);
    }
    if (*ve) return cmd_verify(catalog_path, digits, samples);
    if (*tr) return cmd_transform(op, lambda_text, catalog_path, select);
    if (*yp) return cmd_ypoly(triple_text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
