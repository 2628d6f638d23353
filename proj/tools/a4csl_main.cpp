// a4csl: inspect coincidence rotations and CSLs of L, compare and count them.
//
// Exit codes: 0 success, 1 selftest or consistency failure, 2 parse error,
// 3 domain error, 4 budget exceeded.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "a4csl/counting.hpp"
#include "a4csl/csl.hpp"
#include "a4csl/serialize.hpp"

using namespace a4csl;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kDomain = 3, kBudget = 4 };

struct Globals {
  std::string output;
  unsigned threads = 1;
  std::uint64_t budget = 0;
  bool coords = false;
};

std::string format_or(const Globals& g, const std::string& fallback) { return g.output.empty() ? fallback : g.output; }

Icosian read_icosian(const std::string& text, bool coords) {
  Quat q = parse_quat(text);
  if (coords) {
    std::array<OInt, 4> c;
    for (size_t i = 0; i < 4; ++i) {
      if (!q[i].is_integral()) throw ParseError("o-coordinate " + to_string(q[i]) + " is not in Z[t]");
      c[i] = q[i].to_oint();
    }
    return Icosian::from_coords(c);
  }
  auto x = to_icosian(q);
  if (!x) throw ParseError(to_string(q) + " is not an icosian");
  return *x;
}

std::vector<std::string> matrix_rows(const RationalMatrix4& m) {
  std::vector<std::string> rows;
  for (const auto& r : m) {
    std::string line;
    for (size_t j = 0; j < 4; ++j) line += (j ? " " : "") + to_string(r[j]);
    rows.push_back(line);
  }
  return rows;
}

std::vector<std::string> hnf_rows(const SublatticeL& s) {
  std::vector<std::string> rows;
  const IntMatrix& h = s.hnf();
  for (size_t r = 0; r < 4; ++r) {
    std::string line;
    for (size_t j = 0; j < 4; ++j) line += (j ? " " : "") + to_string(h(r, j));
    rows.push_back(line);
  }
  return rows;
}

int cmd_rot(const Globals& g, const std::string& arg) {
  Icosian q = read_icosian(arg, g.coords);
  if (q.is_zero()) throw DomainError("zero icosian");
  bool primitive = is_primitive(q);
  bool admissible = is_admissible(q);
  if (!admissible) throw DomainError("not a coincidence rotation: N(nr q) = " + to_string(q.nr().abs_norm()) + " is not a square");
  CoincidenceRotation rot = rotation_of(q);
  if (format_or(g, "text") == "json") {
    json j{{"input", to_json(q)},
           {"primitive", primitive},
           {"admissible", admissible},
           {"q", to_json(rot.q)},
           {"nr", to_json(rot.q.nr())},
           {"den", to_json(rot.den)},
           {"sigma", to_json(rot.sigma)},
           {"alpha", to_json(rot.alpha)},
           {"q_alpha", to_json(rot.q_alpha)},
           {"matrix", matrix_rows(rot.matrixL)}};
    std::cout << document(j).dump(2) << "\n";
    return kOk;
  }
  std::cout << "q          " << to_string(q.quat()) << "\n"
            << "primitive  " << (primitive ? "true" : "false") << "\n"
            << "admissible true\n";
  if (!primitive) std::cout << "primitive part " << to_string(rot.q.quat()) << "\n";
  std::cout << "nr         " << to_string(rot.q.nr()) << "\n"
            << "den        " << to_string(rot.den) << "\n"
            << "sigma      " << to_string(rot.sigma) << "\n"
            << "alpha      " << to_string(rot.alpha) << "\n"
            << "q_alpha    " << to_string(rot.q_alpha.quat()) << "\n"
            << "matrix (L-coordinates, columns are images of b1..b4)\n";
  for (const auto& r : matrix_rows(rot.matrixL)) std::cout << "  " << r << "\n";
  return kOk;
}

int cmd_csl(const Globals& g, const std::string& arg) {
  Icosian q = read_icosian(arg, g.coords);
  CslRecord rec = csl_record(rotation_of(q));
  SublatticeL refl = reflection_csl(rec.rotation.q);
  if (format_or(g, "text") == "json") {
    json j = to_json(rec);
    j["reflection"] = to_json(refl);
    std::cout << document(j).dump(2) << "\n";
    return kOk;
  }
  std::cout << "q        " << to_string(rec.rotation.q.quat()) << "\n"
            << "sigma    " << to_string(rec.rotation.sigma) << "\n"
            << "csl HNF (L-coordinates)\n";
  for (const auto& r : hnf_rows(rec.csl)) std::cout << "  " << r << "\n";
  std::cout << "index    " << to_string(rec.csl.index()) << "\n"
            << "reflection csl HNF\n";
  for (const auto& r : hnf_rows(refl)) std::cout << "  " << r << "\n";
  std::cout << "reflection index " << to_string(refl.index()) << "\n";
  return kOk;
}

int cmd_equal(const Globals& g, const std::string& a1, const std::string& a2) {
  Icosian p1 = read_icosian(a1, g.coords);
  Icosian p2 = read_icosian(a2, g.coords);
  if (p1.is_zero() || p2.is_zero()) throw DomainError("zero icosian");
  p1 = primitive_part(p1);
  p2 = primitive_part(p2);
  if (!is_admissible(p1) || !is_admissible(p2)) throw DomainError("both icosians must be admissible");
  if (associates(p1.nr(), p2.nr()) && p1.nr() != p2.nr())
    std::cerr << "note: nr values " << to_string(p1.nr()) << " and " << to_string(p2.nr())
              << " agree only up to a unit of o\n";
  bool criterion = equal_csl(p1, p2);
  bool oracle = equal_csl_by_hnf(p1, p2);
  bool symmetry = symmetry_related(p1, p2);
  bool lemma = sufficient_equal_lemma(p1, p2);
  if (format_or(g, "text") == "json") {
    json j{{"equal_csl", criterion}, {"equal_hnf", oracle}, {"symmetry_related", symmetry}, {"sufficient_condition", lemma}};
    std::cout << document(j).dump(2) << "\n";
  } else {
    std::cout << "equal_csl        " << (criterion ? "true" : "false") << "\n"
              << "equal_hnf        " << (oracle ? "true" : "false") << "\n"
              << "symmetry_related " << (symmetry ? "true" : "false") << "\n";
  }
  return criterion == oracle ? kOk : kFailure;
}

int cmd_enumerate(const Globals& g, long long n) {
  if (n < 1) throw DomainError("n must be positive");
  auto reps = enumerate_rotations(Integer(n), {g.threads, g.budget});
  if (format_or(g, "text") == "json") {
    json arr = json::array();
    for (const auto& q : reps) arr.push_back(to_json(q));
    std::cout << document(json{{"n", n}, {"classes", arr}}).dump(2) << "\n";
    return kOk;
  }
  for (const auto& q : reps) std::cout << to_string(q.quat()) << "  nr=" << to_string(q.nr()) << "\n";
  std::cout << "# " << reps.size() << " rotation classes\n";
  return kOk;
}

int cmd_census(const Globals& g, long long nmax, long long single) {
  const std::string fmt = format_or(g, "csv");
  const EnumerationOptions opts{g.threads, g.budget};
  if (single > 0) {
    SigmaCensus c = census(Integer(single), opts);
    if (fmt == "json") {
      std::cout << document(to_json(c, true)).dump(2) << "\n";
    } else {
      std::cout << census_csv_header() << "\n" << census_csv_row(c) << "\n";
    }
    return c.matches() ? kOk : kFailure;
  }
  if (nmax < 1) throw DomainError("--nmax must be positive");
  std::vector<SigmaCensus> rows;
  std::string truncation;
  for (long long n = 1; n <= nmax; ++n) {
    try {
      rows.push_back(census(Integer(n), opts));
    } catch (const BudgetExceeded& e) {
      truncation = "truncated at n=" + std::to_string(n) + ": " + e.what();
      break;
    }
  }
  bool all_match = true;
  for (const auto& c : rows) all_match = all_match && c.matches();
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& c : rows) arr.push_back(to_json(c, false));
    json j{{"rows", arr}, {"truncated", !truncation.empty()}};
    if (!truncation.empty()) j["truncation"] = truncation;
    std::cout << document(j).dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << census_csv_header() << "\n";
    for (const auto& c : rows) std::cout << census_csv_row(c) << "\n";
    if (!truncation.empty()) std::cout << "# " << truncation << "\n";
  } else {
    for (const auto& c : rows)
      std::cout << "n=" << to_string(c.n) << " classes=" << c.rotation_classes << " csl=" << c.csl_count
                << " f=" << to_string(c.f_formula) << (c.matches() ? " match" : " MISMATCH") << "\n";
    if (!truncation.empty()) std::cout << "# " << truncation << "\n";
  }
  if (!truncation.empty()) return kBudget;
  return all_match ? kOk : kFailure;
}

int cmd_dirichlet(const Globals& g, long long count) {
  if (count < 1) throw DomainError("N must be positive");
  auto direct = dirichlet_coeffs(static_cast<size_t>(count));
  auto euler = euler_product_coeffs(static_cast<size_t>(count));
  const bool agree = direct == euler;
  if (format_or(g, "text") == "json") {
    json arr = json::array();
    for (const auto& c : direct) arr.push_back(to_json(c));
    std::cout << document(json{{"coefficients", arr}, {"euler_product_agrees", agree}}).dump(2) << "\n";
  } else {
    for (size_t i = 0; i < direct.size(); ++i) std::cout << (i ? "," : "") << to_string(direct[i]);
    std::cout << "\n";
  }
  if (!agree) {
    std::cerr << "error: Euler-product expansion disagrees with f(n)\n";
    return kFailure;
  }
  return kOk;
}

Icosian q_of(const std::string& s) { return *to_icosian(parse_quat(s)); }

int cmd_selftest() {
  std::vector<std::pair<std::string, std::function<bool()>>> checks;
  auto add = [&](std::string name, std::function<bool()> f) { checks.emplace_back(std::move(name), std::move(f)); };
  const Icosian r = q_of("(t, 2*t, 0, 0)");
  const Icosian s = q_of("(t^2, t, t, 1)");

  add("f(5) = 6", [] { return f_prime_power(5, 1) == 6; });
  add("f(4) = 20", [] { return f_prime_power(2, 2) == 20; });
  add("f(11) = 144", [] { return f_prime_power(11, 1) == 144; });
  add("f(9) = 90", [] { return f_prime_power(3, 2) == 90; });
  add("f(6) = 50", [] { return f(6) == 50; });
  add("f(10) = 30", [] { return f(10) == 30; });
  add("dirichlet(11)", [] {
    std::vector<Integer> want{1, 5, 10, 20, 6, 50, 50, 80, 90, 30, 144};
    return dirichlet_coeffs(11) == want && euler_product_coeffs(11) == want;
  });
  add("dirichlet(8) is a prefix", [] {
    auto a = dirichlet_coeffs(8), b = dirichlet_coeffs(11);
    return std::equal(a.begin(), a.end(), b.begin());
  });
  add("r is primitive", [&] { return is_primitive(r); });
  add("nr(r) = nr(s) = 5+5t", [&] { return r.nr() == OInt(5, 5) && s.nr() == OInt(5, 5); });
  add("s^-1 r is not a unit", [&] { return !same_right_ideal(r, s); });
  add("reference CSL basis has index 5", [] {
    std::vector<RationalVec4> rows;
    for (const char* v : {"(1,2,0,0)", "(2,-1,0,0)", "(3/2,1/2,1/2,1/2)", "(-1,1/2,(t-1)/2,-t/2)"}) {
      auto y = to_L_coords(parse_quat(v));
      if (!y) return false;
      rows.push_back(*y);
    }
    return hnf4(rows).index() == 5;
  });
  add("r and s define the reference CSL", [&] {
    std::vector<RationalVec4> rows;
    for (const char* v : {"(1,2,0,0)", "(2,-1,0,0)", "(3/2,1/2,1/2,1/2)", "(-1,1/2,(t-1)/2,-t/2)"})
      rows.push_back(*to_L_coords(parse_quat(v)));
    SublatticeL reference = hnf4(rows);
    auto rr = rotation_of(r), rs = rotation_of(s);
    return csl_intersection(rr) == reference && csl_intersection(rs) == reference && csl_Lq(rs) == reference &&
           phi_plus_image(q_of("(1,2,0,0)")) == reference;
  });
  add("sigma(r) = 5", [&] { return sigma(r) == 5; });
  add("equal_csl(r, s), not symmetry related", [&] {
    return equal_csl(r, s) && equal_csl_by_hnf(r, s) && !symmetry_related(r, s);
  });
  add("census(2) = 5", [] { return census(2).csl_count == 5; });
  add("census(3) = 10", [] { return census(3).csl_count == 10; });
  add("census(4) = 20", [] { return census(4).csl_count == 20; });
  add("census(5) = 6", [] {
    auto c = census(5);
    return c.csl_count == 6 && c.matches();
  });
  add("census(11) = 144", [] { return census(11).csl_count == 144; });

  bool ok = true;
  for (const auto& [name, check] : checks) {
    bool pass = false;
    try {
      pass = check();
    } catch (const std::exception& e) {
      std::cout << "  error: " << e.what() << "\n";
    }
    ok = ok && pass;
    std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
  }
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coincidence site lattices of the root lattice A4 in the icosian ring"};
  app.require_subcommand(1);
  Globals g;
  long long nmax = 30;
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", g.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", g.budget, "Maximum enumeration nodes per index (0 = unlimited)");
  app.add_option("--nmax", nmax, "Largest index for census")->capture_default_str();
  app.add_flag("--coords", g.coords, "Read icosians as o-coordinate quadruples");

  std::string q1, q2;
  long long n = 0, single = 0, count = 11;
  auto* rot = app.add_subcommand("rot", "Inspect the rotation R(q)")->fallthrough();
  rot->add_option("q", q1, "Icosian, e.g. \"(t, 2*t, 0, 0)\"")->required();
  auto* csl = app.add_subcommand("csl", "Compute the CSL of R(q)")->fallthrough();
  csl->add_option("q", q1)->required();
  auto* eq = app.add_subcommand("equal", "Compare the CSLs of two rotations")->fallthrough();
  eq->add_option("q1", q1)->required();
  eq->add_option("q2", q2)->required();
  auto* en = app.add_subcommand("enumerate", "List rotation classes of a given index")->fallthrough();
  en->add_option("n", n)->required();
  auto* ce = app.add_subcommand("census", "Count CSLs for n = 1..nmax and compare with f(n)")->fallthrough();
  ce->add_option("nmax", nmax, "Largest index");
  ce->add_option("--n", single, "Detail for a single index");
  auto* di = app.add_subcommand("dirichlet", "Print f(1..N)")->fallthrough();
  di->add_option("N", count)->capture_default_str();
  auto* st = app.add_subcommand("selftest", "Check known examples")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*rot) return cmd_rot(g, q1);
    if (*csl) return cmd_csl(g, q1);
    if (*eq) return cmd_equal(g, q1, q2);
    if (*en) return cmd_enumerate(g, n);
    if (*ce) return cmd_census(g, nmax, single);
    if (*di) return cmd_dirichlet(g, count);
    if (*st) return cmd_selftest();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kFailure;
}
