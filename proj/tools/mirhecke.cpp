// Command-line front end: character tables, class polynomials, Pieri
// expansions, dimensions and the verification suites.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mirhecke/algebra.hpp"
#include "mirhecke/characters.hpp"
#include "mirhecke/serialize.hpp"
#include "mirhecke/tensorrep.hpp"

using namespace mirhecke;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::optional<int> r;
  int m = 0;
  std::string nu;
  std::string index;
  std::string g_variant = "oracle";
  std::string r_mode = "n";
  std::string format = "json";
  std::string suite = "all";
  std::string out;
  std::string cache_dir;
  bool no_cache = false;
  bool slow = false;
  int jobs = 1;
};

GVariant variant_of(const Options& o) { return o.g_variant == "paper" ? GVariant::Paper : GVariant::Oracle; }

int resolve_r(const Options& o) {
  if (o.r) {
    if (*o.r < 1) throw UsageError("--r must be positive");
    return *o.r;
  }
  return o.r_mode == "n-plus-1" ? o.n + 1 : o.n;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.out);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

TableOptions table_options(const Options& o) {
  TableOptions t;
  t.variant = variant_of(o);
  t.jobs = o.jobs;
  if (!o.no_cache) t.cache_dir = o.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(o.cache_dir);
  return t;
}

int run_table(const Options& o) {
  const auto table = character_table(o.n, table_options(o));
  emit(o, o.format == "csv" ? table_csv(table) : dump(to_json(table)));
  return 0;
}

int run_classpoly(const Options& o) {
  BasisIndex idx;
  try {
    idx = parse_basis_index(o.index, o.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  TableOptions t = table_options(o);
  t.variant = GVariant::Oracle;
  const int r = resolve_r(o);
  if (r < o.n) throw UsageError("class polynomials need r >= n");
  const auto table = character_table(o.n, t);
  ClassPolyVector f;
  try {
    f = class_polynomials(table, idx, r, o.jobs);
  } catch (const ClassPolynomialDefect& e) {
    Report report;
    report.add("class polynomials are Laurent polynomials", o.n, r, false, to_string(idx) + ": " + e.what());
    emit(o, dump(to_json(report)));
    return kExitCheckFailed;
  }
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "lambda,f\n";
    for (const auto& [lambda, c] : f.coeffs) csv << to_string(lambda) << ',' << to_string(c) << '\n';
    emit(o, csv.str());
  } else {
    emit(o, dump(to_json(f)));
  }
  return 0;
}

int run_pieri(const Options& o) {
  Partition nu;
  try {
    nu = parse_partition(o.nu);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.m < 0) throw UsageError("--m must be nonnegative");
  const int r = o.r.value_or(std::max(1, nu.size() + o.m));
  if (nu.length() > r) throw UsageError("nu has more parts than variables");
  const auto strips = pieri_qtilde(o.m, nu, r, variant_of(o));
  const auto brute = pieri_bruteforce(o.m, nu, r);
  const bool agree = strips == brute;
  json j{{"m", o.m},
         {"nu", to_json(nu)},
         {"r", r},
         {"g_variant", o.g_variant},
         {"expansion", schur_to_json(strips, r)},
         {"bruteforce", schur_to_json(brute, r)},
         {"status", agree ? "pass" : "fail"}};
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "lambda,strips,bruteforce\n";
    std::map<Partition, std::pair<Laurent, Laurent>> rows;
    for (const auto& [p, c] : strips) rows[p].first = c;
    for (const auto& [p, c] : brute) rows[p].second = c;
    for (const auto& [p, c] : rows) csv << to_string(p) << ',' << to_string(c.first) << ',' << to_string(c.second) << '\n';
    emit(o, csv.str());
  } else {
    emit(o, dump(j));
  }
  return agree ? 0 : kExitCheckFailed;
}

Report suite_relations(int n, int r) {
  Report report;
  if (n >= 2) report.append(check_relations(n));
  report.append(verify_rep_relations(n, r));
  return report;
}

Report suite_oracle(int n, int r, bool slow, int jobs) {
  Report report;
  const TensorSpace space(n, r);
  const auto basis = standard_basis(n);
  std::vector<PsiMatrix> psi;
  for (const auto& idx : basis) psi.push_back(PsiMatrix::of(space, basis_word(idx)));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n <= 3 || slow) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) pairs.emplace_back(i, j);
  } else {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int k = 0; k < 200; ++k) pairs.emplace_back(pick(rng), pick(rng));
  }
  std::optional<std::string> witness;
  for (const auto& [i, j] : pairs) {
    const auto prod = mul(AlgebraElement::basis(basis[i]), AlgebraElement::basis(basis[j]));
    if (!(PsiMatrix::of(space, prod) == psi[i].compose(psi[j]))) {
      witness = to_string(basis_word(basis[i])) + " * " + to_string(basis_word(basis[j]));
      break;
    }
  }
  report.add("Psi is multiplicative on basis products", n, r, !witness, witness);

  if (r >= n) {
    const auto table = character_table(n);
    witness.reset();
    for (const auto& mu : table.labels) {
      const auto traces = char_oracle(hat_T(n, mu), r, jobs);
      for (const auto& lambda : table.labels) {
        auto it = traces.find(lambda);
        if ((it == traces.end() ? Laurent() : it->second) != table.at(lambda, mu) && !witness)
          witness = "lambda=" + to_string(lambda) + " mu=" + to_string(mu);
      }
    }
    report.add("MN character table equals the tensor-space traces", n, r, !witness, witness);
  }
  return report;
}

Report suite_frobenius(int n, int r, GVariant variant) {
  Report report;
  TableOptions t;
  t.variant = variant;
  const auto table = character_table(n, t);
  std::optional<std::string> witness;
  for (const auto& mu : table.labels) {
    SymPoly rhs(r);
    for (const auto& lambda : table.labels) rhs += table.at(lambda, mu) * schur(lambda, r);
    if (!(qtilde_mu(mu, r) == rhs)) {
      witness = "mu=" + to_string(mu);
      break;
    }
  }
  report.add("Frobenius identity", n, r, !witness, witness);
  report.add("entries vanish when |lambda| > |mu|", n, r, vanishing_check(table));
  for (int q0 : {2, 3}) {
    Matrix<BigRational> m;
    for (const auto& row : table.entries) {
      std::vector<BigRational> values;
      for (const auto& e : row) values.push_back(specialize_q(e, q0));
      m.push_back(std::move(values));
    }
    report.add("character table invertible at q=" + std::to_string(q0), n, r, determinant(m) != 0);
  }
  const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
  BigInt sum = 0;
  bool positive = true;
  for (const auto& lambda : table.labels) {
    const Laurent& d = table.at(lambda, identity);
    positive = positive && d.is_constant() && d.coeff(0) > 0;
    sum += d.coeff(0) * d.coeff(0);
  }
  report.add("squared degrees sum to the dimension", n, r, positive && sum == dimension_formula(n));
  return report;
}

Report suite_pieri(int n, int r, GVariant variant) {
  Report report;
  std::optional<std::string> witness;
  for (int m = 1; m <= n && !witness; ++m)
    for (const auto& nu : partitions_up_to(n - m)) {
      if (nu.length() > r) continue;
      if (pieri_qtilde(m, nu, r, variant) != pieri_bruteforce(m, nu, r)) {
        witness = "m=" + std::to_string(m) + " nu=" + to_string(nu);
        break;
      }
    }
  report.add("Pieri strips formula equals the product expansion", n, r, !witness, witness);
  witness.reset();
  for (int m = 1; m <= n && !witness; ++m) {
    if (!check_two_symmetric(m, r)) witness = "m=" + std::to_string(m);
    else if (qtilde_generating(m, r) != qtilde(m, r)) witness = "generating function, m=" + std::to_string(m);
    else if (qtilde_sequence_sum(m, r) != qtilde(m, r)) witness = "sequence sum, m=" + std::to_string(m);
  }
  report.add("three formulas for q~_m agree", n, r, !witness, witness);
  return report;
}

int run_verify(const Options& o) {
  const int r = resolve_r(o);
  if (o.n >= 5 && !o.slow && (o.suite == "oracle" || o.suite == "all"))
    throw UsageError("the oracle suite at n >= 5 needs --slow");
  Report report;
  const bool all = o.suite == "all";
  if (all || o.suite == "relations") report.append(suite_relations(o.n, r));
  if (all || o.suite == "oracle") report.append(suite_oracle(o.n, r, o.slow, o.jobs));
  if (all || o.suite == "frobenius") report.append(suite_frobenius(o.n, r, variant_of(o)));
  if (all || o.suite == "pieri") report.append(suite_pieri(o.n, r, variant_of(o)));
  emit(o, dump(to_json(report)));
  return report.passed() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the mirabolic Hecke algebra"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Rank")->required()->check(CLI::Range(1, 8)); };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--g-variant", o.g_variant, "Transition coefficients: oracle (checked) or paper (alternative case list)")
        ->check(CLI::IsMember({"oracle", "paper"}));
  };
  auto add_r = [&](CLI::App* sub) {
    sub->add_option("--r", o.r, "Number of variables (overrides --r-mode)");
    sub->add_option("--r-mode", o.r_mode, "Default r: n or n+1")->check(CLI::IsMember({"n", "n-plus-1"}));
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", o.cache_dir, "Character cache directory (default $MIRHECKE_CACHE or .mirhecke-cache)");
    sub->add_flag("--no-cache", o.no_cache, "Do not read or write the character cache");
  };

  auto* table = app.add_subcommand("table", "Character table chi_(lambda,|lambda|)(T^_mu)");
  add_n(table);
  add_common(table);
  add_variant(table);
  add_cache(table);

  auto* classpoly = app.add_subcommand("classpoly", "Class polynomials of a standard basis element");
  add_n(classpoly);
  classpoly->add_option("--index", o.index, "Basis index, e.g. \"A=2;B=1;w=1,2\"")->required();
  add_common(classpoly);
  add_r(classpoly);
  add_cache(classpoly);

  auto* pieri = app.add_subcommand("pieri", "Schur expansion of q~_m s_nu with its brute-force cross-check");
  pieri->add_option("--m", o.m, "Degree of q~_m")->required();
  pieri->add_option("--nu", o.nu, "Partition, e.g. \"2.1\" (\"0\" for the empty one)")->required();
  pieri->add_option("--r", o.r, "Number of variables (default |nu| + m)");
  add_common(pieri);
  add_variant(pieri);

  auto* dim = app.add_subcommand("dim", "Dimension sum C(n,k)^2 k!");
  dim->add_option("--n", o.n, "Rank")->required()->check(CLI::Range(0, 1000));

  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 on any failure");
  add_n(verify);
  add_r(verify);
  verify->add_option("--suite", o.suite, "relations, oracle, frobenius, pieri or all")
      ->check(CLI::IsMember({"relations", "oracle", "frobenius", "pieri", "all"}));
  verify->add_flag("--slow", o.slow, "Allow the expensive n >= 5 oracle runs");
  verify->add_option("--out", o.out, "Write the report to this file instead of stdout");
  verify->add_option("--jobs", o.jobs, "Worker threads for the trace computations")->check(CLI::Range(1, 256));
  add_variant(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return run_table(o);
    if (*classpoly) return run_classpoly(o);
    if (*pieri) return run_pieri(o);
    if (*dim) {
      std::cout << dimension_formula(o.n) << '\n';
      return 0;
    }
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
