#include "mirhecke/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "mirhecke/algebra.hpp"
#include "mirhecke/tensorrep.hpp"

namespace mirhecke {

Laurent wt(const Partition& lambda, const Partition& nu) {
  const auto strip = combinatorics::strip_data(lambda, nu);
  if (!strip.is_strip) return 0;
  if (strip.size == 0) return 1;
  Laurent out = pow(Laurent::q() - 1, static_cast<unsigned>(strip.cc - 1));
  for (const auto& b : strip.components) {
    out *= Laurent::q_power(b.columns - 1);
    if ((b.rows - 1) % 2) out = -out;
  }
  return out;
}

Laurent wtbar(const Partition& lambda, const Partition& nu) {
  const auto strip = combinatorics::strip_data(lambda, nu);
  if (!strip.is_strip) return 0;
  if (strip.size == 0) return 1;
  Laurent out = Laurent::q_power(1 - strip.size);
  if ((strip.size - 1) % 2) out = -out;
  out *= pow(Laurent::q() - 1, static_cast<unsigned>(strip.cc - 1));
  for (const auto& b : strip.components) {
    out *= Laurent::q_power(b.rows - 1);
    if ((b.columns - 1) % 2) out = -out;
  }
  return out;
}

namespace {

void check_tm(int t, int m) {
  if (m < 1 || t < 0 || t > m) throw std::invalid_argument("transition coefficient needs 0 <= t <= m, m >= 1");
}

Laurent sign_power(int e) { return e % 2 ? Laurent(-1) : Laurent(1); }

}  // namespace

Laurent f_coeff(int t, int m) {
  check_tm(t, m);
  if (t == 0) return Laurent::q_power(m - 1);
  if (t < m) return (Laurent::q() - 1) * Laurent::q_power(m - t - 1);
  return 1;
}

Laurent g_coeff(int t, int m, GVariant variant) {
  check_tm(t, m);
  if (variant == GVariant::Oracle) return pow(-Laurent::q(), static_cast<unsigned>(m - 1)) * f_coeff(t, m).bar();
  if (t == 0) return sign_power(m) * Laurent::q();
  if (t < m) return sign_power(m - t + 1) * (Laurent::q() - 1);
  return 1;
}

namespace {

using MemoKey = std::tuple<int, Partition, Partition, GVariant, PartRemoval>;

std::mutex memo_mutex;
std::map<MemoKey, Laurent> memo;

}  // namespace

Laurent mn_character(int n, const Partition& lambda, const Partition& mu, GVariant variant, PartRemoval removal) {
  if (n < 0 || lambda.size() > n || mu.size() > n) throw std::invalid_argument("mn_character: size exceeds n");
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  const MemoKey key{n, lambda, mu, variant, removal};
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  std::vector<int> rest = mu.parts();
  int m;
  if (removal == PartRemoval::Last) {
    m = rest.back();
    rest.pop_back();
  } else {
    m = rest.front();
    rest.erase(rest.begin());
  }
  const Partition mu_minus(rest);
  Laurent total;
  for (int size = std::max(0, lambda.size() - m); size <= std::min(lambda.size(), n - m); ++size) {
    for (const Partition& nu : partitions_of(size)) {
      if (!lambda.contains(nu)) continue;
      const Laurent w = wtbar(lambda, nu);
      if (w.is_zero()) continue;
      const Laurent chi = mn_character(n - m, nu, mu_minus, variant, removal);
      if (chi.is_zero()) continue;
      total += g_coeff(lambda.size() - size, m, variant) * w * chi;
    }
  }
  std::lock_guard lock(memo_mutex);
  return memo.try_emplace(key, total).first->second;
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = std::find(labels.begin(), labels.end(), p);
  if (it == labels.end()) throw std::out_of_range("partition " + to_string(p) + " is not a table label");
  return static_cast<std::size_t>(it - labels.begin());
}

const Laurent& CharacterTable::at(const Partition& lambda, const Partition& mu) const {
  return entries[index_of(lambda)][index_of(mu)];
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("MIRHECKE_CACHE"); env && *env) return env;
  return ".mirhecke-cache";
}

namespace {

std::string variant_name(GVariant v) { return v == GVariant::Oracle ? "oracle" : "paper"; }

std::filesystem::path cache_file(const std::filesystem::path& dir, int n, GVariant v) {
  return dir / ("characters-n" + std::to_string(n) + "-" + variant_name(v) + ".json");
}

std::string entry_key(const Partition& lambda, const Partition& mu) { return to_string(lambda) + "|" + to_string(mu); }

bool load_cached(const std::filesystem::path& file, CharacterTable& table) {
  std::ifstream in(file);
  if (!in) return false;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("n").get<int>() != table.n || j.at("variant").get<std::string>() != variant_name(table.variant))
      return false;
    const auto& values = j.at("entries");
    for (std::size_t a = 0; a < table.labels.size(); ++a)
      for (std::size_t b = 0; b < table.labels.size(); ++b)
        table.entries[a][b] = parse_laurent(values.at(entry_key(table.labels[a], table.labels[b])).get<std::string>());
    return true;
  } catch (const std::exception&) {
    return false;  // unreadable cache is recomputed
  }
}

void store_cached(const std::filesystem::path& file, const CharacterTable& table) {
  nlohmann::json j;
  j["n"] = table.n;
  j["variant"] = variant_name(table.variant);
  nlohmann::json values = nlohmann::json::object();
  for (std::size_t a = 0; a < table.labels.size(); ++a)
    for (std::size_t b = 0; b < table.labels.size(); ++b)
      values[entry_key(table.labels[a], table.labels[b])] = to_string(table.entries[a][b]);
  j["entries"] = std::move(values);
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

CharacterTable character_table(int n, const TableOptions& options) {
  if (n < 1) throw std::invalid_argument("character_table: n must be positive");
  CharacterTable table;
  table.n = n;
  table.variant = options.variant;
  table.labels = partitions_up_to(n);
  const std::size_t size = table.labels.size();
  table.entries.assign(size, std::vector<Laurent>(size));

  const bool use_cache = options.cache_dir && options.removal == PartRemoval::Last;
  if (use_cache && load_cached(cache_file(*options.cache_dir, n, options.variant), table)) return table;

  const std::size_t cells = size * size;
  auto fill = [&](std::size_t begin, std::size_t step) {
    for (std::size_t c = begin; c < cells; c += step)
      table.entries[c / size][c % size] =
          mn_character(n, table.labels[c / size], table.labels[c % size], options.variant, options.removal);
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  if (jobs == 1) {
    fill(0, 1);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < jobs; ++t) workers.emplace_back(fill, t, jobs);
    for (auto& w : workers) w.join();
  }
  if (use_cache) store_cached(cache_file(*options.cache_dir, n, options.variant), table);
  return table;
}

bool vanishing_check(const CharacterTable& table) {
  for (std::size_t a = 0; a < table.labels.size(); ++a)
    for (std::size_t b = 0; b < table.labels.size(); ++b)
      if (table.labels[a].size() > table.labels[b].size() && !table.entries[a][b].is_zero()) return false;
  return true;
}

ClassPolyVector class_polynomials(const CharacterTable& table, const BasisIndex& idx, int r, int jobs) {
  validate(idx, table.n);
  const auto oracle = char_oracle(AlgebraElement::basis(idx), r, jobs);
  std::vector<Laurent> rhs(table.labels.size());
  for (const auto& [lambda, value] : oracle) rhs[table.index_of(lambda)] = value;
  const auto solution = solve_linear(table.entries, rhs);
  ClassPolyVector out{idx, {}};
  for (std::size_t i = 0; i < solution.size(); ++i) {
    if (!solution[i].is_laurent())
      throw ClassPolynomialDefect("class polynomial f^" + to_string(table.labels[i]) + " of " + to_string(idx) +
                                  " is not a Laurent polynomial: " + to_string(solution[i]));
    Laurent f = solution[i].to_laurent();
    if (!f.is_zero()) out.coeffs[table.labels[i]] = std::move(f);
  }
  return out;
}

ClassPolyVector class_polynomials(int n, const BasisIndex& idx) {
  return class_polynomials(character_table(n), idx, n);
}

std::string table_csv(const CharacterTable& table) {
  std::ostringstream out;
  out << "lambda";
  for (const auto& mu : table.labels) out << ',' << to_string(mu);
  out << '\n';
  for (std::size_t a = 0; a < table.labels.size(); ++a) {
    out << to_string(table.labels[a]);
    for (const auto& x : table.entries[a]) out << ',' << to_string(x);
    out << '\n';
  }
  return out.str();
}

}  // namespace mirhecke
