#include "skg/theorems.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/rational.hpp>

#ifndef SKG_DEFAULT_DATA_DIR
#define SKG_DEFAULT_DATA_DIR "data"
#endif

namespace skg {

namespace {

using Rational = boost::rational<long long>;

bool tail_two_regular(const Partition& lambda) {
  const auto& parts = lambda.parts();
  for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
    if (parts[i] == parts[i + 1]) return false;
  }
  return true;
}

Weight padded(const Partition& alpha, int d) {
  Weight w(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < alpha.length() && i < d; ++i) w[static_cast<std::size_t>(i)] = alpha.parts()[static_cast<std::size_t>(i)];
  return w;
}

std::optional<Partition> dominant_of(const Weight& w) {
  std::vector<int> parts;
  for (int x : w) {
    if (x > 0) parts.push_back(x);
  }
  if (parts.empty()) return std::nullopt;
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

// Number of weights in {1..d} whose sorted form is alpha.
long long rearrangements(const Partition& alpha, int d) {
  if (alpha.length() > d) return 0;
  std::map<int, int> mult;
  for (int x : alpha.parts()) ++mult[x];
  mult[0] = d - alpha.length();
  long long total = 1;
  int placed = 0;
  for (const auto& [value, m] : mult) {
    total *= static_cast<long long>(binomial(d - placed, m));
    placed += m;
  }
  return total;
}

std::string join_multiset(const Multiset& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [mu, c] : m) {
    if (c == 0) continue;
    os << (first ? "" : " ") << mu.to_display() << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

Multiset parse_multiset_literal(std::initializer_list<std::pair<const char*, long long>> items) {
  Multiset m;
  for (const auto& [text, c] : items) m[Partition::parse(text)] = c;
  return m;
}

}  // namespace

bool predict_iso(const Partition& lambda) {
  if (is_two_regular(lambda)) return true;
  return lambda.part(1) == lambda.part(2) && lambda.part(2) >= lambda.part(3) + 2 &&
         tail_two_regular(lambda);
}

int converse_threshold(const Partition& lambda, bool weaker) {
  const int n = lambda.size();
  int bound = n - 2;
  if (weaker && !predict_iso(lambda)) {
    if (!tail_two_regular(lambda)) {
      int r = 2;
      while (lambda.part(r) != lambda.part(r + 1)) ++r;
      bound = n + 1 - (lambda.part(r - 1) + lambda.part(r) + lambda.part(r + 1));
    } else {
      bound = n + 1 - (lambda.part(1) + lambda.part(2) + lambda.part(3));
    }
  }
  return std::max(1, bound);
}

bool IsoVerdict::consistent() const {
  for (const auto& [d, v] : verified_at) {
    if (d >= threshold && v != predicted) return false;
    if (predicted && !v) return false;
  }
  return true;
}

std::vector<IsoVerdict> verify_characterization(int n, bool weaker, const std::vector<int>& extra_d,
                                                const BuildOptions& options) {
  std::vector<IsoVerdict> out;
  for (const auto& lambda : partitions_of(n)) {
    IsoVerdict v{lambda, predict_iso(lambda), converse_threshold(lambda, weaker), {}};
    std::set<int> ds{v.threshold};
    ds.insert(extra_d.begin(), extra_d.end());
    for (int d : ds) v.verified_at.emplace_back(d, verify_iso(lambda, d, 2, options));
    out.push_back(std::move(v));
  }
  return out;
}

D1Verdict d1_predict(const Partition& lambda) {
  for (int j = 1; j < lambda.part(1); ++j) {
    const auto c = static_cast<std::uint64_t>(lambda.column_height(j) + 1);
    if (is_power_of_two(c)) continue;
    const std::uint64_t two_nu = c & (~c + 1);
    if (static_cast<std::uint64_t>(lambda.column_height(j + 1)) >= two_nu) return D1Verdict::Zero;
  }
  return D1Verdict::Line;
}

std::uint64_t hook_d2_dim(int a, int l) {
  if (a < 2 || l < 2) throw std::invalid_argument("hook_d2_dim needs a, l >= 2");
  const auto ua = static_cast<std::uint64_t>(a);
  const auto ul = static_cast<std::uint64_t>(l);
  return (l % 2 == 0) ? ua * ul / 2 : (ua + 1) * (ul + 1) / 2;
}

WeightTable frobenius_weights(int a, int l) {
  if (a < 2 || l < 2 || l % 2 != 0) throw std::invalid_argument("frobenius_weights needs a >= 2 and even l >= 2");
  const int k = l / 2 - 1;
  WeightTable out;
  for (int i = 0; i <= k; ++i) {
    for (int r = 0; r <= a - 1; ++r) {
      Weight w{2 * i + r + 1, 2 * (k - i) + (a - 1 - r) + 1};
      ++out[w];
    }
  }
  return out;
}

bool frobenius_weight_check(int a, int l, const BuildOptions& options) {
  auto expected = frobenius_weights(a, l);
  std::vector<int> parts{a};
  for (int x = 1; x < l; ++x) parts.push_back(1);
  auto g = build_gtensor_specht(Partition(parts), 2, 2, options);
  return g.weight_table() == expected;
}

std::map<Partition, std::uint64_t> table1_weight_counts(int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  auto basis = make_basis(Partition({2, 2, 1}), d, TabloidKind::skew_column(FieldPrime(2)));
  std::set<Weight> weights;
  for (const auto& gen : ker_q_generators(basis)) {
    weights.insert(weight_of(basis->rep(gen.terms().front().first), d));
  }
  std::map<Partition, std::uint64_t> out;
  for (const auto& w : weights) ++out[*dominant_of(w)];
  return out;
}

std::map<Partition, std::uint64_t> table1_expected(int d) {
  std::map<Partition, std::uint64_t> out;
  out[Partition::parse("2,1^3")] = 4 * binomial(d, 4);
  out[Partition::parse("2^2,1")] = 3 * binomial(d, 3);
  out[Partition::parse("3,1^2")] = 3 * binomial(d, 3);
  out[Partition::parse("3,2")] = 2 * binomial(d, 2);
  out[Partition::parse("4,1")] = 2 * binomial(d, 2);
  out[Partition::parse("5")] = static_cast<std::uint64_t>(d);
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

Multiset kostka_row(const Partition& mu) {
  const int n = mu.size();
  Multiset out;
  for (const auto& f : enumerate_fillings(mu, n, TableauClass::Semistandard)) {
    Weight w = weight_of(f, n);
    if (std::is_sorted(w.rbegin(), w.rend())) ++out[*dominant_of(w)];
  }
  return out;
}

std::optional<std::vector<std::pair<long long, long long>>> table2_polynomial(const Partition& mu) {
  static const std::map<std::string, std::vector<std::pair<long long, long long>>> table = {
      {"1,1,1,1,1", {{1, 120}, {-1, 12}, {7, 24}, {-5, 12}, {1, 5}}},
      {"2,1,1,1", {{1, 30}, {-1, 6}, {1, 6}, {1, 6}, {-1, 5}}},
      {"2,2,1", {{1, 30}, {0, 1}, {-1, 3}, {1, 2}, {-1, 5}}},
      {"3,1,1", {{0, 1}, {1, 6}, {-1, 2}, {1, 3}, {0, 1}}},
      {"3,2", {{0, 1}, {0, 1}, {1, 2}, {-1, 2}, {0, 1}}},
      {"4,1", {{0, 1}, {1, 3}, {0, 1}, {-1, 3}, {0, 1}}},
      {"5", {{0, 1}, {0, 1}, {0, 1}, {1, 1}, {0, 1}}},
  };
  auto it = table.find(mu.to_string());
  if (it == table.end()) return std::nullopt;
  return it->second;
}

long long table2_evaluate(const Partition& mu, int d) {
  auto poly = table2_polynomial(mu);
  if (!poly) throw std::invalid_argument("no tabulated polynomial for " + mu.to_display());
  Rational sum = 0;
  Rational power = d;
  for (int e = 1; e <= 5; ++e) {
    const auto& [num, den] = (*poly)[static_cast<std::size_t>(5 - e)];
    sum += Rational(num, den) * power;
    power *= d;
  }
  if (sum.denominator() != 1) throw std::logic_error("tabulated polynomial is not integral");
  return sum.numerator();
}

std::string DecompositionData::default_path() {
  if (const char* env = std::getenv("SKG_DECOMPOSITION_DATA"); env && *env) return env;
  return std::string(SKG_DEFAULT_DATA_DIR) + "/decomposition_p2.txt";
}

DecompositionData DecompositionData::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open decomposition data: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

DecompositionData DecompositionData::parse(std::string_view text) {
  DecompositionData data;
  static const std::regex term(R"(([0-9^,]+):([0-9]+))");
  std::istringstream lines{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto semi = line.find(';');
    if (semi == std::string::npos) {
      throw std::runtime_error("decomposition data line " + std::to_string(lineno) + ": missing ';'");
    }
    try {
      Partition mu = Partition::parse(line.substr(0, semi));
      if (data.rows_.count(mu)) throw std::runtime_error("duplicate row " + mu.to_display());
      Multiset row;
      std::string rest = line.substr(semi + 1);
      std::string leftover = std::regex_replace(rest, term, "");
      if (leftover.find_first_not_of(" ,\t\r") != std::string::npos) {
        throw std::runtime_error("unparsed text '" + leftover + "'");
      }
      for (std::sregex_iterator it(rest.begin(), rest.end(), term), end; it != end; ++it) {
        std::string label = (*it)[1].str();
        label.erase(0, label.find_first_not_of(','));
        label.erase(label.find_last_not_of(',') + 1);
        Partition nu = Partition::parse(label);
        if (row.count(nu)) throw std::runtime_error("repeated entry " + nu.to_display());
        row[nu] = std::stoll((*it)[2].str());
      }
      data.max_n_ = std::max(data.max_n_, mu.size());
      data.rows_.emplace(mu, std::move(row));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("decomposition data line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("decomposition data line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  data.validate();
  return data;
}

const Multiset& DecompositionData::row(const Partition& mu) const {
  auto it = rows_.find(mu);
  if (it == rows_.end()) throw std::invalid_argument("no decomposition data for " + mu.to_display());
  return it->second;
}

void DecompositionData::validate() {
  auto fail = [](const std::string& what) { throw std::runtime_error("decomposition data: " + what); };
  if (max_n_ < 1) fail("empty");
  if (max_n_ > 5) fail("only n <= 5 is supported");
  for (int n = 1; n <= max_n_; ++n) {
    for (const auto& mu : partitions_of(n)) {
      if (!rows_.count(mu)) fail("missing row " + mu.to_display());
    }
  }
  for (const auto& [mu, row] : rows_) {
    auto diag = row.find(mu);
    if (diag == row.end() || diag->second != 1) fail("diagonal entry of " + mu.to_display() + " is not 1");
    for (const auto& [nu, m] : row) {
      if (nu.size() != mu.size()) fail(nu.to_display() + " is not a partition of " + std::to_string(mu.size()));
      if (m <= 0) fail("nonpositive multiplicity in row " + mu.to_display());
      if (!dominates(mu, nu)) fail(nu.to_display() + " is not dominated by " + mu.to_display());
    }
  }
  // Characters of simples by unitriangular inversion, smallest partitions first.
  for (int n = 1; n <= max_n_; ++n) {
    auto parts = partitions_of(n);
    std::reverse(parts.begin(), parts.end());
    for (const auto& mu : parts) {
      Multiset ch = kostka_row(mu);
      for (const auto& [nu, m] : rows_.at(mu)) {
        if (nu == mu) continue;
        for (const auto& [alpha, c] : characters_.at(nu)) ch[alpha] -= m * c;
      }
      for (auto it = ch.begin(); it != ch.end();) {
        if (it->second < 0) fail("negative weight multiplicity in L" + mu.to_display());
        it = it->second == 0 ? ch.erase(it) : std::next(it);
      }
      if (ch.count(mu) == 0 || ch.at(mu) != 1) fail("highest weight of L" + mu.to_display() + " is not simple");
      for (const auto& [alpha, c] : ch) {
        if (!dominates(mu, alpha)) fail("weight " + alpha.to_display() + " of L" + mu.to_display() + " is not dominated");
      }
      characters_[mu] = std::move(ch);
    }
  }
  for (const auto& [mu, row] : rows_) {
    for (int d = 1; d <= 8; ++d) {
      const long long dl = dim_L(mu, d);
      if (dl < 0) fail("negative dimension for L" + mu.to_display());
      if ((dl == 0) != (mu.length() > d)) {
        fail("L" + mu.to_display() + " vanishing pattern is wrong at d = " + std::to_string(d));
      }
      long long from_character = 0;
      for (const auto& [alpha, c] : characters_.at(mu)) from_character += c * rearrangements(alpha, d);
      if (from_character != dl) fail("character and dimension of L" + mu.to_display() + " disagree");
      long long identity = 0;
      for (const auto& [nu, m] : row) identity += m * dim_L(nu, d);
      if (identity != static_cast<long long>(hook_content_dim(mu, d))) fail("dimension identity fails for " + mu.to_display());
      if (mu.size() == 5 && dl != table2_evaluate(mu, d)) {
        fail("L" + mu.to_display() + " disagrees with the tabulated polynomial at d = " + std::to_string(d));
      }
    }
  }
  if (max_n_ >= 5) {
    for (const auto& mu : partitions_of(5)) {
      if (!table2_polynomial(mu)) continue;
      for (int d = 1; d <= 8; ++d) {
        long long identity = 0;
        for (const auto& [nu, m] : rows_.at(mu)) identity += m * table2_evaluate(nu, d);
        if (identity != static_cast<long long>(hook_content_dim(mu, d))) {
          fail("tabulated polynomials violate the dimension identity for " + mu.to_display());
        }
      }
    }
  }
}

std::int64_t DecompositionData::dim_L(const Partition& mu, int d) const {
  const auto& r = row(mu);
  auto total = static_cast<std::int64_t>(hook_content_dim(mu, d));
  for (const auto& [nu, m] : r) {
    if (nu == mu) continue;
    total -= m * dim_L(nu, d);
  }
  return total;
}

const Multiset& DecompositionData::character_L(const Partition& mu) const {
  auto it = characters_.find(mu);
  if (it == characters_.end()) throw std::invalid_argument("no decomposition data for " + mu.to_display());
  return it->second;
}

Multiset nabla_factors(const Partition& lambda, const DecompositionData& data) {
  return data.row(lambda);
}

FactorSolution composition_factors_U(const Partition& lambda, const DecompositionData& data,
                                     const BuildOptions& options) {
  const int n = lambda.size();
  if (n > data.max_n()) throw std::invalid_argument("no decomposition data for n = " + std::to_string(n));
  auto g = build_gtensor_specht(lambda, n, 2, options);
  auto u_table = u_lambda_weight_table(g);
  auto u_at = [&](const Partition& alpha) -> long long {
    auto it = u_table.find(padded(alpha, n));
    return it == u_table.end() ? 0 : static_cast<long long>(it->second);
  };

  FactorSolution sol;
  const auto parts = partitions_of(n);  // decreasing lex order refines dominance
  for (const auto& nu : parts) {
    long long m = u_at(nu);
    for (const auto& [kappa, c] : sol.factors) m -= c * [&] {
      const auto& ch = data.character_L(kappa);
      auto it = ch.find(nu);
      return it == ch.end() ? 0LL : it->second;
    }();
    if (m < 0) throw std::runtime_error("negative multiplicity of L" + nu.to_display() + " in U" + lambda.to_display());
    if (m > 0) sol.factors[nu] = m;
  }
  for (const auto& alpha : parts) {
    long long predicted = 0;
    for (const auto& [kappa, c] : sol.factors) {
      const auto& ch = data.character_L(kappa);
      if (auto it = ch.find(alpha); it != ch.end()) predicted += c * it->second;
    }
    if (predicted != u_at(alpha)) throw std::runtime_error("inconsistent weight multiplicities for U" + lambda.to_display());
  }
  const int points = static_cast<int>(parts.size());
  for (int d = 1; d <= points; ++d) {
    const auto u = static_cast<long long>(u_lambda_dim(lambda, d, options));
    long long s = 0;
    for (const auto& [kappa, c] : sol.factors) s += c * data.dim_L(kappa, d);
    sol.evaluations.push_back({d, {u, s}});
    sol.evaluations_match = sol.evaluations_match && u == s;
  }
  return sol;
}

bool nabla_filtration_feasible(const Multiset& factors, int n, const DecompositionData& data) {
  Multiset remaining;
  long long total = 0;
  for (const auto& [nu, c] : factors) {
    if (c < 0) throw std::invalid_argument("negative multiplicity");
    if (nu.size() != n) throw std::invalid_argument("factor is not a partition of n");
    if (c > 0) remaining[nu] = c;
    total += c;
  }
  const auto parts = partitions_of(n);
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == parts.size()) {
      return std::all_of(remaining.begin(), remaining.end(), [](const auto& e) { return e.second == 0; });
    }
    const auto& row = data.row(parts[k]);
    long long used = 0;
    bool found = false;
    while (true) {
      if (search(k + 1)) {
        found = true;
        break;
      }
      if (used == total) break;
      bool ok = true;
      for (const auto& [nu, m] : row) {
        remaining[nu] -= m;
        ok = ok && remaining[nu] >= 0;
      }
      ++used;
      if (!ok) break;
    }
    for (long long back = 0; back < used; ++back) {
      for (const auto& [nu, m] : row) remaining[nu] += m;
    }
    return found;
  };
  return search(0);
}

int interpolation_degree(const std::vector<std::pair<long long, long long>>& points) {
  const std::size_t m = points.size();
  std::vector<Rational> coef;
  for (const auto& pt : points) coef.emplace_back(pt.second);
  int degree = -1;
  if (m > 0 && coef[0].numerator() != 0) degree = 0;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      const long long dx = points[i].first - points[i - level].first;
      if (dx == 0) throw std::invalid_argument("interpolation nodes must be distinct");
      coef[i] = (coef[i] - coef[i - 1]) / Rational(dx);
      if (i == level) break;
    }
    if (coef[level].numerator() != 0) degree = static_cast<int>(level);
  }
  return degree;
}

bool SuiteReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm1", "thm2", "d1", "hooks-d2", "tables", "example61"};
  return names;
}

Table3 table3(int n, const DecompositionData& data, const BuildOptions& options) {
  Table3 t{n, {}, {}};
  std::set<Partition> columns;
  auto parts = partitions_of(n);
  std::reverse(parts.begin(), parts.end());
  for (const auto& lambda : parts) {
    auto sol = composition_factors_U(lambda, data, options);
    if (sol.factors.empty()) continue;
    for (const auto& [mu, c] : sol.factors) columns.insert(mu);
    t.rows.emplace_back(lambda, sol.factors);
  }
  t.columns.assign(columns.begin(), columns.end());
  return t;
}

namespace {

std::string csv_label(const Partition& p) { return "\"" + p.to_display() + "\""; }

}  // namespace

std::string table1_csv(int d) {
  std::ostringstream os;
  os << "dominant_weight,number_of_weights\n";
  for (const auto& [mu, count] : table1_weight_counts(d)) os << csv_label(mu) << "," << count << "\n";
  return os.str();
}

std::string table3_csv(const Table3& table) {
  std::ostringstream os;
  os << "lambda";
  for (const auto& c : table.columns) os << "," << csv_label(c);
  os << "\n";
  for (const auto& [lambda, factors] : table.rows) {
    os << csv_label(lambda);
    for (const auto& c : table.columns) {
      auto it = factors.find(c);
      os << "," << (it == factors.end() ? 0 : it->second);
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::string yesno(bool b) { return b ? "true" : "false"; }

CheckItem item(const Partition* lambda, int d, int p, std::string kind, std::string expected, std::string got) {
  CheckItem c;
  c.lambda = lambda ? lambda->to_display() : "";
  c.d = d;
  c.p = p;
  c.kind = std::move(kind);
  c.pass = expected == got;
  c.expected = std::move(expected);
  c.got = std::move(got);
  return c;
}

std::string weight_table_string(const WeightTable& t) {
  std::ostringstream os;
  for (const auto& [w, m] : t) {
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "):" << m << " ";
  }
  return os.str();
}

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

void suite_thm1(const SuiteOptions& o, SuiteReport& r) {
  BuildOptions b{PhiPolicy::LeastColumnGreatestRow, o.threads};
  for (int n = std::max(1, o.n_min); n <= pick(o.n_max, 6); ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int p : {3, 5}) {
        for (int d = 1; d <= 4; ++d) {
          auto g = build_gtensor_specht(lambda, d, p, b);
          auto nab = build_dual_weyl(lambda, d, p, b);
          r.items.push_back(item(&lambda, d, p, "verify_iso", "true", yesno(verify_iso(g))));
          r.items.push_back(item(&lambda, d, p, "gtensor_dim", std::to_string(nab.dim()), std::to_string(g.dim())));
          r.items.push_back(item(&lambda, d, p, "gtensor_weights", weight_table_string(nab.weight_table()),
                                 weight_table_string(g.weight_table())));
        }
      }
    }
  }
}

const std::map<int, std::set<Partition>>& small_noniso_sets() {
  static const std::map<int, std::set<Partition>> sets = {
      {2, {Partition::parse("1^2")}},
      {3, {Partition::parse("1^3")}},
      {4, {Partition::parse("1^4"), Partition::parse("2,1^2")}},
      {5, {Partition::parse("1^5"), Partition::parse("2,1^3"), Partition::parse("2^2,1"),
           Partition::parse("3,1^2")}},
  };
  return sets;
}

void suite_thm2(const SuiteOptions& o, SuiteReport& r) {
  BuildOptions b{PhiPolicy::LeastColumnGreatestRow, o.threads};
  for (int n = std::max(1, o.n_min); n <= pick(o.n_max, 6); ++n) {
    std::set<Partition> non_iso;
    for (const auto& v : verify_characterization(n, o.weaker_bound, {n}, b)) {
      for (const auto& [d, got] : v.verified_at) {
        const bool claimed = d >= v.threshold;
        std::string expected = claimed ? yesno(v.predicted) : (v.predicted ? "true" : "any");
        std::string g = yesno(got);
        auto c = item(&v.lambda, d, 2, claimed ? "iso_characterization" : "iso_if_direction", expected, g);
        if (!claimed && !v.predicted) c.pass = true;
        r.items.push_back(std::move(c));
        if (d == std::max(1, n - 2) && !got) non_iso.insert(v.lambda);
      }
    }
    if (!o.weaker_bound) {
      auto it = small_noniso_sets().find(n);
      if (it != small_noniso_sets().end()) {
        auto fmt = [](const std::set<Partition>& s) {
          std::string out;
          for (const auto& p : s) out += p.to_display() + " ";
          return out;
        };
        r.items.push_back(item(nullptr, std::max(1, n - 2), 2, "non_iso_set_n" + std::to_string(n),
                               fmt(it->second), fmt(non_iso)));
      }
    }
  }
}

void suite_d1(const SuiteOptions& o, SuiteReport& r) {
  BuildOptions b{PhiPolicy::LeastColumnGreatestRow, o.threads};
  for (int n = std::max(1, o.n_min); n <= pick(o.n_max, 10); ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto predicted = d1_predict(lambda) == D1Verdict::Zero ? 0 : 1;
      const auto built = build_gtensor_specht(lambda, 1, 2, b).dim();
      r.items.push_back(item(&lambda, 1, 2, "d1_dim", std::to_string(predicted), std::to_string(built)));
      const int a = lambda.part(1);
      const int l = lambda.length();
      const bool hook = a >= 2 && l >= 2 && lambda.part(2) == 1;
      if (hook) {
        r.items.push_back(item(&lambda, 1, 2, "d1_hook_parity", std::to_string(l % 2 == 0 ? 0 : 1),
                               std::to_string(built)));
      }
    }
  }
}

void suite_hooks_d2(const SuiteOptions& o, SuiteReport& r) {
  BuildOptions b{PhiPolicy::LeastColumnGreatestRow, o.threads};
  for (int a = 2; a <= 6; ++a) {
    for (int l = 2; l <= 6; ++l) {
      std::vector<int> parts{a};
      for (int x = 1; x < l; ++x) parts.push_back(1);
      Partition lambda(parts);
      auto g = build_gtensor_specht(lambda, 2, 2, b);
      r.items.push_back(item(&lambda, 2, 2, "hook_d2_dim", std::to_string(hook_d2_dim(a, l)), std::to_string(g.dim())));
      if (l % 2 == 0) {
        r.items.push_back(item(&lambda, 2, 2, "frobenius_weights", weight_table_string(frobenius_weights(a, l)),
                               weight_table_string(g.weight_table())));
      }
    }
  }
  Partition two_one({2, 1});
  r.items.push_back(item(&two_one, 2, 2, "two_row_cross_check", std::to_string(hook_content_dim(two_one, 2)),
                         std::to_string(build_gtensor_specht(two_one, 2, 2, b).dim())));
}

void suite_tables(const SuiteOptions& o, SuiteReport& r) {
  BuildOptions b{PhiPolicy::LeastColumnGreatestRow, o.threads};
  const Partition p221({2, 2, 1});
  for (int d : {4, 5, 6}) {
    auto got = table1_weight_counts(d);
    auto want = table1_expected(d);
    for (const auto& [mu, c] : want) {
      auto it = got.find(mu);
      r.items.push_back(item(&mu, d, 2, "table1_count", std::to_string(c), std::to_string(it == got.end() ? 0 : it->second)));
    }
    r.items.push_back(item(&p221, d, 2, "table1_classes", std::to_string(want.size()), std::to_string(got.size())));
  }

  std::optional<DecompositionData> data;
  try {
    data = DecompositionData::load_file(o.data_path.empty() ? DecompositionData::default_path() : o.data_path);
    r.items.push_back(item(nullptr, 0, 2, "decomposition_data_valid", "true", "true"));
  } catch (const std::exception& e) {
    r.items.push_back(item(nullptr, 0, 2, "decomposition_data_valid", "true", e.what()));
    return;
  }
  for (const auto& mu : partitions_of(5)) {
    for (int d = 1; d <= 8; ++d) {
      r.items.push_back(item(&mu, d, 2, "table2_dim_L", std::to_string(table2_evaluate(mu, d)),
                             std::to_string(data->dim_L(mu, d))));
    }
  }

  const std::map<Partition, Multiset> expected3 = {
      {Partition::parse("1^2"), parse_multiset_literal({{"2", 1}})},
      {Partition::parse("1^3"), parse_multiset_literal({{"3", 1}})},
      {Partition::parse("1^4"), parse_multiset_literal({{"2^2", 1}, {"3,1", 1}, {"4", 1}})},
      {Partition::parse("2,1^2"), parse_multiset_literal({{"2^2", 2}, {"3,1", 1}, {"4", 1}})},
      {Partition::parse("1^5"), parse_multiset_literal({{"3,1^2", 1}, {"3,2", 1}, {"5", 1}})},
      {Partition::parse("2,1^3"), parse_multiset_literal({{"4,1", 1}})},
      {Partition::parse("2^2,1"), parse_multiset_literal({{"3,1^2", 1}, {"3,2", 1}, {"5", 1}})},
      {Partition::parse("3,1^2"), parse_multiset_literal({{"3,1^2", 1}, {"3,2", 2}, {"5", 1}})},
  };
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      auto it = expected3.find(lambda);
      const Multiset want = it == expected3.end() ? Multiset{} : it->second;
      try {
        auto sol = composition_factors_U(lambda, *data, b);
        r.items.push_back(item(&lambda, n, 2, "table3_factors", join_multiset(want), join_multiset(sol.factors)));
        r.items.push_back(item(&lambda, 0, 2, "table3_dimension_check", "true", yesno(sol.evaluations_match)));
      } catch (const std::exception& e) {
        r.items.push_back(item(&lambda, n, 2, "table3_factors", join_multiset(want), e.what()));
      }
    }
  }

  for (int d = 4; d <= 7; ++d) {
    const long long want = (static_cast<long long>(d) * d * d * d + 5LL * d * d) / 6;
    r.items.push_back(item(&p221, d, 2, "u_dim_closed_form", std::to_string(want),
                           std::to_string(u_lambda_dim(p221, d, b))));
  }

  Multiset g_factors = nabla_factors(p221, *data);
  for (const auto& [mu, c] : composition_factors_U(p221, *data, b).factors) g_factors[mu] += c;
  r.items.push_back(item(&p221, 0, 2, "nabla_filtration_feasible", "false",
                         yesno(nabla_filtration_feasible(g_factors, 5, *data))));

  for (int n : {4, 5}) {
    for (const auto& lambda : partitions_of(n)) {
      std::vector<std::pair<long long, long long>> pts;
      for (int d = n - 1; d <= n + 4; ++d) pts.emplace_back(d, static_cast<long long>(u_lambda_dim(lambda, d, b)));
      const int deg = interpolation_degree(pts);
      auto c = item(&lambda, 0, 2, "u_degree_bound", "<=" + std::to_string(n - 1), std::to_string(deg));
      c.pass = deg <= n - 1;
      r.items.push_back(std::move(c));
    }
  }
}

void suite_example61(const SuiteOptions& o, SuiteReport& r) {
  BuildOptions b{PhiPolicy::LeastColumnGreatestRow, o.threads};
  const Partition lambda({4, 3, 2, 1, 1});
  r.items.push_back(item(&lambda, 2, 2, "verify_iso", "true", yesno(verify_iso(lambda, 2, 2, b))));
  r.items.push_back(item(&lambda, 0, 2, "predict_iso", "false", yesno(predict_iso(lambda))));
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  SuiteReport r{std::string(name), {}};
  if (name == "thm1") {
    suite_thm1(options, r);
  } else if (name == "thm2") {
    suite_thm2(options, r);
  } else if (name == "d1") {
    suite_d1(options, r);
  } else if (name == "hooks-d2") {
    suite_hooks_d2(options, r);
  } else if (name == "tables") {
    suite_tables(options, r);
  } else if (name == "example61") {
    suite_example61(options, r);
  } else if (name == "all") {
    for (const auto& s : suite_names()) {
      auto sub = run_suite(s, options);
      for (auto& c : sub.items) {
        c.kind = s + ":" + c.kind;
        r.items.push_back(std::move(c));
      }
    }
  } else {
    throw std::invalid_argument("unknown suite: " + std::string(name));
  }
  return r;
}

}  // namespace skg
