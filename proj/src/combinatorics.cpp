#include "skg/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skg {

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad integer in partition: '" + std::string(s) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("partition must be nonempty");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  auto data = std::make_shared<Data>();
  data->n = std::accumulate(parts.begin(), parts.end(), 0);
  data->conj.assign(static_cast<std::size_t>(parts.front()), 0);
  for (int p : parts) {
    for (int j = 0; j < p; ++j) ++data->conj[static_cast<std::size_t>(j)];
  }
  int offset = 0;
  for (std::size_t j = 0; j < data->conj.size(); ++j) {
    data->col_start.push_back(offset);
    for (int i = 1; i <= data->conj[j]; ++i) {
      data->boxes.push_back({i, static_cast<int>(j) + 1});
    }
    offset += data->conj[j];
  }
  data->parts = std::move(parts);
  data_ = std::move(data);
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw std::invalid_argument("empty partition");
  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    auto caret = item.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(item));
    } else {
      int value = parse_int(trim(item.substr(0, caret)));
      int times = parse_int(trim(item.substr(caret + 1)));
      if (times < 1) throw std::invalid_argument("exponent must be positive");
      parts.insert(parts.end(), static_cast<std::size_t>(times), value);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const { return Partition(data_->conj); }

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? data_->parts[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::column_height(int j) const {
  return (j >= 1 && j <= num_columns()) ? data_->conj[static_cast<std::size_t>(j - 1)] : 0;
}

bool Partition::contains(Box b) const {
  return b.row >= 1 && b.col >= 1 && b.row <= length() && b.col <= part(b.row);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts()[i]);
  }
  return out;
}

std::string Partition::to_display() const {
  std::string out = "(";
  const auto& p = parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t k = i;
    while (k < p.size() && p[k] == p[i]) ++k;
    if (i) out += ',';
    out += std::to_string(p[i]);
    if (k - i > 1) out += "^" + std::to_string(k - i);
    i = k;
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    // Next partition in decreasing lex order.
    int rem = 0;
    while (!cur.empty() && cur.back() == 1) {
      ++rem;
      cur.pop_back();
    }
    if (cur.empty()) break;
    int v = --cur.back();
    ++rem;
    while (rem > 0) {
      int take = std::min(v, rem);
      cur.push_back(take);
      rem -= take;
    }
  }
  return out;
}

bool dominates(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw std::invalid_argument("dominance needs equal sizes");
  int a = 0;
  int b = 0;
  int len = std::max(mu.length(), nu.length());
  for (int i = 1; i <= len; ++i) {
    a += mu.part(i);
    b += nu.part(i);
    if (a < b) return false;
  }
  return true;
}

bool is_two_regular(const Partition& lambda) {
  const auto& p = lambda.parts();
  return std::adjacent_find(p.begin(), p.end()) == p.end();
}

std::size_t FillingHash::operator()(const Filling& f) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : f) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

Weight weight_of(std::span<const std::uint8_t> filling, int d) {
  Weight w(static_cast<std::size_t>(d), 0);
  for (auto v : filling) {
    if (v < 1 || v > d) throw std::out_of_range("entry outside the alphabet");
    ++w[v - 1u];
  }
  return w;
}

Tableau::Tableau(Partition shape, Filling entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(shape_.size())) {
    throw std::invalid_argument("tableau entry count does not match its shape");
  }
  for (auto v : entries_) {
    if (v < 1) throw std::invalid_argument("tableau entries must be >= 1");
  }
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  Partition shape(parts);
  Filling f(static_cast<std::size_t>(shape.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      int v = rows[i][j];
      if (v < 1 || v > 255) throw std::invalid_argument("entry out of range");
      f[shape.position({static_cast<int>(i) + 1, static_cast<int>(j) + 1})] =
          static_cast<std::uint8_t>(v);
    }
  }
  return Tableau(std::move(shape), std::move(f));
}

void Tableau::set(Box b, int value) {
  if (!shape_.contains(b)) throw std::out_of_range("box outside the diagram");
  if (value < 1 || value > 255) throw std::invalid_argument("entry out of range");
  entries_[shape_.position(b)] = static_cast<std::uint8_t>(value);
}

int Tableau::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= shape_.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= shape_.part(i); ++j) row.push_back(at(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  os << '[';
  auto rs = rows();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < rs[i].size(); ++j) {
      if (j) os << ',';
      os << rs[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

enum class Mono { None, Weak, Strict };

struct ClassRule {
  Mono rows;
  Mono cols;
};

ClassRule rule_for(TableauClass cls) {
  switch (cls) {
    case TableauClass::All: return {Mono::None, Mono::None};
    case TableauClass::RowStandard: return {Mono::Strict, Mono::None};
    case TableauClass::ColumnStandard: return {Mono::None, Mono::Strict};
    case TableauClass::RowSemistandard: return {Mono::Weak, Mono::None};
    case TableauClass::ColumnSemistandard: return {Mono::None, Mono::Weak};
    case TableauClass::Standard: return {Mono::Strict, Mono::Strict};
    case TableauClass::Semistandard: return {Mono::Weak, Mono::Strict};
    case TableauClass::RowAndColumnSemistandard: return {Mono::Weak, Mono::Weak};
  }
  return {Mono::None, Mono::None};
}

bool ok(Mono m, int before, int after) {
  switch (m) {
    case Mono::None: return true;
    case Mono::Weak: return before <= after;
    case Mono::Strict: return before < after;
  }
  return true;
}

bool rows_ok(const Tableau& t, Mono m) {
  const auto& s = t.shape();
  for (int i = 1; i <= s.length(); ++i) {
    for (int j = 1; j < s.part(i); ++j) {
      if (!ok(m, t.at(i, j), t.at(i, j + 1))) return false;
    }
  }
  return true;
}

bool cols_ok(const Tableau& t, Mono m) {
  const auto& s = t.shape();
  for (int j = 1; j <= s.num_columns(); ++j) {
    for (int i = 1; i < s.column_height(j); ++i) {
      if (!ok(m, t.at(i, j), t.at(i + 1, j))) return false;
    }
  }
  return true;
}

}  // namespace

bool Tableau::is_row_standard() const { return rows_ok(*this, Mono::Strict); }
bool Tableau::is_row_semistandard() const { return rows_ok(*this, Mono::Weak); }
bool Tableau::is_column_standard() const { return cols_ok(*this, Mono::Strict); }
bool Tableau::is_column_semistandard() const { return cols_ok(*this, Mono::Weak); }

bool Tableau::has_repeated_column_entry() const {
  for (int j = 1; j <= shape_.num_columns(); ++j) {
    auto start = entries_.begin() + static_cast<std::ptrdiff_t>(shape_.column_start(j));
    std::vector<std::uint8_t> col(start, start + shape_.column_height(j));
    std::sort(col.begin(), col.end());
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) return true;
  }
  return false;
}

bool in_class(const Tableau& t, TableauClass cls) {
  auto r = rule_for(cls);
  return rows_ok(t, r.rows) && cols_ok(t, r.cols);
}

std::vector<Filling> enumerate_fillings(const Partition& lambda, int d, TableauClass cls) {
  if (d < 1) throw std::invalid_argument("alphabet size d must be >= 1");
  if (d > 255) throw std::invalid_argument("alphabet size d must be <= 255");
  const auto rule = rule_for(cls);
  const std::size_t n = static_cast<std::size_t>(lambda.size());
  std::vector<Filling> out;
  Filling cur(n, 0);
  // Depth-first over positions in column-major order; values ascending, so
  // output is lexicographic on the column-major reading.
  std::vector<int> lower(n + 1, 1);
  std::size_t pos = 0;
  std::vector<int> next(n, 0);
  auto lower_bound_at = [&](std::size_t p) {
    Box b = lambda.box_at(p);
    int lo = 1;
    if (b.row > 1) {
      int above = cur[p - 1];
      if (rule.cols == Mono::Weak) lo = std::max(lo, above);
      if (rule.cols == Mono::Strict) lo = std::max(lo, above + 1);
    }
    if (b.col > 1) {
      int left = cur[lambda.position({b.row, b.col - 1})];
      if (rule.rows == Mono::Weak) lo = std::max(lo, left);
      if (rule.rows == Mono::Strict) lo = std::max(lo, left + 1);
    }
    return lo;
  };
  if (n == 0) return out;
  next[0] = lower_bound_at(0);
  while (true) {
    if (next[pos] > d) {
      if (pos == 0) break;
      --pos;
      ++next[pos];
      continue;
    }
    cur[pos] = static_cast<std::uint8_t>(next[pos]);
    if (pos + 1 == n) {
      out.push_back(cur);
      ++next[pos];
      continue;
    }
    ++pos;
    next[pos] = lower_bound_at(pos);
  }
  return out;
}

std::vector<Tableau> enumerate_tableaux(const Partition& lambda, int d, TableauClass cls) {
  std::vector<Tableau> out;
  for (auto& f : enumerate_fillings(lambda, d, cls)) out.emplace_back(lambda, std::move(f));
  return out;
}

ColOrder col_compare(const Partition& shape, std::span<const std::uint8_t> t,
                     std::span<const std::uint8_t> u) {
  if (t.size() != u.size() || t.size() != static_cast<std::size_t>(shape.size())) {
    throw std::invalid_argument("col_compare: shape mismatch");
  }
  int maxv = 0;
  for (auto v : t) maxv = std::max<int>(maxv, v);
  for (auto v : u) maxv = std::max<int>(maxv, v);
  const int cols = shape.num_columns();
  // diff[j][m] = mult of m in col_j(t) minus mult in col_j(u)
  std::vector<int> diff(static_cast<std::size_t>(cols * (maxv + 1)), 0);
  for (std::size_t p = 0; p < t.size(); ++p) {
    int j = shape.box_at(p).col - 1;
    ++diff[static_cast<std::size_t>(j * (maxv + 1) + t[p])];
    --diff[static_cast<std::size_t>(j * (maxv + 1) + u[p])];
  }
  for (int m = maxv; m >= 1; --m) {
    for (int j = 0; j < cols; ++j) {
      int dlt = diff[static_cast<std::size_t>(j * (maxv + 1) + m)];
      if (dlt > 0) return ColOrder::Greater;
      if (dlt < 0) return ColOrder::Less;
    }
  }
  return ColOrder::Equivalent;
}

ColOrder col_compare(const Tableau& t, const Tableau& u) {
  if (!(t.shape() == u.shape())) throw std::invalid_argument("col_compare: shape mismatch");
  return col_compare(t.shape(), t.entries(), u.entries());
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t hook_content_dim(const Partition& lambda, int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (lambda.length() > d) return 0;
  // Cancel every hook against the contents before multiplying.
  std::vector<std::int64_t> num;
  std::vector<std::int64_t> den;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      num.push_back(d + j - i);
      den.push_back((lambda.part(i) - j) + (lambda.column_height(j) - i) + 1);
    }
  }
  for (auto& h : den) {
    for (auto& a : num) {
      auto g = std::gcd(a, h);
      a /= g;
      h /= g;
      if (h == 1) break;
    }
    if (h != 1) throw std::logic_error("hook content cancellation failed");
  }
  unsigned __int128 r = 1;
  for (auto a : num) {
    r *= static_cast<unsigned __int128>(a);
    if (r > UINT64_MAX) throw std::overflow_error("hook content overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t count_syt(const Partition& lambda) {
  std::vector<std::int64_t> num;
  std::vector<std::int64_t> den;
  for (int k = 2; k <= lambda.size(); ++k) num.push_back(k);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      den.push_back((lambda.part(i) - j) + (lambda.column_height(j) - i) + 1);
    }
  }
  for (auto& h : den) {
    for (auto& a : num) {
      auto g = std::gcd(a, h);
      a /= g;
      h /= g;
      if (h == 1) break;
    }
    if (h != 1) throw std::logic_error("hook length cancellation failed");
  }
  unsigned __int128 r = 1;
  for (auto a : num) {
    r *= static_cast<unsigned __int128>(a);
    if (r > UINT64_MAX) throw std::overflow_error("hook length overflow");
  }
  return static_cast<std::uint64_t>(r);
}

int binom_parity(std::uint64_t a, std::uint64_t b) { return (a & b) == 0 ? 1 : 0; }

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

std::optional<std::uint64_t> min_odd_binomial_index(std::uint64_t c) {
  if (c < 2) throw std::invalid_argument("min_odd_binomial_index requires c >= 2");
  if (is_power_of_two(c)) return std::nullopt;
  return c & (~c + 1);
}

}  // namespace skg
