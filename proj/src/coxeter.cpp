#include "bihecke/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bihecke {

std::vector<int> index_members(IndexSet s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

std::string format_index_set(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : index_members(s)) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

namespace {

std::string trim(std::string_view t) {
  std::size_t b = 0, e = t.size();
  while (b < e && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(t[e - 1]))) --e;
  return std::string(t.substr(b, e - b));
}

int parse_int(std::string_view t, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty())
    throw DomainError("invalid group descriptor: " + std::string(whole));
  return v;
}

GroupDescriptor parse_factor(std::string_view t, std::string_view whole) {
  std::string s = trim(t);
  if (s.empty()) throw DomainError("invalid group descriptor: " + std::string(whole));
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string rest = s.substr(1);
  if (f == 'I') {
    // I2(p) or I2p
    if (rest.size() < 2 || rest[0] != '2') throw DomainError("invalid group descriptor: " + std::string(whole));
    std::string p = rest.substr(1);
    if (!p.empty() && p.front() == '(') {
      if (p.back() != ')') throw DomainError("invalid group descriptor: " + std::string(whole));
      p = p.substr(1, p.size() - 2);
    }
    return GroupDescriptor::I2(parse_int(p, whole));
  }
  if (f == 'G') {
    if (rest != "2") throw DomainError("invalid group descriptor: " + std::string(whole));
    return GroupDescriptor::I2(6);
  }
  if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
  int n = parse_int(rest, whole);
  switch (f) {
    case 'A': return GroupDescriptor::A(n);
    case 'B': return GroupDescriptor::B(n);
    case 'D': return GroupDescriptor::D(n);
    default: throw DomainError("invalid group descriptor: " + std::string(whole));
  }
}

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

using Perm = std::vector<std::uint16_t>;

void generators_of(const GroupDescriptor& d, int& points, std::vector<Perm>& gens) {
  auto identity = [](int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  };
  switch (d.family) {
    case Family::A: {
      points = d.n + 1;
      for (int i = 0; i < d.n; ++i) {
        Perm p = identity(points);
        std::swap(p[i], p[i + 1]);
        gens.push_back(p);
      }
      return;
    }
    case Family::B:
    case Family::D: {
      // Point k-1 is +k and point n+k-1 is -k.
      int n = d.n;
      points = 2 * n;
      for (int i = 0; i + 1 < n; ++i) {
        Perm p = identity(points);
        std::swap(p[i], p[i + 1]);
        std::swap(p[n + i], p[n + i + 1]);
        gens.push_back(p);
      }
      Perm p = identity(points);
      if (d.family == Family::B) {
        std::swap(p[n - 1], p[2 * n - 1]);
      } else {
        std::swap(p[n - 2], p[2 * n - 1]);
        std::swap(p[n - 1], p[2 * n - 2]);
      }
      gens.push_back(p);
      return;
    }
    case Family::I2: {
      if (d.n == 2) {
        generators_of(GroupDescriptor::product({GroupDescriptor::A(1), GroupDescriptor::A(1)}), points, gens);
        return;
      }
      int p = d.n;
      points = p;
      Perm a(p), b(p);
      for (int x = 0; x < p; ++x) {
        a[x] = static_cast<std::uint16_t>((p - x) % p);
        b[x] = static_cast<std::uint16_t>(((1 - x) % p + p) % p);
      }
      gens = {a, b};
      return;
    }
    case Family::Product: {
      points = 0;
      std::vector<std::pair<int, std::vector<Perm>>> parts;
      for (const auto& f : d.factors) {
        int pts = 0;
        std::vector<Perm> g;
        generators_of(f, pts, g);
        parts.emplace_back(pts, std::move(g));
        points += pts;
      }
      int offset = 0;
      for (auto& [pts, g] : parts) {
        for (auto& local : g) {
          Perm p = identity(points);
          for (int x = 0; x < pts; ++x) p[offset + x] = static_cast<std::uint16_t>(offset + local[x]);
          gens.push_back(p);
        }
        offset += pts;
      }
      return;
    }
  }
}

std::string key_of(std::span<const std::uint16_t> a) {
  return std::string(reinterpret_cast<const char*>(a.data()), a.size() * sizeof(std::uint16_t));
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  std::string s = trim(text);
  std::vector<GroupDescriptor> fs;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (depth == 0 && (s[i] == 'x' || s[i] == 'X' || s[i] == '*'))) {
      fs.push_back(parse_factor(std::string_view(s).substr(start, i - start), text));
      start = i + 1;
    }
  }
  GroupDescriptor d = fs.size() == 1 ? fs.front() : product(std::move(fs));
  d.validate();
  return d;
}

void GroupDescriptor::validate() const {
  switch (family) {
    case Family::A:
      if (n < 0) throw DomainError("type A needs rank >= 0");
      break;
    case Family::B:
      if (n < 2) throw DomainError("type B needs rank >= 2");
      break;
    case Family::D:
      if (n < 2) throw DomainError("type D needs rank >= 2");
      break;
    case Family::I2:
      if (n < 2) throw DomainError("type I2(p) needs p >= 2");
      break;
    case Family::Product:
      if (factors.empty()) throw DomainError("empty product descriptor");
      for (const auto& f : factors) f.validate();
      break;
  }
  if (rank() > 31) throw DomainError("rank above 31 is not supported");
}

std::string GroupDescriptor::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(n);
    case Family::B: return "B" + std::to_string(n);
    case Family::D: return "D" + std::to_string(n);
    case Family::I2: return "I2(" + std::to_string(n) + ")";
    case Family::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "x" : "") + factors[i].name();
      return out;
    }
  }
  return {};
}

int GroupDescriptor::rank() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::D: return n;
    case Family::I2: return 2;
    case Family::Product: {
      int r = 0;
      for (const auto& f : factors) r += f.rank();
      return r;
    }
  }
  return 0;
}

double GroupDescriptor::order() const {
  switch (family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return std::ldexp(factorial(n), n);
    case Family::D: return std::ldexp(factorial(n), n - 1);
    case Family::I2: return 2.0 * n;
    case Family::Product: {
      double r = 1;
      for (const auto& f : factors) r *= f.order();
      return r;
    }
  }
  return 0;
}

CoxeterGroup build_group(const GroupDescriptor& d, std::size_t max_elements) {
  d.validate();
  if (d.order() > static_cast<double>(max_elements))
    throw SizeError("group " + d.name() + " has " + std::to_string(static_cast<long long>(d.order())) +
                    " elements, above the cap of " + std::to_string(max_elements) + " (raise --max-elements)");
  CoxeterGroup g;
  g.desc_ = d;
  std::vector<Perm> gens;
  generators_of(d, g.points_, gens);
  if (g.points_ > 65535) throw SizeError("too many points for 16-bit actions");
  g.rank_ = static_cast<int>(gens.size());
  const int P = g.points_;

  Perm id(P);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> level{id};
  int len = 0;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    for (auto& a : level) {
      ElementId e = static_cast<ElementId>(g.length_.size());
      g.index_.emplace(key_of(a), e);
      g.actions_.insert(g.actions_.end(), a.begin(), a.end());
      g.length_.push_back(len);
    }
    std::vector<Perm> next;
    std::unordered_map<std::string, bool> seen;
    for (const auto& a : level) {
      for (const auto& s : gens) {
        Perm c(P);
        for (int x = 0; x < P; ++x) c[x] = a[s[x]];
        std::string k = key_of(c);
        if (g.index_.count(k) || seen.count(k)) continue;
        seen.emplace(std::move(k), true);
        next.push_back(std::move(c));
      }
    }
    level = std::move(next);
    ++len;
  }

  const std::size_t N = g.length_.size();
  g.right_.resize(N * g.rank_);
  g.left_.resize(N * g.rank_);
  g.inverse_.resize(N);
  g.rdes_.assign(N, 0);
  g.ldes_.assign(N, 0);
  Perm buf(P);
  for (ElementId w = 0; w < N; ++w) {
    auto a = g.action(w);
    for (int i = 0; i < g.rank_; ++i) {
      const auto& s = gens[i];
      for (int x = 0; x < P; ++x) buf[x] = a[s[x]];
      g.right_[w * g.rank_ + i] = g.index_.at(key_of(buf));
      for (int x = 0; x < P; ++x) buf[x] = s[a[x]];
      g.left_[w * g.rank_ + i] = g.index_.at(key_of(buf));
    }
    for (int x = 0; x < P; ++x) buf[a[x]] = static_cast<std::uint16_t>(x);
    g.inverse_[w] = g.index_.at(key_of(buf));
  }
  for (ElementId w = 0; w < N; ++w)
    for (int i = 0; i < g.rank_; ++i) {
      if (g.length_[g.right_[w * g.rank_ + i]] < g.length_[w]) g.rdes_[w] |= IndexSet{1} << i;
      if (g.length_[g.left_[w * g.rank_ + i]] < g.length_[w]) g.ldes_[w] |= IndexSet{1} << i;
    }
  for (int i = 0; i < g.rank_; ++i) g.gens_.push_back(g.right_[i]);
  g.w0_ = static_cast<ElementId>(N - 1);
  if (N <= kOrderTableLimit) g.compute_order_tables();
  return g;
}

void CoxeterGroup::compute_order_tables() {
  const std::size_t N = size();
  bruhat_ = BitMatrix(N);
  weak_right_ = BitMatrix(N);
  weak_left_ = BitMatrix(N);
  bruhat_.set(0, 0);
  weak_right_.set(0, 0);
  weak_left_.set(0, 0);
  for (ElementId w = 1; w < N; ++w) {
    int i = std::countr_zero(rdes_[w]);
    ElementId v = right_mul(w, i);
    for (std::size_t x : bruhat_.row_members(v)) {
      bruhat_.set(w, x);
      bruhat_.set(w, right_mul(static_cast<ElementId>(x), i));
    }
    weak_right_.set(w, w);
    for (int j : index_members(rdes_[w])) weak_right_.or_row(w, right_mul(w, j));
    weak_left_.set(w, w);
    for (int j : index_members(ldes_[w])) weak_left_.or_row(w, left_mul(j, w));
  }
}

std::optional<ElementId> CoxeterGroup::find(std::span<const std::uint16_t> a) const {
  if (a.size() != std::size_t(points_)) return std::nullopt;
  auto it = index_.find(key_of(a));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId CoxeterGroup::product(ElementId a, ElementId b) const {
  ElementId x = a;
  for (int i : reduced_word(b)) x = right_mul(x, i);
  return x;
}

std::vector<int> CoxeterGroup::reduced_word(ElementId w) const {
  std::vector<int> word;
  while (w != 0) {
    int i = std::countr_zero(ldes_[w]);
    word.push_back(i);
    w = left_mul(i, w);
  }
  return word;
}

ElementId CoxeterGroup::from_word(const std::vector<int>& word) const {
  ElementId x = 0;
  for (int i : word) {
    if (i < 0 || i >= rank_) throw DomainError("generator index out of range");
    x = right_mul(x, i);
  }
  return x;
}

bool CoxeterGroup::le_R(ElementId u, ElementId w) const {
  if (has_order_tables()) return weak_right_.test(w, u);
  return length(u) + length(product(inverse(u), w)) == length(w);
}

bool CoxeterGroup::le_L(ElementId u, ElementId w) const {
  if (has_order_tables()) return weak_left_.test(w, u);
  return length(u) + length(product(w, inverse(u))) == length(w);
}

bool CoxeterGroup::le_B(ElementId u, ElementId w) const {
  if (has_order_tables()) return bruhat_.test(w, u);
  // Lifting property: for i in D_R(w), u <= w iff (i in D_R(u) ? u s_i <= w s_i : u <= w s_i).
  while (true) {
    if (length(u) > length(w)) return false;
    if (w == 0) return u == 0;
    int i = std::countr_zero(rdes_[w]);
    if (has_right_descent(u, i)) u = right_mul(u, i);
    w = right_mul(w, i);
  }
}

bool CoxeterGroup::le(Order o, ElementId u, ElementId w) const {
  switch (o) {
    case Order::Left: return le_L(u, w);
    case Order::Right: return le_R(u, w);
    case Order::Bruhat: return le_B(u, w);
  }
  return false;
}

const std::uint64_t* CoxeterGroup::lower_set(Order o, ElementId w) const {
  if (!has_order_tables()) throw SizeError("order tables are only kept for groups up to 10^4 elements");
  switch (o) {
    case Order::Left: return weak_left_.row(w);
    case Order::Right: return weak_right_.row(w);
    case Order::Bruhat: return bruhat_.row(w);
  }
  return nullptr;
}

std::vector<ElementId> CoxeterGroup::interval(ElementId a, ElementId b, Order o) const {
  std::vector<ElementId> out;
  if (!le(o, a, b)) return out;
  for (ElementId z = 0; z < size(); ++z)
    if (length(z) >= length(a) && length(z) <= length(b) && le(o, a, z) && le(o, z, b)) out.push_back(z);
  return out;
}

ElementId CoxeterGroup::interval_type(ElementId a, ElementId b, Side side) const {
  if (side == Side::Left) {
    if (!le_L(a, b)) throw DomainError("interval_type: elements are not comparable in left order");
    return product(b, inverse(a));
  }
  if (!le_R(a, b)) throw DomainError("interval_type: elements are not comparable in right order");
  return product(inverse(a), b);
}

ElementId CoxeterGroup::meet(ElementId u, ElementId v, Side side) const {
  Order o = side == Side::Left ? Order::Left : Order::Right;
  ElementId best = 0;
  for (ElementId z = 0; z < size(); ++z)
    if (le(o, z, u) && le(o, z, v) && length(z) > length(best)) best = z;
  return best;
}

ElementId CoxeterGroup::join(ElementId u, ElementId v, Side side) const {
  Order o = side == Side::Left ? Order::Left : Order::Right;
  ElementId best = w0_;
  for (ElementId z = 0; z < size(); ++z)
    if (le(o, u, z) && le(o, v, z) && length(z) < length(best)) best = z;
  return best;
}

CosetFactorization CoxeterGroup::min_coset_right(ElementId w, IndexSet K) const {
  ElementId x = w;
  while (IndexSet d = rdes_[x] & K) x = right_mul(x, std::countr_zero(d));
  return {x, product(inverse(x), w)};
}

CosetFactorization CoxeterGroup::min_coset_left(ElementId w, IndexSet J) const {
  ElementId x = w;
  while (IndexSet d = ldes_[x] & J) x = left_mul(std::countr_zero(d), x);
  return {x, product(w, inverse(x))};
}

bool CoxeterGroup::in_parabolic(ElementId w, IndexSet K) const { return min_coset_right(w, K).rep == 0; }

ElementId CoxeterGroup::longest_in_parabolic(IndexSet K) const {
  ElementId x = 0;
  while (IndexSet up = K & ~rdes_[x]) x = right_mul(x, std::countr_zero(up));
  return x;
}

std::optional<int> CoxeterGroup::simple_index(ElementId w) const {
  if (length(w) != 1) return std::nullopt;
  return std::countr_zero(ldes_[w]);
}

std::string CoxeterGroup::label(ElementId w) const {
  if (desc_.family == Family::A) {
    auto a = action(w);
    std::string out;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (points_ >= 10 && x) out += ',';
      out += std::to_string(a[x] + 1);
    }
    return out;
  }
  if (w == 0) return "e";
  std::string out;
  bool first = true;
  for (int i : reduced_word(w)) {
    if (rank_ >= 10 && !first) out += '.';
    out += std::to_string(i + 1);
    first = false;
  }
  return out;
}

std::optional<ElementId> CoxeterGroup::parse_element(std::string_view text) const {
  std::string s = trim(text);
  std::vector<int> nums;
  bool separated = s.find_first_of(",. ") != std::string::npos;
  if (separated) {
    std::string cur;
    for (char c : s + ",") {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        cur += c;
      } else if (!cur.empty()) {
        nums.push_back(std::stoi(cur));
        cur.clear();
      }
    }
  } else {
    for (char c : s)
      if (std::isdigit(static_cast<unsigned char>(c))) nums.push_back(c - '0');
  }
  if (desc_.family == Family::A) {
    if (nums.size() != std::size_t(points_)) return std::nullopt;
    Perm a(points_);
    for (int x = 0; x < points_; ++x) {
      if (nums[x] < 1 || nums[x] > points_) return std::nullopt;
      a[x] = static_cast<std::uint16_t>(nums[x] - 1);
    }
    return find(a);
  }
  if (s == "e" || s.empty()) return ElementId{0};
  std::vector<int> word;
  for (int v : nums) {
    if (v < 1 || v > rank_) return std::nullopt;
    word.push_back(v - 1);
  }
  return from_word(word);
}

std::vector<ElementId> CoxeterGroup::table_order() const {
  std::vector<ElementId> ids(size());
  std::iota(ids.begin(), ids.end(), 0);
  if (desc_.family == Family::A) {
    std::sort(ids.begin(), ids.end(), [&](ElementId a, ElementId b) {
      auto x = action(a), y = action(b);
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
  }
  return ids;
}

}  // namespace bihecke
