#include "bihecke/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>

#include "bihecke/blocks.hpp"
#include "bihecke/fmonoid.hpp"
#include "bihecke/posets.hpp"
#include "bihecke/properties.hpp"
#include "bihecke/reptheory.hpp"

namespace bihecke {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kFullCartanDefault = 200;

struct Settings {
  std::string format = "human";
  std::size_t max_elements = 1'000'000;
  bool max_given = false;
  bool slow = false;
  bool modular = false;
  unsigned threads = 1;
  std::string cache_dir;
  std::uint64_t seed = 0x5eed;
};

// Reports to err at most once a second, and only after the first second.
class Progress {
 public:
  explicit Progress(std::ostream& err) : err_(err), start_(Clock::now()), last_(start_) {}
  void operator()(const std::string& msg) {
    auto now = Clock::now();
    if (now - start_ < std::chrono::seconds(1) || now - last_ < std::chrono::seconds(1)) return;
    last_ = now;
    err_ << "[" << std::chrono::duration_cast<std::chrono::seconds>(now - start_).count() << "s] " << msg << std::endl;
  }

 private:
  using Clock = std::chrono::steady_clock;
  std::ostream& err_;
  Clock::time_point start_, last_;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::vector<std::string> parts;
  for (int i : word) parts.push_back(std::to_string(i + 1));
  return join(parts, ".");
}

std::vector<int> index_list(IndexSet s) {
  std::vector<int> out;
  for (int i : index_members(s)) out.push_back(i + 1);
  return out;
}

class Session {
 public:
  Session(const Settings& s, std::ostream& out, std::ostream& err) : s(s), out(out), err(err), progress(err) {}

  const Settings& s;
  std::ostream& out;
  std::ostream& err;
  Progress progress;

  CoxeterGroup group(const std::string& text) {
    GroupDescriptor d;
    try {
      d = GroupDescriptor::parse(text);
      d.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return build_group(d, s.max_elements);
  }

  ElementId element(const CoxeterGroup& g, const std::string& text) {
    auto w = g.parse_element(text);
    if (!w) throw UsageError("'" + text + "' is not an element of " + g.descriptor().name());
    return *w;
  }

  ClosureOptions closure_options() {
    ClosureOptions co;
    co.max_elements = s.max_elements;
    co.threads = s.threads;
    co.progress = [this](std::size_t level, std::size_t count) {
      progress("closure level " + std::to_string(level) + ": " + std::to_string(count) + " elements");
    };
    return co;
  }

  TransformationMonoid monoid(const CoxeterGroup& g) {
    if (s.cache_dir.empty()) return bihecke_monoid(g, closure_options());
    namespace fs = std::filesystem;
    std::string stem = g.descriptor().name();
    for (char& ch : stem)
      if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    fs::path path = fs::path(s.cache_dir) / (stem + ".bhm");
    if (auto m = load_monoid(path.string(), g, s.threads)) return std::move(*m);
    TransformationMonoid m = bihecke_monoid(g, closure_options());
    fs::create_directories(s.cache_dir);
    save_monoid(path.string(), g, m);
    return m;
  }

  LinearOptions linear_options() {
    LinearOptions lo;
    lo.mode = s.modular ? Arithmetic::Modular : Arithmetic::Exact;
    lo.seed = s.seed;
    if (s.slow) lo.exact_cap = lo.modular_cap = std::max<std::size_t>(s.max_elements, lo.modular_cap);
    lo.progress = [this](const std::string& m) { progress(m); };
    return lo;
  }

  void require_format(std::initializer_list<const char*> allowed, const std::string& command) {
    for (const char* f : allowed)
      if (s.format == f) return;
    throw UsageError("--format " + s.format + " is not available for " + command);
  }
};

std::string ordering_text(const CoxeterGroup& g) {
  return g.descriptor().is_symmetric_group() ? "one-line lexicographic order" : "id order (breadth first by length)";
}

// Matrices --------------------------------------------------------------------

struct MatrixOutput {
  std::string title;     // "q-Cartan matrix of M(A2)"
  std::string orientation;
  std::vector<ElementId> order;
  std::vector<std::string> labels;
  std::function<QPolynomial(std::size_t, std::size_t)> entry;  // positions in order
  bool zero_one = false;
  std::vector<std::pair<std::string, std::vector<long long>>> marginals;
};

std::string entry_text(const MatrixOutput& m, const QPolynomial& p) {
  if (m.zero_one) return evaluate_at_one(p) ? "1" : ".";
  return format_qpolynomial(p);
}

void emit_matrix(Session& ss, const CoxeterGroup& g, const MatrixOutput& m) {
  const std::size_t n = m.order.size();
  std::string header = m.title + ", " + m.orientation + ", rows and columns in " + ordering_text(g);
  if (ss.s.format == "human") {
    ss.out << "# " << header << "\n";
    ss.out << "cols " << join(m.labels, " ") << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      ss.out << "row " << m.labels[i];
      for (std::size_t j = 0; j < n; ++j) ss.out << ' ' << entry_text(m, m.entry(i, j));
      ss.out << "\n";
    }
    for (const auto& [key, vals] : m.marginals) {
      ss.out << key;
      for (long long v : vals) ss.out << ' ' << v;
      ss.out << "\n";
    }
  } else if (ss.s.format == "csv") {
    ss.out << "# " << header << ", group " << g.descriptor().name() << "\n";
    ss.out << "label," << join(m.labels, ",") << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      ss.out << m.labels[i];
      for (std::size_t j = 0; j < n; ++j) {
        QPolynomial p = m.entry(i, j);
        ss.out << ',' << (m.zero_one ? std::to_string(evaluate_at_one(p)) : p.empty() ? std::string("0") : format_qpolynomial(p));
      }
      ss.out << "\n";
    }
  } else {
    json j;
    j["group"] = g.descriptor().name();
    j["matrix"] = m.title;
    j["orientation"] = m.orientation;
    j["ordering"] = ordering_text(g);
    j["labels"] = m.labels;
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < n; ++k) {
        QPolynomial p = m.entry(i, k);
        if (m.zero_one) row.push_back(evaluate_at_one(p));
        else row.push_back(p);  // coefficient of q^k at index k
      }
      rows.push_back(row);
    }
    j["rows"] = rows;
    json marg = json::object();
    for (const auto& [key, vals] : m.marginals) marg[key] = vals;
    j["marginals"] = marg;
    ss.out << j.dump(2) << "\n";
  }
}

std::vector<std::pair<std::string, std::vector<long long>>> cartan_marginals(
    const std::vector<ElementId>& order, const std::vector<long long>& dims,
    const std::function<long long(std::size_t, std::size_t)>& value) {
  const std::size_t n = order.size();
  std::vector<long long> d, proj_row(n, 0), proj_col(n, 0);
  for (ElementId u : order) d.push_back(dims[u]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long c = value(i, j);
      proj_row[j] += c * d[i];
      proj_col[i] += c * d[j];
    }
  return {{"simp_row", d}, {"proj_row", proj_row}, {"simp_col", d}, {"proj_col", proj_col}};
}

// Subcommands -----------------------------------------------------------------

int cmd_group(Session& ss, const std::string& desc) {
  ss.require_format({"human", "csv", "json"}, "group");
  CoxeterGroup g = ss.group(desc);
  auto order = g.table_order();
  if (ss.s.format == "json") {
    json j;
    j["group"] = g.descriptor().name();
    j["order"] = g.size();
    j["rank"] = g.rank();
    j["w0"] = g.label(g.w0());
    j["ordering"] = ordering_text(g);
    json els = json::array();
    for (ElementId w : order) {
      std::vector<int> word;
      for (int i : g.reduced_word(w)) word.push_back(i + 1);
      els.push_back({{"id", w},
                     {"label", g.label(w)},
                     {"length", g.length(w)},
                     {"word", word},
                     {"right_descents", index_list(g.right_descents(w))},
                     {"left_descents", index_list(g.left_descents(w))}});
    }
    j["elements"] = els;
    ss.out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (ss.s.format == "human")
    ss.out << "group " << g.descriptor().name() << "\norder " << g.size() << "\nrank " << g.rank() << "\nw0 "
           << g.label(g.w0()) << "\nmax_length " << g.max_length() << "\n";
  const char sep = ss.s.format == "csv" ? ',' : ' ';
  ss.out << "id" << sep << "label" << sep << "length" << sep << "word" << sep << "right_descents" << sep
         << "left_descents\n";
  for (ElementId w : order) {
    auto des = [](IndexSet x) {
      std::string s;
      for (int i : index_list(x)) s += (s.empty() ? "" : ".") + std::to_string(i);
      return s.empty() ? std::string("-") : s;
    };
    ss.out << w << sep << g.label(w) << sep << g.length(w) << sep << word_text(g.reduced_word(w)) << sep
           << des(g.right_descents(w)) << sep << des(g.left_descents(w)) << "\n";
  }
  return kExitOk;
}

int cmd_monoid(Session& ss, const std::string& desc) {
  ss.require_format({"human", "csv", "json"}, "monoid");
  CoxeterGroup g = ss.group(desc);
  TransformationMonoid m = ss.monoid(g);
  ClosureOptions co = ss.closure_options();
  TransformationMonoid m1 = borel(g, BorelFix::Identity, m, co);
  TransformationMonoid m0 = borel(g, BorelFix::LongestElement, m, co);
  ss.progress("Green structure");
  GreenStructure gs = green(m);
  std::size_t idem = 0, regular = 0;
  for (bool b : gs.idempotent) idem += b;
  for (bool b : gs.regular) regular += b;
  std::map<std::uint32_t, std::size_t> census;
  for (auto sz : gs.J_size) census[sz] += 1;
  std::vector<std::pair<std::string, std::string>> rows{
      {"group", g.descriptor().name()},
      {"size", std::to_string(m.size())},
      {"borel_1", std::to_string(m1.size())},
      {"borel_w0", std::to_string(m0.size())},
      {"idempotents", std::to_string(idem)},
      {"j_classes", std::to_string(gs.nJ)},
      {"regular_j_classes", std::to_string(regular)},
      {"r_classes", std::to_string(gs.nR)},
      {"l_classes", std::to_string(gs.nL)},
      {"aperiodic", is_aperiodic(m) ? "yes" : "no"},
  };
  std::string c;
  for (auto [sz, k] : census) c += (c.empty() ? "" : " ") + std::to_string(sz) + "^" + std::to_string(k);
  if (ss.s.format == "json") {
    json j;
    j["group"] = g.descriptor().name();
    j["size"] = m.size();
    j["borel_1"] = m1.size();
    j["borel_w0"] = m0.size();
    j["idempotents"] = idem;
    j["j_classes"] = gs.nJ;
    j["regular_j_classes"] = regular;
    j["r_classes"] = gs.nR;
    j["l_classes"] = gs.nL;
    j["aperiodic"] = is_aperiodic(m);
    json cj = json::object();
    for (auto [sz, k] : census) cj[std::to_string(sz)] = k;
    j["j_class_sizes"] = cj;
    ss.out << j.dump(2) << "\n";
    return kExitOk;
  }
  rows.push_back({"j_class_sizes", c});
  for (const auto& [k, v] : rows) ss.out << k << (ss.s.format == "csv" ? "," : " ") << v << "\n";
  return kExitOk;
}

int cmd_blocks(Session& ss, const std::string& desc, const std::string& elem, bool reduced_only) {
  ss.require_format({"human", "csv", "json"}, "blocks");
  CoxeterGroup g = ss.group(desc);
  ElementId w = ss.element(g, elem);
  auto bl = reduced_only ? reduced_blocks(g, w) : all_blocks(g, w);
  if (ss.s.format == "json") {
    json arr = json::array();
    for (const auto& b : bl) {
      json phi = json::array();
      for (auto [k, j] : b.phi) phi.push_back({k + 1, j + 1});
      arr.push_back({{"K", index_list(b.K)},
                     {"J", index_list(b.J)},
                     {"cutting_point", g.label(b.cutting_point)},
                     {"reduced", b.reduced},
                     {"trivial", b.trivial},
                     {"phi", phi}});
    }
    ss.out << json{{"group", g.descriptor().name()}, {"w", g.label(w)}, {"blocks", arr}}.dump(2) << "\n";
    return kExitOk;
  }
  const bool csv = ss.s.format == "csv";
  const std::string sep = csv ? "," : " ";
  auto set_text = [&](IndexSet x) { return csv ? format_index_set(x).substr(1, format_index_set(x).size() - 2) : format_index_set(x); };
  if (csv) ss.out << "K,J,cutting_point,reduced,trivial\n";
  else ss.out << "# blocks of " << g.label(w) << " in " << g.descriptor().name() << ": K J cutting_point reduced trivial\n";
  for (const auto& b : bl)
    ss.out << (csv ? "\"" + set_text(b.K) + "\"" : set_text(b.K)) << sep << (csv ? "\"" + set_text(b.J) + "\"" : set_text(b.J))
           << sep << g.label(b.cutting_point) << sep << (b.reduced ? "yes" : "no") << sep << (b.trivial ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_cutting_poset(Session& ss, const std::string& desc, const std::string& elem) {
  CoxeterGroup g = ss.group(desc);
  CuttingPoset cp = cutting_poset(g);
  std::vector<std::size_t> nodes;
  if (elem.empty()) {
    for (std::size_t x = 0; x < g.size(); ++x) nodes.push_back(x);
  } else {
    for (ElementId u : cutting_points(g, ss.element(g, elem))) nodes.push_back(u);
  }
  Poset p = cp.poset.induced(nodes);
  const std::string name = "cutting poset of " + g.descriptor().name() + (elem.empty() ? "" : " below " + elem);
  if (ss.s.format == "dot") {
    ss.out << p.to_dot(name);
    return kExitOk;
  }
  if (ss.s.format == "json") {
    json covers = json::array();
    for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
    std::vector<std::string> irr;
    for (auto x : p.join_irreducibles()) irr.push_back(p.label(x));
    ss.out << json{{"group", g.descriptor().name()}, {"nodes", p.labels()}, {"covers", covers}, {"join_irreducibles", irr}}.dump(2)
           << "\n";
    return kExitOk;
  }
  if (ss.s.format == "csv") {
    ss.out << "lower,upper\n";
  } else {
    ss.out << "# " << name << "\nnodes " << p.size() << "\ncovers " << p.covers().size() << "\njoin_irreducibles "
           << p.join_irreducibles().size() << "\n";
  }
  for (auto [a, b] : p.covers()) ss.out << p.label(a) << (ss.s.format == "csv" ? "," : " < ") << p.label(b) << "\n";
  return kExitOk;
}

int cmd_simples(Session& ss, const std::string& desc) {
  ss.require_format({"human", "csv", "json"}, "simples");
  CoxeterGroup g = ss.group(desc);
  std::size_t total = 0;
  json arr = json::array();
  if (ss.s.format == "csv") ss.out << "w,dimension,basis\n";
  else if (ss.s.format == "human") ss.out << "# simple modules S_w of M(" << g.descriptor().name() << "): w dimension basis\n";
  for (ElementId w : g.table_order()) {
    auto basis = simple_basis(g, w);
    std::vector<std::string> labels;
    for (ElementId u : basis) labels.push_back(g.label(u));
    total += basis.size();
    if (ss.s.format == "json") arr.push_back({{"w", g.label(w)}, {"dimension", basis.size()}, {"basis", labels}});
    else if (ss.s.format == "csv") ss.out << g.label(w) << ',' << basis.size() << ',' << join(labels, " ") << "\n";
    else ss.out << g.label(w) << ' ' << basis.size() << ' ' << join(labels, " ") << "\n";
  }
  if (ss.s.format == "json") ss.out << json{{"group", g.descriptor().name()}, {"simples", arr}, {"total", total}}.dump(2) << "\n";
  else if (ss.s.format == "human") ss.out << "total " << total << "\n";
  return kExitOk;
}

int cmd_cartan(Session& ss, const std::string& desc, const std::string& which, bool graded) {
  ss.require_format({"human", "csv", "json"}, graded ? "qcartan" : "cartan");
  CoxeterGroup g = ss.group(desc);
  auto order = g.table_order();
  MatrixOutput mo;
  mo.order = order;
  for (ElementId u : order) mo.labels.push_back(g.label(u));
  mo.orientation = "rows projective, columns simple";
  const std::string name = g.descriptor().name();
  std::vector<long long> dims(g.size(), 1);
  GradedMatrix gm;
  std::vector<std::vector<long long>> plain;

  TransformationMonoid m = ss.monoid(g);
  LinearOptions lo = ss.linear_options();
  if (which == "full") {
    if (m.size() > kFullCartanDefault && !ss.s.slow)
      throw SizeError("the q-Cartan matrix of M(" + name + ") needs linear algebra on " + std::to_string(m.size()) +
                      " monoid elements, above the default limit of " + std::to_string(kFullCartanDefault) +
                      "; rerun with --slow (and --modular for speed)");
    gm = qcartan_full(g, m, lo);
    for (ElementId w = 0; w < g.size(); ++w) dims[w] = (long long)dim_simple(g, w);
    mo.title = "M(" + name + ")";
  } else if (which == "w0") {
    gm = qcartan_borel(g, borel(g, BorelFix::LongestElement, m, ss.closure_options()), lo);
    mo.title = "M_w0(" + name + ")";
  } else {
    TransformationMonoid m1 = borel(g, BorelFix::Identity, m, ss.closure_options());
    if (graded) gm = qcartan_m1(g, m1, lo);
    else plain = cartan_m1(g, m1);
    mo.title = "M_1(" + name + ")";
  }
  mo.title = (graded ? "q-Cartan matrix of " : "Cartan matrix of ") + mo.title;
  auto value_at = [&](ElementId u, ElementId v) -> QPolynomial {
    if (!plain.empty()) return plain[u][v] ? QPolynomial{plain[u][v]} : QPolynomial{};
    const QPolynomial& p = gm.at(u, v);
    if (graded) return p;
    long long one = evaluate_at_one(p);
    return one ? QPolynomial{one} : QPolynomial{};
  };
  mo.entry = [&](std::size_t i, std::size_t j) { return value_at(order[i], order[j]); };
  mo.marginals = cartan_marginals(order, dims, [&](std::size_t i, std::size_t j) { return evaluate_at_one(mo.entry(i, j)); });
  emit_matrix(ss, g, mo);
  return kExitOk;
}

int cmd_decomposition(Session& ss, const std::string& desc) {
  ss.require_format({"human", "csv", "json"}, "decomposition");
  CoxeterGroup g = ss.group(desc);
  auto order = g.table_order();
  auto d = decomposition_matrix(g);
  MatrixOutput mo;
  mo.title = "decomposition matrix of M(" + g.descriptor().name() + ") over M_w0";
  mo.orientation = "rows simple M-modules, columns simple M_w0-modules";
  mo.order = order;
  mo.zero_one = true;
  for (ElementId u : order) mo.labels.push_back(g.label(u));
  mo.entry = [&](std::size_t i, std::size_t j) { return d[order[i]][order[j]] ? QPolynomial{1} : QPolynomial{}; };
  std::vector<long long> sums;
  for (ElementId u : order) sums.push_back((long long)dim_simple(g, u));
  mo.marginals = {{"simp_col", sums}};
  emit_matrix(ss, g, mo);
  return kExitOk;
}

int cmd_table1(Session& ss, const std::vector<std::string>& descs) {
  ss.require_format({"human", "csv", "json"}, "table1");
  json arr = json::array();
  if (ss.s.format == "csv") ss.out << "type,W,M_w0,M,dimensions,sum\n";
  for (const auto& desc : descs) {
    CoxeterGroup g = ss.group(desc);
    Table1Row row = table1_row(g, ss.monoid(g), ss.closure_options());
    row.name = desc;
    std::string dims;
    for (auto [d, k] : row.dims) dims += (dims.empty() ? "" : " ") + std::to_string(d) + "^" + std::to_string(k);
    if (ss.s.format == "json") {
      json dj = json::object();
      for (auto [d, k] : row.dims) dj[std::to_string(d)] = k;
      arr.push_back({{"type", desc},
                     {"group_size", row.group_size},
                     {"borel_size", row.borel_size},
                     {"monoid_size", row.monoid_size},
                     {"dimensions", dj},
                     {"sum", row.dim_sum}});
    } else if (ss.s.format == "csv") {
      ss.out << desc << ',' << row.group_size << ',' << row.borel_size << ',' << row.monoid_size << ',' << dims << ','
             << row.dim_sum << "\n";
    } else {
      ss.out << row.format() << std::endl;
    }
  }
  if (ss.s.format == "json") ss.out << arr.dump(2) << "\n";
  return kExitOk;
}

int cmd_check(Session& ss, const std::string& desc, const std::vector<std::string>& only, std::size_t samples) {
  ss.require_format({"human", "json"}, "check");
  CoxeterGroup g = ss.group(desc);
  PropertyOptions po;
  po.only = only;
  po.samples = samples;
  po.seed = ss.s.seed;
  po.threads = ss.s.threads;
  po.modular = ss.s.modular;
  if (ss.s.max_given) po.monoid_cap = ss.s.max_elements;
  if (ss.s.slow) po.cartan_cap = po.linear_cap = std::max(po.monoid_cap, po.linear_cap);
  if (!ss.s.cache_dir.empty()) po.scratch_dir = ss.s.cache_dir;
  po.progress = [&](const std::string& name) { ss.progress("property " + name); };
  auto results = run_property_suite(g, po);
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : results) {
    pass += r.status == PropertyStatus::Pass;
    fail += r.status == PropertyStatus::Fail;
    skip += r.status == PropertyStatus::Skip;
  }
  if (ss.s.format == "json") {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"name", r.name},
                     {"status", r.status == PropertyStatus::Pass ? "pass" : r.status == PropertyStatus::Fail ? "fail" : "skip"},
                     {"cases", r.cases},
                     {"detail", r.detail}});
    ss.out << json{{"group", g.descriptor().name()}, {"results", arr}, {"passed", pass}, {"failed", fail}, {"skipped", skip}}.dump(2)
           << "\n";
  } else {
    for (const auto& r : results) ss.out << format_property_result(r) << "\n";
    ss.out << "check " << g.descriptor().name() << ": " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  }
  return fail ? kExitComputation : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter groups, biHecke monoids and their representations"};
  app.name("bihecke");
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  if (const char* env = std::getenv(kCacheDirVariable)) s.cache_dir = env;
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"human", "csv", "json", "dot"}))
      ->capture_default_str();
  auto* max_opt = app.add_option("--max-elements", s.max_elements, "Cap on group and monoid sizes")->capture_default_str();
  app.add_flag("--slow", s.slow, "Allow the long q-Cartan computations (biHecke monoids above 200 elements)");
  app.add_flag("--modular", s.modular, "Modular arithmetic for radical computations");
  app.add_option("--threads", s.threads, "Closure threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--cache-dir", s.cache_dir, std::string("Monoid cache directory (default: $") + kCacheDirVariable + ")");
  app.add_option("--seed", s.seed, "Seed for randomised steps")->capture_default_str();

  std::string desc, elem, which = "full";
  std::vector<std::string> descs, only;
  bool reduced_only = false;
  std::size_t samples = 200;

  auto* group = app.add_subcommand("group", "Element table of a Coxeter group");
  group->add_option("descriptor", desc, "A3, B2, I2(7), A1xA1, ...")->required();
  auto* monoid = app.add_subcommand("monoid", "Summary of the biHecke monoid and its Borel submonoids");
  monoid->add_option("descriptor", desc)->required();
  auto* blocks = app.add_subcommand("blocks", "Blocks of an element");
  blocks->add_option("descriptor", desc)->required();
  blocks->add_option("element", elem, "Element label, e.g. 4312")->required();
  blocks->add_flag("--reduced", reduced_only, "Only reduced blocks");
  auto* cposet = app.add_subcommand("cutting-poset", "Cutting poset, or the cutting points below an element");
  cposet->add_option("descriptor", desc)->required();
  cposet->add_option("element", elem);
  auto* simples = app.add_subcommand("simples", "Dimensions and bases of the simple modules");
  simples->add_option("descriptor", desc)->required();
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix (q = 1)");
  cartan->add_option("descriptor", desc)->required();
  cartan->add_option("--monoid", which, "full, w0 or 1")->check(CLI::IsMember({"full", "w0", "1"}))->capture_default_str();
  auto* qcartan = app.add_subcommand("qcartan", "q-Cartan matrix from the radical filtration");
  qcartan->add_option("descriptor", desc)->required();
  qcartan->add_option("--monoid", which, "full, w0 or 1")->check(CLI::IsMember({"full", "w0", "1"}))->capture_default_str();
  auto* decomposition = app.add_subcommand("decomposition", "Decomposition matrix over the Borel submonoid M_w0");
  decomposition->add_option("descriptor", desc)->required();
  auto* table1 = app.add_subcommand("table1", "Statistics row: |W|, |M_w0|, |M|, simple dimensions, their sum");
  table1->add_option("descriptors", descs)->required();
  auto* check = app.add_subcommand("check", "Run the property suite");
  check->add_option("descriptor", desc)->required();
  check->add_option("--only", only, "Property name prefixes");
  check->add_option("--samples", samples, "Samples for groups above the exhaustive limit")->capture_default_str();
  auto* list = app.add_subcommand("properties", "List the property names used by check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  s.max_given = max_opt->count() > 0;

  Session ss(s, out, err);
  try {
    if (*group) return cmd_group(ss, desc);
    if (*monoid) return cmd_monoid(ss, desc);
    if (*blocks) return cmd_blocks(ss, desc, elem, reduced_only);
    if (*cposet) return cmd_cutting_poset(ss, desc, elem);
    if (*simples) return cmd_simples(ss, desc);
    if (*cartan) return cmd_cartan(ss, desc, which, false);
    if (*qcartan) return cmd_cartan(ss, desc, which, true);
    if (*decomposition) return cmd_decomposition(ss, desc);
    if (*table1) return cmd_table1(ss, descs);
    if (*check) return cmd_check(ss, desc, only, samples);
    if (*list) {
      for (const auto& n : property_names()) out << n << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what();
    std::string msg = e.what();
    if (msg.find("--") == std::string::npos)
      err << (msg.rfind("radical", 0) == 0 ? " (--slow lifts the linear algebra cap to --max-elements)"
                                            : " (raise the limit with --max-elements)");
    err << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace bihecke
