#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wfree/acceptance.hpp"
#include "wfree/classical.hpp"
#include "wfree/corrections.hpp"
#include "wfree/parse.hpp"
#include "wfree/remainder.hpp"
#include "wfree/serialize.hpp"

namespace fs = std::filesystem;
using namespace wfree;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "sp";
  int n = 1;
  int max_weight = 64;
  std::string cache_dir;
  int threads = 1;
  std::string format = "auto";

  std::vector<std::string> exprs;
  std::string left, right;
  int pole = 0;
  std::string indices, I, J, method = "closed", ordering = "canonical";
  bool sergeev = false;
  bool abstract = false;
  int up_to = 0;
  std::vector<int> criteria;
};

Family family_of(const Options& o) {
  try {
    return parse_family(o.family, o.n);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

bool json_out(const Options& o, bool default_json = false) {
  if (o.format == "auto") return default_json;
  return o.format == "json";
}

std::vector<int> parse_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad entry in ") + what + ": '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

// Realizes abstract input in the selected family; free-field input passes through.
VPoly as_vpoly(const std::string& text, const Options& o) {
  auto v = parse_expr(text);
  if (auto* p = std::get_if<VPoly>(&v)) return *p;
  return realize(family_of(o), std::get<WPoly>(v));
}

void print_vpoly(const VPoly& p, const Options& o) {
  if (json_out(o))
    std::cout << Json{{"text", to_text(p)}, {"terms", to_json(p)}}.dump(2) << "\n";
  else
    std::cout << to_text(p) << "\n";
}

int cmd_ope(const Options& o) {
  VPoly a = as_vpoly(o.exprs.at(0), o), b = as_vpoly(o.exprs.at(1), o);
  OpeTable t = ope_all(a, b);
  if (json_out(o)) {
    std::cout << to_json(t).dump(2) << "\n";
  } else if (t.empty()) {
    std::cout << "0\n";
  } else {
    for (const auto& [n, v] : t) std::cout << n << ": " << to_text(v) << "\n";
  }
  return kOk;
}

int cmd_circle(const Options& o) {
  if (o.abstract) {
    WPoly a = parse_wpoly(o.exprs.at(0)), b = parse_wpoly(o.exprs.at(1));
    if (a.size() != 1 || a.terms().begin()->first.size() != 1)
      throw UsageError("--abstract needs a single generator on the left");
    const auto& [w, c] = *a.terms().begin();
    if (o.pole < 0) throw UsageError("--abstract needs a non-negative product index");
    WPoly r = to_w_basis(act(family_of(o), w[0], o.pole, b));
    r *= c;
    if (json_out(o))
      std::cout << Json{{"text", to_text(r)}, {"terms", to_json(r)}}.dump(2) << "\n";
    else
      std::cout << to_text(r) << "\n";
    return kOk;
  }
  print_vpoly(circle(as_vpoly(o.exprs.at(0), o), o.pole, as_vpoly(o.exprs.at(1), o)), o);
  return kOk;
}

int cmd_wick(const Options& o) {
  print_vpoly(wick(as_vpoly(o.exprs.at(0), o), as_vpoly(o.exprs.at(1), o)), o);
  return kOk;
}

int cmd_realize(const Options& o) {
  print_vpoly(realize(family_of(o), parse_wpoly(o.exprs.at(0))), o);
  return kOk;
}

std::pair<QPoly, std::string> classical_input(const Options& o, const Family& f) {
  const int given = !o.indices.empty() + (!o.I.empty() || !o.J.empty()) + o.sergeev;
  if (given != 1) throw UsageError("give exactly one of --indices, --I/--J, --sergeev");
  try {
    if (o.sergeev) {
      if (f.group != Group::Osp || f.n != 1) throw UsageError("--sergeev needs --family osp --n 1");
      return {sergeev_minimal(), "sergeev"};
    }
    if (!o.indices.empty()) {
      if (f.group != Group::Sp) throw UsageError("--indices is for the sp family");
      return {pfaffian(parse_list(o.indices, "--indices"), f.n), o.indices};
    }
    if (f.group != Group::O) throw UsageError("--I/--J are for the o family");
    if (o.I.empty() || o.J.empty()) throw UsageError("--I and --J go together");
    return {det_analog(parse_list(o.I, "--I"), parse_list(o.J, "--J"), f.n), "I=" + o.I + " J=" + o.J};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_remainder(const Options& o) {
  Family f = family_of(o);
  Rational r;
  if (o.method == "engine") {
    auto [q, label] = classical_input(o, f);
    RelationResult rel = build_relation(f, q, Ordering::Canonical, label);
    if (!rel.remainder) throw UsageError("odd weight: the remainder is undefined");
    r = *rel.remainder;
  } else if (f.group == Group::Sp) {
    if (o.indices.empty()) throw UsageError("--indices is required for sp remainders");
    std::vector<int> I = parse_list(o.indices, "--indices");
    if (static_cast<int>(I.size()) != 2 * f.n + 2) throw UsageError("--indices needs 2n+2 entries");
    try {
      r = o.method == "closed" ? rn_sym_closed(f.n, I) : rn_sym_recursive(f.n, I);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (f.group == Group::O) {
    if (o.method != "recursive") throw UsageError("o remainders use --method recursive or engine");
    std::vector<int> I = parse_list(o.I, "--I"), J = parse_list(o.J, "--J");
    if (static_cast<int>(I.size()) != f.n + 1 || J.size() != I.size())
      throw UsageError("--I and --J need n+1 entries each");
    r = rn_orth_recursive(f.n, I, J);
  } else {
    throw UsageError("osp remainders are available with --method engine only");
  }
  if (json_out(o))
    std::cout << Json{{"remainder", to_string(r)}}.dump() << "\n";
  else
    std::cout << to_string(r) << "\n";
  return kOk;
}

std::string slug(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

std::optional<Json> cache_read(const Options& o, const std::string& key) {
  if (o.cache_dir.empty()) return std::nullopt;
  std::ifstream in(fs::path(o.cache_dir) / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_write(const Options& o, const std::string& key, const Json& j) {
  if (o.cache_dir.empty()) return;
  fs::create_directories(o.cache_dir);
  std::ofstream(fs::path(o.cache_dir) / (key + ".json")) << j.dump(1) << "\n";
}

RelationResult relation_cached(const Options& o, const Family& f, const QPoly& q, const std::string& label,
                               Ordering ord) {
  if (q.weight() > o.max_weight)
    throw UsageError("relation weight " + std::to_string(q.weight()) + " exceeds --max-weight");
  const std::string key = "relation-" + f.name() + "-" + slug(label) +
                          (ord == Ordering::Reversed ? "-rev" : "");
  if (auto j = cache_read(o, key)) {
    RelationResult r = relation_from_json(*j);
    if (r.classical == q) return r;
  }
  RelationResult r = build_relation(f, q, ord, label);
  cache_write(o, key, to_json(r));
  return r;
}

int cmd_relation(const Options& o) {
  Family f = family_of(o);
  auto [q, label] = classical_input(o, f);
  if (q.is_zero()) throw UsageError("the classical relation is zero");
  if (o.ordering != "canonical" && o.ordering != "reversed") throw UsageError("bad --ordering");
  RelationResult r =
      relation_cached(o, f, q, label, o.ordering == "reversed" ? Ordering::Reversed : Ordering::Canonical);
  if (json_out(o, true)) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "family=" << f.name() << " weight=" << r.weight
              << " kernel_ok=" << (r.kernel_ok ? "true" : "false")
              << " remainder=" << (r.remainder ? to_string(*r.remainder) : "undefined") << "\n";
    for (auto it = r.by_degree.rbegin(); it != r.by_degree.rend(); ++it)
      std::cout << "P" << it->first << " = " << to_text(it->second) << "\n";
  }
  return r.kernel_ok ? kOk : kFailed;
}

int cmd_decouple(const Options& o) {
  Family f = family_of(o);
  QPoly q;
  std::string label;
  if (f.group == Group::Sp) {
    std::vector<int> I(2 * f.n + 2);
    for (int k = 0; k < 2 * f.n + 2; ++k) I[k] = k;
    q = pfaffian(I, f.n);
    label = "minimal";
  } else if (f.group == Group::O) {
    q = det_analog(std::vector<int>(f.n + 1, 0), std::vector<int>(f.n + 1, 1), f.n);
    label = "minimal";
  } else {
    if (f.n != 1) throw UsageError("osp decoupling is available for n = 1 only");
    q = sergeev_minimal();
    label = "sergeev";
  }
  RelationResult rel = relation_cached(o, f, q, label, Ordering::Canonical);
  Decoupling d = extract_decoupling(rel);
  const int top = std::max(o.up_to, d.m);
  if (top + 1 > o.max_weight) throw UsageError("--up-to exceeds --max-weight");
  std::map<int, Decoupling> known{{d.m, d}};
  while (d.m < top) {
    const std::string key = "decoupling-" + f.name() + "-W" + std::to_string(d.m + 2);
    std::optional<Decoupling> next;
    if (auto j = cache_read(o, key)) next = decoupling_from_json(*j);
    if (!next || !(next->family == f)) {
      next = raise_decoupling(d, f, known);
      cache_write(o, key, to_json(*next));
    }
    d = *next;
    known.emplace(d.m, d);
  }
  bool ok = true;
  Json out = Json::array();
  for (const auto& [m, dec] : known) {
    bool holds = decoupling_holds(dec);
    ok = ok && holds;
    if (json_out(o, true)) {
      Json j = to_json(dec);
      j["holds"] = holds;
      out.push_back(j);
    } else {
      std::cout << "W" << m << " = " << to_text(dec.expression) << "   [" << (holds ? "verified" : "FAILED")
                << "]\n";
    }
  }
  if (json_out(o, true)) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

int cmd_verify_appendix(const Options& o) {
  AppendixReport rep = verify_appendix([](const std::string& s) { std::cerr << s << "\n"; });
  bool ok = rep.kernel_ok && rep.remainder == Rational(109, 56000);
  if (json_out(o)) {
    Json res = Json::object();
    for (auto [d, n] : rep.residual_terms) res[std::to_string(d)] = n;
    std::cout << Json{{"kernel_ok", rep.kernel_ok}, {"remainder", to_string(rep.remainder)},
                      {"residual_terms", res}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "kernel_ok=" << (rep.kernel_ok ? "true" : "false") << " remainder=" << to_string(rep.remainder)
              << "\n";
    for (auto [d, n] : rep.residual_terms) std::cout << "residual degree " << d << ": " << n << " terms\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_selftest(const Options& o) {
  std::vector<int> ids = o.criteria;
  if (ids.empty())
    for (int i = 1; i <= 11; ++i) ids.push_back(i);
  std::vector<CriterionResult> results;
  for (int id : ids) {
    if (id < 1 || id > 11) throw UsageError("criteria are numbered 1 to 11");
    try {
      results.push_back(run_criterion(id, [id](const std::string& s) { std::cerr << "[" << id << "] " << s << "\n"; }));
    } catch (const std::exception& e) {
      results.push_back({id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()});
    }
  }
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    if (json_out(o))
      out.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "\n      " << r.detail << "\n";
  }
  if (json_out(o)) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact operator products, quantum corrections and decoupling relations for free-field orbifolds"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--family", o.family, "Realization family: sp, o or osp")
      ->check(CLI::IsMember({"sp", "o", "osp"}))
      ->capture_default_str();
  app.add_option("--n", o.n, "Rank parameter n")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-weight", o.max_weight, "Refuse relations or decouplings above this weight")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cache-dir", o.cache_dir, "Directory for cached relation and decoupling JSON");
  app.add_option("--threads", o.threads, "Upper bound on worker threads (the engines run sequentially)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", o.format, "Output format: text or json (auto: json for relation/decouple)")
      ->check(CLI::IsMember({"auto", "text", "json"}))
      ->capture_default_str();
  app.fallthrough();

  auto* ope = app.add_subcommand("ope", "All non-negative circle products a o_n b");
  ope->add_option("a", o.exprs, "Operands (free-field or abstract, realized in --family)")->expected(2)->required();

  auto* circ = app.add_subcommand("circle", "One circle product a o_n b, any integer n");
  circ->add_option("a", o.left, "Left operand")->required();
  circ->add_option("pole", o.pole, "Product index n")->required();
  circ->add_option("b", o.right, "Right operand")->required();
  circ->add_flag("--abstract", o.abstract, "Compute in the freely generated algebra instead of the realization");

  auto* wk = app.add_subcommand("wick", "Wick product :ab:");
  wk->add_option("a", o.exprs, "Operands")->expected(2)->required();

  auto* rz = app.add_subcommand("realize", "Free-field image of an abstract expression");
  rz->add_option("expr", o.exprs, "Abstract expression")->expected(1)->required();

  auto* rem = app.add_subcommand("remainder", "Remainder coefficient of a relation");
  rem->add_option("--method", o.method, "closed, recursive, or engine (full correction loop)")
      ->check(CLI::IsMember({"closed", "recursive", "engine"}))
      ->capture_default_str();
  rem->add_option("--indices", o.indices, "Pfaffian index list, comma separated");
  rem->add_option("--I", o.I, "First index list of a determinant analogue");
  rem->add_option("--J", o.J, "Second index list of a determinant analogue");
  rem->add_flag("--sergeev", o.sergeev, "Minimal Osp(1|2) relation (with --method engine)");

  auto* rel = app.add_subcommand("relation", "Quantum-corrected relation from a classical one");
  rel->add_option("--indices", o.indices, "Pfaffian index list (sp)");
  rel->add_option("--I", o.I, "First index list (o)");
  rel->add_option("--J", o.J, "Second index list (o)");
  rel->add_flag("--sergeev", o.sergeev, "Minimal relation of the osp family at n = 1");
  rel->add_option("--ordering", o.ordering, "Normal ordering: canonical or reversed")->capture_default_str();

  auto* dec = app.add_subcommand("decouple", "Decoupling relations from the minimal relation upward");
  dec->add_option("--up-to", o.up_to, "Highest generator index to decouple (odd)");

  app.add_subcommand("verify-appendix", "Check the embedded weight-16 Osp(1|2) relation");

  auto* st = app.add_subcommand("selftest", "Run the acceptance criteria and print a pass/fail table");
  st->add_option("--criteria", o.criteria, "Subset of criteria to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  if (circ->parsed()) o.exprs = {o.left, o.right};

  try {
    if (ope->parsed()) return cmd_ope(o);
    if (circ->parsed()) return cmd_circle(o);
    if (wk->parsed()) return cmd_wick(o);
    if (rz->parsed()) return cmd_realize(o);
    if (rem->parsed()) return cmd_remainder(o);
    if (rel->parsed()) return cmd_relation(o);
    if (dec->parsed()) return cmd_decouple(o);
    if (st->parsed()) return cmd_selftest(o);
    return cmd_verify_appendix(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
